#pragma once

#include <cstdint>

#include "paretor/errors.hpp"
#include "paretor/types.hpp"

namespace paretor {

/*
 * Arithmetic context for Z/pZ with prime p.  Elements are canonical
 * residues in [0, p); every operation reduces eagerly.  p is capped at
 * 16 bits so products of residues fit comfortably in 64-bit
 * intermediates with room to spare.
 */
class PrimeField {
public:
    explicit PrimeField(coeff_t p);

    coeff_t modulus() const { return p_; }

    coeff_t normalize(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<coeff_t>(r);
    }

    coeff_t add(coeff_t a, coeff_t b) const {
        coeff_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    coeff_t sub(coeff_t a, coeff_t b) const { return a >= b ? a - b : a + p_ - b; }

    coeff_t neg(coeff_t a) const { return a == 0 ? 0 : p_ - a; }

    coeff_t mul(coeff_t a, coeff_t b) const {
        return static_cast<coeff_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }

    coeff_t inv(coeff_t a) const;

    coeff_t div(coeff_t a, coeff_t b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }
    bool operator!=(const PrimeField& other) const { return p_ != other.p_; }

private:
    coeff_t p_;
};

inline PrimeField make_field(coeff_t p) { return PrimeField(p); }

}  // namespace paretor
