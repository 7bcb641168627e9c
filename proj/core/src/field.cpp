#include "paretor/field.hpp"

namespace paretor {

namespace {

bool is_prime(coeff_t p) {
    if (p < 2) return false;
    for (coeff_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(coeff_t p) : p_(p) {
    if (p > 65521)  // largest 16-bit prime
        throw CompositeModulus("modulus too large for half-width storage");
    if (!is_prime(p)) throw CompositeModulus();
}

coeff_t PrimeField::inv(coeff_t a) const {
    if (a == 0) throw ZeroInverse();
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return normalize(t);
}

}  // namespace paretor
