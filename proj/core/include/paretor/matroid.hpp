#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "paretor/errors.hpp"
#include "paretor/field.hpp"
#include "paretor/types.hpp"

namespace paretor {

/*
 * Incremental Gaussian elimination over dense column vectors.  Each
 * accepted vector is stored in reduced form together with its pivot
 * row, so membership and independence queries never revisit earlier
 * pivots.  This is the only representation of a matroid the library
 * keeps; no independence system is ever stored extensionally.
 */
class EliminationBasis {
public:
    EliminationBasis(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {}

    std::size_t rank() const { return reduced_.size(); }
    std::size_t dim() const { return dim_; }

    // Reduces v against the stored pivots; the result is zero iff v
    // lies in the current span.
    std::vector<coeff_t> reduce(std::vector<coeff_t> v) const;

    bool in_span(const std::vector<coeff_t>& v) const;

    // Inserts v if independent of the current span.  Returns true on
    // insertion.
    bool try_insert(std::vector<coeff_t> v);

private:
    PrimeField field_;
    std::size_t dim_;
    std::vector<std::vector<coeff_t>> reduced_;
    std::vector<std::size_t> pivot_of_;  // pivot row per stored vector
};

/*
 * A filtration of a matroid by nested flats, represented through its
 * characteristic function chi: E -> {1, ..., L} with F_k = chi^{-1}{1..k}.
 * F_0 is empty by convention and F_L is the whole ground set.
 */
struct Filtration {
    std::unordered_map<index_t, std::int32_t> chi;
    std::int32_t levels = 0;  // L

    std::int32_t grade(index_t id) const;
};

class LinearMatroid {
public:
    // vectors: id -> column over the field, all of equal length.
    LinearMatroid(PrimeField field, std::vector<index_t> ground,
                  std::unordered_map<index_t, std::vector<coeff_t>> vectors);

    // Uniform matroid U_{r,n} on ids 0..n-1 via generic-position
    // columns (Vandermonde for p >= n, plus the standard special cases
    // that work over every field).
    static LinearMatroid uniform(std::size_t r, std::size_t n, PrimeField field);

    const PrimeField& field() const { return field_; }
    const std::vector<index_t>& ground() const { return ground_; }
    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return rank_; }
    const std::vector<coeff_t>& vector_of(index_t id) const;
    std::uint32_t ground_position(index_t id) const;

    std::size_t rank_of(const std::vector<index_t>& s) const;

    bool is_independent(const std::vector<index_t>& s) const;

    std::vector<index_t> closure(const std::vector<index_t>& s) const;

    // Independence of I in the contraction M/C; I and C must be disjoint.
    bool minor_independent(const std::vector<index_t>& i_set, const std::vector<index_t>& c_set) const;

    // Greedy basis of maximal total weight (Rado/Edmonds).  Ties break
    // by ground order, so the result is deterministic.
    std::vector<index_t> greedy_max_basis(const std::unordered_map<index_t, double>& weight) const;

    // Row b of the basis-exchange matrix R_B: all e with B - b + e a basis.
    std::vector<index_t> replacement_row(const std::vector<index_t>& basis, index_t b) const;

    bool is_minimal_basis(const std::vector<index_t>& basis, const Filtration& f) const;

    // Alternate checker: F is chi-minimal iff R_B[B, F] is chi-upper
    // triangular for a known chi-minimal B.  Kept separate so the two
    // routes can cross-validate each other.
    bool is_minimal_basis_via_exchange(const std::vector<index_t>& basis, const Filtration& f) const;

    bool check_modular_pair(const Filtration& f, const Filtration& g) const;

    // Union over i of a chi_G-minimal basis of F_i/F_{i-1}; requires
    // (F, G) modular.  The result is minimal for both weight functions.
    std::vector<index_t> doubly_minimal_basis(const Filtration& f, const Filtration& g) const;

private:
    void require_subset(const std::vector<index_t>& s) const;
    void validate_filtration(const Filtration& f) const;
    std::vector<index_t> level_set(const Filtration& f, std::int32_t k) const;

    PrimeField field_;
    std::vector<index_t> ground_;
    std::unordered_map<index_t, std::vector<coeff_t>> vectors_;
    std::unordered_map<index_t, std::uint32_t> position_;
    std::size_t ambient_dim_ = 0;
    std::size_t rank_ = 0;
};

// Builds a filtration from its characteristic function and verifies
// that every level is a flat of m.
Filtration make_filtration(const LinearMatroid& m,
                           const std::unordered_map<index_t, std::int32_t>& chi);

}  // namespace paretor
