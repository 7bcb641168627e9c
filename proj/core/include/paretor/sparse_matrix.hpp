#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "paretor/errors.hpp"
#include "paretor/field.hpp"
#include "paretor/types.hpp"

namespace paretor {

struct Entry {
    index_t row;
    coeff_t value;
};

/*
 * An ordered list of ids together with an integer grade per id.  The
 * listed order must refine the grade: earlier elements never carry a
 * strictly larger grade.  This is the chi_F-linear order every
 * reduction runs over.
 */
class GradedOrder {
public:
    GradedOrder() = default;
    GradedOrder(std::vector<index_t> elements, std::unordered_map<index_t, std::int32_t> grade);

    // All elements at grade zero.
    static GradedOrder ungraded(std::vector<index_t> elements);

    std::size_t size() const { return elements_.size(); }
    const std::vector<index_t>& elements() const { return elements_; }

    bool contains(index_t id) const { return position_.count(id) > 0; }

    std::uint32_t position(index_t id) const;
    std::int32_t grade(index_t id) const;

    const std::unordered_map<index_t, std::int32_t>& grades() const { return grade_; }

private:
    std::vector<index_t> elements_;
    std::unordered_map<index_t, std::int32_t> grade_;
    std::unordered_map<index_t, std::uint32_t> position_;
};

/*
 * Column-major sparse matrix over a prime field with ordered row and
 * column id sets.  Stored coefficients are always nonzero; the entries
 * of a column are sorted by row position.  Instances are immutable
 * after construction.
 */
class SparseMatrix {
public:
    SparseMatrix(PrimeField field, std::vector<index_t> row_ids, std::vector<index_t> col_ids);

    static SparseMatrix identity(PrimeField field, const std::vector<index_t>& ids);

    // entries = (row id, col id, integer coefficient); zeros dropped,
    // duplicate (row, col) positions are summed.
    static SparseMatrix from_triplets(PrimeField field, std::vector<index_t> row_ids,
                                      std::vector<index_t> col_ids,
                                      const std::vector<std::tuple<index_t, index_t, std::int64_t>>& entries);

    const PrimeField& field() const { return field_; }
    const std::vector<index_t>& row_ids() const { return row_ids_; }
    const std::vector<index_t>& col_ids() const { return col_ids_; }
    std::size_t n_rows() const { return row_ids_.size(); }
    std::size_t n_cols() const { return col_ids_.size(); }

    bool has_row(index_t id) const { return row_pos_.count(id) > 0; }
    bool has_col(index_t id) const { return col_pos_.count(id) > 0; }
    std::uint32_t row_position(index_t id) const;
    std::uint32_t col_position(index_t id) const;

    // Column entries, sorted by row position.
    const std::vector<Entry>& column(index_t col_id) const { return cols_[col_position(col_id)]; }
    const std::vector<Entry>& column_at(std::uint32_t col_pos) const { return cols_[col_pos]; }

    coeff_t at(index_t row_id, index_t col_id) const;

    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    bool operator==(const SparseMatrix& other) const;

    // Replaces one column wholesale; used by the builders that assemble
    // matrices column by column.  Entries must be sorted by row
    // position with nonzero values.
    void set_column(std::uint32_t col_pos, std::vector<Entry> entries) { cols_[col_pos] = std::move(entries); }

private:
    PrimeField field_;
    std::vector<index_t> row_ids_, col_ids_;
    std::unordered_map<index_t, std::uint32_t> row_pos_, col_pos_;
    std::vector<std::vector<Entry>> cols_;
};

// Exact product; requires cols(A) == rows(B) as ordered id sequences.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

// Inverse of a matrix that is upper triangular with respect to `order`
// (every nonzero sits at position(row) <= position(col)) with nonzero
// diagonal.  The inverse is triangular in the same sense.
SparseMatrix invert_unitriangular(const SparseMatrix& a, const GradedOrder& order);

// True iff every nonzero A[s, t] satisfies f_row(s) <= f_col(t).
bool is_f_upper_triangular(const SparseMatrix& a,
                           const std::unordered_map<index_t, std::int32_t>& f_row,
                           const std::unordered_map<index_t, std::int32_t>& f_col);

// Matrix rank over the field by plain column elimination.  Oracle
// grade: the reduction paths never call this on anything large.
std::size_t rank(const SparseMatrix& a);

// Restriction to the given rows/columns, preserving A's internal order.
SparseMatrix submatrix(const SparseMatrix& a, const std::vector<index_t>& row_ids,
                       const std::vector<index_t>& col_ids);

}  // namespace paretor
