#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "paretor/errors.hpp"
#include "paretor/field.hpp"
#include "paretor/sparse_matrix.hpp"
#include "paretor/types.hpp"

namespace paretor {

struct Cell {
    index_t id;
    std::int32_t dim;
    std::int32_t grade;
};

struct BoundaryEntry {
    std::int32_t dim;  // the n of A_n: row lives in E_{n-1}, col in E_n
    index_t row;
    index_t col;
    std::int64_t coeff;
};

/*
 * Graded cell complex with one boundary matrix per dimension.  Cells
 * are ordered per dimension by a chi_F-linear order (grade first), and
 * the two chain-complex invariants (dd = 0 and grade monotonicity of
 * faces) are checked at construction.  Immutable once built.
 */
class FilteredComplex {
public:
    static FilteredComplex from_boundaries(PrimeField field, std::vector<Cell> cells,
                                           const std::vector<BoundaryEntry>& boundary,
                                           std::vector<double> level_values = {});

    const PrimeField& field() const { return field_; }
    std::int32_t max_dim() const { return static_cast<std::int32_t>(orders_.size()) - 1; }

    const GradedOrder& cells(std::int32_t dim) const;
    // A_n with rows E_{n-1} and columns E_n; valid for 1 <= n <= max_dim.
    const SparseMatrix& boundary(std::int32_t n) const;

    std::size_t total_cells() const;
    std::int32_t dim_of(index_t cell) const;
    std::int32_t grade_of(index_t cell) const;

    // Real value attached to a filtration level (defaults to the level
    // index itself when no table was supplied).
    double level_value(std::int32_t level) const;
    const std::vector<double>& level_values() const { return level_values_; }

private:
    FilteredComplex(PrimeField field) : field_(field) {}

    PrimeField field_;
    std::vector<GradedOrder> orders_;
    std::vector<SparseMatrix> boundaries_;  // index n in 1..max_dim; [0] unused
    std::unordered_map<index_t, std::int32_t> dim_of_;
    std::vector<double> level_values_;
};

/*
 * Symmetric nonnegative distances with zero diagonal, stored as the
 * strict lower triangle.
 */
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n_points, std::vector<double> lower = {});

    static DistanceMatrix from_points(const std::vector<std::vector<double>>& points);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, double value);

private:
    std::size_t n_;
    std::vector<double> lower_;
};

// All simplices of dimension <= dim_max with diameter <= threshold.
// Grades are ranks into the sorted distinct diameters (vertices at 0).
FilteredComplex vietoris_rips(const DistanceMatrix& d, std::int32_t dim_max, double threshold,
                              PrimeField field = PrimeField(2));

/*
 * Streaming census of the lexicographic same-grade apparent-pair
 * matching: per dimension the number of cells |E_n|, the cells that
 * survive the coboundary-partner skip |X_n|, and the critical cells
 * |M_n|.  Nothing above the DFS stack is stored, so the census runs on
 * complexes far larger than what vietoris_rips materialises.
 */
struct RipsCounts {
    std::vector<std::size_t> e, x, m;  // indexed by dimension 0..dim_max
};
RipsCounts rips_apparent_counts(const DistanceMatrix& d, std::int32_t dim_max, double threshold);

/*
 * Rips complex with the top dimension compressed through the apparent
 * matching: top cells matched as coboundary partners are never stored
 * (their zero-length pairs are recorded instead), top cells matched as
 * faces of same-grade cofacets one dimension up are dropped, and the
 * boundaries of the surviving critical cells are corrected by
 * eliminating matched rows through their partner columns.  Barcodes in
 * dimensions < dim_max agree exactly with the uncompressed complex.
 */
struct CompressedRips {
    // built lazily by the caller via from_boundaries inputs
    FilteredComplex complex;
    // cells of E_{dim_max-1} whose class dies instantly against a
    // skipped partner; reported as zero-length bars and never paired
    std::vector<index_t> instant_kills;
    std::size_t dropped_top_cofaces = 0;  // |E_N| - |X_N|
    std::size_t dropped_top_faces = 0;    // |X_N| - |M_N|
};
CompressedRips vietoris_rips_compressed(const DistanceMatrix& d, std::int32_t dim_max,
                                        double threshold, PrimeField field = PrimeField(2));

// Chessboard complex C_{m,n}: non-attacking rook placements, ungraded.
FilteredComplex chessboard_complex(std::size_t m, std::size_t n, PrimeField field = PrimeField(2),
                                   std::size_t cell_cap = 2'000'000);

// Matching complex M_k: sets of pairwise disjoint edges of K_k, ungraded.
FilteredComplex matching_complex(std::size_t k, PrimeField field = PrimeField(2),
                                 std::size_t cell_cap = 2'000'000);

}  // namespace paretor
