#include "paretor/sparse_matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace paretor {

GradedOrder::GradedOrder(std::vector<index_t> elements,
                         std::unordered_map<index_t, std::int32_t> grade)
    : elements_(std::move(elements)), grade_(std::move(grade)) {
    position_.reserve(elements_.size());
    std::int32_t prev = 0;
    for (std::uint32_t i = 0; i < elements_.size(); ++i) {
        index_t id = elements_[i];
        auto it = grade_.find(id);
        if (it == grade_.end()) throw MissingGrade("no grade for element " + std::to_string(id));
        if (!position_.emplace(id, i).second)
            throw MissingGrade("duplicate element " + std::to_string(id));
        if (i > 0 && it->second < prev)
            throw MissingGrade("order does not refine grades at element " + std::to_string(id));
        prev = it->second;
    }
}

GradedOrder GradedOrder::ungraded(std::vector<index_t> elements) {
    std::unordered_map<index_t, std::int32_t> grade;
    for (index_t id : elements) grade[id] = 0;
    return GradedOrder(std::move(elements), std::move(grade));
}

std::uint32_t GradedOrder::position(index_t id) const {
    auto it = position_.find(id);
    if (it == position_.end()) throw UnknownId("unknown element " + std::to_string(id));
    return it->second;
}

std::int32_t GradedOrder::grade(index_t id) const {
    auto it = grade_.find(id);
    if (it == grade_.end()) throw MissingGrade("no grade for element " + std::to_string(id));
    return it->second;
}

SparseMatrix::SparseMatrix(PrimeField field, std::vector<index_t> row_ids,
                           std::vector<index_t> col_ids)
    : field_(field), row_ids_(std::move(row_ids)), col_ids_(std::move(col_ids)) {
    row_pos_.reserve(row_ids_.size());
    col_pos_.reserve(col_ids_.size());
    for (std::uint32_t i = 0; i < row_ids_.size(); ++i)
        if (!row_pos_.emplace(row_ids_[i], i).second)
            throw UnknownId("duplicate row id " + std::to_string(row_ids_[i]));
    for (std::uint32_t j = 0; j < col_ids_.size(); ++j)
        if (!col_pos_.emplace(col_ids_[j], j).second)
            throw UnknownId("duplicate col id " + std::to_string(col_ids_[j]));
    cols_.resize(col_ids_.size());
}

SparseMatrix SparseMatrix::identity(PrimeField field, const std::vector<index_t>& ids) {
    SparseMatrix m(field, ids, ids);
    for (std::uint32_t j = 0; j < ids.size(); ++j) m.cols_[j] = {{j, 1}};
    return m;
}

SparseMatrix SparseMatrix::from_triplets(
    PrimeField field, std::vector<index_t> row_ids, std::vector<index_t> col_ids,
    const std::vector<std::tuple<index_t, index_t, std::int64_t>>& entries) {
    SparseMatrix m(field, std::move(row_ids), std::move(col_ids));
    std::vector<std::vector<Entry>> raw(m.n_cols());
    for (const auto& [r, c, v] : entries) {
        auto rit = m.row_pos_.find(r);
        if (rit == m.row_pos_.end()) throw UnknownId("unknown row id " + std::to_string(r));
        auto cit = m.col_pos_.find(c);
        if (cit == m.col_pos_.end()) throw UnknownId("unknown col id " + std::to_string(c));
        raw[cit->second].push_back({rit->second, field.normalize(v)});
    }
    for (std::uint32_t j = 0; j < m.n_cols(); ++j) {
        auto& col = raw[j];
        std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
        std::vector<Entry> merged;
        for (const Entry& e : col) {
            if (!merged.empty() && merged.back().row == e.row)
                merged.back().value = field.add(merged.back().value, e.value);
            else
                merged.push_back(e);
        }
        std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
        m.cols_[j] = std::move(merged);
    }
    return m;
}

std::uint32_t SparseMatrix::row_position(index_t id) const {
    auto it = row_pos_.find(id);
    if (it == row_pos_.end()) throw UnknownId("unknown row id " + std::to_string(id));
    return it->second;
}

std::uint32_t SparseMatrix::col_position(index_t id) const {
    auto it = col_pos_.find(id);
    if (it == col_pos_.end()) throw UnknownId("unknown col id " + std::to_string(id));
    return it->second;
}

coeff_t SparseMatrix::at(index_t row_id, index_t col_id) const {
    std::uint32_t r = row_position(row_id);
    const auto& col = cols_[col_position(col_id)];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const Entry& e, std::uint32_t p) { return e.row < p; });
    if (it != col.end() && it->row == r) return it->value;
    return 0;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& col : cols_) n += col.size();
    return n;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
    if (field_ != other.field_ || row_ids_ != other.row_ids_ || col_ids_ != other.col_ids_)
        return false;
    for (std::uint32_t j = 0; j < cols_.size(); ++j) {
        const auto& a = cols_[j];
        const auto& b = other.cols_[j];
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].row != b[k].row || a[k].value != b[k].value) return false;
    }
    return true;
}

namespace {

// Dense accumulator for one output column; `touched` tracks positions
// with possibly-nonzero values so clearing stays O(nnz).
struct ColumnAccumulator {
    explicit ColumnAccumulator(std::size_t n) : values(n, 0) {}

    std::vector<coeff_t> values;
    std::vector<std::uint32_t> touched;

    void axpy(const PrimeField& f, coeff_t scale, const std::vector<Entry>& col) {
        for (const Entry& e : col) {
            if (values[e.row] == 0 && scale != 0) touched.push_back(e.row);
            values[e.row] = f.add(values[e.row], f.mul(scale, e.value));
        }
    }

    std::vector<Entry> drain(const PrimeField&) {
        std::sort(touched.begin(), touched.end());
        std::vector<Entry> out;
        out.reserve(touched.size());
        for (std::uint32_t r : touched) {
            if (values[r] != 0) out.push_back({r, values[r]});
            values[r] = 0;
        }
        touched.clear();
        return out;
    }
};

}  // namespace

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.field() != b.field()) throw DimensionMismatch("field mismatch");
    if (a.col_ids() != b.row_ids())
        throw DimensionMismatch("cols(A) and rows(B) differ as ordered sets");

    SparseMatrix out(a.field(), a.row_ids(), b.col_ids());
    ColumnAccumulator acc(a.n_rows());
    for (std::uint32_t j = 0; j < b.n_cols(); ++j) {
        for (const Entry& e : b.column_at(j)) acc.axpy(a.field(), e.value, a.column_at(e.row));
        out.set_column(j, acc.drain(a.field()));
    }
    return out;
}

SparseMatrix invert_unitriangular(const SparseMatrix& a, const GradedOrder& order) {
    if (a.row_ids() != order.elements() || a.col_ids() != order.elements())
        throw DimensionMismatch("matrix rows/cols must equal the order's elements");
    const PrimeField& f = a.field();
    const std::size_t n = order.size();

    // Triangularity and diagonal scan.  Positions agree with the order
    // because row/col id sequences equal order.elements().
    std::vector<coeff_t> diag(n, 0);
    for (std::uint32_t j = 0; j < n; ++j) {
        for (const Entry& e : a.column_at(j)) {
            if (e.row > j) throw NotTriangular();
            if (e.row == j) diag[j] = e.value;
        }
        if (diag[j] == 0) throw SingularDiagonal();
    }

    // Back substitution, one inverse column at a time: solve A x = e_j
    // by sweeping positions from high to low.  Resolving x[k] pushes
    // -x[k] * A[above, k] into the residual, so the work is O(fill).
    SparseMatrix inv(f, a.row_ids(), a.col_ids());
    std::vector<coeff_t> b(n, 0);
    for (std::uint32_t j = 0; j < n; ++j) {
        b[j] = 1;
        std::vector<Entry> col;
        for (std::int64_t k = j; k >= 0; --k) {
            if (b[k] == 0) continue;
            coeff_t xk = f.div(b[k], diag[k]);
            b[k] = 0;
            col.push_back({static_cast<std::uint32_t>(k), xk});
            for (const Entry& e : a.column_at(static_cast<std::uint32_t>(k)))
                if (e.row < static_cast<std::uint32_t>(k))
                    b[e.row] = f.sub(b[e.row], f.mul(e.value, xk));
        }
        std::reverse(col.begin(), col.end());
        inv.set_column(j, std::move(col));
    }
    return inv;
}

bool is_f_upper_triangular(const SparseMatrix& a,
                           const std::unordered_map<index_t, std::int32_t>& f_row,
                           const std::unordered_map<index_t, std::int32_t>& f_col) {
    for (index_t r : a.row_ids())
        if (!f_row.count(r)) throw MissingGrade("row grade missing for " + std::to_string(r));
    for (index_t c : a.col_ids())
        if (!f_col.count(c)) throw MissingGrade("col grade missing for " + std::to_string(c));
    for (std::uint32_t j = 0; j < a.n_cols(); ++j) {
        std::int32_t fc = f_col.at(a.col_ids()[j]);
        for (const Entry& e : a.column_at(j))
            if (f_row.at(a.row_ids()[e.row]) > fc) return false;
    }
    return true;
}

std::size_t rank(const SparseMatrix& a) {
    const PrimeField& f = a.field();
    // Column elimination with pivot = lowest (max position) entry.
    std::unordered_map<std::uint32_t, std::vector<Entry>> pivots;  // pivot row -> reduced column
    std::size_t rk = 0;
    ColumnAccumulator acc(a.n_rows());
    for (std::uint32_t j = 0; j < a.n_cols(); ++j) {
        if (a.column_at(j).empty()) continue;
        acc.axpy(f, 1, a.column_at(j));
        std::vector<Entry> col = acc.drain(f);
        while (!col.empty()) {
            std::uint32_t low = col.back().row;
            auto it = pivots.find(low);
            if (it == pivots.end()) {
                pivots.emplace(low, std::move(col));
                ++rk;
                break;
            }
            coeff_t scale = f.neg(f.div(col.back().value, it->second.back().value));
            acc.axpy(f, 1, col);
            acc.axpy(f, scale, it->second);
            col = acc.drain(f);
        }
    }
    return rk;
}

SparseMatrix submatrix(const SparseMatrix& a, const std::vector<index_t>& row_ids,
                       const std::vector<index_t>& col_ids) {
    // Validate and order the requested ids by A's internal order.
    std::vector<std::uint32_t> rsel, csel;
    rsel.reserve(row_ids.size());
    for (index_t r : row_ids) rsel.push_back(a.row_position(r));
    std::sort(rsel.begin(), rsel.end());
    csel.reserve(col_ids.size());
    for (index_t c : col_ids) csel.push_back(a.col_position(c));
    std::sort(csel.begin(), csel.end());

    std::vector<index_t> new_rows, new_cols;
    new_rows.reserve(rsel.size());
    for (std::uint32_t p : rsel) new_rows.push_back(a.row_ids()[p]);
    new_cols.reserve(csel.size());
    for (std::uint32_t p : csel) new_cols.push_back(a.col_ids()[p]);

    std::vector<std::uint32_t> row_map(a.n_rows(), UINT32_MAX);
    for (std::uint32_t i = 0; i < rsel.size(); ++i) row_map[rsel[i]] = i;

    SparseMatrix out(a.field(), std::move(new_rows), std::move(new_cols));
    for (std::uint32_t j = 0; j < csel.size(); ++j) {
        std::vector<Entry> col;
        for (const Entry& e : a.column_at(csel[j]))
            if (row_map[e.row] != UINT32_MAX) col.push_back({row_map[e.row], e.value});
        out.set_column(j, std::move(col));
    }
    return out;
}

}  // namespace paretor
