#include "paretor/matroid.hpp"

#include <algorithm>
#include <string>

namespace paretor {

std::vector<coeff_t> EliminationBasis::reduce(std::vector<coeff_t> v) const {
    for (std::size_t idx = 0; idx < reduced_.size(); ++idx) {
        std::size_t p = pivot_of_[idx];
        if (v[p] == 0) continue;
        coeff_t scale = field_.div(v[p], reduced_[idx][p]);
        for (std::size_t k = 0; k < dim_; ++k)
            v[k] = field_.sub(v[k], field_.mul(scale, reduced_[idx][k]));
    }
    return v;
}

bool EliminationBasis::in_span(const std::vector<coeff_t>& v) const {
    std::vector<coeff_t> r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](coeff_t c) { return c == 0; });
}

bool EliminationBasis::try_insert(std::vector<coeff_t> v) {
    v = reduce(std::move(v));
    std::size_t pivot = dim_;
    for (std::size_t k = 0; k < dim_; ++k)
        if (v[k] != 0) {
            pivot = k;
            break;
        }
    if (pivot == dim_) return false;
    pivot_of_.push_back(pivot);
    reduced_.push_back(std::move(v));
    return true;
}

std::int32_t Filtration::grade(index_t id) const {
    auto it = chi.find(id);
    if (it == chi.end()) throw UnknownElement("no filtration grade for " + std::to_string(id));
    return it->second;
}

LinearMatroid::LinearMatroid(PrimeField field, std::vector<index_t> ground,
                             std::unordered_map<index_t, std::vector<coeff_t>> vectors)
    : field_(field), ground_(std::move(ground)), vectors_(std::move(vectors)) {
    for (std::uint32_t i = 0; i < ground_.size(); ++i) {
        auto it = vectors_.find(ground_[i]);
        if (it == vectors_.end())
            throw UnknownElement("no vector for ground element " + std::to_string(ground_[i]));
        if (i == 0) ambient_dim_ = it->second.size();
        if (it->second.size() != ambient_dim_)
            throw UnknownElement("inconsistent vector dimensions");
        position_.emplace(ground_[i], i);
    }
    EliminationBasis eb(field_, ambient_dim_);
    for (index_t id : ground_) eb.try_insert(vectors_.at(id));
    rank_ = eb.rank();
}

LinearMatroid LinearMatroid::uniform(std::size_t r, std::size_t n, PrimeField field) {
    std::vector<index_t> ground(n);
    for (std::size_t i = 0; i < n; ++i) ground[i] = static_cast<index_t>(i);
    std::unordered_map<index_t, std::vector<coeff_t>> vecs;

    if (r == 0) {
        for (index_t id : ground) vecs[id] = std::vector<coeff_t>(1, 0);
    } else if (r >= n) {
        // free matroid: standard unit columns
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<coeff_t> v(n, 0);
            v[i] = 1;
            vecs[static_cast<index_t>(i)] = v;
        }
    } else if (r == 1) {
        for (index_t id : ground) vecs[id] = std::vector<coeff_t>(1, 1);
    } else if (r == n - 1) {
        // e_1, ..., e_{n-1}, e_1 + ... + e_{n-1}: any n-1 are independent
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::vector<coeff_t> v(r, 0);
            v[i] = 1;
            vecs[static_cast<index_t>(i)] = v;
        }
        vecs[static_cast<index_t>(n - 1)] = std::vector<coeff_t>(r, 1);
    } else {
        // Vandermonde columns (1, t, ..., t^{r-1}) need n distinct t's.
        if (field.modulus() < n)
            throw TooLarge("uniform matroid needs p >= n for Vandermonde columns");
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<coeff_t> v(r);
            coeff_t t = static_cast<coeff_t>(i);
            coeff_t acc = 1;
            for (std::size_t k = 0; k < r; ++k) {
                v[k] = acc;
                acc = field.mul(acc, t);
            }
            vecs[static_cast<index_t>(i)] = v;
        }
    }
    return LinearMatroid(field, std::move(ground), std::move(vecs));
}

const std::vector<coeff_t>& LinearMatroid::vector_of(index_t id) const {
    auto it = vectors_.find(id);
    if (it == vectors_.end()) throw UnknownElement("unknown element " + std::to_string(id));
    return it->second;
}

std::uint32_t LinearMatroid::ground_position(index_t id) const {
    auto it = position_.find(id);
    if (it == position_.end()) throw UnknownElement("unknown element " + std::to_string(id));
    return it->second;
}

void LinearMatroid::require_subset(const std::vector<index_t>& s) const {
    for (index_t id : s)
        if (!position_.count(id)) throw UnknownElement("unknown element " + std::to_string(id));
}

std::size_t LinearMatroid::rank_of(const std::vector<index_t>& s) const {
    require_subset(s);
    EliminationBasis eb(field_, ambient_dim_);
    for (index_t id : s) eb.try_insert(vectors_.at(id));
    return eb.rank();
}

bool LinearMatroid::is_independent(const std::vector<index_t>& s) const {
    require_subset(s);
    EliminationBasis eb(field_, ambient_dim_);
    for (index_t id : s)
        if (!eb.try_insert(vectors_.at(id))) return false;
    return true;
}

std::vector<index_t> LinearMatroid::closure(const std::vector<index_t>& s) const {
    require_subset(s);
    EliminationBasis eb(field_, ambient_dim_);
    for (index_t id : s) eb.try_insert(vectors_.at(id));
    std::vector<index_t> out;
    for (index_t id : ground_)
        if (eb.in_span(vectors_.at(id))) out.push_back(id);
    return out;
}

bool LinearMatroid::minor_independent(const std::vector<index_t>& i_set,
                                      const std::vector<index_t>& c_set) const {
    require_subset(i_set);
    require_subset(c_set);
    std::unordered_set<index_t> c(c_set.begin(), c_set.end());
    for (index_t id : i_set)
        if (c.count(id)) throw OverlapError("element " + std::to_string(id) + " in both I and C");
    // rk(I u C) - rk(C) == |I|
    EliminationBasis eb(field_, ambient_dim_);
    for (index_t id : c_set) eb.try_insert(vectors_.at(id));
    for (index_t id : i_set)
        if (!eb.try_insert(vectors_.at(id))) return false;
    return true;
}

std::vector<index_t> LinearMatroid::greedy_max_basis(
    const std::unordered_map<index_t, double>& weight) const {
    std::vector<index_t> order = ground_;
    std::stable_sort(order.begin(), order.end(), [&](index_t a, index_t b) {
        double wa = weight.count(a) ? weight.at(a) : 0.0;
        double wb = weight.count(b) ? weight.at(b) : 0.0;
        return wa > wb;
    });
    EliminationBasis eb(field_, ambient_dim_);
    std::vector<index_t> basis;
    for (index_t id : order)
        if (eb.try_insert(vectors_.at(id))) basis.push_back(id);
    std::sort(basis.begin(), basis.end(),
              [&](index_t a, index_t b) { return position_.at(a) < position_.at(b); });
    return basis;
}

std::vector<index_t> LinearMatroid::replacement_row(const std::vector<index_t>& basis,
                                                    index_t b) const {
    require_subset(basis);
    if (!std::count(basis.begin(), basis.end(), b)) throw NotABasis("b not in B");
    if (basis.size() != rank_ || !is_independent(basis)) throw NotABasis();

    // Express each ground vector in B-coordinates by tracked elimination;
    // B - b + e is a basis exactly when the b-coordinate of e is nonzero.
    std::size_t k = basis.size();
    std::vector<std::vector<coeff_t>> reduced;   // reduced basis vectors
    std::vector<std::vector<coeff_t>> coords;    // rows of B^-1 in reduced terms
    std::vector<std::size_t> pivots;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<coeff_t> v = vectors_.at(basis[j]);
        std::vector<coeff_t> c(k, 0);
        c[j] = 1;
        for (std::size_t idx = 0; idx < reduced.size(); ++idx) {
            std::size_t p = pivots[idx];
            if (v[p] == 0) continue;
            coeff_t scale = field_.div(v[p], reduced[idx][p]);
            for (std::size_t t = 0; t < ambient_dim_; ++t)
                v[t] = field_.sub(v[t], field_.mul(scale, reduced[idx][t]));
            for (std::size_t t = 0; t < k; ++t)
                c[t] = field_.sub(c[t], field_.mul(scale, coords[idx][t]));
        }
        std::size_t p = ambient_dim_;
        for (std::size_t t = 0; t < ambient_dim_; ++t)
            if (v[t] != 0) {
                p = t;
                break;
            }
        if (p == ambient_dim_) throw NotABasis();  // dependent set
        pivots.push_back(p);
        reduced.push_back(std::move(v));
        coords.push_back(std::move(c));
    }

    std::size_t b_index = static_cast<std::size_t>(
        std::find(basis.begin(), basis.end(), b) - basis.begin());
    std::vector<index_t> out;
    for (index_t e : ground_) {
        // coordinates of phi(e) over B: reduce and accumulate
        std::vector<coeff_t> v = vectors_.at(e);
        std::vector<coeff_t> c(k, 0);
        for (std::size_t idx = 0; idx < reduced.size(); ++idx) {
            std::size_t p = pivots[idx];
            if (v[p] == 0) continue;
            coeff_t scale = field_.div(v[p], reduced[idx][p]);
            for (std::size_t t = 0; t < ambient_dim_; ++t)
                v[t] = field_.sub(v[t], field_.mul(scale, reduced[idx][t]));
            for (std::size_t t = 0; t < k; ++t)
                c[t] = field_.add(c[t], field_.mul(scale, coords[idx][t]));
        }
        if (c[b_index] != 0) out.push_back(e);
    }
    return out;
}

void LinearMatroid::validate_filtration(const Filtration& f) const {
    for (index_t id : ground_) {
        std::int32_t v = f.grade(id);
        if (v < 1 || v > f.levels)
            throw NotAFiltration("chi value out of range for element " + std::to_string(id));
    }
    for (std::int32_t k = 1; k <= f.levels; ++k) {
        std::vector<index_t> fk = level_set(f, k);
        std::vector<index_t> cl = closure(fk);
        if (cl.size() != fk.size()) throw NotAFiltration("level " + std::to_string(k) + " is not a flat");
    }
}

std::vector<index_t> LinearMatroid::level_set(const Filtration& f, std::int32_t k) const {
    std::vector<index_t> out;
    for (index_t id : ground_)
        if (f.grade(id) <= k) out.push_back(id);
    return out;
}

bool LinearMatroid::is_minimal_basis(const std::vector<index_t>& basis, const Filtration& f) const {
    if (basis.size() != rank_ || !is_independent(basis)) throw NotABasis();
    std::unordered_map<index_t, double> w;
    for (index_t id : ground_) w[id] = -static_cast<double>(f.grade(id));
    std::vector<index_t> best = greedy_max_basis(w);
    std::int64_t best_w = 0, cand_w = 0;
    for (index_t id : best) best_w += f.grade(id);
    for (index_t id : basis) cand_w += f.grade(id);
    return cand_w == best_w;
}

bool LinearMatroid::is_minimal_basis_via_exchange(const std::vector<index_t>& basis,
                                                  const Filtration& f) const {
    if (basis.size() != rank_ || !is_independent(basis)) throw NotABasis();
    std::unordered_map<index_t, double> w;
    for (index_t id : ground_) w[id] = -static_cast<double>(f.grade(id));
    std::vector<index_t> b0 = greedy_max_basis(w);

    // Lemma: with B chi-minimal, F is chi-minimal iff R_B[B, F] is
    // chi-upper triangular.
    for (index_t b : b0) {
        std::vector<index_t> row = replacement_row(b0, b);
        std::unordered_set<index_t> row_set(row.begin(), row.end());
        for (index_t e : basis)
            if (row_set.count(e) && f.grade(b) > f.grade(e)) return false;
    }
    return true;
}

bool LinearMatroid::check_modular_pair(const Filtration& f, const Filtration& g) const {
    validate_filtration(f);
    validate_filtration(g);
    for (std::int32_t i = 1; i <= f.levels; ++i) {
        std::vector<index_t> fi = level_set(f, i);
        std::size_t rk_fi = rank_of(fi);
        for (std::int32_t j = 1; j <= g.levels; ++j) {
            std::vector<index_t> inter, uni = fi;
            for (index_t id : ground_) {
                bool in_f = f.grade(id) <= i, in_g = g.grade(id) <= j;
                if (in_f && in_g) inter.push_back(id);
                if (!in_f && in_g) uni.push_back(id);
            }
            std::size_t rk_gj = rank_of(level_set(g, j));
            if (rank_of(inter) + rank_of(uni) != rk_fi + rk_gj) return false;
        }
    }
    return true;
}

std::vector<index_t> LinearMatroid::doubly_minimal_basis(const Filtration& f,
                                                         const Filtration& g) const {
    if (!check_modular_pair(f, g)) throw NotModular();

    // Greedy in lexicographic (chi_F, chi_G, ground order): level by
    // level this builds a chi_G-minimal basis of each minor F_i/F_{i-1}
    // on top of the accumulated basis of F_{i-1}.
    std::vector<index_t> order = ground_;
    std::sort(order.begin(), order.end(), [&](index_t a, index_t b) {
        std::int32_t fa = f.grade(a), fb = f.grade(b);
        if (fa != fb) return fa < fb;
        std::int32_t ga = g.grade(a), gb = g.grade(b);
        if (ga != gb) return ga < gb;
        return position_.at(a) < position_.at(b);
    });
    EliminationBasis eb(field_, ambient_dim_);
    std::vector<index_t> basis;
    for (index_t id : order)
        if (eb.try_insert(vectors_.at(id))) basis.push_back(id);
    std::sort(basis.begin(), basis.end(),
              [&](index_t a, index_t b) { return position_.at(a) < position_.at(b); });
    return basis;
}

Filtration make_filtration(const LinearMatroid& m,
                           const std::unordered_map<index_t, std::int32_t>& chi) {
    Filtration f;
    f.chi = chi;
    std::int32_t max_level = 0;
    for (index_t id : m.ground()) {
        auto it = chi.find(id);
        if (it == chi.end())
            throw NotAFiltration("chi missing for element " + std::to_string(id));
        if (it->second < 1) throw NotAFiltration("chi values must be >= 1 (F_0 is empty)");
        max_level = std::max(max_level, it->second);
    }
    f.levels = max_level == 0 ? 1 : max_level;
    for (std::int32_t k = 1; k <= f.levels; ++k) {
        std::vector<index_t> fk;
        for (index_t id : m.ground())
            if (f.grade(id) <= k) fk.push_back(id);
        if (m.closure(fk).size() != fk.size())
            throw NotAFiltration("level " + std::to_string(k) + " is not a flat");
    }
    return f;
}

}  // namespace paretor
