#include "smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "errors.hpp"

namespace torelli::ext {

namespace {

i64 abs64(i64 a) { return a < 0 ? checked_neg(a) : a; }

// quotient q minimizing |a - q*b| (balanced division keeps remainders small)
i64 round_div(i64 a, i64 b) {
    i64 q = a / b;
    i64 best = q;
    i64 best_r = abs64(checked_sub(a, checked_mul(q, b)));
    for (i64 cand : {q - 1, q + 1}) {
        const i64 r = abs64(checked_sub(a, checked_mul(cand, b)));
        if (r < best_r) {
            best = cand;
            best_r = r;
        }
    }
    return best;
}

struct Eliminator {
    IntRows m;
    int rows, cols;
    IntRows* V = nullptr; // optional cols x cols column transform

    void row_axpy(int dst, int src, i64 q) { // row_dst -= q * row_src
        for (int j = 0; j < cols; ++j)
            m[size_t(dst)][size_t(j)] = checked_sub(m[size_t(dst)][size_t(j)], checked_mul(q, m[size_t(src)][size_t(j)]));
    }
    void col_axpy(int dst, int src, i64 q) { // col_dst -= q * col_src
        for (int i = 0; i < rows; ++i)
            m[size_t(i)][size_t(dst)] = checked_sub(m[size_t(i)][size_t(dst)], checked_mul(q, m[size_t(i)][size_t(src)]));
        if (V)
            for (auto& vr : *V) vr[size_t(dst)] = checked_sub(vr[size_t(dst)], checked_mul(q, vr[size_t(src)]));
    }
    void col_swap(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(m[size_t(i)][size_t(a)], m[size_t(i)][size_t(b)]);
        if (V)
            for (auto& vr : *V) std::swap(vr[size_t(a)], vr[size_t(b)]);
    }
    void col_negate(int c) {
        for (int i = 0; i < rows; ++i) m[size_t(i)][size_t(c)] = checked_neg(m[size_t(i)][size_t(c)]);
        if (V)
            for (auto& vr : *V) vr[size_t(c)] = checked_neg(vr[size_t(c)]);
    }

    SmithResult run() {
        SmithResult out;
        const int steps = std::min(rows, cols);
        for (int t = 0; t < steps; ++t) {
            if (!select_pivot(t)) break;
            while (true) {
                clear_column(t);
                if (!column_clean(t)) continue;
                clear_row(t);
                if (!column_clean(t) || !row_clean(t)) continue;
                int bi, bj;
                if (!find_nondivisible(t, bi, bj)) break;
                // fold the offending row into row t; the next pass shrinks the pivot
                row_axpy(t, bi, -1);
            }
            if (m[size_t(t)][size_t(t)] < 0) col_negate(t);
            out.divisors.push_back(m[size_t(t)][size_t(t)]);
        }
        out.rank = static_cast<int>(out.divisors.size());
        return out;
    }

    bool select_pivot(int t) {
        int bi = -1, bj = -1;
        i64 best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const i64 v = abs64(m[size_t(i)][size_t(j)]);
                if (v != 0 && (bi < 0 || v < best)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) return false;
        std::swap(m[size_t(t)], m[size_t(bi)]);
        col_swap(t, bj);
        return true;
    }

    void clear_column(int t) {
        for (int i = t + 1; i < rows; ++i) {
            while (m[size_t(i)][size_t(t)] != 0) {
                const i64 q = round_div(m[size_t(i)][size_t(t)], m[size_t(t)][size_t(t)]);
                row_axpy(i, t, q);
                if (m[size_t(i)][size_t(t)] != 0) std::swap(m[size_t(t)], m[size_t(i)]);
            }
        }
    }

    void clear_row(int t) {
        for (int j = t + 1; j < cols; ++j) {
            while (m[size_t(t)][size_t(j)] != 0) {
                const i64 q = round_div(m[size_t(t)][size_t(j)], m[size_t(t)][size_t(t)]);
                col_axpy(j, t, q);
                if (m[size_t(t)][size_t(j)] != 0) col_swap(t, j);
            }
        }
    }

    bool column_clean(int t) const {
        for (int i = t + 1; i < rows; ++i)
            if (m[size_t(i)][size_t(t)] != 0) return false;
        return true;
    }
    bool row_clean(int t) const {
        for (int j = t + 1; j < cols; ++j)
            if (m[size_t(t)][size_t(j)] != 0) return false;
        return true;
    }

    bool find_nondivisible(int t, int& bi, int& bj) const {
        const i64 p = m[size_t(t)][size_t(t)];
        for (int i = t + 1; i < rows; ++i)
            for (int j = t + 1; j < cols; ++j)
                if (m[size_t(i)][size_t(j)] % p != 0) {
                    bi = i;
                    bj = j;
                    return true;
                }
        return false;
    }
};

} // namespace

SmithResult smith_normal_form(IntRows m) {
    if (m.empty()) return {};
    Eliminator e{std::move(m), 0, 0, nullptr};
    e.rows = static_cast<int>(e.m.size());
    e.cols = static_cast<int>(e.m[0].size());
    return e.run();
}

SmithWithTransform smith_with_col_transform(IntRows m, int cols) {
    SmithWithTransform out;
    out.col_transform.assign(size_t(cols), IntRow(size_t(cols), 0));
    for (int i = 0; i < cols; ++i) out.col_transform[size_t(i)][size_t(i)] = 1;
    if (m.empty()) return out;
    Eliminator e{std::move(m), 0, cols, &out.col_transform};
    e.rows = static_cast<int>(e.m.size());
    out.snf = e.run();
    return out;
}

LatticeVerdict verdict_from_snf(const SmithResult& s) {
    LatticeVerdict v;
    v.rank = s.rank;
    v.elementary_divisors = s.divisors;
    v.saturated = std::all_of(s.divisors.begin(), s.divisors.end(), [](i64 d) { return d == 1; });
    return v;
}

bool LatticeAccumulator::add(IntRow v) {
    if (static_cast<int>(v.size()) != cols_) throw ParameterError("lattice row has wrong ambient dimension");
    bool grew = false;
    while (true) {
        int lead = -1;
        for (int j = 0; j < cols_; ++j)
            if (v[size_t(j)] != 0) {
                lead = j;
                break;
            }
        if (lead < 0) return grew;

        // locate the row owning this pivot column, if any
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        if (pos == pivots_.size() || pivots_[pos] != lead) {
            if (v[size_t(lead)] < 0)
                for (auto& c : v) c = checked_neg(c);
            rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
            pivots_.insert(pivots_.begin() + static_cast<long>(pos), lead);
            return true;
        }

        IntRow& row = rows_[pos];
        const i64 p = row[size_t(lead)];
        const i64 c = v[size_t(lead)];
        if (c % p == 0) {
            const i64 q = c / p;
            for (int j = lead; j < cols_; ++j)
                v[size_t(j)] = checked_sub(v[size_t(j)], checked_mul(q, row[size_t(j)]));
        } else {
            // extended gcd combine: the pivot shrinks to gcd(p, c)
            i64 old_r = p, r = c, old_s = 1, s = 0, old_t = 0, tt = 1;
            while (r != 0) {
                const i64 q = old_r / r;
                i64 tmp = checked_sub(old_r, checked_mul(q, r)); old_r = r; r = tmp;
                tmp = checked_sub(old_s, checked_mul(q, s)); old_s = s; s = tmp;
                tmp = checked_sub(old_t, checked_mul(q, tt)); old_t = tt; tt = tmp;
            }
            i64 g = old_r, u1 = old_s, u2 = old_t; // u1*p + u2*c = g
            if (g < 0) { g = checked_neg(g); u1 = checked_neg(u1); u2 = checked_neg(u2); }
            IntRow combined(size_t(cols_), 0);
            for (int j = 0; j < cols_; ++j)
                combined[size_t(j)] = checked_add(checked_mul(u1, row[size_t(j)]), checked_mul(u2, v[size_t(j)]));
            IntRow remainder(size_t(cols_), 0);
            const i64 pg = p / g, cg = c / g;
            for (int j = 0; j < cols_; ++j)
                remainder[size_t(j)] = checked_sub(checked_mul(pg, v[size_t(j)]), checked_mul(cg, row[size_t(j)]));
            row = std::move(combined);
            v = std::move(remainder);
            grew = true;
        }
    }
}

bool LatticeAccumulator::contains(IntRow v) const {
    if (static_cast<int>(v.size()) != cols_) throw ParameterError("lattice row has wrong ambient dimension");
    while (true) {
        int lead = -1;
        for (int j = 0; j < cols_; ++j)
            if (v[size_t(j)] != 0) {
                lead = j;
                break;
            }
        if (lead < 0) return true;
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        if (pos == pivots_.size() || pivots_[pos] != lead) return false;
        const IntRow& row = rows_[pos];
        const i64 p = row[size_t(lead)];
        if (v[size_t(lead)] % p != 0) return false;
        const i64 q = v[size_t(lead)] / p;
        for (int j = lead; j < cols_; ++j)
            v[size_t(j)] = checked_sub(v[size_t(j)], checked_mul(q, row[size_t(j)]));
    }
}

SmithResult LatticeAccumulator::snf() const { return smith_normal_form(rows_); }

LatticeVerdict lattice_saturation_rows(const IntRows& rows, int ambient_dim) {
    if (rows.empty()) throw ParameterError("lattice_saturation requires a nonempty vector list");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != ambient_dim)
            throw ParameterError("lattice_saturation row does not match the ambient dimension");
    return verdict_from_snf(smith_normal_form(rows));
}

LatticeVerdict lattice_saturation(const std::vector<Wedge3>& vectors, int ambient_dim) {
    if (vectors.empty()) throw ParameterError("lattice_saturation requires a nonempty vector list");
    IntRows rows;
    rows.reserve(vectors.size());
    for (const auto& w : vectors) {
        if (triple_count(w.dim()) != ambient_dim)
            throw ParameterError("ambient dimension does not match C(2g,3) for the given vectors");
        rows.push_back(w.dense());
    }
    return lattice_saturation_rows(rows, ambient_dim);
}

QuotientContext QuotientContext::for_genus(int genus) {
    if (genus < 3) throw ParameterError("quotient context requires g >= 3");
    QuotientContext q;
    q.genus_ = genus;
    q.ambient_ = triple_count(2 * genus);
    IntRows omega_rows;
    for (int i = 0; i < 2 * genus; ++i)
        omega_rows.push_back(wedge_omega(HClass::basis(genus, i)).dense());
    auto st = smith_with_col_transform(std::move(omega_rows), q.ambient_);
    q.omega_rank_ = st.snf.rank;
    if (q.omega_rank_ != 2 * genus ||
        !std::all_of(st.snf.divisors.begin(), st.snf.divisors.end(), [](i64 d) { return d == 1; }))
        throw ParameterError("omega image is not a saturated rank-2g sublattice");
    q.col_transform_ = std::move(st.col_transform);
    return q;
}

IntRow QuotientContext::project(const IntRow& x) const {
    if (static_cast<int>(x.size()) != ambient_) throw ParameterError("projection input has wrong dimension");
    IntRow out(size_t(ambient_ - omega_rank_), 0);
    for (int j = omega_rank_; j < ambient_; ++j) {
        i64 acc = 0;
        for (int i = 0; i < ambient_; ++i)
            if (x[size_t(i)] != 0) checked_addmul(acc, x[size_t(i)], col_transform_[size_t(i)][size_t(j)]);
        out[size_t(j - omega_rank_)] = acc;
    }
    return out;
}

bool QuotientContext::in_omega_image(const Wedge3& w) const {
    const IntRow p = project(w.dense());
    if (!std::all_of(p.begin(), p.end(), [](i64 c) { return c == 0; })) return false;
    // zero in quotient coordinates means membership in the omega sublattice
    // (the omega rows are saturated, so torsion cannot hide anything)
    return true;
}

LatticeVerdict quotient_mod_H(const std::vector<Wedge3>& vectors, int genus) {
    const QuotientContext q = QuotientContext::for_genus(genus);
    if (vectors.empty()) return LatticeVerdict{0, {}, true};
    IntRows projected;
    projected.reserve(vectors.size());
    IntRows stacked;
    for (const auto& w : vectors) {
        if (w.genus() != genus) throw ParameterError("quotient vectors have mismatched genus");
        projected.push_back(q.project(w.dense()));
        stacked.push_back(w.dense());
    }
    const LatticeVerdict v = verdict_from_snf(smith_normal_form(projected));
    // cross-check the rank against the basis-free route rank(V + W) - rank(W)
    for (int i = 0; i < 2 * genus; ++i)
        stacked.push_back(wedge_omega(HClass::basis(genus, i)).dense());
    const int stacked_rank = smith_normal_form(stacked).rank;
    if (stacked_rank - q.omega_rank() != v.rank)
        throw InternalError("quotient rank mismatch between projection and rank-difference routes");
    return v;
}

} // namespace torelli::ext
