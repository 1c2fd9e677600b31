#include "exterior.hpp"

#include <algorithm>

#include "errors.hpp"

namespace torelli::ext {

int triple_count(int dim) { return dim * (dim - 1) * (dim - 2) / 6; }

int triple_rank(const Triple& t) {
    const int p = t.idx[0], q = t.idx[1], r = t.idx[2];
    return p + q * (q - 1) / 2 + r * (r - 1) * (r - 2) / 6;
}

Triple triple_unrank(int rank, int dim) {
    for (int r = 2; r < dim; ++r) {
        const int below = r * (r - 1) * (r - 2) / 6;
        const int next = (r + 1) * r * (r - 1) / 6;
        if (rank >= next) continue;
        int rem = rank - below;
        for (int q = 1; q < r; ++q) {
            if (rem >= q * (q - 1) / 2 + q) continue;
            return Triple{{rem - q * (q - 1) / 2, q, r}};
        }
    }
    throw ParameterError("triple rank out of range");
}

void Wedge3::add_term(const Triple& t, i64 c) {
    if (c == 0) return;
    if (!(t.idx[0] < t.idx[1] && t.idx[1] < t.idx[2]))
        throw ParameterError("wedge monomial indices must be strictly increasing");
    if (t.idx[0] < 0 || t.idx[2] >= dim())
        throw ParameterError("wedge monomial index out of range for genus");
    auto it = coeffs_.find(t);
    if (it == coeffs_.end()) {
        coeffs_.emplace(t, c);
        return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs_.erase(it);
}

i64 Wedge3::coeff(const Triple& t) const {
    auto it = coeffs_.find(t);
    return it == coeffs_.end() ? 0 : it->second;
}

Wedge3 Wedge3::operator+(const Wedge3& o) const {
    if (genus_ != o.genus_) throw ParameterError("wedge vectors have mismatched genus");
    Wedge3 r = *this;
    for (const auto& [t, c] : o.coeffs_) r.add_term(t, c);
    return r;
}

Wedge3 Wedge3::operator-(const Wedge3& o) const { return *this + o * -1; }

Wedge3 Wedge3::operator*(i64 s) const {
    Wedge3 r(genus_);
    if (s == 0) return r;
    for (const auto& [t, c] : coeffs_) r.coeffs_.emplace(t, checked_mul(c, s));
    return r;
}

std::vector<i64> Wedge3::dense() const {
    std::vector<i64> row(static_cast<size_t>(triple_count(dim())), 0);
    for (const auto& [t, c] : coeffs_) row[static_cast<size_t>(triple_rank(t))] = c;
    return row;
}

Wedge3 Wedge3::from_dense(int genus, const std::vector<i64>& row) {
    Wedge3 w(genus);
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) w.add_term(triple_unrank(static_cast<int>(i), 2 * genus), row[i]);
    return w;
}

std::string basis_name(int index) {
    const int handle = index / 2 + 1;
    return (index % 2 == 0 ? "a" : "b") + std::to_string(handle);
}

std::string Wedge3::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : coeffs_) {
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        const i64 mag = c < 0 ? -c : c;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += basis_name(t.idx[0]) + "^" + basis_name(t.idx[1]) + "^" + basis_name(t.idx[2]);
    }
    return out;
}

Wedge3 wedge(const HClass& x, const HClass& y, const HClass& z) {
    if (x.coeffs.size() != y.coeffs.size() || y.coeffs.size() != z.coeffs.size())
        throw ParameterError("wedge arguments have mismatched genus");
    const int d = 2 * x.genus();
    Wedge3 w(x.genus());
    // coefficient on e_p^e_q^e_r is the 3x3 determinant of the (p,q,r) rows
    for (int p = 0; p < d; ++p) {
        if (x.coeffs[size_t(p)] == 0 && y.coeffs[size_t(p)] == 0 && z.coeffs[size_t(p)] == 0) continue;
        for (int q = p + 1; q < d; ++q) {
            if (x.coeffs[size_t(q)] == 0 && y.coeffs[size_t(q)] == 0 && z.coeffs[size_t(q)] == 0) continue;
            for (int r = q + 1; r < d; ++r) {
                const i64 xp = x.coeffs[size_t(p)], yp = y.coeffs[size_t(p)], zp = z.coeffs[size_t(p)];
                const i64 xq = x.coeffs[size_t(q)], yq = y.coeffs[size_t(q)], zq = z.coeffs[size_t(q)];
                const i64 xr = x.coeffs[size_t(r)], yr = y.coeffs[size_t(r)], zr = z.coeffs[size_t(r)];
                i64 det = 0;
                checked_addmul(det, xp, checked_sub(checked_mul(yq, zr), checked_mul(yr, zq)));
                checked_addmul(det, checked_neg(yp), checked_sub(checked_mul(xq, zr), checked_mul(xr, zq)));
                checked_addmul(det, zp, checked_sub(checked_mul(xq, yr), checked_mul(xr, yq)));
                if (det != 0) w.add_term(Triple{{p, q, r}}, det);
            }
        }
    }
    return w;
}

Wedge3 induced_cube_apply(const HEndo& f, const Wedge3& w) {
    const int g = w.genus();
    if (f.dim != 2 * g) throw ParameterError("endomorphism dimension does not match wedge genus");
    Wedge3 out(g);
    for (const auto& [t, c] : w.terms()) {
        HClass cols[3];
        for (int j = 0; j < 3; ++j) {
            cols[j] = HClass(g);
            for (int p = 0; p < f.dim; ++p) cols[j].coeffs[size_t(p)] = f.at(p, t.idx[size_t(j)]);
        }
        out = out + wedge(cols[0], cols[1], cols[2]) * c;
    }
    return out;
}

CubeMatrix CubeMatrix::from_endo(const HEndo& f) {
    CubeMatrix m;
    m.genus = f.dim / 2;
    const int n = triple_count(f.dim);
    m.columns.resize(static_cast<size_t>(n));
    std::vector<HClass> cols(static_cast<size_t>(f.dim));
    for (int q = 0; q < f.dim; ++q) {
        cols[size_t(q)] = HClass(m.genus);
        for (int p = 0; p < f.dim; ++p) cols[size_t(q)].coeffs[size_t(p)] = f.at(p, q);
    }
    for (int t = 0; t < n; ++t) {
        const Triple tr = triple_unrank(t, f.dim);
        const Wedge3 img = wedge(cols[size_t(tr.idx[0])], cols[size_t(tr.idx[1])], cols[size_t(tr.idx[2])]);
        auto& col = m.columns[size_t(t)];
        for (const auto& [u, c] : img.terms()) col.emplace_back(triple_rank(u), c);
    }
    return m;
}

std::vector<i64> CubeMatrix::apply_dense(const std::vector<i64>& row) const {
    std::vector<i64> out(row.size(), 0);
    for (size_t t = 0; t < row.size(); ++t) {
        const i64 c = row[t];
        if (c == 0) continue;
        for (const auto& [r, v] : columns[t]) checked_addmul(out[size_t(r)], v, c);
    }
    return out;
}

Wedge3 wedge_omega(const HClass& c) {
    const int g = c.genus();
    Wedge3 out(g);
    for (int i = 1; i <= g; ++i) {
        const HClass a = HClass::basis(g, sym::a_index(i));
        const HClass b = HClass::basis(g, sym::b_index(i));
        out = out + wedge(c, a, b);
    }
    return out;
}

} // namespace torelli::ext
