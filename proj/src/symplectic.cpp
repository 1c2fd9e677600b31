#include "symplectic.hpp"

#include <algorithm>

#include "errors.hpp"

namespace torelli::sym {

std::string to_string(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::closed: return "closed";
        case SurfaceKind::punctured: return "punctured";
        case SurfaceKind::bordered: return "bordered";
    }
    return "?";
}

SurfaceKind kind_from_string(const std::string& s) {
    if (s == "closed") return SurfaceKind::closed;
    if (s == "punctured") return SurfaceKind::punctured;
    if (s == "bordered") return SurfaceKind::bordered;
    throw ParameterError("unknown surface kind '" + s + "' (expected closed|punctured|bordered)");
}

void SurfaceParams::validate() const {
    if (genus < 3)
        throw ParameterError("genus " + std::to_string(genus) + " out of range: requires g >= 3");
    if (k < 1 || k >= genus - 1)
        throw ParameterError("bounding-pair genus k = " + std::to_string(k) +
                             " out of range: requires 1 <= k < g-1 (g = " + std::to_string(genus) + ")");
}

HClass HClass::basis(int genus, int index) {
    HClass v(genus);
    v.coeffs.at(static_cast<size_t>(index)) = 1;
    return v;
}

bool HClass::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](i64 c) { return c == 0; });
}

static void require_same_genus(const HClass& x, const HClass& y) {
    if (x.coeffs.size() != y.coeffs.size())
        throw ParameterError("homology classes have mismatched genus");
}

HClass HClass::operator+(const HClass& o) const {
    require_same_genus(*this, o);
    HClass r(genus());
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = checked_add(coeffs[i], o.coeffs[i]);
    return r;
}

HClass HClass::operator-(const HClass& o) const {
    require_same_genus(*this, o);
    HClass r(genus());
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = checked_sub(coeffs[i], o.coeffs[i]);
    return r;
}

HClass HClass::operator*(i64 s) const {
    HClass r(genus());
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = checked_mul(coeffs[i], s);
    return r;
}

HEndo HEndo::identity(int d) {
    HEndo f(d);
    for (int i = 0; i < d; ++i) f.at(i, i) = 1;
    return f;
}

HClass HEndo::apply(const HClass& x) const {
    if (static_cast<int>(x.coeffs.size()) != dim)
        throw ParameterError("endomorphism dimension does not match class genus");
    HClass r(dim / 2);
    for (int p = 0; p < dim; ++p) {
        i64 acc = 0;
        for (int q = 0; q < dim; ++q)
            if (x.coeffs[static_cast<size_t>(q)] != 0)
                checked_addmul(acc, at(p, q), x.coeffs[static_cast<size_t>(q)]);
        r.coeffs[static_cast<size_t>(p)] = acc;
    }
    return r;
}

HEndo HEndo::compose(const HEndo& inner) const {
    if (dim != inner.dim) throw ParameterError("endomorphism dimension mismatch in compose");
    HEndo r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            i64 acc = 0;
            for (int t = 0; t < dim; ++t)
                if (at(i, t) != 0 && inner.at(t, j) != 0) checked_addmul(acc, at(i, t), inner.at(t, j));
            r.at(i, j) = acc;
        }
    return r;
}

i64 pairing(const HClass& x, const HClass& y) {
    require_same_genus(x, y);
    i64 acc = 0;
    for (int j = 0; j < x.genus(); ++j) {
        checked_addmul(acc, x.coeffs[static_cast<size_t>(2 * j)], y.coeffs[static_cast<size_t>(2 * j + 1)]);
        checked_addmul(acc, checked_neg(x.coeffs[static_cast<size_t>(2 * j + 1)]), y.coeffs[static_cast<size_t>(2 * j)]);
    }
    return acc;
}

static HEndo transvection_signed(const HClass& v, i64 sign) {
    if (v.is_zero()) throw ParameterError("transvection along the zero vector is undefined");
    const int d = 2 * v.genus();
    HEndo f = HEndo::identity(d);
    for (int q = 0; q < d; ++q) {
        const i64 c = checked_mul(sign, pairing(HClass::basis(v.genus(), q), v));
        if (c == 0) continue;
        for (int p = 0; p < d; ++p)
            f.at(p, q) = checked_add(f.at(p, q), checked_mul(c, v.coeffs[static_cast<size_t>(p)]));
    }
    return f;
}

HEndo transvection(const HClass& v) { return transvection_signed(v, 1); }
HEndo transvection_inverse(const HClass& v) { return transvection_signed(v, -1); }

HEndo factor_mix(int genus, int r, int s) {
    if (r == s) throw ParameterError("factor_mix requires r != s");
    if (r > s) std::swap(r, s);
    if (r < 1 || s > genus)
        throw ParameterError("factor_mix indices out of range: requires 1 <= r < s <= g");
    HEndo f = HEndo::identity(2 * genus);
    f.at(b_index(s), a_index(r)) = -1; // a_r -> a_r - b_s
    f.at(b_index(r), a_index(s)) = -1; // a_s -> a_s - b_r
    return f;
}

bool is_symplectic(const HEndo& f) {
    if (f.dim == 0 || f.dim % 2 != 0) return false;
    const int g = f.dim / 2;
    std::vector<HClass> image(static_cast<size_t>(f.dim));
    for (int q = 0; q < f.dim; ++q) image[static_cast<size_t>(q)] = f.apply(HClass::basis(g, q));
    for (int p = 0; p < f.dim; ++p)
        for (int q = p + 1; q < f.dim; ++q) {
            const i64 expected = pairing(HClass::basis(g, p), HClass::basis(g, q));
            if (pairing(image[static_cast<size_t>(p)], image[static_cast<size_t>(q)]) != expected) return false;
        }
    return true;
}

std::vector<HEndo> sp_generators(int genus) {
    if (genus < 3) throw ParameterError("sp_generators requires g >= 3");
    std::vector<HClass> dirs;
    for (int i = 1; i <= genus; ++i) {
        dirs.push_back(HClass::basis(genus, a_index(i)));
        dirs.push_back(HClass::basis(genus, b_index(i)));
    }
    for (int i = 1; i <= genus; ++i)
        dirs.push_back(HClass::basis(genus, a_index(i)) + HClass::basis(genus, b_index(i)));
    for (int i = 1; i + 1 <= genus; ++i) {
        dirs.push_back(HClass::basis(genus, a_index(i)) + HClass::basis(genus, a_index(i + 1)));
        dirs.push_back(HClass::basis(genus, b_index(i)) + HClass::basis(genus, b_index(i + 1)));
        dirs.push_back(HClass::basis(genus, a_index(i)) + HClass::basis(genus, b_index(i + 1)));
        dirs.push_back(HClass::basis(genus, a_index(i + 1)) + HClass::basis(genus, b_index(i)));
    }

    std::vector<HEndo> gens;
    gens.reserve(dirs.size() * 2 + static_cast<size_t>(genus) * (genus - 1) / 2);
    for (const auto& v : dirs) gens.push_back(transvection(v));
    for (const auto& v : dirs) gens.push_back(transvection_inverse(v));
    for (int r = 1; r <= genus; ++r)
        for (int s = r + 1; s <= genus; ++s) gens.push_back(factor_mix(genus, r, s));
    return gens;
}

} // namespace torelli::sym
