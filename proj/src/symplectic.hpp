#pragma once

#include <string>
#include <vector>

#include "checked.hpp"

namespace torelli::sym {

enum class SurfaceKind { closed, punctured, bordered };

std::string to_string(SurfaceKind k);
SurfaceKind kind_from_string(const std::string& s);

/// Genus, bounding-pair genus and surface kind for one verification run.
/// The admissible range is g >= 3 and 1 <= k < g-1.
struct SurfaceParams {
    int genus = 0;
    int k = 0;
    SurfaceKind kind = SurfaceKind::closed;

    void validate() const; // throws ParameterError outside the range
};

// Basis order is pinned as (a1, b1, a2, b2, ..., ag, bg); every serialized
// vector in the project uses it.
inline int a_index(int i) { return 2 * (i - 1); }     // i is 1-based
inline int b_index(int i) { return 2 * (i - 1) + 1; }

/// An element of H = Z^{2g} in the fixed symplectic basis.
struct HClass {
    std::vector<i64> coeffs;

    HClass() = default;
    explicit HClass(int genus) : coeffs(2 * genus, 0) {}
    static HClass basis(int genus, int index);

    int genus() const { return static_cast<int>(coeffs.size()) / 2; }
    bool is_zero() const;

    HClass operator+(const HClass& o) const;
    HClass operator-(const HClass& o) const;
    HClass operator*(i64 s) const;
    bool operator==(const HClass& o) const = default;
};

/// Integer endomorphism of H acting by left application; column q is the
/// image of the q-th basis vector.
struct HEndo {
    int dim = 0;                 // 2g
    std::vector<i64> m;          // row-major, dim*dim

    HEndo() = default;
    explicit HEndo(int d) : dim(d), m(static_cast<size_t>(d) * d, 0) {}
    static HEndo identity(int d);

    i64& at(int r, int c) { return m[static_cast<size_t>(r) * dim + c]; }
    i64 at(int r, int c) const { return m[static_cast<size_t>(r) * dim + c]; }

    HClass apply(const HClass& x) const;
    HEndo compose(const HEndo& inner) const; // this o inner
    bool operator==(const HEndo& o) const = default;
};

/// Symplectic intersection pairing: i(a_j, b_j) = 1, all other basis pairs 0.
i64 pairing(const HClass& x, const HClass& y);

/// Homology action of a Dehn twist about a curve with class v:
/// x -> x + i(x, v) v.  Fixed left-twist sign convention.
HEndo transvection(const HClass& v);

/// Inverse twist, x -> x - i(x, v) v.
HEndo transvection_inverse(const HClass& v);

/// The map a_r -> a_r - b_s, a_s -> a_s - b_r, all other basis vectors fixed.
/// Indices are 1-based and must satisfy 1 <= r < s <= g (symmetric in r, s).
HEndo factor_mix(int genus, int r, int s);

/// True iff f preserves the pairing on all basis pairs.
bool is_symplectic(const HEndo& f);

/// Deterministic generator list for the orbit-span verifiers: transvections
/// along all a_i, b_i, a_i+b_i, a_i+a_{i+1}, b_i+b_{i+1}, a_i+b_{i+1},
/// a_{i+1}+b_i, their inverses, and all factor_mix(r, s).
std::vector<HEndo> sp_generators(int genus);

} // namespace torelli::sym
