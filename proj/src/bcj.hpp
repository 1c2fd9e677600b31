#pragma once

#include <cstdint>
#include <vector>

#include "johnson_tau.hpp"
#include "orbit.hpp"

namespace torelli::bcj {

using ext::F2Row;
using ext::OrbitBudget;
using sym::HEndo;
using sym::SurfaceParams;

/// A mod-2 homology class: bit v is the coefficient of the v-th basis vector
/// in the fixed order (a1, b1, ..., ag, bg).
struct F2Class {
    int genus = 0;
    std::uint64_t bits = 0;

    static F2Class basis(int genus, int index) { return {genus, std::uint64_t{1} << index}; }
    bool operator==(const F2Class&) const = default;
};

/// Mod-2 intersection number (symmetric in characteristic 2).
int pairing_mod2(const F2Class& x, const F2Class& y);

/// Mod-2 linear endomorphism stored as column masks.
struct F2Endo {
    int genus = 0;
    std::vector<std::uint64_t> cols;

    static F2Endo identity(int genus);
    static F2Endo from_endo(const HEndo& f); // entries mod 2
    F2Class apply(const F2Class& x) const;
    F2Endo compose(const F2Endo& inner) const;
    bool operator==(const F2Endo&) const = default;
};

bool is_symplectic_mod2(const F2Endo& f);

/// A Boolean polynomial of degree <= 3 over the 2g idempotent generators:
/// an F2 set of monomials, each monomial a subset of the variables (the empty
/// subset is the constant 1). Squares of variables are normalized away.
class BPoly {
  public:
    BPoly() = default;
    explicit BPoly(int genus) : genus_(genus) {}

    static BPoly one(int genus);
    static BPoly variable(int genus, int index);

    int genus() const { return genus_; }
    bool is_zero() const { return monomials_.empty(); }
    int degree() const;
    const std::vector<std::uint64_t>& monomials() const { return monomials_; }
    void toggle(std::uint64_t mask); // F2 insert/remove; degree <= 3 enforced

    bool operator==(const BPoly&) const = default;
    std::string to_string() const;

  private:
    int genus_ = 0;
    std::vector<std::uint64_t> monomials_; // sorted masks
};

BPoly bpoly_add(const BPoly& p, const BPoly& q);

/// Product with idempotent variable merging; monomials whose degree exceeds
/// truncate_deg are dropped (keep 3 for all B^3 work).
BPoly bpoly_mul(const BPoly& p, const BPoly& q, int truncate_deg = 3);

/// The bar map on mod-2 homology classes, extended from basis generators by
/// bar(u+v) = bar(u) + bar(v) + i(u,v). The result is affine: degree <= 1
/// plus a constant term.
BPoly bar(const F2Class& c);

/// sigma of a separating twist, given a symplectic basis of the genus-k
/// subsurface the curve cuts off: sum_i bar(a_i) bar(b_i).
BPoly sigma_septwist(const std::vector<std::pair<F2Class, F2Class>>& subsurface_basis);

/// Action of a mod-2 symplectic map by algebra automorphisms: generators map
/// through bar(f v), monomials multiplicatively, sums additively.
BPoly sp2_action(const F2Endo& f, const BPoly& p);

// --- monomial coordinates (degree <= 3), used by the span checks ----------

int bpoly_space_dim(int genus); // 1 + 2g + C(2g,2) + C(2g,3)
int monomial_rank(std::uint64_t mask, int genus);
std::uint64_t monomial_unrank(int rank, int genus);
F2Row bpoly_to_row(const BPoly& p);
BPoly bpoly_from_row(const F2Row& row, int genus);

/// Degree-3 part of p read as a mod-2 vector over the wedge triple basis;
/// the identification matches the colex triple order of the integer side.
F2Row mod2_bridge(const BPoly& p, int genus);

struct B2GenerationReport {
    int genus = 0;
    int expected_dim = 0; // 1 + 2g + C(2g,2)
    int achieved_dim = 0;
    long long orbit_size = 0;
    long long examined = 0;
    int generator_count = 0;
    bool conclusive = true;
    bool pass = false;
};

/// Span of the orbit of bar(a1) bar(b1) under sp2_action of the mod-2
/// reductions of sp_generators; passes iff it is all of B^2.
B2GenerationReport verify_B2_generation(int genus, const OrbitBudget& budget = {});

/// Same computation from an arbitrary seed (degenerate controls in tests).
B2GenerationReport b2_generation_from_seed(int genus, const BPoly& seed, const OrbitBudget& budget);

struct SigmaSurjectivityReport {
    SurfaceParams params;
    B2GenerationReport b2;
    int wedge_expected_dim = 0; // C(2g,3)
    int wedge_achieved_dim = 0;
    long long wedge_orbit_size = 0;
    bool conclusive = true;
    bool pass = false;
    int total_dim = 0; // b2 achieved + wedge achieved
};

/// Mirrors the two-step argument: B^2 is Sp-generated by bar(a1) bar(b1), and
/// the mod-2 reduction of the tau orbit spans the full mod-2 triple space.
SigmaSurjectivityReport verify_sigma_surjectivity(const SurfaceParams& params, const OrbitBudget& budget = {});

} // namespace torelli::bcj
