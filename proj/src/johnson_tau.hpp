#pragma once

#include <optional>

#include "orbit.hpp"
#include "smith.hpp"

namespace torelli::tau {

using ext::OrbitBudget;
using ext::Wedge3;
using sym::HClass;
using sym::HEndo;
using sym::SurfaceKind;
using sym::SurfaceParams;

/// Where a Johnson-homomorphism value lives: the full third exterior power
/// (bordered and punctured surfaces) or its quotient by the omega-image of H
/// (closed surfaces). The quotient is never coordinatized here; closed-target
/// values carry a representative plus the distinguished sublattice.
enum class TauTarget { full_wedge3, wedge3_mod_H };

TauTarget target_for(SurfaceKind kind);

struct TauValue {
    Wedge3 value;
    TauTarget target = TauTarget::full_wedge3;

    bool equals_exact(const TauValue& o) const;
    /// Equality in the stated target: exact for the full lattice, modulo the
    /// omega image for the closed quotient.
    bool equals_in_target(const TauValue& o) const;
};

/// Value of tau on the standard bounding pair map of genus k:
/// sum_{i=1..k} a_i ^ b_i ^ b_{k+1}.
TauValue bp_tau_standard(const SurfaceParams& params);

/// Separating twists lie in the Johnson kernel, so tau vanishes on them.
TauValue septwist_tau(const SurfaceParams& params);

/// tau of a point-push along class c on a punctured surface: c ^ omega.
/// A push along a commutator (class 0) maps to 0.
TauValue pointpush_tau(const HClass& c, const SurfaceParams& params);

/// tau of the bounding pair map conjugated by a mapping class inducing f on
/// homology; f must be symplectic.
TauValue conjugate_bp_tau(const HEndo& f, const SurfaceParams& params);

/// Verdict of the surjectivity check for one parameter set.
struct TauSurjectivityReport {
    SurfaceParams params;
    int ambient_dim = 0;   // C(2g,3)
    int expected_rank = 0; // ambient, or ambient - 2g for closed
    int achieved_rank = 0;
    std::vector<i64> elementary_divisors;
    bool saturated = false;
    long long orbit_size = 0;
    long long examined = 0;
    int generator_count = 0;
    bool conclusive = true;
    bool pass = false;
};

/// Expands the orbit of the standard bounding-pair value (seeded together
/// with the factor-mix difference) under the induced action of
/// sp_generators, then checks full-lattice saturation for bordered/punctured
/// targets or quotient saturation for the closed target.
TauSurjectivityReport verify_tau_surjectivity(const SurfaceParams& params, const OrbitBudget& budget = {});

} // namespace torelli::tau
