#include "johnson_tau.hpp"

#include "errors.hpp"

namespace torelli::tau {

using ext::CubeMatrix;
using ext::IntRow;
using ext::IntRows;
using ext::LatticeVerdict;
using ext::QuotientContext;
using ext::Triple;

TauTarget target_for(SurfaceKind kind) {
    return kind == SurfaceKind::closed ? TauTarget::wedge3_mod_H : TauTarget::full_wedge3;
}

bool TauValue::equals_exact(const TauValue& o) const { return target == o.target && value == o.value; }

bool TauValue::equals_in_target(const TauValue& o) const {
    if (target != o.target || value.genus() != o.value.genus()) return false;
    if (target == TauTarget::full_wedge3) return value == o.value;
    const auto q = QuotientContext::for_genus(value.genus());
    return q.in_omega_image(value - o.value);
}

TauValue bp_tau_standard(const SurfaceParams& params) {
    params.validate();
    Wedge3 w(params.genus);
    const int bk1 = sym::b_index(params.k + 1);
    for (int i = 1; i <= params.k; ++i) w.add_term(Triple{{sym::a_index(i), sym::b_index(i), bk1}}, 1);
    return TauValue{w, target_for(params.kind)};
}

TauValue septwist_tau(const SurfaceParams& params) {
    if (params.genus < 3) throw ParameterError("genus out of range: requires g >= 3");
    return TauValue{Wedge3(params.genus), target_for(params.kind)};
}

TauValue pointpush_tau(const HClass& c, const SurfaceParams& params) {
    if (params.kind != SurfaceKind::punctured)
        throw ParameterError("point pushes exist only on punctured surfaces");
    if (c.genus() != params.genus) throw ParameterError("class genus does not match surface params");
    return TauValue{ext::wedge_omega(c), TauTarget::full_wedge3};
}

TauValue conjugate_bp_tau(const HEndo& f, const SurfaceParams& params) {
    if (!sym::is_symplectic(f))
        throw ParameterError("conjugating map must be symplectic to be induced by a mapping class");
    const TauValue base = bp_tau_standard(params);
    return TauValue{ext::induced_cube_apply(f, base.value), base.target};
}

TauSurjectivityReport verify_tau_surjectivity(const SurfaceParams& params, const OrbitBudget& budget) {
    params.validate();
    const int g = params.genus;
    const int ambient = ext::triple_count(2 * g);

    TauSurjectivityReport rep;
    rep.params = params;
    rep.ambient_dim = ambient;
    rep.expected_rank = params.kind == SurfaceKind::closed ? ambient - 2 * g : ambient;

    const Wedge3 x = bp_tau_standard(params).value;
    const HEndo phi = sym::factor_mix(g, 1, params.k + 2);
    const Wedge3 mixed_diff = ext::induced_cube_apply(phi, x) - x;

    const auto gens = sym::sp_generators(g);
    rep.generator_count = static_cast<int>(gens.size());
    std::vector<CubeMatrix> cube_gens;
    cube_gens.reserve(gens.size());
    for (const auto& f : gens) cube_gens.push_back(CubeMatrix::from_endo(f));

    const IntRows seeds = {x.dense(), mixed_diff.dense()};
    const auto outcome = ext::orbit_span_closure(seeds, cube_gens, ambient, budget);
    rep.orbit_size = outcome.orbit_size;
    rep.examined = outcome.examined;
    rep.conclusive = outcome.conclusive;

    LatticeVerdict verdict;
    if (params.kind == SurfaceKind::closed) {
        // the quotient image of the span is the span of the projected rows
        const QuotientContext q = QuotientContext::for_genus(g);
        IntRows projected;
        projected.reserve(outcome.rows.size());
        for (const auto& row : outcome.rows) projected.push_back(q.project(row));
        verdict = ext::verdict_from_snf(ext::smith_normal_form(projected));
    } else {
        verdict = ext::verdict_from_snf(outcome.snf);
    }

    rep.achieved_rank = verdict.rank;
    rep.elementary_divisors = verdict.elementary_divisors;
    rep.saturated = verdict.saturated;
    rep.pass = rep.conclusive && verdict.saturated && verdict.rank == rep.expected_rank;
    return rep;
}

} // namespace torelli::tau
