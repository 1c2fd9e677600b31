#include "verifier.hpp"

#include <algorithm>
#include <chrono>

#include "bcj.hpp"
#include "errors.hpp"
#include "johnson_tau.hpp"
#include "lantern.hpp"

namespace torelli::verify {

using cert::Certificate;
using sym::SurfaceKind;
using sym::SurfaceParams;

namespace {

const std::vector<std::string> ids = {
    "tau-surjectivity",     "lantern",           "factorization-3.1a", "factorization-3.1b",
    "factorization-3.2",    "factorization-3.3", "bcj-b2",             "sigma-surjectivity",
    "boundary-twist-checks"};

void base_conventions(Certificate& c) {
    c.add_convention("schema", "1");
    c.add_convention("basis_order", "a1,b1,...,ag,bg");
    c.add_convention("triple_order", "colex");
    c.add_convention("twist_sign", "x -> x + i(x,v) v");
}

void lantern_conventions(Certificate& c, bool mirror) {
    c.add_convention("lantern_enclosure", "x cuts off (a,d); y cuts off (b,d); z cuts off (c,d)");
    c.add_convention("pi1_model",
                     "basepoint on outer boundary; inner boundary twists act trivially on pi1; "
                     "boundary-twist multiplicities tracked by the central exponent vector");
    c.add_convention("twist_handedness", mirror ? "mirrored" : "standard");
}

ext::OrbitBudget budget_of(const RunOptions& opts) {
    return ext::OrbitBudget{opts.orbit_budget, opts.time_cap_seconds};
}

SurfaceParams require_params(const std::optional<SurfaceParams>& params, const std::string& prop) {
    if (!params) throw ParameterError("proposition '" + prop + "' requires --genus/--k/--surface parameters");
    return *params;
}

Certificate make_cert(const std::string& prop) {
    Certificate c;
    c.proposition = prop;
    c.tool_version = tool_version;
    base_conventions(c);
    return c;
}

void echo_params(Certificate& c, const SurfaceParams& p) {
    c.params.genus = p.genus;
    c.params.k = p.k;
    c.params.surface = sym::to_string(p.kind);
}

Certificate run_tau(const SurfaceParams& params, const RunOptions& opts) {
    Certificate c = make_cert("tau-surjectivity");
    echo_params(c, params);
    c.add_convention("tau_target",
                     params.kind == SurfaceKind::closed ? "wedge3_mod_H" : "full_wedge3");
    if (params.kind != SurfaceKind::closed)
        c.add_convention("target_assumption",
                         "punctured and bordered targets are both taken to be the full third exterior power");
    const auto rep = tau::verify_tau_surjectivity(params, budget_of(opts));
    c.add_metric("ambient_dim", rep.ambient_dim);
    c.add_metric("expected_rank", rep.expected_rank);
    c.add_metric("rank", rep.achieved_rank);
    c.add_metric_list("elementary_divisors", rep.elementary_divisors);
    c.add_metric("saturated", rep.saturated ? 1 : 0);
    c.add_metric("orbit_size", rep.orbit_size);
    c.add_metric("examined", rep.examined);
    c.add_metric("generator_count", rep.generator_count);
    c.verdict = !rep.conclusive ? "inconclusive" : (rep.pass ? "pass" : "fail");
    return c;
}

Certificate run_lantern(const RunOptions& opts) {
    Certificate c = make_cert("lantern");
    lantern_conventions(c, opts.mirror_twists);
    const auto rep = lantern::verify_lantern_relation(opts.mirror_twists);
    for (size_t i = 0; i < rep.transcript.size(); ++i) {
        c.add_convention("lhs_x" + std::to_string(i + 1), rep.transcript[i].first);
        c.add_convention("rhs_x" + std::to_string(i + 1), rep.transcript[i].second);
    }
    c.add_metric("relation_holds", rep.pass ? 1 : 0);
    c.add_metric("mutation_control_fails", rep.mutation_control_fails ? 1 : 0);
    c.add_metric("reversed_composition_passes", rep.reversed_composition_passes ? 1 : 0);
    c.verdict = rep.pass && rep.mutation_control_fails ? "pass" : "fail";
    return c;
}

Certificate run_factorization(lantern::PropId id, const std::optional<SurfaceParams>& in,
                              const RunOptions& opts) {
    const std::string prop = "factorization-" + lantern::prop_id_str(id);
    SurfaceParams params = require_params(in, prop);
    if (id == lantern::PropId::p33) {
        if (params.k == 0) params.k = params.genus - 2; // the figure pins k
        if (params.k != params.genus - 2)
            throw ParameterError("factorization-3.3 uses the k = g-2 configuration");
    }
    params.validate();

    Certificate c = make_cert(prop);
    echo_params(c, params);
    lantern_conventions(c, opts.mirror_twists);

    const auto relation = lantern::verify_lantern_relation(opts.mirror_twists);
    const auto rep = lantern::verify_factorization(id, opts.mirror_twists);
    const auto config = lantern::build_config(lantern::figure_for(id), params);
    const auto check = lantern::check_config(config);

    const auto word = lantern::factorization_lhs(id) * lantern::factorization_rhs(id).inverse();
    const bool homology_ok =
        lantern::transvection_product(word, config) == sym::HEndo::identity(2 * params.genus);

    c.add_metric("relation_holds", relation.pass ? 1 : 0);
    c.add_metric("rewriting_ok", rep.rewriting_ok ? 1 : 0);
    c.add_metric("automorphism_ok", rep.automorphism_ok ? 1 : 0);
    if (id == lantern::PropId::p33) c.add_metric("punctured_variant_ok", rep.punctured_variant_ok ? 1 : 0);
    c.add_metric("homology_identity_ok", homology_ok ? 1 : 0);
    c.add_metric("config_invariants_ok", check.all() ? 1 : 0);
    c.verdict = relation.pass && rep.pass && homology_ok && check.all() ? "pass" : "fail";
    return c;
}

Certificate run_b2(const std::optional<SurfaceParams>& in, const RunOptions& opts) {
    SurfaceParams params = require_params(in, "bcj-b2");
    if (params.kind != SurfaceKind::bordered)
        throw ParameterError("the Birman-Craggs-Johnson algebra lives on the bordered surface");
    if (params.genus < 3) throw ParameterError("genus out of range: requires g >= 3");
    Certificate c = make_cert("bcj-b2");
    echo_params(c, params);
    const auto rep = bcj::verify_B2_generation(params.genus, budget_of(opts));
    c.add_metric("expected_dim", rep.expected_dim);
    c.add_metric("dimension", rep.achieved_dim);
    c.add_metric("orbit_size", rep.orbit_size);
    c.add_metric("examined", rep.examined);
    c.add_metric("generator_count", rep.generator_count);
    c.verdict = !rep.conclusive ? "inconclusive" : (rep.pass ? "pass" : "fail");
    return c;
}

Certificate run_sigma(const std::optional<SurfaceParams>& in, const RunOptions& opts) {
    const SurfaceParams params = require_params(in, "sigma-surjectivity");
    Certificate c = make_cert("sigma-surjectivity");
    echo_params(c, params);
    const auto rep = bcj::verify_sigma_surjectivity(params, budget_of(opts));
    c.add_metric("b2_expected_dim", rep.b2.expected_dim);
    c.add_metric("b2_dimension", rep.b2.achieved_dim);
    c.add_metric("wedge_expected_dim", rep.wedge_expected_dim);
    c.add_metric("wedge_dimension", rep.wedge_achieved_dim);
    c.add_metric("total_dimension", rep.total_dim);
    c.add_metric("orbit_size", rep.b2.orbit_size + rep.wedge_orbit_size);
    c.verdict = !rep.conclusive ? "inconclusive" : (rep.pass ? "pass" : "fail");
    return c;
}

Certificate run_boundary_checks(const std::optional<SurfaceParams>& in) {
    SurfaceParams params = require_params(in, "boundary-twist-checks");
    if (params.kind != SurfaceKind::bordered)
        throw ParameterError("boundary-twist-checks concern the bordered surface");
    if (params.genus < 3) throw ParameterError("genus out of range: requires g >= 3");
    const int g = params.genus;

    Certificate c = make_cert("boundary-twist-checks");
    echo_params(c, params);

    // tau(T_b) = 0: the boundary twist is a separating twist (genus g side)
    const auto tau_value = tau::septwist_tau(params);
    const bool tau_trivial = tau_value.value.is_zero();

    // sigma(T_b) = sum_i a_i~ b_i~ over the full basis, which is nonzero
    std::vector<std::pair<bcj::F2Class, bcj::F2Class>> basis;
    for (int i = 1; i <= g; ++i)
        basis.emplace_back(bcj::F2Class::basis(g, sym::a_index(i)), bcj::F2Class::basis(g, sym::b_index(i)));
    const auto sigma = bcj::sigma_septwist(basis);
    bcj::BPoly expected(g);
    for (int i = 1; i <= g; ++i)
        expected = bcj::bpoly_add(expected, bcj::bpoly_mul(bcj::BPoly::variable(g, sym::a_index(i)),
                                                           bcj::BPoly::variable(g, sym::b_index(i))));
    const bool sigma_matches = sigma == expected;
    const bool sigma_nonzero = !sigma.is_zero();

    c.add_metric("tau_trivial", tau_trivial ? 1 : 0);
    c.add_metric("sigma_matches_formula", sigma_matches ? 1 : 0);
    c.add_metric("sigma_nonzero", sigma_nonzero ? 1 : 0);
    c.add_metric("sigma_monomials", static_cast<i64>(sigma.monomials().size()));
    c.verdict = tau_trivial && sigma_matches && sigma_nonzero ? "pass" : "fail";
    return c;
}

} // namespace

const std::vector<std::string>& proposition_ids() { return ids; }

Certificate run(const std::string& proposition, const std::optional<SurfaceParams>& params,
                const RunOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    Certificate c;
    if (proposition == "tau-surjectivity") {
        c = run_tau(require_params(params, proposition), opts);
    } else if (proposition == "lantern") {
        c = run_lantern(opts);
    } else if (proposition == "factorization-3.1a") {
        c = run_factorization(lantern::PropId::p31a, params, opts);
    } else if (proposition == "factorization-3.1b") {
        c = run_factorization(lantern::PropId::p31b, params, opts);
    } else if (proposition == "factorization-3.2") {
        c = run_factorization(lantern::PropId::p32, params, opts);
    } else if (proposition == "factorization-3.3") {
        c = run_factorization(lantern::PropId::p33, params, opts);
    } else if (proposition == "bcj-b2") {
        c = run_b2(params, opts);
    } else if (proposition == "sigma-surjectivity") {
        c = run_sigma(params, opts);
    } else if (proposition == "boundary-twist-checks") {
        c = run_boundary_checks(params);
    } else {
        throw UsageError("unknown proposition id '" + proposition + "'");
    }
    c.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    return c;
}

namespace {

std::vector<int> valid_ks(int g, const std::optional<int>& fixed) {
    std::vector<int> ks;
    for (int k = 1; k < g - 1; ++k)
        if (!fixed || *fixed == k) ks.push_back(k);
    return ks;
}

} // namespace

SweepResult sweep(const SweepSpec& spec, const RunOptions& opts) {
    if (spec.kinds.empty()) throw UsageError("sweep requires a nonempty set of surface kinds");
    if (spec.gmin < 3 || spec.gmax < spec.gmin || spec.gmax > spec.max_genus)
        throw UsageError("sweep genus range must satisfy 3 <= gmin <= gmax <= " +
                         std::to_string(spec.max_genus));
    const auto props = spec.propositions.empty() ? ids : spec.propositions;
    for (const auto& p : props)
        if (std::find(ids.begin(), ids.end(), p) == ids.end())
            throw UsageError("unknown proposition id '" + p + "'");

    // deterministic kind order
    std::vector<SurfaceKind> kinds = spec.kinds;
    std::sort(kinds.begin(), kinds.end());
    kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

    SweepResult out;
    auto record = [&out](Certificate c) {
        if (c.verdict == "pass")
            ++out.passed;
        else if (c.verdict == "fail")
            ++out.failed;
        else
            ++out.inconclusive;
        out.certificates.push_back(std::move(c));
    };

    for (const auto& prop : ids) {
        if (std::find(props.begin(), props.end(), prop) == props.end()) continue;
        if (prop == "lantern") {
            record(run(prop, std::nullopt, opts));
            continue;
        }
        for (int g = spec.gmin; g <= spec.gmax; ++g) {
            if (prop == "bcj-b2" || prop == "boundary-twist-checks") {
                if (std::find(kinds.begin(), kinds.end(), SurfaceKind::bordered) == kinds.end()) continue;
                record(run(prop, SurfaceParams{g, 0, SurfaceKind::bordered}, opts));
                continue;
            }
            for (const auto kind : kinds) {
                if (prop == "sigma-surjectivity" && kind != SurfaceKind::bordered) continue;
                if (prop == "factorization-3.3") {
                    if (kind == SurfaceKind::closed || g < 4) continue;
                    if (spec.fixed_k && *spec.fixed_k != g - 2) continue;
                    record(run(prop, SurfaceParams{g, g - 2, kind}, opts));
                    continue;
                }
                for (const int k : valid_ks(g, spec.fixed_k))
                    record(run(prop, SurfaceParams{g, k, kind}, opts));
            }
        }
    }
    return out;
}

std::string SweepResult::summary() const {
    std::string s = "certificates: " + std::to_string(certificates.size()) +
                    "  pass: " + std::to_string(passed) + "  fail: " + std::to_string(failed) +
                    "  inconclusive: " + std::to_string(inconclusive) + "\n";
    for (const auto& c : certificates) {
        s += c.verdict + "  " + c.proposition;
        if (c.params.surface != "n/a")
            s += " g=" + std::to_string(c.params.genus) + " k=" + std::to_string(c.params.k) + " " +
                 c.params.surface;
        s += "\n";
    }
    return s;
}

std::string certificate_filename(const cert::Certificate& c) {
    if (c.params.surface == "n/a") return c.proposition + ".json";
    return c.proposition + "_g" + std::to_string(c.params.genus) + "_k" + std::to_string(c.params.k) + "_" +
           c.params.surface + ".json";
}

} // namespace torelli::verify
