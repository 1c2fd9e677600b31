#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "errors.hpp"
#include "johnson_tau.hpp"
#include "naive_oracle.hpp"

using namespace torelli;
using namespace torelli::tau;
using ext::Triple;
using ext::Wedge3;

namespace {

Wedge3 monomial(int g, const Triple& t, i64 c = 1) {
    Wedge3 w(g);
    w.add_term(t, c);
    return w;
}

HEndo random_symplectic(int g, std::mt19937& rng, int words = 4) {
    const auto gens = sym::sp_generators(g);
    HEndo f = HEndo::identity(2 * g);
    for (int i = 0; i < words; ++i) f = f.compose(gens[rng() % gens.size()]);
    return f;
}

} // namespace

TEST_CASE("standard bounding pair value") {
    // g=3, k=1: a1^b1^b2
    CHECK(bp_tau_standard({3, 1, SurfaceKind::bordered}).value == monomial(3, Triple{{0, 1, 3}}));
    // g=4, k=2: a1^b1^b3 + a2^b2^b3
    const auto v = bp_tau_standard({4, 2, SurfaceKind::punctured}).value;
    CHECK(v == monomial(4, Triple{{0, 1, 5}}) + monomial(4, Triple{{2, 3, 5}}));
    CHECK_THROWS_AS(bp_tau_standard({3, 2, SurfaceKind::closed}), ParameterError);
}

TEST_CASE("bounding pair value has k unit monomials and the right target") {
    for (int g = 3; g <= 6; ++g)
        for (int k = 1; k < g - 1; ++k) {
            for (const auto kind : {SurfaceKind::closed, SurfaceKind::punctured, SurfaceKind::bordered}) {
                const auto t = bp_tau_standard({g, k, kind});
                CHECK(t.value.monomial_count() == size_t(k));
                for (const auto& [tr, c] : t.value.terms()) CHECK(c == 1);
                CHECK((t.target == TauTarget::wedge3_mod_H) == (kind == SurfaceKind::closed));
            }
        }
}

TEST_CASE("separating twists map to zero") {
    const SurfaceParams p{4, 1, SurfaceKind::bordered};
    CHECK(septwist_tau(p).value.is_zero());
    const auto x = bp_tau_standard(p);
    CHECK((x.value - x.value).is_zero());
    std::mt19937 rng(9);
    const HEndo f = random_symplectic(4, rng);
    CHECK(ext::induced_cube_apply(f, septwist_tau(p).value).is_zero());
}

TEST_CASE("point pushes factor through the omega embedding") {
    const SurfaceParams p{3, 1, SurfaceKind::punctured};
    CHECK(pointpush_tau(HClass(3), p).value.is_zero()); // commutator class
    Wedge3 expect(3);
    expect.add_term(Triple{{0, 2, 3}}, 1);
    expect.add_term(Triple{{0, 4, 5}}, 1);
    CHECK(pointpush_tau(HClass::basis(3, 0), p).value == expect);

    const HClass c = HClass::basis(3, 0) + HClass::basis(3, 1);
    CHECK(pointpush_tau(c, p).value ==
          pointpush_tau(HClass::basis(3, 0), p).value + pointpush_tau(HClass::basis(3, 1), p).value);

    CHECK_THROWS_AS(pointpush_tau(HClass(3), SurfaceParams{3, 1, SurfaceKind::closed}), ParameterError);
}

TEST_CASE("conjugated bounding pair values") {
    const SurfaceParams p{4, 1, SurfaceKind::bordered};
    CHECK(conjugate_bp_tau(HEndo::identity(8), p).equals_exact(bp_tau_standard(p)));

    // the factor-mix difference is a single monomial with coefficient -1:
    // phi(x) - x = -(b1 ^ b_{k+1} ^ b_{k+2})
    for (int g = 3; g <= 6; ++g)
        for (int k = 1; k < g - 1; ++k) {
            const SurfaceParams q{g, k, SurfaceKind::bordered};
            const auto diff =
                conjugate_bp_tau(sym::factor_mix(g, 1, k + 2), q).value - bp_tau_standard(q).value;
            const Wedge3 expect =
                monomial(g, Triple{{sym::b_index(1), sym::b_index(k + 1), sym::b_index(k + 2)}}, -1);
            CHECK(diff == expect);
            CHECK(diff.monomial_count() == 1);
        }

    HEndo notsymp = HEndo::identity(8);
    notsymp.at(0, 0) = 3;
    CHECK_THROWS_AS(conjugate_bp_tau(notsymp, p), ParameterError);
}

TEST_CASE("conjugation is equivariant through independent code paths") {
    std::mt19937 rng(31);
    const SurfaceParams p{3, 1, SurfaceKind::bordered};
    for (int trial = 0; trial < 30; ++trial) {
        const HEndo f = random_symplectic(3, rng), h = random_symplectic(3, rng);
        // direct per-monomial application vs precomputed cube-matrix columns
        const auto direct = conjugate_bp_tau(f, p).value;
        const auto via_matrix =
            Wedge3::from_dense(3, ext::CubeMatrix::from_endo(f).apply_dense(bp_tau_standard(p).value.dense()));
        CHECK(direct == via_matrix);
        // composing maps vs composing applications
        CHECK(conjugate_bp_tau(f.compose(h), p).value ==
              ext::induced_cube_apply(f, conjugate_bp_tau(h, p).value));
    }
}

TEST_CASE("tau equality respects the closed-surface quotient target") {
    const SurfaceParams closed{3, 1, SurfaceKind::closed};
    const auto x = bp_tau_standard(closed);
    TauValue shifted{x.value + ext::wedge_omega(HClass::basis(3, 2)), TauTarget::wedge3_mod_H};
    CHECK_FALSE(x.equals_exact(shifted));
    CHECK(x.equals_in_target(shifted));
}

TEST_CASE("surjectivity verdicts at g=3") {
    const auto closed = verify_tau_surjectivity({3, 1, SurfaceKind::closed});
    CHECK(closed.pass);
    CHECK(closed.achieved_rank == 14);
    CHECK(closed.saturated);

    const auto bordered = verify_tau_surjectivity({3, 1, SurfaceKind::bordered});
    CHECK(bordered.pass);
    CHECK(bordered.achieved_rank == 20);
    CHECK(bordered.saturated);
    for (const auto d : bordered.elementary_divisors) CHECK(d == 1);
}

TEST_CASE("orbit module carries the contraction constraint for k >= 2") {
    // the genus-k value contracts to k*b_{k+1}, so for k=2 the orbit module
    // is the index-2^{2g} sublattice with even contraction: full rank, 2g
    // elementary divisors equal to 2, and an honest fail verdict
    const auto rep = verify_tau_surjectivity({4, 2, SurfaceKind::bordered});
    CHECK(rep.conclusive);
    CHECK_FALSE(rep.pass);
    CHECK(rep.achieved_rank == 56);
    CHECK_FALSE(rep.saturated);
    CHECK(std::count(rep.elementary_divisors.begin(), rep.elementary_divisors.end(), 2) == 8);
}

TEST_CASE("budget exhaustion reports inconclusive, never a false fail") {
    const auto rep = verify_tau_surjectivity({3, 1, SurfaceKind::bordered}, ext::OrbitBudget{10, 300.0});
    CHECK_FALSE(rep.conclusive);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("orbit closure outcome is independent of generator and seed order") {
    const int g = 3;
    const auto x = bp_tau_standard({g, 1, SurfaceKind::bordered}).value;
    const auto diff = ext::induced_cube_apply(sym::factor_mix(g, 1, 3), x) - x;

    auto run = [&](unsigned seed) {
        auto gens = sym::sp_generators(g);
        std::vector<ext::CubeMatrix> cubes;
        for (const auto& f : gens) cubes.push_back(ext::CubeMatrix::from_endo(f));
        ext::IntRows seeds = {x.dense(), diff.dense()};
        std::mt19937 rng(seed);
        std::shuffle(cubes.begin(), cubes.end(), rng);
        std::shuffle(seeds.begin(), seeds.end(), rng);
        return ext::orbit_span_closure(seeds, cubes, ext::triple_count(2 * g), {});
    };
    const auto base = run(1);
    for (unsigned s : {2u, 3u, 4u}) {
        const auto other = run(s);
        CHECK(other.snf.rank == base.snf.rank);
        CHECK(other.snf.divisors == base.snf.divisors);
    }
}

TEST_CASE("closure agrees with the brute-force orbit oracle at (3,1)") {
    const int g = 3;
    const auto x = bp_tau_standard({g, 1, SurfaceKind::bordered}).value;
    const auto diff = ext::induced_cube_apply(sym::factor_mix(g, 1, 3), x) - x;
    std::vector<ext::CubeMatrix> cubes;
    for (const auto& f : sym::sp_generators(g)) cubes.push_back(ext::CubeMatrix::from_endo(f));

    // depth-2 brute force already spans the full lattice; saturation at the
    // maximum possible rank certifies the span claim independently
    const auto rows = oracle::brute_orbit({x.dense(), diff.dense()}, cubes, 2);
    const auto divisors = oracle::naive_snf(oracle::to_big(rows));
    CHECK(divisors.size() == 20);
    for (const auto& d : divisors) CHECK(d == 1);
}
