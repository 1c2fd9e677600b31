#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "naive_oracle.hpp"
#include "orbit.hpp"
#include "symplectic.hpp"

using namespace torelli;
using namespace torelli::sym;

namespace {

HClass a(int g, int i) { return HClass::basis(g, a_index(i)); }
HClass b(int g, int i) { return HClass::basis(g, b_index(i)); }

HClass random_class(int g, std::mt19937& rng, int bound = 9) {
    std::uniform_int_distribution<i64> dist(-bound, bound);
    HClass v(g);
    for (auto& c : v.coeffs) c = dist(rng);
    return v;
}

} // namespace

TEST_CASE("pairing on the symplectic basis") {
    const int g = 3;
    CHECK(pairing(a(g, 1), b(g, 1)) == 1);
    CHECK(pairing(b(g, 1), a(g, 1)) == -1);
    CHECK(pairing(a(g, 1), a(g, 2)) == 0);
    CHECK(pairing(b(g, 1), b(g, 2)) == 0);
    CHECK(pairing(a(g, 1), b(g, 2)) == 0);
    // (a1 + b2, b1 + a2) expands to 1 - 1 = 0
    CHECK(pairing(a(g, 1) + b(g, 2), b(g, 1) + a(g, 2)) == 0);
}

TEST_CASE("pairing is bilinear and antisymmetric on random inputs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 1000; ++trial) {
        const int g = 3 + static_cast<int>(rng() % 3);
        const HClass x = random_class(g, rng), y = random_class(g, rng), z = random_class(g, rng);
        CHECK(pairing(x, y) == -pairing(y, x));
        CHECK(pairing(x + y, z) == pairing(x, z) + pairing(y, z));
        CHECK(pairing(x, y) == oracle::pairing_by_expansion(x, y));
    }
}

TEST_CASE("pairing rejects mismatched genus") {
    CHECK_THROWS_AS(pairing(HClass(3), HClass(4)), ParameterError);
}

TEST_CASE("exact arithmetic faults instead of wrapping") {
    const int g = 3;
    HClass x(g), y(g);
    x.coeffs[0] = std::numeric_limits<i64>::max();
    y.coeffs[1] = 2;
    CHECK_THROWS_AS(pairing(x, y), OverflowError);
    CHECK_THROWS_AS(x + x, OverflowError);
}

TEST_CASE("transvection formula") {
    const int g = 3;
    const HEndo t = transvection(a(g, 1));
    CHECK(t.apply(b(g, 1)) == b(g, 1) - a(g, 1));
    CHECK(t.apply(a(g, 1)) == a(g, 1));
    CHECK(transvection(a(g, 1) + b(g, 2)).apply(a(g, 1)) == a(g, 1));
}

TEST_CASE("transvection inverse composes to the identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int g = 3;
        HClass v = random_class(g, rng, 3);
        if (v.is_zero()) continue;
        CHECK(transvection(v).compose(transvection_inverse(v)) == HEndo::identity(2 * g));
    }
}

TEST_CASE("transvection along zero is rejected") {
    CHECK_THROWS_AS(transvection(HClass(3)), ParameterError);
}

TEST_CASE("transvections preserve the pairing") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int g = 3 + static_cast<int>(rng() % 2);
        HClass v = random_class(g, rng, 4);
        if (v.is_zero()) continue;
        const HEndo t = transvection(v);
        const HClass x = random_class(g, rng), y = random_class(g, rng);
        CHECK(pairing(t.apply(x), t.apply(y)) == pairing(x, y));
    }
}

TEST_CASE("factor mix matches its defining displays") {
    const int g = 4, k = 1;
    const HEndo phi = factor_mix(g, 1, k + 2);
    CHECK(phi.apply(a(g, 1)) == a(g, 1) - b(g, k + 2));
    CHECK(phi.apply(a(g, k + 2)) == a(g, k + 2) - b(g, 1));
    CHECK(phi.apply(b(g, 1)) == b(g, 1));           // fixes all other basis elements
    CHECK(phi.apply(b(g, k + 2)) == b(g, k + 2));
    CHECK(phi.apply(a(g, 2)) == a(g, 2));
}

TEST_CASE("factor mix is symmetric in its indices and symplectic") {
    CHECK(factor_mix(3, 1, 2) == factor_mix(3, 2, 1));
    CHECK(is_symplectic(factor_mix(3, 1, 2)));
    CHECK(is_symplectic(factor_mix(5, 2, 5)));
}

TEST_CASE("factor mix rejects bad indices") {
    CHECK_THROWS_AS(factor_mix(3, 2, 2), ParameterError);
    CHECK_THROWS_AS(factor_mix(3, 0, 2), ParameterError);
    CHECK_THROWS_AS(factor_mix(3, 1, 4), ParameterError);
}

TEST_CASE("is_symplectic accepts the identity and rejects a scaling") {
    CHECK(is_symplectic(HEndo::identity(6)));
    HEndo f = HEndo::identity(6);
    f.at(0, 0) = 2; // a1 -> 2 a1 scales i(a1, b1)
    CHECK_FALSE(is_symplectic(f));
    CHECK(is_symplectic(transvection(HClass::basis(3, 0) + HClass::basis(3, 3))));
}

TEST_CASE("surface params enforce the theorem bounds") {
    CHECK_THROWS_AS((SurfaceParams{2, 1, SurfaceKind::closed}.validate()), ParameterError);
    CHECK_THROWS_AS((SurfaceParams{3, 2, SurfaceKind::closed}.validate()), ParameterError);
    CHECK_THROWS_AS((SurfaceParams{4, 0, SurfaceKind::closed}.validate()), ParameterError);
    CHECK_NOTHROW((SurfaceParams{3, 1, SurfaceKind::punctured}.validate()));
    CHECK_NOTHROW((SurfaceParams{5, 3, SurfaceKind::bordered}.validate()));
}

TEST_CASE("generator list: size, symplecticity, random products") {
    CHECK_THROWS_AS(sp_generators(2), ParameterError);
    for (int g : {3, 4}) {
        const auto gens = sp_generators(g);
        CHECK(gens.size() >= size_t(2 * g)); // basis transvections alone
        for (const auto& f : gens) CHECK(is_symplectic(f));

        std::mt19937 rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            HEndo prod = HEndo::identity(2 * g);
            for (int j = 0; j < 5; ++j) prod = prod.compose(gens[rng() % gens.size()]);
            CHECK(is_symplectic(prod));
        }
    }
}

TEST_CASE("orbit of a1 under the generators saturates the full homology lattice") {
    const int g = 3;
    ext::IntRow seed(size_t(2 * g), 0);
    seed[0] = 1; // a1
    const auto outcome =
        ext::orbit_span_closure_matrices({seed}, sp_generators(g), ext::OrbitBudget{20000, 60.0});
    REQUIRE(outcome.conclusive);
    CHECK(outcome.snf.rank == 2 * g);
    for (const auto d : outcome.snf.divisors) CHECK(d == 1);
}
