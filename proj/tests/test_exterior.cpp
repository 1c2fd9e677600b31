#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "exterior.hpp"
#include "smith.hpp"

using namespace torelli;
using namespace torelli::ext;

namespace {

HClass a(int g, int i) { return HClass::basis(g, sym::a_index(i)); }
HClass b(int g, int i) { return HClass::basis(g, sym::b_index(i)); }

HClass random_class(int g, std::mt19937& rng, int bound = 4) {
    std::uniform_int_distribution<i64> dist(-bound, bound);
    HClass v(g);
    for (auto& c : v.coeffs) c = dist(rng);
    return v;
}

HEndo random_symplectic(int g, std::mt19937& rng, int words = 4) {
    const auto gens = sym::sp_generators(g);
    HEndo f = HEndo::identity(2 * g);
    for (int i = 0; i < words; ++i) f = f.compose(gens[rng() % gens.size()]);
    return f;
}

Wedge3 monomial(int g, const Triple& t) {
    Wedge3 w(g);
    w.add_term(t, 1);
    return w;
}

} // namespace

TEST_CASE("triple rank is a colex bijection") {
    for (int dim : {6, 8, 12}) {
        int prev = -1;
        for (int r = 0; r < triple_count(dim); ++r) {
            const Triple t = triple_unrank(r, dim);
            CHECK(triple_rank(t) == r);
            CHECK(t.idx[0] < t.idx[1]);
            CHECK(t.idx[1] < t.idx[2]);
            CHECK(r == prev + 1);
            prev = r;
        }
    }
    CHECK(triple_rank(Triple{{0, 1, 2}}) == 0);
}

TEST_CASE("wedge canonicalization") {
    const int g = 3;
    const Wedge3 w = wedge(a(g, 1), b(g, 1), b(g, 2));
    CHECK(w == monomial(g, Triple{{0, 1, 3}}));
    CHECK(wedge(b(g, 1), a(g, 1), b(g, 2)) == monomial(g, Triple{{0, 1, 3}}) * -1);
    CHECK(wedge(a(g, 1), a(g, 1), b(g, 2)).is_zero());
}

TEST_CASE("wedge is trilinear and alternating on random classes") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int g = 3;
        const HClass x = random_class(g, rng), y = random_class(g, rng), z = random_class(g, rng);
        CHECK(wedge(x, x, y).is_zero());
        CHECK(wedge(x, y, y).is_zero());
        CHECK(wedge(x, y, z) == wedge(y, z, x));           // cyclic
        CHECK(wedge(x, y, z) == wedge(y, x, z) * -1);      // transposition
        CHECK(wedge(x + y, y, z) == wedge(x, y, z));       // linearity + alternation
    }
}

TEST_CASE("induced cube acts functorially") {
    const int g = 3;
    CHECK(induced_cube_apply(HEndo::identity(2 * g), monomial(g, Triple{{0, 2, 5}})) ==
          monomial(g, Triple{{0, 2, 5}}));

    // a1^(b1-a1)^b2 collapses back to a1^b1^b2
    const Wedge3 m = monomial(g, Triple{{0, 1, 3}});
    CHECK(induced_cube_apply(sym::transvection(a(g, 1)), m) == m);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const HEndo f = random_symplectic(g, rng), h = random_symplectic(g, rng);
        Wedge3 w(g);
        w.add_term(triple_unrank(static_cast<int>(rng() % size_t(triple_count(2 * g))), 2 * g),
                   1 + static_cast<i64>(rng() % 3));
        CHECK(induced_cube_apply(f.compose(h), w) == induced_cube_apply(f, induced_cube_apply(h, w)));
    }
}

TEST_CASE("cube matrix agrees with direct application") {
    const int g = 3;
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const HEndo f = random_symplectic(g, rng);
        const CubeMatrix cm = CubeMatrix::from_endo(f);
        const Wedge3 w = wedge(random_class(g, rng), random_class(g, rng), random_class(g, rng));
        CHECK(cm.apply_dense(w.dense()) == induced_cube_apply(f, w).dense());
    }
}

TEST_CASE("wedge with omega") {
    const int g = 3;
    CHECK(wedge_omega(HClass(g)).is_zero());
    // a1 ^ omega = a1^a2^b2 + a1^a3^b3 (the a1^a1^b1 term dies)
    Wedge3 expect(g);
    expect.add_term(Triple{{0, 2, 3}}, 1);
    expect.add_term(Triple{{0, 4, 5}}, 1);
    CHECK(wedge_omega(a(g, 1)) == expect);

    std::mt19937 rng(5);
    const HClass x = random_class(g, rng), y = random_class(g, rng);
    CHECK(wedge_omega(x + y) == wedge_omega(x) + wedge_omega(y));
}

TEST_CASE("omega embedding is equivariant under symplectic maps") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const int g = 3;
        const HEndo f = random_symplectic(g, rng);
        const HClass c = random_class(g, rng);
        CHECK(induced_cube_apply(f, wedge_omega(c)) == wedge_omega(f.apply(c)));
    }
}

TEST_CASE("omega rows span a saturated rank-2g sublattice") {
    for (int g : {3, 4}) {
        std::vector<Wedge3> rows;
        for (int i = 0; i < 2 * g; ++i) rows.push_back(wedge_omega(HClass::basis(g, i)));
        const auto verdict = lattice_saturation(rows, triple_count(2 * g));
        CHECK(verdict.rank == 2 * g);
        CHECK(verdict.saturated);
    }
}
