#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "errors.hpp"
#include "naive_oracle.hpp"
#include "smith.hpp"

using namespace torelli;
using namespace torelli::ext;

namespace {

Wedge3 monomial(int g, const Triple& t, i64 c = 1) {
    Wedge3 w(g);
    w.add_term(t, c);
    return w;
}

IntRows random_rows(std::mt19937& rng, int r, int c, int bound) {
    std::uniform_int_distribution<i64> dist(-bound, bound);
    IntRows rows(size_t(r), IntRow(size_t(c), 0));
    for (auto& row : rows)
        for (auto& v : row) v = dist(rng);
    return rows;
}

} // namespace

TEST_CASE("smith normal form on known matrices") {
    CHECK(smith_normal_form({{2, 0}, {0, 3}}).divisors == std::vector<i64>{1, 6});
    CHECK(smith_normal_form({{1, 0}, {0, 1}}).divisors == std::vector<i64>{1, 1});
    CHECK(smith_normal_form({{0, 0}, {0, 0}}).rank == 0);
    CHECK(smith_normal_form({{4, 2}, {2, 4}}).divisors == std::vector<i64>{2, 6});
    CHECK(smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}).divisors ==
          std::vector<i64>{2, 2, 156}); // classic worked example
}

TEST_CASE("smith normal form agrees with the naive big-integer oracle") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 120; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
        const IntRows rows = random_rows(rng, r, c, 7);
        const auto got = smith_normal_form(rows);
        std::vector<oracle::big> expect = oracle::naive_snf(oracle::to_big(rows));
        // drop zero "divisors" the oracle never emits; compare chains
        REQUIRE(got.divisors.size() == expect.size());
        for (size_t i = 0; i < expect.size(); ++i) CHECK(oracle::big(got.divisors[i]) == expect[i]);
        for (size_t i = 1; i < got.divisors.size(); ++i)
            CHECK(got.divisors[i] % got.divisors[i - 1] == 0);
    }
}

TEST_CASE("lattice accumulator tracks span, membership and growth") {
    LatticeAccumulator acc(3);
    CHECK(acc.add({2, 0, 0}));
    CHECK_FALSE(acc.add({4, 0, 0}));
    CHECK(acc.contains({6, 0, 0}));
    CHECK_FALSE(acc.contains({1, 0, 0}));
    CHECK(acc.add({3, 0, 0})); // gcd combine shrinks the pivot to 1
    CHECK(acc.contains({1, 0, 0}));
    CHECK(acc.add({0, 0, 5}));
    CHECK(acc.rank() == 2);
    CHECK_FALSE(acc.contains({0, 1, 0}));
}

TEST_CASE("accumulator span equals the naive span on random data") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 80; ++trial) {
        const int c = 2 + static_cast<int>(rng() % 4);
        const IntRows rows = random_rows(rng, 1 + static_cast<int>(rng() % 5), c, 5);
        LatticeAccumulator acc(c);
        for (const auto& r : rows) acc.add(r);
        const auto got = acc.snf();
        const auto expect = oracle::naive_snf(oracle::to_big(rows));
        REQUIRE(size_t(got.rank) == expect.size());
        for (size_t i = 0; i < expect.size(); ++i) CHECK(oracle::big(got.divisors[i]) == expect[i]);
        // membership of random combinations of the input rows
        IntRow combo(size_t(c), 0);
        for (const auto& r : rows) {
            const i64 coeff = static_cast<i64>(rng() % 5) - 2;
            for (int j = 0; j < c; ++j) combo[size_t(j)] += coeff * r[size_t(j)];
        }
        CHECK(acc.contains(combo));
    }
}

TEST_CASE("lattice saturation verdicts") {
    const int g = 3;
    const int ambient = triple_count(2 * g);

    const auto single = lattice_saturation({monomial(g, Triple{{0, 1, 3}}, 2)}, ambient);
    CHECK(single.rank == 1);
    CHECK(single.elementary_divisors == std::vector<i64>{2});
    CHECK_FALSE(single.saturated);

    std::vector<Wedge3> all;
    for (int r = 0; r < ambient; ++r) all.push_back(monomial(g, triple_unrank(r, 2 * g)));
    const auto full = lattice_saturation(all, ambient);
    CHECK(full.rank == ambient);
    CHECK(full.saturated);

    CHECK_THROWS_AS(lattice_saturation({}, ambient), ParameterError);
}

TEST_CASE("saturation is invariant under row permutation and sign flips") {
    std::mt19937 rng(55);
    const int g = 3;
    const int ambient = triple_count(2 * g);
    std::vector<Wedge3> rows;
    for (int i = 0; i < 6; ++i) {
        Wedge3 w(g);
        for (int j = 0; j < 3; ++j)
            w.add_term(triple_unrank(static_cast<int>(rng() % size_t(ambient)), 2 * g),
                       static_cast<i64>(rng() % 7) - 3);
        rows.push_back(w);
    }
    const auto base = lattice_saturation(rows, ambient);
    std::shuffle(rows.begin(), rows.end(), rng);
    for (auto& w : rows)
        if (rng() % 2) w = w * -1;
    const auto shuffled = lattice_saturation(rows, ambient);
    CHECK(base.rank == shuffled.rank);
    CHECK(base.elementary_divisors == shuffled.elementary_divisors);
}

TEST_CASE("quotient by the omega image") {
    const int g = 3;
    const int ambient = triple_count(2 * g);

    CHECK(quotient_mod_H({}, g).rank == 0);

    const auto killed = quotient_mod_H({wedge_omega(HClass::basis(g, 0))}, g);
    CHECK(killed.rank == 0);

    std::vector<Wedge3> all;
    for (int r = 0; r < ambient; ++r) all.push_back(monomial(g, triple_unrank(r, 2 * g)));
    const auto full = quotient_mod_H(all, g);
    CHECK(full.rank == ambient - 2 * g); // 20 - 6 = 14
    CHECK(full.rank == 14);
    CHECK(full.saturated);
}

TEST_CASE("quotient context projection kills exactly the omega image") {
    const int g = 3;
    const auto q = QuotientContext::for_genus(g);
    CHECK(q.quotient_dim() == triple_count(2 * g) - 2 * g);
    std::mt19937 rng(77);
    std::uniform_int_distribution<i64> dist(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        HClass c(g);
        for (auto& v : c.coeffs) v = dist(rng);
        CHECK(q.in_omega_image(wedge_omega(c)));
    }
    CHECK_FALSE(q.in_omega_image(monomial(g, Triple{{0, 1, 3}})));
}
