// Test-side oracles, kept independent of the library's lattice code paths:
// a textbook Smith normal form over arbitrary-precision integers (always
// reduces at the top-left corner, no pivot heuristics) and a depth-bounded
// brute-force orbit enumeration over explicit vectors.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <vector>

#include "exterior.hpp"
#include "symplectic.hpp"

namespace oracle {

using big = boost::multiprecision::cpp_int;
using BigMat = std::vector<std::vector<big>>;

inline BigMat to_big(const std::vector<std::vector<torelli::i64>>& rows) {
    BigMat m;
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    return m;
}

// divisors in a divisibility chain, zero entries dropped
inline std::vector<big> naive_snf(BigMat m) {
    std::vector<big> out;
    if (m.empty() || m[0].empty()) return out;
    const size_t R = m.size(), C = m[0].size();
    size_t t = 0;
    while (t < R && t < C) {
        // find any nonzero entry in the submatrix
        size_t pi = R, pj = C;
        for (size_t i = t; i < R && pi == R; ++i)
            for (size_t j = t; j < C; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == R) break;
        std::swap(m[t], m[pi]);
        for (size_t i = 0; i < R; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < R; ++i)
                while (m[i][t] != 0) {
                    const big q = m[i][t] / m[t][t];
                    for (size_t j = t; j < C; ++j) m[i][j] -= q * m[t][j];
                    if (m[i][t] != 0) std::swap(m[t], m[i]);
                }
            for (size_t j = t + 1; j < C; ++j)
                while (m[t][j] != 0) {
                    const big q = m[t][j] / m[t][t];
                    for (size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
                    if (m[t][j] != 0) {
                        for (size_t i = 0; i < R; ++i) std::swap(m[i][t], m[i][j]);
                        clean = false;
                    }
                }
            if (!clean) continue;
            // pivot must divide the rest of the submatrix
            for (size_t i = t + 1; i < R && clean; ++i)
                for (size_t j = t + 1; j < C && clean; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (size_t jj = t; jj < C; ++jj) m[t][jj] += m[i][jj];
                        clean = false;
                    }
        }
        out.push_back(abs(m[t][t]));
        ++t;
    }
    return out;
}

// breadth-first orbit of seed vectors under matrix generators, as explicit
// distinct vectors up to the given depth
inline std::vector<std::vector<torelli::i64>> brute_orbit(
    const std::vector<std::vector<torelli::i64>>& seeds,
    const std::vector<torelli::ext::CubeMatrix>& gens, int depth) {
    std::set<std::vector<torelli::i64>> seen(seeds.begin(), seeds.end());
    std::vector<std::vector<torelli::i64>> frontier = seeds;
    for (int d = 0; d < depth; ++d) {
        std::vector<std::vector<torelli::i64>> next;
        for (const auto& v : frontier)
            for (const auto& g : gens) {
                auto img = g.apply_dense(v);
                if (seen.insert(img).second) next.push_back(std::move(img));
            }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return {seen.begin(), seen.end()};
}

// pairing by explicit bilinear expansion over the basis table
inline torelli::i64 pairing_by_expansion(const torelli::sym::HClass& x, const torelli::sym::HClass& y) {
    const int d = 2 * x.genus();
    torelli::i64 acc = 0;
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
            torelli::i64 form = 0;
            if (p % 2 == 0 && q == p + 1) form = 1;
            if (p % 2 == 1 && q == p - 1) form = -1;
            acc += x.coeffs[size_t(p)] * y.coeffs[size_t(q)] * form;
        }
    return acc;
}

} // namespace oracle
