#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "smith.hpp"

namespace torelli::ext {

/// Budget for one orbit-span computation. Exceeding either limit yields an
/// inconclusive outcome, never a false verdict.
struct OrbitBudget {
    long long max_examined = 50000; // generator images computed
    double time_cap_seconds = 300.0;
};

struct OrbitOutcome {
    bool conclusive = true;
    long long examined = 0;   // generator images computed
    long long orbit_size = 0; // seeds plus images that enlarged the span
    IntRows rows;             // echelon rows spanning the final lattice
    SmithResult snf;          // of the final (or last reached) span
};

/// Breadth-first span closure: applies every generator to every vector that
/// has enlarged the running lattice, until a full frontier generation adds
/// nothing. Because generators act unimodularly, the fixed point is exactly
/// the smallest generator-stable lattice containing the seeds, i.e. the
/// Z-span of the seed orbit.
OrbitOutcome orbit_span_closure(const IntRows& seeds,
                                const std::vector<CubeMatrix>& generators,
                                int ambient_dim,
                                const OrbitBudget& budget);

/// Same closure for plain matrix actions on Z^d (used for sanity checks on H
/// itself).
OrbitOutcome orbit_span_closure_matrices(const IntRows& seeds,
                                         const std::vector<HEndo>& generators,
                                         const OrbitBudget& budget);

// --- GF(2) span closure -----------------------------------------------------

/// Dense F2 row of fixed bit width.
struct F2Row {
    std::vector<std::uint64_t> bits;

    explicit F2Row(int width = 0) : bits((static_cast<size_t>(width) + 63) / 64, 0) {}
    bool get(int i) const { return (bits[size_t(i) / 64] >> (size_t(i) % 64)) & 1; }
    void flip(int i) { bits[size_t(i) / 64] ^= (std::uint64_t{1} << (size_t(i) % 64)); }
    void set(int i, bool v) {
        if (get(i) != v) flip(i);
    }
    void operator^=(const F2Row& o) {
        for (size_t w = 0; w < bits.size(); ++w) bits[w] ^= o.bits[w];
    }
    bool is_zero() const {
        for (auto w : bits)
            if (w) return false;
        return true;
    }
    int leading_bit() const; // -1 if zero
    bool operator==(const F2Row& o) const = default;
};

/// Reduced row-echelon F2 span with incremental insertion.
class F2Span {
  public:
    explicit F2Span(int width) : width_(width) {}
    bool add(F2Row v); // true iff the dimension grew
    bool contains(F2Row v) const;
    int dim() const { return static_cast<int>(rows_.size()); }

  private:
    int width_;
    std::vector<F2Row> rows_;
    std::vector<int> leads_;
};

struct F2OrbitOutcome {
    bool conclusive = true;
    long long examined = 0;
    long long orbit_size = 0;
    int dimension = 0;
};

F2OrbitOutcome f2_span_closure(const std::vector<F2Row>& seeds,
                               const std::vector<std::function<F2Row(const F2Row&)>>& generators,
                               int width,
                               const OrbitBudget& budget);

} // namespace torelli::ext
