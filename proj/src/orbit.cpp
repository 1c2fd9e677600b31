#include "orbit.hpp"

#include <deque>

namespace torelli::ext {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Apply>
OrbitOutcome closure_impl(const IntRows& seeds, size_t gen_count, Apply&& apply, int ambient_dim,
                          const OrbitBudget& budget) {
    OrbitOutcome out;
    LatticeAccumulator lattice(ambient_dim);
    std::deque<IntRow> queue;
    const auto start = Clock::now();

    for (const auto& s : seeds) {
        if (lattice.add(s)) {
            queue.push_back(s);
            ++out.orbit_size;
        }
    }

    while (!queue.empty()) {
        IntRow v = std::move(queue.front());
        queue.pop_front();
        for (size_t gi = 0; gi < gen_count; ++gi) {
            ++out.examined;
            if (out.examined > budget.max_examined ||
                std::chrono::duration<double>(Clock::now() - start).count() > budget.time_cap_seconds) {
                out.conclusive = false;
                out.rows = lattice.rows();
                out.snf = lattice.snf();
                return out;
            }
            IntRow img = apply(gi, v);
            if (lattice.add(img)) {
                queue.push_back(std::move(img));
                ++out.orbit_size;
            }
        }
    }
    out.rows = lattice.rows();
    out.snf = lattice.snf();
    return out;
}

} // namespace

OrbitOutcome orbit_span_closure(const IntRows& seeds, const std::vector<CubeMatrix>& generators,
                                int ambient_dim, const OrbitBudget& budget) {
    return closure_impl(
        seeds, generators.size(),
        [&](size_t gi, const IntRow& v) { return generators[gi].apply_dense(v); }, ambient_dim, budget);
}

OrbitOutcome orbit_span_closure_matrices(const IntRows& seeds, const std::vector<HEndo>& generators,
                                         const OrbitBudget& budget) {
    const int dim = generators.empty() ? (seeds.empty() ? 0 : static_cast<int>(seeds[0].size()))
                                       : generators[0].dim;
    return closure_impl(
        seeds, generators.size(),
        [&](size_t gi, const IntRow& v) {
            const auto& f = generators[gi];
            IntRow out(v.size(), 0);
            for (int p = 0; p < f.dim; ++p) {
                i64 acc = 0;
                for (int q = 0; q < f.dim; ++q)
                    if (v[size_t(q)] != 0) checked_addmul(acc, f.at(p, q), v[size_t(q)]);
                out[size_t(p)] = acc;
            }
            return out;
        },
        dim, budget);
}

int F2Row::leading_bit() const {
    for (size_t w = 0; w < bits.size(); ++w)
        if (bits[w]) return static_cast<int>(w * 64) + __builtin_ctzll(bits[w]);
    return -1;
}

bool F2Span::add(F2Row v) {
    for (size_t i = 0; i < rows_.size(); ++i)
        if (v.get(leads_[i])) v ^= rows_[i];
    const int lead = v.leading_bit();
    if (lead < 0) return false;
    for (size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(lead)) rows_[i] ^= v;
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
}

bool F2Span::contains(F2Row v) const {
    for (size_t i = 0; i < rows_.size(); ++i)
        if (v.get(leads_[i])) v ^= rows_[i];
    return v.is_zero();
}

F2OrbitOutcome f2_span_closure(const std::vector<F2Row>& seeds,
                               const std::vector<std::function<F2Row(const F2Row&)>>& generators,
                               int width, const OrbitBudget& budget) {
    F2OrbitOutcome out;
    F2Span span(width);
    std::deque<F2Row> queue;
    const auto start = Clock::now();

    for (const auto& s : seeds)
        if (span.add(s)) {
            queue.push_back(s);
            ++out.orbit_size;
        }

    while (!queue.empty()) {
        F2Row v = std::move(queue.front());
        queue.pop_front();
        for (const auto& gen : generators) {
            ++out.examined;
            if (out.examined > budget.max_examined ||
                std::chrono::duration<double>(Clock::now() - start).count() > budget.time_cap_seconds) {
                out.conclusive = false;
                out.dimension = span.dim();
                return out;
            }
            F2Row img = gen(v);
            if (span.add(img)) {
                queue.push_back(std::move(img));
                ++out.orbit_size;
            }
        }
    }
    out.dimension = span.dim();
    return out;
}

} // namespace torelli::ext
