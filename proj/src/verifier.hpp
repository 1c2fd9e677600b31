#pragma once

#include <optional>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "orbit.hpp"
#include "symplectic.hpp"

namespace torelli::verify {

inline constexpr const char* tool_version = "torelli-verify 0.1.0";

/// All runnable proposition ids, in the canonical (sweep) order.
const std::vector<std::string>& proposition_ids();

struct RunOptions {
    long long orbit_budget = 50000;
    double time_cap_seconds = 300.0;
    bool mirror_twists = false;
};

/// Dispatch to one proposition verifier. Propositions that need no surface
/// parameters (the lantern relation) accept an empty optional.
cert::Certificate run(const std::string& proposition, const std::optional<sym::SurfaceParams>& params,
                      const RunOptions& opts = {});

struct SweepSpec {
    int gmin = 3;
    int gmax = 4;
    std::vector<sym::SurfaceKind> kinds; // nonempty
    std::optional<int> fixed_k;          // all valid k when absent
    std::vector<std::string> propositions; // defaults to all ids
    int max_genus = 6;
};

struct SweepResult {
    std::vector<cert::Certificate> certificates;
    int passed = 0, failed = 0, inconclusive = 0;
    std::string summary() const;
};

/// Runs every applicable (proposition, g, k, kind) combination in a fixed
/// deterministic order. A single inconclusive certificate never aborts the
/// sweep.
SweepResult sweep(const SweepSpec& spec, const RunOptions& opts = {});

/// Deterministic file name for one certificate, e.g.
/// "tau-surjectivity_g3_k1_closed.json".
std::string certificate_filename(const cert::Certificate& c);

} // namespace torelli::verify
