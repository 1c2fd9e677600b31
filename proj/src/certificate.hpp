#pragma once

#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"

namespace torelli::cert {

/// Structured verification report: parameters, conventions, integer metrics
/// and a verdict. Serialization is canonical (fixed key order, integers
/// only) so certificate files are byte-stable regression artifacts.
struct Certificate {
    struct ParamsEcho {
        int genus = 0;
        int k = 0;
        std::string surface = "n/a";
        bool operator==(const ParamsEcho&) const = default;
    };
    struct Metric {
        std::string key;
        bool is_list = false;
        i64 value = 0;
        std::vector<i64> list;
        bool operator==(const Metric&) const = default;
    };

    std::string proposition;
    ParamsEcho params;
    std::vector<std::pair<std::string, std::string>> conventions; // insertion order
    std::vector<Metric> metrics;                                  // insertion order
    std::string verdict; // pass | fail | inconclusive
    i64 elapsed_ms = 0;  // measured at run time; serialized as 0 (see emit)
    std::string tool_version;

    void add_metric(std::string key, i64 value);
    void add_metric_list(std::string key, std::vector<i64> list);
    void add_convention(std::string key, std::string value);
    const Metric* find_metric(const std::string& key) const;

    bool passed() const { return verdict == "pass"; }

    /// Canonical JSON: key order (proposition, params, conventions, metrics,
    /// verdict, elapsed_ms, tool_version), UTF-8, trailing newline. The
    /// elapsed_ms field is pinned to 0 in the serialized form so repeated
    /// runs produce identical bytes.
    std::string to_json() const;

    /// Strict parse: unknown keys anywhere are rejected.
    static Certificate from_json(const std::string& text);

    bool operator==(const Certificate&) const = default;
};

/// Atomic write (temp file + rename) of the canonical JSON.
void emit(const Certificate& cert, const std::string& path);

} // namespace torelli::cert
