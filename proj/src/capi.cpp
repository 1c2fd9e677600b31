#include "torelli.h"

#include <optional>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "errors.hpp"
#include "verifier.hpp"

using torelli::cert::Certificate;

struct torelli_cert {
    Certificate cert;
    std::string json;     // cached canonical serialization
    std::string filename; // deterministic suggestion
};

struct torelli_sweep_result {
    std::vector<torelli_cert> certs;
    std::string summary;
    int passed = 0, failed = 0, inconclusive = 0;
};

namespace {

thread_local std::string g_last_error;

torelli_status fail(torelli_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

torelli_cert wrap(Certificate c) {
    torelli_cert out;
    out.json = c.to_json();
    out.filename = torelli::verify::certificate_filename(c);
    out.cert = std::move(c);
    return out;
}

std::vector<std::string> split_csv(const char* csv) {
    std::vector<std::string> out;
    if (!csv) return out;
    std::string cur;
    for (const char* p = csv;; ++p) {
        if (*p == ',' || *p == '\0') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
            if (*p == '\0') break;
        } else if (*p != ' ') {
            cur += *p;
        }
    }
    return out;
}

torelli::verify::RunOptions options(long long budget, double time_cap, int mirror) {
    torelli::verify::RunOptions opts;
    if (budget > 0) opts.orbit_budget = budget;
    if (time_cap > 0) opts.time_cap_seconds = time_cap;
    opts.mirror_twists = mirror != 0;
    return opts;
}

} // namespace

extern "C" {

const char* torelli_version(void) { return torelli::verify::tool_version; }

const char* torelli_last_error(void) { return g_last_error.c_str(); }

torelli_status torelli_run(const char* proposition, int genus, int k, const char* surface,
                           long long orbit_budget, double time_cap_seconds, int mirror_twists,
                           torelli_cert** out) {
    if (!out || !proposition) return fail(TORELLI_E_USAGE, "null argument");
    *out = nullptr;
    try {
        std::optional<torelli::sym::SurfaceParams> params;
        if (surface && *surface)
            params = torelli::sym::SurfaceParams{genus, k, torelli::sym::kind_from_string(surface)};
        Certificate c = torelli::verify::run(proposition, params,
                                             options(orbit_budget, time_cap_seconds, mirror_twists));
        *out = new torelli_cert(wrap(std::move(c)));
        return TORELLI_OK;
    } catch (const torelli::UsageError& e) {
        return fail(TORELLI_E_USAGE, e.what());
    } catch (const torelli::ParameterError& e) {
        return fail(TORELLI_E_PARAMS, e.what());
    } catch (const torelli::IoError& e) {
        return fail(TORELLI_E_IO, e.what());
    } catch (const std::exception& e) {
        return fail(TORELLI_E_INTERNAL, e.what());
    }
}

const char* torelli_cert_json(const torelli_cert* cert) { return cert ? cert->json.c_str() : nullptr; }
const char* torelli_cert_verdict(const torelli_cert* cert) {
    return cert ? cert->cert.verdict.c_str() : nullptr;
}
const char* torelli_cert_proposition(const torelli_cert* cert) {
    return cert ? cert->cert.proposition.c_str() : nullptr;
}
long long torelli_cert_elapsed_ms(const torelli_cert* cert) { return cert ? cert->cert.elapsed_ms : -1; }

torelli_status torelli_cert_write(const torelli_cert* cert, const char* path) {
    if (!cert || !path) return fail(TORELLI_E_USAGE, "null argument");
    try {
        torelli::cert::emit(cert->cert, path);
        return TORELLI_OK;
    } catch (const torelli::IoError& e) {
        return fail(TORELLI_E_IO, e.what());
    } catch (const std::exception& e) {
        return fail(TORELLI_E_INTERNAL, e.what());
    }
}

void torelli_cert_free(torelli_cert* cert) { delete cert; }

torelli_status torelli_sweep(int gmin, int gmax, const char* kinds_csv, const char* propositions_csv,
                             int fixed_k, long long orbit_budget, double time_cap_seconds,
                             torelli_sweep_result** out) {
    if (!out) return fail(TORELLI_E_USAGE, "null argument");
    *out = nullptr;
    try {
        torelli::verify::SweepSpec spec;
        spec.gmin = gmin;
        spec.gmax = gmax;
        for (const auto& s : split_csv(kinds_csv)) spec.kinds.push_back(torelli::sym::kind_from_string(s));
        spec.propositions = split_csv(propositions_csv);
        if (fixed_k > 0) spec.fixed_k = fixed_k;
        const auto result = torelli::verify::sweep(spec, options(orbit_budget, time_cap_seconds, 0));

        auto* res = new torelli_sweep_result();
        for (const auto& c : result.certificates) res->certs.push_back(wrap(c));
        res->summary = result.summary();
        res->passed = result.passed;
        res->failed = result.failed;
        res->inconclusive = result.inconclusive;
        *out = res;
        return TORELLI_OK;
    } catch (const torelli::UsageError& e) {
        return fail(TORELLI_E_USAGE, e.what());
    } catch (const torelli::ParameterError& e) {
        return fail(TORELLI_E_PARAMS, e.what());
    } catch (const std::exception& e) {
        return fail(TORELLI_E_INTERNAL, e.what());
    }
}

size_t torelli_sweep_count(const torelli_sweep_result* sweep) { return sweep ? sweep->certs.size() : 0; }

const torelli_cert* torelli_sweep_cert(const torelli_sweep_result* sweep, size_t index) {
    if (!sweep || index >= sweep->certs.size()) return nullptr;
    return &sweep->certs[index];
}

const char* torelli_sweep_filename(const torelli_sweep_result* sweep, size_t index) {
    if (!sweep || index >= sweep->certs.size()) return nullptr;
    return sweep->certs[index].filename.c_str();
}

const char* torelli_sweep_summary(const torelli_sweep_result* sweep) {
    return sweep ? sweep->summary.c_str() : nullptr;
}
int torelli_sweep_passed(const torelli_sweep_result* sweep) { return sweep ? sweep->passed : 0; }
int torelli_sweep_failed(const torelli_sweep_result* sweep) { return sweep ? sweep->failed : 0; }
int torelli_sweep_inconclusive(const torelli_sweep_result* sweep) {
    return sweep ? sweep->inconclusive : 0;
}

void torelli_sweep_free(torelli_sweep_result* sweep) { delete sweep; }

} // extern "C"
