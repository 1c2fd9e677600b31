#include "certificate.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "errors.hpp"

namespace torelli::cert {

using ordered_json = nlohmann::ordered_json;

void Certificate::add_metric(std::string key, i64 value) {
    metrics.push_back(Metric{std::move(key), false, value, {}});
}

void Certificate::add_metric_list(std::string key, std::vector<i64> list) {
    metrics.push_back(Metric{std::move(key), true, 0, std::move(list)});
}

void Certificate::add_convention(std::string key, std::string value) {
    conventions.emplace_back(std::move(key), std::move(value));
}

const Certificate::Metric* Certificate::find_metric(const std::string& key) const {
    for (const auto& m : metrics)
        if (m.key == key) return &m;
    return nullptr;
}

std::string Certificate::to_json() const {
    ordered_json j;
    j["proposition"] = proposition;
    j["params"] = {{"genus", params.genus}, {"k", params.k}, {"surface", params.surface}};
    ordered_json conv = ordered_json::object();
    for (const auto& [k, v] : conventions) conv[k] = v;
    j["conventions"] = conv;
    ordered_json met = ordered_json::object();
    for (const auto& m : metrics) {
        if (m.is_list)
            met[m.key] = m.list;
        else
            met[m.key] = m.value;
    }
    j["metrics"] = met;
    j["verdict"] = verdict;
    j["elapsed_ms"] = 0; // pinned for byte-stable certificates
    j["tool_version"] = tool_version;
    return j.dump(2) + "\n";
}

Certificate Certificate::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    static const std::vector<std::string> top = {"proposition", "params",     "conventions", "metrics",
                                                 "verdict",     "elapsed_ms", "tool_version"};
    for (const auto& [key, _] : j.items())
        if (std::find(top.begin(), top.end(), key) == top.end())
            throw ParameterError("certificate has unknown field '" + key + "'");
    for (const auto& key : top)
        if (!j.contains(key)) throw ParameterError("certificate is missing field '" + key + "'");

    Certificate c;
    c.proposition = j["proposition"].get<std::string>();
    const auto& p = j["params"];
    for (const auto& [key, _] : p.items())
        if (key != "genus" && key != "k" && key != "surface")
            throw ParameterError("certificate params have unknown field '" + key + "'");
    c.params.genus = p["genus"].get<int>();
    c.params.k = p["k"].get<int>();
    c.params.surface = p["surface"].get<std::string>();
    for (const auto& [key, value] : j["conventions"].items())
        c.conventions.emplace_back(key, value.get<std::string>());
    for (const auto& [key, value] : j["metrics"].items()) {
        if (value.is_array()) {
            std::vector<i64> list;
            for (const auto& e : value) {
                if (!e.is_number_integer()) throw ParameterError("certificate metrics must be integers");
                list.push_back(e.get<i64>());
            }
            c.add_metric_list(key, std::move(list));
        } else if (value.is_number_integer()) {
            c.add_metric(key, value.get<i64>());
        } else {
            throw ParameterError("certificate metrics must be integers");
        }
    }
    c.verdict = j["verdict"].get<std::string>();
    if (c.verdict != "pass" && c.verdict != "fail" && c.verdict != "inconclusive")
        throw ParameterError("certificate verdict must be pass, fail or inconclusive");
    c.elapsed_ms = j["elapsed_ms"].get<i64>();
    c.tool_version = j["tool_version"].get<std::string>();
    return c;
}

void emit(const Certificate& cert, const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write certificate to " + tmp);
        out << cert.to_json();
        if (!out.good()) throw IoError("short write while emitting certificate to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot move certificate into place at " + path);
    }
}

} // namespace torelli::cert
