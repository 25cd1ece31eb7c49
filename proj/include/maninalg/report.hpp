#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "maninalg/poly.hpp"

namespace manin {

enum class Verdict { zero, nonzero_expected, nonzero_unexpected };

inline const char* verdict_str(Verdict v) {
    switch (v) {
    case Verdict::zero: return "zero";
    case Verdict::nonzero_expected: return "nonzero-expected";
    default: return "nonzero-UNEXPECTED";
    }
}

// Outcome of one named identity check. `expected` is runner metadata (a
// counterexample check is registered as nonzero-expected); it never reaches
// the serialized report.
struct IdentityReport {
    std::string name;
    std::string ring;
    std::vector<std::pair<std::string, std::string>> params;
    Verdict verdict = Verdict::zero;
    std::vector<std::string> residuals; // canonical renderings, nonzero only
    long millis = 0;
    Verdict expected = Verdict::zero;

    bool ok() const { return verdict == expected; }
};

// JSON schema: {name, ring, params, verdict, residuals, millis}. Wall time is
// reported in the text format only; the JSON field is pinned to 0 so that
// identical (config, seed) runs are byte-identical.
inline nlohmann::ordered_json report_json(const IdentityReport& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["ring"] = r.ring;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (auto& [k, v] : r.params) p[k] = v;
    j["params"] = p;
    j["verdict"] = verdict_str(r.verdict);
    j["residuals"] = r.residuals;
    j["millis"] = 0;
    return j;
}

inline std::string report_text(const IdentityReport& r) {
    std::string s = r.name + " [" + r.ring + "]";
    for (auto& [k, v] : r.params) s += " " + k + "=" + v;
    s += " -> " + std::string(verdict_str(r.verdict));
    s += r.ok() ? " (ok)" : " (MISMATCH)";
    s += " " + std::to_string(r.millis) + "ms";
    for (auto& res : r.residuals) s += "\n    " + res;
    return s;
}

// Check helpers --------------------------------------------------------------

inline void note_residual(IdentityReport& rep, const std::string& label, const Poly& p) {
    if (!p.is_zero()) rep.residuals.push_back(label + ": " + p.str());
}

inline void finish_zero_check(IdentityReport& rep) {
    rep.expected = Verdict::zero;
    rep.verdict = rep.residuals.empty() ? Verdict::zero : Verdict::nonzero_unexpected;
}

// For registered counterexamples: the residual must be nonzero, and when a
// golden rendering is pinned it must match exactly.
inline void finish_nonzero_check(IdentityReport& rep, const Poly& residual,
                                 const std::string& label,
                                 const std::string* golden_rendering = nullptr) {
    rep.expected = Verdict::nonzero_expected;
    if (residual.is_zero()) {
        rep.verdict = Verdict::zero;
        rep.residuals.push_back(label + ": 0 (vanished; rewriting bug?)");
        return;
    }
    rep.residuals.push_back(label + ": " + residual.str());
    if (golden_rendering && residual.str() != *golden_rendering) {
        rep.verdict = Verdict::nonzero_unexpected;
        rep.residuals.push_back("expected(golden): " + *golden_rendering);
        return;
    }
    rep.verdict = Verdict::nonzero_expected;
}

} // namespace manin
