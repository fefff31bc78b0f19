#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace walkup {

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

// One verification step: verdict plus whatever structured witness data the
// check produced (counts, offending faces, traces).
struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::Inconclusive;
    std::string detail;
    nlohmann::json witness = nlohmann::json::object();
    double duration_ms = 0.0;

    bool passed() const { return verdict == Verdict::Pass; }
};

// Structured verification report, serialized as JSON by the CLI.
struct Certificate {
    std::string subject;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<CheckResult> checks;

    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void add(const std::string& name, bool ok, const std::string& detail = "",
             nlohmann::json witness = nlohmann::json::object()) {
        checks.push_back({name, ok ? Verdict::Pass : Verdict::Fail, detail,
                          std::move(witness), 0.0});
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.verdict != Verdict::Pass) return false;
        return true;
    }

    Verdict overall() const {
        bool inconclusive = false;
        for (const auto& c : checks) {
            if (c.verdict == Verdict::Fail) return Verdict::Fail;
            if (c.verdict == Verdict::Inconclusive) inconclusive = true;
        }
        return inconclusive ? Verdict::Inconclusive : Verdict::Pass;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

inline constexpr int kCertificateSchema = 1;
inline constexpr const char* kToolkitVersion = "1.0.0";
// Witnesses above this serialized size are replaced by a stub carrying an
// explicit truncated flag.
inline constexpr std::size_t kWitnessByteCap = 32768;

// `canonical` drops volatile fields (durations) so byte-for-byte comparison
// of reruns is meaningful.
nlohmann::json certificate_to_json(const Certificate& cert, bool canonical = false);

// Vertex permutations serialize as parallel one-line arrays.
template <typename Map>
nlohmann::json permutation_json(const Map& mapping) {
    nlohmann::json domain = nlohmann::json::array();
    nlohmann::json images = nlohmann::json::array();
    for (const auto& [from, to] : mapping) {
        domain.push_back(from);
        images.push_back(to);
    }
    return {{"domain", domain}, {"images", images}};
}

} // namespace walkup
