#include "walkup/certificate.hpp"

namespace walkup {

nlohmann::json certificate_to_json(const Certificate& cert, bool canonical) {
    nlohmann::json j;
    j["schema"] = kCertificateSchema;
    j["toolkit_version"] = kToolkitVersion;
    j["subject"] = cert.subject;
    j["parameters"] = cert.parameters;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : cert.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["verdict"] = verdict_str(c.verdict);
        if (!c.detail.empty()) jc["detail"] = c.detail;
        if (!c.witness.empty()) {
            const std::string dumped = c.witness.dump();
            if (dumped.size() > kWitnessByteCap)
                jc["witness"] = {{"truncated", true}, {"original_bytes", dumped.size()}};
            else
                jc["witness"] = c.witness;
        }
        if (!canonical) jc["duration_ms"] = c.duration_ms;
        checks.push_back(std::move(jc));
    }
    j["checks"] = checks;
    j["overall"] = verdict_str(cert.overall());
    return j;
}

} // namespace walkup
