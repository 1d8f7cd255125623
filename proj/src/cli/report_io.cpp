#include "airstack/cli/report_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

#include "airstack/core/error.hpp"

namespace airstack::cli {

namespace {

using nlohmann::json;

std::string format_rmse(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

json report_to_json(const netsim::MetricsReport& report) {
    json j;
    j["grants"] = report.grants;
    j["denials"] = report.denials;
    j["handoffs_total"] = report.handoffs_total;
    j["handoffs_without_reauth"] = report.handoffs_without_reauth;
    j["max_propagation_rounds"] = report.max_propagation_rounds;
    j["rogue_routed_deliveries"] = report.rogue_routed_deliveries;
    j["localization_rmse_m"] = report.localization_rmse_m;
    json hist = json::object();
    for (const auto& [rounds, blocks] : report.propagation_rounds_histogram)
        hist[std::to_string(rounds)] = blocks;
    j["propagation_rounds_histogram"] = hist;
    json per_muni = json::object();
    for (const auto& [network_id, metrics] : report.per_municipality) {
        per_muni[network_id] = {{"grants", metrics.grants},
                                {"denials", metrics.denials},
                                {"handoffs_total", metrics.handoffs_total},
                                {"handoffs_without_reauth", metrics.handoffs_without_reauth},
                                {"rogue_routed_deliveries", metrics.rogue_routed_deliveries}};
    }
    j["per_municipality"] = per_muni;
    return j;
}

}  // namespace

std::string reports_to_json(const std::vector<ReplicateReport>& reports) {
    json arr = json::array();
    for (const ReplicateReport& r : reports) {
        json j = report_to_json(r.report);
        j["replicate"] = r.replicate;
        j["seed"] = r.seed;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<ReplicateReport>& reports) {
    std::string out = kCsvHeader;
    out.push_back('\n');
    for (const ReplicateReport& r : reports) {
        out += std::to_string(r.replicate);
        out.push_back(',');
        out += std::to_string(r.seed);
        out.push_back(',');
        out += std::to_string(r.report.grants);
        out.push_back(',');
        out += std::to_string(r.report.denials);
        out.push_back(',');
        out += std::to_string(r.report.handoffs_total);
        out.push_back(',');
        out += std::to_string(r.report.handoffs_without_reauth);
        out.push_back(',');
        out += std::to_string(r.report.max_propagation_rounds);
        out.push_back(',');
        out += std::to_string(r.report.rogue_routed_deliveries);
        out.push_back(',');
        out += format_rmse(r.report.localization_rmse_m);
        out.push_back('\n');
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw core::Error("IoError", "cannot open \"" + path + "\" for writing");
    out << content;
    out.flush();
    if (!out)
        throw core::Error("IoError", "failed writing \"" + path + "\"");
}

}  // namespace airstack::cli
