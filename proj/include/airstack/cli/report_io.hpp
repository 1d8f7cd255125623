#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "airstack/netsim/metrics.hpp"

namespace airstack::cli {

struct ReplicateReport {
    std::uint32_t replicate = 0;
    std::uint64_t seed = 0;
    netsim::MetricsReport report;
};

/// JSON array of replicate objects, two-space indented, trailing newline.
std::string reports_to_json(const std::vector<ReplicateReport>& reports);

inline constexpr const char* kCsvHeader =
    "replicate,seed,grants,denials,handoffs_total,handoffs_without_reauth,"
    "max_propagation_rounds,rogue_routed_deliveries,localization_rmse_m";

/// Header plus one line per replicate; localization_rmse_m uses %.9g.
std::string reports_to_csv(const std::vector<ReplicateReport>& reports);

void write_file(const std::string& path, const std::string& content);

}  // namespace airstack::cli
