#pragma once

#include "bergsamp/bounds.hpp"
#include "bergsamp/covering.hpp"
#include "bergsamp/region.hpp"
#include "bergsamp/remez.hpp"
#include "bergsamp/sampling.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bergsamp::io {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

ordered_json to_json(const Region& region);
Region region_from_json(const ordered_json& j);

ordered_json to_json(const BoundConfig& cfg);
BoundConfig bound_config_from_json(const ordered_json& j);

ordered_json to_json(const DensityReport& report);
ordered_json to_json(const CoveringReport& report);
ordered_json to_json(const SamplingResult& result);
ordered_json to_json(const GoodMassReport& report);
ordered_json to_json(const KovrijkineReport& report);

/// BoundReport rows carry the active config so every emitted comparison is
/// reproducible from the file alone.
ordered_json to_json(const BoundReport& report, const BoundConfig& cfg,
                     const std::string& region_label = "");

ordered_json to_json(const RemezSample& sample);
RemezSample remez_sample_from_json(const ordered_json& j);
ordered_json to_json(const RemezFit& fit);
RemezFit remez_fit_from_json(const ordered_json& j);

/// Combines bound_report files into the lower <= measured <= upper table.
ordered_json combine_reports(const std::vector<ordered_json>& reports);

ordered_json load_json(const std::string& path);
void save_json(const ordered_json& j, const std::string& path);

/// Rows of full-precision numbers under a header line.
void save_csv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows);

/// "builtin:<name>" resolves through the region catalog, anything else is a
/// JSON file path.
Region load_region(const std::string& spec);

} // namespace bergsamp::io
