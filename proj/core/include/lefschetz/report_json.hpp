#pragma once

#include <nlohmann/json.hpp>

#include "lefschetz/bounds.hpp"
#include "lefschetz/jacobian.hpp"
#include "lefschetz/sweep.hpp"
#include "lefschetz/wlp.hpp"

namespace lefschetz {

/// Schema identifiers embedded in every emitted document; the published
/// schema file (schemas/report.schema.json) validates them.
inline constexpr const char* kReportSchemaVersion = "wlp-report-v1";
inline constexpr const char* kSweepCsvSchemaVersion = "sweep-csv-v1";

nlohmann::json to_json(const Interval& iv);
nlohmann::json to_json(const DegreeVerdict& v);
nlohmann::json to_json(const ArtinianSummary& s);
nlohmann::json to_json(const WlpReport& r);
nlohmann::json to_json(const SplittingBounds& s);
nlohmann::json to_json(const RegistryEntry& e);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const JacobianReport& r);
nlohmann::json to_json(const ExperimentConfig& c);
nlohmann::json to_json(const InstanceResult& r);
nlohmann::json to_json(const SweepResult& r);

}  // namespace lefschetz
