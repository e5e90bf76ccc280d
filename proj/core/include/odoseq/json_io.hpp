#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "odoseq/analysis.hpp"
#include "odoseq/builders.hpp"
#include "odoseq/toeplitz.hpp"
#include "odoseq/words.hpp"

namespace odoseq {

using json = nlohmann::json;

// Construction-sequence interchange:
//   { "alphabet": ["a","b"], "coeffs": [10,12,...],
//     "levels": [ { "words": [[0,0,1,...], ...] }, ... ],
//     "generator": { "name": "...", "params": {...} } }   // optional
// Level t of "levels" holds level t+1 words as index vectors into level t
// (level 0 is the alphabet). Word order is significant. Integers that do
// not fit a JSON number are emitted as decimal strings.
json sequence_to_json(const ConstructionSequence& seq);
ConstructionSequence sequence_from_json(const json& j);

// Toeplitz spec interchange:
//   { "alphabet": [...], "stages": [ { "period": 4, "fill": {"1": "a"} } ] }
// with residues as decimal-string keys.
json toeplitz_spec_to_json(const ToeplitzSpec& spec);
ToeplitzSpec toeplitz_spec_from_json(const json& j);

// Reports (exact rationals serialize as "p/q" strings).
json validation_report_to_json(const ValidationReport& report);
json frequency_profile_to_json(const FrequencyProfile& profile);
json swp_result_to_json(const SwpResult& result);
json measure_bound_report_to_json(const MeasureBoundReport& report);
json thinning_result_to_json(const ThinningResult& result);
json tower_budget_to_json(const TowerBudget& budget);
json painting_plan_to_json(const PaintingPlan& plan);
json essential_period_list_to_json(const EssentialPeriodList& list);
json aperiodicity_report_to_json(const AperiodicityReport& report);

ConstructionSequence load_sequence(const std::string& path);
void save_sequence(const ConstructionSequence& seq, const std::string& path);
ToeplitzSpec load_toeplitz_spec(const std::string& path);
void save_json(const json& j, const std::string& path);

}  // namespace odoseq
