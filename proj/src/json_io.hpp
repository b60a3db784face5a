#pragma once

#include <json.hpp>

#include "closed_form.hpp"
#include "codes.hpp"
#include "cyclotomy.hpp"
#include "cyclotomic.hpp"
#include "match.hpp"
#include "params.hpp"
#include "sequences.hpp"

namespace corr13 {

// Exact integers serialize as decimal strings so JSON consumers never
// overflow; doubles use the default shortest round-trip form.

nlohmann::json params_json(const ParamSet& params);
nlohmann::json cyc_json(const CycInt& value);
nlohmann::json distribution_json(const Distribution& dist);
nlohmann::json quad_json(const QuadPartition& quad, uint32_t n);
nlohmann::json prediction_json(const PredictionTable& table);
nlohmann::json pair_counts_json(const PairCounts& counts);
nlohmann::json periods_json(const GaussianPeriods& periods);
nlohmann::json period_sets_json(const PeriodValueSets& sets);
nlohmann::json weight_distribution_json(const WeightDistribution& dist);
nlohmann::json match_report_json(const MatchReport& report);
nlohmann::json partition_counts_json(const PartitionCounts& counts);
nlohmann::json triple_sum_json(const TripleSumReport& report);

std::string distribution_csv(const Distribution& dist);
std::string prediction_csv(const PredictionTable& table);
std::string weight_distribution_csv(const WeightDistribution& dist);

} // namespace corr13
