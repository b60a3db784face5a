#include "json_io.hpp"

#include <sstream>

namespace corr13 {

using nlohmann::json;

json params_json(const ParamSet& params)
{
    json j{{"p", params.p}, {"n", params.n}, {"q", params.q}};
    if (params.has_decimation) {
        j["i"] = params.i;
        j["d"] = params.d;
        j["g"] = params.g;
        j["case"] = case_tag_name(params.case_tag);
    }
    return j;
}

json cyc_json(const CycInt& value)
{
    const CycInt c = value.canonical();
    json coeffs = json::array();
    for (const auto& coeff : c.coeffs()) coeffs.push_back(coeff.str());
    const auto z = c.eval_numeric();
    json j{{"coeffs", coeffs}, {"re", z.real()}, {"im", z.imag()}};
    if (auto n = c.as_integer()) j["integer"] = n->str();
    return j;
}

json distribution_json(const Distribution& dist)
{
    json entries = json::array();
    for (const auto& entry : dist.sorted_by_real()) {
        json e = cyc_json(entry.value);
        e["frequency"] = entry.frequency.str();
        entries.push_back(std::move(e));
    }
    return json{{"entries", entries},
                {"distinct", dist.distinct()},
                {"total_mass", dist.total_mass().str()}};
}

json quad_json(const QuadPartition& quad, uint32_t n)
{
    return json{{"u", quad.u},
                {"v", quad.v},
                {"theta", quad.theta},
                {"omega", quad.omega_p},
                {"e_sum", even_binomial_sum(quad.u, quad.v, n).str()},
                {"o_sum", odd_binomial_sum(quad.u, quad.v, n).str()}};
}

json prediction_json(const PredictionTable& table)
{
    json rows = json::array();
    for (const auto& row : table.rows) {
        json r{{"label", row.label},
               {"value", row.value},
               {"frequency", row.frequency.str()}};
        if (row.l >= 0) r["l"] = row.l;
        if (row.exact) r["exact"] = row.exact->str();
        rows.push_back(std::move(r));
    }
    return json{{"rows", rows}, {"total_mass", table.total_mass().str()}};
}

json pair_counts_json(const PairCounts& counts)
{
    json rows = json::array();
    for (const auto& row : counts.counts) {
        json r = json::array();
        for (const auto& c : row) r.push_back(c.str());
        rows.push_back(std::move(r));
    }
    return json{{"counts", rows}, {"total", counts.total().str()}};
}

json periods_json(const GaussianPeriods& periods)
{
    json j;
    j["triple_sums"] = json::array();
    j["eta"] = json::array();
    for (int k = 0; k < 3; ++k) {
        j["triple_sums"].push_back(cyc_json(periods.coset_sum[k]));
        j["eta"].push_back(periods.numeric[k]);
    }
    return j;
}

json period_sets_json(const PeriodValueSets& sets)
{
    static const char* names[4] = {"eta", "two_eta_plus_next",
                                   "two_eta_plus_prev", "eta_plus_next"};
    json j;
    for (int s = 0; s < 4; ++s) {
        j[names[s]] = json::array({sets.sets[s][0], sets.sets[s][1],
                                   sets.sets[s][2]});
    }
    return j;
}

json weight_distribution_json(const WeightDistribution& dist)
{
    json rows = json::array();
    for (const auto& [weight, count] : dist.counts) {
        rows.push_back(json{{"weight", weight}, {"count", count.str()}});
    }
    return json{{"rows", rows},
                {"distinct", dist.counts.size()},
                {"total_mass", dist.total_mass().str()}};
}

json match_report_json(const MatchReport& report)
{
    json pairs = json::array();
    for (const auto& pair : report.pairs) {
        pairs.push_back(json{{"label", pair.label},
                             {"predicted", pair.predicted},
                             {"observed", pair.observed},
                             {"gap", pair.gap},
                             {"predicted_frequency", pair.predicted_frequency.str()},
                             {"observed_frequency", pair.observed_frequency.str()},
                             {"observed_exact", pair.observed_exact}});
    }
    return json{{"verdict", verdict_name(report.verdict)},
                {"pairs", pairs},
                {"notes", report.notes}};
}

json partition_counts_json(const PartitionCounts& counts)
{
    json cells = json::object();
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            for (int l = 0; l < 3; ++l) {
                cells[std::to_string(j) + std::to_string(k) + std::to_string(l)] =
                    counts.cell(j, k, l).str();
            }
        }
    }
    return json{{"cells", cells}, {"in_g", counts.in_g.str()}};
}

json triple_sum_json(const TripleSumReport& report)
{
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back(json{{"u", v.u}, {"v", v.v}, {"detail", v.detail}});
    }
    return json{{"samples", report.samples},
                {"zero_sums", report.zero_sums},
                {"full_sums", report.full_sums},
                {"violations", violations}};
}

std::string distribution_csv(const Distribution& dist)
{
    std::ostringstream os;
    os << "value,re,im,frequency\n";
    for (const auto& entry : dist.sorted_by_real()) {
        os << '"' << entry.value.to_string() << "\"," << entry.real << ','
           << entry.imag << ',' << entry.frequency.str() << '\n';
    }
    return os.str();
}

std::string prediction_csv(const PredictionTable& table)
{
    std::ostringstream os;
    os << "label,l,value,frequency\n";
    for (const auto& row : table.rows) {
        os << row.label << ',' << row.l << ',' << row.value << ','
           << row.frequency.str() << '\n';
    }
    return os.str();
}

std::string weight_distribution_csv(const WeightDistribution& dist)
{
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [weight, count] : dist.counts) {
        os << weight << ',' << count.str() << '\n';
    }
    return os.str();
}

} // namespace corr13
