#include "match.hpp"

#include <algorithm>
#include <cmath>

namespace corr13 {

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::FrequencyMismatch: return "FrequencyMismatch";
    case Verdict::UnmatchedValue: return "UnmatchedValue";
    case Verdict::ToleranceExceeded: return "ToleranceExceeded";
    }
    return "Unknown";
}

double default_tolerance(const ParamSet& params)
{
    return 1e-6 * std::pow(double(params.p), params.n / 2.0);
}

namespace {

struct Cluster {
    std::string label;
    double value = 0.0;
    BigInt frequency;
    std::string exact;
};

// Chain-clusters sorted items whose neighbours lie within tol; the cluster
// keeps the frequency sum and the first representative value.
std::vector<Cluster> clusterize(std::vector<Cluster> items, double tol)
{
    std::stable_sort(items.begin(), items.end(),
                     [](const Cluster& a, const Cluster& b) {
                         return a.value < b.value;
                     });
    std::vector<Cluster> out;
    for (auto& item : items) {
        if (!out.empty() && item.value - out.back().value < tol) {
            out.back().frequency += item.frequency;
            if (out.back().label != item.label) {
                out.back().label += "+" + item.label;
            }
            if (!item.exact.empty() && out.back().exact != item.exact) {
                if (!out.back().exact.empty()) out.back().exact += "+";
                out.back().exact += item.exact;
            }
        } else {
            out.push_back(std::move(item));
        }
    }
    return out;
}

} // namespace

MatchReport match_predictions(const Distribution& observed,
                              const PredictionTable& predicted, double tol)
{
    if (tol <= 0) fail(ErrorCode::BadArgument, "tolerance must be positive");
    MatchReport report;

    std::vector<Cluster> pred;
    for (const auto& row : predicted.rows) {
        if (row.frequency == 0) continue;
        std::string label = row.label;
        if (row.l >= 0) label += "[" + std::to_string(row.l) + "]";
        pred.push_back({label, row.value, row.frequency, {}});
    }
    pred = clusterize(std::move(pred), tol);

    std::vector<Cluster> obs;
    for (const auto& entry : observed.sorted_by_real()) {
        obs.push_back({{}, entry.real, entry.frequency, entry.value.to_string()});
    }
    obs = clusterize(std::move(obs), tol);

    if (pred.size() != obs.size()) {
        report.verdict = Verdict::UnmatchedValue;
        report.notes.push_back("predicted " + std::to_string(pred.size()) +
                               " values, observed " + std::to_string(obs.size()));
    }

    // Globally greedy 1-1 pairing by ascending gap.
    struct Candidate {
        double gap;
        size_t pi, oi;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(pred.size() * obs.size());
    for (size_t pi = 0; pi < pred.size(); ++pi) {
        for (size_t oi = 0; oi < obs.size(); ++oi) {
            candidates.push_back(
                {std::abs(pred[pi].value - obs[oi].value), pi, oi});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) {
                         return a.gap < b.gap;
                     });

    std::vector<bool> pred_used(pred.size(), false), obs_used(obs.size(), false);
    for (const auto& cand : candidates) {
        if (pred_used[cand.pi] || obs_used[cand.oi]) continue;
        pred_used[cand.pi] = true;
        obs_used[cand.oi] = true;
        const Cluster& P = pred[cand.pi];
        const Cluster& O = obs[cand.oi];
        report.pairs.push_back({P.label, P.value, O.value, cand.gap,
                                P.frequency, O.frequency, O.exact});
    }
    std::stable_sort(report.pairs.begin(), report.pairs.end(),
                     [](const MatchedPair& a, const MatchedPair& b) {
                         return a.predicted < b.predicted;
                     });

    for (size_t pi = 0; pi < pred.size(); ++pi) {
        if (!pred_used[pi]) {
            report.notes.push_back("predicted value " +
                                   std::to_string(pred[pi].value) + " (" +
                                   pred[pi].label + ") unmatched");
        }
    }
    for (size_t oi = 0; oi < obs.size(); ++oi) {
        if (!obs_used[oi]) {
            report.notes.push_back("observed value " + obs[oi].exact +
                                   " unmatched");
        }
    }

    if (report.verdict == Verdict::Verified) {
        for (const auto& pair : report.pairs) {
            if (pair.gap >= tol) {
                report.verdict = Verdict::ToleranceExceeded;
                report.notes.push_back("gap " + std::to_string(pair.gap) +
                                       " at " + pair.label + " exceeds " +
                                       std::to_string(tol));
                break;
            }
        }
    }
    if (report.verdict == Verdict::Verified) {
        for (const auto& pair : report.pairs) {
            if (pair.predicted_frequency != pair.observed_frequency) {
                report.verdict = Verdict::FrequencyMismatch;
                report.notes.push_back(
                    "frequency mismatch at " + pair.label + ": predicted " +
                    pair.predicted_frequency.str() + ", observed " +
                    pair.observed_frequency.str());
            }
        }
    }
    return report;
}

MatchReport match_weights(const WeightDistribution& observed,
                          const PredictionTable& predicted)
{
    MatchReport report;
    std::map<BigInt, std::pair<std::string, BigInt>> pred;
    for (const auto& row : predicted.rows) {
        if (row.frequency == 0) continue;
        if (!row.exact) {
            fail(ErrorCode::Internal, "weight prediction rows must be integers");
        }
        auto [it, inserted] =
            pred.try_emplace(*row.exact, row.label, row.frequency);
        if (!inserted) it->second.second += row.frequency;
    }

    for (const auto& [weight, count] : observed.counts) {
        auto it = pred.find(BigInt(weight));
        if (it == pred.end()) {
            report.verdict = Verdict::UnmatchedValue;
            report.notes.push_back("observed weight " + std::to_string(weight) +
                                   " (count " + count.str() +
                                   ") has no predicted row");
            continue;
        }
        report.pairs.push_back({it->second.first, to_double(it->first),
                                double(weight), 0.0, it->second.second, count,
                                BigInt(weight).str()});
        if (it->second.second != count &&
            report.verdict == Verdict::Verified) {
            report.verdict = Verdict::FrequencyMismatch;
            report.notes.push_back("weight " + std::to_string(weight) +
                                   ": predicted count " +
                                   it->second.second.str() + ", observed " +
                                   count.str());
        }
        pred.erase(it);
    }
    if (!pred.empty() && report.verdict == Verdict::Verified) {
        report.verdict = Verdict::UnmatchedValue;
    }
    for (const auto& [weight, entry] : pred) {
        report.notes.push_back("predicted weight " + weight.str() + " (" +
                               entry.first + ") not observed");
    }
    return report;
}

} // namespace corr13
