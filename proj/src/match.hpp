#pragma once

#include <string>
#include <vector>

#include "closed_form.hpp"
#include "codes.hpp"
#include "cyclotomic.hpp"

namespace corr13 {

enum class Verdict { Verified, FrequencyMismatch, UnmatchedValue, ToleranceExceeded };

const char* verdict_name(Verdict v);

/// Absolute tolerance 1e-6 * p^{n/2}; values scale like 2 p^{n/2}.
double default_tolerance(const ParamSet& params);

struct MatchedPair {
    std::string label;            // predicted row label(s)
    double predicted = 0.0;
    double observed = 0.0;
    double gap = 0.0;
    BigInt predicted_frequency;
    BigInt observed_frequency;
    std::string observed_exact;   // canonical exact value
};

struct MatchReport {
    Verdict verdict = Verdict::Verified;
    std::vector<MatchedPair> pairs;
    std::vector<std::string> notes; // diagnostics for non-Verified verdicts
};

/// Pairs the exact observed distribution against the predicted rows.
/// Predicted rows whose numeric values collide within tol are merged first
/// (frequencies added), zero-frequency rows are dropped, then values pair
/// greedily by ascending numeric gap with uniqueness enforced. Verified
/// means the pairing is a bijection, every gap is below tol and every
/// frequency matches exactly.
MatchReport match_predictions(const Distribution& observed,
                              const PredictionTable& predicted, double tol);

/// Exact integer comparison of a brute-force weight distribution against
/// the predicted weight table.
MatchReport match_weights(const WeightDistribution& observed,
                          const PredictionTable& predicted);

} // namespace corr13
