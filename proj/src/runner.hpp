#pragma once

#include <json.hpp>

#include "field.hpp"
#include "match.hpp"

namespace corr13 {

struct VerifyOptions {
    unsigned workers = 0;          // 0 = CORR13_WORKERS env or hardware
    double tolerance = 0.0;        // 0 = 1e-6 * p^{n/2}
    uint64_t max_oracle_q = 10'000;
    bool run_cyclotomy = true;
    bool run_periods = true;
    bool run_codes = true;
    bool run_partition_oracle = false;
    bool run_triple_sum = false;
    uint64_t triple_sum_samples = 200;
};

struct VerifyOutcome {
    nlohmann::json report;
    Verdict overall = Verdict::Verified;
};

unsigned resolve_workers(unsigned requested);

/// Full verification pipeline over a built field: quadratic partition,
/// brute-force correlation distribution matched against the closed-form
/// prediction, then the optional cyclotomy / period / code-weight /
/// oracle stages. Stage verdicts and data land in the JSON report.
VerifyOutcome run_verify(const FieldCtx& ctx, const VerifyOptions& options);

} // namespace corr13
