#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "json_io.hpp"
#include "sequences.hpp"
#include "version.hpp"

namespace corr13 {

using nlohmann::json;

unsigned resolve_workers(unsigned requested)
{
    if (requested > 0) return std::min(requested, 64u);
    if (const char* env = std::getenv("CORR13_WORKERS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) return std::min(unsigned(parsed), 64u);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? std::min(hw, 64u) : 1u;
}

namespace {

Verdict worse(Verdict a, Verdict b)
{
    return int(a) >= int(b) ? a : b;
}

class StageClock {
public:
    StageClock() : start_(std::chrono::steady_clock::now()) {}

    double elapsed_ms() const
    {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Largest absolute gap between two 3-element multisets.
double multiset_gap(std::array<double, 3> a, std::array<double, 3> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double gap = 0.0;
    for (int k = 0; k < 3; ++k) gap = std::max(gap, std::abs(a[k] - b[k]));
    return gap;
}

} // namespace

VerifyOutcome run_verify(const FieldCtx& ctx, const VerifyOptions& options)
{
    const ParamSet& params = ctx.params();
    if (!params.has_decimation) {
        fail(ErrorCode::BadArgument, "verification needs full (p, n, i) parameters");
    }
    const unsigned workers = resolve_workers(options.workers);
    const double tol =
        options.tolerance > 0 ? options.tolerance : default_tolerance(params);

    VerifyOutcome outcome;
    json& report = outcome.report;
    json timings = json::object();
    report["schema"] = 1;
    report["tool"] = "corr13";
    report["version"] = kVersion;
    report["params"] = params_json(params);
    report["tolerance"] = tol;
    json stages = json::object();

    StageClock quad_clock;
    const QuadPartition quad = solve_quad_partition(ctx);
    stages["quad"] = quad_json(quad, params.n);
    timings["quad"] = quad_clock.elapsed_ms();

    {
        StageClock clock;
        const PredictionTable predicted = correlation_predictions(params, quad);
        const Distribution observed =
            cross_corr_distribution(ctx, params.d, workers);
        const MatchReport match = match_predictions(observed, predicted, tol);
        stages["correlation"] = json{{"observed", distribution_json(observed)},
                                     {"predicted", prediction_json(predicted)},
                                     {"match", match_report_json(match)}};
        timings["correlation"] = clock.elapsed_ms();
        outcome.overall = worse(outcome.overall, match.verdict);
    }

    if (options.run_cyclotomy) {
        StageClock clock;
        const PairCounts brute = pair_counts_brute(ctx);
        const PairCounts closed = pair_counts_closed(quad, params);
        Verdict verdict =
            brute == closed ? Verdict::Verified : Verdict::FrequencyMismatch;

        std::mt19937_64 rng(params.q); // deterministic per parameter set
        std::uniform_int_distribution<uint64_t> nonzero(1, params.q - 1);
        json samples = json::array();
        for (int s = 0; s < 20; ++s) {
            const uint64_t a1 = nonzero(rng);
            const uint64_t a2 = nonzero(rng);
            const uint64_t c = nonzero(rng);
            const int class_product = int(
                (ctx.dlog(a1) + ctx.dlog(a2) + ctx.dlog(c)) % 3);
            const int delta_class =
                int((ctx.dlog(a1) + 2 * ctx.dlog(a2)) % 3);
            const BigInt nb = diagonal_count_brute(ctx, a1, a2, c);
            const BigInt nc =
                diagonal_count_closed(quad, params, class_product, delta_class);
            if (nb != nc) verdict = worse(verdict, Verdict::FrequencyMismatch);
            samples.push_back(json{{"a1", a1},
                                   {"a2", a2},
                                   {"c", c},
                                   {"brute", nb.str()},
                                   {"closed", nc.str()}});
        }
        stages["cyclotomy"] = json{{"brute", pair_counts_json(brute)},
                                   {"closed", pair_counts_json(closed)},
                                   {"pair_counts_equal", brute == closed},
                                   {"diagonal_samples", samples},
                                   {"verdict", verdict_name(verdict)}};
        timings["cyclotomy"] = clock.elapsed_ms();
        outcome.overall = worse(outcome.overall, verdict);
    }

    if (options.run_periods) {
        StageClock clock;
        const GaussianPeriods periods = gaussian_periods(ctx);
        const PeriodValueSets sets = period_value_sets(quad, params);
        const double period_tol =
            1e-9 * std::pow(double(params.p), params.n / 2.0);

        CycInt sum = periods.coset_sum[0];
        sum += periods.coset_sum[1];
        sum += periods.coset_sum[2];
        const bool sum_ok =
            sum == CycInt::integer(uint32_t(params.p), BigInt(-3));

        const auto& eta = periods.numeric;
        const std::array<std::array<double, 3>, 4> exact_sets = {{
            {eta[0], eta[1], eta[2]},
            {2 * eta[0] + eta[1], 2 * eta[1] + eta[2], 2 * eta[2] + eta[0]},
            {2 * eta[0] + eta[2], 2 * eta[1] + eta[0], 2 * eta[2] + eta[1]},
            {eta[0] + eta[1], eta[1] + eta[2], eta[2] + eta[0]},
        }};
        double gap = 0.0;
        for (int s = 0; s < 4; ++s) {
            gap = std::max(gap, multiset_gap(exact_sets[s], sets.sets[s]));
        }
        const Verdict verdict = (sum_ok && gap < period_tol)
                                    ? Verdict::Verified
                                    : Verdict::ToleranceExceeded;
        stages["periods"] = json{{"exact", periods_json(periods)},
                                 {"predicted_sets", period_sets_json(sets)},
                                 {"sum_is_minus_one", sum_ok},
                                 {"multiset_gap", gap},
                                 {"tolerance", period_tol},
                                 {"verdict", verdict_name(verdict)}};
        timings["periods"] = clock.elapsed_ms();
        outcome.overall = worse(outcome.overall, verdict);
    }

    if (options.run_codes) {
        StageClock clock;
        const WeightDistribution observed =
            weight_distribution_brute(ctx, params.d, workers);
        const PredictionTable predicted = weight_predictions(params, quad);
        const MatchReport match = match_weights(observed, predicted);
        stages["codes"] = json{{"observed", weight_distribution_json(observed)},
                               {"predicted", prediction_json(predicted)},
                               {"match", match_report_json(match)}};
        timings["codes"] = clock.elapsed_ms();
        outcome.overall = worse(outcome.overall, match.verdict);
    }

    if (options.run_partition_oracle) {
        StageClock clock;
        json stage;
        if (params.q <= options.max_oracle_q) {
            const PartitionCounts counts =
                partition_counts(ctx, params, options.max_oracle_q);
            BigInt cell_sum = 0;
            for (const auto& c : counts.cells) cell_sum += c;
            const BigInt expected_g =
                BigInt(params.q) * params.q - 3 * (BigInt(params.q) - 1) - 1;
            bool ok = cell_sum == counts.in_g && counts.in_g == expected_g;
            if (params.case_tag == CaseTag::One) {
                // |S_{0,0,0}| = ((q-1)/3) |C_{0,0}|, stated for this case
                const PairCounts pairs = pair_counts_brute(ctx);
                ok = ok && counts.cell(0, 0, 0) ==
                               BigInt((params.q - 1) / 3) * pairs.counts[0][0];
            }
            stage = partition_counts_json(counts);
            stage["consistent"] = ok;
            stage["verdict"] =
                verdict_name(ok ? Verdict::Verified : Verdict::FrequencyMismatch);
            outcome.overall = worse(outcome.overall,
                                    ok ? Verdict::Verified
                                       : Verdict::FrequencyMismatch);
        } else {
            stage["skipped"] = "q exceeds the oracle ceiling";
        }
        stages["partition_oracle"] = stage;
        timings["partition_oracle"] = clock.elapsed_ms();
    }

    if (options.run_triple_sum) {
        StageClock clock;
        json stage;
        if (params.n % 3 != 0) {
            const TripleSumReport check = triple_sum_check(
                ctx, params, options.triple_sum_samples, /*seed=*/params.q);
            stage = triple_sum_json(check);
            const Verdict verdict = check.violations.empty()
                                        ? Verdict::Verified
                                        : Verdict::FrequencyMismatch;
            stage["verdict"] = verdict_name(verdict);
            outcome.overall = worse(outcome.overall, verdict);
        } else {
            stage["skipped"] = "requires n != 0 mod 3";
        }
        stages["triple_sum"] = stage;
        timings["triple_sum"] = clock.elapsed_ms();
    }

    report["stages"] = stages;
    report["verdict"] = verdict_name(outcome.overall);
    report["timings_ms"] = timings;
    return outcome;
}

} // namespace corr13
