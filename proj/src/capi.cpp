#include "corr13.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <random>
#include <string>

#include "json_io.hpp"
#include "runner.hpp"
#include "version.hpp"

using namespace corr13;

struct c13_params {
    ParamSet params;
};

struct c13_field {
    FieldCtx ctx;
};

namespace {

thread_local std::string g_last_error;

c13_status status_from(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotPrime: return C13_ERR_NOT_PRIME;
    case ErrorCode::PNotOneModThree: return C13_ERR_P_NOT_ONE_MOD_THREE;
    case ErrorCode::IOutOfRange: return C13_ERR_I_OUT_OF_RANGE;
    case ErrorCode::GModThreeIsTwo: return C13_ERR_G_MOD_THREE_IS_TWO;
    case ErrorCode::FieldTooLarge: return C13_ERR_FIELD_TOO_LARGE;
    case ErrorCode::LogOfZero: return C13_ERR_LOG_OF_ZERO;
    case ErrorCode::GcdNotOne: return C13_ERR_GCD_NOT_ONE;
    case ErrorCode::ZeroCoefficient: return C13_ERR_ZERO_COEFFICIENT;
    case ErrorCode::NonIntegralFrequency:
    case ErrorCode::NonIntegralCount:
    case ErrorCode::NonIntegralWeight: return C13_ERR_NON_INTEGRAL;
    case ErrorCode::FieldTooLargeForOracle: return C13_ERR_ORACLE_CEILING;
    case ErrorCode::NoPartitionFound:
    case ErrorCode::Internal: return C13_ERR_INTERNAL;
    case ErrorCode::BadArgument: return C13_ERR_BAD_ARGUMENT;
    }
    return C13_ERR_INTERNAL;
}

template <typename Fn>
c13_status guarded(Fn&& fn)
{
    try {
        fn();
        return C13_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_from(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return C13_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return C13_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

c13_status emit(nlohmann::json j, char** out)
{
    *out = dup_string(j.dump(2));
    return C13_OK;
}

c13_status require(bool condition, const char* message)
{
    if (condition) return C13_OK;
    g_last_error = message;
    return C13_ERR_BAD_ARGUMENT;
}

} // namespace

extern "C" {

const char* c13_version(void)
{
    return kVersion;
}

const char* c13_status_name(c13_status status)
{
    switch (status) {
    case C13_OK: return "ok";
    case C13_ERR_NOT_PRIME: return "not_prime";
    case C13_ERR_P_NOT_ONE_MOD_THREE: return "p_not_one_mod_three";
    case C13_ERR_I_OUT_OF_RANGE: return "i_out_of_range";
    case C13_ERR_G_MOD_THREE_IS_TWO: return "g_mod_three_is_two";
    case C13_ERR_FIELD_TOO_LARGE: return "field_too_large";
    case C13_ERR_LOG_OF_ZERO: return "log_of_zero";
    case C13_ERR_GCD_NOT_ONE: return "gcd_not_one";
    case C13_ERR_ZERO_COEFFICIENT: return "zero_coefficient";
    case C13_ERR_NON_INTEGRAL: return "non_integral";
    case C13_ERR_ORACLE_CEILING: return "oracle_ceiling";
    case C13_ERR_BAD_ARGUMENT: return "bad_argument";
    case C13_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* c13_last_error(void)
{
    return g_last_error.c_str();
}

c13_status c13_params_create(uint64_t p, uint32_t n, uint32_t i,
                             c13_params** out)
{
    if (auto s = require(out != nullptr, "null output pointer")) return s;
    *out = nullptr;
    return guarded([&] { *out = new c13_params{validate_params(p, n, i)}; });
}

c13_status c13_field_params_create(uint64_t p, uint32_t n, c13_params** out)
{
    if (auto s = require(out != nullptr, "null output pointer")) return s;
    *out = nullptr;
    return guarded([&] { *out = new c13_params{field_params(p, n)}; });
}

void c13_params_destroy(c13_params* params)
{
    delete params;
}

uint64_t c13_params_q(const c13_params* params)
{
    return params ? params->params.q : 0;
}

uint64_t c13_params_d(const c13_params* params)
{
    return params && params->params.has_decimation ? params->params.d : 0;
}

uint64_t c13_params_g(const c13_params* params)
{
    return params && params->params.has_decimation ? params->params.g : 0;
}

int32_t c13_params_case(const c13_params* params)
{
    if (!params || !params->params.has_decimation) return -1;
    return params->params.case_tag == CaseTag::One ? 1 : 0;
}

c13_status c13_field_build(const c13_params* params, uint64_t max_q,
                           c13_field** out)
{
    if (auto s = require(params && out, "null argument")) return s;
    *out = nullptr;
    return guarded([&] {
        *out = new c13_field{FieldCtx::build(
            params->params, max_q ? max_q : FieldCtx::kDefaultMaxQ)};
    });
}

void c13_field_destroy(c13_field* field)
{
    delete field;
}

uint64_t c13_field_q(const c13_field* field)
{
    return field ? field->ctx.q() : 0;
}

uint64_t c13_field_psi(const c13_field* field)
{
    return field ? field->ctx.psi() : 0;
}

uint32_t c13_field_omega(const c13_field* field)
{
    return field ? field->ctx.omega_p() : 0;
}

void c13_verify_options_init(c13_verify_options* options)
{
    if (!options) return;
    *options = c13_verify_options{};
    options->run_cyclotomy = 1;
    options->run_periods = 1;
    options->run_codes = 1;
}

c13_status c13_quad_partition_json(const c13_field* field, char** out)
{
    if (auto s = require(field && out, "null argument")) return s;
    return guarded([&] {
        const QuadPartition quad = solve_quad_partition(field->ctx);
        emit(quad_json(quad, field->ctx.params().n), out);
    });
}

c13_status c13_distribution_json(const c13_field* field, uint32_t workers,
                                 char** out)
{
    if (auto s = require(field && out, "null argument")) return s;
    if (auto s = require(field->ctx.params().has_decimation,
                         "parameters lack a decimation exponent"))
        return s;
    return guarded([&] {
        const Distribution dist = cross_corr_distribution(
            field->ctx, field->ctx.params().d, resolve_workers(workers));
        nlohmann::json j = distribution_json(dist);
        j["params"] = params_json(field->ctx.params());
        emit(std::move(j), out);
    });
}

c13_status c13_correlation_predictions_json(const c13_field* field, char** out)
{
    if (auto s = require(field && out, "null argument")) return s;
    if (auto s = require(field->ctx.params().has_decimation,
                         "parameters lack a decimation exponent"))
        return s;
    return guarded([&] {
        const QuadPartition quad = solve_quad_partition(field->ctx);
        nlohmann::json j =
            prediction_json(correlation_predictions(field->ctx.params(), quad));
        j["quad"] = quad_json(quad, field->ctx.params().n);
        j["params"] = params_json(field->ctx.params());
        emit(std::move(j), out);
    });
}

c13_status c13_periods_json(const c13_field* field, char** out)
{
    if (auto s = require(field && out, "null argument")) return s;
    return guarded([&] {
        const QuadPartition quad = solve_quad_partition(field->ctx);
        nlohmann::json j;
        j["params"] = params_json(field->ctx.params());
        j["exact"] = periods_json(gaussian_periods(field->ctx));
        j["predicted_sets"] =
            period_sets_json(period_value_sets(quad, field->ctx.params()));
        j["quad"] = quad_json(quad, field->ctx.params().n);
        emit(std::move(j), out);
    });
}

c13_status c13_cyclotomy_json(const c13_field* field, uint32_t samples,
                              char** out)
{
    if (auto s = require(field && out, "null argument")) return s;
    return guarded([&] {
        const FieldCtx& ctx = field->ctx;
        const QuadPartition quad = solve_quad_partition(ctx);
        const PairCounts brute = pair_counts_brute(ctx);
        const PairCounts closed = pair_counts_closed(quad, ctx.params());

        std::mt19937_64 rng(ctx.q());
        std::uniform_int_distribution<uint64_t> nonzero(1, ctx.q() - 1);
        nlohmann::json sample_rows = nlohmann::json::array();
        bool all_equal = brute == closed;
        for (uint32_t s = 0; s < samples; ++s) {
            const uint64_t a1 = nonzero(rng), a2 = nonzero(rng), c = nonzero(rng);
            const int class_product =
                int((ctx.dlog(a1) + ctx.dlog(a2) + ctx.dlog(c)) % 3);
            const int delta_class = int((ctx.dlog(a1) + 2 * ctx.dlog(a2)) % 3);
            const BigInt nb = diagonal_count_brute(ctx, a1, a2, c);
            const BigInt nc =
                diagonal_count_closed(quad, ctx.params(), class_product,
                                      delta_class);
            all_equal = all_equal && nb == nc;
            sample_rows.push_back(nlohmann::json{{"a1", a1},
                                                 {"a2", a2},
                                                 {"c", c},
                                                 {"brute", nb.str()},
                                                 {"closed", nc.str()}});
        }
        nlohmann::json j;
        j["params"] = params_json(ctx.params());
        j["brute"] = pair_counts_json(brute);
        j["closed"] = pair_counts_json(closed);
        j["diagonal_samples"] = sample_rows;
        j["all_equal"] = all_equal;
        emit(std::move(j), out);
    });
}

c13_status c13_code_weights_json(const c13_field* field, uint32_t workers,
                                 char** out)
{
    if (auto s = require(field && out, "null argument")) return s;
    if (auto s = require(field->ctx.params().has_decimation,
                         "parameters lack a decimation exponent"))
        return s;
    return guarded([&] {
        const FieldCtx& ctx = field->ctx;
        const QuadPartition quad = solve_quad_partition(ctx);
        const WeightDistribution observed = weight_distribution_brute(
            ctx, ctx.params().d, resolve_workers(workers));
        const PredictionTable predicted =
            weight_predictions(ctx.params(), quad);
        nlohmann::json j;
        j["params"] = params_json(ctx.params());
        j["observed"] = weight_distribution_json(observed);
        j["predicted"] = prediction_json(predicted);
        j["match"] = match_report_json(match_weights(observed, predicted));
        emit(std::move(j), out);
    });
}

c13_status c13_sequence_json(const c13_field* field, uint64_t max_terms,
                             char** out)
{
    if (auto s = require(field && out, "null argument")) return s;
    if (auto s = require(field->ctx.params().has_decimation,
                         "parameters lack a decimation exponent"))
        return s;
    return guarded([&] {
        const FieldCtx& ctx = field->ctx;
        const auto s = m_sequence(ctx);
        const auto sd = decimated_sequence(ctx, ctx.params().d);
        const uint64_t count =
            max_terms ? std::min<uint64_t>(max_terms, s.size()) : s.size();
        nlohmann::json j;
        j["params"] = params_json(ctx.params());
        j["period"] = s.size();
        j["terms"] = count;
        j["sequence"] = std::vector<uint32_t>(s.begin(), s.begin() + long(count));
        j["decimated"] =
            std::vector<uint32_t>(sd.begin(), sd.begin() + long(count));
        emit(std::move(j), out);
    });
}

c13_status c13_verify_json(const c13_field* field,
                           const c13_verify_options* options, char** out)
{
    if (auto s = require(field && out, "null argument")) return s;
    return guarded([&] {
        VerifyOptions opts;
        if (options) {
            opts.workers = options->workers;
            opts.tolerance = options->tolerance;
            if (options->max_oracle_q) opts.max_oracle_q = options->max_oracle_q;
            opts.run_cyclotomy = options->run_cyclotomy != 0;
            opts.run_periods = options->run_periods != 0;
            opts.run_codes = options->run_codes != 0;
            opts.run_partition_oracle = options->run_partition_oracle != 0;
            opts.run_triple_sum = options->run_triple_sum != 0;
            if (options->triple_sum_samples) {
                opts.triple_sum_samples = options->triple_sum_samples;
            }
        }
        emit(run_verify(field->ctx, opts).report, out);
    });
}

c13_status c13_distribution_csv(const c13_field* field, uint32_t workers,
                                char** out)
{
    if (auto s = require(field && out, "null argument")) return s;
    if (auto s = require(field->ctx.params().has_decimation,
                         "parameters lack a decimation exponent"))
        return s;
    return guarded([&] {
        *out = dup_string(distribution_csv(cross_corr_distribution(
            field->ctx, field->ctx.params().d, resolve_workers(workers))));
    });
}

c13_status c13_correlation_predictions_csv(const c13_field* field, char** out)
{
    if (auto s = require(field && out, "null argument")) return s;
    if (auto s = require(field->ctx.params().has_decimation,
                         "parameters lack a decimation exponent"))
        return s;
    return guarded([&] {
        *out = dup_string(prediction_csv(correlation_predictions(
            field->ctx.params(), solve_quad_partition(field->ctx))));
    });
}

c13_status c13_code_weights_csv(const c13_field* field, uint32_t workers,
                                char** out)
{
    if (auto s = require(field && out, "null argument")) return s;
    if (auto s = require(field->ctx.params().has_decimation,
                         "parameters lack a decimation exponent"))
        return s;
    return guarded([&] {
        *out = dup_string(weight_distribution_csv(weight_distribution_brute(
            field->ctx, field->ctx.params().d, resolve_workers(workers))));
    });
}

void c13_string_free(char* s)
{
    delete[] s;
}

} // extern "C"
