#include "closed_form.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace corr13 {

namespace {

constexpr double kPi = std::numbers::pi;

int64_t isqrt_u64(uint64_t x)
{
    auto r = uint64_t(std::sqrt(double(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return int64_t(r);
}

int64_t mod_i64(int64_t a, uint64_t m)
{
    int64_t r = a % int64_t(m);
    return r < 0 ? r + int64_t(m) : r;
}

} // namespace

QuadPartition solve_quad_partition(uint64_t p, uint32_t omega_p)
{
    const uint64_t target = 4 * p;
    std::vector<std::pair<int64_t, int64_t>> found;
    for (int64_t v0 = 3; uint64_t(3 * v0 * v0) <= target; v0 += 3) {
        const uint64_t rest = target - uint64_t(3 * v0 * v0);
        const int64_t s = isqrt_u64(rest);
        if (s == 0 || uint64_t(s) * uint64_t(s) != rest) continue;
        const int64_t u = (mod_i64(s, 3) == 1) ? s : -s;
        if (mod_i64(u, 3) != 1) continue; // u = 0 mod 3 cannot happen
        for (int64_t v : {v0, -v0}) {
            if (mod_i64(3 * v - u * int64_t(2 * uint64_t(omega_p) + 1), p) == 0) {
                found.emplace_back(u, v);
            }
        }
    }
    if (found.size() != 1) {
        fail(ErrorCode::NoPartitionFound,
             "expected exactly one normalized solution of u^2+3v^2=4p for p=" +
                 std::to_string(p) + ", found " + std::to_string(found.size()));
    }
    QuadPartition quad;
    quad.u = found[0].first;
    quad.v = found[0].second;
    quad.omega_p = omega_p;
    const double c = double(quad.u) / (2.0 * std::sqrt(double(p)));
    quad.theta = (quad.v < 0 ? -1.0 : 1.0) * std::acos(c);
    return quad;
}

QuadPartition solve_quad_partition(const FieldCtx& ctx)
{
    return solve_quad_partition(ctx.prime(), ctx.omega_p());
}

BigInt even_binomial_sum(int64_t u, int64_t v, uint32_t n)
{
    BigInt total = pow_bigint(u, n);
    for (uint32_t t = 2; t <= n; t += 2) {
        BigInt term = binomial(n, t) * pow_bigint(u, n - t) * pow_bigint(v, t) *
                      pow_bigint(3, t / 2);
        total += (t % 4 == 2) ? -term : term;
    }
    return total;
}

BigInt odd_binomial_sum(int64_t u, int64_t v, uint32_t n)
{
    BigInt total = 0;
    for (uint32_t t = 1; t <= n; t += 2) {
        BigInt term = binomial(n, t) * pow_bigint(u, n - t) * pow_bigint(v, t) *
                      pow_bigint(3, (t + 1) / 2);
        total += (t % 4 == 1) ? term : -term;
    }
    return total;
}

FrequencyKernels frequency_kernels(const QuadPartition& quad, uint32_t n)
{
    const BigInt e = even_binomial_sum(quad.u, quad.v, n);
    const BigInt o = odd_binomial_sum(quad.u, quad.v, n);
    const BigInt half = pow_bigint(2, n - 1);
    const BigInt full = half * 2;
    const int sign_n = (n % 2 == 0) ? 1 : -1;

    FrequencyKernels k;
    k.e_half = exact_div(-sign_n * e, half, ErrorCode::NonIntegralCount,
                         "E / 2^{n-1}");
    k.diff_half = exact_div(sign_n * (e - o), full, ErrorCode::NonIntegralCount,
                            "(E - O) / 2^n");
    k.sum_half = exact_div(sign_n * (e + o), full, ErrorCode::NonIntegralCount,
                           "(E + O) / 2^n");
    return k;
}

BigInt PredictionTable::total_mass() const
{
    BigInt total = 0;
    for (const auto& row : rows) total += row.frequency;
    return total;
}

PredictionTable correlation_predictions(const ParamSet& params,
                                        const QuadPartition& quad)
{
    if (!params.has_decimation) {
        fail(ErrorCode::BadArgument, "correlation predictions need (p, n, i)");
    }
    const uint32_t n = params.n;
    const BigInt q = params.q;
    const FrequencyKernels k = frequency_kernels(quad, n);

    const double sign = (n % 2 == 0) ? -1.0 : 1.0; // (-1)^{n+1}
    const double root_q = std::pow(double(params.p), n / 2.0);
    const double phase = n * quad.theta / 3.0;
    const double flat_offset = (to_double(q) - 3.0) / 3.0;

    auto check_frequency = [](const BigInt& f, const char* label) {
        if (f < 0) {
            fail(ErrorCode::NonIntegralFrequency,
                 std::string(label) + ": negative frequency " + f.str());
        }
        return f;
    };

    PredictionTable table;
    BigInt freq_flat, freq_triple;
    if (params.case_tag == CaseTag::One) {
        const BigInt base = q + k.e_half - 8;
        freq_triple = exact_div(base, 27, ErrorCode::NonIntegralFrequency,
                                "triple-family frequency");
        freq_flat = exact_div(2 * base, 9, ErrorCode::NonIntegralFrequency,
                              "minus-one frequency");
    } else {
        freq_flat = exact_div(2 * q + 2 * k.e_half - 25, 9,
                              ErrorCode::NonIntegralFrequency,
                              "minus-one frequency");
        freq_triple = exact_div(q + k.e_half + 1, 27,
                                ErrorCode::NonIntegralFrequency,
                                "triple-family frequency");
    }
    const BigInt freq_next = exact_div(q + k.diff_half - 2, 9,
                                       ErrorCode::NonIntegralFrequency,
                                       "mixed-next frequency");
    const BigInt freq_prev = exact_div(q + k.sum_half - 2, 9,
                                       ErrorCode::NonIntegralFrequency,
                                       "mixed-prev frequency");

    table.rows.push_back({"minus_one", -1, -1.0, BigInt(-1),
                          check_frequency(freq_flat, "minus_one")});
    for (int l = 0; l < 3; ++l) {
        const double value =
            sign * 2.0 * root_q * std::cos(phase - 2.0 * kPi * l / 3.0) - 1.0;
        table.rows.push_back({"eta_triple", l, value, std::nullopt,
                              check_frequency(freq_triple, "eta_triple")});
    }
    for (int l = 0; l < 3; ++l) {
        const double value = sign * 2.0 * std::sqrt(3.0) / 3.0 * root_q *
                                 std::cos(phase - kPi * (4 * l + 1) / 6.0) -
                             1.0;
        table.rows.push_back({"eta_mixed_next", l, value, std::nullopt,
                              check_frequency(freq_next, "eta_mixed_next")});
    }
    for (int l = 0; l < 3; ++l) {
        const double value = sign * 2.0 * std::sqrt(3.0) / 3.0 * root_q *
                                 std::cos(phase - kPi * (4 * l - 1) / 6.0) -
                             1.0;
        table.rows.push_back({"eta_mixed_prev", l, value, std::nullopt,
                              check_frequency(freq_prev, "eta_mixed_prev")});
    }
    for (int l = 0; l < 3; ++l) {
        const double value =
            (params.case_tag == CaseTag::One)
                ? sign * 4.0 / 3.0 * root_q * std::cos(phase - 2.0 * kPi * l / 3.0) +
                      flat_offset
                : sign * 2.0 / 3.0 * root_q *
                          std::cos(phase - kPi * (2 * l + 1) / 3.0) +
                      flat_offset;
        table.rows.push_back({"eta_special", l, value, std::nullopt, BigInt(1)});
    }

    if (table.total_mass() != q - 1) {
        fail(ErrorCode::Internal, "prediction mass " + table.total_mass().str() +
                                      " != q-1");
    }
    return table;
}

PredictionTable weight_predictions(const ParamSet& params,
                                   const QuadPartition& quad)
{
    if (!params.has_decimation) {
        fail(ErrorCode::BadArgument, "weight predictions need (p, n, i)");
    }
    const BigInt p = params.p;
    const BigInt q = params.q;
    const BigInt balanced = pow_bigint(params.p, params.n - 1) * (p - 1);

    PredictionTable table;
    if (params.n % 3 != 0) {
        const BigInt light = exact_div(2 * (p - 1), 3, ErrorCode::NonIntegralWeight,
                                       "2(p-1)/3") *
                             pow_bigint(params.p, params.n - 1);
        table.rows.push_back({"zero_word", -1, 0.0, BigInt(0), BigInt(1)});
        table.rows.push_back({"balanced", -1, to_double(balanced), balanced,
                              (q - 2) * (q - 1)});
        table.rows.push_back({"two_thirds", -1, to_double(light), light,
                              3 * (q - 1)});
    } else {
        // w = p^{n-1}(p-1) - ((p-1)/p) * (value + 1), counts scaled by q-1;
        // the minus-one row lands on the balanced weight together with both
        // axes of the (u, v) plane.
        const PredictionTable corr = correlation_predictions(params, quad);
        const double scale = to_double(p - 1) / to_double(p);
        const double w_tol = 1e-6 * std::pow(double(params.p), params.n / 2.0);

        std::map<BigInt, std::pair<std::string, BigInt>> rows; // weight -> (label, count)
        auto add = [&rows](const BigInt& w, const std::string& label,
                           const BigInt& count) {
            auto [it, inserted] = rows.try_emplace(w, label, count);
            if (!inserted) {
                it->second.second += count;
                if (it->second.first != label) it->second.first += "+" + label;
            }
        };
        add(0, "zero_word", 1);
        add(balanced, "axes", 2 * (q - 1));
        for (const auto& row : corr.rows) {
            BigInt weight;
            if (row.exact) {
                // value + 1 = 0 for the minus-one row
                weight = balanced - exact_div((p - 1) * (*row.exact + 1), p,
                                              ErrorCode::NonIntegralWeight,
                                              "integer weight row");
            } else {
                const double w = to_double(balanced) - scale * (row.value + 1.0);
                const double rounded = std::nearbyint(w);
                if (std::abs(w - rounded) > w_tol) {
                    fail(ErrorCode::NonIntegralWeight,
                         row.label + ": weight " + std::to_string(w) +
                             " is not near an integer");
                }
                weight = BigInt(int64_t(rounded));
            }
            if (weight < 0 || weight > q - 1) {
                fail(ErrorCode::NonIntegralWeight,
                     row.label + ": weight " + weight.str() + " out of range");
            }
            add(weight, row.label, row.frequency * (q - 1));
        }
        for (const auto& [weight, entry] : rows) {
            table.rows.push_back({entry.first, -1, to_double(weight), weight,
                                  entry.second});
        }
    }

    if (table.total_mass() != q * q) {
        fail(ErrorCode::Internal,
             "weight prediction mass " + table.total_mass().str() + " != q^2");
    }
    return table;
}

} // namespace corr13
