#include "cyclotomy.hpp"

#include <cmath>
#include <numbers>

namespace corr13 {

namespace {
constexpr double kPi = std::numbers::pi;
}

PairCounts pair_counts_brute(const FieldCtx& ctx)
{
    PairCounts out;
    const uint64_t q = ctx.q();
    const uint64_t minus_one = ctx.neg(1);
    for (uint64_t x = 1; x < q; ++x) {
        if (x == minus_one) continue;
        const int i = ctx.cubic_class(ctx.add(x, 1));
        const int j = ctx.cubic_class(x);
        out.counts[i][j] += 1;
    }
    return out;
}

PairCounts pair_counts_closed(const QuadPartition& quad, const ParamSet& params)
{
    const BigInt q = params.q;
    const FrequencyKernels k = frequency_kernels(quad, params.n);

    const BigInt c00 = exact_div(q + k.e_half - 8, 9,
                                 ErrorCode::NonIntegralCount, "|C_00|");
    const BigInt c12 = exact_div(q + k.e_half + 1, 9,
                                 ErrorCode::NonIntegralCount, "|C_12|");
    const BigInt c01 = exact_div(q + k.diff_half - 2, 9,
                                 ErrorCode::NonIntegralCount, "|C_01|");
    const BigInt c02 = exact_div(q + k.sum_half - 2, 9,
                                 ErrorCode::NonIntegralCount, "|C_02|");
    for (const auto& [value, label] :
         {std::pair{&c00, "|C_00|"}, {&c12, "|C_12|"}, {&c01, "|C_01|"},
          {&c02, "|C_02|"}}) {
        if (*value < 0) {
            fail(ErrorCode::NonIntegralCount,
                 std::string(label) + " negative: " + value->str());
        }
    }

    PairCounts out;
    out.counts[0][0] = c00;
    out.counts[1][2] = out.counts[2][1] = c12;
    out.counts[0][1] = out.counts[1][0] = out.counts[2][2] = c01;
    out.counts[0][2] = out.counts[2][0] = out.counts[1][1] = c02;
    return out;
}

GaussianPeriods gaussian_periods(const FieldCtx& ctx)
{
    const uint64_t m = ctx.order();
    const uint32_t p = uint32_t(ctx.prime());
    std::array<std::vector<int64_t>, 3> hist;
    for (auto& h : hist) h.assign(p, 0);
    for (uint64_t t = 0; t < m; ++t) {
        const uint64_t cube = 3 * t % m;
        for (uint32_t j = 0; j < 3; ++j) {
            hist[j][ctx.trace(ctx.antilog((cube + j) % m))] += 1;
        }
    }
    GaussianPeriods out{{CycInt(p), CycInt(p), CycInt(p)}, {}};
    for (uint32_t j = 0; j < 3; ++j) {
        out.coset_sum[j] = CycInt::from_residue_counts(p, hist[j]).canonical();
        out.numeric[j] = out.coset_sum[j].eval_numeric().real() / 3.0;
    }
    return out;
}

PeriodValueSets period_value_sets(const QuadPartition& quad,
                                  const ParamSet& params)
{
    const uint32_t n = params.n;
    const double sign = (n % 2 == 0) ? -1.0 : 1.0; // (-1)^{n+1}
    const double root_q = std::pow(double(params.p), n / 2.0);
    const double phase = n * quad.theta / 3.0;

    PeriodValueSets out;
    for (int l = 0; l < 3; ++l) {
        out.sets[0][l] =
            sign * 2.0 / 3.0 * root_q * std::cos(phase - 2.0 * kPi * l / 3.0) -
            1.0 / 3.0;
        out.sets[1][l] = sign * 2.0 * std::sqrt(3.0) / 3.0 * root_q *
                             std::cos(phase - kPi * (4 * l + 1) / 6.0) -
                         1.0;
        out.sets[2][l] = sign * 2.0 * std::sqrt(3.0) / 3.0 * root_q *
                             std::cos(phase - kPi * (4 * l - 1) / 6.0) -
                         1.0;
        out.sets[3][l] = sign * 2.0 / 3.0 * root_q *
                             std::cos(phase - kPi * (2 * l + 1) / 3.0) -
                         2.0 / 3.0;
    }
    return out;
}

BigInt diagonal_count_brute(const FieldCtx& ctx, uint64_t a1, uint64_t a2,
                            uint64_t c)
{
    if (a1 == 0 || a2 == 0 || c == 0) {
        fail(ErrorCode::ZeroCoefficient, "diagonal equation coefficients must be nonzero");
    }
    const uint64_t q = ctx.q();
    const int class_a1 = ctx.cubic_class(a1);
    const int class_a2 = ctx.cubic_class(a2);

    // multiplicity of w as a value of a x^3: 1 at w = 0, 3 on the cubic
    // coset of a, 0 elsewhere
    auto multiplicity = [&ctx](uint64_t w, int a_class) -> int64_t {
        if (w == 0) return 1;
        return ctx.cubic_class(w) == a_class ? 3 : 0;
    };

    BigInt total = 0;
    for (uint64_t w = 0; w < q; ++w) {
        const int64_t m1 = multiplicity(w, class_a1);
        if (!m1) continue;
        const int64_t m2 = multiplicity(ctx.sub(c, w), class_a2);
        if (m2) total += m1 * m2;
    }
    return total;
}

BigInt diagonal_count_closed(const QuadPartition& quad, const ParamSet& params,
                             int class_product, int delta_class)
{
    if (class_product < 0 || class_product > 2 || delta_class < 0 ||
        delta_class > 2) {
        fail(ErrorCode::BadArgument, "class indices must be in {0,1,2}");
    }
    const FrequencyKernels k = frequency_kernels(quad, params.n);
    const BigInt q = params.q;
    const BigInt delta = delta_class == 0 ? -2 : 1;

    BigInt count;
    switch (class_product) {
    case 0: count = q + k.e_half + delta; break;
    case 1: count = q + k.diff_half + delta; break;
    default: count = q + k.sum_half + delta; break;
    }
    if (count < 0) {
        fail(ErrorCode::NonIntegralCount, "negative diagonal count " + count.str());
    }
    return count;
}

} // namespace corr13
