#include "codes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

#include "sequences.hpp"

namespace corr13 {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m)
{
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

} // namespace

uint64_t codeword_weight(const FieldCtx& ctx, uint64_t d, uint64_t u,
                         uint64_t v)
{
    const uint64_t m = ctx.order();
    const uint32_t p = uint32_t(ctx.prime());
    const uint64_t lu = u ? ctx.dlog(u) : 0;
    const uint64_t lv = v ? ctx.dlog(v) : 0;
    uint64_t zeros = 0;
    for (uint64_t t = 0; t < m; ++t) {
        const uint32_t a = u ? ctx.trace(ctx.antilog((lu + t) % m)) : 0;
        const uint32_t b = v ? ctx.trace(ctx.antilog((lv + mulmod(d, t, m)) % m)) : 0;
        if ((a + b) % p == 0) ++zeros;
    }
    return m - zeros;
}

WeightDistribution weight_distribution_brute(const FieldCtx& ctx, uint64_t d,
                                             unsigned workers)
{
    const uint64_t m = ctx.order();
    const uint64_t q = ctx.q();
    if (std::gcd(d, m) != 1) {
        fail(ErrorCode::GcdNotOne, "d and q-1 must be coprime");
    }
    const uint32_t p = uint32_t(ctx.prime());

    std::vector<uint32_t> shifted(2 * m);
    for (uint64_t t = 0; t < m; ++t) {
        shifted[t] = ctx.trace(ctx.antilog(t));
        shifted[t + m] = shifted[t];
    }
    std::vector<uint32_t> decimated(m);
    for (uint64_t t = 0; t < m; ++t) {
        decimated[t] = ctx.trace(ctx.antilog(mulmod(d, t, m)));
    }

    // v = 1 slice: u = 0 plus u = psi^s for all s. Each worker owns a
    // private histogram; chunks merge into a map at the end.
    const unsigned lanes = std::max(1u, workers);
    std::vector<std::map<uint64_t, BigInt>> partial(lanes);

    std::function<void(unsigned, uint64_t, uint64_t)> sweep =
        [&](unsigned w, uint64_t begin, uint64_t end) {
            for (uint64_t s = begin; s < end; ++s) {
                const uint32_t* a = shifted.data() + s;
                uint64_t zeros = 0;
                for (uint64_t t = 0; t < m; ++t) {
                    uint32_t k = a[t] + decimated[t];
                    if (k >= p) k -= p;
                    if (k == 0) ++zeros;
                }
                partial[w][m - zeros] += 1;
            }
        };
    if (lanes <= 1) {
        sweep(0, 0, m);
    } else {
        std::vector<std::thread> pool;
        const uint64_t chunk = (m + lanes - 1) / lanes;
        for (unsigned w = 0; w < lanes; ++w) {
            const uint64_t begin = uint64_t(w) * chunk;
            const uint64_t end = std::min(m, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(sweep, w, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    WeightDistribution dist;
    for (auto& part : partial) {
        for (const auto& [weight, count] : part) dist.counts[weight] += count;
    }
    dist.counts[codeword_weight(ctx, d, 0, 1)] += 1; // u = 0 of the slice

    // multiply the slice by the q-1 choices of v != 0
    for (auto& [weight, count] : dist.counts) count *= m;

    // v = 0 axis: weight(u, 0) is independent of u != 0 (substitute x -> x/u)
    dist.counts[codeword_weight(ctx, d, 1, 0)] += m;
    dist.counts[0] += 1; // zero codeword

    BigInt expected = BigInt(q) * q;
    if (dist.total_mass() != expected) {
        fail(ErrorCode::Internal, "weight distribution mass mismatch");
    }
    return dist;
}

TripleSumReport triple_sum_check(const FieldCtx& ctx, const ParamSet& params,
                                 uint64_t samples, uint64_t seed)
{
    if (!params.has_decimation || params.q != ctx.q()) {
        fail(ErrorCode::BadArgument, "triple-sum check needs matching (p, n, i)");
    }
    const uint64_t q = ctx.q();
    const uint32_t p = uint32_t(ctx.prime());
    const uint64_t beta = ctx.antilog(params.g);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> any(0, q - 1);
    std::uniform_int_distribution<uint64_t> nonzero(1, q - 1);

    TripleSumReport report;
    report.samples = samples;
    const CycInt zero(p);
    const CycInt full = CycInt::integer(p, BigInt(q));

    for (uint64_t s = 0; s < samples; ++s) {
        const uint64_t u = any(rng);
        const uint64_t v = nonzero(rng);

        CycInt sum(p);
        uint64_t scaled_v = v;
        for (int j = 0; j < 3; ++j) {
            sum += exp_sum_w(ctx, u, ctx.neg(scaled_v), params.d);
            scaled_v = ctx.mul(scaled_v, beta);
        }

        const uint64_t w = ctx.frob_inverse_pow(v);
        bool outside = false;
        uint64_t beta_j = 1;
        for (int j = 0; j < 3; ++j) {
            if (ctx.add(u, ctx.mul(w, beta_j)) == 0) outside = true;
            beta_j = ctx.mul(beta_j, beta);
        }

        if (outside) {
            if (sum == full) {
                ++report.full_sums;
            } else {
                report.violations.push_back(
                    {u, v, "expected sum q outside G, got " + sum.to_string()});
            }
        } else {
            if (sum == zero) {
                ++report.zero_sums;
            } else {
                report.violations.push_back(
                    {u, v, "expected sum 0 inside G, got " + sum.to_string()});
            }
        }
    }
    return report;
}

} // namespace corr13
