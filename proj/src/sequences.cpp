#include "sequences.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>

namespace corr13 {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m)
{
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// trace(psi^t) for t in [0, len); len = m duplicated to 2m avoids the
// wraparound modulo in the inner sweep loops.
std::vector<uint32_t> trace_of_powers(const FieldCtx& ctx, bool duplicated)
{
    const uint64_t m = ctx.order();
    std::vector<uint32_t> a(duplicated ? 2 * m : m);
    for (uint64_t t = 0; t < m; ++t) a[t] = ctx.trace(ctx.antilog(t));
    if (duplicated) {
        std::copy(a.begin(), a.begin() + std::ptrdiff_t(m), a.begin() + std::ptrdiff_t(m));
    }
    return a;
}

std::vector<uint32_t> trace_of_decimated_powers(const FieldCtx& ctx, uint64_t d)
{
    const uint64_t m = ctx.order();
    std::vector<uint32_t> a(m);
    for (uint64_t t = 0; t < m; ++t) {
        a[t] = ctx.trace(ctx.antilog(mulmod(d, t, m)));
    }
    return a;
}

void run_partitioned(uint64_t total, unsigned workers,
                     const std::function<void(unsigned, uint64_t, uint64_t)>& fn)
{
    if (workers <= 1 || total < 2) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    const uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const uint64_t begin = uint64_t(w) * chunk;
        const uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(fn, w, begin, end);
    }
    for (auto& t : pool) t.join();
}

} // namespace

CycInt exp_sum_w(const FieldCtx& ctx, uint64_t u, uint64_t v, uint64_t d)
{
    const uint64_t m = ctx.order();
    const uint32_t p = uint32_t(ctx.prime());
    std::vector<int64_t> hist(p, 0);
    hist[0] += 1; // x = 0
    const uint64_t lu = u ? ctx.dlog(u) : 0;
    const uint64_t lv = v ? ctx.dlog(v) : 0;
    for (uint64_t t = 0; t < m; ++t) {
        const uint32_t a = u ? ctx.trace(ctx.antilog((lu + t) % m)) : 0;
        const uint32_t b = v ? ctx.trace(ctx.antilog((lv + mulmod(d, t, m)) % m)) : 0;
        hist[(a + p - b) % p] += 1;
    }
    return CycInt::from_residue_counts(p, hist).canonical();
}

CycInt cross_corr_value(const FieldCtx& ctx, uint64_t d, uint64_t tau)
{
    CycInt w = exp_sum_w(ctx, ctx.antilog(tau), 1, d);
    w.add_integer(-1);
    return w.canonical();
}

CycInt cross_corr_value_direct(const FieldCtx& ctx, uint64_t d, uint64_t tau)
{
    const uint64_t m = ctx.order();
    const uint32_t p = uint32_t(ctx.prime());
    const auto s = m_sequence(ctx);
    std::vector<int64_t> hist(p, 0);
    for (uint64_t t = 0; t < m; ++t) {
        const uint32_t a = s[(t + tau) % m];
        const uint32_t b = s[mulmod(d, t, m)];
        hist[(a + p - b) % p] += 1;
    }
    return CycInt::from_residue_counts(p, hist).canonical();
}

Distribution cross_corr_distribution(const FieldCtx& ctx, uint64_t d,
                                     unsigned workers)
{
    const uint64_t m = ctx.order();
    const uint32_t p = uint32_t(ctx.prime());
    const auto shifted = trace_of_powers(ctx, /*duplicated=*/true);
    const auto decimated = trace_of_decimated_powers(ctx, d);

    // p - decimated[t], so the inner loop needs no subtraction
    std::vector<uint32_t> decimated_neg(m);
    for (uint64_t t = 0; t < m; ++t) decimated_neg[t] = p - decimated[t];

    std::vector<Distribution> partial(std::max(1u, workers));
    run_partitioned(m, workers, [&](unsigned w, uint64_t begin, uint64_t end) {
        std::vector<int64_t> hist(p);
        for (uint64_t tau = begin; tau < end; ++tau) {
            std::fill(hist.begin(), hist.end(), 0);
            const uint32_t* a = shifted.data() + tau;
            for (uint64_t t = 0; t < m; ++t) {
                uint32_t k = a[t] + decimated_neg[t];
                if (k >= p) k -= p;
                hist[k] += 1;
            }
            partial[w].add(CycInt::from_residue_counts(p, hist));
        }
    });

    Distribution dist = std::move(partial[0]);
    for (size_t w = 1; w < partial.size(); ++w) dist.merge(partial[w]);
    return dist;
}

Distribution w_distribution_over_plane(const FieldCtx& ctx, uint64_t d,
                                       unsigned workers)
{
    const uint64_t m = ctx.order();
    if (std::gcd(d, m) != 1) {
        fail(ErrorCode::GcdNotOne, "d and q-1 must be coprime");
    }
    const uint32_t p = uint32_t(ctx.prime());

    // v = 1 slice over u in F_q^* is the shifted correlation distribution.
    Distribution slice = cross_corr_distribution(ctx, d, workers);
    Distribution plane;
    for (const auto& [value, count] : slice.entries()) {
        CycInt w = value;
        w.add_integer(1);
        plane.add(w, count * m);
    }

    const CycInt zero(p);
    CycInt w01 = exp_sum_w(ctx, 0, 1, d);
    if (w01 != zero) fail(ErrorCode::Internal, "W(0,1) != 0");
    plane.add(zero, m);                          // u = 0 column, v != 0
    plane.add(zero, m);                          // v = 0 axis, u != 0
    plane.add(CycInt::integer(p, ctx.q()), 1);   // origin
    return plane;
}

PartitionCounts partition_counts(const FieldCtx& ctx, const ParamSet& params,
                                 uint64_t max_oracle_q)
{
    if (!params.has_decimation || params.q != ctx.q()) {
        fail(ErrorCode::BadArgument, "partition counts need matching (p, n, i)");
    }
    const uint64_t q = ctx.q();
    if (q > max_oracle_q) {
        fail(ErrorCode::FieldTooLargeForOracle,
             "q = " + std::to_string(q) + " exceeds the oracle ceiling " +
                 std::to_string(max_oracle_q));
    }
    const uint64_t beta = ctx.antilog(params.g);
    const uint64_t beta2 = ctx.mul(beta, beta);
    const uint64_t psi = ctx.psi();
    const uint64_t psi2 = ctx.mul(psi, psi);

    PartitionCounts out;
    for (uint64_t v = 0; v < q; ++v) {
        const uint64_t w = ctx.frob_inverse_pow(v);
        const uint64_t wb = ctx.mul(w, beta);
        const uint64_t wb2 = ctx.mul(w, beta2);
        for (uint64_t u = 0; u < q; ++u) {
            const uint64_t u0 = ctx.sub(u, w);
            if (u0 == 0) continue;
            const uint64_t u1 = ctx.mul(psi, ctx.sub(u, wb));
            if (u1 == 0) continue;
            const uint64_t u2 = ctx.mul(psi2, ctx.sub(u, wb2));
            if (u2 == 0) continue;
            out.in_g += 1;
            out.cell(ctx.cubic_class(u0), ctx.cubic_class(u1),
                     ctx.cubic_class(u2)) += 1;
        }
    }
    return out;
}

std::vector<uint32_t> m_sequence(const FieldCtx& ctx)
{
    return trace_of_powers(ctx, /*duplicated=*/false);
}

std::vector<uint32_t> decimated_sequence(const FieldCtx& ctx, uint64_t d)
{
    return trace_of_decimated_powers(ctx, d);
}

} // namespace corr13
