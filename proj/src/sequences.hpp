#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cyclotomic.hpp"
#include "field.hpp"

namespace corr13 {

/// W(u, v) = sum over all x in F_q of zeta^{Tr(u x - v x^d)}, exact.
CycInt exp_sum_w(const FieldCtx& ctx, uint64_t u, uint64_t v, uint64_t d);

/// C_tau = W(psi^tau, 1) - 1 (the x = 0 term removed).
CycInt cross_corr_value(const FieldCtx& ctx, uint64_t d, uint64_t tau);

/// The same value straight from the shift definition
/// sum_t zeta^{s_{t+tau} - s_{dt}}; kept as an independent route.
CycInt cross_corr_value_direct(const FieldCtx& ctx, uint64_t d, uint64_t tau);

/// Multiset of C_tau over all tau in [0, q-1). Workers sweep disjoint tau
/// ranges with private accumulators; the result does not depend on the
/// worker count.
Distribution cross_corr_distribution(const FieldCtx& ctx, uint64_t d,
                                     unsigned workers = 1);

/// Distribution of W(u, v) over the whole (u, v) plane, assembled from the
/// v = 1 slice through the scaling W(u, v) = W(u v^{-d^{-1}}, 1).
/// Requires gcd(d, q-1) = 1. Total mass q^2.
Distribution w_distribution_over_plane(const FieldCtx& ctx, uint64_t d,
                                       unsigned workers = 1);

/// Counts of the 27 class-pattern cells over the pairs (u, v) with all
/// three u_j = psi^j (u - v^{p^{-i}} beta^j) nonzero; an O(q^2) proof
/// oracle for small fields.
struct PartitionCounts {
    std::array<BigInt, 27> cells{};
    BigInt in_g = 0;

    BigInt& cell(int j, int k, int l) { return cells[size_t(9 * j + 3 * k + l)]; }
    const BigInt& cell(int j, int k, int l) const
    {
        return cells[size_t(9 * j + 3 * k + l)];
    }
};
PartitionCounts partition_counts(const FieldCtx& ctx, const ParamSet& params,
                                 uint64_t max_oracle_q = 10'000);

/// s_t = Tr(psi^t) for t in [0, q-1).
std::vector<uint32_t> m_sequence(const FieldCtx& ctx);
std::vector<uint32_t> decimated_sequence(const FieldCtx& ctx, uint64_t d);

} // namespace corr13
