#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "cyclotomic.hpp"
#include "field.hpp"

namespace corr13 {

/// Hamming weight of the codeword (Tr(u psi^t + v psi^{dt}))_t by direct
/// trace-zero counting; deliberately independent of the exponential-sum
/// code paths.
uint64_t codeword_weight(const FieldCtx& ctx, uint64_t d, uint64_t u,
                         uint64_t v);

struct WeightDistribution {
    std::map<uint64_t, BigInt> counts;

    BigInt total_mass() const
    {
        BigInt t = 0;
        for (const auto& [w, c] : counts) t += c;
        return t;
    }

    bool operator==(const WeightDistribution&) const = default;
};

/// Weight multiset of all q^2 codewords, assembled from the v = 1 slice via
/// weight(u, v) = weight(u v^{-d^{-1}}, 1) for v != 0. Requires
/// gcd(d, q-1) = 1; O(q^2).
WeightDistribution weight_distribution_brute(const FieldCtx& ctx, uint64_t d,
                                             unsigned workers = 1);

/// Verifies the dichotomy sum_j W(u, -beta^j v) in {0, q} on sampled pairs,
/// with value q exactly when u = -v^{p^{-i}} beta^j for some j.
struct TripleSumViolation {
    uint64_t u = 0;
    uint64_t v = 0;
    std::string detail;
};

struct TripleSumReport {
    uint64_t samples = 0;
    uint64_t zero_sums = 0;
    uint64_t full_sums = 0;
    std::vector<TripleSumViolation> violations;
};
TripleSumReport triple_sum_check(const FieldCtx& ctx, const ParamSet& params,
                                 uint64_t samples, uint64_t seed = 1);

} // namespace corr13
