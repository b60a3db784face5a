#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "field.hpp"

namespace corr13 {

/// The signed solution of u^2 + 3 v^2 = 4p with u = 1 (mod 3), v = 0 (mod 3)
/// and 3v = u(2 omega + 1) (mod p), where omega is the cube root of unity
/// the field's psi selects. Replacing omega by its conjugate flips the signs
/// of v and theta; every derived prediction multiset is invariant under that
/// flip.
struct QuadPartition {
    int64_t u = 0;
    int64_t v = 0;
    double theta = 0.0; // sgn(v) * arccos(u / (2 sqrt p))
    uint32_t omega_p = 0;
};

QuadPartition solve_quad_partition(uint64_t p, uint32_t omega_p);
QuadPartition solve_quad_partition(const FieldCtx& ctx);

/// Alternating binomial sums over even / odd indices; every closed-form
/// count and frequency is built from these two integers.
///
///   even: u^n + sum over even t of +-C(n,t) u^{n-t} v^t 3^{t/2}
///         (minus when t = 2 mod 4, plus when t = 0 mod 4)
///   odd:  sum over odd t of +-C(n,t) u^{n-t} v^t 3^{(t+1)/2}
///         (plus when t = 1 mod 4, minus when t = 3 mod 4)
BigInt even_binomial_sum(int64_t u, int64_t v, uint32_t n);
BigInt odd_binomial_sum(int64_t u, int64_t v, uint32_t n);

/// The three integer combinations the frequency formulas share:
///   e_half    = (-1)^{n-1} E / 2^{n-1}
///   diff_half = (-1)^n (E - O) / 2^n
///   sum_half  = (-1)^n (E + O) / 2^n
/// Divisions are asserted exact.
struct FrequencyKernels {
    BigInt e_half;
    BigInt diff_half;
    BigInt sum_half;
};
FrequencyKernels frequency_kernels(const QuadPartition& quad, uint32_t n);

struct PredictionRow {
    std::string label;
    int l = -1;                   // index within a 3-element cosine family
    double value = 0.0;           // numeric value (correlation value / weight)
    std::optional<BigInt> exact;  // set when the value is a rational integer
    BigInt frequency;
};

struct PredictionTable {
    std::vector<PredictionRow> rows;
    BigInt total_mass() const;
};

/// The 13-row prediction for the cross-correlation value distribution,
/// selected by the parameter case tag. Frequencies are exact integers with
/// every division by 9 and 27 asserted.
PredictionTable correlation_predictions(const ParamSet& params,
                                        const QuadPartition& quad);

/// The predicted weight distribution of the associated cyclic code: three
/// weights when n != 0 (mod 3), otherwise the correlation table transformed
/// by w = p^{n-1}(p-1) - ((p-1)/p)(value + 1) with counts scaled by q-1.
/// All weights are asserted integral.
PredictionTable weight_predictions(const ParamSet& params,
                                   const QuadPartition& quad);

} // namespace corr13
