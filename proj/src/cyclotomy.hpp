#pragma once

#include <array>
#include <cstdint>

#include "bigint.hpp"
#include "closed_form.hpp"
#include "cyclotomic.hpp"
#include "field.hpp"

namespace corr13 {

/// counts[i][j] = #{x not in {0,-1} : class(x+1) = i, class(x) = j}.
struct PairCounts {
    std::array<std::array<BigInt, 3>, 3> counts{};

    BigInt total() const
    {
        BigInt t = 0;
        for (const auto& row : counts)
            for (const auto& c : row) t += c;
        return t;
    }

    bool operator==(const PairCounts&) const = default;
};

/// Direct enumeration of x over F_q \ {0, -1}.
PairCounts pair_counts_brute(const FieldCtx& ctx);

/// The four closed-form count expressions with their symmetries
/// |C_{1,2}|=|C_{2,1}|, |C_{0,1}|=|C_{1,0}|=|C_{2,2}|,
/// |C_{0,2}|=|C_{2,0}|=|C_{1,1}|.
PairCounts pair_counts_closed(const QuadPartition& quad, const ParamSet& params);

/// Exact Gaussian periods eta_j = (1/3) sum_{y != 0} zeta^{Tr(psi^j y^3)}.
/// coset_sum[j] stores the ring value 3 eta_j (the 1/3 stays symbolic);
/// numeric[j] is eta_j as a double.
struct GaussianPeriods {
    std::array<CycInt, 3> coset_sum;
    std::array<double, 3> numeric;
};
GaussianPeriods gaussian_periods(const FieldCtx& ctx);

/// The four predicted 3-element value sets {eta_j}, {2eta_j + eta_{j+1}},
/// {2eta_j + eta_{j+2}}, {eta_j + eta_{j+1}} as cosine families indexed by
/// l = 0,1,2. The closed forms determine these as unordered sets only.
struct PeriodValueSets {
    std::array<std::array<double, 3>, 4> sets{};
};
PeriodValueSets period_value_sets(const QuadPartition& quad,
                                  const ParamSet& params);

/// #{(x1,x2) : a1 x1^3 + a2 x2^3 = c} by tabulating the value multiplicity
/// of x -> a x^3 and convolving; O(q).
BigInt diagonal_count_brute(const FieldCtx& ctx, uint64_t a1, uint64_t a2,
                            uint64_t c);

/// Closed form for the same count; class_product = ind(a1 a2 c) mod 3,
/// delta_class = ind(a1 a2^2) mod 3.
BigInt diagonal_count_closed(const QuadPartition& quad, const ParamSet& params,
                             int class_product, int delta_class);

} // namespace corr13
