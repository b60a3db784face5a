#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cyclotomy.hpp"
#include "support.hpp"

using namespace corr13;
using test::field;

namespace {

QuadPartition quad_for(const FieldCtx& ctx)
{
    return solve_quad_partition(ctx);
}

} // namespace

TEST_CASE("pair counts over F_7")
{
    const FieldCtx& f = field(7, 1);
    const PairCounts brute = pair_counts_brute(f);
    CHECK(brute.counts[0][0] == 0);
    CHECK(brute.total() == 5); // q - 2

    const PairCounts closed = pair_counts_closed(quad_for(f), f.params());
    CHECK(closed.counts[0][0] == 0); // (7 + 1 - 8) / 9
    CHECK(brute == closed);
}

TEST_CASE("pair count row sums count the class of x + 1")
{
    const FieldCtx& f = field(13, 2);
    const PairCounts counts = pair_counts_brute(f);
    for (int i = 0; i < 3; ++i) {
        BigInt row = counts.counts[i][0] + counts.counts[i][1] +
                     counts.counts[i][2];
        BigInt direct = 0;
        const uint64_t minus_one = f.neg(1);
        for (uint64_t x = 1; x < f.q(); ++x) {
            if (x == minus_one) continue;
            if (f.cubic_class(f.add(x, 1)) == i) ++direct;
        }
        CHECK(row == direct);
    }
}

TEST_CASE("closed pair counts reproduce the pinned values")
{
    // (7,5): |C_00| = (16807 + 3376/16 - 8)/9 = 1890
    CHECK(pair_counts_closed(solve_quad_partition(7, 2), field_params(7, 5))
              .counts[0][0] == 1890);
    // (13,3): |C_12| = (2197 + 280/4 + 1)/9 = 252
    CHECK(pair_counts_closed(solve_quad_partition(13, 3), field_params(13, 3))
              .counts[1][2] == 252);
}

TEST_CASE("brute and closed pair counts agree across the grid")
{
    for (auto [p, n] : {std::pair<uint64_t, uint32_t>{7, 1}, {7, 2}, {7, 3},
                        {13, 1}, {13, 2}, {13, 3}, {31, 2}}) {
        const FieldCtx& f = field(p, n);
        CHECK(pair_counts_brute(f) == pair_counts_closed(quad_for(f), f.params()));
    }
}

TEST_CASE("Gaussian periods over F_7")
{
    const FieldCtx& f = field(7, 1);
    const GaussianPeriods periods = gaussian_periods(f);

    // cubes of F_7^* are {1, 6}, each hit three times
    CycInt expected(7);
    expected.add_root(1, 3);
    expected.add_root(6, 3);
    CHECK(periods.coset_sum[0] == expected);
    CHECK(periods.numeric[0] ==
          doctest::Approx(2.0 * std::cos(2.0 * std::numbers::pi / 7))
              .epsilon(1e-9));
}

TEST_CASE("periods sum to minus one and match the closed value sets")
{
    for (auto [p, n] : {std::pair<uint64_t, uint32_t>{7, 1}, {7, 2}, {7, 3},
                        {13, 1}, {13, 2}, {13, 3}, {31, 2}, {7, 5}}) {
        const FieldCtx& f = field(p, n);
        const GaussianPeriods periods = gaussian_periods(f);

        CycInt sum = periods.coset_sum[0];
        sum += periods.coset_sum[1];
        sum += periods.coset_sum[2];
        CHECK(sum.as_integer() == BigInt(-3)); // 3(eta_0 + eta_1 + eta_2)

        for (const auto& cs : periods.coset_sum) {
            CHECK(std::abs(cs.eval_numeric().imag()) < 1e-9);
        }

        const PeriodValueSets sets = period_value_sets(quad_for(f), f.params());
        const double tol = 1e-9 * std::pow(double(p), n / 2.0);
        const auto& eta = periods.numeric;
        const std::array<std::array<double, 3>, 4> exact = {{
            {eta[0], eta[1], eta[2]},
            {2 * eta[0] + eta[1], 2 * eta[1] + eta[2], 2 * eta[2] + eta[0]},
            {2 * eta[0] + eta[2], 2 * eta[1] + eta[0], 2 * eta[2] + eta[1]},
            {eta[0] + eta[1], eta[1] + eta[2], eta[2] + eta[0]},
        }};
        for (int s = 0; s < 4; ++s) {
            auto a = exact[s], b = sets.sets[s];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            for (int k = 0; k < 3; ++k) {
                CHECK(std::abs(a[k] - b[k]) < tol);
            }
        }
    }
}

TEST_CASE("closed period set sums")
{
    const FieldCtx& f = field(7, 5);
    const PeriodValueSets sets = period_value_sets(quad_for(f), f.params());
    const double eta_sum = sets.sets[0][0] + sets.sets[0][1] + sets.sets[0][2];
    CHECK(eta_sum == doctest::Approx(-1.0).epsilon(1e-9));
    const double mixed_sum = sets.sets[1][0] + sets.sets[1][1] + sets.sets[1][2];
    CHECK(mixed_sum == doctest::Approx(-3.0).epsilon(1e-9));
}

TEST_CASE("diagonal equation count over F_7")
{
    const FieldCtx& f = field(7, 1);
    CHECK(diagonal_count_brute(f, 1, 1, 1) == 6);
    CHECK_THROWS_AS(diagonal_count_brute(f, 0, 1, 1), Error);

    // closed form: both classes 0 gives 7 + 1 - 2 = 6
    CHECK(diagonal_count_closed(quad_for(f), f.params(), 0, 0) == 6);
}

TEST_CASE("diagonal count is invariant under cube scaling")
{
    const FieldCtx& f = field(13, 2);
    auto gen = test::rng(17);
    std::uniform_int_distribution<uint64_t> nonzero(1, f.q() - 1);
    for (int s = 0; s < 10; ++s) {
        const uint64_t a1 = nonzero(gen), a2 = nonzero(gen), c = nonzero(gen),
                       t = nonzero(gen);
        const uint64_t t3 = f.pow_elem(t, 3);
        CHECK(diagonal_count_brute(f, a1, a2, c) ==
              diagonal_count_brute(f, f.mul(a1, t3), f.mul(a2, t3),
                                   f.mul(c, t3)));
    }
}

TEST_CASE("diagonal brute equals closed on random inputs")
{
    for (auto [p, n] : {std::pair<uint64_t, uint32_t>{13, 3}, {7, 3}, {31, 2}}) {
        const FieldCtx& f = field(p, n);
        const QuadPartition quad = quad_for(f);
        auto gen = test::rng(19);
        std::uniform_int_distribution<uint64_t> nonzero(1, f.q() - 1);
        for (int s = 0; s < 20; ++s) {
            const uint64_t a1 = nonzero(gen), a2 = nonzero(gen), c = nonzero(gen);
            const int class_product =
                int((f.dlog(a1) + f.dlog(a2) + f.dlog(c)) % 3);
            const int delta_class = int((f.dlog(a1) + 2 * f.dlog(a2)) % 3);
            CHECK(diagonal_count_brute(f, a1, a2, c) ==
                  diagonal_count_closed(quad, f.params(), class_product,
                                        delta_class));
        }
    }
}

TEST_CASE("pinned closed diagonal count at (13,3)")
{
    // second branch with delta != 0: 2197 - 712/8 + 1 = 2109
    const QuadPartition quad = solve_quad_partition(13, 3);
    CHECK(diagonal_count_closed(quad, field_params(13, 3), 1, 1) == 2109);
    // delta table: class 0 -> -2, else +1
    CHECK(diagonal_count_closed(quad, field_params(13, 3), 1, 0) == 2106);
}
