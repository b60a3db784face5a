#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <tuple>

#include "closed_form.hpp"
#include "support.hpp"

using namespace corr13;

namespace {

// Oracle for the binomial sums: (u + i v sqrt 3)^n = a + i b sqrt 3 with
// exact integer recurrence; then E = a and O = 3b.
std::pair<BigInt, BigInt> binomial_sums_by_recurrence(int64_t u, int64_t v,
                                                      uint32_t n)
{
    BigInt a = 1, b = 0;
    for (uint32_t k = 0; k < n; ++k) {
        const BigInt na = a * u - 3 * b * v;
        const BigInt nb = a * v + b * u;
        a = na;
        b = nb;
    }
    return {a, 3 * b};
}

std::multiset<long long> value_multiset(const PredictionTable& t, double scale)
{
    // quantized values make multiset comparison robust
    std::multiset<long long> out;
    for (const auto& row : t.rows) {
        out.insert(llround(row.value * scale));
    }
    return out;
}

} // namespace

TEST_CASE("quadratic partition for known primes")
{
    const QuadPartition a = solve_quad_partition(7, 2);
    CHECK(a.u == 1);
    CHECK(a.v == -3);
    CHECK(a.theta == doctest::Approx(-std::acos(1.0 / (2.0 * std::sqrt(7.0)))));

    const QuadPartition a2 = solve_quad_partition(7, 4);
    CHECK(a2.u == 1);
    CHECK(a2.v == 3);

    const QuadPartition b = solve_quad_partition(13, 3);
    CHECK(b.u == -5);
    CHECK(b.v == -3);

    const QuadPartition b2 = solve_quad_partition(13, 9);
    CHECK(b2.u == -5);
    CHECK(b2.v == 3);
}

TEST_CASE("quadratic partition properties over many primes")
{
    for (uint64_t p = 7; p < 2000; ++p) {
        if (!is_prime(p) || p % 3 != 1) continue;
        // either cube root of unity mod p works
        uint32_t omega = 0;
        for (uint32_t w = 2; w < p; ++w) {
            if ((uint64_t(w) * w + w + 1) % p == 0) {
                omega = w;
                break;
            }
        }
        REQUIRE(omega != 0);
        for (uint32_t w : {omega, uint32_t(p - 1 - omega)}) {
            const QuadPartition quad = solve_quad_partition(p, w);
            CHECK(uint64_t(quad.u * quad.u + 3 * quad.v * quad.v) == 4 * p);
            CHECK(((quad.u % 3) + 3) % 3 == 1);
            CHECK(quad.v % 3 == 0);
            CHECK(std::llabs(quad.u) <= 2 * int64_t(std::sqrt(double(p))) + 1);
            CHECK((3 * quad.v - quad.u * int64_t(2 * w + 1)) % int64_t(p) == 0);
        }
        // conjugate branch flips v
        const QuadPartition q1 = solve_quad_partition(p, omega);
        const QuadPartition q2 = solve_quad_partition(p, uint32_t(p - 1 - omega));
        CHECK(q1.u == q2.u);
        CHECK(q1.v == -q2.v);
        CHECK(q1.theta == doctest::Approx(-q2.theta));
    }
}

TEST_CASE("binomial sums match pinned values")
{
    CHECK(even_binomial_sum(1, -3, 5) == 3376);
    CHECK(odd_binomial_sum(1, -3, 5) == -4176);
    CHECK(even_binomial_sum(-5, -3, 3) == 280);
    CHECK(odd_binomial_sum(-5, -3, 3) == -432);
    CHECK(even_binomial_sum(4, -6, 2) == -92);
    CHECK(even_binomial_sum(7, 9, 1) == 7);
    CHECK(odd_binomial_sum(7, 9, 1) == 27); // O(u, v, 1) = 3v
}

TEST_CASE("binomial sums agree with the power recurrence")
{
    auto gen = test::rng(7);
    std::uniform_int_distribution<int64_t> small(-9, 9);
    for (int s = 0; s < 200; ++s) {
        const int64_t u = small(gen), v = small(gen);
        const uint32_t n = uint32_t(1 + (gen() % 12));
        const auto [e, o] = binomial_sums_by_recurrence(u, v, n);
        CHECK(even_binomial_sum(u, v, n) == e);
        CHECK(odd_binomial_sum(u, v, n) == o);
    }
}

TEST_CASE("correlation prediction frequencies for the two worked examples")
{
    {
        const ParamSet ps = validate_params(7, 5, 0);
        const PredictionTable t =
            correlation_predictions(ps, solve_quad_partition(7, 2));
        REQUIRE(t.rows.size() == 13);
        CHECK(t.rows[0].frequency == 3780); // -1
        for (int k = 1; k <= 3; ++k) CHECK(t.rows[k].frequency == 630);
        for (int k = 4; k <= 6; ++k) CHECK(t.rows[k].frequency == 1841);
        for (int k = 7; k <= 9; ++k) CHECK(t.rows[k].frequency == 1870);
        for (int k = 10; k <= 12; ++k) CHECK(t.rows[k].frequency == 1);
        CHECK(t.total_mass() == 16806);
    }
    {
        const ParamSet ps = validate_params(13, 3, 0);
        const PredictionTable t =
            correlation_predictions(ps, solve_quad_partition(13, 3));
        REQUIRE(t.rows.size() == 13);
        CHECK(t.rows[0].frequency == 501);
        for (int k = 1; k <= 3; ++k) CHECK(t.rows[k].frequency == 84);
        for (int k = 4; k <= 6; ++k) CHECK(t.rows[k].frequency == 234);
        for (int k = 7; k <= 9; ++k) CHECK(t.rows[k].frequency == 246);
        for (int k = 10; k <= 12; ++k) CHECK(t.rows[k].frequency == 1);
        CHECK(t.total_mass() == 2196);

        // all thirteen values are integers here and match the published table
        std::multiset<long long> values;
        for (const auto& row : t.rows) values.insert(llround(row.value));
        const std::multiset<long long> expected{-1,  -27, 90,  -66, 38, -53, 12,
                                                51,  -40, -14, 701, 753, 740};
        CHECK(values == expected);
        for (const auto& row : t.rows) {
            CHECK(std::abs(row.value - double(llround(row.value))) < 1e-6);
        }
    }
}

TEST_CASE("prediction multiset is invariant under the omega branch")
{
    for (auto [p, n, i, omega] :
         {std::tuple<uint64_t, uint32_t, uint32_t, uint32_t>{7, 5, 0, 2},
          {13, 3, 0, 3},
          {13, 1, 0, 3},
          {7, 2, 0, 2}}) {
        const ParamSet ps = validate_params(p, n, i);
        const PredictionTable t1 =
            correlation_predictions(ps, solve_quad_partition(p, omega));
        const PredictionTable t2 = correlation_predictions(
            ps, solve_quad_partition(p, uint32_t(p - 1 - omega)));
        CHECK(value_multiset(t1, 1e6) == value_multiset(t2, 1e6));

        // frequency multisets match as well
        std::multiset<std::string> f1, f2;
        for (const auto& row : t1.rows) f1.insert(row.frequency.str());
        for (const auto& row : t2.rows) f2.insert(row.frequency.str());
        CHECK(f1 == f2);
    }
}

TEST_CASE("every admissible parameter set yields integral frequencies")
{
    // divisibility sweep; both omega branches share the same integrality
    int checked = 0;
    for (uint64_t p = 7; p <= 600; ++p) {
        if (!is_prime(p) || p % 3 != 1) continue;
        uint32_t omega = 0;
        for (uint32_t w = 2; w < p; ++w) {
            if ((uint64_t(w) * w + w + 1) % p == 0) {
                omega = w;
                break;
            }
        }
        const QuadPartition quad = solve_quad_partition(p, omega);
        for (uint32_t n = 1;; ++n) {
            uint64_t q = 1;
            bool fits = true;
            for (uint32_t k = 0; k < n; ++k) {
                q *= p;
                if (q > 1'000'000) {
                    fits = false;
                    break;
                }
            }
            if (!fits) break;
            for (uint32_t i = 0; i < n; ++i) {
                ParamSet ps;
                try {
                    ps = validate_params(p, n, i);
                } catch (const Error&) {
                    continue;
                }
                const PredictionTable t = correlation_predictions(ps, quad);
                CHECK(t.total_mass() == ps.q - 1);
                for (const auto& row : t.rows) CHECK(row.frequency >= 0);
                ++checked;
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("weight predictions")
{
    {
        // three weights when n != 0 mod 3
        const ParamSet ps = validate_params(7, 5, 0);
        const PredictionTable t =
            weight_predictions(ps, solve_quad_partition(7, 2));
        REQUIRE(t.rows.size() == 3);
        CHECK(t.rows[0].exact == BigInt(0));
        CHECK(t.rows[0].frequency == 1);
        CHECK(t.rows[1].exact == BigInt(14406));
        CHECK(t.rows[1].frequency == BigInt(16805) * 16806);
        CHECK(t.rows[2].exact == BigInt(9604));
        CHECK(t.rows[2].frequency == 3 * BigInt(16806));
        CHECK(t.total_mass() == BigInt(16807) * 16807);
    }
    {
        // full 14-row table when n = 0 mod 3
        const ParamSet ps = validate_params(13, 3, 0);
        const PredictionTable t =
            weight_predictions(ps, solve_quad_partition(13, 3));
        CHECK(t.total_mass() == pow_bigint(13, 6));
        BigInt zero_rows = 0;
        for (const auto& row : t.rows) {
            REQUIRE(row.exact.has_value());
            CHECK(*row.exact >= 0);
            CHECK(*row.exact <= 2196);
            if (*row.exact == 0) {
                CHECK(row.frequency == 1);
                ++zero_rows;
            }
        }
        CHECK(zero_rows == 1);
    }
}
