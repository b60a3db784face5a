#include <doctest.h>

#include "cyclotomy.hpp"
#include "sequences.hpp"
#include "support.hpp"

using namespace corr13;
using test::field;

namespace {

const ParamSet& params_13_3()
{
    static const ParamSet ps = validate_params(13, 3, 0);
    return ps;
}

} // namespace

TEST_CASE("degenerate exponential sums")
{
    const ParamSet& ps = params_13_3();
    const FieldCtx& f = field(ps);
    const CycInt zero(13);
    CHECK(exp_sum_w(f, 0, 0, ps.d) == CycInt::integer(13, BigInt(f.q())));
    auto gen = test::rng(29);
    std::uniform_int_distribution<uint64_t> nonzero(1, f.q() - 1);
    for (int s = 0; s < 10; ++s) {
        CHECK(exp_sum_w(f, 0, nonzero(gen), ps.d) == zero);
        CHECK(exp_sum_w(f, nonzero(gen), 0, ps.d) == zero);
    }
}

TEST_CASE("the exponential sum against direct polynomial evaluation")
{
    // small field, both routes fully independent of each other
    const ParamSet ps = validate_params(7, 2, 0);
    const FieldCtx& f = field(7, 2);
    const test::SlowField slow(f);
    auto gen = test::rng(31);
    std::uniform_int_distribution<uint64_t> any(0, f.q() - 1);
    for (int s = 0; s < 25; ++s) {
        const uint64_t u = any(gen), v = any(gen);
        std::vector<int64_t> hist(7, 0);
        for (uint64_t x = 0; x < f.q(); ++x) {
            const uint64_t ux = slow.mul(u, x);
            const uint64_t vxd = slow.mul(v, slow.pow(x, ps.d));
            const uint64_t e =
                (slow.trace(ux) + 7 - slow.trace(vxd) % 7) % 7;
            hist[e] += 1;
        }
        CHECK(exp_sum_w(f, u, v, ps.d) ==
              CycInt::from_residue_counts(7, hist));
    }
}

TEST_CASE("reduction and direct route agree on random shifts")
{
    const ParamSet& ps = params_13_3();
    const FieldCtx& f = field(ps);
    auto gen = test::rng(37);
    std::uniform_int_distribution<uint64_t> shift(0, f.order() - 1);
    for (int s = 0; s < 50; ++s) {
        const uint64_t tau = shift(gen);
        CHECK(cross_corr_value(f, ps.d, tau) ==
              cross_corr_value_direct(f, ps.d, tau));
    }
}

TEST_CASE("distribution matches the published 13-value table")
{
    const ParamSet& ps = params_13_3();
    const Distribution dist = cross_corr_distribution(field(ps), ps.d);
    CHECK(dist.total_mass() == 2196);
    CHECK(dist.distinct() == 13);

    const std::vector<std::pair<int64_t, int64_t>> expected{
        {-1, 501}, {-27, 84},  {90, 84},  {-66, 84}, {38, 234},
        {-53, 234}, {12, 234}, {51, 246}, {-40, 246}, {-14, 246},
        {701, 1},  {753, 1},  {740, 1}};
    for (const auto& [value, frequency] : expected) {
        CHECK(dist.frequency_of(CycInt::integer(13, value)) == frequency);
    }
}

TEST_CASE("first moment: the correlation values sum to one")
{
    for (auto [p, n, i] : {std::tuple<uint64_t, uint32_t, uint32_t>{13, 3, 0},
                           {7, 2, 0},
                           {13, 1, 0},
                           {7, 3, 0}}) {
        const ParamSet ps = validate_params(p, n, i);
        const FieldCtx& f = field(ps);
        const Distribution dist = cross_corr_distribution(f, ps.d);
        CycInt total{uint32_t(p)};
        for (const auto& [value, count] : dist.entries()) {
            total += value * count;
        }
        CHECK(total.as_integer() == BigInt(1));
        CHECK(dist.total_mass() == ps.q - 1);
        CHECK(dist.distinct() <= 13);
    }
}

TEST_CASE("worker count does not change the distribution")
{
    const ParamSet& ps = params_13_3();
    const FieldCtx& f = field(ps);
    const Distribution one = cross_corr_distribution(f, ps.d, 1);
    const Distribution four = cross_corr_distribution(f, ps.d, 4);
    CHECK(one == four);
}

TEST_CASE("cube coset decomposition of the exponential sum")
{
    // 3 W(u,v) = sum over j of sum over y of zeta^{Tr(y^3 u_j)}
    for (auto [p, n, i] : {std::tuple<uint64_t, uint32_t, uint32_t>{13, 3, 0},
                           {7, 2, 0},
                           {7, 5, 1}}) {
        const ParamSet ps = validate_params(p, n, i);
        const FieldCtx f = FieldCtx::build(ps);
        const uint64_t beta = f.beta();
        auto gen = test::rng(41);
        std::uniform_int_distribution<uint64_t> any(0, f.q() - 1);
        for (int s = 0; s < 100; ++s) {
            const uint64_t u = any(gen), v = any(gen);
            const uint64_t w = f.frob_inverse_pow(v);

            CycInt rhs{uint32_t(p)};
            uint64_t beta_j = 1, psi_j = 1;
            for (int j = 0; j < 3; ++j) {
                const uint64_t uj = f.mul(psi_j, f.sub(u, f.mul(w, beta_j)));
                std::vector<int64_t> hist(p, 0);
                for (uint64_t t = 0; t < f.q(); ++t) {
                    const uint64_t y3 = f.pow_elem(t, 3);
                    hist[f.trace(f.mul(uj, y3))] += 1;
                }
                rhs += CycInt::from_residue_counts(uint32_t(p), hist);
                beta_j = f.mul(beta_j, beta);
                psi_j = f.mul(psi_j, f.psi());
            }
            CHECK(exp_sum_w(f, u, v, ps.d) * BigInt(3) == rhs);
        }
    }
}

TEST_CASE("observed sums lie in the period value set")
{
    const ParamSet& ps = params_13_3();
    const FieldCtx& f = field(ps);
    const GaussianPeriods periods = gaussian_periods(f);
    const uint32_t p = 13;

    // candidate values scaled by 3: {0, 3(3n_j)+3, 2(3n_j)+(3n_{j+1})+3,
    // 2(3n_j)+(3n_{j+2})+3, (3n_j)+(3n_{j+1})+(q+2)} for the zero case tag
    std::vector<CycInt> candidates{CycInt(p)};
    for (int j = 0; j < 3; ++j) {
        const CycInt& ej = periods.coset_sum[j];
        const CycInt& e1 = periods.coset_sum[(j + 1) % 3];
        const CycInt& e2 = periods.coset_sum[(j + 2) % 3];
        candidates.push_back((ej * BigInt(3)).add_integer(3));
        candidates.push_back((ej * BigInt(2) + e1).add_integer(3));
        candidates.push_back((ej * BigInt(2) + e2).add_integer(3));
        candidates.push_back((ej + e1).add_integer(BigInt(ps.q) + 2));
    }

    auto gen = test::rng(43);
    std::uniform_int_distribution<uint64_t> any(0, f.q() - 1);
    std::uniform_int_distribution<uint64_t> nonzero(1, f.q() - 1);
    for (int s = 0; s < 200; ++s) {
        const CycInt w3 = exp_sum_w(f, any(gen), nonzero(gen), ps.d) * BigInt(3);
        bool found = false;
        for (const auto& c : candidates) {
            if (w3 == c) {
                found = true;
                break;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("the three rare values appear exactly once")
{
    const ParamSet& ps = params_13_3();
    const Distribution dist = cross_corr_distribution(field(ps), ps.d);
    int rare = 0;
    for (const auto& [value, count] : dist.entries()) {
        if (count == 1) ++rare;
    }
    CHECK(rare == 3);
}

TEST_CASE("plane distribution assembly")
{
    const ParamSet& ps = params_13_3();
    const FieldCtx& f = field(ps);
    const Distribution plane = w_distribution_over_plane(f, ps.d);
    const BigInt q = ps.q;
    CHECK(plane.total_mass() == q * q);
    CHECK(plane.frequency_of(CycInt(13)) >= 3 * (q - 1));
    CHECK(plane.frequency_of(CycInt::integer(13, q)) == 1);

    // spot-check: W values of random pairs appear in the support
    auto gen = test::rng(47);
    std::uniform_int_distribution<uint64_t> any(0, f.q() - 1);
    for (int s = 0; s < 20; ++s) {
        const CycInt w = exp_sum_w(f, any(gen), any(gen), ps.d);
        CHECK(plane.frequency_of(w) > 0);
    }

    // scaling soundness: W(u, v) = W(u v^{-d^{-1}}, 1)
    const uint64_t m = f.order();
    uint64_t d_inv = 0;
    for (uint64_t cand = 1; cand < m; ++cand) {
        if (static_cast<unsigned __int128>(cand) * ps.d % m == 1) {
            d_inv = cand;
            break;
        }
    }
    REQUIRE(d_inv != 0);
    auto nonzero = std::uniform_int_distribution<uint64_t>(1, f.q() - 1);
    for (int s = 0; s < 30; ++s) {
        const uint64_t u = any(gen), v = nonzero(gen);
        const uint64_t v_pow = f.pow_elem(v, d_inv);
        const uint64_t scaled = f.mul(u, f.pow_elem(v_pow, m - 1));
        CHECK(exp_sum_w(f, u, v, ps.d) == exp_sum_w(f, scaled, 1, ps.d));
    }
}

TEST_CASE("partition cell counts")
{
    const ParamSet& ps = params_13_3();
    const FieldCtx& f = field(ps);
    const PartitionCounts counts = partition_counts(f, ps);

    BigInt cell_sum = 0;
    for (const auto& c : counts.cells) cell_sum += c;
    CHECK(cell_sum == counts.in_g);
    const BigInt q = ps.q;
    CHECK(counts.in_g == q * q - 3 * (q - 1) - 1);

    // the identity u_0 + psi^{-1} beta u_1 + psi^{-2} beta^2 u_2 = 0
    const uint64_t beta = f.antilog(ps.g);
    const uint64_t psi_inv = f.pow_elem(f.psi(), f.order() - 1);
    auto gen = test::rng(53);
    std::uniform_int_distribution<uint64_t> any(0, f.q() - 1);
    for (int s = 0; s < 100; ++s) {
        const uint64_t u = any(gen), v = any(gen);
        const uint64_t w = f.frob_inverse_pow(v);
        const uint64_t u0 = f.sub(u, w);
        const uint64_t u1 = f.mul(f.psi(), f.sub(u, f.mul(w, beta)));
        const uint64_t u2 =
            f.mul(f.mul(f.psi(), f.psi()), f.sub(u, f.mul(w, f.mul(beta, beta))));
        const uint64_t lhs = f.add(
            u0, f.add(f.mul(f.mul(psi_inv, beta), u1),
                      f.mul(f.mul(f.mul(psi_inv, psi_inv), f.mul(beta, beta)),
                            u2)));
        CHECK(lhs == 0);
    }
}

TEST_CASE("partition cells tie to pair counts in the case-one regime")
{
    const ParamSet ps = validate_params(13, 1, 0);
    REQUIRE(ps.case_tag == CaseTag::One);
    const FieldCtx& f = field(13, 1);
    const PartitionCounts counts = partition_counts(f, ps);
    const PairCounts pairs = pair_counts_brute(f);
    CHECK(counts.cell(0, 0, 0) ==
          BigInt((ps.q - 1) / 3) * pairs.counts[0][0]);
}

TEST_CASE("partition oracle respects its ceiling")
{
    const ParamSet ps = validate_params(7, 5, 0);
    try {
        partition_counts(field(7, 5), ps, /*max_oracle_q=*/10'000);
        FAIL("expected FieldTooLargeForOracle");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldTooLargeForOracle);
    }
}

TEST_CASE("sequence emission")
{
    const ParamSet& ps = params_13_3();
    const FieldCtx& f = field(ps);
    const auto s = m_sequence(f);
    const auto sd = decimated_sequence(f, ps.d);
    REQUIRE(s.size() == f.order());
    REQUIRE(sd.size() == f.order());
    for (uint64_t t = 0; t < 50; ++t) {
        CHECK(s[t] == f.trace(f.antilog(t)));
        CHECK(sd[t] == s[ps.d * t % f.order()]);
    }
}
