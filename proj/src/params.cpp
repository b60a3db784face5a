#include "params.hpp"

#include <numeric>
#include <string>

namespace corr13 {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m)
{
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t e, uint64_t m)
{
    uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

// p^n with an overflow guard; the field layer enforces its own ceiling later.
uint64_t checked_pow(uint64_t p, uint32_t n)
{
    constexpr uint64_t kLimit = uint64_t(1) << 62;
    uint64_t q = 1;
    for (uint32_t k = 0; k < n; ++k) {
        if (q > kLimit / p) {
            fail(ErrorCode::FieldTooLarge,
                 "p^n exceeds the representable range (p=" + std::to_string(p) +
                     ", n=" + std::to_string(n) + ")");
        }
        q *= p;
    }
    return q;
}

} // namespace

bool is_prime(uint64_t m)
{
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    if (m % 3 == 0) return m == 3;
    for (uint64_t f = 5; f * f <= m; f += 6) {
        if (m % f == 0 || m % (f + 2) == 0) return false;
    }
    return true;
}

ParamSet field_params(uint64_t p, uint32_t n)
{
    if (n < 1) fail(ErrorCode::BadArgument, "n must be at least 1");
    if (!is_prime(p)) {
        fail(ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
    }
    if (p % 3 != 1) {
        fail(ErrorCode::PNotOneModThree,
             "p = " + std::to_string(p) + " is not congruent to 1 mod 3");
    }
    ParamSet ps;
    ps.p = p;
    ps.n = n;
    ps.q = checked_pow(p, n);
    return ps;
}

ParamSet validate_params(uint64_t p, uint32_t n, uint32_t i)
{
    ParamSet ps = field_params(p, n);
    if (i >= n) {
        fail(ErrorCode::IOutOfRange, "i = " + std::to_string(i) +
                                         " is out of range [0, " +
                                         std::to_string(n) + ")");
    }
    ps.i = i;
    const uint64_t m = ps.q - 1; // 3 | m since p = 1 mod 3

    uint64_t pi = 1;
    for (uint32_t k = 0; k < i; ++k) pi *= p;
    ps.d = m / 3 + pi;

    // g is the unique exponent with (psi^g)^{p^i} = psi^{(q-1)/3}, obtained
    // from p^n = 1 mod (q-1).
    ps.g = mulmod(m / 3, powmod(p % m, n - i, m), m);

    switch (ps.g % 3) {
    case 0: ps.case_tag = CaseTag::Zero; break;
    case 1: ps.case_tag = CaseTag::One; break;
    default:
        fail(ErrorCode::GModThreeIsTwo,
             "inadmissible decimation: g = " + std::to_string(ps.g) +
                 " is congruent to 2 mod 3");
    }

    if (std::gcd(ps.d, m) != 1) {
        // Cannot happen for admissible parameters; guards the invariant.
        fail(ErrorCode::Internal, "gcd(d, q-1) != 1 for admissible parameters");
    }
    ps.has_decimation = true;
    return ps;
}

} // namespace corr13
