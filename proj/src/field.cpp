#include "field.hpp"

#include <algorithm>
#include <string>

namespace corr13 {

namespace {

using Poly = std::vector<uint32_t>; // coefficients ascending, length n, mod p

std::vector<uint64_t> prime_factors(uint64_t m)
{
    std::vector<uint64_t> fs;
    for (uint64_t f = 2; f * f <= m; ++f) {
        if (m % f == 0) {
            fs.push_back(f);
            while (m % f == 0) m /= f;
        }
    }
    if (m > 1) fs.push_back(m);
    return fs;
}

// Arithmetic in F_p[x] modulo a monic `mod` of degree n (coeffs ascending,
// length n+1). Operands have degree < n.
struct PolyRing {
    uint64_t p;
    std::vector<uint32_t> mod; // monic, size n+1
    uint32_t n;

    Poly mul(const Poly& a, const Poly& b) const
    {
        std::vector<uint64_t> r(2 * n - 1, 0);
        for (uint32_t i = 0; i < n; ++i) {
            if (!a[i]) continue;
            for (uint32_t j = 0; j < n; ++j) {
                if (b[j]) r[i + j] += uint64_t(a[i]) * b[j] % p;
            }
        }
        for (uint32_t i = 2 * n - 2; i >= n && i < 2 * n; --i) {
            uint64_t c = r[i] % p;
            if (c) {
                r[i] = 0;
                for (uint32_t k = 0; k < n; ++k) {
                    // subtract c * mod[k] * x^{i-n+k}
                    r[i - n + k] += c * (p - mod[k]) % p;
                }
            }
            if (i == n) break;
        }
        Poly out(n);
        for (uint32_t k = 0; k < n; ++k) out[k] = uint32_t(r[k] % p);
        return out;
    }

    Poly pow(Poly base, uint64_t e) const
    {
        Poly r(n, 0);
        r[0] = 1;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    bool is_one(const Poly& a) const
    {
        if (a[0] != 1) return false;
        return std::all_of(a.begin() + 1, a.end(), [](uint32_t c) { return c == 0; });
    }
};

Poly code_to_poly(uint64_t code, uint64_t p, uint32_t n)
{
    Poly out(n);
    for (uint32_t k = 0; k < n; ++k) {
        out[k] = uint32_t(code % p);
        code /= p;
    }
    return out;
}

uint64_t poly_to_code(const Poly& a, uint64_t p)
{
    uint64_t code = 0;
    for (size_t k = a.size(); k-- > 0;) code = code * p + a[k];
    return code;
}

// gcd(a, f) in F_p[x] has positive degree? Coefficients ascending, any length.
bool gcd_has_positive_degree(std::vector<uint32_t> a, std::vector<uint32_t> b,
                             uint64_t p)
{
    auto deg = [](const std::vector<uint32_t>& v) -> int {
        for (int d = int(v.size()) - 1; d >= 0; --d)
            if (v[d]) return d;
        return -1;
    };
    auto inv_mod_p = [p](uint64_t x) {
        // p prime; Fermat
        uint64_t r = 1, base = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    for (;;) {
        int da = deg(a), db = deg(b);
        if (db < 0) return da >= 1;
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        uint64_t c = uint64_t(a[da]) * inv_mod_p(b[db]) % p;
        int sh = da - db;
        for (int k = 0; k <= db; ++k) {
            uint64_t sub = c * b[k] % p;
            a[k + sh] = uint32_t((a[k + sh] + p - sub) % p);
        }
    }
}

// Standard test: f (monic, degree n) is irreducible iff x^{p^n} = x (mod f)
// and gcd(x^{p^{n/r}} - x, f) = 1 for every prime r | n.
bool is_irreducible(const std::vector<uint32_t>& f, uint64_t p, uint32_t n)
{
    if (n == 1) return true;
    PolyRing ring{p, f, n};
    Poly x(n, 0);
    x[1] = 1;

    // x^{p^k} by k successive p-th powers.
    auto frob_iterate = [&](uint32_t k) {
        Poly r = x;
        for (uint32_t s = 0; s < k; ++s) r = ring.pow(r, p);
        return r;
    };

    if (frob_iterate(n) != x) return false;
    for (uint64_t r : prime_factors(n)) {
        Poly g = frob_iterate(uint32_t(n / r));
        std::vector<uint32_t> diff(n);
        for (uint32_t k = 0; k < n; ++k)
            diff[k] = uint32_t((g[k] + p - x[k]) % p);
        if (gcd_has_positive_degree(diff, f, p)) return false;
    }
    return true;
}

std::vector<uint32_t> find_modulus(uint64_t p, uint32_t n)
{
    // Candidates in code order: the non-leading coefficients read as base-p
    // digits. For n = 1 this picks f = x; the modulus is formal there.
    uint64_t span = 1;
    for (uint32_t k = 0; k < n; ++k) span *= p;
    for (uint64_t code = 0; code < span; ++code) {
        std::vector<uint32_t> f(n + 1, 0);
        uint64_t c = code;
        for (uint32_t k = 0; k < n; ++k) {
            f[k] = uint32_t(c % p);
            c /= p;
        }
        f[n] = 1;
        if (is_irreducible(f, p, n)) return f;
    }
    fail(ErrorCode::Internal, "irreducible search exhausted");
}

} // namespace

FieldCtx FieldCtx::build(const ParamSet& params, uint64_t max_q)
{
    const uint64_t p = params.p;
    const uint32_t n = params.n;
    const uint64_t q = params.q;
    if (q > max_q) {
        fail(ErrorCode::FieldTooLarge, "q = " + std::to_string(q) +
                                           " exceeds the ceiling " +
                                           std::to_string(max_q));
    }
    const uint64_t m = q - 1;

    FieldCtx ctx(params);
    ctx.modulus_ = find_modulus(p, n);
    PolyRing ring{p, ctx.modulus_, n};

    // Smallest element code of multiplicative order exactly q-1.
    const auto factors = prime_factors(m);
    uint64_t psi_code = 0;
    for (uint64_t cand = 2; cand < q; ++cand) {
        Poly a = code_to_poly(cand, p, n);
        bool primitive = true;
        for (uint64_t r : factors) {
            if (ring.is_one(ring.pow(a, m / r))) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            psi_code = cand;
            break;
        }
    }
    if (psi_code == 0) fail(ErrorCode::Internal, "no primitive element found");

    ctx.antilog_.assign(m, 0);
    ctx.log_.assign(q, 0);
    {
        Poly cur(n, 0);
        cur[0] = 1;
        Poly psi = code_to_poly(psi_code, p, n);
        for (uint64_t t = 0; t < m; ++t) {
            uint64_t code = poly_to_code(cur, p);
            ctx.antilog_[t] = uint32_t(code);
            ctx.log_[code] = uint32_t(t);
            cur = ring.mul(cur, psi);
        }
        if (!ring.is_one(cur)) fail(ErrorCode::Internal, "psi order mismatch");
    }

    // Tr on the power basis, extended linearly to all codes.
    std::vector<uint32_t> basis_trace(n);
    for (uint32_t j = 0; j < n; ++j) {
        uint64_t code = 1;
        for (uint32_t k = 0; k < j; ++k) code *= p;
        uint64_t t = ctx.log_[code];
        Poly acc(n, 0);
        for (uint32_t k = 0; k < n; ++k) {
            uint64_t e = t;
            for (uint32_t s = 0; s < k; ++s) e = e * (p % m) % m;
            Poly term = code_to_poly(ctx.antilog_[e], p, n);
            for (uint32_t c = 0; c < n; ++c)
                acc[c] = uint32_t((acc[c] + term[c]) % p);
        }
        for (uint32_t c = 1; c < n; ++c) {
            if (acc[c]) fail(ErrorCode::Internal, "trace of basis element not in F_p");
        }
        basis_trace[j] = acc[0];
    }
    ctx.trace_.assign(q, 0);
    for (uint64_t code = 0; code < q; ++code) {
        uint64_t c = code, acc = 0;
        for (uint32_t k = 0; k < n; ++k) {
            acc += c % p * basis_trace[k] % p;
            c /= p;
        }
        ctx.trace_[code] = uint32_t(acc % p);
    }

    uint64_t omega_code = ctx.antilog_[m / 3];
    if (omega_code >= p) {
        fail(ErrorCode::Internal, "psi^{(q-1)/3} is not in the prime subfield");
    }
    ctx.omega_p_ = uint32_t(omega_code);
    if ((uint64_t(ctx.omega_p_) * ctx.omega_p_ + ctx.omega_p_ + 1) % p != 0) {
        fail(ErrorCode::Internal, "omega is not a primitive cube root of unity");
    }
    return ctx;
}

uint64_t FieldCtx::frob_inverse_pow(uint64_t code) const
{
    if (code == 0) return 0;
    const uint64_t m = order();
    uint64_t e = 1;
    for (uint32_t k = 0; k < params_.n - params_.i; ++k) e = e * (params_.p % m) % m;
    uint64_t t = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(log_[code]) * e) % m);
    return antilog_[t];
}

uint64_t FieldCtx::beta() const
{
    if (!params_.has_decimation) {
        fail(ErrorCode::BadArgument, "beta requires decimation parameters");
    }
    return antilog_[params_.g];
}

uint64_t FieldCtx::add(uint64_t a, uint64_t b) const
{
    const uint64_t p = params_.p;
    uint64_t out = 0, mult = 1;
    for (uint32_t k = 0; k < params_.n; ++k) {
        out += (a % p + b % p) % p * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

uint64_t FieldCtx::neg(uint64_t a) const
{
    const uint64_t p = params_.p;
    uint64_t out = 0, mult = 1;
    for (uint32_t k = 0; k < params_.n; ++k) {
        uint64_t digit = a % p;
        out += (digit ? p - digit : 0) * mult;
        a /= p;
        mult *= p;
    }
    return out;
}

uint64_t FieldCtx::sub(uint64_t a, uint64_t b) const
{
    return add(a, neg(b));
}

uint64_t FieldCtx::mul(uint64_t a, uint64_t b) const
{
    if (a == 0 || b == 0) return 0;
    const uint64_t m = order();
    return antilog_[(uint64_t(log_[a]) + log_[b]) % m];
}

uint64_t FieldCtx::pow_elem(uint64_t a, uint64_t e) const
{
    if (a == 0) return e == 0 ? 1 : 0;
    const uint64_t m = order();
    uint64_t t = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(log_[a]) * (e % m)) % m);
    return antilog_[t];
}

} // namespace corr13
