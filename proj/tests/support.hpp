#pragma once

#include <map>
#include <random>
#include <utility>

#include "field.hpp"
#include "params.hpp"

namespace corr13::test {

// Fields are immutable after construction; one instance per (p, n) serves
// every test in the binary.
inline const FieldCtx& field(uint64_t p, uint32_t n)
{
    static std::map<std::pair<uint64_t, uint32_t>, FieldCtx> cache;
    auto key = std::make_pair(p, n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, FieldCtx::build(field_params(p, n))).first;
    }
    return it->second;
}

inline const FieldCtx& field(const ParamSet& params)
{
    return field(params.p, params.n);
}

inline std::mt19937_64 rng(uint64_t seed = 0x5eed)
{
    return std::mt19937_64(seed);
}

// Minimal polynomial-basis arithmetic, independent of the log/antilog
// tables; cross-checks the table-driven paths on small fields.
struct SlowField {
    uint64_t p;
    uint32_t n;
    std::vector<uint32_t> modulus; // ascending, monic

    explicit SlowField(const FieldCtx& ctx)
        : p(ctx.prime()), n(ctx.params().n), modulus(ctx.modulus())
    {
    }

    std::vector<uint32_t> decode(uint64_t code) const
    {
        std::vector<uint32_t> digits(n);
        for (uint32_t k = 0; k < n; ++k) {
            digits[k] = uint32_t(code % p);
            code /= p;
        }
        return digits;
    }

    uint64_t encode(const std::vector<uint32_t>& digits) const
    {
        uint64_t code = 0;
        for (size_t k = digits.size(); k-- > 0;) code = code * p + digits[k];
        return code;
    }

    uint64_t mul(uint64_t a, uint64_t b) const
    {
        const auto da = decode(a), db = decode(b);
        std::vector<uint64_t> prod(2 * n - 1, 0);
        for (uint32_t x = 0; x < n; ++x) {
            for (uint32_t y = 0; y < n; ++y) {
                prod[x + y] = (prod[x + y] + uint64_t(da[x]) * db[y]) % p;
            }
        }
        for (uint32_t k = 2 * n - 2; k >= n && k < 2 * n; --k) {
            const uint64_t c = prod[k];
            if (c) {
                prod[k] = 0;
                for (uint32_t j = 0; j < n; ++j) {
                    prod[k - n + j] =
                        (prod[k - n + j] + c * (p - modulus[j])) % p;
                }
            }
        }
        std::vector<uint32_t> digits(n);
        for (uint32_t k = 0; k < n; ++k) digits[k] = uint32_t(prod[k]);
        return encode(digits);
    }

    uint64_t pow(uint64_t a, uint64_t e) const
    {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    uint64_t add(uint64_t a, uint64_t b) const
    {
        const auto da = decode(a), db = decode(b);
        std::vector<uint32_t> digits(n);
        for (uint32_t k = 0; k < n; ++k) digits[k] = (da[k] + db[k]) % p;
        return encode(digits);
    }

    // Tr(x) = sum of the n Frobenius powers, all in the polynomial basis.
    uint64_t trace(uint64_t code) const
    {
        uint64_t acc = 0, frob = code;
        for (uint32_t k = 0; k < n; ++k) {
            acc = add(acc, frob);
            frob = pow(frob, p);
        }
        return acc; // lies in the prime subfield
    }
};

} // namespace corr13::test
