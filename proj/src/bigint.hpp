#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace corr13 {

using BigInt = boost::multiprecision::cpp_int;

// Quotient of an exact division; anything with a remainder is a bug in a
// closed-form formula and raises `code`.
inline BigInt exact_div(const BigInt& num, const BigInt& den, ErrorCode code,
                        const char* context)
{
    BigInt quo = num / den;
    if (quo * den != num) {
        fail(code, std::string(context) + ": " + num.str() +
                       " is not divisible by " + den.str());
    }
    return quo;
}

inline double to_double(const BigInt& x)
{
    return x.convert_to<double>();
}

inline BigInt binomial(uint32_t n, uint32_t k)
{
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (uint32_t t = 0; t < k; ++t) {
        r *= n - t;
        r /= t + 1;
    }
    return r;
}

inline BigInt pow_bigint(const BigInt& base, uint32_t e)
{
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace corr13
