#pragma once

#include <cstdint>

#include "error.hpp"

namespace corr13 {

// Residue of g = ((q-1)/3) * p^{n-i} mod (q-1) modulo 3; the residue 2 is
// inadmissible and rejected by validate_params.
enum class CaseTag { One, Zero };

inline const char* case_tag_name(CaseTag tag)
{
    return tag == CaseTag::One ? "one" : "zero";
}

struct ParamSet {
    uint64_t p = 0;
    uint32_t n = 0;
    uint32_t i = 0;
    uint64_t q = 0; // p^n

    // Decimation data; meaningful only when has_decimation is set.
    bool has_decimation = false;
    uint64_t d = 0; // (q-1)/3 + p^i
    uint64_t g = 0; // exponent of beta = psi^g, beta^{p^i} = psi^{(q-1)/3}
    CaseTag case_tag = CaseTag::One;
};

bool is_prime(uint64_t m);

// Field-only validation: p prime with p = 1 mod 3, n >= 1. Enough for the
// cyclotomy, period and quadratic-partition machinery, which do not involve
// a decimation exponent.
ParamSet field_params(uint64_t p, uint32_t n);

// Full validation of the triple (p, n, i) including the admissibility of the
// decimation d = (q-1)/3 + p^i. Establishes gcd(d, q-1) = 1.
ParamSet validate_params(uint64_t p, uint32_t n, uint32_t i);

} // namespace corr13
