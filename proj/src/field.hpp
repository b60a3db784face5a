#pragma once

#include <cstdint>
#include <vector>

#include "params.hpp"

namespace corr13 {

/// Fully tabulated F_{p^n}.
///
/// Elements are encoded as integers in [0, q): the base-p digits of a code
/// are the coefficients of the residue polynomial in the basis
/// 1, x, ..., x^{n-1} modulo the field modulus. The modulus is the first
/// monic irreducible of degree n in code order (coefficients read as base-p
/// digits), and psi is the smallest element code of multiplicative order
/// q-1, so runs are reproducible.
class FieldCtx {
public:
    static constexpr uint64_t kDefaultMaxQ = 20'000'000;

    static FieldCtx build(const ParamSet& params, uint64_t max_q = kDefaultMaxQ);

    const ParamSet& params() const noexcept { return params_; }
    uint64_t prime() const noexcept { return params_.p; }
    uint64_t q() const noexcept { return params_.q; }
    /// Order of the multiplicative group, q - 1.
    uint64_t order() const noexcept { return params_.q - 1; }

    /// Modulus coefficients c_0 .. c_n (ascending, monic).
    const std::vector<uint32_t>& modulus() const noexcept { return modulus_; }

    uint64_t psi() const noexcept { return antilog_[1]; }

    /// The residue omega in [0, p) with psi^{(q-1)/3} = omega in the prime
    /// subfield; a primitive cube root of unity mod p.
    uint32_t omega_p() const noexcept { return omega_p_; }

    uint64_t antilog(uint64_t t) const noexcept { return antilog_[t]; }

    uint64_t dlog(uint64_t code) const
    {
        if (code == 0) fail(ErrorCode::LogOfZero, "discrete log of zero");
        return log_[code];
    }

    uint32_t trace(uint64_t code) const noexcept { return trace_[code]; }

    /// Cubic coset index: dlog(x) mod 3.
    int cubic_class(uint64_t code) const
    {
        return static_cast<int>(dlog(code) % 3);
    }

    /// v^{p^{n-i}}, the unique element whose p^i-th power is v.
    uint64_t frob_inverse_pow(uint64_t code) const;

    /// beta = psi^g; requires decimation parameters.
    uint64_t beta() const;

    // Arithmetic on element codes.
    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t pow_elem(uint64_t a, uint64_t e) const;

private:
    explicit FieldCtx(const ParamSet& params) : params_(params) {}

    ParamSet params_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> antilog_; // t in [0, q-1) -> code of psi^t
    std::vector<uint32_t> log_;     // nonzero code -> exponent
    std::vector<uint32_t> trace_;   // code -> Tr(x) in [0, p)
    uint32_t omega_p_ = 0;
};

} // namespace corr13
