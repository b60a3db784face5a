#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace corr13 {

/// Exact element of Z[zeta_p], zeta_p a primitive p-th root of unity, stored
/// as coefficients c_0..c_{p-1} of sum c_k zeta^k. The single relation
/// sum_k zeta^k = 0 makes the representative with c_{p-1} = 0 canonical;
/// values are equal in the ring iff their canonical coefficient lists match.
///
/// Numeric evaluation is double precision with absolute error at most
/// p * max|c_k| * 2^-50; it is used only to match exact values against
/// closed-form cosine expressions, never for equality decisions.
class CycInt {
public:
    explicit CycInt(uint32_t p) : coeffs_(p) {}

    static CycInt integer(uint32_t p, BigInt value)
    {
        CycInt x(p);
        x.coeffs_[0] = std::move(value);
        return x;
    }

    /// Builds sum counts[k] * zeta^k from a residue histogram.
    static CycInt from_residue_counts(uint32_t p, std::span<const int64_t> counts);

    uint32_t prime() const noexcept { return uint32_t(coeffs_.size()); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// acc + multiplicity * zeta^k; no canonicalization.
    void add_root(uint32_t k, const BigInt& multiplicity);

    void canonicalize();
    CycInt canonical() const;
    bool is_canonical() const { return coeffs_.back() == 0; }

    CycInt& operator+=(const CycInt& rhs);
    CycInt& operator-=(const CycInt& rhs);
    CycInt& operator*=(const BigInt& scalar);
    CycInt& add_integer(const BigInt& value);

    friend CycInt operator+(CycInt lhs, const CycInt& rhs) { return lhs += rhs; }
    friend CycInt operator-(CycInt lhs, const CycInt& rhs) { return lhs -= rhs; }
    friend CycInt operator*(CycInt lhs, const BigInt& scalar) { return lhs *= scalar; }

    /// Image under the Galois map zeta -> zeta^m; requires m != 0 mod p.
    CycInt galois_apply(uint32_t m) const;

    /// The value as a rational integer, if it is one.
    std::optional<BigInt> as_integer() const;

    std::complex<double> eval_numeric() const;

    bool operator==(const CycInt& rhs) const;
    bool operator!=(const CycInt& rhs) const { return !(*this == rhs); }

    /// Strict ordering of canonical coefficient lists (deterministic map key;
    /// both sides must be canonical).
    static bool lex_less(const CycInt& a, const CycInt& b);

    std::string to_string() const;

private:
    std::vector<BigInt> coeffs_;
};

struct CycIntLess {
    bool operator()(const CycInt& a, const CycInt& b) const
    {
        return CycInt::lex_less(a, b);
    }
};

/// Multiset of exact ring values with big-integer frequencies.
class Distribution {
public:
    void add(const CycInt& value, const BigInt& count = 1);
    void merge(const Distribution& other);

    const std::map<CycInt, BigInt, CycIntLess>& entries() const { return entries_; }
    BigInt total_mass() const;
    size_t distinct() const { return entries_.size(); }
    BigInt frequency_of(const CycInt& value) const;

    struct NumericEntry {
        CycInt value;
        double real;
        double imag;
        BigInt frequency;
    };
    /// Entries ordered by numeric real part (exact order as tiebreak).
    std::vector<NumericEntry> sorted_by_real() const;

    bool operator==(const Distribution& rhs) const { return entries_ == rhs.entries_; }

private:
    std::map<CycInt, BigInt, CycIntLess> entries_;
};

} // namespace corr13
