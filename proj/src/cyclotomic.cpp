#include "cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace corr13 {

CycInt CycInt::from_residue_counts(uint32_t p, std::span<const int64_t> counts)
{
    if (counts.size() != p) {
        fail(ErrorCode::BadArgument, "residue histogram size mismatch");
    }
    CycInt x(p);
    for (uint32_t k = 0; k < p; ++k) x.coeffs_[k] = counts[k];
    return x;
}

void CycInt::add_root(uint32_t k, const BigInt& multiplicity)
{
    if (k >= prime()) fail(ErrorCode::BadArgument, "root exponent out of range");
    coeffs_[k] += multiplicity;
}

void CycInt::canonicalize()
{
    const BigInt last = coeffs_.back();
    if (last == 0) return;
    for (auto& c : coeffs_) c -= last;
}

CycInt CycInt::canonical() const
{
    CycInt out = *this;
    out.canonicalize();
    return out;
}

CycInt& CycInt::operator+=(const CycInt& rhs)
{
    if (prime() != rhs.prime()) fail(ErrorCode::BadArgument, "mixed primes");
    for (uint32_t k = 0; k < prime(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs)
{
    if (prime() != rhs.prime()) fail(ErrorCode::BadArgument, "mixed primes");
    for (uint32_t k = 0; k < prime(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

CycInt& CycInt::operator*=(const BigInt& scalar)
{
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

CycInt& CycInt::add_integer(const BigInt& value)
{
    coeffs_[0] += value;
    return *this;
}

CycInt CycInt::galois_apply(uint32_t m) const
{
    const uint32_t p = prime();
    if (m % p == 0) fail(ErrorCode::BadArgument, "Galois exponent divisible by p");
    CycInt out(p);
    for (uint32_t k = 0; k < p; ++k) {
        out.coeffs_[uint32_t(uint64_t(m) * k % p)] += coeffs_[k];
    }
    return out;
}

std::optional<BigInt> CycInt::as_integer() const
{
    CycInt c = canonical();
    for (uint32_t k = 1; k < prime(); ++k) {
        if (c.coeffs_[k] != 0) return std::nullopt;
    }
    return c.coeffs_[0];
}

std::complex<double> CycInt::eval_numeric() const
{
    const uint32_t p = prime();
    double re = 0.0, im = 0.0;
    for (uint32_t k = 0; k < p; ++k) {
        if (coeffs_[k] == 0) continue;
        const double c = to_double(coeffs_[k]);
        const double angle = 2.0 * std::numbers::pi * k / p;
        re += c * std::cos(angle);
        im += c * std::sin(angle);
    }
    return {re, im};
}

bool CycInt::operator==(const CycInt& rhs) const
{
    if (prime() != rhs.prime()) return false;
    const BigInt shift = coeffs_.back() - rhs.coeffs_.back();
    for (uint32_t k = 0; k < prime(); ++k) {
        if (coeffs_[k] - rhs.coeffs_[k] != shift) return false;
    }
    return true;
}

bool CycInt::lex_less(const CycInt& a, const CycInt& b)
{
    return a.coeffs_ < b.coeffs_;
}

std::string CycInt::to_string() const
{
    CycInt c = canonical();
    if (auto n = c.as_integer()) return n->str();
    std::ostringstream os;
    bool first = true;
    for (uint32_t k = 0; k < prime(); ++k) {
        if (c.coeffs_[k] == 0) continue;
        if (!first) os << (c.coeffs_[k] > 0 ? "+" : "");
        os << c.coeffs_[k].str();
        if (k > 0) os << "*z^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

void Distribution::add(const CycInt& value, const BigInt& count)
{
    entries_[value.canonical()] += count;
}

void Distribution::merge(const Distribution& other)
{
    for (const auto& [value, count] : other.entries_) entries_[value] += count;
}

BigInt Distribution::total_mass() const
{
    BigInt total = 0;
    for (const auto& [value, count] : entries_) total += count;
    return total;
}

BigInt Distribution::frequency_of(const CycInt& value) const
{
    auto it = entries_.find(value.canonical());
    return it == entries_.end() ? BigInt(0) : it->second;
}

std::vector<Distribution::NumericEntry> Distribution::sorted_by_real() const
{
    std::vector<NumericEntry> out;
    out.reserve(entries_.size());
    for (const auto& [value, count] : entries_) {
        auto z = value.eval_numeric();
        out.push_back({value, z.real(), z.imag(), count});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const NumericEntry& a, const NumericEntry& b) {
                         return a.real < b.real;
                     });
    return out;
}

} // namespace corr13
