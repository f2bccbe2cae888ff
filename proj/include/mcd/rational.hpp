#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcd {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with a positive denominator. Comparisons
/// cross-multiply; nothing here touches floating point.
class ExactRational {
public:
    ExactRational() : num_(0), den_(1) {}
    ExactRational(BigInt num, BigInt den = 1);  // NOLINT(google-explicit-constructor)

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

    /// "num/den", or just "num" when den == 1.
    std::string str() const;

private:
    BigInt num_;
    BigInt den_;
};

/// floor(sqrt(v)) for v >= 0.
BigInt isqrt(const BigInt& v);

/// Truncated decimal expansion with exactly `digits` fractional digits.
std::string to_decimal(const ExactRational& v, int digits);

/// Truncated decimal expansion of sqrt(v), v >= 0, with `digits` fractional
/// digits: isqrt(v * 10^(2 digits)) scaled back.
std::string sqrt_decimal(const ExactRational& v, int digits);

/// Narrowing that throws InternalError when the value does not fit.
std::int64_t to_int64(const BigInt& v);

}  // namespace mcd
