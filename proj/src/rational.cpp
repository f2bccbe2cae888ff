#include "mcd/rational.hpp"

#include <limits>

#include "mcd/errors.hpp"

namespace mcd {

namespace mp = boost::multiprecision;

ExactRational::ExactRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw InternalError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = mp::gcd(mp::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.num_ == 0) throw InternalError("rational division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ExactRational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

BigInt isqrt(const BigInt& v) {
    if (v < 0) throw InternalError("isqrt of a negative value");
    return mp::sqrt(v);
}

namespace {

BigInt pow10(int digits) {
    BigInt p = 1;
    for (int k = 0; k < digits; ++k) p *= 10;
    return p;
}

// `scaled` holds value * 10^digits, already truncated and nonnegative.
std::string format_fixed(const BigInt& scaled, int digits, bool negative) {
    std::string body = scaled.str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
    }
    return negative ? "-" + body : body;
}

}  // namespace

std::string to_decimal(const ExactRational& v, int digits) {
    const bool negative = v.num() < 0;
    const BigInt scaled = mp::abs(v.num()) * pow10(digits) / v.den();
    return format_fixed(scaled, digits, negative && scaled != 0);
}

std::string sqrt_decimal(const ExactRational& v, int digits) {
    if (v.num() < 0) throw InternalError("sqrt of a negative rational");
    const BigInt scaled = isqrt(v.num() * pow10(2 * digits) / v.den());
    return format_fixed(scaled, digits, false);
}

std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw InternalError("value " + v.str() + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace mcd
