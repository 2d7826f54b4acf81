#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <variant>

#include "sturmion/bigfloat.hpp"

namespace sturmion {

using Rational = mpq_class;

/// A number in one of two backends: an exact, always-canonical rational or a
/// BigFloat with explicit precision. Mixing the two promotes to BigFloat at
/// the BigFloat operand's precision.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(int value) : value_(Rational(value)) {}
    Scalar(long value) : value_(Rational(value)) {}
    Scalar(Rational value);
    Scalar(BigFloat value) : value_(std::move(value)) {}

    static Scalar ratio(long num, long den);
    /// Parses "num/den" or a bare integer.
    static Scalar parse(const std::string& text);

    bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
    const Rational& rational() const;
    const BigFloat& bigfloat() const;

    /// Precision of a BigFloat value; nullopt for rationals.
    std::optional<long> precision() const;
    BigFloat to_bigfloat(long precision_bits) const;
    double to_double() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    Scalar abs() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    /// Exact equality (same backend semantics as arithmetic: mixed compares in BigFloat).
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// "num/den" for rationals, scientific decimal for BigFloat.
    std::string to_string() const;

private:
    std::variant<Rational, BigFloat> value_;
};

/// x^k for k >= 0.
Scalar pow(const Scalar& x, unsigned k);

}  // namespace sturmion
