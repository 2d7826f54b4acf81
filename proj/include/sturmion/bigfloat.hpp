#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>

namespace sturmion {

inline constexpr long kMinPrecisionBits = 64;
inline constexpr long kDefaultPrecisionBits = 256;

/// RAII wrapper around an mpfr_t carrying its own precision.
///
/// Binary operations run at the larger of the two operand precisions and
/// round to nearest.
class BigFloat {
public:
    explicit BigFloat(long precision_bits = kDefaultPrecisionBits);
    BigFloat(const mpq_class& value, long precision_bits);
    BigFloat(long value, long precision_bits);
    ~BigFloat();

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;

    long precision() const noexcept { return static_cast<long>(mpfr_get_prec(value_)); }

    /// Same value rounded to a different precision.
    BigFloat with_precision(long precision_bits) const;

    static BigFloat pi(long precision_bits);
    /// Parses a decimal string such as "-1.25e-3".
    static BigFloat from_string(const std::string& text, long precision_bits);

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    friend bool operator==(const BigFloat& a, const BigFloat& b);
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

    int sign() const noexcept { return mpfr_sgn(value_); }
    bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat cos() const;
    BigFloat sin() const;
    /// 2^exponent at the given precision.
    static BigFloat exp2(long exponent, long precision_bits);

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Scientific decimal with enough digits to round-trip the precision.
    std::string to_string() const;

    mpfr_srcptr raw() const noexcept { return value_; }
    mpfr_ptr raw() noexcept { return value_; }

private:
    mpfr_t value_;
};

}  // namespace sturmion
