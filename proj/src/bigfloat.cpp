#include "sturmion/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sturmion/error.hpp"

namespace sturmion {

namespace {

long checked_precision(long bits) {
    if (bits < kMinPrecisionBits) {
        throw Error(ErrorKind::InvalidArgument,
                    "precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
    }
    return bits;
}

template <typename Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
    BigFloat out(std::max(a.precision(), b.precision()));
    op(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
    mpfr_init2(value_, checked_precision(precision_bits));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const mpq_class& value, long precision_bits) {
    mpfr_init2(value_, checked_precision(precision_bits));
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long value, long precision_bits) {
    mpfr_init2(value_, checked_precision(precision_bits));
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::~BigFloat() {
    if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    // Steal the limbs; leave `other` as a valid zero at the same precision.
    *value_ = *other.value_;
    mpfr_init2(other.value_, mpfr_get_prec(value_));
    mpfr_set_zero(other.value_, 1);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat BigFloat::with_precision(long precision_bits) const {
    BigFloat out(precision_bits);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pi(long precision_bits) {
    BigFloat out(precision_bits);
    mpfr_const_pi(out.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::from_string(const std::string& text, long precision_bits) {
    BigFloat out(precision_bits);
    if (mpfr_set_str(out.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
        throw Error(ErrorKind::Parse, "not a decimal number: '" + text + "'");
    }
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "BigFloat division by zero");
    return binary(a, b, mpfr_div);
}

bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

BigFloat BigFloat::abs() const {
    BigFloat out(precision());
    mpfr_abs(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sqrt() const {
    if (sign() < 0) throw Error(ErrorKind::InvalidArgument, "square root of a negative BigFloat");
    BigFloat out(precision());
    mpfr_sqrt(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::cos() const {
    BigFloat out(precision());
    mpfr_cos(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sin() const {
    BigFloat out(precision());
    mpfr_sin(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::exp2(long exponent, long precision_bits) {
    BigFloat out(1L, precision_bits);
    mpfr_mul_2si(out.value_, out.value_, exponent, MPFR_RNDN);
    return out;
}

std::string BigFloat::to_string() const {
    if (!is_finite()) {
        if (mpfr_nan_p(value_)) return "nan";
        return sign() < 0 ? "-inf" : "inf";
    }
    if (is_zero()) return "0";
    // bits * log10(2), plus a guard digit.
    const auto digits = static_cast<size_t>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 1;
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1), value_);
    return std::string(buf.data());
}

}  // namespace sturmion
