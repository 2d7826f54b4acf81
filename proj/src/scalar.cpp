#include "sturmion/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "sturmion/error.hpp"

namespace sturmion {

namespace {

long common_precision(const Scalar& a, const Scalar& b) {
    return std::max(a.precision().value_or(0), b.precision().value_or(0));
}

template <typename ExactOp, typename FloatOp>
Scalar combine(const Scalar& a, const Scalar& b, ExactOp exact, FloatOp floating) {
    if (a.is_exact() && b.is_exact()) return Scalar(exact(a.rational(), b.rational()));
    const long prec = common_precision(a, b);
    return Scalar(floating(a.to_bigfloat(prec), b.to_bigfloat(prec)));
}

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Scalar::Scalar(Rational value) : value_(std::move(value)) {
    std::get<Rational>(value_).canonicalize();
}

Scalar Scalar::ratio(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    return Scalar(Rational(num, den));
}

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_text(s)) throw Error(ErrorKind::Parse, "not a rational number: '" + text + "'");
        return Scalar(Rational(s[0] == '+' ? s.substr(1) : s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
        throw Error(ErrorKind::Parse, "not a rational number: '" + text + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    mpz_class d(den);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
    return Scalar(Rational(mpz_class(num), d));
}

const Rational& Scalar::rational() const {
    if (!is_exact()) throw Error(ErrorKind::InvalidArgument, "scalar is not an exact rational");
    return std::get<Rational>(value_);
}

const BigFloat& Scalar::bigfloat() const {
    if (is_exact()) throw Error(ErrorKind::InvalidArgument, "scalar is not a BigFloat");
    return std::get<BigFloat>(value_);
}

std::optional<long> Scalar::precision() const {
    if (is_exact()) return std::nullopt;
    return std::get<BigFloat>(value_).precision();
}

BigFloat Scalar::to_bigfloat(long precision_bits) const {
    if (is_exact()) return BigFloat(std::get<Rational>(value_), precision_bits);
    return std::get<BigFloat>(value_).with_precision(
        std::max(precision_bits, std::get<BigFloat>(value_).precision()));
}

double Scalar::to_double() const {
    if (is_exact()) return std::get<Rational>(value_).get_d();
    return std::get<BigFloat>(value_).to_double();
}

int Scalar::sign() const {
    if (is_exact()) return sgn(std::get<Rational>(value_));
    return std::get<BigFloat>(value_).sign();
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(Rational(-std::get<Rational>(value_)));
    return Scalar(-std::get<BigFloat>(value_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); },
                   [](const BigFloat& x, const BigFloat& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); },
                   [](const BigFloat& x, const BigFloat& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); },
                   [](const BigFloat& x, const BigFloat& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "scalar division by zero");
    return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x / y); },
                   [](const BigFloat& x, const BigFloat& y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
    const long prec = common_precision(a, b);
    return a.to_bigfloat(prec) == b.to_bigfloat(prec);
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) {
        const int c = cmp(a.rational(), b.rational());
        if (c < 0) return std::partial_ordering::less;
        if (c > 0) return std::partial_ordering::greater;
        return std::partial_ordering::equivalent;
    }
    const long prec = common_precision(a, b);
    return a.to_bigfloat(prec) <=> b.to_bigfloat(prec);
}

std::string Scalar::to_string() const {
    if (is_exact()) {
        const Rational& q = std::get<Rational>(value_);
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    return std::get<BigFloat>(value_).to_string();
}

Scalar pow(const Scalar& x, unsigned k) {
    Scalar result(1);
    Scalar base = x;
    while (k != 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k != 0) base *= base;
    }
    return result;
}

}  // namespace sturmion
