#include "sturmion/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "sturmion/error.hpp"

namespace sturmion {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

Polynomial Polynomial::linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

Polynomial Polynomial::monomial(const Scalar& c, size_t power) {
    std::vector<Scalar> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
}

Scalar Polynomial::coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

const Scalar& Polynomial::leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == Scalar(1); }

bool Polynomial::is_exact() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_exact(); });
}

Polynomial Polynomial::monic() const {
    const Scalar lead = leading();
    std::vector<Scalar> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c / lead);
    v.back() = Scalar(1);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    std::vector<Scalar> v;
    v.reserve(coeffs_.size());
    for (const auto& a : coeffs_) v.push_back(a * c);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::compose_affine(const Scalar& scale, const Scalar& shift) const {
    // Horner in polynomial arithmetic: ((c_n) * t + c_{n-1}) * t + ...
    const Polynomial t({shift, scale});
    Polynomial out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        out = out * t + Polynomial::constant(*it);
    }
    return out;
}

Polynomial Polynomial::operator-() const { return scaled(Scalar(-1)); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        const Scalar& c = coeffs_[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Scalar mag = c.abs();
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = mag == Scalar(1);
        if (!unit || k == 0) {
            if (mag.is_exact()) {
                const Rational& q = mag.rational();
                out += q.get_den() == 1 ? q.get_num().get_str() : "(" + q.get_str() + ")";
            } else {
                out += mag.to_string();
            }
        }
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

Polynomial poly_from_roots(std::span<const Scalar> roots) {
    Polynomial p = Polynomial::constant(Scalar(1));
    for (const auto& r : roots) p = p * Polynomial::linear(r);
    return p;
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<Scalar> v;
    v.reserve(p.coeffs().size() - 1);
    for (size_t i = 1; i < p.coeffs().size(); ++i) v.push_back(p.coeffs()[i] * Scalar(static_cast<long>(i)));
    return Polynomial(std::move(v));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial{}, a};
    std::vector<Scalar> rem = a.coeffs();
    std::vector<Scalar> quot(static_cast<size_t>(a.degree() - db + 1));
    const Scalar& lead = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const auto ku = static_cast<size_t>(k);
        const Scalar t = rem[ku] / lead;
        quot[ku - static_cast<size_t>(db)] = t;
        if (!t.is_zero()) {
            for (int j = 0; j < db; ++j) {
                rem[ku - static_cast<size_t>(db) + static_cast<size_t>(j)] -= t * b.coeffs()[static_cast<size_t>(j)];
            }
        }
        rem.pop_back();
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Scalar eval(const Polynomial& p, const Scalar& x) {
    Scalar acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string text) : s_(std::move(text)) {}

    Polynomial parse() {
        if (s_.empty()) fail("empty polynomial");
        Polynomial out;
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            out = out + term(sign);
            first = false;
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::Parse, what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    std::string digits() {
        const size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Polynomial term(int sign) {
        Rational coef(1);
        bool has_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            has_coef = true;
            mpz_class num(digits());
            mpz_class den(1);
            if (peek() == '/') {
                ++pos_;
                const std::string d = digits();
                if (d.empty()) fail("expected denominator");
                den = mpz_class(d);
                if (den == 0) fail("zero denominator");
            }
            coef = Rational(num, den);
            coef.canonicalize();
        }
        size_t power = 0;
        if (has_coef && peek() == '*') {
            ++pos_;
            if (peek() != 'x') fail("'*' must be followed by x");
        }
        if (peek() == 'x') {
            ++pos_;
            power = 1;
            if (peek() == '^') {
                ++pos_;
                const std::string e = digits();
                if (e.empty()) fail("expected exponent");
                power = std::stoul(e);
            }
        } else if (!has_coef) {
            fail("expected coefficient or x");
        }
        if (sign < 0) coef = -coef;
        return Polynomial::monomial(Scalar(coef), power);
    }

    std::string s_;
    size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    return PolyParser(std::move(compact)).parse();
}

}  // namespace sturmion
