#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sturmion/scalar.hpp"

namespace sturmion {

/// Dense univariate polynomial, ascending coefficients. The zero polynomial
/// has no coefficients; otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs);
    Polynomial(std::initializer_list<Scalar> coeffs) : Polynomial(std::vector<Scalar>(coeffs)) {}

    static Polynomial constant(const Scalar& c);
    /// x - root
    static Polynomial linear(const Scalar& root);
    static Polynomial monomial(const Scalar& c, size_t power);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^i; zero past the degree.
    Scalar coeff(size_t i) const;
    const Scalar& leading() const;
    bool is_monic() const;
    bool is_exact() const;

    Polynomial monic() const;
    Polynomial scaled(const Scalar& c) const;
    /// p(scale * x + shift)
    Polynomial compose_affine(const Scalar& scale, const Scalar& shift) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& c, const Polynomial& p) { return p.scaled(c); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Human-readable form, e.g. "x^3 - 3x^2 + 2x"; rational coefficients as
    /// "(p/q)" when not integral.
    std::string to_string() const;

private:
    void trim();
    std::vector<Scalar> coeffs_;
};

/// Monic polynomial with the given roots (duplicates allowed).
Polynomial poly_from_roots(std::span<const Scalar> roots);

Polynomial derivative(const Polynomial& p);

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Long division: a = quotient * b + remainder with deg(remainder) < deg(b).
/// Each step removes the current leading term outright, so the degree drops
/// by construction in both backends.
DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Horner evaluation in the promoted backend.
Scalar eval(const Polynomial& p, const Scalar& x);

/// Parses "x^3-3x^2+2x", "1/2x - 3", "3*x^2". Integer or rational
/// coefficients, '^' powers, optional '*' between coefficient and x only.
Polynomial parse_polynomial(const std::string& text);

}  // namespace sturmion
