#pragma once

#include <variant>
#include <vector>

#include "sturmion/jacobi.hpp"

namespace sturmion {

namespace family {

/// Monic Hahn polynomials on x_s = s, s = 0..N.
struct Hahn {
    Scalar alpha, beta;
    int N = 0;
};
/// Monic Racah polynomials on x(s) = s(s + gamma + delta + 1), alpha = -N-1.
struct Racah {
    Scalar beta, gamma, delta;
    int N = 0;
};
/// Monic q-Hahn polynomials on x_s = q^{-s}.
struct QHahn {
    Scalar a, b, q;
    int N = 0;
};
/// Monic Chebyshev polynomials truncated at degree N; their finite grid is
/// the zero set of T_{N+1}.
struct ChebyshevT {
    int N = 0;
};
struct ChebyshevU {
    int N = 0;
};
/// Monic ultraspherical C_n^{(lambda)}, truncated at degree N (no grid).
struct Ultraspherical {
    Scalar lambda;
    int N = 0;
};

}  // namespace family

using FamilySpec = std::variant<family::Hahn, family::Racah, family::QHahn, family::ChebyshevT, family::ChebyshevU,
                                family::Ultraspherical>;

std::string family_name(const FamilySpec& spec);
int family_size(const FamilySpec& spec);

/// (b_n, u_n) of x P_n = P_{n+1} + b_n P_n + u_n P_{n-1}; u_0 = 0.
struct RecurrencePair {
    Scalar b;
    Scalar u;
};

/// Throws DenominatorZero naming the family and index.
RecurrencePair recurrence_coeffs(const FamilySpec& spec, int n);

/// Checks every coefficient n = 0..N; throws DenominatorZero on the first bad index.
void validate(const FamilySpec& spec);

/// Jacobi matrix of b_0..b_N, u_1..u_N.
JacobiMatrix family_jacobi(const FamilySpec& spec);

/// Grid values in index order s = 0..N (trigonometric nodes in BigFloat).
std::vector<Scalar> native_nodes(const FamilySpec& spec, long precision = kDefaultPrecisionBits);

/// Normalized orthogonality weights sorted by node.
SpectralData family_weights(const FamilySpec& spec, long precision = kDefaultPrecisionBits);

/// Normalization sum_s of the unnormalized weights, by closed form.
Scalar total_mass(const FamilySpec& spec);

/// kappa_n, the factor making the terminating series monic.
Scalar kappa(const FamilySpec& spec, int n);

/// kappa_n times the terminating (q-)hypergeometric series, expanded in x.
Polynomial family_polynomial(const FamilySpec& spec, int n);

/// P_n at the s-th native node, from the series.
Scalar family_value(const FamilySpec& spec, int n, int s, long precision = kDefaultPrecisionBits);

/// Parameter map that realizes the mirror reflection b_n -> b_{N-n},
/// u_n -> u_{N+1-n} within the family (Hahn, Racah, q-Hahn).
FamilySpec mirror(const FamilySpec& spec);

/// Grids with closed-form Legendre-type coefficients.
enum class LegendreGrid { Linear, QuadraticTau1, Trig1, Trig2 };
std::string to_string(LegendreGrid g);

/// Closed-form coefficients of the Legendre-type (dual) polynomials.
RecurrencePair legendre_dual_coeffs(LegendreGrid g, int N, int n);

/// Closed-form coefficients of the Sturm chain itself: the mirror of the
/// dual side (trigonometric grids are printed directly in this form).
RecurrencePair sturm_coeffs(LegendreGrid g, int N, int n);

/// Pochhammer (x)_k and q-Pochhammer (x;q)_k.
Scalar pochhammer(const Scalar& x, int k);
Scalar q_pochhammer(const Scalar& x, const Scalar& q, int k);

}  // namespace sturmion
