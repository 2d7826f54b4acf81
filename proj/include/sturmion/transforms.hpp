#pragma once

#include <optional>
#include <vector>

#include "sturmion/jacobi.hpp"

namespace sturmion {

enum class TransformKind { Christoffel, Geronimus, Uvarov };
std::string to_string(TransformKind k);

struct TransformRecord {
    TransformKind kind = TransformKind::Christoffel;
    Scalar a;
    std::optional<Scalar> seed;  ///< Geronimus only
    /// Christoffel: V_0..V_N. Geronimus/Uvarov: U_1..U_{N+1}.
    std::vector<Scalar> multipliers;
    JacobiMatrix source;
    JacobiMatrix result;
};

struct ChristoffelResult {
    JacobiMatrix matrix;
    TransformRecord record;
    /// P~_0..P~_N from the quotient (P_{n+1} - V_n P_n) / (x - a).
    std::vector<Polynomial> polys;
};

/// Measure multiplied by (x - a). Throws PivotZero if some P_n(a) = 0,
/// n = 0..N+1 (the top case means a is a node).
ChristoffelResult christoffel(const JacobiMatrix& J, const Scalar& a);

/// Coefficient-level formulas u~_n = u_n V_n / V_{n-1}, b~_n = b_{n+1} +
/// V_{n+1} - V_n for n < N; b~_N from the trace identity.
JacobiMatrix christoffel_coefficients(const JacobiMatrix& J, const Scalar& a);

/// Seed that makes geronimus(christoffel(J, a), a, seed) return J:
/// U_1 = u_1 / V_0 (0 when N = 0).
Scalar christoffel_inverse_seed(const JacobiMatrix& J, const Scalar& a);

/// P_n = P~_n - U_n P~_{n-1} with U_n = phi_n / phi_{n-1}, where phi solves
/// the recurrence of J~ at a with phi_0 = 1, phi_1 = seed. Throws ZeroPhi.
TransformRecord geronimus(const JacobiMatrix& J, const Scalar& a, const Scalar& seed);

/// F_n(z) = sum_s w_s P_n(x_s) / (z - x_s) for n = 0..N+1. Throws PoleHit.
std::vector<Scalar> second_kind_values(const JacobiMatrix& J, const SpectralData& spectral, const Scalar& z);

/// Geronimus step with U_n = F_n(a) / F_{n-1}(a). Throws ZeroF or PoleHit.
TransformRecord uvarov(const JacobiMatrix& J, const SpectralData& spectral, const Scalar& a);

}  // namespace sturmion
