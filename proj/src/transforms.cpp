#include "sturmion/transforms.hpp"

#include "sturmion/error.hpp"

namespace sturmion {

namespace {

std::vector<Scalar> christoffel_multipliers(const JacobiMatrix& J, const Scalar& a) {
    const auto p = recurrence_values(J, a);
    for (size_t n = 0; n < p.size(); ++n) {
        if (p[n].is_zero()) {
            throw Error(ErrorKind::PivotZero, "P_" + std::to_string(n) + "(" + a.to_string() + ") = 0");
        }
    }
    std::vector<Scalar> V;
    for (size_t n = 0; n + 1 < p.size(); ++n) V.push_back(p[n + 1] / p[n]);
    return V;
}

/// b_n = b~_n + U_{n+1} - U_n, u_n = u~_n + U_n (b_n - b~_{n-1}); U[k] = U_{k+1}.
JacobiMatrix apply_multipliers(const JacobiMatrix& Jt, const std::vector<Scalar>& U) {
    const int N = Jt.N();
    auto Un = [&](int n) { return n == 0 ? Scalar(0) : U[static_cast<size_t>(n) - 1]; };
    std::vector<Scalar> b, u;
    for (int n = 0; n <= N; ++n) b.push_back(Jt.b(n) + Un(n + 1) - Un(n));
    for (int n = 1; n <= N; ++n) u.push_back(Jt.u(n) + Un(n) * (b[static_cast<size_t>(n)] - Jt.b(n - 1)));
    return JacobiMatrix(std::move(b), std::move(u));
}

}  // namespace

std::string to_string(TransformKind k) {
    switch (k) {
        case TransformKind::Christoffel: return "christoffel";
        case TransformKind::Geronimus: return "geronimus";
        case TransformKind::Uvarov: return "uvarov";
    }
    return "unknown";
}

ChristoffelResult christoffel(const JacobiMatrix& J, const Scalar& a) {
    const int N = J.N();
    const auto V = christoffel_multipliers(J, a);
    const auto P = generate_polys(J, N + 1);
    const Polynomial divisor = Polynomial::linear(a);
    std::vector<Polynomial> polys;
    for (int n = 0; n <= N; ++n) {
        const auto nn = static_cast<size_t>(n);
        auto [q, r] = divmod(P[nn + 1] - P[nn].scaled(V[nn]), divisor);
        if (!r.is_zero()) throw Error(ErrorKind::PivotZero, "quotient at n=" + std::to_string(n) + " is not exact");
        polys.push_back(std::move(q));
    }
    // The new measure lives on the same nodes, so P_{N+1} stays the top.
    const SturmChain chain = build_chain(P.back(), polys.back());
    JacobiMatrix result = JacobiMatrix::from_chain(chain);
    TransformRecord record{TransformKind::Christoffel, a, std::nullopt, V, J, result};
    return {std::move(result), std::move(record), std::move(polys)};
}

JacobiMatrix christoffel_coefficients(const JacobiMatrix& J, const Scalar& a) {
    const int N = J.N();
    const auto V = christoffel_multipliers(J, a);
    std::vector<Scalar> b, u;
    Scalar trace(0);
    for (int n = 0; n <= N; ++n) trace += J.b(n);
    for (int n = 0; n < N; ++n) {
        const auto nn = static_cast<size_t>(n);
        b.push_back(J.b(n + 1) + V[nn + 1] - V[nn]);
        trace -= b.back();
    }
    b.push_back(trace);
    for (int n = 1; n <= N; ++n) {
        const auto nn = static_cast<size_t>(n);
        u.push_back(J.u(n) * V[nn] / V[nn - 1]);
    }
    return JacobiMatrix(std::move(b), std::move(u));
}

Scalar christoffel_inverse_seed(const JacobiMatrix& J, const Scalar& a) {
    if (J.N() == 0) return Scalar(0);
    const Scalar v0 = a - J.b(0);
    if (v0.is_zero()) throw Error(ErrorKind::PivotZero, "P_1(" + a.to_string() + ") = 0");
    return J.u(1) / v0;
}

TransformRecord geronimus(const JacobiMatrix& J, const Scalar& a, const Scalar& seed) {
    const int N = J.N();
    std::vector<Scalar> phi{Scalar(1), seed};
    for (int n = 1; n <= N; ++n) {
        const auto nn = static_cast<size_t>(n);
        phi.push_back((a - J.b(n)) * phi[nn] - J.u(n) * phi[nn - 1]);
    }
    std::vector<Scalar> U;
    for (size_t n = 1; n < phi.size(); ++n) {
        if (phi[n - 1].is_zero()) throw Error(ErrorKind::ZeroPhi, "phi_" + std::to_string(n - 1) + " = 0");
        U.push_back(phi[n] / phi[n - 1]);
    }
    JacobiMatrix result = apply_multipliers(J, U);
    return {TransformKind::Geronimus, a, seed, std::move(U), J, std::move(result)};
}

std::vector<Scalar> second_kind_values(const JacobiMatrix& J, const SpectralData& spectral, const Scalar& z) {
    std::vector<Scalar> F(static_cast<size_t>(J.N()) + 2, Scalar(0));
    for (size_t s = 0; s < spectral.nodes.size(); ++s) {
        const Scalar d = z - spectral.nodes[s];
        if (d.is_zero()) throw Error(ErrorKind::PoleHit, "z = " + z.to_string() + " is a node");
        const Scalar ws = spectral.weights[s] / d;
        const auto p = recurrence_values(J, spectral.nodes[s]);
        for (size_t n = 0; n < F.size(); ++n) F[n] += ws * p[n];
    }
    return F;
}

TransformRecord uvarov(const JacobiMatrix& J, const SpectralData& spectral, const Scalar& a) {
    const auto F = second_kind_values(J, spectral, a);
    std::vector<Scalar> U;
    for (size_t n = 1; n < F.size(); ++n) {
        if (F[n - 1].is_zero()) throw Error(ErrorKind::ZeroF, "F_" + std::to_string(n - 1) + "(" + a.to_string() + ") = 0");
        U.push_back(F[n] / F[n - 1]);
    }
    JacobiMatrix result = apply_multipliers(J, U);
    return {TransformKind::Uvarov, a, std::nullopt, std::move(U), J, std::move(result)};
}

}  // namespace sturmion
