#pragma once

#include <span>
#include <vector>

#include "sturmion/polynomial.hpp"
#include "sturmion/sturm_chain.hpp"

namespace sturmion {

/// Tridiagonal spectral data: b_0..b_N on the diagonal, u_1..u_N below it,
/// ones above. Construction enforces u_n > 0.
class JacobiMatrix {
public:
    JacobiMatrix(std::vector<Scalar> b, std::vector<Scalar> u);
    static JacobiMatrix from_chain(const SturmChain& chain);

    int N() const noexcept { return static_cast<int>(b_.size()) - 1; }
    const std::vector<Scalar>& b() const noexcept { return b_; }
    const std::vector<Scalar>& u() const noexcept { return u_; }
    const Scalar& b(int n) const { return b_[static_cast<size_t>(n)]; }
    /// u_n for n = 1..N.
    const Scalar& u(int n) const { return u_[static_cast<size_t>(n) - 1]; }

    /// h_n = u_1 ... u_n (h_0 = 1).
    Scalar h(int n) const;
    /// Dense (N+1)x(N+1) matrix, row-major: J[n][n] = b_n, J[n][n+1] = 1, J[n+1][n] = u_{n+1}.
    std::vector<std::vector<Scalar>> dense() const;

    friend bool operator==(const JacobiMatrix&, const JacobiMatrix&) = default;

private:
    std::vector<Scalar> b_;
    std::vector<Scalar> u_;
};

/// Nodes strictly increasing, positive weights summing to one.
struct SpectralData {
    std::vector<Scalar> nodes;
    std::vector<Scalar> weights;
};

/// b*_n = b_{N-n}, u*_n = u_{N+1-n}.
JacobiMatrix mirror_dual(const JacobiMatrix& J);

/// [P_0, ..., P_upto] from the three-term recurrence; upto <= N+1.
std::vector<Polynomial> generate_polys(const JacobiMatrix& J, int upto);

/// P_{N+1}, whose zeros are the spectrum of J.
Polynomial characteristic_polynomial(const JacobiMatrix& J);

/// Values P_0(x), ..., P_{N+1}(x) by running the recurrence at a point.
std::vector<Scalar> recurrence_values(const JacobiMatrix& J, const Scalar& x);

/// w_s = h_N / (P'_{N+1}(x_s) P_N(x_s)).
SpectralData primal_weights(const SturmChain& chain, std::span<const Scalar> nodes);

/// w*_s = P_N(x_s) / P'_{N+1}(x_s) for an arbitrary interlacing pair.
SpectralData dual_weights(const Polynomial& p_top, const Polynomial& p_next, std::span<const Scalar> nodes);

/// max_s |w_s w*_s - h_N / P'_{N+1}(x_s)^2|.
Scalar duality_product_check(const SpectralData& primal, const SpectralData& dual, const SturmChain& chain);

/// (N+1)^{-1} sum_s x_s^k
Scalar dual_moments(std::span<const Scalar> nodes, unsigned k);

struct HankelRow {
    int n = 0;
    Scalar delta;     ///< det (c_{i+j})_{i,j=0..n}
    Scalar delta_1;   ///< det (c_{i+j+1})_{i,j=0..n}
    bool both_positive = false;
};

/// Hankel determinants Delta_n and Delta_n^{(1)} for n = 0..n_max.
/// Needs at least 2 n_max + 2 moments.
std::vector<HankelRow> hankel_tests(std::span<const Scalar> moments, int n_max);

/// Fraction-free (Bareiss) determinant with row pivoting.
Scalar determinant(std::vector<std::vector<Scalar>> m);

/// Finite continued fraction 1/(z - b_0 - u_1/(z - b_1 - ... u_N/(z - b_N))),
/// evaluated as R_N(z) / P_{N+1}(z). Throws PoleHit when z is a node.
Scalar stieltjes_fraction(const JacobiMatrix& J, const Scalar& z);

struct OrthogonalityResult {
    Scalar max_offdiag;            ///< max_{n != m} |sum_s w_s P_n(x_s) P_m(x_s)|
    std::vector<Scalar> diagonal;  ///< candidate h_n
};

OrthogonalityResult check_orthogonality(std::span<const Polynomial> polys, const SpectralData& spectral);

/// Node acceptance used by the weight routines: exact zero in the rational
/// backend, |P(x)| < 2^{-precision/2} otherwise.
bool is_node_of(const Polynomial& p, const Scalar& x);

}  // namespace sturmion
