#pragma once

#include <utility>
#include <vector>

#include "sturmion/polynomial.hpp"

namespace sturmion {

/// The Euclidean chain [P_{N+1}, P_N, ..., P_0] together with the recurrence
/// coefficients P_{n+1} = (x - b_n) P_n - u_n P_{n-1}.
///
/// Invariants: every P_k monic of degree k, P_0 = 1, all u_n > 0.
struct SturmChain {
    std::vector<Polynomial> polys;  ///< polys[0] = P_{N+1}, polys.back() = P_0
    std::vector<Scalar> b;          ///< b_0..b_N
    std::vector<Scalar> u;          ///< u_1..u_N (u[0] is u_1)

    int N() const noexcept { return static_cast<int>(b.size()) - 1; }
    /// P_k, indexed by degree.
    const Polynomial& P(int k) const { return polys[polys.size() - 1 - static_cast<size_t>(k)]; }
    const Polynomial& top() const { return polys.front(); }
    const Polynomial& next() const { return polys[1]; }
};

/// (P, P'/(N+1)) for a monic P of degree N+1 >= 1.
std::pair<Polynomial, Polynomial> sturmian_pair(const Polynomial& p);

/// Runs the Euclidean algorithm on a monic pair of consecutive degrees.
/// Throws DegreeGap, ZeroRemainder or NonPositiveU on degenerate pairs.
SturmChain build_chain(const Polynomial& p_top, const Polynomial& p_next);

/// Sign variations of the chain at x, zeros skipped.
int sign_variations(const SturmChain& chain, const Scalar& x);

/// Sign variations as x -> -inf / +inf (read off leading coefficients).
int sign_variations_at_infinity(const SturmChain& chain, bool positive);

/// Root counter with the chain built once; count(a, b) is the number of
/// roots in the half-open interval (a, b].
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);

    int count(const Scalar& lo, const Scalar& hi) const;
    const SturmChain& chain() const noexcept { return chain_; }
    /// Roots of P over the whole real line.
    int total() const;

private:
    SturmChain chain_;
};

/// Number of roots of p in (lo, hi]. p need not be monic; it must have
/// simple real roots. Throws EndpointIsRoot when p(lo) or p(hi) is zero.
int count_roots(const Polynomial& p, const Scalar& lo, const Scalar& hi);

/// True iff the Euclidean chain of (p, q) exists with all u_n > 0, i.e. the
/// roots of q interlace those of p. Inputs are normalized to monic first.
bool interlaces(const Polynomial& p, const Polynomial& q);

}  // namespace sturmion
