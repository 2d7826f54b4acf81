#include <doctest.h>

#include <numeric>

#include "sturmion/error.hpp"
#include "sturmion/grids.hpp"
#include "sturmion/jacobi.hpp"
#include "test_support.hpp"

using namespace sturmion;
using testing::R;
using testing::Rs;

namespace {

SturmChain linear2() { return build_chain(Polynomial{R(0), R(2), R(-3), R(1)}, Polynomial{R(2, 3), R(-2), R(1)}); }

std::vector<Scalar> nodes012() { return {R(0), R(1), R(2)}; }

/// Leibniz expansion over all permutations.
Scalar leibniz(const std::vector<std::vector<Scalar>>& m) {
    const size_t n = m.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total(0);
    do {
        int inversions = 0;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
        }
        Scalar term(inversions % 2 == 0 ? 1 : -1);
        for (size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// 1/(z - b_0 - u_1/(z - b_1 - ...)) evaluated from the bottom up.
Scalar nested_fraction(const JacobiMatrix& J, const Scalar& z) {
    Scalar tail = z - J.b(J.N());
    for (int n = J.N(); n >= 1; --n) tail = z - J.b(n - 1) - J.u(n) / tail;
    return R(1) / tail;
}

Scalar partial_fractions(const SpectralData& d, const Scalar& z) {
    Scalar acc(0);
    for (size_t s = 0; s < d.nodes.size(); ++s) acc += d.weights[s] / (z - d.nodes[s]);
    return acc;
}

SturmChain chain_on(const std::vector<Scalar>& xs) {
    auto [top, next] = sturmian_pair(poly_from_roots(xs));
    return build_chain(top, next);
}

}  // namespace

TEST_CASE("mirror_dual") {
    const JacobiMatrix J(Rs({{1, 1}, {1, 1}, {1, 1}}), Rs({{1, 3}, {2, 3}}));
    const JacobiMatrix Js = mirror_dual(J);
    CHECK(Js.b() == Rs({{1, 1}, {1, 1}, {1, 1}}));
    CHECK(Js.u() == Rs({{2, 3}, {1, 3}}));
    const JacobiMatrix P(Rs({{1, 2}, {3, 1}, {1, 2}}), Rs({{5, 1}, {5, 1}}));
    CHECK(mirror_dual(P) == P);
    const JacobiMatrix Q(Rs({{12, 7}, {76, 21}, {8, 3}}), Rs({{108, 49}, {56, 9}}));
    CHECK(mirror_dual(Q).b() == Rs({{8, 3}, {76, 21}, {12, 7}}));
    CHECK(mirror_dual(Q).u() == Rs({{56, 9}, {108, 49}}));
}

TEST_CASE("mirror_dual is R J^T R and an involution") {
    testing::RandomRationals rnd(31);
    for (int trial = 0; trial < 20; ++trial) {
        const JacobiMatrix J = rnd.chain(rnd.integer(0, 10));
        CHECK(mirror_dual(mirror_dual(J)) == J);
        const auto d = J.dense();
        const auto ds = mirror_dual(J).dense();
        const size_t n = d.size();
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) CHECK(ds[i][j] == d[n - 1 - j][n - 1 - i]);
        }
        CHECK_EQ(characteristic_polynomial(mirror_dual(J)), characteristic_polynomial(J));
    }
}

TEST_CASE("JacobiMatrix rejects non-positive u") {
    CHECK_THROWS_AS(JacobiMatrix(Rs({{0, 1}, {0, 1}}), Rs({{0, 1}})), Error);
    CHECK_THROWS_AS(JacobiMatrix(Rs({{0, 1}, {0, 1}}), Rs({{-1, 2}})), Error);
    CHECK_THROWS_AS(JacobiMatrix(Rs({{0, 1}, {0, 1}}), Rs({})), Error);
}

TEST_CASE("generate_polys") {
    const JacobiMatrix T(Rs({{0, 1}, {0, 1}, {0, 1}}), Rs({{1, 4}, {1, 2}}));
    const auto p = generate_polys(T, 3);
    REQUIRE(p.size() == 4);
    CHECK(p[0] == Polynomial{R(1)});
    CHECK(p[1] == (Polynomial{R(0), R(1)}));
    CHECK(p[2] == (Polynomial{R(-1, 4), R(0), R(1)}));
    CHECK(p[3] == (Polynomial{R(0), R(-3, 4), R(0), R(1)}));
    CHECK(generate_polys(T, 0).size() == 1);
    const JacobiMatrix E(Rs({{3, 2}, {3, 2}}), Rs({{1, 4}}));
    CHECK(generate_polys(E, 2)[2] == (Polynomial{R(2), R(-3), R(1)}));
    // Direct evaluation of the recurrence agrees with evaluating polynomials.
    testing::RandomRationals rnd(32);
    const JacobiMatrix J = rnd.chain(6);
    const auto polys = generate_polys(J, 7);
    const Scalar x = rnd(-4, 4);
    const auto vals = recurrence_values(J, x);
    for (size_t n = 0; n < polys.size(); ++n) CHECK(vals[n] == eval(polys[n], x));
}

TEST_CASE("primal weights") {
    const SpectralData w = primal_weights(linear2(), nodes012());
    CHECK(w.weights == Rs({{1, 6}, {2, 3}, {1, 6}}));
    const std::vector<Scalar> one{R(7, 3)};
    CHECK(primal_weights(build_chain(Polynomial::linear(R(7, 3)), Polynomial{R(1)}), one).weights == Rs({{1, 1}}));
    const std::vector<Scalar> e{R(1), R(2)};
    CHECK(primal_weights(chain_on(e), e).weights == Rs({{1, 2}, {1, 2}}));
    const std::vector<Scalar> wrong{R(0), R(1), R(3)};
    CHECK_THROWS_AS(primal_weights(linear2(), wrong), Error);
}

TEST_CASE("primal weights make the chain orthogonal and reproduce the Stieltjes function") {
    testing::RandomRationals rnd(33);
    for (int trial = 0; trial < 15; ++trial) {
        const auto xs = rnd.distinct(rnd.integer(1, 8), -5, 5);
        const SturmChain c = chain_on(xs);
        const SpectralData w = primal_weights(c, xs);
        Scalar sum(0);
        for (const auto& v : w.weights) {
            CHECK(v.sign() > 0);
            sum += v;
        }
        CHECK(sum == R(1));
        std::vector<Polynomial> ps;
        for (int k = 0; k <= c.N(); ++k) ps.push_back(c.P(k));
        const auto orth = check_orthogonality(ps, w);
        CHECK(orth.max_offdiag == R(0));
        const JacobiMatrix J = JacobiMatrix::from_chain(c);
        for (int k = 0; k <= c.N(); ++k) CHECK(orth.diagonal[static_cast<size_t>(k)] == J.h(k));
        for (int i = 0; i < 20; ++i) {
            const Scalar z = rnd(-9, 9, 11);
            if (std::find(xs.begin(), xs.end(), z) != xs.end()) continue;
            const Scalar f = stieltjes_fraction(J, z);
            CHECK(f == partial_fractions(w, z));
            CHECK(f == nested_fraction(J, z));
        }
    }
}

TEST_CASE("dual weights") {
    const std::vector<Scalar> e{R(1), R(2)};
    CHECK(dual_weights(poly_from_roots(e), Polynomial{R(-3, 2), R(1)}, e).weights == Rs({{1, 2}, {1, 2}}));
    const SturmChain c = linear2();
    CHECK(dual_weights(c.top(), c.next(), nodes012()).weights == Rs({{1, 3}, {1, 3}, {1, 3}}));
    const std::vector<Scalar> one{R(5)};
    CHECK(dual_weights(Polynomial::linear(R(5)), Polynomial{R(1)}, one).weights == Rs({{1, 1}}));
}

TEST_CASE("dual weights of any Sturmian pair are constant") {
    testing::RandomRationals rnd(34);
    for (int trial = 0; trial < 20; ++trial) {
        const auto xs = rnd.distinct(rnd.integer(1, 10), -6, 6);
        auto [top, next] = sturmian_pair(poly_from_roots(xs));
        const auto w = dual_weights(top, next, xs).weights;
        for (const auto& v : w) CHECK(v == R(1, static_cast<long>(xs.size())));
    }
}

TEST_CASE("duality product") {
    const SturmChain c = linear2();
    const auto xs = nodes012();
    const SpectralData w = primal_weights(c, xs);
    const SpectralData ws = dual_weights(c.top(), c.next(), xs);
    CHECK(w.weights[0] * ws.weights[0] == R(1, 18));
    CHECK(R(2, 9) / pow(eval(derivative(c.top()), R(0)), 2) == R(1, 18));
    CHECK(duality_product_check(w, ws, c) == R(0));
    const std::vector<Scalar> q{R(0), R(2), R(6)};
    const SturmChain cq = chain_on(q);
    CHECK(duality_product_check(primal_weights(cq, q), dual_weights(cq.top(), cq.next(), q), cq) == R(0));
    const std::vector<Scalar> one{R(3)};
    const SturmChain c1 = build_chain(Polynomial::linear(R(3)), Polynomial{R(1)});
    CHECK(duality_product_check(primal_weights(c1, one), dual_weights(c1.top(), c1.next(), one), c1) == R(0));
}

TEST_CASE("dual moments") {
    const auto xs = nodes012();
    CHECK(dual_moments(xs, 0) == R(1));
    CHECK(dual_moments(xs, 2) == R(5, 3));
    CHECK(dual_moments(xs, 3) == R(3));
}

TEST_CASE("Hankel determinants") {
    const std::vector<Scalar> xs{R(1), R(2), R(3)};
    std::vector<Scalar> c;
    for (unsigned k = 0; k < 6; ++k) c.push_back(dual_moments(xs, k));
    const auto rows = hankel_tests(c, 1);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].delta == R(1));
    CHECK(rows[0].delta_1 == R(2));
    CHECK(rows[1].delta == R(2, 3));
    CHECK(rows[1].both_positive);
    CHECK(rows[0].both_positive);

    const auto zero_based = nodes012();
    std::vector<Scalar> c0;
    for (unsigned k = 0; k < 6; ++k) c0.push_back(dual_moments(zero_based, k));
    const auto r0 = hankel_tests(c0, 2);
    // Delta_1^{(1)} = c1 c3 - c2^2 = 3 - 25/9.
    CHECK(r0[1].delta_1 == R(2, 9));
    // A three-point measure touching 0: the shifted 3x3 Hankel matrix is singular.
    CHECK(r0[2].delta_1 == R(0));
    CHECK_FALSE(r0[2].both_positive);

    const std::vector<Scalar> five{R(5)};
    std::vector<Scalar> c5{dual_moments(five, 0), dual_moments(five, 1)};
    const auto r5 = hankel_tests(c5, 0);
    CHECK(r5[0].delta == R(1));
    CHECK(r5[0].delta_1 == R(5));
    CHECK(r5[0].both_positive);
    CHECK_THROWS_AS(hankel_tests(c5, 1), Error);
}

TEST_CASE("Hankel determinants against the Leibniz expansion") {
    testing::RandomRationals rnd(35);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Scalar> c;
        for (int k = 0; k < 12; ++k) c.push_back(rnd(-4, 4));
        const auto rows = hankel_tests(c, 4);
        for (const auto& row : rows) {
            const auto n = static_cast<size_t>(row.n) + 1;
            std::vector<std::vector<Scalar>> h(n, std::vector<Scalar>(n)), h1(n, std::vector<Scalar>(n));
            for (size_t i = 0; i < n; ++i) {
                for (size_t j = 0; j < n; ++j) {
                    h[i][j] = c[i + j];
                    h1[i][j] = c[i + j + 1];
                }
            }
            CHECK(row.delta == leibniz(h));
            CHECK(row.delta_1 == leibniz(h1));
        }
    }
}

TEST_CASE("determinant against the Leibniz expansion") {
    testing::RandomRationals rnd(36);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<size_t>(rnd.integer(1, 6));
        std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
        for (auto& row : m) {
            for (auto& v : row) v = rnd.integer(0, 3) == 0 ? R(0) : rnd(-3, 3);
        }
        CHECK(determinant(m) == leibniz(m));
    }
    CHECK(determinant({{R(0), R(1)}, {R(1), R(0)}}) == R(-1));
    CHECK(determinant({{R(1), R(2)}, {R(2), R(4)}}) == R(0));
}

TEST_CASE("Stieltjes fraction") {
    const JacobiMatrix J = JacobiMatrix::from_chain(linear2());
    CHECK(stieltjes_fraction(mirror_dual(J), R(3)) == R(11, 18));
    CHECK(stieltjes_fraction(J, R(3)) == R(5, 9));
    const JacobiMatrix one(Rs({{2, 5}}), Rs({}));
    CHECK(stieltjes_fraction(one, R(7)) == R(5, 33));
    CHECK_THROWS_AS(stieltjes_fraction(J, R(1)), Error);
}

TEST_CASE("mirror Stieltjes fraction of a Sturmian chain is the logarithmic derivative") {
    testing::RandomRationals rnd(37);
    for (int trial = 0; trial < 10; ++trial) {
        const auto xs = rnd.distinct(rnd.integer(1, 9), -5, 5);
        const SturmChain c = chain_on(xs);
        const JacobiMatrix Js = mirror_dual(JacobiMatrix::from_chain(c));
        for (int i = 0; i < 20; ++i) {
            const Scalar z = rnd(-7, 7, 13);
            if (std::find(xs.begin(), xs.end(), z) != xs.end()) continue;
            Scalar direct(0);
            for (const auto& x : xs) direct += R(1) / (z - x);
            direct /= R(static_cast<long>(xs.size()));
            CHECK(stieltjes_fraction(Js, z) == direct);
        }
    }
}

TEST_CASE("orthogonality") {
    const SturmChain c = linear2();
    const auto xs = nodes012();
    std::vector<Polynomial> ps{c.P(0), c.P(1), c.P(2)};
    const auto r = check_orthogonality(ps, primal_weights(c, xs));
    CHECK(r.max_offdiag == R(0));
    CHECK(r.diagonal == Rs({{1, 1}, {1, 3}, {2, 9}}));
    const std::vector<Polynomial> single{Polynomial{R(1)}};
    const SpectralData d{{R(-1), R(4)}, {R(1, 4), R(3, 4)}};
    const auto r1 = check_orthogonality(single, d);
    CHECK(r1.max_offdiag == R(0));
    CHECK(r1.diagonal == Rs({{1, 1}}));
}

TEST_CASE("Chebyshev U on the zeros of T_3 with sine-squared weights") {
    const int N = 2;
    const long prec = 256;
    const auto xs = nodes(GridSpec::trig_first(N, prec));
    const BigFloat pi = BigFloat::pi(prec);
    SpectralData d;
    d.nodes = xs;
    for (int s = 0; s <= N; ++s) {
        // x_s = -cos(theta_s), and sin^2 is the same for theta and pi - theta.
        const BigFloat theta = pi * BigFloat(mpq_class(2 * s + 1, 2 * (N + 1)), prec);
        const BigFloat sn = theta.sin();
        d.weights.emplace_back(BigFloat(mpq_class(2, N + 1), prec) * sn * sn);
    }
    std::vector<Polynomial> ps;
    for (int n = 0; n <= N; ++n) ps.push_back(monic_chebyshev_u(n));
    const auto r = check_orthogonality(ps, d);
    const Scalar tol(BigFloat::exp2(-200, prec));
    CHECK(r.max_offdiag < tol);
    CHECK(testing::close(r.diagonal[0], R(1), tol));
    CHECK(testing::close(r.diagonal[1], R(1, 4), tol));
    CHECK(testing::close(r.diagonal[2], R(1, 8), tol));
}

TEST_CASE("symmetric grids have zero diagonal") {
    testing::RandomRationals rnd(38);
    for (int trial = 0; trial < 10; ++trial) {
        auto half = rnd.distinct(rnd.integer(1, 5), 1, 6);
        std::vector<Scalar> xs;
        for (const auto& h : half) xs.push_back(-h);
        if (trial % 2 == 0) xs.push_back(R(0));
        for (const auto& h : half) xs.push_back(h);
        const SturmChain c = chain_on(xs);
        for (const auto& b : c.b) CHECK(b == R(0));
        for (int k = 0; k <= c.N() + 1; ++k) {
            const auto& co = c.P(k).coeffs();
            for (size_t i = 0; i < co.size(); ++i) {
                if ((static_cast<size_t>(k) - i) % 2 == 1) CHECK(co[i] == R(0));
            }
        }
    }
    const SturmChain t = build_chain(monic_chebyshev_t(5), derivative(monic_chebyshev_t(5)).monic());
    for (const auto& b : t.b) CHECK(b == R(0));
}

TEST_CASE("Hermite polynomials form their own Sturmian chain") {
    for (int N = 1; N <= 15; ++N) {
        std::vector<Scalar> b(static_cast<size_t>(N) + 1, R(0)), u;
        for (int n = 1; n <= N; ++n) u.push_back(R(n, 2));
        const JacobiMatrix H(b, u);
        auto [top, next] = sturmian_pair(characteristic_polynomial(H));
        const SturmChain c = build_chain(top, next);
        // H'_{N+1} = (N+1) H_N, so the Euclidean chain is Hermite itself.
        CHECK(JacobiMatrix::from_chain(c) == H);
        const JacobiMatrix dual = mirror_dual(JacobiMatrix::from_chain(c));
        for (int n = 1; n <= N; ++n) CHECK(dual.u(n) == R(N + 1 - n, 2));
    }
}

TEST_CASE("node acceptance") {
    const Polynomial p{R(0), R(2), R(-3), R(1)};
    CHECK(is_node_of(p, R(2)));
    CHECK_FALSE(is_node_of(p, R(3)));
    const Polynomial t3 = monic_chebyshev_t(2);
    const auto xs = nodes(GridSpec::trig_first(1));
    CHECK(is_node_of(t3, xs[0]));
    CHECK_FALSE(is_node_of(t3, Scalar(BigFloat(mpq_class(7, 10), 256))));
}
