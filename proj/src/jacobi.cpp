#include "sturmion/jacobi.hpp"

#include <string>

#include "sturmion/error.hpp"

namespace sturmion {

JacobiMatrix::JacobiMatrix(std::vector<Scalar> b, std::vector<Scalar> u) : b_(std::move(b)), u_(std::move(u)) {
    if (b_.empty()) throw Error(ErrorKind::InvalidArgument, "Jacobi matrix needs at least one diagonal entry");
    if (u_.size() + 1 != b_.size()) {
        throw Error(ErrorKind::InvalidArgument, "Jacobi matrix needs len(u) = len(b) - 1");
    }
    for (size_t i = 0; i < u_.size(); ++i) {
        if (u_[i].sign() <= 0) {
            throw Error(ErrorKind::NonPositiveU, "u_" + std::to_string(i + 1) + " = " + u_[i].to_string() + " <= 0");
        }
    }
}

JacobiMatrix JacobiMatrix::from_chain(const SturmChain& chain) { return JacobiMatrix(chain.b, chain.u); }

Scalar JacobiMatrix::h(int n) const {
    Scalar acc(1);
    for (int k = 1; k <= n; ++k) acc *= u(k);
    return acc;
}

std::vector<std::vector<Scalar>> JacobiMatrix::dense() const {
    const auto size = b_.size();
    std::vector<std::vector<Scalar>> m(size, std::vector<Scalar>(size));
    for (size_t i = 0; i < size; ++i) {
        m[i][i] = b_[i];
        if (i + 1 < size) {
            m[i][i + 1] = Scalar(1);
            m[i + 1][i] = u_[i];
        }
    }
    return m;
}

JacobiMatrix mirror_dual(const JacobiMatrix& J) {
    return JacobiMatrix(std::vector<Scalar>(J.b().rbegin(), J.b().rend()),
                        std::vector<Scalar>(J.u().rbegin(), J.u().rend()));
}

std::vector<Polynomial> generate_polys(const JacobiMatrix& J, int upto) {
    if (upto < 0 || upto > J.N() + 1) {
        throw Error(ErrorKind::InvalidArgument, "generate_polys needs 0 <= upto <= N+1");
    }
    std::vector<Polynomial> out;
    out.reserve(static_cast<size_t>(upto) + 1);
    out.push_back(Polynomial::constant(Scalar(1)));
    if (upto >= 1) out.push_back(Polynomial::linear(J.b(0)));
    for (int n = 1; n < upto; ++n) {
        const auto i = static_cast<size_t>(n);
        out.push_back(Polynomial::linear(J.b(n)) * out[i] - out[i - 1].scaled(J.u(n)));
    }
    return out;
}

Polynomial characteristic_polynomial(const JacobiMatrix& J) { return generate_polys(J, J.N() + 1).back(); }

std::vector<Scalar> recurrence_values(const JacobiMatrix& J, const Scalar& x) {
    std::vector<Scalar> v;
    v.reserve(static_cast<size_t>(J.N()) + 2);
    v.emplace_back(1);
    v.push_back(x - J.b(0));
    for (int n = 1; n <= J.N(); ++n) {
        const auto i = static_cast<size_t>(n);
        v.push_back((x - J.b(n)) * v[i] - J.u(n) * v[i - 1]);
    }
    return v;
}

bool is_node_of(const Polynomial& p, const Scalar& x) {
    const Scalar r = eval(p, x);
    if (r.is_exact()) return r.is_zero();
    const long prec = r.precision().value_or(kDefaultPrecisionBits);
    return r.abs() < Scalar(BigFloat::exp2(-prec / 2, prec));
}

namespace {

void check_nodes(const Polynomial& p_top, std::span<const Scalar> nodes) {
    if (static_cast<int>(nodes.size()) != p_top.degree()) {
        throw Error(ErrorKind::NodeMismatch, "expected " + std::to_string(p_top.degree()) + " nodes, got " +
                                                 std::to_string(nodes.size()));
    }
    for (size_t s = 0; s < nodes.size(); ++s) {
        if (s > 0 && !(nodes[s - 1] < nodes[s])) {
            throw Error(ErrorKind::NodeMismatch, "nodes must be strictly increasing");
        }
        if (!is_node_of(p_top, nodes[s])) {
            throw Error(ErrorKind::NodeMismatch, "x_" + std::to_string(s) + " = " + nodes[s].to_string() +
                                                     " is not a root of P_{N+1}");
        }
    }
}

}  // namespace

SpectralData primal_weights(const SturmChain& chain, std::span<const Scalar> nodes) {
    check_nodes(chain.top(), nodes);
    const Polynomial dp = derivative(chain.top());
    const Scalar hN = JacobiMatrix::from_chain(chain).h(chain.N());
    SpectralData out{std::vector<Scalar>(nodes.begin(), nodes.end()), {}};
    out.weights.reserve(nodes.size());
    for (size_t s = 0; s < nodes.size(); ++s) {
        const Scalar w = hN / (eval(dp, nodes[s]) * eval(chain.next(), nodes[s]));
        if (w.sign() <= 0) {
            throw Error(ErrorKind::NonPositiveWeight, "w_" + std::to_string(s) + " = " + w.to_string());
        }
        out.weights.push_back(w);
    }
    return out;
}

SpectralData dual_weights(const Polynomial& p_top, const Polynomial& p_next, std::span<const Scalar> nodes) {
    check_nodes(p_top, nodes);
    const Polynomial dp = derivative(p_top);
    SpectralData out{std::vector<Scalar>(nodes.begin(), nodes.end()), {}};
    out.weights.reserve(nodes.size());
    for (const auto& x : nodes) out.weights.push_back(eval(p_next, x) / eval(dp, x));
    return out;
}

Scalar duality_product_check(const SpectralData& primal, const SpectralData& dual, const SturmChain& chain) {
    if (primal.nodes.size() != dual.nodes.size() || primal.weights.size() != primal.nodes.size() ||
        dual.weights.size() != dual.nodes.size()) {
        throw Error(ErrorKind::NodeMismatch, "primal and dual spectral data differ in size");
    }
    const Polynomial dp = derivative(chain.top());
    const Scalar hN = JacobiMatrix::from_chain(chain).h(chain.N());
    Scalar worst(0);
    for (size_t s = 0; s < primal.nodes.size(); ++s) {
        if (!(primal.nodes[s] == dual.nodes[s])) throw Error(ErrorKind::NodeMismatch, "node sets differ");
        const Scalar d = eval(dp, primal.nodes[s]);
        const Scalar r = (primal.weights[s] * dual.weights[s] - hN / (d * d)).abs();
        if (worst < r) worst = r;
    }
    return worst;
}

Scalar dual_moments(std::span<const Scalar> nodes, unsigned k) {
    if (nodes.empty()) throw Error(ErrorKind::InvalidArgument, "moments of an empty grid");
    Scalar acc(0);
    for (const auto& x : nodes) acc += pow(x, k);
    return acc / Scalar(static_cast<long>(nodes.size()));
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
    const size_t n = m.size();
    if (n == 0) return Scalar(1);
    Scalar sign(1);
    Scalar prev_pivot(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap = k + 1;
            while (swap < n && m[swap][k].is_zero()) ++swap;
            if (swap == n) return Scalar(0);
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
            }
            m[i][k] = Scalar(0);
        }
        prev_pivot = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<HankelRow> hankel_tests(std::span<const Scalar> moments, int n_max) {
    if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be non-negative");
    if (moments.size() < static_cast<size_t>(2 * n_max + 2)) {
        throw Error(ErrorKind::InsufficientMoments, "need " + std::to_string(2 * n_max + 2) + " moments, got " +
                                                        std::to_string(moments.size()));
    }
    std::vector<HankelRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        const auto size = static_cast<size_t>(n) + 1;
        std::vector<std::vector<Scalar>> h0(size, std::vector<Scalar>(size));
        std::vector<std::vector<Scalar>> h1(size, std::vector<Scalar>(size));
        for (size_t i = 0; i < size; ++i) {
            for (size_t j = 0; j < size; ++j) {
                h0[i][j] = moments[i + j];
                h1[i][j] = moments[i + j + 1];
            }
        }
        HankelRow row;
        row.n = n;
        row.delta = determinant(std::move(h0));
        row.delta_1 = determinant(std::move(h1));
        row.both_positive = row.delta.sign() > 0 && row.delta_1.sign() > 0;
        rows.push_back(std::move(row));
    }
    return rows;
}

Scalar stieltjes_fraction(const JacobiMatrix& J, const Scalar& z) {
    const Scalar denom = recurrence_values(J, z).back();
    if (denom.is_zero()) throw Error(ErrorKind::PoleHit, "z = " + z.to_string() + " is a node");
    // Second-kind numerator R_N: the recurrence of the matrix with its first row and column removed.
    Scalar r_prev(1);
    Scalar r_cur(1);
    if (J.N() >= 1) r_cur = z - J.b(1);
    for (int n = 2; n <= J.N(); ++n) {
        Scalar r_next = (z - J.b(n)) * r_cur - J.u(n) * r_prev;
        r_prev = std::move(r_cur);
        r_cur = std::move(r_next);
    }
    return r_cur / denom;
}

OrthogonalityResult check_orthogonality(std::span<const Polynomial> polys, const SpectralData& spectral) {
    if (polys.size() > spectral.nodes.size()) {
        throw Error(ErrorKind::InvalidArgument, "more polynomials than nodes");
    }
    std::vector<std::vector<Scalar>> values(polys.size());
    for (size_t n = 0; n < polys.size(); ++n) {
        for (const auto& x : spectral.nodes) values[n].push_back(eval(polys[n], x));
    }
    OrthogonalityResult out;
    for (size_t n = 0; n < polys.size(); ++n) {
        for (size_t m = n; m < polys.size(); ++m) {
            Scalar acc(0);
            for (size_t s = 0; s < spectral.nodes.size(); ++s) acc += spectral.weights[s] * values[n][s] * values[m][s];
            if (n == m) {
                out.diagonal.push_back(acc);
            } else if (out.max_offdiag < acc.abs()) {
                out.max_offdiag = acc.abs();
            }
        }
    }
    return out;
}

}  // namespace sturmion
