#include "sturmion/families.hpp"

#include <algorithm>
#include <numeric>

#include "sturmion/error.hpp"
#include "sturmion/grids.hpp"

namespace sturmion {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void denominator_zero(const FamilySpec& spec, const std::string& what, int n) {
    throw Error(ErrorKind::DenominatorZero,
                family_name(spec) + ": " + what + " has a vanishing denominator at n=" + std::to_string(n));
}

Scalar checked_div(const Scalar& num, const Scalar& den, const FamilySpec& spec, const std::string& what, int n) {
    if (den.is_zero()) denominator_zero(spec, what, n);
    return num / den;
}

/// q^k for any integer k.
Scalar qpow(const Scalar& q, int k) {
    return k >= 0 ? pow(q, static_cast<unsigned>(k)) : Scalar(1) / pow(q, static_cast<unsigned>(-k));
}

Scalar sc(int v) { return Scalar(static_cast<long>(v)); }

int require_finite_N(int N) {
    if (N < 0) throw Error(ErrorKind::InvalidArgument, "family size N must be non-negative");
    return N;
}

// A_n and C_n of the Hahn, Racah and q-Hahn families. A_N and C_0 vanish
// through an explicit factor, so they are returned before any denominator
// is formed.
std::pair<Scalar, Scalar> hahn_ac(const FamilySpec& spec, const family::Hahn& h, int n) {
    const Scalar& a = h.alpha;
    const Scalar& b = h.beta;
    const Scalar nn = sc(n);
    Scalar A(0), C(0);
    if (n != h.N) {
        A = checked_div((nn + a + b + Scalar(1)) * (nn + a + Scalar(1)) * sc(h.N - n),
                        (Scalar(2) * nn + a + b + Scalar(1)) * (Scalar(2) * nn + a + b + Scalar(2)), spec, "A_n", n);
    }
    if (n != 0) {
        C = checked_div(nn * (nn + a + b + sc(h.N) + Scalar(1)) * (nn + b),
                        (Scalar(2) * nn + a + b + Scalar(1)) * (Scalar(2) * nn + a + b), spec, "C_n", n);
    }
    return {A, C};
}

std::pair<Scalar, Scalar> racah_ac(const FamilySpec& spec, const family::Racah& r, int n) {
    const Scalar nn = sc(n);
    const Scalar N = sc(r.N);
    const Scalar& be = r.beta;
    const Scalar& ga = r.gamma;
    const Scalar& de = r.delta;
    Scalar A(0), C(0);
    if (n != r.N) {
        A = checked_div((nn + be - N) * (nn + be + de + Scalar(1)) * (nn + ga + Scalar(1)) * (nn - N),
                        (Scalar(2) * nn + be - N) * (Scalar(2) * nn + be - N + Scalar(1)), spec, "A_n", n);
    }
    if (n != 0) {
        C = checked_div(nn * (nn + be) * (nn + be - ga - N - Scalar(1)) * (nn - de - N - Scalar(1)),
                        (Scalar(2) * nn + be - N) * (Scalar(2) * nn + be - N - Scalar(1)), spec, "C_n", n);
    }
    return {A, C};
}

std::pair<Scalar, Scalar> qhahn_ac(const FamilySpec& spec, const family::QHahn& h, int n) {
    const Scalar& q = h.q;
    const Scalar ab = h.a * h.b;
    const Scalar one(1);
    Scalar A(0), C(0);
    if (n != h.N) {
        A = checked_div((one - qpow(q, n - h.N)) * (one - h.a * qpow(q, n + 1)) * (one - ab * qpow(q, n + 1)),
                        (one - ab * qpow(q, 2 * n + 1)) * (one - ab * qpow(q, 2 * n + 2)), spec, "A_n", n);
    }
    if (n != 0) {
        C = -checked_div(h.a * qpow(q, n - h.N) * (one - qpow(q, n)) * (one - h.b * qpow(q, n)) *
                             (one - ab * qpow(q, n + h.N + 1)),
                         (one - ab * qpow(q, 2 * n + 1)) * (one - ab * qpow(q, 2 * n)), spec, "C_n", n);
    }
    return {A, C};
}

void check_index(const FamilySpec& spec, int n) {
    if (n < 0 || n > family_size(spec)) {
        throw Error(ErrorKind::InvalidArgument,
                    family_name(spec) + ": index n=" + std::to_string(n) + " outside 0.." +
                        std::to_string(family_size(spec)));
    }
}

void check_q(const Scalar& q) {
    if (q.is_zero() || q == Scalar(1)) throw Error(ErrorKind::InvalidArgument, "q-Hahn needs q != 0, 1");
}

/// Series term prefactors c_k (k = 0..n) and the basis polynomials phi_k(x).
struct Series {
    std::vector<Scalar> coeffs;
    std::vector<Polynomial> basis;
};

Polynomial expand(const Series& s) {
    Polynomial out;
    for (size_t k = 0; k < s.coeffs.size(); ++k) out = out + s.basis[k].scaled(s.coeffs[k]);
    return out;
}

Series ultraspherical_series(const FamilySpec& spec, const Scalar& lambda, int n) {
    Series s;
    Scalar c(1);
    Polynomial phi = Polynomial::constant(Scalar(1));
    const Polynomial step({Scalar::ratio(1, 2), Scalar::ratio(-1, 2)});  // (1 - x) / 2
    const Scalar a = sc(-n);
    const Scalar b = sc(n) + Scalar(2) * lambda;
    const Scalar d = lambda + Scalar::ratio(1, 2);
    for (int k = 0; k <= n; ++k) {
        s.coeffs.push_back(c);
        s.basis.push_back(phi);
        const Scalar kk = sc(k);
        if (k == n) break;
        c = checked_div(c * (a + kk) * (b + kk), (d + kk) * (kk + Scalar(1)), spec, "series denominator", k + 1);
        phi = phi * step;
    }
    return s;
}

Series family_series(const FamilySpec& spec, int n) {
    return std::visit(
        overloaded{
            [&](const family::Hahn& h) {
                Series s;
                Scalar c(1);
                Polynomial phi = Polynomial::constant(Scalar(1));
                const Scalar top = sc(n) + h.alpha + h.beta + Scalar(1);
                for (int k = 0; k <= n; ++k) {
                    s.coeffs.push_back(c);
                    s.basis.push_back(phi);
                    if (k == n) break;
                    const Scalar kk = sc(k);
                    c = checked_div(c * (kk - sc(n)) * (top + kk),
                                    (kk - sc(h.N)) * (h.alpha + Scalar(1) + kk) * (kk + Scalar(1)), spec,
                                    "series denominator", k + 1);
                    phi = phi * Polynomial({kk, Scalar(-1)});  // (j - x)
                }
                return s;
            },
            [&](const family::Racah& r) {
                Series s;
                Scalar c(1);
                Polynomial phi = Polynomial::constant(Scalar(1));
                const Scalar shift = r.gamma + r.delta + Scalar(1);
                const Scalar top = sc(n) + r.beta - sc(r.N);
                for (int k = 0; k <= n; ++k) {
                    s.coeffs.push_back(c);
                    s.basis.push_back(phi);
                    if (k == n) break;
                    const Scalar kk = sc(k);
                    c = checked_div(c * (kk - sc(n)) * (top + kk),
                                    (kk - sc(r.N)) * (r.beta + r.delta + Scalar(1) + kk) * (r.gamma + Scalar(1) + kk) *
                                        (kk + Scalar(1)),
                                    spec, "series denominator", k + 1);
                    phi = phi * Polynomial({kk * (kk + shift), Scalar(-1)});  // j(j + c) - x
                }
                return s;
            },
            [&](const family::QHahn& h) {
                check_q(h.q);
                Series s;
                Scalar c(1);
                Polynomial phi = Polynomial::constant(Scalar(1));
                const Scalar one(1);
                const Scalar ab = h.a * h.b;
                for (int k = 0; k <= n; ++k) {
                    s.coeffs.push_back(c);
                    s.basis.push_back(phi);
                    if (k == n) break;
                    const Scalar qk = qpow(h.q, k);
                    c = checked_div(c * (one - qpow(h.q, k - n)) * (one - ab * qpow(h.q, n + 1 + k)) * h.q,
                                    (one - qpow(h.q, k - h.N)) * (one - h.a * qpow(h.q, k + 1)) * (one - h.q * qk), spec,
                                    "series denominator", k + 1);
                    phi = phi * Polynomial({one, -qk});  // 1 - x q^j
                }
                return s;
            },
            [&](const family::ChebyshevT&) { return ultraspherical_series(spec, Scalar(0), n); },
            [&](const family::ChebyshevU&) { return ultraspherical_series(spec, Scalar(1), n); },
            [&](const family::Ultraspherical& u) { return ultraspherical_series(spec, u.lambda, n); },
        },
        spec);
}

}  // namespace

Scalar pochhammer(const Scalar& x, int k) {
    Scalar out(1);
    for (int j = 0; j < k; ++j) out *= x + sc(j);
    return out;
}

Scalar q_pochhammer(const Scalar& x, const Scalar& q, int k) {
    Scalar out(1);
    Scalar qj(1);
    for (int j = 0; j < k; ++j) {
        out *= Scalar(1) - x * qj;
        qj *= q;
    }
    return out;
}

std::string family_name(const FamilySpec& spec) {
    return std::visit(overloaded{
                          [](const family::Hahn& h) {
                              return "Hahn(" + h.alpha.to_string() + ", " + h.beta.to_string() + ", " +
                                     std::to_string(h.N) + ")";
                          },
                          [](const family::Racah& r) {
                              return "Racah(" + r.beta.to_string() + ", " + r.gamma.to_string() + ", " +
                                     r.delta.to_string() + ", " + std::to_string(r.N) + ")";
                          },
                          [](const family::QHahn& h) {
                              return "QHahn(" + h.a.to_string() + ", " + h.b.to_string() + ", " + h.q.to_string() +
                                     ", " + std::to_string(h.N) + ")";
                          },
                          [](const family::ChebyshevT& t) { return "ChebyshevT(" + std::to_string(t.N) + ")"; },
                          [](const family::ChebyshevU& t) { return "ChebyshevU(" + std::to_string(t.N) + ")"; },
                          [](const family::Ultraspherical& u) {
                              return "Ultraspherical(" + u.lambda.to_string() + ", " + std::to_string(u.N) + ")";
                          },
                      },
                      spec);
}

int family_size(const FamilySpec& spec) {
    return require_finite_N(std::visit([](const auto& f) { return f.N; }, spec));
}

RecurrencePair recurrence_coeffs(const FamilySpec& spec, int n) {
    check_index(spec, n);
    return std::visit(
        overloaded{
            [&](const family::Hahn& h) {
                const auto [A, C] = hahn_ac(spec, h, n);
                Scalar u(0);
                if (n > 0) u = hahn_ac(spec, h, n - 1).first * C;
                return RecurrencePair{A + C, u};
            },
            [&](const family::Racah& r) {
                const auto [A, C] = racah_ac(spec, r, n);
                Scalar u(0);
                if (n > 0) u = racah_ac(spec, r, n - 1).first * C;
                return RecurrencePair{-A - C, u};
            },
            [&](const family::QHahn& h) {
                check_q(h.q);
                const auto [A, C] = qhahn_ac(spec, h, n);
                Scalar u(0);
                if (n > 0) u = qhahn_ac(spec, h, n - 1).first * C;
                return RecurrencePair{Scalar(1) - A - C, u};
            },
            [&](const family::ChebyshevT&) {
                const Scalar u = n == 0 ? Scalar(0) : (n == 1 ? Scalar::ratio(1, 2) : Scalar::ratio(1, 4));
                return RecurrencePair{Scalar(0), u};
            },
            [&](const family::ChebyshevU&) {
                return RecurrencePair{Scalar(0), n == 0 ? Scalar(0) : Scalar::ratio(1, 4)};
            },
            [&](const family::Ultraspherical& c) {
                if (n == 0) return RecurrencePair{Scalar(0), Scalar(0)};
                const Scalar nn = sc(n);
                const Scalar u = checked_div(nn * (nn + Scalar(2) * c.lambda - Scalar(1)),
                                             Scalar(4) * (nn + c.lambda) * (nn + c.lambda - Scalar(1)), spec, "u_n", n);
                return RecurrencePair{Scalar(0), u};
            },
        },
        spec);
}

void validate(const FamilySpec& spec) {
    for (int n = 0; n <= family_size(spec); ++n) recurrence_coeffs(spec, n);
}

JacobiMatrix family_jacobi(const FamilySpec& spec) {
    const int N = family_size(spec);
    std::vector<Scalar> b, u;
    for (int n = 0; n <= N; ++n) {
        auto c = recurrence_coeffs(spec, n);
        b.push_back(std::move(c.b));
        if (n > 0) u.push_back(std::move(c.u));
    }
    return JacobiMatrix(std::move(b), std::move(u));
}

std::vector<Scalar> native_nodes(const FamilySpec& spec, long precision) {
    const int N = family_size(spec);
    std::vector<Scalar> out;
    std::visit(overloaded{
                   [&](const family::Hahn&) {
                       for (int s = 0; s <= N; ++s) out.push_back(sc(s));
                   },
                   [&](const family::Racah& r) {
                       const Scalar c = r.gamma + r.delta + Scalar(1);
                       for (int s = 0; s <= N; ++s) out.push_back(sc(s) * (sc(s) + c));
                   },
                   [&](const family::QHahn& h) {
                       check_q(h.q);
                       for (int s = 0; s <= N; ++s) out.push_back(qpow(h.q, -s));
                   },
                   [&](const family::ChebyshevT&) { out = indexed_nodes(GridSpec::trig_first(N, precision)); },
                   [&](const family::ChebyshevU&) { out = indexed_nodes(GridSpec::trig_first(N, precision)); },
                   [&](const family::Ultraspherical&) {
                       throw Error(ErrorKind::InvalidArgument, "ultraspherical polynomials carry no finite grid");
                   },
               },
               spec);
    return out;
}

Scalar total_mass(const FamilySpec& spec) {
    const FamilySpec& f = spec;
    return std::visit(
        overloaded{
            [&](const family::Hahn& h) {
                return checked_div(pochhammer(h.alpha + h.beta + Scalar(2), h.N), pochhammer(h.beta + Scalar(1), h.N),
                                   f, "mass", h.N);
            },
            [&](const family::Racah& r) {
                const int N = r.N;
                return checked_div(pochhammer(-r.beta, N) * pochhammer(r.gamma + r.delta + Scalar(2), N),
                                   pochhammer(Scalar(1) + r.gamma - r.beta, N) * pochhammer(r.delta + Scalar(1), N), f,
                                   "mass", N);
            },
            [&](const family::QHahn& h) {
                check_q(h.q);
                const int N = h.N;
                return checked_div(q_pochhammer(h.a * h.b * h.q * h.q, h.q, N),
                                   q_pochhammer(h.b * h.q, h.q, N) * pow(h.a * h.q, static_cast<unsigned>(N)), f,
                                   "mass", N);
            },
            [&](const family::ChebyshevT& t) { return sc(t.N + 1); },
            [&](const family::ChebyshevU&) { return Scalar(1); },
            [&](const family::Ultraspherical&) -> Scalar {
                throw Error(ErrorKind::InvalidArgument, "ultraspherical polynomials carry no finite grid");
            },
        },
        spec);
}

SpectralData family_weights(const FamilySpec& spec, long precision) {
    const int N = family_size(spec);
    const auto xs = native_nodes(spec, precision);
    std::vector<Scalar> w;
    std::visit(
        overloaded{
            [&](const family::Hahn& h) {
                const Scalar M = total_mass(spec);
                for (int s = 0; s <= N; ++s) {
                    const Scalar num = pochhammer(sc(-N), s) * pochhammer(h.alpha + Scalar(1), s);
                    const Scalar den = pochhammer(sc(1), s) * pochhammer(sc(-N) - h.beta, s) * M;
                    w.push_back(checked_div(num, den, spec, "W_s", s));
                }
            },
            [&](const family::Racah& r) {
                const Scalar c = r.gamma + r.delta;
                for (int s = 0; s <= N; ++s) {
                    const Scalar num = pochhammer(sc(-N), s) * pochhammer(r.beta + r.delta + Scalar(1), s) *
                                       pochhammer(r.gamma + Scalar(1), s) * pochhammer(c + Scalar(1), s) *
                                       pochhammer((c + Scalar(3)) / Scalar(2), s);
                    const Scalar den = pochhammer(sc(1), s) * pochhammer(c + Scalar(2) + sc(N), s) *
                                       pochhammer(r.gamma - r.beta + Scalar(1), s) *
                                       pochhammer(r.delta + Scalar(1), s) * pochhammer((c + Scalar(1)) / Scalar(2), s);
                    w.push_back(checked_div(num, den, spec, "W_s", s));
                }
                const Scalar M = total_mass(spec);
                for (auto& v : w) v = checked_div(v, M, spec, "mass", N);
            },
            [&](const family::QHahn& h) {
                const Scalar M = total_mass(spec);
                const Scalar qN = qpow(h.q, -N);
                for (int s = 0; s <= N; ++s) {
                    const Scalar num = q_pochhammer(h.a * h.q, h.q, s) * q_pochhammer(qN, h.q, s);
                    const Scalar den = q_pochhammer(h.q, h.q, s) * q_pochhammer(qN / h.b, h.q, s) *
                                       pow(h.a * h.b * h.q, static_cast<unsigned>(s)) * M;
                    w.push_back(checked_div(num, den, spec, "W_s", s));
                }
            },
            [&](const family::ChebyshevT&) {
                for (int s = 0; s <= N; ++s) w.push_back(Scalar::ratio(1, N + 1));
            },
            [&](const family::ChebyshevU&) {
                const BigFloat pi = BigFloat::pi(precision);
                for (int s = 0; s <= N; ++s) {
                    const BigFloat theta = pi * BigFloat(Rational(2 * s + 1, 2 * (N + 1)), precision);
                    const BigFloat sn = theta.sin();
                    w.push_back(Scalar(BigFloat(Rational(2, N + 1), precision) * sn * sn));
                }
            },
            [&](const family::Ultraspherical&) {},
        },
        spec);
    for (size_t s = 0; s < w.size(); ++s) {
        if (w[s].sign() <= 0) {
            throw Error(ErrorKind::NonPositiveWeight,
                        family_name(spec) + ": weight W_" + std::to_string(s) + " = " + w[s].to_string());
        }
    }
    std::vector<size_t> order(xs.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return xs[i] < xs[j]; });
    SpectralData out;
    for (size_t i : order) {
        out.nodes.push_back(xs[i]);
        out.weights.push_back(w[i]);
    }
    return out;
}

Scalar kappa(const FamilySpec& spec, int n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
    return std::visit(
        overloaded{
            [&](const family::Hahn& h) {
                return checked_div(pochhammer(sc(-h.N), n) * pochhammer(h.alpha + Scalar(1), n),
                                   pochhammer(sc(n) + h.alpha + h.beta + Scalar(1), n), spec, "kappa_n", n);
            },
            [&](const family::Racah& r) {
                return checked_div(pochhammer(sc(-r.N), n) * pochhammer(r.beta + r.delta + Scalar(1), n) *
                                       pochhammer(r.gamma + Scalar(1), n),
                                   pochhammer(sc(n) + r.beta - sc(r.N), n), spec, "kappa_n", n);
            },
            [&](const family::QHahn& h) {
                check_q(h.q);
                const Scalar& q = h.q;
                const Scalar lead = q_pochhammer(qpow(q, -n), q, n) * q_pochhammer(h.a * h.b * qpow(q, n + 1), q, n) *
                                    qpow(q, n) * qpow(q, n * (n - 1) / 2);
                const Scalar den = q_pochhammer(qpow(q, -h.N), q, n) * q_pochhammer(h.a * q, q, n) *
                                   q_pochhammer(q, q, n);
                const Scalar k = checked_div(den, lead, spec, "kappa_n", n);
                return n % 2 == 0 ? k : -k;
            },
            [&](const family::ChebyshevT&) {
                return n == 0 ? Scalar(1) : Scalar(Rational(2)) / pow(Scalar(2), static_cast<unsigned>(n));
            },
            [&](const family::ChebyshevU&) { return Scalar::ratio(n + 1, 1) / pow(Scalar(2), static_cast<unsigned>(n)); },
            [&](const family::Ultraspherical& u) {
                return checked_div(pochhammer(Scalar(2) * u.lambda, n),
                                   pochhammer(u.lambda, n) * pow(Scalar(2), static_cast<unsigned>(n)), spec, "kappa_n",
                                   n);
            },
        },
        spec);
}

Polynomial family_polynomial(const FamilySpec& spec, int n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
    return expand(family_series(spec, n)).scaled(kappa(spec, n));
}

Scalar family_value(const FamilySpec& spec, int n, int s, long precision) {
    const auto xs = native_nodes(spec, precision);
    if (s < 0 || s >= static_cast<int>(xs.size())) {
        throw Error(ErrorKind::InvalidArgument, "node index s=" + std::to_string(s) + " out of range");
    }
    return eval(family_polynomial(spec, n), xs[static_cast<size_t>(s)]);
}

FamilySpec mirror(const FamilySpec& spec) {
    return std::visit(overloaded{
                          [](const family::Hahn& h) -> FamilySpec {
                              const Scalar m = sc(-h.N - 1);
                              return family::Hahn{m - h.beta, m - h.alpha, h.N};
                          },
                          [](const family::Racah& r) -> FamilySpec {
                              return family::Racah{-r.beta, r.delta, r.gamma, r.N};
                          },
                          [](const family::QHahn& h) -> FamilySpec {
                              const Scalar t = qpow(h.q, -h.N - 1);
                              return family::QHahn{t / h.b, t / h.a, h.q, h.N};
                          },
                          [](const auto&) -> FamilySpec {
                              throw Error(ErrorKind::InvalidArgument, "mirror map defined for Hahn, Racah, q-Hahn only");
                          },
                      },
                      spec);
}

std::string to_string(LegendreGrid g) {
    switch (g) {
        case LegendreGrid::Linear: return "linear";
        case LegendreGrid::QuadraticTau1: return "quad:tau=1";
        case LegendreGrid::Trig1: return "trig1";
        case LegendreGrid::Trig2: return "trig2";
    }
    return "unknown";
}

namespace {

RecurrencePair printed_dual(LegendreGrid g, int N, int n) {
    const Scalar nn = sc(n);
    const Scalar NN = sc(N);
    const Scalar n2 = nn * nn;
    const Scalar span = (NN + Scalar(1)) * (NN + Scalar(1)) - n2;
    if (g == LegendreGrid::Linear) {
        const Scalar u = n == 0 ? Scalar(0) : n2 * span / (Scalar(4) * (Scalar(4) * n2 - Scalar(1)));
        return {NN / Scalar(2), u};
    }
    Scalar u(0);
    if (n > 0) {
        const Scalar t = Scalar(2) * nn - Scalar(1);
        u = n2 * t * t * span * (Scalar(2) * NN + Scalar(3) - Scalar(2) * nn) * (Scalar(2) * NN + Scalar(1) + Scalar(2) * nn) /
            ((Scalar(4) * nn + Scalar(1)) * (Scalar(4) * nn - Scalar(3)) * (Scalar(4) * nn - Scalar(1)) *
             (Scalar(4) * nn - Scalar(1)));
    }
    const Scalar b = (NN + Scalar::ratio(5, 4)) * (NN + Scalar::ratio(3, 4)) / Scalar(8) *
                         (Scalar(1) / (Scalar(4) * nn - Scalar(1)) - Scalar(1) / (Scalar(4) * nn - Scalar(3))) +
                     (NN - nn) * (Scalar(2) * nn + Scalar(2) * NN + Scalar(1)) / Scalar(4) + Scalar(3) * NN / Scalar(4) +
                     Scalar::ratio(5, 32);
    return {b, u};
}

RecurrencePair printed_trig_sturm(LegendreGrid g, int N, int n) {
    if (n == 0) return {Scalar(0), Scalar(0)};
    if (g == LegendreGrid::Trig1) return {Scalar(0), n == N ? Scalar::ratio(1, 2) : Scalar::ratio(1, 4)};
    if (n == N) return {Scalar(0), Scalar::ratio(N, 2 * (N + 1))};
    return {Scalar(0), Scalar::ratio(n * (n + 3), 4 * (n + 2) * (n + 1))};
}

void check_legendre_index(int N, int n) {
    if (N < 0 || n < 0 || n > N) {
        throw Error(ErrorKind::InvalidArgument,
                    "index n=" + std::to_string(n) + " outside 0.." + std::to_string(N));
    }
}

bool is_trig(LegendreGrid g) { return g == LegendreGrid::Trig1 || g == LegendreGrid::Trig2; }

}  // namespace

RecurrencePair legendre_dual_coeffs(LegendreGrid g, int N, int n) {
    check_legendre_index(N, n);
    if (!is_trig(g)) return printed_dual(g, N, n);
    return {Scalar(0), n == 0 ? Scalar(0) : printed_trig_sturm(g, N, N + 1 - n).u};
}

RecurrencePair sturm_coeffs(LegendreGrid g, int N, int n) {
    check_legendre_index(N, n);
    if (is_trig(g)) return printed_trig_sturm(g, N, n);
    return {printed_dual(g, N, N - n).b, n == 0 ? Scalar(0) : printed_dual(g, N, N + 1 - n).u};
}

}  // namespace sturmion
