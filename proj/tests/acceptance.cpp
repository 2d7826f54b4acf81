// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "sturmion/error.hpp"
#include "sturmion/families.hpp"
#include "sturmion/grids.hpp"
#include "sturmion/harness.hpp"
#include "sturmion/transforms.hpp"

using namespace sturmion;

namespace {

constexpr long kPrec = 256;
constexpr long kTolExponent = -200;
constexpr double kFastLimitSeconds = 10.0;
constexpr double kSuiteLimitSeconds = 60.0;
constexpr unsigned kSeed = 20240611;

Scalar R(long n, long d = 1) { return Scalar::ratio(n, d); }
Scalar tol() { return Scalar(BigFloat::exp2(kTolExponent, kPrec)); }

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

int failures = 0;

void run(int k, const std::string& title, const std::function<void(Outcome&)>& body, double limit = 0) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs >= limit) {
        out.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::printf("[%s] criterion %d: %s (%s%s%s)\n", out.ok ? "PASS" : "FAIL", k, title.c_str(), timing,
                out.note.empty() ? "" : "; ", out.note.c_str());
    std::fflush(stdout);
    if (!out.ok) ++failures;
}

SturmChain chain_of(const GridSpec& spec) {
    auto [top, next] = sturmian_pair(characteristic_polynomial(spec));
    return build_chain(top, next);
}

std::vector<GridSpec> rational_grids(int N) {
    return {GridSpec::linear(N), GridSpec::quadratic(R(1), N), GridSpec::quadratic(R(2), N),
            GridSpec::exponential(R(1, 2), N), GridSpec::exponential(R(2, 3), N)};
}

std::string where(const GridSpec& g) { return to_string(g) + " N=" + std::to_string(g.N); }

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

BigFloat theta(int s, int N, int kind) {
    // kind 1: pi (s + 1/2) / (N + 1); kind 2: pi (s + 1) / (N + 2)
    const mpq_class frac = kind == 1 ? mpq_class(2 * s + 1, 2 * (N + 1)) : mpq_class(s + 1, N + 2);
    return BigFloat::pi(kPrec) * BigFloat(frac, kPrec);
}

}  // namespace

int main() {
    std::mt19937 rng(kSeed);
    auto random_rational = [&](long lo, long hi, long den) {
        std::uniform_int_distribution<long> d(lo * den, hi * den);
        return R(d(rng), den);
    };

    run(1, "constant dual weights 1/(N+1) on linear, s(s+1), s(s+2), q^-s (1/2, 2/3) exactly and trig1/trig2 within 2^-200, N=1..12",
        [](Outcome& o) {
            for (int N = 1; N <= 12; ++N) {
                auto grids = rational_grids(N);
                grids.push_back(GridSpec::trig_first(N, kPrec));
                grids.push_back(GridSpec::trig_second(N, kPrec));
                for (const auto& g : grids) {
                    const SturmChain c = chain_of(g);
                    const auto xs = nodes(g);
                    const auto w = dual_weights(c.top(), c.next(), xs).weights;
                    const Scalar target = R(1, N + 1);
                    for (const auto& v : w) {
                        const bool good = g.is_trigonometric() ? (v - target).abs() < tol() : v == target;
                        o.require(good, where(g));
                    }
                }
            }
        },
        kFastLimitSeconds);

    run(2, "linear grid chain = Hahn(-N-1,-N-1,N) = mirror of Hahn(0,0,N), dual side = printed closed form, N=1..25; N=2: b=(1,1,1), u=(1/3,2/3)",
        [](Outcome& o) {
            for (int N = 1; N <= 25; ++N) {
                const JacobiMatrix J = JacobiMatrix::from_chain(chain_of(GridSpec::linear(N)));
                o.require(J == family_jacobi(family::Hahn{R(-N - 1), R(-N - 1), N}), "Hahn(-N-1) N=" + std::to_string(N));
                o.require(mirror_dual(J) == family_jacobi(family::Hahn{R(0), R(0), N}), "Hahn(0,0) N=" + std::to_string(N));
                const JacobiMatrix Jd = mirror_dual(J);
                for (int n = 0; n <= N; ++n) {
                    const RecurrencePair p = legendre_dual_coeffs(LegendreGrid::Linear, N, n);
                    o.require(p.b == Jd.b(n) && (n == 0 || p.u == Jd.u(n)), "dual closed form N=" + std::to_string(N));
                }
                if (N == 2) {
                    o.require(J.b() == std::vector<Scalar>{R(1), R(1), R(1)} && J.u() == std::vector<Scalar>{R(1, 3), R(2, 3)},
                              "anchor N=2");
                }
            }
        },
        kFastLimitSeconds);

    run(3, "linear grid primal weights = nu C(N,s)^2 with nu = (N!)^2/(2N)!, N=1..15; N=2: (1/6, 2/3, 1/6)", [](Outcome& o) {
        for (int N = 1; N <= 15; ++N) {
            const GridSpec g = GridSpec::linear(N);
            const auto w = primal_weights(chain_of(g), nodes(g)).weights;
            const mpq_class nu(factorial(N) * factorial(N), factorial(2 * N));
            for (int s = 0; s <= N; ++s) {
                const mpz_class c = binomial(N, s);
                o.require(w[static_cast<size_t>(s)] == Scalar(mpq_class(nu * c * c)), "N=" + std::to_string(N));
            }
            if (N == 2) o.require(w == std::vector<Scalar>{R(1, 6), R(2, 3), R(1, 6)}, "anchor N=2");
        }
    });

    run(4, "(x-N)^2 (P(x+1)-P(x)) + x^2 (P(x-1)-P(x)) = n(n-2N-1) P(x) for every chain polynomial, N=1..12; n=1,N=2: -4x+4",
        [](Outcome& o) {
            for (int N = 1; N <= 12; ++N) {
                const SturmChain c = chain_of(GridSpec::linear(N));
                const Polynomial x{R(0), R(1)};
                const Polynomial xmN{R(-N), R(1)};
                for (int n = 0; n <= N; ++n) {
                    const Polynomial& P = c.P(n);
                    const Polynomial lhs = xmN * xmN * (P.compose_affine(R(1), R(1)) - P) +
                                           x * x * (P.compose_affine(R(1), R(-1)) - P);
                    const Polynomial rhs = P.scaled(R(n * (n - 2 * N - 1)));
                    o.require(lhs == rhs, "N=" + std::to_string(N) + " n=" + std::to_string(n));
                    if (N == 2 && n == 1) o.require(lhs == (Polynomial{R(4), R(-4)}), "anchor");
                }
            }
        });

    run(5, "s(s+1) grid: mirror chain = Racah(N+1/2,-1/2,1/2) and u* = printed closed form, N=1..15; N=2: u*=(56/9,108/49), b*=(8/3,76/21,12/7)",
        [](Outcome& o) {
            int flagged = 0;
            for (int N = 1; N <= 15; ++N) {
                const JacobiMatrix Jd = mirror_dual(JacobiMatrix::from_chain(chain_of(GridSpec::quadratic(R(1), N))));
                o.require(Jd == family_jacobi(family::Racah{R(2 * N + 1, 2), R(-1, 2), R(1, 2), N}),
                          "Racah N=" + std::to_string(N));
                for (int n = 1; n <= N; ++n) {
                    o.require(legendre_dual_coeffs(LegendreGrid::QuadraticTau1, N, n).u == Jd.u(n),
                              "u closed form N=" + std::to_string(N));
                }
                for (int n = 0; n <= N; ++n) {
                    if (!(legendre_dual_coeffs(LegendreGrid::QuadraticTau1, N, n).b == Jd.b(n))) ++flagged;
                }
                if (N == 2) {
                    o.require(Jd.u() == std::vector<Scalar>{R(56, 9), R(108, 49)}, "anchor u*");
                    o.require(Jd.b() == std::vector<Scalar>{R(8, 3), R(76, 21), R(12, 7)}, "anchor b*");
                    o.require(legendre_dual_coeffs(LegendreGrid::QuadraticTau1, 2, 0).b == R(655, 192), "printed b*_0");
                }
            }
            const CheckReport r = verify_quadratic_tau1(2);
            o.require(r.passed(), "report must not fail on the printed b* formula");
            o.note = "known discrepancy: printed b* formula differs from the chain at " + std::to_string(flagged) +
                     " indices (N=2, n=0: 655/192 vs 8/3)";
        });

    run(6, "s(s+2) grid: chain = christoffel(Racah(-N-3/2,1/2,1/2), a=-1), dual weights W_s ~ x_s + 1, N=1..12", [](Outcome& o) {
        for (int N = 1; N <= 12; ++N) {
            const GridSpec g = GridSpec::quadratic(R(2), N);
            const JacobiMatrix J = JacobiMatrix::from_chain(chain_of(g));
            const JacobiMatrix racah = family_jacobi(family::Racah{R(-2 * N - 3, 2), R(1, 2), R(1, 2), N});
            o.require(christoffel(racah, R(-1)).matrix == J, "Christoffel N=" + std::to_string(N));
            // Mirror side: the constant measure times (x + 1) is the Racah(N+3/2, 1/2, 1/2) measure.
            const FamilySpec dual = family::Racah{R(2 * N + 3, 2), R(1, 2), R(1, 2), N};
            o.require(christoffel(mirror_dual(J), R(-1)).matrix == family_jacobi(dual), "dual N=" + std::to_string(N));
            const auto xs = nodes(g);
            Scalar mass(0);
            for (const auto& x : xs) mass += x + R(1);
            const auto w = family_weights(dual).weights;
            for (size_t s = 0; s < xs.size(); ++s) o.require(w[s] == (xs[s] + R(1)) / mass, "W law N=" + std::to_string(N));
        }
    });

    run(7, "q^-s grid, q in {1/2, 2/3}: chain = christoffel(qHahn(q^-N-1, q^-N-1), 0), mirror = uvarov(qHahn(1,1), 0), N=1..12; q=1/2,N=1: b~0=3/2, u~1=1/4",
        [](Outcome& o) {
            for (const Scalar& q : {R(1, 2), R(2, 3)}) {
                for (int N = 1; N <= 12; ++N) {
                    const JacobiMatrix J = JacobiMatrix::from_chain(chain_of(GridSpec::exponential(q, N)));
                    const Scalar t = R(1) / pow(q, static_cast<unsigned>(N + 1));
                    const ChristoffelResult c = christoffel(family_jacobi(family::QHahn{t, t, q, N}), R(0));
                    o.require(c.matrix == J, "Christoffel q=" + q.to_string() + " N=" + std::to_string(N));
                    const FamilySpec one = family::QHahn{R(1), R(1), q, N};
                    o.require(uvarov(family_jacobi(one), family_weights(one), R(0)).result == mirror_dual(J),
                              "Uvarov q=" + q.to_string() + " N=" + std::to_string(N));
                    if (q == R(1, 2) && N == 1) o.require(c.matrix.b(0) == R(3, 2) && c.matrix.u(1) == R(1, 4), "anchor");
                }
            }
        });

    run(8, "trig1: b=0, u=(1/4..1/4,1/2); trig2: u_n=n(n+3)/(4(n+1)(n+2)), u_N=N/(2(N+1)), N=1..20; weights within 2^-200",
        [](Outcome& o) {
            for (int N = 1; N <= 20; ++N) {
                for (int kind : {1, 2}) {
                    const GridSpec g = kind == 1 ? GridSpec::trig_first(N, kPrec) : GridSpec::trig_second(N, kPrec);
                    const SturmChain c = chain_of(g);
                    const std::string tag = "trig" + std::to_string(kind) + " N=" + std::to_string(N);
                    for (const auto& b : c.b) o.require(b == R(0), tag + " b");
                    for (int n = 1; n <= N; ++n) {
                        Scalar expected;
                        if (kind == 1) expected = n == N ? R(1, 2) : R(1, 4);
                        else expected = n == N ? R(N, 2 * (N + 1)) : R(n * (n + 3), 4 * (n + 1) * (n + 2));
                        o.require(c.u[static_cast<size_t>(n) - 1] == expected, tag + " u");
                    }
                    if (N == 2) {
                        const auto want = kind == 1 ? std::vector<Scalar>{R(1, 4), R(1, 2)} : std::vector<Scalar>{R(1, 6), R(1, 3)};
                        o.require(c.u == want, tag + " anchor");
                    }
                    const auto w = primal_weights(c, nodes(g)).weights;
                    for (int s = 0; s <= N; ++s) {
                        const BigFloat sn = theta(s, N, kind).sin();
                        // kind 1: 2/(N+1) sin^2; kind 2: 8/(3(N+2)) sin^4
                        const BigFloat expected = kind == 1
                                                      ? BigFloat(mpq_class(2, N + 1), kPrec) * sn * sn
                                                      : BigFloat(mpq_class(8, 3 * (N + 2)), kPrec) * sn * sn * sn * sn;
                        o.require((w[static_cast<size_t>(s)] - Scalar(expected)).abs() < tol(), tag + " weights");
                    }
                }
            }
        });

    run(9, "w_s w*_s = h_N / P'(x_s)^2 with zero residual on every rational grid, N=1..12; linear N=2, s=0: 1/18", [](Outcome& o) {
        for (int N = 1; N <= 12; ++N) {
            for (const auto& g : rational_grids(N)) {
                const SturmChain c = chain_of(g);
                const auto xs = nodes(g);
                const SpectralData w = primal_weights(c, xs);
                const SpectralData ws = dual_weights(c.top(), c.next(), xs);
                const Scalar hN = JacobiMatrix::from_chain(c).h(N);
                const Polynomial dP = derivative(c.top());
                for (size_t s = 0; s < xs.size(); ++s) {
                    const Scalar d = eval(dP, xs[s]);
                    o.require(w.weights[s] * ws.weights[s] == hN / (d * d), where(g));
                }
                o.require(duality_product_check(w, ws, c).is_zero(), where(g) + " residual");
                if (N == 2 && std::holds_alternative<grid::Linear>(g.kind)) {
                    o.require(w.weights[0] * ws.weights[0] == R(1, 18), "anchor");
                }
            }
        }
    });

    run(10, "Sturm count = direct node count on 50 random rational intervals per rational grid, N=1..12", [&](Outcome& o) {
        int checks = 0;
        for (int N = 1; N <= 12; ++N) {
            for (const auto& g : rational_grids(N)) {
                const auto xs = nodes(g);
                const SturmSequence seq(characteristic_polynomial(g));
                const long top = static_cast<long>(xs.back().to_double()) + 2;
                int done = 0;
                while (done < 50) {
                    Scalar a = random_rational(-2, top, 7), b = random_rational(-2, top, 7);
                    if (b < a) std::swap(a, b);
                    if (a == b || std::find(xs.begin(), xs.end(), a) != xs.end() ||
                        std::find(xs.begin(), xs.end(), b) != xs.end()) {
                        continue;
                    }
                    int direct = 0;
                    for (const auto& x : xs) direct += (a < x && !(b < x)) ? 1 : 0;
                    o.require(seq.count(a, b) == direct, where(g));
                    ++done;
                    ++checks;
                }
            }
        }
        o.note = std::to_string(checks) + " intervals";
    });

    run(11, "Hankel determinants of the moments of x_s + 1 (linear grid) positive for n <= N, N=1..12; nodes (1,2,3): Delta_1 = 2/3",
        [](Outcome& o) {
            for (int N = 1; N <= 12; ++N) {
                std::vector<Scalar> xs;
                for (int s = 0; s <= N; ++s) xs.push_back(R(s + 1));
                std::vector<Scalar> moments;
                for (unsigned k = 0; k <= static_cast<unsigned>(2 * N + 1); ++k) moments.push_back(dual_moments(xs, k));
                const auto rows = hankel_tests(moments, N);
                for (const auto& row : rows) {
                    o.require(row.both_positive && row.delta.sign() > 0 && row.delta_1.sign() > 0,
                              "N=" + std::to_string(N) + " n=" + std::to_string(row.n));
                }
                if (N == 2) o.require(rows[1].delta == R(2, 3), "anchor");
            }
        });

    run(12, "Stieltjes fraction of the mirror chain = (N+1)^-1 sum 1/(z - x_s) at 20 random rational z per rational grid, N=1..12; linear N=2, z=3: 11/18",
        [&](Outcome& o) {
            for (int N = 1; N <= 12; ++N) {
                for (const auto& g : rational_grids(N)) {
                    const auto xs = nodes(g);
                    const JacobiMatrix Jd = mirror_dual(JacobiMatrix::from_chain(chain_of(g)));
                    int done = 0;
                    while (done < 20) {
                        const Scalar z = random_rational(-3, 20, 11);
                        if (std::find(xs.begin(), xs.end(), z) != xs.end()) continue;
                        Scalar direct(0);
                        for (const auto& x : xs) direct += R(1) / (z - x);
                        o.require(stieltjes_fraction(Jd, z) == direct / R(N + 1), where(g));
                        ++done;
                    }
                    if (N == 2 && std::holds_alternative<grid::Linear>(g.kind)) {
                        o.require(stieltjes_fraction(Jd, R(3)) == R(11, 18), "anchor");
                    }
                }
            }
        });

    run(13, "Sturmian pair of monic H_{N+1}: chain = Hermite (u_n = n/2), mirror-dual u*_n = (N+1-n)/2, N=1..15", [](Outcome& o) {
        for (int N = 1; N <= 15; ++N) {
            std::vector<Scalar> b(static_cast<size_t>(N) + 1, R(0)), u;
            for (int n = 1; n <= N; ++n) u.push_back(R(n, 2));
            const JacobiMatrix H(b, u);
            auto [top, next] = sturmian_pair(characteristic_polynomial(H));
            const JacobiMatrix J = JacobiMatrix::from_chain(build_chain(top, next));
            o.require(J == H, "chain N=" + std::to_string(N));
            const JacobiMatrix Jd = mirror_dual(J);
            for (int n = 1; n <= N; ++n) o.require(Jd.u(n) == R(N + 1 - n, 2), "mirror N=" + std::to_string(N));
            for (int n = 0; n <= N; ++n) o.require(Jd.b(n) == R(0), "mirror b N=" + std::to_string(N));
        }
    });

    run(14, "whole suite run_all(N_max=12, q in {1/2, 2/3}) passes in under 60 s", [](Outcome& o) {
        const auto reports = run_all(12, {R(1, 2), R(2, 3)}, kPrec);
        o.require(reports.size() == 12 * 8, "report count");
        o.require(all_passed(reports), "some report is a Mismatch");
        o.note = std::to_string(reports.size()) + " reports";
    }, kSuiteLimitSeconds);

    std::printf("%d of 14 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
