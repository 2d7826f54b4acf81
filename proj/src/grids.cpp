#include "sturmion/grids.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sturmion/error.hpp"

namespace sturmion {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Scalar trig_angle(const GridSpec& spec, int s) {
    const BigFloat pi = BigFloat::pi(spec.precision);
    if (std::holds_alternative<grid::TrigFirstKind>(spec.kind)) {
        return Scalar(pi * BigFloat(Rational(2 * s + 1, 2 * (spec.N + 1)), spec.precision));
    }
    return Scalar(pi * BigFloat(Rational(s + 1, spec.N + 2), spec.precision));
}

void validate(const GridSpec& spec) {
    if (spec.N < 0) throw Error(ErrorKind::InvalidArgument, "grid size N must be non-negative");
    if (spec.affine.scale.is_zero()) throw Error(ErrorKind::DegenerateGrid, "affine scale must be nonzero");
    std::visit(overloaded{
                   [](const grid::Quadratic& g) {
                       if (!(g.tau > Scalar(-1))) {
                           throw Error(ErrorKind::DegenerateGrid, "quadratic grid needs tau > -1");
                       }
                   },
                   [](const grid::Exponential& g) {
                       if (!(g.q > Scalar(0) && g.q < Scalar(1))) {
                           throw Error(ErrorKind::DegenerateGrid, "exponential grid needs 0 < q < 1");
                       }
                   },
                   [](const grid::AskeyWilson& g) {
                       if (g.q.is_zero() || g.q.abs() == Scalar(1)) {
                           throw Error(ErrorKind::DegenerateGrid, "Askey-Wilson grid needs q != 0 and |q| != 1");
                       }
                   },
                   [](const auto&) {},
               },
               spec.kind);
}

Scalar canonical_node(const GridSpec& spec, int s) {
    const Scalar ss(static_cast<long>(s));
    return std::visit(overloaded{
                          [&](const grid::Linear&) { return ss; },
                          [&](const grid::Quadratic& g) { return ss * (ss + g.tau); },
                          [&](const grid::Exponential& g) { return Scalar(1) / pow(g.q, static_cast<unsigned>(s)); },
                          [&](const grid::AskeyWilson& g) {
                              const Scalar qs = pow(g.q, static_cast<unsigned>(s));
                              return g.c1 * qs + g.c2 / qs + g.c0;
                          },
                          [&](const grid::BannaiIto& g) {
                              const Scalar v = g.c1 * ss + g.c2;
                              return (s % 2 == 0 ? v : -v) + g.c0;
                          },
                          [&](const auto&) {
                              return Scalar(-trig_angle(spec, s).bigfloat().cos());
                          },
                      },
                      spec.kind);
}

std::map<std::string, std::string> parse_params(const std::string& text, const std::string& body) {
    std::map<std::string, std::string> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::Parse, "expected key=value in grid '" + text + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

Scalar take(std::map<std::string, std::string>& params, const std::string& key, const std::string& text) {
    const auto it = params.find(key);
    if (it == params.end()) throw Error(ErrorKind::Parse, "grid '" + text + "' is missing '" + key + "'");
    Scalar v = Scalar::parse(it->second);
    params.erase(it);
    return v;
}

Scalar tolerance_for(std::span<const Scalar> values) {
    std::optional<long> prec;
    Scalar magnitude(1);
    for (const auto& v : values) {
        if (v.precision()) prec = std::max(prec.value_or(0), *v.precision());
        if (magnitude < v.abs()) magnitude = v.abs();
    }
    if (!prec) return Scalar(0);
    return Scalar(BigFloat::exp2(-*prec / 2, *prec)) * magnitude;
}

bool negligible(const Scalar& x, const Scalar& tol) {
    if (x.is_exact() && tol.is_zero()) return x.is_zero();
    return !(tol < x.abs());
}

std::optional<Scalar> exact_sqrt(const Rational& v) {
    if (sgn(v) < 0) return std::nullopt;
    if (mpz_perfect_square_p(v.get_num().get_mpz_t()) == 0 || mpz_perfect_square_p(v.get_den().get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return Scalar(Rational(sqrt(v.get_num()), sqrt(v.get_den())));
}

std::optional<Scalar> scalar_sqrt(const Scalar& v) {
    if (v.is_exact()) return exact_sqrt(v.rational());
    return Scalar(v.bigfloat().sqrt());
}

}  // namespace

bool GridSpec::is_trigonometric() const {
    return std::holds_alternative<grid::TrigFirstKind>(kind) || std::holds_alternative<grid::TrigSecondKind>(kind);
}

GridSpec GridSpec::with_affine(Affine a) const {
    GridSpec out = *this;
    out.affine = std::move(a);
    return out;
}

GridSpec parse_grid(const std::string& text, int N, long precision, std::optional<Scalar> tau) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    auto params = parse_params(text, colon == std::string::npos ? std::string() : text.substr(colon + 1));
    GridSpec spec{grid::Linear{}, N, {}, precision};
    if (name == "linear") {
    } else if (name == "quad") {
        if (params.count("tau") != 0) {
            spec.kind = grid::Quadratic{take(params, "tau", text)};
        } else if (tau) {
            spec.kind = grid::Quadratic{*tau};
        } else {
            throw Error(ErrorKind::Parse, "quadratic grid needs tau (quad:tau=.. or --tau)");
        }
    } else if (name == "exp") {
        spec.kind = grid::Exponential{take(params, "q", text)};
    } else if (name == "trig1") {
        spec.kind = grid::TrigFirstKind{};
    } else if (name == "trig2") {
        spec.kind = grid::TrigSecondKind{};
    } else if (name == "aw") {
        Scalar q = take(params, "q", text);
        Scalar c1 = take(params, "c1", text);
        Scalar c2 = take(params, "c2", text);
        Scalar c0 = take(params, "c0", text);
        spec.kind = grid::AskeyWilson{q, c1, c2, c0};
    } else if (name == "bi") {
        Scalar c1 = take(params, "c1", text);
        Scalar c2 = take(params, "c2", text);
        Scalar c0 = take(params, "c0", text);
        spec.kind = grid::BannaiIto{c1, c2, c0};
    } else {
        throw Error(ErrorKind::Parse, "unknown grid kind '" + name + "'");
    }
    if (params.count("scale") != 0) spec.affine.scale = take(params, "scale", text);
    if (params.count("shift") != 0) spec.affine.shift = take(params, "shift", text);
    if (!params.empty()) throw Error(ErrorKind::Parse, "unknown key '" + params.begin()->first + "' in '" + text + "'");
    return spec;
}

std::string to_string(const GridSpec& spec) {
    std::string out = std::visit(
        overloaded{
            [](const grid::Linear&) { return std::string("linear"); },
            [](const grid::Quadratic& g) { return "quad:tau=" + g.tau.to_string(); },
            [](const grid::Exponential& g) { return "exp:q=" + g.q.to_string(); },
            [](const grid::AskeyWilson& g) {
                return "aw:q=" + g.q.to_string() + ",c1=" + g.c1.to_string() + ",c2=" + g.c2.to_string() +
                       ",c0=" + g.c0.to_string();
            },
            [](const grid::BannaiIto& g) {
                return "bi:c1=" + g.c1.to_string() + ",c2=" + g.c2.to_string() + ",c0=" + g.c0.to_string();
            },
            [](const grid::TrigFirstKind&) { return std::string("trig1"); },
            [](const grid::TrigSecondKind&) { return std::string("trig2"); },
        },
        spec.kind);
    if (!spec.affine.is_identity()) {
        out += (out.find(':') == std::string::npos ? ":" : ",");
        out += "scale=" + spec.affine.scale.to_string() + ",shift=" + spec.affine.shift.to_string();
    }
    return out;
}

std::vector<Scalar> indexed_nodes(const GridSpec& spec) {
    validate(spec);
    std::vector<Scalar> out;
    out.reserve(static_cast<size_t>(spec.N) + 1);
    for (int s = 0; s <= spec.N; ++s) out.push_back(spec.affine.apply(canonical_node(spec, s)));
    return out;
}

std::vector<Scalar> nodes(const GridSpec& spec) {
    std::vector<Scalar> out = indexed_nodes(spec);
    std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a < b; });
    for (size_t s = 1; s < out.size(); ++s) {
        if (!(out[s - 1] < out[s])) {
            throw Error(ErrorKind::DegenerateGrid, "repeated node " + out[s].to_string() + " in " + to_string(spec));
        }
    }
    return out;
}

Polynomial monic_chebyshev_t(int n) {
    Polynomial prev = Polynomial::constant(Scalar(1));
    if (n == 0) return prev;
    Polynomial cur = Polynomial::linear(Scalar(0));
    for (int k = 1; k < n; ++k) {
        const Scalar u = k == 1 ? Scalar::ratio(1, 2) : Scalar::ratio(1, 4);
        Polynomial next = Polynomial::linear(Scalar(0)) * cur - prev.scaled(u);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial monic_chebyshev_u(int n) {
    Polynomial prev = Polynomial::constant(Scalar(1));
    if (n == 0) return prev;
    Polynomial cur = Polynomial::linear(Scalar(0));
    for (int k = 1; k < n; ++k) {
        Polynomial next = Polynomial::linear(Scalar(0)) * cur - prev.scaled(Scalar::ratio(1, 4));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial characteristic_polynomial(const GridSpec& spec) {
    validate(spec);
    if (!spec.is_trigonometric()) {
        const auto xs = nodes(spec);
        return poly_from_roots(xs);
    }
    const Polynomial p = std::holds_alternative<grid::TrigFirstKind>(spec.kind) ? monic_chebyshev_t(spec.N + 1)
                                                                                : monic_chebyshev_u(spec.N + 1);
    if (spec.affine.is_identity()) return p;
    // prod (y - (a x_s + c)) = a^{N+1} P((y - c) / a)
    const Scalar& a = spec.affine.scale;
    const Scalar& c = spec.affine.shift;
    return p.compose_affine(Scalar(1) / a, -c / a).scaled(pow(a, static_cast<unsigned>(spec.N + 1)));
}

GridConstants grid_constants(const GridSpec& spec) {
    validate(spec);
    GridConstants canonical = std::visit(
        overloaded{
            [](const grid::Linear&) { return GridConstants{Scalar(2), Scalar(0)}; },
            [](const grid::Quadratic&) { return GridConstants{Scalar(2), Scalar(2)}; },
            [](const grid::Exponential& g) { return GridConstants{g.q + Scalar(1) / g.q, Scalar(0)}; },
            [](const grid::AskeyWilson& g) {
                const Scalar omega = g.q + Scalar(1) / g.q;
                return GridConstants{omega, g.c0 * (Scalar(2) - omega)};
            },
            [](const grid::BannaiIto& g) { return GridConstants{Scalar(-2), Scalar(4) * g.c0}; },
            [&](const grid::TrigFirstKind&) {
                const BigFloat w = BigFloat::pi(spec.precision) * BigFloat(Rational(1, spec.N + 1), spec.precision);
                return GridConstants{Scalar(BigFloat(2L, spec.precision) * w.cos()), Scalar(0)};
            },
            [&](const grid::TrigSecondKind&) {
                const BigFloat w = BigFloat::pi(spec.precision) * BigFloat(Rational(1, spec.N + 2), spec.precision);
                return GridConstants{Scalar(BigFloat(2L, spec.precision) * w.cos()), Scalar(0)};
            },
        },
        spec.kind);
    const Scalar nu = spec.affine.scale * canonical.nu + spec.affine.shift * (Scalar(2) - canonical.omega);
    return {canonical.omega, nu};
}

std::string to_string(GridClass c) {
    switch (c) {
        case GridClass::AskeyWilson: return "askey-wilson";
        case GridClass::Exponential: return "exponential";
        case GridClass::Trigonometric: return "trigonometric";
        case GridClass::Quadratic: return "quadratic";
        case GridClass::Linear: return "linear";
        case GridClass::BannaiIto: return "bannai-ito";
    }
    return "unknown";
}

Classification classify(const Scalar& omega, std::optional<Scalar> vanishing_coefficient) {
    const bool vanishes = vanishing_coefficient && vanishing_coefficient->is_zero();
    if (omega == Scalar(2)) return {vanishes ? GridClass::Linear : GridClass::Quadratic, std::nullopt};
    if (omega == Scalar(-2)) return {GridClass::BannaiIto, std::nullopt};
    if (omega.abs() < Scalar(2)) return {GridClass::Trigonometric, std::nullopt};
    // q + 1/q = omega, |q| < 1
    std::optional<Scalar> root = scalar_sqrt(omega * omega - Scalar(4));
    if (!root) {
        root = Scalar((omega * omega - Scalar(4)).to_bigfloat(kDefaultPrecisionBits).sqrt());
    }
    const Scalar q = omega.sign() > 0 ? (omega - *root) / Scalar(2) : (omega + *root) / Scalar(2);
    return {vanishes ? GridClass::Exponential : GridClass::AskeyWilson, q};
}

ReducedGrid affine_reduce(std::span<const Scalar> raw_nodes) {
    if (raw_nodes.size() < 3) throw Error(ErrorKind::NotAClassicalGrid, "need at least 3 nodes");
    std::vector<Scalar> x(raw_nodes.begin(), raw_nodes.end());
    if (x[1] < x[0]) std::reverse(x.begin(), x.end());
    for (size_t s = 1; s < x.size(); ++s) {
        if (!(x[s - 1] < x[s])) throw Error(ErrorKind::NotAClassicalGrid, "nodes are not strictly monotone");
    }
    const int N = static_cast<int>(x.size()) - 1;
    const Scalar tol = tolerance_for(x);

    const Scalar omega = x.size() == 3 ? Scalar(2) : (x[3] - x[2] + x[1] - x[0]) / (x[2] - x[1]);
    const Scalar nu = x[2] + x[0] - omega * x[1];
    for (size_t s = 1; s + 1 < x.size(); ++s) {
        if (!negligible(x[s + 1] + x[s - 1] - omega * x[s] - nu, tol)) {
            throw Error(ErrorKind::NotAClassicalGrid,
                        "triple at s=" + std::to_string(s) + " violates x_{s+1} + x_{s-1} - Omega x_s = nu");
        }
    }

    long prec = kDefaultPrecisionBits;
    for (const auto& v : x) {
        if (v.precision()) prec = *v.precision();
    }
    auto reduced = [&](GridKind kind, Affine affine) {
        return ReducedGrid{GridSpec{std::move(kind), N, {}, prec}, std::move(affine)};
    };

    if (negligible(omega - Scalar(2), tol)) {
        const Scalar c2 = nu / Scalar(2);
        if (negligible(c2, tol)) return reduced(grid::Linear{}, {x[1] - x[0], x[0]});
        Scalar c1 = x[1] - x[0] - c2;
        Scalar c0 = x[0];
        if (c2.sign() < 0) {
            // Re-index t = N - s so the canonical s(s + tau) runs the other way.
            const Scalar n(static_cast<long>(N));
            c0 = c2 * n * n + c1 * n + c0;
            c1 = -(Scalar(2) * n * c2 + c1);
        }
        return reduced(grid::Quadratic{c1 / c2}, {c2, c0});
    }
    if (negligible(omega + Scalar(2), tol)) {
        const Scalar c0 = nu / Scalar(4);
        const Scalar c2 = x[0] - c0;
        const Scalar c1 = -(x[1] - c0) - c2;
        return reduced(grid::BannaiIto{c1, c2, c0}, {});
    }
    if (omega.abs() < Scalar(2)) {
        if (!tol.is_zero()) {
            for (bool first : {true, false}) {
                const GridSpec trig = first ? GridSpec::trig_first(N, prec) : GridSpec::trig_second(N, prec);
                if (!negligible(grid_constants(trig).omega - omega, tol)) continue;
                const auto y = indexed_nodes(trig);
                Scalar mean(0);
                for (const auto& v : x) mean += v;
                mean /= Scalar(static_cast<long>(x.size()));
                const Scalar scale = (x.back() - x.front()) / (y.back() - y.front());
                return reduced(trig.kind, {scale, mean});
            }
        }
        throw Error(ErrorKind::Unsupported, "general trigonometric grids (|Omega| < 2) are not supported");
    }

    const auto q = scalar_sqrt(omega * omega - Scalar(4));
    if (!q) throw Error(ErrorKind::Unsupported, "Askey-Wilson grid with irrational q");
    const Scalar qv = omega.sign() > 0 ? (omega - *q) / Scalar(2) : (omega + *q) / Scalar(2);
    const Scalar c0 = nu / (Scalar(2) - omega);
    Scalar c1 = ((x[1] - c0) - (x[0] - c0) / qv) / (qv - Scalar(1) / qv);
    Scalar c2 = x[0] - c0 - c1;
    if (qv.sign() > 0) {
        if (negligible(c1, tol)) return reduced(grid::Exponential{qv}, {c2, c0});
        if (negligible(c2, tol)) {
            // c1 q^s = c1 q^N q^{-(N-s)}: exponential in the reversed index.
            return reduced(grid::Exponential{qv}, {c1 * pow(qv, static_cast<unsigned>(N)), c0});
        }
    }
    return reduced(grid::AskeyWilson{qv, c1, c2, c0}, {});
}

}  // namespace sturmion
