#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sturmion/polynomial.hpp"

namespace sturmion {

namespace grid {

struct Linear {};
/// x_s = s (s + tau), tau > -1.
struct Quadratic {
    Scalar tau;
};
/// x_s = q^{-s}, 0 < q < 1.
struct Exponential {
    Scalar q;
};
/// x_s = c1 q^s + c2 q^{-s} + c0.
struct AskeyWilson {
    Scalar q, c1, c2, c0;
};
/// x_s = (-1)^s (c1 s + c2) + c0.
struct BannaiIto {
    Scalar c1, c2, c0;
};
/// Zeros of T_{N+1}: x_s = -cos(pi (s + 1/2) / (N+1)).
struct TrigFirstKind {};
/// Zeros of U_{N+1}: x_s = -cos(pi (s + 1) / (N+2)).
struct TrigSecondKind {};

}  // namespace grid

using GridKind = std::variant<grid::Linear, grid::Quadratic, grid::Exponential, grid::AskeyWilson, grid::BannaiIto,
                              grid::TrigFirstKind, grid::TrigSecondKind>;

/// x -> scale * x + shift, scale != 0.
struct Affine {
    Scalar scale{1};
    Scalar shift{0};

    bool is_identity() const { return scale == Scalar(1) && shift.is_zero(); }
    Scalar apply(const Scalar& x) const { return scale * x + shift; }
};

struct GridSpec {
    GridKind kind;
    int N = 0;
    Affine affine;
    long precision = kDefaultPrecisionBits;  ///< used by trigonometric grids only

    static GridSpec linear(int N) { return {grid::Linear{}, N, {}, kDefaultPrecisionBits}; }
    static GridSpec quadratic(const Scalar& tau, int N) { return {grid::Quadratic{tau}, N, {}, kDefaultPrecisionBits}; }
    static GridSpec exponential(const Scalar& q, int N) { return {grid::Exponential{q}, N, {}, kDefaultPrecisionBits}; }
    static GridSpec trig_first(int N, long precision = kDefaultPrecisionBits) {
        return {grid::TrigFirstKind{}, N, {}, precision};
    }
    static GridSpec trig_second(int N, long precision = kDefaultPrecisionBits) {
        return {grid::TrigSecondKind{}, N, {}, precision};
    }

    bool is_trigonometric() const;
    /// Same grid family and parameters with a different affine map.
    GridSpec with_affine(Affine a) const;
};

/// CLI syntax: "linear", "quad:tau=1", "exp:q=1/2", "trig1", "trig2",
/// "aw:q=..,c1=..,c2=..,c0=..", "bi:c1=..,c2=..,c0=..". Any kind also
/// accepts "scale=" and "shift=" keys. `tau` supplies the quadratic
/// parameter when the string is a bare "quad".
GridSpec parse_grid(const std::string& text, int N, long precision = kDefaultPrecisionBits,
                    std::optional<Scalar> tau = std::nullopt);
std::string to_string(const GridSpec& spec);

/// Node values in index order s = 0..N, affine map applied. These satisfy
/// the grid difference equation; for Askey-Wilson and Bannai-Ito grids they
/// need not be monotone.
std::vector<Scalar> indexed_nodes(const GridSpec& spec);

/// Sorted, strictly increasing nodes. Throws DegenerateGrid on repeats or
/// invalid parameters.
std::vector<Scalar> nodes(const GridSpec& spec);

/// Monic polynomial vanishing on the grid. Trigonometric grids use the exact
/// Chebyshev recurrences rather than the (irrational) nodes.
Polynomial characteristic_polynomial(const GridSpec& spec);

/// Monic Chebyshev polynomials from u_1 = 1/2 (T) or 1/4 (U), u_n = 1/4.
Polynomial monic_chebyshev_t(int n);
Polynomial monic_chebyshev_u(int n);

/// (Omega, nu) with x_{s+1} + x_{s-1} - Omega x_s = nu.
struct GridConstants {
    Scalar omega;
    Scalar nu;
};
GridConstants grid_constants(const GridSpec& spec);

enum class GridClass { AskeyWilson, Exponential, Trigonometric, Quadratic, Linear, BannaiIto };
std::string to_string(GridClass c);

struct Classification {
    GridClass grid_class;
    /// For |Omega| > 2: the root of q + 1/q = Omega with |q| < 1 (exact when
    /// Omega^2 - 4 is a rational square).
    std::optional<Scalar> q;
};

/// Grid class from Omega alone. The exponential and linear subclasses need
/// the coefficients; pass c1 (exponential when zero) or c2 (linear when zero)
/// to refine.
Classification classify(const Scalar& omega, std::optional<Scalar> vanishing_coefficient = std::nullopt);

struct ReducedGrid {
    GridSpec canonical;  ///< identity affine
    Affine affine;       ///< carries canonical nodes onto the raw nodes
};

/// Fits a classical grid to strictly monotone raw nodes (at least 3).
/// Exactly three nodes always fit, and are reported as quadratic or linear.
ReducedGrid affine_reduce(std::span<const Scalar> raw_nodes);

}  // namespace sturmion
