// phase_covariant.hpp
// The (v,x,y) phase-covariant cloner ansatz: closed-form symmetric optimum,
// asymmetric fidelity tradeoff and the scalarized frontier solver.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "pcclone/cloning_map.hpp"

namespace pcclone {

// Thrown when a (F_B, v, y) combination admits no valid cloner.
struct InfeasiblePointError : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when an iterative solver fails to reach tolerance.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual(residual) {}
    double residual;
};

// Ansatz parameters: first row (v, y, ..., y), remaining rows all x.
// Normalization v^2 + (d-1) y^2 + d(d-1) x^2 = 1.
struct PcParams {
    int d;
    double v, x, y;

    double norm_residual() const {
        return v * v + (d - 1) * y * y + d * (d - 1) * x * x - 1.0;
    }
};

// Symmetric-cloner parameters, V^2 + 2(d-1) X^2 = 1.
struct SymmetricParams {
    int d;
    double V, X;
};

struct TradeoffPoint {
    int d;
    double fa, fb;
    double eta_a, eta_b;
    PcParams params;
};

inline PcParams from_symmetric(const SymmetricParams& s) {
    const double rd = std::sqrt(static_cast<double>(s.d));
    return {s.d, (s.V + (s.d - 1) * s.X) / rd, s.X / rd, (s.V - s.X) / rd};
}

inline AmplitudeMatrix ansatz_matrix(const PcParams& p) {
    check_dim(p.d);
    if (std::abs(p.norm_residual()) > 1e-9)
        throw std::domain_error("PcParams violate normalization constraint");
    Matrix a = Matrix::Constant(p.d, p.d, Complex{p.x, 0.0});
    a.row(0).setConstant(Complex{p.y, 0.0});
    a(0, 0) = Complex{p.v, 0.0};
    return AmplitudeMatrix(a);
}

// Closed-form clone fidelities of the ansatz on phase states.
// F_A = v^2 + (d-1) x^2; F_B the same through the Fourier-dual (v',x').
inline std::pair<double, double> pc_fidelities(const PcParams& p) {
    const int d = p.d;
    const double vp = (p.v + (d - 1) * p.y + d * (d - 1) * p.x) / d;
    const double xp = (p.v - p.y) / d;
    return {p.v * p.v + (d - 1) * p.x * p.x, vp * vp + (d - 1) * xp * xp};
}

// F(V, X) = [1 + (d-1)(d-2) X^2 + 2 (d-1) V X] / d
inline double symmetric_fidelity(const SymmetricParams& s) {
    const int d = s.d;
    return (1.0 + (d - 1) * (d - 2) * s.X * s.X + 2.0 * (d - 1) * s.V * s.X) /
           d;
}

// F_opt = (1/d) [1 + (d-2 + sqrt((d-2)^2 + 8(d-1))) / 4] and the
// nonnegative (V, X) achieving it.
inline std::pair<double, SymmetricParams> optimal_symmetric(int d) {
    check_dim(d);
    const double dm2 = d - 2.0;
    const double fopt =
        (1.0 + (dm2 + std::sqrt(dm2 * dm2 + 8.0 * (d - 1.0))) / 4.0) / d;
    const double v2 = (d - 1.0) / d / (1.0 + dm2 * fopt);
    const double x2 = 0.5 / (d - 1.0) - 0.5 / d / (1.0 + dm2 * fopt);
    return {fopt, SymmetricParams{d, std::sqrt(v2), std::sqrt(x2)}};
}

// F_A(F_B, v, y) = v^2 + Delta, with Delta from the asymmetric tradeoff
// relation (positive square-root branch).
inline double asym_fidelity(double fb, double v, double y, int d) {
    check_dim(d);
    const double arg = 2.0 * y * d * v - y * y * d + v * v - 2.0 * v * y +
                       y * y + fb * d * d - d * v * v;
    if (arg < 0.0)
        throw InfeasiblePointError(
            "asym_fidelity: negative discriminant, no cloner with this "
            "(F_B, v, y)");
    const double num = -2.0 * y * d - 2.0 * v + 2.0 * y + 2.0 * std::sqrt(arg);
    const double delta = num * num / (4.0 * (d - 1.0) * d * d);
    return v * v + delta;
}

// F = eta + (1 - eta)/d  =>  eta = (d F - 1)/(d - 1)
inline double shrinking_factor(double f, int d) {
    check_dim(d);
    const double slack = 1e-9;
    if (f < 1.0 / d - slack || f > 1.0 + slack)
        throw std::domain_error("shrinking_factor: fidelity outside [1/d, 1]");
    return std::clamp((d * f - 1.0) / (d - 1.0), 0.0, 1.0);
}

namespace detail {

// The normalization ellipsoid, chart (theta, phi):
//   v = cos(theta),  y = sin(theta) cos(phi)/sqrt(d-1),
//   x = sin(theta) sin(phi)/sqrt(d(d-1)).
inline PcParams params_from_angles(int d, double theta, double phi) {
    const double st = std::sin(theta);
    return {d, std::cos(theta), st * std::sin(phi) / std::sqrt(d * (d - 1.0)),
            st * std::cos(phi) / std::sqrt(d - 1.0)};
}

inline std::array<double, 2> angles_from_params(const PcParams& p) {
    const double theta = std::acos(std::clamp(p.v, -1.0, 1.0));
    const double phi = std::atan2(p.x * std::sqrt(p.d * (p.d - 1.0)),
                                  p.y * std::sqrt(p.d - 1.0));
    return {theta, phi};
}

// Nelder-Mead maximization in two variables.
template <typename F>
std::array<double, 3> nelder_mead_max(F&& f, std::array<double, 2> start,
                                      double step, double tol, int max_iter) {
    struct Pt {
        std::array<double, 2> x;
        double val;
    };
    std::array<Pt, 3> s;
    s[0] = {start, f(start[0], start[1])};
    s[1] = {{start[0] + step, start[1]}, f(start[0] + step, start[1])};
    s[2] = {{start[0], start[1] + step}, f(start[0], start[1] + step)};

    auto order = [&] {
        std::sort(s.begin(), s.end(),
                  [](const Pt& a, const Pt& b) { return a.val > b.val; });
    };
    order();
    for (int it = 0; it < max_iter; ++it) {
        if (s[0].val - s[2].val < tol) break;
        std::array<double, 2> c = {(s[0].x[0] + s[1].x[0]) / 2.0,
                                   (s[0].x[1] + s[1].x[1]) / 2.0};
        auto propose = [&](double coeff) -> Pt {
            std::array<double, 2> x = {c[0] + coeff * (c[0] - s[2].x[0]),
                                       c[1] + coeff * (c[1] - s[2].x[1])};
            return {x, f(x[0], x[1])};
        };
        Pt refl = propose(1.0);
        if (refl.val > s[0].val) {
            Pt expd = propose(2.0);
            s[2] = expd.val > refl.val ? expd : refl;
        } else if (refl.val > s[1].val) {
            s[2] = refl;
        } else {
            Pt con = propose(refl.val > s[2].val ? 0.5 : -0.5);
            if (con.val > std::max(refl.val, s[2].val)) {
                s[2] = con;
            } else {  // shrink toward the best vertex
                for (int i = 1; i < 3; ++i) {
                    for (int k = 0; k < 2; ++k)
                        s[i].x[k] = s[0].x[k] + 0.5 * (s[i].x[k] - s[0].x[k]);
                    s[i].val = f(s[i].x[0], s[i].x[1]);
                }
            }
        }
        order();
    }
    return {s[0].x[0], s[0].x[1], s[0].val};
}

}  // namespace detail

struct FrontierOptions {
    int restarts = 20;
    double tol = 1e-10;
    int max_iter = 2000;
    std::uint64_t seed = 0;
};

// One frontier point: maximize p F_A + (1-p) F_B over the normalized
// (v,x,y) ansatz by scalarization.
inline TradeoffPoint tradeoff_point(int d, double p,
                                    const FrontierOptions& opt = {}) {
    check_dim(d);
    if (p < 0.0 || p > 1.0)
        throw std::domain_error("asymmetry weight p must lie in [0,1]");

    auto objective = [&](double theta, double phi) {
        auto [fa, fb] = pc_fidelities(detail::params_from_angles(d, theta, phi));
        return p * fa + (1.0 - p) * fb;
    };

    std::vector<std::array<double, 2>> starts;
    // identity cloner (F_A = 1), uniform dual (F_B = 1), symmetric optimum
    starts.push_back({0.0, kPi / 2.0});
    starts.push_back(detail::angles_from_params(
        {d, 1.0 / d, 1.0 / d, 1.0 / d}));
    starts.push_back(detail::angles_from_params(
        from_symmetric(optimal_symmetric(d).second)));
    std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL *
                                    static_cast<std::uint64_t>(p * (1 << 20))));
    std::uniform_real_distribution<double> utheta(0.0, kPi / 2.0);
    std::uniform_real_distribution<double> uphi(0.0, kPi);
    for (int r = 0; r < opt.restarts; ++r)
        starts.push_back({utheta(rng), uphi(rng)});

    std::array<double, 3> best = {0.0, 0.0,
                                  -std::numeric_limits<double>::infinity()};
    for (const auto& s0 : starts) {
        auto r = detail::nelder_mead_max(objective, s0, 0.1, opt.tol * 1e-3,
                                         opt.max_iter);
        // polish with a tighter simplex around the found maximum
        r = detail::nelder_mead_max(objective, {r[0], r[1]}, 1e-4,
                                    opt.tol * 1e-4, opt.max_iter);
        if (r[2] > best[2]) best = r;
    }
    if (!std::isfinite(best[2]))
        throw ConvergenceError("tradeoff_point: optimizer failed", best[2]);

    PcParams params = detail::params_from_angles(d, best[0], best[1]);
    if (params.v < 0.0) {  // sign convention: v >= 0
        params.v = -params.v;
        params.x = -params.x;
        params.y = -params.y;
    }
    auto [fa, fb] = pc_fidelities(params);
    return {d, fa, fb, shrinking_factor(fa, d), shrinking_factor(fb, d),
            params};
}

inline std::vector<TradeoffPoint> tradeoff_frontier(
    int d, const std::vector<double>& p_grid, const FrontierOptions& opt = {}) {
    if (p_grid.empty())
        throw std::domain_error("tradeoff_frontier: empty weight grid");
    std::vector<TradeoffPoint> out;
    out.reserve(p_grid.size());
    for (double p : p_grid) out.push_back(tradeoff_point(d, p, opt));
    return out;
}

}  // namespace pcclone
