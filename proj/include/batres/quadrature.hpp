#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace batres {

using cplx = std::complex<double>;

/// Gauss-Laguerre rule for the weight e^{-z} z^alpha on (0, inf).
///
/// Weights are normalized so that sum_i w_i = Gamma(alpha + 1), i.e. the rule
/// reproduces int_0^inf e^{-z} z^{alpha+k} dz = Gamma(alpha + k + 1) exactly
/// for k <= 2n - 1. `log_weights` is kept alongside `weights` because the
/// weights of the outer nodes of large rules underflow.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> log_weights;
    double alpha = 0.0;

    std::size_t size() const { return nodes.size(); }
};

/// Nodes from the Golub-Welsch eigenvalue problem, polished by Newton steps
/// on L^alpha_n. Throws ConvergenceFailure if polishing stalls.
QuadratureRule gauss_laguerre_rule(int n_points, double alpha);

enum class Orientation { ccw, cw };

/// Rotated ray rho = e^{i theta} s, s in [0, rmax]. `eta` multiplies the
/// integrand by e^{-eta s^2}. With `ladder > 0` the integral is evaluated at
/// eta r^k, k = 0..ladder (r = `ladder_ratio`, default 1/2) and extrapolated
/// to eta -> 0+ by Neville's scheme. If
/// `regulator_pole` is set the extrapolation is carried out in the variable
/// 1/(eta - pole) instead of eta; for integrands P(s^2) e^{i k s^2} s with
/// pole = i k the regulated value is a polynomial in that variable.
struct RaySpec {
    double theta = 0.0;
    double eta = 0.0;
    double rmax = 0.0;  ///< 0 selects an adaptive cut-off
    int ladder = 0;
    double ladder_ratio = 0.5;
    std::optional<cplx> regulator_pole;
    double tolerance = 1e-10;
};

/// Circle center + radius e^{i phi}, trapezoid rule. With `adaptive` the node
/// count is doubled until two successive values agree to `tolerance`.
struct CircleSpec {
    cplx center = 0.0;
    double radius = 1.0;
    Orientation orientation = Orientation::ccw;
    int nodes = 256;
    bool adaptive = true;
    double tolerance = 1e-12;
};

/// Gauss-Laguerre on a (possibly rotated) ray for radial integrals
/// int F(rho) rho d(rho): with rho = e^{i theta} s and t = scale * s^2 the
/// integrand becomes e^{-t} times a smooth factor when F carries a Gaussian
/// e^{-scale s^2}. Only meaningful for the radial measure.
struct LaguerreSpec {
    double theta = 0.0;
    int points = 200;
    double scale = 1.0;
};

using ContourSpec = std::variant<RaySpec, CircleSpec, LaguerreSpec>;

/// Validates the invariants listed for each contour kind (|theta| < pi/2,
/// eta >= 0, radius > 0, nodes >= 16, points >= 1). Throws DomainError.
void validate(const ContourSpec& spec);

struct IntegrationResult {
    cplx value;
    double error;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b] with interval bisection.
/// Segments whose Kronrod-Gauss difference is below the round-off floor
/// (50 eps times the integral of |f|) are not bisected further; if only such
/// segments remain the loop stops and `error` reports the floor.
/// Throws NonConvergent when `max_intervals` is exhausted above tolerance.
IntegrationResult integrate_interval(const std::function<cplx(double)>& f, double a, double b,
                                     double abs_tol, double rel_tol = 1e-13,
                                     int max_intervals = 4000);

/// int f(rho) d(rho) along the rotated ray, see RaySpec.
cplx integrate_ray(const std::function<cplx(cplx)>& f, const RaySpec& spec);

/// Closed contour integral of f(z) dz; the 1/(2 pi i) is left to the caller.
cplx contour_integral_circle(const std::function<cplx(cplx)>& f, const CircleSpec& spec);

/// Radial integral int_0^inf F(rho) rho d(rho) on a rotated ray using a
/// Gauss-Laguerre rule (alpha = 0).
cplx integrate_radial_laguerre(const std::function<cplx(cplx)>& f, const LaguerreSpec& spec);

/// Neville polynomial extrapolation of (x_i, y_i) to x0.
cplx neville_extrapolate(std::span<const cplx> xs, std::span<const cplx> ys, cplx x0);

}  // namespace batres
