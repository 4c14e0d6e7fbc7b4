#pragma once

// Finite-difference residuals of the 2D radial operators
//   H f = -(hbar^2/2) (f'' + f'/rho - m2 f/rho^2) + c2 rho^2 f
// with m2 = l^2 for the elliptic families, m2 = -nu^2 for the hyperbolic
// continuum, c2 = W^2/2 (oscillator) or -gamma^2/2 (inverted oscillator).

#include <complex>
#include <vector>

#include "batres/radial_function.hpp"

namespace batres {

struct RadialOperator {
    double hbar = 1.0;
    cplx m2 = 0.0;
    cplx c2 = 0.0;
};

RadialOperator ho_operator(int l, double Omega, double hbar);
RadialOperator iho_operator(int l, double gamma, double hbar);
RadialOperator hyperbolic_operator(cplx nu, double omega, double hbar);

/// Second-order central-difference H f at real rho.
cplx apply_fd(const RadialFunction& f, const RadialOperator& op, double rho, double h);

struct ResidualStudy {
    std::vector<double> steps;
    std::vector<double> residuals;  ///< max |(H_h - eps) f| / max |f| over the sample points
    std::vector<double> orders;     ///< log2 of successive residual ratios
    double min_order = 0.0;
    double max_order = 0.0;
};

/// Samples `points` radii evenly on [rho_lo, rho_hi] and evaluates the
/// residual for h0, h0/2, ..., h0/2^halvings.
ResidualStudy fd_residual_study(const RadialFunction& f, const RadialOperator& op, cplx eigenvalue,
                                double rho_lo = 0.3, double rho_hi = 3.0, int points = 50,
                                double h0 = 0.04, int halvings = 2);

}  // namespace batres
