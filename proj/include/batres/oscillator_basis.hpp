#pragma once

// 2D isotropic harmonic oscillator, radial part:
//   R_nl(rho) = C_nl (sqrt(W/hbar) rho)^|l| e^{-W rho^2/2hbar} 1F1(-n, |l|+1, W rho^2/hbar)
//   C_nl      = sqrt(2W/hbar)/|l|! sqrt((n+|l|)!/n!)
//   eps_nl    = hbar W (|l| + 2n + 1)
// normalized against rho d rho; the angular factor e^{il phi}/sqrt(2 pi) is
// carried by the l label.

#include <complex>

#include "batres/quadrature.hpp"
#include "batres/radial_function.hpp"

namespace batres {

struct QuantumNumbers {
    int n = 0;
    int l = 0;
};

struct HoState {
    RadialFunction radial;
    double eigenvalue;
};

/// Evaluated through the Laguerre recurrence form
/// sqrt(2W/hbar) sqrt(n!/(n+|l|)!) x^|l| e^{-x^2/2} L^|l|_n(x^2), x = sqrt(W/hbar) rho.
/// Throws NonPositive for W <= 0 or hbar <= 0, DomainError for n < 0.
HoState ho_radial(QuantumNumbers qn, double Omega, double hbar);

/// The same function through the C_nl 1F1 form, for cross-checks.
cplx ho_radial_1f1(QuantumNumbers qn, double Omega, double hbar, cplx rho);

/// Gauss-Laguerre contour on which f* g decays like e^{-|c| s^2}, where c is
/// the sum of the two Gaussian exponents: theta = -arg(c)/2, scale = |c|.
/// Throws DomainError when either exponent is unknown or c is real <= 0.
LaguerreSpec gaussian_contour(const RadialFunction& f, const RadialFunction& g, int points = 200);

/// int_0^inf f*(rho) g(rho) rho d rho along the contour, with f* the analytic
/// conjugate of f (see RadialFunction). Returns exactly 0 when both angular
/// indices are known and differ. Circle contours are rejected (DomainError).
cplx overlap_radial(const RadialFunction& f, const RadialFunction& g, const ContourSpec& contour);

}  // namespace batres
