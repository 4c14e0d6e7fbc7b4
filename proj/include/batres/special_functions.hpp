#pragma once

// Complex special-function kernel. Every function is pure and deterministic;
// complex powers and logarithms use the principal branch, arg in (-pi, pi].

#include <complex>
#include <optional>

namespace batres {

using cplx = std::complex<double>;

/// Returns n if z is exactly a nonpositive integer -n, otherwise nothing.
std::optional<long> nonpositive_integer(cplx z);

/// Principal-branch z^w, with 0^w = 0 for Re w > 0 and 0^0 = 1.
cplx principal_pow(cplx z, cplx w);

/// Gamma function. Lanczos approximation for Re z >= 1/2 and the reflection
/// formula below. Throws PoleAtNonpositiveInteger at z = 0, -1, -2, ...
cplx gamma_complex(cplx z);

/// 1/Gamma(z); entire, exactly zero at the poles of Gamma.
cplx rgamma(cplx z);

/// Rising factorial (a)_n.
cplx pochhammer(cplx a, int n);

/// Kummer function 1F1(a; b; z). The Maclaurin series is summed in extended
/// precision; for Re z < 0 (and a not a nonpositive integer) the Kummer
/// transformation e^z 1F1(b - a; b; -z) is applied first. For |z| >= 25 the
/// two-series asymptotic expansion is used whenever its truncation error is
/// below a few ulps. A nonpositive integer a = -n gives the exact (n+1)-term
/// polynomial.
/// Throws ParameterPole when b is a nonpositive integer.
cplx hyp1f1(cplx a, cplx b, cplx z);

/// The bare Maclaurin series of 1F1 with no transformation. Exposed so the
/// Kummer identity can be checked between two independent summations.
cplx hyp1f1_series(cplx a, cplx b, cplx z);

/// Tricomi confluent hypergeometric function U(a, c, z).
///
/// a = -n (or 1 + a - c = -n) uses the terminating polynomial. Otherwise the
/// two-term 1F1 combination is used; at integer c it is replaced by the mean
/// of the values at c +- 2^-20 (about 1e-6), which costs several significant
/// digits (relative error around 1e-10).
/// Throws DomainError at z = 0 for non-polynomial parameters.
cplx tricomi_u(cplx a, cplx c, cplx z);

/// Generalized Laguerre polynomial L^alpha_n(z) by three-term recurrence.
cplx laguerre(int n, cplx alpha, cplx z);

/// Gauss 2F1(alpha, beta; gamma; 1) = G(g)G(g-a-b) / (G(g-a)G(g-b)).
/// Terminating cases (alpha or beta a nonpositive integer) are always finite.
/// Otherwise throws DivergentAtUnitArgument when Re(gamma - alpha - beta) <= 0,
/// which covers gamma - alpha - beta = 0, -1, -2, ...
cplx gauss_2f1_at_1(cplx alpha, cplx beta, cplx gamma_p);

/// Gauss series 2F1(alpha, beta; gamma; x) for |x| < 1.
/// Throws SeriesDomain for |x| >= 1 and ParameterPole for gamma = 0, -1, ...
cplx hyp2f1_series(cplx alpha, cplx beta, cplx gamma_p, cplx x);

}  // namespace batres
