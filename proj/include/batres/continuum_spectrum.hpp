#pragma once

// Real-energy generalized eigenfunctions of the Bateman Hamiltonian,
//   psi_{eps,l} = R_{eps,l}(rho) e^{il phi}/sqrt(2 pi),  E = hbar omega l + eps,
//   R_{eps,l}  = N (sqrt(i gamma/hbar) rho)^|l| e^{-i gamma rho^2/2hbar} 1F1(a, |l|+1, i gamma rho^2/hbar),
//   a          = (|l| + 1 - eps/(i gamma hbar))/2,
//   N          = sqrt(gamma/(pi |l|!)) (-i)^a Gamma(a).
// Powers use the principal branch: (-i)^a = e^{-i pi a/2}, sqrt(i) = e^{i pi/4}.
// eps may be complex (analytic continuation); N has poles where a = -n,
// i.e. at eps_nl = i gamma hbar (|l| + 2n + 1).

#include "batres/params.hpp"
#include "batres/radial_function.hpp"

namespace batres {

struct ContinuumLabel {
    cplx epsilon = 0.0;
    int l = 0;
};

struct NormalizationConstant {
    cplx value;
    cplx a_parameter;
};

cplx continuum_a(const ContinuumLabel& label, const PhysicalParams& params);

/// Relative tolerance used to decide that a continued a sits on -n.
inline constexpr double kPoleSnap = 1e-10;

/// Throws PoleAtResonance(n, l) when a lies within kPoleSnap of -n.
NormalizationConstant normalization_constant(const ContinuumLabel& label, const PhysicalParams& params);

struct ContinuumState {
    RadialFunction radial;
    cplx total_energy;
};

ContinuumState continuum_eigenfunction(const ContinuumLabel& label, const PhysicalParams& params);

/// Analytic conjugation of the radial part: f -> f*, f*(z) = conj(f(conj z)).
/// Maps u(+) to u(-) and psi_{eps,l} to chi_{eps,l}; l is unchanged.
RadialFunction time_reverse(const RadialFunction& f);

/// J = int_0^inf e^{-lambda z} z^{mu-1} 1F1(alpha, mu, k z) 1F1(alpha', mu, k' z) dz
///   = Gamma(mu) lambda^{alpha+alpha'-mu} (lambda-k)^{-alpha} (lambda-k')^{-alpha'}
///     2F1(alpha, alpha', mu; k k'/((lambda-k)(lambda-k'))).
/// The 2F1 is summed for |x| < 0.999 and taken in closed form at x = 1
/// (DivergentAtUnitArgument when mu - alpha - alpha' has Re <= 0);
/// SeriesDomain otherwise.
cplx formula_J(cplx lambda, cplx mu, cplx alpha, cplx alpha_p, cplx k, cplx k_p);

/// The integrand of formula_J, for quadrature cross-checks.
cplx formula_J_integrand(double z, cplx lambda, cplx mu, cplx alpha, cplx alpha_p, cplx k, cplx k_p);

}  // namespace batres
