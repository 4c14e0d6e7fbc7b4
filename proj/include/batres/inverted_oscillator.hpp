#pragma once

// Complex scaling and the resonance states of the 2D inverted oscillator
//   H_iho = -(hbar^2/2) Laplacian - gamma^2 rho^2 / 2.
// u(+-)_nl(rho) = sqrt(+-i) R^ho_nl(sqrt(+-i) rho) with W = gamma and the
// principal root sqrt(+-i) = e^{+-i pi/4}; eigenvalue +-i hbar gamma (|l|+2n+1).

#include <vector>

#include "batres/oscillator_basis.hpp"
#include "batres/params.hpp"
#include "batres/quadrature.hpp"
#include "batres/radial_function.hpp"

namespace batres {

enum class Sign { plus, minus };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

/// (V_lambda f)(rho) = e^{-i lambda} f(e^{-i lambda} rho).
RadialFunction scale_function(const RadialFunction& f, double lambda);

struct ResonanceState {
    QuantumNumbers qn;
    Sign sign;
    RadialFunction radial;
    cplx eigenvalue;
};

ResonanceState resonance_state(QuantumNumbers qn, Sign sign, const PhysicalParams& params);

using ComplexMatrix = std::vector<std::vector<cplx>>;

/// G[n][n'] = int (u+_nl)* u-_n'l rho d rho on the ray rho = e^{i pi/4} s,
/// where the integrand is exactly the real oscillator integrand
/// R_nl(s) R_n'l(s) s. Evaluated by a `points`-node Gauss-Laguerre rule.
ComplexMatrix biortho_gram(int n_max, int l, const PhysicalParams& params, int points = 200);

/// Same matrix from the real axis: the regulated integrals
/// int e^{-eta s^2} (u+_nl)* u-_n'l s ds for eta = eta0 r^k, k = 0..levels,
/// extrapolated to eta = 0 in the variable 1/(eta - i gamma/hbar).
ComplexMatrix biortho_gram_regularized(int n_max, int l, const PhysicalParams& params,
                                       double eta0 = 0.25, double ratio = 1.3, int levels = 13);

double max_deviation_from_identity(const ComplexMatrix& g);

}  // namespace batres
