#pragma once

// Hyperbolic representation of the inverted oscillator:
//   R_{eps,nu}(p) = (sqrt(w/hbar) p)^{i nu} e^{-w p^2/2hbar} U(b, i nu + 1, w p^2/hbar),
//   b = (i nu + 1 - eps/(hbar w))/2,
// the normalizable family R_nl (l >= 0) and its eigenvalues
//   E_nl = hbar w (2n + l + 1) - i hbar gamma l.

#include <vector>

#include "batres/inverted_oscillator.hpp"
#include "batres/ode_residual.hpp"
#include "batres/params.hpp"
#include "batres/radial_function.hpp"
#include "batres/resonance_engine.hpp"

namespace batres {

/// `epsilon` is the H0 eigenvalue in energy units; `nu` the boost label.
struct HyperbolicLabel {
    cplx epsilon = 0.0;
    cplx nu = 0.0;
};

cplx hyperbolic_b(const HyperbolicLabel& label, const PhysicalParams& params);

/// Normalization left at 1.
RadialFunction hyperbolic_continuum(const HyperbolicLabel& label, const PhysicalParams& params);

struct HyperbolicDiscrete {
    RadialFunction radial;
    SpectralValue energy;
};

/// Throws NegativeAngularIndex for l < 0, DomainError for n < 0.
HyperbolicDiscrete hyperbolic_discrete(int n, int l, const PhysicalParams& params);

/// Phi_nu(u) = e^{-i nu u}/sqrt(2 pi).
cplx hyperbolic_phi(cplx nu, double u);

struct RepresentationRow {
    int n;
    int l;
    cplx e_plus;
    cplx e_minus;
    cplx e_hyperbolic;
    bool match;
};

struct RepresentationReport {
    std::vector<RepresentationRow> rows;
    int elliptic_lattice_size = 0;
    int elliptic_poles = 0;     ///< PoleAtResonance hits on the lattice
    int elliptic_off_lattice = 0;  ///< hits at shifted probe points (expected 0)
    int hyperbolic_probes = 0;
    int hyperbolic_poles = 0;   ///< non-finite Phi_nu values over the probe set
};

/// Rows for n <= n_max, 0 <= l <= l_max. ℰ matches when it lies within
/// 1e-12 (relative) of some E+-_{n'l'} with n' <= n_max, |l'| <= l_max.
RepresentationReport representation_report(int n_max, int l_max, const PhysicalParams& params);

/// Gram of Phi_{nu_n} with nu_n = i(2n + |l| + 1), n <= n_max, under the
/// regularized pairing int e^{-eta u^2} conj(Phi_a) Phi_b du over the real
/// line, computed by quadrature. Closed form
/// (1/2 pi) sqrt(pi/eta) exp((k_a + k_b)^2 / 4 eta).
ComplexMatrix hyperbolic_pseudo_gram(int n_max, int l, double eta = 1.0);

/// Central-difference check of i gamma hbar d/du Phi_nu = gamma hbar nu Phi_nu
/// on `points` u values in [-1, 1]; residuals are relative to max |gamma hbar nu Phi|.
ResidualStudy generator_fd_study(cplx nu, const PhysicalParams& params, int points = 41, double h0 = 0.04,
                                 int halvings = 2);

}  // namespace batres
