#pragma once

// Resolvent poles, spectral projectors, resonance expansions and the decay
// semigroups of the Bateman Hamiltonian in the elliptic representation:
//   E(+-)_nl = hbar omega l +- i hbar gamma (|l| + 2n + 1),
//   P(+)_nl = |u-_nl><u+_nl|,  P(-)_nl = |u+_nl><u-_nl|.

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "batres/continuum_spectrum.hpp"
#include "batres/inverted_oscillator.hpp"
#include "batres/oscillator_basis.hpp"
#include "batres/params.hpp"
#include "batres/radial_function.hpp"

namespace batres {

struct Truncation {
    int n_max = 16;
    int l_max = 8;
};

struct DiscreteLabel {
    int n;
    int l;
    Sign sign;
};
struct HyperbolicDiscreteLabel {
    int n;
    int l;
};
using SpectralLabel = std::variant<DiscreteLabel, ContinuumLabel, HyperbolicDiscreteLabel>;

struct SpectralValue {
    cplx value;
    SpectralLabel label;
};

SpectralValue bateman_resonance_energy(QuantumNumbers qn, Sign sign, const PhysicalParams& params);

/// c_nl with Res_{eps = eps_nl} psi_{eps,l} = c_nl u+_nl:
///   c_nl = (-i)^{n+1} e^{-i pi/4} 2 gamma hbar sqrt(hbar/(2 pi)) sqrt(|l|!/(n! (n+|l|)!)).
cplx pole_residue_coefficient(QuantumNumbers qn, const PhysicalParams& params);

/// (1/2 pi i) times the anticlockwise integral of psi_{eps,l}(rho0) over
/// |eps - center| = radius. Defaults to a circle of radius 0.2 gamma hbar
/// around eps_nl.
cplx contour_residue(QuantumNumbers qn, const PhysicalParams& params, double rho0,
                     std::optional<cplx> center = std::nullopt, std::optional<double> radius = std::nullopt);

/// <f|g> with the contour chosen from the Gaussian exponents when both are
/// known, otherwise the adaptive real-axis ray.
cplx pair(const RadialFunction& f, const RadialFunction& g, int points = 200);

/// Truncated pole series of <f|R(z)|g> for one sign:
///   sum_{n,l} <f|u-+_nl><u+-_nl|g> / (E+-_nl - z).
/// The overlaps are computed once at construction.
class Resolvent {
public:
    struct Term {
        QuantumNumbers qn;
        cplx energy;
        cplx weight;
    };

    Resolvent(const RadialFunction& f, const RadialFunction& g, Sign sign, Truncation truncation,
              const PhysicalParams& params, int points = 200);

    /// Throws NearPole when z is within 1e-9 of a pole in the truncation.
    /// Terms are summed n-major then l, or in exactly the reverse order.
    cplx operator()(cplx z, bool reverse_order = false) const;

    const std::vector<Term>& terms() const { return terms_; }

private:
    std::vector<Term> terms_;
};

cplx resolvent_element(const RadialFunction& f, const RadialFunction& g, cplx z, Sign sign, Truncation truncation,
                       const PhysicalParams& params);

struct ProjectorOptions {
    bool check = false;
    double radius_factor = 0.2;  ///< circle radius in units of hbar gamma
    double tolerance = 1e-6;
    Truncation truncation{4, 2};
    int points = 200;
};

struct ProjectorElement {
    cplx direct;
    std::optional<cplx> contour;
    double discrepancy = 0.0;
};

/// <f|P+-_nl|g> as the direct product <f|u-+><u+-|g>. With `check` it is also
/// computed as (1/2 pi i) of the resolvent integrated clockwise around
/// E+-_nl; a discrepancy above `tolerance` throws ConvergenceFailure.
ProjectorElement projector_element(QuantumNumbers qn, Sign sign, const RadialFunction& f, const RadialFunction& g,
                                   const PhysicalParams& params, const ProjectorOptions& options = {});

/// (1/2 pi i) clockwise circle integral of the resolvent around an arbitrary center.
cplx resolvent_circle_integral(const Resolvent& resolvent, cplx center, double radius);

/// <f|P_a P_b|g> = <f|u-+_a> <u+-_a|u-+_b> <u+-_b|g>, the middle factor taken
/// from the rotated bi-orthogonality integral.
cplx projector_product_element(QuantumNumbers a, QuantumNumbers b, Sign sign, const RadialFunction& f,
                               const RadialFunction& g, const PhysicalParams& params, int points = 200);

/// Laguerre-damped test functions e^{-beta rho^2} (sqrt(beta) rho)^|l| L^|l|_k(2 beta rho^2),
/// beta = gamma/hbar, k = 0..k_max, normalized (the oscillator basis with W = 2 gamma).
std::vector<RadialFunction> test_battery(int l, int k_max, const PhysicalParams& params);

struct ReconstructionReport {
    std::vector<double> grid;
    double max_error = 0.0;
};

struct ResonanceExpansion {
    Sign sign = Sign::plus;
    std::map<std::pair<int, int>, cplx> coefficients;  ///< (n, l) -> c_nl, n-major order
    Truncation truncation;
    PhysicalParams params{};
    double time = 0.0;
    ReconstructionReport report;
};

struct ExpandOptions {
    bool check_convergence = false;
    double grid_extent = 4.0;  ///< diagnostic grid [0, extent sqrt(hbar/gamma)]
    int grid_points = 64;
    int points = 200;
};

/// Coefficients c_nl = <u-+_nl|phi> for every angular component of phi
/// (one RadialFunction per l). Components with l outside the truncation are
/// dropped. With `check_convergence`, throws NonConvergent when the
/// reconstruction error at n_max + 2 is not below the one at n_max.
ResonanceExpansion expand(const std::vector<RadialFunction>& components, Sign sign, Truncation truncation,
                          const PhysicalParams& params, const ExpandOptions& options = {});

/// sum_n c_nl u+-_nl(rho) for one angular sector.
cplx reconstruct(const ResonanceExpansion& expansion, int l, cplx rho);

/// c_nl(t) = e^{-i omega l t} e^{-+ gamma (2n+|l|+1) t} c_nl(0). The minus
/// (decay) semigroup needs t >= 0, the plus one t <= 0; otherwise
/// SemigroupDomain.
ResonanceExpansion evolve(const ResonanceExpansion& expansion, double t);

}  // namespace batres
