#pragma once

// Physical parameters of the Bateman system and the linear canonical maps
// between its phase-space representations:
//
//   bateman     (x, y, p_x, p_y)       H = p_x p_y - g(x p_x - y p_y) + w^2 x y
//   mode        (x1, x2, p1, p2)       H = w p^x - g p.x
//   uv          (u1, u2, v1, v2)       H = w v^u + (v^2 - g^2 u^2)/2
//   hyperbolic  (y1, y2, w1, w2)       H = (w1^2 - w2^2)/2 - g(y1 w2 + y2 w1)
//                                          + w^2 (y1^2 - y2^2)/2
//
// Coordinates are always stored as (q1, q2, p1, p2) so that the canonical
// symplectic form is [[0, I], [-I, 0]] in every representation.

#include <array>
#include <string_view>

namespace batres {

struct PhysicalParams {
    double gamma;  ///< damping constant, 1/time
    double omega;  ///< rotation frequency sqrt(kappa - gamma^2)
    double hbar;
    double kappa;  ///< omega^2 + gamma^2
};

/// Builds parameters from (gamma, kappa, hbar). Throws NonPositive or
/// OverdampedRegime (kappa <= gamma^2 is outside the underdamped case).
PhysicalParams make_params(double gamma, double kappa, double hbar = 1.0);

/// Same, but takes omega directly and sets kappa = omega^2 + gamma^2.
PhysicalParams make_params_from_omega(double gamma, double omega, double hbar = 1.0);

enum class Representation { bateman, mode, uv, hyperbolic };

std::string_view to_string(Representation rep);

struct PhasePoint {
    Representation rep = Representation::bateman;
    std::array<double, 4> coords{};  ///< (q1, q2, p1, p2)
};

using Matrix4 = std::array<std::array<double, 4>, 4>;

double classical_hamiltonian(const PhasePoint& point, const PhysicalParams& params);

PhasePoint transform(const PhasePoint& point, Representation target,
                     const PhysicalParams& params);

/// Central-difference Jacobian d(target)/d(source) of transform() at `point`.
Matrix4 transform_jacobian(const PhasePoint& point, Representation target,
                           const PhysicalParams& params, double step = 1e-3);

/// max |J^T Omega J - Omega| for the canonical symplectic form.
double symplectic_defect(const Matrix4& jacobian);

}  // namespace batres
