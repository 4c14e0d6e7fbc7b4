#include "batres/params.hpp"

#include <cmath>
#include <string>

#include "batres/errors.hpp"

namespace batres {

namespace {

using Coords = std::array<double, 4>;

// Every representation is connected to the bateman hub; the transform graph
// is therefore total over the closed enumeration.
Coords to_bateman(const PhasePoint& p, const PhysicalParams& par) {
    const auto& c = p.coords;
    const double sw = std::sqrt(par.omega);
    switch (p.rep) {
        case Representation::bateman:
            return c;
        case Representation::mode: {
            // x1 = p_y/sw, x2 = -sw x, p1 = -sw y, p2 = -p_x/sw
            const double x = -c[1] / sw;
            const double y = -c[2] / sw;
            const double px = -c[3] * sw;
            const double py = c[0] * sw;
            return {x, y, px, py};
        }
        case Representation::uv: {
            // x_k = (g u_k - v_k)/sqrt(2g), p_k = (g u_k + v_k)/sqrt(2g)
            const double s = std::sqrt(2.0 * par.gamma);
            PhasePoint m{Representation::mode,
                         {(par.gamma * c[0] - c[2]) / s, (par.gamma * c[1] - c[3]) / s,
                          (par.gamma * c[0] + c[2]) / s, (par.gamma * c[1] + c[3]) / s}};
            return to_bateman(m, par);
        }
        case Representation::hyperbolic: {
            const double r = std::sqrt(0.5);
            return {r * (c[0] + c[1]), r * (c[0] - c[1]), r * (c[2] + c[3]), r * (c[2] - c[3])};
        }
    }
    throw UnsupportedPath("unknown source representation");
}

Coords from_bateman(const Coords& b, Representation target, const PhysicalParams& par) {
    const double sw = std::sqrt(par.omega);
    const double x = b[0], y = b[1], px = b[2], py = b[3];
    switch (target) {
        case Representation::bateman:
            return b;
        case Representation::mode:
            return {py / sw, -sw * x, -sw * y, -px / sw};
        case Representation::uv: {
            const Coords m = from_bateman(b, Representation::mode, par);
            // u = (x + p)/sqrt(2g), v = (p - x) sqrt(g/2)
            const double s = std::sqrt(2.0 * par.gamma);
            const double t = std::sqrt(0.5 * par.gamma);
            return {(m[0] + m[2]) / s, (m[1] + m[3]) / s, (m[2] - m[0]) * t, (m[3] - m[1]) * t};
        }
        case Representation::hyperbolic: {
            const double r = std::sqrt(0.5);
            return {r * (x + y), r * (x - y), r * (px + py), r * (px - py)};
        }
    }
    throw UnsupportedPath("unknown target representation");
}

}  // namespace

PhysicalParams make_params(double gamma, double kappa, double hbar) {
    if (!(gamma > 0.0)) throw NonPositive("gamma must be > 0");
    if (!(hbar > 0.0)) throw NonPositive("hbar must be > 0");
    if (!(kappa > gamma * gamma))
        throw OverdampedRegime("kappa <= gamma^2: only the underdamped regime is supported");
    return {gamma, std::sqrt(kappa - gamma * gamma), hbar, kappa};
}

PhysicalParams make_params_from_omega(double gamma, double omega, double hbar) {
    if (!(omega > 0.0)) throw OverdampedRegime("omega must be > 0 (underdamped regime)");
    PhysicalParams p = make_params(gamma, omega * omega + gamma * gamma, hbar);
    p.omega = omega;  // avoid the sqrt(kappa - gamma^2) round trip
    return p;
}

std::string_view to_string(Representation rep) {
    switch (rep) {
        case Representation::bateman: return "bateman";
        case Representation::mode: return "mode";
        case Representation::uv: return "uv";
        case Representation::hyperbolic: return "hyperbolic";
    }
    return "?";
}

double classical_hamiltonian(const PhasePoint& point, const PhysicalParams& par) {
    const auto& c = point.coords;
    const double g = par.gamma, w = par.omega;
    switch (point.rep) {
        case Representation::bateman:
            return c[2] * c[3] - g * (c[0] * c[2] - c[1] * c[3]) + w * w * c[0] * c[1];
        case Representation::mode: {
            const double wedge = c[2] * c[1] - c[3] * c[0];  // p1 x2 - p2 x1
            const double dot = c[0] * c[2] + c[1] * c[3];
            return w * wedge - g * dot;
        }
        case Representation::uv: {
            const double wedge = c[2] * c[1] - c[3] * c[0];  // v1 u2 - v2 u1
            const double v2 = c[2] * c[2] + c[3] * c[3];
            const double u2 = c[0] * c[0] + c[1] * c[1];
            return w * wedge + 0.5 * (v2 - g * g * u2);
        }
        case Representation::hyperbolic:
            return 0.5 * (c[2] * c[2] - c[3] * c[3]) - g * (c[0] * c[3] + c[1] * c[2]) +
                   0.5 * w * w * (c[0] * c[0] - c[1] * c[1]);
    }
    throw UnsupportedPath("unknown representation");
}

PhasePoint transform(const PhasePoint& point, Representation target, const PhysicalParams& params) {
    if (point.rep == target) return point;
    return {target, from_bateman(to_bateman(point, params), target, params)};
}

Matrix4 transform_jacobian(const PhasePoint& point, Representation target,
                           const PhysicalParams& params, double step) {
    Matrix4 jac{};
    for (int j = 0; j < 4; ++j) {
        PhasePoint plus = point, minus = point;
        plus.coords[j] += step;
        minus.coords[j] -= step;
        const auto fp = transform(plus, target, params).coords;
        const auto fm = transform(minus, target, params).coords;
        for (int i = 0; i < 4; ++i) jac[i][j] = (fp[i] - fm[i]) / (2.0 * step);
    }
    return jac;
}

double symplectic_defect(const Matrix4& J) {
    // Omega = [[0, I], [-I, 0]]
    auto omega = [](int i, int j) -> double {
        if (i < 2 && j == i + 2) return 1.0;
        if (i >= 2 && j == i - 2) return -1.0;
        return 0.0;
    };
    double worst = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            double s = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) s += J[i][a] * omega(i, j) * J[j][b];
            worst = std::max(worst, std::abs(s - omega(a, b)));
        }
    }
    return worst;
}

}  // namespace batres
