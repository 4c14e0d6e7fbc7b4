#include "batres/ode_residual.hpp"

#include <algorithm>
#include <cmath>

#include "batres/errors.hpp"

namespace batres {

RadialOperator ho_operator(int l, double Omega, double hbar) {
    return {hbar, cplx(double(l) * l), 0.5 * Omega * Omega};
}

RadialOperator iho_operator(int l, double gamma, double hbar) {
    return {hbar, cplx(double(l) * l), -0.5 * gamma * gamma};
}

RadialOperator hyperbolic_operator(cplx nu, double omega, double hbar) {
    return {hbar, -nu * nu, 0.5 * omega * omega};
}

cplx apply_fd(const RadialFunction& f, const RadialOperator& op, double rho, double h) {
    const cplx fm = f(rho - h), f0 = f(rho), fp = f(rho + h);
    const cplx d2 = (fp - 2.0 * f0 + fm) / (h * h);
    const cplx d1 = (fp - fm) / (2.0 * h);
    return -0.5 * op.hbar * op.hbar * (d2 + d1 / rho - op.m2 * f0 / (rho * rho)) + op.c2 * rho * rho * f0;
}

ResidualStudy fd_residual_study(const RadialFunction& f, const RadialOperator& op, cplx eigenvalue,
                                double rho_lo, double rho_hi, int points, double h0, int halvings) {
    if (points < 2 || !(rho_lo > 0.0) || !(rho_hi > rho_lo) || !(h0 > 0.0) || h0 >= rho_lo)
        throw DomainError("fd_residual_study: bad sampling parameters");
    ResidualStudy study;
    double h = h0;
    for (int k = 0; k <= halvings; ++k, h *= 0.5) {
        double worst = 0.0, scale = 0.0;
        for (int i = 0; i < points; ++i) {
            const double rho = rho_lo + (rho_hi - rho_lo) * i / (points - 1);
            const cplx value = f(rho);
            worst = std::max(worst, std::abs(apply_fd(f, op, rho, h) - eigenvalue * value));
            scale = std::max(scale, std::abs(value));
        }
        study.steps.push_back(h);
        study.residuals.push_back(worst / scale);
    }
    for (std::size_t k = 1; k < study.residuals.size(); ++k)
        study.orders.push_back(std::log2(study.residuals[k - 1] / study.residuals[k]));
    if (!study.orders.empty()) {
        study.min_order = *std::min_element(study.orders.begin(), study.orders.end());
        study.max_order = *std::max_element(study.orders.begin(), study.orders.end());
    }
    return study;
}

}  // namespace batres
