#include "batres/inverted_oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace batres {

RadialFunction scale_function(const RadialFunction& f, double lambda) {
    const cplx phase = std::polar(1.0, -lambda);
    auto inner = f.evaluator();
    RadialFunction out(f.family(), f.labels(), f.params(), [inner, phase](cplx rho) { return phase * inner(phase * rho); });
    if (auto c = f.gaussian_exponent()) out = out.with_gaussian(*c * phase * phase);
    return out;
}

ResonanceState resonance_state(QuantumNumbers qn, Sign sign, const PhysicalParams& params) {
    const auto ho = ho_radial(qn, params.gamma, params.hbar);
    // u(+) = V_{-pi/4} psi_ho, u(-) = V_{+pi/4} psi_ho
    const double lambda = sign == Sign::plus ? -std::numbers::pi / 4 : std::numbers::pi / 4;
    const RadialFunction scaled = scale_function(ho.radial, lambda);
    RadialLabels labels = ho.radial.labels();
    const Family family = sign == Sign::plus ? Family::iho_plus : Family::iho_minus;
    RadialFunction radial(family, labels, params, scaled.evaluator());
    radial = radial.with_gaussian(scaled.gaussian_exponent());
    const double k = std::abs(qn.l) + 2.0 * qn.n + 1.0;
    return {qn, sign, radial, cplx(0.0, sign_value(sign) * params.hbar * params.gamma * k)};
}

ComplexMatrix biortho_gram(int n_max, int l, const PhysicalParams& params, int points) {
    ComplexMatrix g(n_max + 1, std::vector<cplx>(n_max + 1));
    std::vector<RadialFunction> plus, minus;
    for (int n = 0; n <= n_max; ++n) {
        plus.push_back(resonance_state({n, l}, Sign::plus, params).radial);
        minus.push_back(resonance_state({n, l}, Sign::minus, params).radial);
    }
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n_max; ++m)
            g[n][m] = overlap_radial(plus[n], minus[m], gaussian_contour(plus[n], minus[m], points));
    return g;
}

ComplexMatrix biortho_gram_regularized(int n_max, int l, const PhysicalParams& params, double eta0, double ratio,
                                       int levels) {
    ComplexMatrix g(n_max + 1, std::vector<cplx>(n_max + 1));
    // s is measured in units of sqrt(hbar/gamma) so the ladder is dimensionless.
    const double unit = std::sqrt(params.hbar / params.gamma);
    for (int n = 0; n <= n_max; ++n) {
        const auto up = resonance_state({n, l}, Sign::plus, params).radial;
        for (int m = 0; m <= n_max; ++m) {
            const auto um = resonance_state({m, l}, Sign::minus, params).radial;
            RaySpec ray;
            ray.eta = eta0;
            ray.ladder = levels;
            ray.ladder_ratio = ratio;
            ray.regulator_pole = cplx(0.0, 1.0);
            ray.tolerance = 1e-13;
            g[n][m] = integrate_ray(
                [&](cplx x) {
                    const cplx rho = unit * x;
                    return up.conj_at(rho) * um.at(rho) * rho * unit;
                },
                ray);
        }
    }
    return g;
}

double max_deviation_from_identity(const ComplexMatrix& g) {
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[i].size(); ++j)
            worst = std::max(worst, std::abs(g[i][j] - (i == j ? 1.0 : 0.0)));
    return worst;
}

}  // namespace batres
