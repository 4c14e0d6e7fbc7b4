#include "batres/hyperbolic_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "batres/continuum_spectrum.hpp"
#include "batres/errors.hpp"
#include "batres/oscillator_basis.hpp"
#include "batres/quadrature.hpp"
#include "batres/special_functions.hpp"

namespace batres {

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);
}  // namespace

cplx hyperbolic_b(const HyperbolicLabel& label, const PhysicalParams& params) {
    return 0.5 * (kI * label.nu + 1.0 - label.epsilon / (params.hbar * params.omega));
}

RadialFunction hyperbolic_continuum(const HyperbolicLabel& label, const PhysicalParams& params) {
    const cplx b = hyperbolic_b(label, params);
    const cplx c = kI * label.nu + 1.0;
    const double w = params.omega / params.hbar;
    RadialLabels labels;
    labels.epsilon = label.epsilon;
    labels.nu = label.nu;
    return RadialFunction(Family::hyperbolic_cont, labels, params, [=](cplx rho) {
        const cplx x = std::sqrt(w) * rho;
        return principal_pow(x, kI * label.nu) * std::exp(-0.5 * x * x) * tricomi_u(b, c, x * x);
    });
}

HyperbolicDiscrete hyperbolic_discrete(int n, int l, const PhysicalParams& params) {
    if (l < 0) throw NegativeAngularIndex("hyperbolic_discrete: R_nl exists for l >= 0 only");
    if (n < 0) throw DomainError("hyperbolic_discrete: n must be nonnegative");
    const auto ho = ho_radial({n, l}, params.omega, params.hbar).radial;
    RadialLabels labels;
    labels.n = n;
    labels.l = l;
    labels.Omega = params.omega;
    RadialFunction r =
        RadialFunction(Family::hyperbolic_disc, labels, params, ho.evaluator()).with_gaussian(ho.gaussian_exponent());
    const cplx e(params.hbar * params.omega * (2.0 * n + l + 1.0), -params.hbar * params.gamma * l);
    return {r, {e, HyperbolicDiscreteLabel{n, l}}};
}

cplx hyperbolic_phi(cplx nu, double u) { return std::exp(-kI * nu * u) / std::sqrt(2.0 * kPi); }

RepresentationReport representation_report(int n_max, int l_max, const PhysicalParams& params) {
    RepresentationReport rep;
    std::vector<cplx> elliptic;
    for (int n = 0; n <= n_max; ++n)
        for (int l = -l_max; l <= l_max; ++l)
            for (Sign s : {Sign::plus, Sign::minus})
                elliptic.push_back(bateman_resonance_energy({n, l}, s, params).value);

    for (int n = 0; n <= n_max; ++n)
        for (int l = 0; l <= l_max; ++l) {
            RepresentationRow row{n, l, bateman_resonance_energy({n, l}, Sign::plus, params).value,
                                  bateman_resonance_energy({n, l}, Sign::minus, params).value,
                                  hyperbolic_discrete(n, l, params).energy.value, false};
            for (const cplx& e : elliptic)
                if (std::abs(e - row.e_hyperbolic) <= 1e-12 * std::max(1.0, std::abs(e))) row.match = true;
            rep.rows.push_back(row);
        }

    const double gh = params.gamma * params.hbar;
    for (int n = 0; n <= n_max; ++n)
        for (int l = -l_max; l <= l_max; ++l) {
            ++rep.elliptic_lattice_size;
            const cplx eps(0.0, gh * (std::abs(l) + 2.0 * n + 1.0));
            try {
                normalization_constant({eps, l}, params);
            } catch (const PoleAtResonance&) {
                ++rep.elliptic_poles;
            }
            try {
                normalization_constant({eps + cplx(0.37 * gh, 0.5 * gh), l}, params);
            } catch (const PoleAtResonance&) {
                ++rep.elliptic_off_lattice;
            }
        }

    // 100 probes: the would-be pole positions nu = i(2n+|l|+1) and a 9x9 grid
    std::vector<cplx> probes;
    for (int k = 1; probes.size() < 19; k += 1) probes.push_back(cplx(0.0, k));
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) probes.push_back(cplx(-4.0 + i, -4.0 + j + 0.25));
    for (const cplx& nu : probes) {
        ++rep.hyperbolic_probes;
        bool finite = true;
        for (double u : {-1.0, -0.3, 0.0, 0.6, 1.0}) {
            const cplx v = hyperbolic_phi(nu, u);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) finite = false;
        }
        if (!finite) ++rep.hyperbolic_poles;
    }
    return rep;
}

ComplexMatrix hyperbolic_pseudo_gram(int n_max, int l, double eta) {
    if (eta <= 0.0) throw NonPositive("hyperbolic_pseudo_gram: eta must be positive");
    ComplexMatrix g(n_max + 1, std::vector<cplx>(n_max + 1));
    for (int a = 0; a <= n_max; ++a)
        for (int b = 0; b <= n_max; ++b) {
            const cplx na(0.0, 2.0 * a + std::abs(l) + 1.0);
            const cplx nb(0.0, 2.0 * b + std::abs(l) + 1.0);
            const double centre = (na.imag() + nb.imag()) / (2.0 * eta);
            const double half = centre + 12.0 / std::sqrt(eta);
            g[a][b] = integrate_interval(
                          [&](double u) {
                              return std::exp(-eta * u * u) * std::conj(hyperbolic_phi(na, u)) * hyperbolic_phi(nb, u);
                          },
                          centre - half, centre + half, 0.0, 1e-13)
                          .value;
        }
    return g;
}

ResidualStudy generator_fd_study(cplx nu, const PhysicalParams& params, int points, double h0, int halvings) {
    ResidualStudy study;
    const double gh = params.gamma * params.hbar;
    double h = h0;
    for (int k = 0; k <= halvings; ++k, h *= 0.5) {
        double worst = 0.0, scale = 0.0;
        for (int i = 0; i < points; ++i) {
            const double u = -1.0 + 2.0 * i / (points - 1);
            const cplx lhs = kI * gh * (hyperbolic_phi(nu, u + h) - hyperbolic_phi(nu, u - h)) / (2.0 * h);
            const cplx rhs = gh * nu * hyperbolic_phi(nu, u);
            worst = std::max(worst, std::abs(lhs - rhs));
            scale = std::max(scale, std::abs(rhs));
        }
        study.steps.push_back(h);
        study.residuals.push_back(scale > 0.0 ? worst / scale : worst);
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
