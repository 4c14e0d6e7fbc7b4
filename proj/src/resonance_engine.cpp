#include "batres/resonance_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "batres/errors.hpp"
#include "batres/quadrature.hpp"

namespace batres {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

double log_factorial(int n) { return std::lgamma(n + 1.0); }

std::vector<int> sectors(const RadialFunction& f, const RadialFunction& g, int l_max) {
    const auto lf = f.angular_index();
    const auto lg = g.angular_index();
    if (lf && lg && *lf != *lg) return {};
    const auto known = lf ? lf : lg;
    if (known) return std::abs(*known) <= l_max ? std::vector<int>{*known} : std::vector<int>{};
    std::vector<int> all;
    for (int l = -l_max; l <= l_max; ++l) all.push_back(l);
    return all;
}

}  // namespace

SpectralValue bateman_resonance_energy(QuantumNumbers qn, Sign sign, const PhysicalParams& params) {
    const double k = std::abs(qn.l) + 2.0 * qn.n + 1.0;
    const cplx value(params.hbar * params.omega * qn.l, sign_value(sign) * params.hbar * params.gamma * k);
    return {value, DiscreteLabel{qn.n, qn.l, sign}};
}

cplx pole_residue_coefficient(QuantumNumbers qn, const PhysicalParams& params) {
    const int n = qn.n;
    const int L = std::abs(qn.l);
    cplx phase = std::polar(1.0, -kPi / 4);
    for (int k = 0; k <= n; ++k) phase *= -kI;
    const double magnitude = 2.0 * params.gamma * params.hbar * std::sqrt(params.hbar / (2.0 * kPi)) *
                             std::exp(0.5 * (log_factorial(L) - log_factorial(n) - log_factorial(n + L)));
    return phase * magnitude;
}

cplx contour_residue(QuantumNumbers qn, const PhysicalParams& params, double rho0, std::optional<cplx> center,
                     std::optional<double> radius) {
    const double gh = params.gamma * params.hbar;
    CircleSpec circle;
    circle.center = center.value_or(cplx(0.0, gh * (std::abs(qn.l) + 2.0 * qn.n + 1.0)));
    circle.radius = radius.value_or(0.2 * gh);
    circle.tolerance = 1e-13;
    const cplx integral = contour_integral_circle(
        [&](cplx eps) { return continuum_eigenfunction({eps, qn.l}, params).radial(rho0); }, circle);
    return integral / (2.0 * kPi * kI);
}

cplx pair(const RadialFunction& f, const RadialFunction& g, int points) {
    const auto lf = f.angular_index();
    const auto lg = g.angular_index();
    if (lf && lg && *lf != *lg) return 0.0;
    if (f.gaussian_exponent() && g.gaussian_exponent()) return overlap_radial(f, g, gaussian_contour(f, g, points));
    RaySpec ray;
    ray.tolerance = 1e-12;
    return overlap_radial(f, g, ray);
}

Resolvent::Resolvent(const RadialFunction& f, const RadialFunction& g, Sign sign, Truncation truncation,
                     const PhysicalParams& params, int points) {
    for (int n = 0; n <= truncation.n_max; ++n)
        for (int l : sectors(f, g, truncation.l_max)) {
            const auto ket = resonance_state({n, l}, opposite(sign), params).radial;
            const auto bra = resonance_state({n, l}, sign, params).radial;
            const cplx weight = pair(f, ket, points) * pair(bra, g, points);
            terms_.push_back({{n, l}, bateman_resonance_energy({n, l}, sign, params).value, weight});
        }
}

cplx Resolvent::operator()(cplx z, bool reverse_order) const {
    for (const auto& t : terms_)
        if (std::abs(t.energy - z) < 1e-9) throw NearPole("resolvent: z is within 1e-9 of a pole");
    cplx sum = 0.0;
    if (reverse_order) {
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) sum += it->weight / (it->energy - z);
    } else {
        for (const auto& t : terms_) sum += t.weight / (t.energy - z);
    }
    return sum;
}

cplx resolvent_element(const RadialFunction& f, const RadialFunction& g, cplx z, Sign sign, Truncation truncation,
                       const PhysicalParams& params) {
    return Resolvent(f, g, sign, truncation, params)(z);
}

cplx resolvent_circle_integral(const Resolvent& resolvent, cplx center, double radius) {
    CircleSpec circle;
    circle.center = center;
    circle.radius = radius;
    circle.orientation = Orientation::cw;
    circle.tolerance = 1e-13;
    return contour_integral_circle([&](cplx z) { return resolvent(z); }, circle) / (2.0 * kPi * kI);
}

ProjectorElement projector_element(QuantumNumbers qn, Sign sign, const RadialFunction& f, const RadialFunction& g,
                                   const PhysicalParams& params, const ProjectorOptions& options) {
    const auto ket = resonance_state(qn, opposite(sign), params).radial;
    const auto bra = resonance_state(qn, sign, params).radial;
    ProjectorElement out;
    out.direct = pair(f, ket, options.points) * pair(bra, g, options.points);
    if (!options.check) return out;
    Truncation trunc = options.truncation;
    trunc.n_max = std::max(trunc.n_max, qn.n);
    trunc.l_max = std::max(trunc.l_max, std::abs(qn.l));
    const Resolvent resolvent(f, g, sign, trunc, params, options.points);
    const cplx center = bateman_resonance_energy(qn, sign, params).value;
    out.contour = resolvent_circle_integral(resolvent, center, options.radius_factor * params.hbar * params.gamma);
    out.discrepancy = std::abs(*out.contour - out.direct);
    if (out.discrepancy > options.tolerance)
        throw ConvergenceFailure("projector_element: contour and direct routes disagree");
    return out;
}

cplx projector_product_element(QuantumNumbers a, QuantumNumbers b, Sign sign, const RadialFunction& f,
                               const RadialFunction& g, const PhysicalParams& params, int points) {
    const auto ket_a = resonance_state(a, opposite(sign), params).radial;
    const auto bra_a = resonance_state(a, sign, params).radial;
    const auto ket_b = resonance_state(b, opposite(sign), params).radial;
    const auto bra_b = resonance_state(b, sign, params).radial;
    const cplx middle = pair(bra_a, ket_b, points);
    if (middle == cplx(0.0)) return 0.0;
    return pair(f, ket_a, points) * middle * pair(bra_b, g, points);
}

std::vector<RadialFunction> test_battery(int l, int k_max, const PhysicalParams& params) {
    std::vector<RadialFunction> out;
    for (int k = 0; k <= k_max; ++k) {
        auto ho = ho_radial({k, l}, 2.0 * params.gamma, params.hbar).radial;
        RadialFunction f = RadialFunction::custom(l, ho.evaluator(), ho.gaussian_exponent());
        out.push_back(f);
    }
    return out;
}

namespace {

double reconstruction_error(const std::vector<RadialFunction>& components, const ResonanceExpansion& e,
                            const std::vector<double>& grid) {
    double worst = 0.0;
    for (const auto& phi : components) {
        const auto l = phi.angular_index();
        if (!l || std::abs(*l) > e.truncation.l_max) continue;
        for (double rho : grid) worst = std::max(worst, std::abs(phi(rho) - reconstruct(e, *l, rho)));
    }
    return worst;
}

ResonanceExpansion expand_at(const std::vector<RadialFunction>& components, Sign sign, Truncation truncation,
                             const PhysicalParams& params, int points) {
    ResonanceExpansion e;
    e.sign = sign;
    e.truncation = truncation;
    e.params = params;
    for (const auto& phi : components)
        if (!phi.angular_index()) throw DomainError("expand: every component needs an angular index");
    for (int n = 0; n <= truncation.n_max; ++n)
        for (int l = -truncation.l_max; l <= truncation.l_max; ++l) {
            cplx c = 0.0;
            bool present = false;
            for (const auto& phi : components) {
                if (*phi.angular_index() != l) continue;
                present = true;
                const auto dual = resonance_state({n, l}, opposite(sign), params).radial;
                c += pair(dual, phi, points);
            }
            if (present) e.coefficients[{n, l}] = c;
        }
    return e;
}

}  // namespace

ResonanceExpansion expand(const std::vector<RadialFunction>& components, Sign sign, Truncation truncation,
                          const PhysicalParams& params, const ExpandOptions& options) {
    ResonanceExpansion e = expand_at(components, sign, truncation, params, options.points);
    const double unit = std::sqrt(params.hbar / params.gamma);
    for (int i = 0; i < options.grid_points; ++i)
        e.report.grid.push_back(options.grid_extent * unit * i / std::max(1, options.grid_points - 1));
    e.report.max_error = reconstruction_error(components, e, e.report.grid);
    if (options.check_convergence) {
        Truncation wider = truncation;
        wider.n_max += 2;
        const ResonanceExpansion w = expand_at(components, sign, wider, params, options.points);
        double scale = 0.0;
        for (const auto& phi : components)
            for (double rho : e.report.grid) scale = std::max(scale, std::abs(phi(rho)));
        const double floor = 1e-9 * std::max(scale, 1e-300);
        const double wider_error = reconstruction_error(components, w, e.report.grid);
        if (e.report.max_error > floor && !(wider_error < e.report.max_error))
            throw NonConvergent("expand: reconstruction error does not decrease when n_max grows by 2");
    }
    return e;
}

cplx reconstruct(const ResonanceExpansion& expansion, int l, cplx rho) {
    cplx sum = 0.0;
    for (const auto& [key, c] : expansion.coefficients) {
        if (key.second != l || c == cplx(0.0)) continue;
        sum += c * resonance_state({key.first, l}, expansion.sign, expansion.params).radial.at(rho);
    }
    return sum;
}

ResonanceExpansion evolve(const ResonanceExpansion& expansion, double t) {
    if (expansion.sign == Sign::minus && t < 0.0)
        throw SemigroupDomain("the decay semigroup (minus) is defined for t >= 0 only");
    if (expansion.sign == Sign::plus && t > 0.0)
        throw SemigroupDomain("the growth semigroup (plus) is defined for t <= 0 only");
    ResonanceExpansion out = expansion;
    const double g = expansion.params.gamma, w = expansion.params.omega;
    const double s = sign_value(expansion.sign);
    for (auto& [key, c] : out.coefficients) {
        const int n = key.first, l = key.second;
        const double k = 2.0 * n + std::abs(l) + 1.0;
        c *= std::exp(cplx(s * g * k * t, -w * l * t));
    }
    out.time = expansion.time + t;
    out.report = {};
    return out;
}

}  // namespace batres
