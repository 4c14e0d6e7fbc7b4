#include "batres/oscillator_basis.hpp"

#include <cmath>

#include "batres/errors.hpp"
#include "batres/special_functions.hpp"

namespace batres {

namespace {

cplx ipow(cplx x, int k) {
    cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

HoState ho_radial(QuantumNumbers qn, double Omega, double hbar) {
    if (!(Omega > 0.0)) throw NonPositive("ho_radial: Omega must be > 0");
    if (!(hbar > 0.0)) throw NonPositive("ho_radial: hbar must be > 0");
    if (qn.n < 0) throw DomainError("ho_radial: n must be >= 0");
    const int n = qn.n;
    const int L = std::abs(qn.l);
    const double scale = std::sqrt(Omega / hbar);
    const double norm = std::sqrt(2.0 * Omega / hbar) *
                        std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + L + 1.0)));
    RadialLabels labels;
    labels.n = n;
    labels.l = qn.l;
    labels.Omega = Omega;
    auto eval = [=](cplx rho) -> cplx {
        const cplx x = scale * rho;
        const cplx x2 = x * x;
        const cplx power = ipow(x, L);
        return norm * power * std::exp(-0.5 * x2) * laguerre(n, double(L), x2);
    };
    return {RadialFunction(Family::ho, labels, std::nullopt, eval).with_gaussian(0.5 * Omega / hbar),
            hbar * Omega * (L + 2.0 * n + 1.0)};
}

cplx ho_radial_1f1(QuantumNumbers qn, double Omega, double hbar, cplx rho) {
    const int n = qn.n;
    const int L = std::abs(qn.l);
    const double c_nl = std::sqrt(2.0 * Omega / hbar) / std::tgamma(L + 1.0) *
                        std::exp(0.5 * (std::lgamma(n + L + 1.0) - std::lgamma(n + 1.0)));
    const cplx x = std::sqrt(Omega / hbar) * rho;
    const cplx power = ipow(x, L);
    return c_nl * power * std::exp(-0.5 * x * x) * hyp1f1(double(-n), L + 1.0, x * x);
}

LaguerreSpec gaussian_contour(const RadialFunction& f, const RadialFunction& g, int points) {
    const auto cf = f.gaussian_exponent();
    const auto cg = g.gaussian_exponent();
    if (!cf || !cg) throw DomainError("gaussian_contour: Gaussian exponent unknown");
    const cplx c = std::conj(*cf) + *cg;
    if (std::abs(c) == 0.0 || (c.imag() == 0.0 && c.real() < 0.0))
        throw DomainError("gaussian_contour: the product does not decay on any ray");
    LaguerreSpec spec;
    spec.theta = -0.5 * std::arg(c);
    spec.points = points;
    spec.scale = std::abs(c);
    return spec;
}

cplx overlap_radial(const RadialFunction& f, const RadialFunction& g, const ContourSpec& contour) {
    const auto lf = f.angular_index();
    const auto lg = g.angular_index();
    if (lf && lg && *lf != *lg) return 0.0;
    auto integrand = [&](cplx rho) { return f.conj_at(rho) * g.at(rho); };
    if (const auto* ray = std::get_if<RaySpec>(&contour))
        return integrate_ray([&](cplx rho) { return integrand(rho) * rho; }, *ray);
    if (const auto* lag = std::get_if<LaguerreSpec>(&contour)) return integrate_radial_laguerre(integrand, *lag);
    throw DomainError("overlap_radial: a radial overlap needs a ray or laguerre contour");
}

}  // namespace batres
