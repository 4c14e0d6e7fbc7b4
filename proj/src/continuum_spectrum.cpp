#include "batres/continuum_spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "batres/errors.hpp"
#include "batres/special_functions.hpp"

namespace batres {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

cplx ipow(cplx x, int k) {
    cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

cplx continuum_a(const ContinuumLabel& label, const PhysicalParams& params) {
    // eps/(i gamma hbar) = -i eps/(gamma hbar)
    const double L = std::abs(label.l);
    return 0.5 * (L + 1.0 + kI * label.epsilon / (params.gamma * params.hbar));
}

NormalizationConstant normalization_constant(const ContinuumLabel& label, const PhysicalParams& params) {
    const cplx a = continuum_a(label, params);
    const double n = std::round(-a.real());
    if (n >= 0.0 && std::abs(a + n) <= kPoleSnap * (1.0 + n))
        throw PoleAtResonance(int(n), label.l,
                              "normalization constant has a pole at n = " + std::to_string(int(n)) +
                                  ", l = " + std::to_string(label.l));
    const int L = std::abs(label.l);
    const double pref = std::sqrt(params.gamma / (kPi * std::tgamma(L + 1.0)));
    const cplx minus_i_pow_a = std::exp(-kI * kPi * a / 2.0);
    return {pref * minus_i_pow_a * gamma_complex(a), a};
}

ContinuumState continuum_eigenfunction(const ContinuumLabel& label, const PhysicalParams& params) {
    const auto norm = normalization_constant(label, params);
    const int L = std::abs(label.l);
    const double g = params.gamma, hbar = params.hbar;
    const cplx root = std::polar(std::sqrt(g / hbar), kPi / 4);  // sqrt(i gamma/hbar)
    const cplx N = norm.value, a = norm.a_parameter;
    auto eval = [=](cplx rho) -> cplx {
        const cplx z = kI * g * rho * rho / hbar;
        return N * ipow(root * rho, L) * std::exp(-0.5 * z) * hyp1f1(a, L + 1.0, z);
    };
    RadialLabels labels;
    labels.l = label.l;
    labels.epsilon = label.epsilon;
    RadialFunction radial(Family::continuum, labels, params, eval);
    // No Gaussian exponent: 1F1 grows like e^z off the real axis, so the
    // profile is not a fixed Gaussian times a polynomial.
    return {radial, params.hbar * params.omega * label.l + label.epsilon};
}

RadialFunction time_reverse(const RadialFunction& f) {
    RadialFunction out = f.conjugated();
    if (f.family() == Family::iho_plus) out.family_ = Family::iho_minus;
    else if (f.family() == Family::iho_minus) out.family_ = Family::iho_plus;
    out.time_reversed_ = !f.time_reversed_;
    return out;
}

cplx formula_J(cplx lambda, cplx mu, cplx alpha, cplx alpha_p, cplx k, cplx k_p) {
    const cplx x = k * k_p / ((lambda - k) * (lambda - k_p));
    cplx f21;
    if (std::abs(x - 1.0) <= 1e-14) f21 = gauss_2f1_at_1(alpha, alpha_p, mu);
    else if (std::abs(x) < 0.999) f21 = hyp2f1_series(alpha, alpha_p, mu, x);
    else throw SeriesDomain("formula_J: |2F1 argument| >= 0.999 and != 1");
    return gamma_complex(mu) * principal_pow(lambda, alpha + alpha_p - mu) * principal_pow(lambda - k, -alpha) *
           principal_pow(lambda - k_p, -alpha_p) * f21;
}

cplx formula_J_integrand(double z, cplx lambda, cplx mu, cplx alpha, cplx alpha_p, cplx k, cplx k_p) {
    if (z == 0.0) return mu == cplx(1.0) ? cplx(1.0) : principal_pow(0.0, mu - 1.0);
    return std::exp(-lambda * z) * principal_pow(z, mu - 1.0) * hyp1f1(alpha, mu, k * z) * hyp1f1(alpha_p, mu, k_p * z);
}

}  // namespace batres
