#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "batres/continuum_spectrum.hpp"
#include "batres/errors.hpp"
#include "batres/inverted_oscillator.hpp"
#include "batres/ode_residual.hpp"
#include "batres/quadrature.hpp"
#include "batres/special_functions.hpp"

using namespace batres;

namespace {
constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);
}  // namespace

TEST_CASE("a parameter and N(0, 0)") {
    const auto p = make_params_from_omega(1.0, 1.0, 1.0);
    CHECK(std::abs(continuum_a({0.0, 0}, p) - 0.5) < 1e-15);
    CHECK(std::abs(continuum_a({2.0, 1}, p) - cplx(1.0, 1.0)) < 1e-15);
    const auto N = normalization_constant({0.0, 0}, p);
    CHECK(std::abs(N.value - std::polar(1.0, -kPi / 4)) < 1e-14);
}

TEST_CASE("radial values against mpmath") {
    struct Case {
        cplx eps;
        int l;
        double gamma, hbar, rho;
        cplx want;
    };
    const Case cases[] = {
        {0.7, 1, 0.5, 1.0, 1.3, {0.25907259854619642, -0.48271741510032777}},
        {-2.0, 0, 0.5, 1.0, 0.8, {0.0031910236969805662, -0.00062317018944375721}},
        {3.0, 3, 0.25, 0.7, 2.1, {-0.12281938623256686, 0.40700042961070865}},
        {{0.4, 0.3}, 2, 0.5, 1.0, 1.0, {0.18243351507236818, -0.091703997324926195}},
    };
    for (const auto& c : cases) {
        const auto p = make_params_from_omega(c.gamma, 1.0, c.hbar);
        const auto st = continuum_eigenfunction({c.eps, c.l}, p);
        CHECK(std::abs(st.radial(c.rho) - c.want) < 1e-12 * std::abs(c.want));
        CHECK(std::abs(st.total_energy - (c.hbar * 1.0 * c.l + c.eps)) < 1e-14);
    }
}

TEST_CASE("pole lattice") {
    const auto p = make_params_from_omega(0.5, 2.0, 1.0);
    for (int n = 0; n <= 10; ++n)
        for (int l = -5; l <= 5; ++l) {
            const cplx eps(0.0, p.gamma * p.hbar * (std::abs(l) + 2 * n + 1));
            bool thrown = false;
            try {
                normalization_constant({eps, l}, p);
            } catch (const PoleAtResonance& e) {
                thrown = true;
                CHECK(e.n() == n);
                CHECK(e.l() == l);
            }
            CHECK(thrown);
        }
    // nearby but off-lattice
    CHECK_NOTHROW(normalization_constant({cplx(1e-6, 0.5), 0}, p));
    CHECK_NOTHROW(normalization_constant({cplx(0.0, 1.0), 0}, p));
}

TEST_CASE("radial equation residual") {
    const auto p = make_params_from_omega(0.5, 2.0, 1.0);
    for (double eps : {-2.0, 0.0, 3.0})
        for (int l : {0, 1, 3}) {
            const auto st = continuum_eigenfunction({eps, l}, p);
            const auto study = fd_residual_study(st.radial, iho_operator(l, p.gamma, p.hbar), eps);
            CHECK(study.min_order >= 1.8);
            CHECK(study.max_order <= 2.2);
        }
}

TEST_CASE("time reversal") {
    const auto p = make_params_from_omega(0.5, 2.0, 1.0);
    const auto up = resonance_state({1, 2}, Sign::plus, p).radial;
    const auto um = resonance_state({1, 2}, Sign::minus, p).radial;
    const auto tr = time_reverse(up);
    CHECK(tr.family() == Family::iho_minus);
    CHECK(tr.time_reversed());
    CHECK_FALSE(time_reverse(tr).time_reversed());
    for (double r : {0.4, 1.7}) CHECK(std::abs(tr(r) - um(r)) < 1e-14);
    const auto psi = continuum_eigenfunction({0.9, 1}, p).radial;
    const auto chi = time_reverse(psi);
    CHECK(chi.angular_index() == 1);
    CHECK(std::abs(chi(1.1) - std::conj(psi(1.1))) < 1e-15);
}

TEST_CASE("formula J against quadrature") {
    std::mt19937 rng(20240611);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0;
    while (checked < 25) {
        const cplx lambda(1.0 + 2.0 * u(rng), 0.5 * (u(rng) - 0.5));
        const cplx mu(1.0 + 2.0 * u(rng), 0.0);
        const cplx alpha(0.2 + 1.5 * u(rng), u(rng) - 0.5);
        const cplx alpha_p(0.2 + 1.5 * u(rng), u(rng) - 0.5);
        const cplx k(0.3 * (u(rng) - 0.5), 1.2 * (u(rng) - 0.5));
        const cplx kp(0.3 * (u(rng) - 0.5), 1.2 * (u(rng) - 0.5));
        const cplx x = k * kp / ((lambda - k) * (lambda - kp));
        if (std::abs(x) >= 0.9) continue;
        const cplx closed = formula_J(lambda, mu, alpha, alpha_p, k, kp);
        const auto q = integrate_interval(
            [&](double z) { return formula_J_integrand(z, lambda, mu, alpha, alpha_p, k, kp); }, 0.0, 120.0, 1e-13);
        CHECK(std::abs(closed - q.value) < 1e-8 * std::max(1.0, std::abs(closed)));
        ++checked;
    }
}

TEST_CASE("regularized self-overlap") {
    const auto p = make_params_from_omega(1.0, 1.0, 1.0);
    double previous = 0.0;
    for (double lambda : {2.0, 1.0, 0.5}) {
        for (int l : {0, 1}) {
            const cplx a = continuum_a({0.8, l}, p);
            const cplx mu = std::abs(l) + 1.0;
            const cplx closed = formula_J(lambda, mu, a, std::conj(a), I, -I);
            const auto q = integrate_interval(
                [&](double z) { return formula_J_integrand(z, lambda, mu, a, std::conj(a), I, -I); }, 0.0, 200.0,
                1e-13);
            CHECK(std::abs(closed - q.value) < 1e-8 * std::abs(closed));
            if (l == 0) {
                CHECK(std::abs(closed) > previous);
                previous = std::abs(closed);
            }
        }
    }
}

TEST_CASE("unit-argument divergence") {
    const auto p = make_params_from_omega(1.0, 1.0, 1.0);
    const cplx a = continuum_a({0.8, 1}, p);
    CHECK_THROWS_AS(formula_J(0.0, 2.0, a, std::conj(a), I, -I), DivergentAtUnitArgument);
    CHECK_THROWS_AS(formula_J(0.1, 2.0, 0.5, 0.5, 2.0, 2.0), SeriesDomain);
}
