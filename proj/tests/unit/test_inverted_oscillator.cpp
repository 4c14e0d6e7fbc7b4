#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "batres/errors.hpp"
#include "batres/inverted_oscillator.hpp"
#include "batres/ode_residual.hpp"
#include "batres/quadrature.hpp"

using namespace batres;

namespace {
constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);
const PhysicalParams P = make_params_from_omega(0.5, 2.0, 1.0);
}  // namespace

TEST_CASE("ground states and eigenvalues") {
    const auto up = resonance_state({0, 0}, Sign::plus, P);
    const auto um = resonance_state({0, 0}, Sign::minus, P);
    CHECK(std::abs(up.eigenvalue - cplx(0.0, 0.5)) < 1e-15);
    CHECK(std::abs(um.eigenvalue - cplx(0.0, -0.5)) < 1e-15);
    // u+_00 = e^{i pi/4} sqrt(2 gamma/hbar) e^{-i gamma rho^2/2hbar}
    const double r = 1.1;
    const cplx want = std::polar(1.0, kPi / 4) * std::sqrt(1.0) * std::exp(-I * 0.25 * r * r);
    CHECK(std::abs(up.radial(r) - want) < 1e-14);
    CHECK(std::abs(um.radial(r) - std::conj(want)) < 1e-14);
    CHECK(resonance_state({2, -3}, Sign::plus, P).eigenvalue.imag() == doctest::Approx(0.5 * 8));
}

TEST_CASE("complex scaling composes") {
    const auto f = ho_radial({1, 2}, 1.0, 1.0).radial;
    const auto a = scale_function(scale_function(f, 0.2), 0.3);
    const auto b = scale_function(f, 0.5);
    for (double r : {0.3, 1.0, 2.2}) CHECK(std::abs(a(r) - b(r)) < 1e-14);
}

TEST_CASE("radial equation residual for u+-") {
    for (Sign s : {Sign::plus, Sign::minus})
        for (int n : {0, 2})
            for (int l : {0, 1, -3}) {
                const auto st = resonance_state({n, l}, s, P);
                const auto study = fd_residual_study(st.radial, iho_operator(l, P.gamma, P.hbar), st.eigenvalue);
                CHECK(study.min_order >= 1.8);
                CHECK(study.max_order <= 2.2);
            }
}

TEST_CASE("bi-orthonormality on the rotated contour") {
    for (int l : {0, 1, 2}) CHECK(max_deviation_from_identity(biortho_gram(3, l, P)) < 1e-8);
    CHECK(max_deviation_from_identity(biortho_gram(10, -4, P)) < 1e-10);
}

TEST_CASE("rotated integrand reduces to the oscillator integrand") {
    const auto up = resonance_state({1, 1}, Sign::plus, P).radial;
    const auto um = resonance_state({2, 1}, Sign::minus, P).radial;
    const auto r1 = ho_radial({1, 1}, P.gamma, P.hbar).radial;
    const auto r2 = ho_radial({2, 1}, P.gamma, P.hbar).radial;
    const cplx e = std::polar(1.0, kPi / 4);
    for (double s : {0.4, 1.3, 3.0}) {
        const cplx rho = e * s;
        const cplx lhs = up.conj_at(rho) * um.at(rho) * rho * e;
        CHECK(std::abs(lhs - r1(s) * r2(s) * s) < 1e-13);
    }
}

TEST_CASE("regularized real-axis cross-check") {
    for (int l : {0, 1, 2}) {
        const auto a = biortho_gram(3, l, P);
        const auto b = biortho_gram_regularized(3, l, P);
        double worst = 0.0;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("resonance states are not normalizable on the real axis") {
    // int_0^R |u+_00|^2 rho d rho = (gamma/hbar) R^2 grows without bound
    const auto u = resonance_state({0, 0}, Sign::plus, P).radial;
    auto norm_to = [&](double R) {
        return integrate_interval([&](double r) { return std::norm(u(r)) * r; }, 0.0, R, 1e-12).value.real();
    };
    CHECK(norm_to(10.0) == doctest::Approx(0.5 * 100.0).epsilon(1e-12));
    CHECK(norm_to(20.0) / norm_to(10.0) == doctest::Approx(4.0).epsilon(1e-12));
    const auto u1 = resonance_state({1, 0}, Sign::plus, P).radial;
    auto n1 = [&](double R) {
        return integrate_interval([&](double r) { return std::norm(u1(r)) * r; }, 0.0, R, 1e-10).value.real();
    };
    CHECK(n1(20.0) / n1(10.0) > 50.0);
}
