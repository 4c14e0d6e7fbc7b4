#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "batres/errors.hpp"
#include "batres/ode_residual.hpp"
#include "batres/oscillator_basis.hpp"

using namespace batres;

TEST_CASE("closed-form low states") {
    const double x = 1.3;
    auto r00 = ho_radial({0, 0}, 1.0, 1.0).radial;
    CHECK(std::abs(r00(x) - std::sqrt(2.0) * std::exp(-x * x / 2)) < 1e-15);
    auto r11 = ho_radial({1, 1}, 1.0, 1.0).radial;
    CHECK(std::abs(r11(x) - x * std::exp(-x * x / 2) * (2.0 - x * x)) < 1e-14);
    auto r1m1 = ho_radial({1, -1}, 1.0, 1.0).radial;
    CHECK(std::abs(r1m1(x) - r11(x)) == 0.0);
    CHECK(ho_radial({2, -3}, 2.0, 0.5).eigenvalue == doctest::Approx(0.5 * 2.0 * 8.0));
}

TEST_CASE("laguerre and 1F1 forms agree") {
    for (int n = 0; n <= 10; ++n)
        for (int l = -5; l <= 5; ++l) {
            auto r = ho_radial({n, l}, 1.7, 0.8).radial;
            for (double rho : {0.1, 0.7, 1.5, 2.9}) {
                const cplx a = r(rho);
                const cplx b = ho_radial_1f1({n, l}, 1.7, 0.8, rho);
                CHECK(std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(a)));
            }
        }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(ho_radial({0, 0}, 0.0, 1.0), NonPositive);
    CHECK_THROWS_AS(ho_radial({0, 0}, 1.0, -1.0), NonPositive);
    CHECK_THROWS_AS(ho_radial({-1, 0}, 1.0, 1.0), DomainError);
}

TEST_CASE("gram matrix n <= 10, |l| <= 5") {
    double worst = 0.0;
    for (int l = -5; l <= 5; ++l)
        for (int n = 0; n <= 10; ++n)
            for (int m = 0; m <= 10; ++m) {
                auto f = ho_radial({n, l}, 1.3, 0.9).radial;
                auto g = ho_radial({m, l}, 1.3, 0.9).radial;
                const cplx v = overlap_radial(f, g, gaussian_contour(f, g));
                worst = std::max(worst, std::abs(v - (n == m ? 1.0 : 0.0)));
            }
    CHECK(worst < 1e-10);
}

TEST_CASE("different angular index pairs to zero") {
    auto f = ho_radial({0, 1}, 1.0, 1.0).radial;
    auto g = ho_radial({0, 2}, 1.0, 1.0).radial;
    CHECK(overlap_radial(f, g, RaySpec{}) == cplx(0.0));
}

TEST_CASE("ray and laguerre overlap routes agree") {
    auto f = ho_radial({2, 1}, 1.0, 1.0).radial;
    auto g = ho_radial({3, 1}, 1.0, 1.0).radial;
    RaySpec ray;
    ray.tolerance = 1e-13;
    const cplx a = overlap_radial(f, f, ray);
    CHECK(std::abs(a - 1.0) < 1e-11);
    CHECK(std::abs(overlap_radial(f, g, ray)) < 1e-11);
    CHECK_THROWS_AS(overlap_radial(f, g, CircleSpec{}), DomainError);
}

TEST_CASE("completeness on a smooth bump") {
    // sum_n |<R_n0|phi>|^2 -> <phi|phi> for phi = rho^2 e^{-rho^2}
    auto phi = RadialFunction::custom(0, [](cplx r) { return r * r * std::exp(-r * r); }, cplx(1.0));
    const cplx norm = overlap_radial(phi, phi, gaussian_contour(phi, phi));
    double sum = 0.0;
    for (int n = 0; n <= 40; ++n) {
        auto r = ho_radial({n, 0}, 1.0, 1.0).radial;
        sum += std::norm(overlap_radial(r, phi, gaussian_contour(r, phi)));
    }
    CHECK(std::abs(sum - norm.real()) < 1e-12);
}

TEST_CASE("radial equation residual is second order") {
    for (int n : {0, 1, 3})
        for (int l : {0, 1, -2}) {
            const auto s = ho_radial({n, l}, 1.2, 1.0);
            const auto study = fd_residual_study(s.radial, ho_operator(l, 1.2, 1.0), s.eigenvalue);
            CHECK(study.min_order >= 1.8);
            CHECK(study.max_order <= 2.2);
        }
}
