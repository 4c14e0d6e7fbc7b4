#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "batres/errors.hpp"
#include "batres/hyperbolic_rep.hpp"
#include "batres/oscillator_basis.hpp"

using namespace batres;

namespace {
const cplx I(0.0, 1.0);
const PhysicalParams P = make_params_from_omega(0.5, 2.0, 1.0);
}  // namespace

TEST_CASE("b parameter") {
    CHECK(std::abs(hyperbolic_b({P.hbar * P.omega, 0.0}, P)) < 1e-15);
    for (int n = 0; n <= 4; ++n) {
        const cplx nu(0.6, 0.0);
        const cplx eps = P.hbar * P.omega * (2.0 * n + 1.0 + I * nu);
        CHECK(std::abs(hyperbolic_b({eps, nu}, P) + double(n)) < 1e-14);
    }
}

TEST_CASE("b = 0 gives a pure gaussian") {
    const auto r = hyperbolic_continuum({P.hbar * P.omega, 0.0}, P);
    for (double rho : {0.2, 1.0, 1.9}) CHECK(std::abs(r(rho) - std::exp(-P.omega * rho * rho / 2)) < 1e-15);
    CHECK(r.family() == Family::hyperbolic_cont);
}

TEST_CASE("continuum radial equation residual") {
    for (cplx nu : {cplx(0.7), cplx(1.3), cplx(0.4, 0.2)})
        for (cplx eps : {cplx(1.1), cplx(3.7), cplx(-0.8)}) {
            const auto r = hyperbolic_continuum({eps, nu}, P);
            const auto study = fd_residual_study(r, hyperbolic_operator(nu, P.omega, P.hbar), eps);
            CHECK(study.min_order >= 1.8);
            CHECK(study.max_order <= 2.2);
        }
}

TEST_CASE("discrete family") {
    const auto d = hyperbolic_discrete(0, 1, P);
    CHECK(d.energy.value == cplx(4.0, -0.5));
    CHECK(d.radial.family() == Family::hyperbolic_disc);
    CHECK_THROWS_AS(hyperbolic_discrete(0, -1, P), NegativeAngularIndex);
    CHECK_THROWS_AS(hyperbolic_discrete(-1, 0, P), DomainError);
    const auto r00 = hyperbolic_discrete(0, 0, P).radial;
    CHECK(std::abs(overlap_radial(r00, r00, gaussian_contour(r00, r00)) - 1.0) < 1e-12);
    double worst = 0.0;
    for (int l = 0; l <= 5; ++l)
        for (int n = 0; n <= 10; ++n)
            for (int m = 0; m <= 10; ++m) {
                const auto a = hyperbolic_discrete(n, l, P).radial;
                const auto b = hyperbolic_discrete(m, l, P).radial;
                worst = std::max(worst, std::abs(overlap_radial(a, b, gaussian_contour(a, b)) - (n == m ? 1.0 : 0.0)));
            }
    CHECK(worst < 1e-10);
    const auto study = fd_residual_study(hyperbolic_discrete(2, 3, P).radial, ho_operator(3, P.omega, P.hbar),
                                         P.hbar * P.omega * 8.0);
    CHECK(study.min_order >= 1.8);
}

TEST_CASE("representation report") {
    const auto rep = representation_report(5, 5, P);
    CHECK(rep.rows.size() == 36);
    for (const auto& row : rep.rows) {
        CHECK_FALSE(row.match);
        if (row.l == 0) {
            CHECK(row.e_hyperbolic.imag() == 0.0);
            CHECK(row.e_plus.imag() != 0.0);
        }
    }
    CHECK(rep.rows[1].e_plus == cplx(2.0, 1.0));
    CHECK(rep.rows[1].e_hyperbolic == cplx(4.0, -0.5));
    const auto small = representation_report(3, 2, P);
    CHECK(small.elliptic_lattice_size == 20);
    CHECK(small.elliptic_poles == 20);
    CHECK(small.elliptic_off_lattice == 0);
    CHECK(small.hyperbolic_probes == 100);
    CHECK(small.hyperbolic_poles == 0);
}

TEST_CASE("without damping the families coincide") {
    const auto p = make_params_from_omega(1e-300, 2.0, 1.0);
    const auto rep = representation_report(2, 2, p);
    CHECK(rep.rows[0].match);
}

TEST_CASE("pseudo-gram of the hand-made discrete family") {
    const double eta = 1.0;
    const auto g = hyperbolic_pseudo_gram(2, 0, eta);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            const double k = (2.0 * a + 1.0) + (2.0 * b + 1.0);
            const double closed = std::sqrt(std::numbers::pi / eta) * std::exp(k * k / (4 * eta)) / (2 * std::numbers::pi);
            CHECK(std::abs(g[a][b] - closed) < 1e-10 * closed);
        }
    CHECK(max_deviation_from_identity(g) > 1.0);
}

TEST_CASE("generator check") {
    for (cplx nu : {cplx(0.7), cplx(0.0, 3.0), cplx(-1.2, 0.4)}) {
        const auto s = generator_fd_study(nu, P);
        CHECK(s.min_order >= 1.8);
        CHECK(s.max_order <= 2.2);
    }
}
