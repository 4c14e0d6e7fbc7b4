#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "batres/errors.hpp"
#include "batres/params.hpp"

using namespace batres;

TEST_CASE("make_params derives omega") {
    const auto p = make_params(0.5, 4.25, 1.0);
    CHECK(p.omega == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(make_params(1.0, 1.0, 1.0), OverdampedRegime);
    CHECK_THROWS_AS(make_params(0.1, 0.005, 1.0), OverdampedRegime);
    CHECK(make_params(0.1, 0.02, 1.0).omega == doctest::Approx(0.1));
    CHECK_THROWS_AS(make_params(0.0, 1.0, 1.0), NonPositive);
    CHECK_THROWS_AS(make_params(0.5, 4.25, -1.0), NonPositive);
    const auto q = make_params_from_omega(0.5, 2.0);
    CHECK(q.kappa == doctest::Approx(4.25));
}

TEST_CASE("classical hamiltonian spot values") {
    const auto p = make_params_from_omega(0.5, 2.0);
    CHECK(classical_hamiltonian({Representation::bateman, {1, 1, 0, 0}}, p) == doctest::Approx(4.0));
    CHECK(classical_hamiltonian({Representation::bateman, {0, 0, 0, 0}}, p) == 0.0);
}

TEST_CASE("bateman to mode spot value") {
    const auto p = make_params_from_omega(0.5, 2.0);
    const auto m = transform({Representation::bateman, {1, 0, 0, 0}}, Representation::mode, p);
    CHECK(m.rep == Representation::mode);
    CHECK(m.coords[0] == doctest::Approx(0.0));
    CHECK(m.coords[1] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
    CHECK(m.coords[2] == doctest::Approx(0.0));
    CHECK(m.coords[3] == doctest::Approx(0.0));
}

TEST_CASE("hamiltonian invariance, round trip and symplecticity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const Representation reps[] = {Representation::bateman, Representation::mode, Representation::uv,
                                   Representation::hyperbolic};
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = make_params_from_omega(0.2 + std::abs(u(rng)), 0.3 + std::abs(u(rng)), 0.5 + std::abs(u(rng)));
        PhasePoint b{Representation::bateman, {u(rng), u(rng), u(rng), u(rng)}};
        const double h = classical_hamiltonian(b, p);
        for (auto src : reps) {
            const auto s = transform(b, src, p);
            CHECK(std::abs(classical_hamiltonian(s, p) - h) <= 1e-12 * std::max(1.0, std::abs(h)));
            for (auto dst : reps) {
                const auto t = transform(s, dst, p);
                const auto back = transform(t, src, p);
                for (int i = 0; i < 4; ++i) CHECK(std::abs(back.coords[i] - s.coords[i]) < 1e-12);
                CHECK(symplectic_defect(transform_jacobian(s, dst, p)) < 1e-12);
            }
        }
    }
}
