// One PASS/FAIL line per acceptance criterion. Criteria listed in
// kKnownFailures are reported but do not set the exit status; see README.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "batres/resonance_engine.hpp"
#include "suites.hpp"

using namespace batres;

namespace {

const std::set<int> kKnownFailures = {11};

struct Detail {
    std::string name;
    double error;
    double tolerance;
    bool passed;
};

std::map<std::string, suites::Check> g_checks;

Detail from_suite(const std::string& key) {
    const auto it = g_checks.find(key);
    if (it == g_checks.end()) return {key + " (missing)", INFINITY, 0.0, false};
    return {key, it->second.error, it->second.tolerance, it->second.passed};
}

}  // namespace

int main() {
    const PhysicalParams p = make_params_from_omega(0.5, 2.0, 1.0);
    suites::Options opt;
    opt.params = p;

    double identities_seconds = 0.0;
    for (const auto& name : suites::names()) {
        const auto start = std::chrono::steady_clock::now();
        for (const auto& c : suites::run(name, opt)) g_checks[c.suite + "/" + c.name] = c;
        if (name == "identities")
            identities_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    std::vector<std::pair<std::string, std::vector<Detail>>> criteria(12);

    {
        double worst = 0.0;
        for (int n = 0; n <= 10; ++n)
            for (int l = -5; l <= 5; ++l)
                for (Sign s : {Sign::plus, Sign::minus}) {
                    const cplx want(p.hbar * p.omega * l, sign_value(s) * p.hbar * p.gamma * (std::abs(l) + 2 * n + 1));
                    worst = std::max(worst, std::abs(bateman_resonance_energy({n, l}, s, p).value - want));
                }
        const double spot = std::abs(bateman_resonance_energy({0, 1}, Sign::plus, p).value - cplx(2.0, 1.0));
        criteria[0] = {"eigenvalue lattice n<=10 |l|<=5",
                       {{"lattice_exact", worst, 0.0, worst == 0.0}, {"spot_n0_l1", spot, 0.0, spot == 0.0}}};
    }
    {
        std::vector<Detail> d;
        for (const auto& [key, c] : g_checks)
            if (c.suite == "identities") d.push_back(from_suite(key));
        d.push_back({"runtime_seconds", identities_seconds, 10.0, identities_seconds < 10.0});
        criteria[1] = {"special-function identities", d};
    }
    criteria[2] = {"oscillator orthonormality",
                   {from_suite("oscillator/gram_n10_l5"), from_suite("oscillator/laguerre_weighted_orthogonality")}};
    criteria[3] = {"bi-orthonormality",
                   {from_suite("biortho/rotated_gram_n3_l012"), from_suite("biortho/regularized_real_axis_vs_rotated")}};
    criteria[4] = {"ODE residual order",
                   {from_suite("oscillator/fd_order_R_nl"), from_suite("biortho/fd_order_u_plus_minus"),
                    from_suite("continuum/fd_order_R_eps_l"), from_suite("hyperbolic/fd_order_hyperbolic_continuum"),
                    from_suite("hyperbolic/fd_order_hyperbolic_discrete")}};
    criteria[5] = {"pole structure",
                   {from_suite("continuum/pole_lattice_n10_l5_misses"),
                    from_suite("continuum/off_lattice_probe_20x20_false_poles")}};
    criteria[6] = {"integral formula J",
                   {from_suite("continuum/formula_J_vs_quadrature_25_draws"),
                    from_suite("continuum/formula_J_divergent_configuration")}};
    criteria[7] = {"pole residues",
                   {from_suite("projectors/residue_n0_l0"), from_suite("projectors/residue_n1_l0"),
                    from_suite("projectors/residue_n0_l1")}};
    criteria[8] = {"projector calculus",
                   {from_suite("projectors/contour_vs_direct_n3_l2"),
                    from_suite("projectors/idempotency_and_orthogonality")}};
    {
        std::vector<Detail> d;
        for (const auto& [key, c] : g_checks)
            if (c.suite == "semigroup") d.push_back(from_suite(key));
        criteria[9] = {"semigroup decay", d};
    }
    {
        std::vector<Detail> d = {from_suite("projectors/finite_combination_round_trip")};
        const double beta = 2.0 * p.gamma;
        const auto phi =
            RadialFunction::custom(0, [&](cplx r) { return std::exp(-beta * r * r / p.hbar); }, cplx(beta / p.hbar));
        ExpandOptions eo;
        eo.grid_extent = 3.0;
        double previous = INFINITY;
        for (int n_max : {4, 8, 16}) {
            const double err = expand({phi}, Sign::plus, {n_max, 0}, p, eo).report.max_error;
            d.push_back({"gaussian_error_n" + std::to_string(n_max), err, previous, err < previous});
            previous = err;
        }
        criteria[10] = {"expansion round trip", d};
    }
    criteria[11] = {"representation contrast",
                    {from_suite("hyperbolic/spectrum_matches_n5_l5"), from_suite("hyperbolic/elliptic_pole_count_deficit"),
                     from_suite("hyperbolic/hyperbolic_nu_plane_poles"), from_suite("hyperbolic/negative_l_rejected")}};

    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = int(i) + 1;
        bool ok = true;
        for (const auto& d : criteria[i].second) ok = ok && d.passed;
        const bool known = kKnownFailures.count(id) > 0;
        const char* note = "";
        if (!ok && known) note = "  (known failure)";
        if (ok && known) note = "  (listed as known failure but passed)";
        if (ok == known) ++unexpected;
        std::printf("criterion %2d: %s  %s%s\n", id, ok ? "PASS" : "FAIL", criteria[i].first.c_str(), note);
        for (const auto& d : criteria[i].second)
            std::printf("    %-48s error %.3e  tolerance %.3e  %s\n", d.name.c_str(), d.error, d.tolerance,
                        d.passed ? "ok" : "fail");
    }
    std::printf("unexpected results: %d\n", unexpected);
    return unexpected == 0 ? 0 : 1;
}
