// batres: verification suites, spectra, decay curves and representation
// tables for the Bateman damped oscillator, as CSV or JSON.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "batres/continuum_spectrum.hpp"
#include "batres/errors.hpp"
#include "batres/hyperbolic_rep.hpp"
#include "batres/inverted_oscillator.hpp"
#include "batres/oscillator_basis.hpp"
#include "batres/resonance_engine.hpp"
#include "json.hpp"
#include "suites.hpp"

using namespace batres;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------------ tables

enum class Kind { integer, fixed, sci, complex, text, flag };

struct Column {
    std::string name;
    Kind kind;
};

using Cell = std::variant<std::monostate, long, double, cplx, std::string, bool>;

struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, ordered_json>> extras;  // JSON keys / CSV trailer comments
    int passed = 0;
    int failed = 0;
    double max_error = 0.0;
};

std::string format_number(double v, Kind kind, int precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, kind == Kind::sci ? "%.*e" : "%.*f", precision, v);
    std::string s = buf;
    if (s == "-0.000000" || (s.size() > 1 && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos))
        s.erase(0, 1);  // no negative zero in output
    return s;
}

ordered_json json_number(double v, Kind kind, int precision) {
    if (!std::isfinite(v)) return nullptr;
    return std::stod(format_number(v, kind, precision));
}

void write_csv(std::ostream& os, const Table& t, int precision) {
    bool first = true;
    for (const auto& c : t.columns) {
        if (c.kind == Kind::complex) {
            os << (first ? "" : ",") << c.name << "_re," << c.name << "_im";
        } else {
            os << (first ? "" : ",") << c.name;
        }
        first = false;
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            const Kind kind = t.columns[i].kind;
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, std::monostate>) {
                        if (kind == Kind::complex) os << ',';
                    } else if constexpr (std::is_same_v<V, long>) {
                        os << v;
                    } else if constexpr (std::is_same_v<V, double>) {
                        os << format_number(v, kind, precision);
                    } else if constexpr (std::is_same_v<V, cplx>) {
                        os << format_number(v.real(), Kind::fixed, precision) << ','
                           << format_number(v.imag(), Kind::fixed, precision);
                    } else if constexpr (std::is_same_v<V, std::string>) {
                        os << v;
                    } else {
                        os << (v ? "true" : "false");
                    }
                },
                row[i]);
        }
        os << '\n';
    }
    for (const auto& [key, value] : t.extras) os << "# " << key << '=' << value.dump() << '\n';
}

ordered_json table_json(const Table& t, int precision) {
    ordered_json results = ordered_json::array();
    for (const auto& row : t.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const auto& col = t.columns[i];
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, std::monostate>) {
                        obj[col.name] = nullptr;
                    } else if constexpr (std::is_same_v<V, long>) {
                        obj[col.name] = v;
                    } else if constexpr (std::is_same_v<V, double>) {
                        obj[col.name] = json_number(v, col.kind, precision);
                    } else if constexpr (std::is_same_v<V, cplx>) {
                        obj[col.name] = {{"re", json_number(v.real(), Kind::fixed, precision)},
                                         {"im", json_number(v.imag(), Kind::fixed, precision)}};
                    } else {
                        obj[col.name] = v;
                    }
                },
                row[i]);
        }
        results.push_back(std::move(obj));
    }
    return results;
}

// ------------------------------------------------------------------ config

struct RunConfig {
    double gamma = 0.5;
    std::optional<double> omega;
    std::optional<double> kappa;
    double hbar = 1.0;
    int n_max = 5;
    int l_max = 5;
    int quad_points = 200;
    std::optional<double> tolerance;
    std::string format = "csv";
    std::string output;
    int precision = 6;

    PhysicalParams params() const {
        if (kappa) return make_params(gamma, *kappa, hbar);
        return make_params_from_omega(gamma, omega.value_or(2.0), hbar);
    }
};

ordered_json config_json(const RunConfig& c, const std::string& command, const PhysicalParams& p) {
    ordered_json j;
    j["command"] = command;
    j["gamma"] = p.gamma;
    j["omega"] = p.omega;
    j["kappa"] = p.kappa;
    j["hbar"] = p.hbar;
    j["n_max"] = c.n_max;
    j["l_max"] = c.l_max;
    j["quad_points"] = c.quad_points;
    j["tolerance"] = c.tolerance ? ordered_json(*c.tolerance) : ordered_json(nullptr);
    j["precision"] = c.precision;
    return j;
}

cplx parse_complex(const std::string& s) {
    std::stringstream in(s);
    std::string re, im;
    std::getline(in, re, ',');
    std::getline(in, im);
    try {
        std::size_t used = 0;
        const double r = std::stod(re, &used);
        if (used != re.size()) throw std::invalid_argument(s);
        double i = 0.0;
        if (!im.empty()) {
            i = std::stod(im, &used);
            if (used != im.size()) throw std::invalid_argument(s);
        }
        return {r, i};
    } catch (const std::exception&) {
        throw UsageError("cannot parse complex number '" + s + "' (expected re or re,im)");
    }
}

/// "start:stop:count" or a comma-separated list.
std::vector<double> parse_grid(const std::string& s) {
    std::vector<double> out;
    try {
        if (s.find(':') != std::string::npos) {
            std::stringstream in(s);
            std::string a, b, n;
            std::getline(in, a, ':');
            std::getline(in, b, ':');
            std::getline(in, n);
            const double lo = std::stod(a), hi = std::stod(b);
            const int count = std::stoi(n);
            if (count < 1) throw std::invalid_argument(s);
            for (int i = 0; i < count; ++i) out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
        } else {
            std::stringstream in(s);
            std::string item;
            while (std::getline(in, item, ',')) out.push_back(std::stod(item));
        }
    } catch (const std::exception&) {
        throw UsageError("cannot parse grid '" + s + "' (expected start:stop:count or a list)");
    }
    if (out.empty()) throw UsageError("empty grid '" + s + "'");
    return out;
}

int worker_count(std::size_t jobs) {
    int n = int(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("BATRES_THREADS")) {
        try {
            n = std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            throw UsageError("BATRES_THREADS must be a positive integer");
        }
    }
    return int(std::min<std::size_t>(std::size_t(n), std::max<std::size_t>(jobs, 1)));
}

// ------------------------------------------------------------------ commands

Table cmd_verify(const std::vector<std::string>& requested, const RunConfig& cfg, const PhysicalParams& p) {
    std::vector<std::string> list;
    for (const auto& s : requested) {
        if (s == "all") {
            list.insert(list.end(), suites::names().begin(), suites::names().end());
        } else if (std::find(suites::names().begin(), suites::names().end(), s) != suites::names().end()) {
            list.push_back(s);
        } else {
            throw UsageError("unknown suite '" + s + "'");
        }
    }
    suites::Options opt;
    opt.params = p;
    opt.quad_points = cfg.quad_points;
    opt.tolerance = cfg.tolerance;

    std::vector<std::vector<suites::Check>> results(list.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < list.size();) results[i] = suites::run(list[i], opt);
    };
    std::vector<std::thread> pool;
    const int workers = worker_count(list.size());
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    Table t;
    t.columns = {{"suite", Kind::text}, {"check", Kind::text}, {"error", Kind::sci}, {"tolerance", Kind::sci},
                 {"status", Kind::text}};
    for (const auto& suite : results)
        for (const auto& c : suite) {
            t.rows.push_back({c.suite, c.name, c.error, c.tolerance, std::string(c.passed ? "PASS" : "FAIL")});
            (c.passed ? t.passed : t.failed) += 1;
            t.max_error = std::max(t.max_error, c.error);
        }
    return t;
}

Table cmd_spectrum(const RunConfig& cfg, const PhysicalParams& p) {
    Table t;
    t.columns = {{"n", Kind::integer}, {"l", Kind::integer}, {"E_plus", Kind::complex}, {"E_minus", Kind::complex},
                 {"E_hyperbolic", Kind::complex}};
    for (int n = 0; n <= cfg.n_max; ++n)
        for (int l = -cfg.l_max; l <= cfg.l_max; ++l) {
            Cell h = std::monostate{};
            if (l >= 0) h = hyperbolic_discrete(n, l, p).energy.value;
            t.rows.push_back({long(n), long(l), bateman_resonance_energy({n, l}, Sign::plus, p).value,
                              bateman_resonance_energy({n, l}, Sign::minus, p).value, h});
        }
    return t;
}

Table cmd_resonances(const RunConfig& cfg, const PhysicalParams& p, double extent, int re_points) {
    // Scan Re eps on an odd grid through 0 and Im eps on half-steps of gamma hbar.
    const double gh = p.gamma * p.hbar;
    const int im_steps = 2 * (2 * cfg.n_max + cfg.l_max + 1);
    Table t;
    t.columns = {{"n", Kind::integer}, {"l", Kind::integer}, {"epsilon", Kind::complex}, {"E", Kind::complex}};
    int probes = 0;
    for (int l = -cfg.l_max; l <= cfg.l_max; ++l)
        for (int j = 1; j <= im_steps; ++j)
            for (int i = 0; i < re_points; ++i) {
                const double re = re_points == 1 ? 0.0 : extent * gh * (-1.0 + 2.0 * i / (re_points - 1));
                const cplx eps(re, 0.5 * gh * j);
                ++probes;
                try {
                    normalization_constant({eps, l}, p);
                } catch (const PoleAtResonance& e) {
                    if (e.n() > cfg.n_max) continue;
                    t.rows.push_back({long(e.n()), long(e.l()), eps, eps + p.hbar * p.omega * l});
                }
            }
    const int expected = (cfg.n_max + 1) * (2 * cfg.l_max + 1);
    t.extras = {{"probes", probes}, {"detected", int(t.rows.size())}, {"expected_lattice", expected}};
    (int(t.rows.size()) == expected ? t.passed : t.failed) = 1;
    return t;
}

RadialFunction test_function(const std::string& kind, int l, const std::vector<double>& poly, double width,
                             const PhysicalParams& p) {
    if (kind == "battery") return test_battery(l, 0, p)[0];
    if (kind == "resonance") {
        RadialFunction f = resonance_state({0, l}, Sign::minus, p).radial;
        return f.plus(resonance_state({1, l}, Sign::minus, p).radial.scaled(0.5));
    }
    if (kind == "poly") {
        if (poly.empty()) throw UsageError("--function poly needs --poly coefficients");
        if (!(width > 0.0)) throw UsageError("--width must be positive");
        const double w = width * p.gamma / p.hbar;
        return RadialFunction::custom(
            l,
            [poly, w](cplx r) {
                cplx s = 0.0;
                for (auto it = poly.rbegin(); it != poly.rend(); ++it) s = s * r + *it;
                return s * std::exp(-w * r * r);
            },
            cplx(w));
    }
    throw UsageError("unknown --function '" + kind + "' (battery, resonance, poly)");
}

Table cmd_evolve(const RunConfig& cfg, const PhysicalParams& p, const std::vector<double>& times,
                 const RadialFunction& phi) {
    ExpandOptions eo;
    eo.points = cfg.quad_points;
    const auto e0 = expand({phi}, Sign::minus, {cfg.n_max, cfg.l_max}, p, eo);
    Table t;
    t.columns = {{"t", Kind::fixed},  {"n", Kind::integer}, {"l", Kind::integer}, {"c", Kind::complex},
                 {"abs", Kind::fixed}, {"ratio", Kind::fixed}};
    for (double time : times) {
        if (time < 0.0) throw UsageError("the decay semigroup needs t >= 0");
        const auto et = evolve(e0, time);
        for (const auto& [key, c] : et.coefficients) {
            const double c0 = std::abs(e0.coefficients.at(key));
            Cell ratio = std::monostate{};
            if (c0 > 0.0) ratio = std::abs(c) / c0;
            t.rows.push_back({time, long(key.first), long(key.second), c, std::abs(c), ratio});
        }
    }
    return t;
}

Table cmd_compare(const RunConfig& cfg, const PhysicalParams& p) {
    const auto rep = representation_report(cfg.n_max, cfg.l_max, p);
    Table t;
    t.columns = {{"n", Kind::integer},        {"l", Kind::integer},     {"E_plus", Kind::complex},
                 {"E_minus", Kind::complex}, {"E_hyperbolic", Kind::complex}, {"match", Kind::flag}};
    int matches = 0;
    for (const auto& r : rep.rows) {
        t.rows.push_back({long(r.n), long(r.l), r.e_plus, r.e_minus, r.e_hyperbolic, r.match});
        matches += r.match;
    }
    t.extras = {{"matches", matches},
                {"elliptic_lattice_size", rep.elliptic_lattice_size},
                {"elliptic_poles", rep.elliptic_poles},
                {"elliptic_off_lattice_poles", rep.elliptic_off_lattice},
                {"hyperbolic_probes", rep.hyperbolic_probes},
                {"hyperbolic_poles", rep.hyperbolic_poles}};
    return t;
}

RadialFunction family_function(const std::string& family, int n, int l, cplx epsilon, cplx nu, double Omega,
                               const PhysicalParams& p) {
    if (family == "ho") return ho_radial({n, l}, Omega > 0.0 ? Omega : p.omega, p.hbar).radial;
    if (family == "iho_plus") return resonance_state({n, l}, Sign::plus, p).radial;
    if (family == "iho_minus") return resonance_state({n, l}, Sign::minus, p).radial;
    if (family == "continuum") return continuum_eigenfunction({epsilon, l}, p).radial;
    if (family == "hyperbolic_cont") return hyperbolic_continuum({epsilon, nu}, p);
    if (family == "hyperbolic_disc") return hyperbolic_discrete(n, l, p).radial;
    throw UsageError("unknown family '" + family +
                     "' (ho, iho_plus, iho_minus, continuum, hyperbolic_cont, hyperbolic_disc)");
}

Table cmd_eval(const RadialFunction& f, const std::vector<double>& grid) {
    Table t;
    t.columns = {{"rho", Kind::fixed}, {"value", Kind::complex}};
    for (double r : grid) {
        if (r < 0.0) throw UsageError("rho must be nonnegative");
        t.rows.push_back({r, f(r)});
    }
    return t;
}

void emit(const Table& t, const RunConfig& cfg, const std::string& command, const PhysicalParams& p) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!cfg.output.empty()) {
        file.open(cfg.output, std::ios::binary);
        if (!file) throw UsageError("cannot open output file '" + cfg.output + "'");
        os = &file;
    }
    if (cfg.format == "json") {
        ordered_json j;
        j["config"] = config_json(cfg, command, p);
        j["results"] = table_json(t, cfg.precision);
        for (const auto& [key, value] : t.extras) j[key] = value;
        j["summary"] = {{"passed", t.passed},
                        {"failed", t.failed},
                        {"max_error", json_number(t.max_error, Kind::sci, cfg.precision)}};
        *os << j.dump(2) << '\n';
    } else {
        write_csv(*os, t, cfg.precision);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resonance spectra and spectral checks for the Bateman damped oscillator"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file; command-line flags take precedence");

    RunConfig cfg;
    double omega = 0.0, kappa = 0.0;
    double tolerance = 0.0;
    auto* o_omega = app.add_option("--omega", omega, "rotation frequency (default 2)");
    auto* o_kappa = app.add_option("--kappa", kappa, "omega^2 + gamma^2");
    o_omega->excludes(o_kappa);
    app.add_option("--gamma", cfg.gamma, "damping constant")->capture_default_str();
    app.add_option("--hbar", cfg.hbar, "Planck constant")->capture_default_str();
    app.add_option("--n-max", cfg.n_max, "radial truncation")->check(CLI::NonNegativeNumber)->capture_default_str();
    app.add_option("--l-max", cfg.l_max, "angular truncation")->check(CLI::NonNegativeNumber)->capture_default_str();
    app.add_option("--quad-points", cfg.quad_points, "Gauss-Laguerre points")
        ->check(CLI::Range(8, 2000))
        ->capture_default_str();
    auto* o_tol = app.add_option("--tolerance", tolerance, "override agreement tolerances in verify")
                      ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output,-o", cfg.output, "output file (default stdout)");
    app.add_option("--precision", cfg.precision, "decimals in output")->check(CLI::Range(0, 15))->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->fallthrough();
    std::vector<std::string> suite_list;
    verify->add_option("suite", suite_list, "identities, oscillator, biortho, continuum, projectors, semigroup, "
                                            "hyperbolic, or all")
        ->required();

    auto* spectrum = app.add_subcommand("spectrum", "E+-_nl lattice and the hyperbolic family");
    spectrum->fallthrough();

    auto* resonances = app.add_subcommand("resonances", "locate normalization poles in the complex energy plane");
    resonances->fallthrough();
    bool probe = false;
    double extent = 2.0;
    int re_points = 9;
    resonances->add_flag("--probe", probe, "scan for poles")->required();
    resonances->add_option("--re-extent", extent, "Re eps range in units of gamma hbar")->capture_default_str();
    resonances->add_option("--re-points", re_points, "points across Re eps (odd includes 0)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* evolve_cmd = app.add_subcommand("evolve", "decay curves |c_nl(t)| under the minus semigroup");
    evolve_cmd->fallthrough();
    std::vector<double> t_values;
    std::string t_grid, function = "battery", poly_text;
    int fl = 0;
    double width = 1.0;
    auto* o_t = evolve_cmd->add_option("--t", t_values, "time(s)");
    auto* o_grid = evolve_cmd->add_option("--t-grid", t_grid, "start:stop:count or list");
    o_t->excludes(o_grid);
    evolve_cmd->add_option("--function", function, "battery, resonance or poly")->capture_default_str();
    evolve_cmd->add_option("--l", fl, "angular index of the test function")->capture_default_str();
    evolve_cmd->add_option("--poly", poly_text, "coefficients c0,c1,... of sum c_k rho^k e^{-w gamma rho^2/hbar}");
    evolve_cmd->add_option("--width", width, "w in the poly test function")->capture_default_str();

    auto* compare = app.add_subcommand("compare-reps", "elliptic vs hyperbolic eigenvalue table");
    compare->fallthrough();

    auto* eval = app.add_subcommand("eval", "tabulate a radial function");
    eval->fallthrough();
    std::string family, at = "0:3:31", eps_text = "0", nu_text = "0";
    int en = 0, el = 0;
    double Omega = 0.0;
    eval->add_option("--family", family, "ho, iho_plus, iho_minus, continuum, hyperbolic_cont, hyperbolic_disc")
        ->required();
    eval->add_option("--at", at, "rho grid, start:stop:count or list")->capture_default_str();
    eval->add_option("--n", en, "radial quantum number")->capture_default_str();
    eval->add_option("--l", el, "angular index")->capture_default_str();
    eval->add_option("--epsilon", eps_text, "energy, re or re,im")->capture_default_str();
    eval->add_option("--nu", nu_text, "boost label, re or re,im")->capture_default_str();
    eval->add_option("--Omega", Omega, "oscillator frequency for ho (default omega)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    PhysicalParams params{};
    std::string command;
    Table table;
    try {
        if (o_omega->count()) cfg.omega = omega;
        if (o_kappa->count()) cfg.kappa = kappa;
        if (o_tol->count()) cfg.tolerance = tolerance;
        params = cfg.params();
        if (verify->parsed()) {
            command = "verify";
            table = cmd_verify(suite_list, cfg, params);
        } else if (spectrum->parsed()) {
            command = "spectrum";
            table = cmd_spectrum(cfg, params);
        } else if (resonances->parsed()) {
            command = "resonances";
            table = cmd_resonances(cfg, params, extent, re_points);
        } else if (evolve_cmd->parsed()) {
            command = "evolve";
            std::vector<double> times = t_values;
            if (!t_grid.empty()) times = parse_grid(t_grid);
            if (times.empty()) times = {0.0, 1.0};
            std::vector<double> poly;
            if (!poly_text.empty()) poly = parse_grid(poly_text);
            table = cmd_evolve(cfg, params, times, test_function(function, fl, poly, width, params));
        } else if (compare->parsed()) {
            command = "compare-reps";
            table = cmd_compare(cfg, params);
        } else {
            command = "eval";
            table = cmd_eval(family_function(family, en, el, parse_complex(eps_text), parse_complex(nu_text), Omega,
                                             params),
                             parse_grid(at));
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NonPositive& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const OverdampedRegime& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NegativeAngularIndex& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        emit(table, cfg, command, params);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return table.failed > 0 ? 1 : 0;
}
