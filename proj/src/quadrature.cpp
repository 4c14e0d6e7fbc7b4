#include "batres/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "batres/errors.hpp"

namespace batres {

namespace {

constexpr double kPi = std::numbers::pi;

// QUADPACK qk15 abscissae and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    cplx value;
    double error;
    bool limited;  ///< error estimate is at the round-off floor; bisecting will not help
    double key() const { return limited ? -1.0 : error; }
    bool operator<(const Segment& other) const { return key() < other.key(); }
};

Segment gk15(const std::function<cplx(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const cplx fc = f(center);
    cplx kronrod = fc * kWgk[7];
    cplx gauss = fc * kWg[3];
    double resabs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const cplx f1 = f(center - dx);
        const cplx f2 = f(center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    kronrod *= half;
    gauss *= half;
    const double diff = std::abs(kronrod - gauss);
    const double floor = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(half) * resabs;
    return {a, b, kronrod, std::max(diff, floor), diff <= floor};
}

// L^alpha_n(x) and L^alpha_{n-1}(x) with a common power-of-two rescaling,
// returned as (L_n, L_{n-1}, log of the scale that was divided out).
struct ScaledLaguerre {
    double pn, pn1, log_scale;
};

ScaledLaguerre scaled_laguerre(int n, double alpha, double x) {
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    double log_scale = 0.0;
    if (n == 0) return {1.0, 0.0, 0.0};
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        if (std::abs(cur) > 1e150) {
            cur *= 1e-150;
            prev *= 1e-150;
            log_scale += 150.0 * std::log(10.0);
        }
    }
    return {cur, prev, log_scale};
}

}  // namespace

QuadratureRule gauss_laguerre_rule(int n, double alpha) {
    if (n < 1) throw DomainError("gauss_laguerre_rule: n_points must be >= 1");
    if (!(alpha > -1.0)) throw DomainError("gauss_laguerre_rule: alpha must be > -1");

    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(k * (k + alpha));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw ConvergenceFailure("Golub-Welsch eigensolver failed");

    QuadratureRule rule;
    rule.alpha = alpha;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.log_weights.resize(n);
    const double log_norm = std::lgamma(n + alpha + 1.0) - std::lgamma(n + 1.0);
    for (int i = 0; i < n; ++i) {
        double x = solver.eigenvalues()[i];
        // Stop at the round-off floor of the recurrence, which is absolute
        // (about 1e-15) for small nodes and relative for large ones.
        bool converged = false;
        double last = std::numeric_limits<double>::infinity();
        for (int it = 0; it < 50; ++it) {
            const auto p = scaled_laguerre(n, alpha, x);
            const double deriv = (n * p.pn - (n + alpha) * p.pn1) / x;
            const double dx = p.pn / deriv;
            const double floor = std::max(1.0, std::abs(x));
            if (std::abs(dx) <= 1e-14 * floor || (std::abs(dx) >= last && std::abs(dx) <= 1e-11 * floor)) {
                converged = true;
                break;
            }
            x -= dx;
            last = std::abs(dx);
        }
        if (!converged) throw ConvergenceFailure("Gauss-Laguerre node polishing did not converge");
        const auto p = scaled_laguerre(n, alpha, x);
        // w = Gamma(n+alpha+1) x / (n! (n+alpha)^2 L_{n-1}(x)^2)
        const double log_w = log_norm + std::log(x) - 2.0 * std::log(n + alpha) -
                             2.0 * (std::log(std::abs(p.pn1)) + p.log_scale);
        // Where the eigenvector weight Gamma(alpha+1) v_0^2 is well above its
        // absolute round-off it is the more accurate of the two.
        const double v0 = solver.eigenvectors()(0, i);
        if (v0 * v0 > 1e-6) rule.log_weights[i] = std::lgamma(alpha + 1.0) + std::log(v0 * v0);
        else rule.log_weights[i] = log_w;
        rule.nodes[i] = x;
        rule.weights[i] = std::exp(rule.log_weights[i]);
    }
    return rule;
}

void validate(const ContourSpec& spec) {
    if (const auto* ray = std::get_if<RaySpec>(&spec)) {
        if (!(std::abs(ray->theta) < 0.5 * kPi)) throw DomainError("ray: |theta| must be < pi/2");
        if (!(ray->eta >= 0.0)) throw DomainError("ray: eta must be >= 0");
        if (ray->ladder > 0 && !(ray->eta > 0.0)) throw DomainError("ray: a ladder needs eta > 0");
        if (ray->ladder > 0 && !(ray->ladder_ratio > 0.0 && ray->ladder_ratio != 1.0))
            throw DomainError("ray: ladder ratio must be positive and != 1");
    } else if (const auto* circle = std::get_if<CircleSpec>(&spec)) {
        if (!(circle->radius > 0.0)) throw DomainError("circle: radius must be > 0");
        if (circle->nodes < 16) throw DomainError("circle: nodes must be >= 16");
    } else if (const auto* lag = std::get_if<LaguerreSpec>(&spec)) {
        if (lag->points < 1) throw DomainError("laguerre: points must be >= 1");
        if (!(lag->scale > 0.0)) throw DomainError("laguerre: scale must be > 0");
        if (!(std::abs(lag->theta) < 0.5 * kPi)) throw DomainError("laguerre: |theta| must be < pi/2");
    }
}

IntegrationResult integrate_interval(const std::function<cplx(double)>& f, double a, double b,
                                     double abs_tol, double rel_tol, int max_intervals) {
    std::priority_queue<Segment> heap;
    Segment first = gk15(f, a, b);
    cplx total = first.value;
    double error = first.error;
    heap.push(first);
    int count = 1;
    while (error > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (heap.top().limited) break;  // only round-off left
        if (count >= max_intervals)
            throw NonConvergent("adaptive quadrature: interval budget exhausted above tolerance");
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
        if (mid == worst.a || mid == worst.b) break;  // interval exhausted at machine precision
    }
    // Re-sum to drop the drift from incremental updates.
    cplx sum = 0.0;
    double err = 0.0;
    std::vector<Segment> segments;
    segments.reserve(heap.size());
    while (!heap.empty()) {
        segments.push_back(heap.top());
        heap.pop();
    }
    std::sort(segments.begin(), segments.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    for (const auto& s : segments) {
        sum += s.value;
        err += s.error;
    }
    return {sum, err};
}

namespace {

cplx ray_single(const std::function<cplx(cplx)>& f, const RaySpec& spec, double eta) {
    const cplx dir = std::polar(1.0, spec.theta);
    auto integrand = [&](double s) -> cplx {
        const cplx value = f(dir * s) * dir;
        return eta > 0.0 ? value * std::exp(-eta * s * s) : value;
    };
    const double tol = spec.tolerance;
    if (spec.rmax > 0.0) return integrate_interval(integrand, 0.0, spec.rmax, tol).value;

    // Adaptive cut-off: extend in doubling segments until two consecutive
    // segment contributions fall below 1% of the tolerance.
    double lo = 0.0;
    double hi = 4.0;
    cplx total = 0.0;
    int quiet = 0;
    for (int seg = 0; seg < 40; ++seg) {
        const auto piece = integrate_interval(integrand, lo, hi, 0.25 * tol);
        total += piece.value;
        if (std::abs(piece.value) < 0.01 * tol && seg > 0) {
            if (++quiet == 2) return total;
        } else {
            quiet = 0;
        }
        lo = hi;
        hi *= 2.0;
    }
    throw NonConvergent("ray integral: tail did not decay");
}

}  // namespace

cplx integrate_ray(const std::function<cplx(cplx)>& f, const RaySpec& spec) {
    validate(spec);
    if (spec.ladder <= 0) return ray_single(f, spec, spec.eta);
    std::vector<cplx> xs, ys;
    for (int k = 0; k <= spec.ladder; ++k) {
        const double eta = spec.eta * std::pow(spec.ladder_ratio, k);
        xs.push_back(spec.regulator_pole ? 1.0 / (eta - *spec.regulator_pole) : cplx(eta));
        ys.push_back(ray_single(f, spec, eta));
    }
    const cplx target = spec.regulator_pole ? -1.0 / *spec.regulator_pole : cplx(0.0);
    return neville_extrapolate(xs, ys, target);
}

cplx contour_integral_circle(const std::function<cplx(cplx)>& f, const CircleSpec& spec) {
    validate(spec);
    auto trapezoid = [&](int nodes) {
        cplx sum = 0.0;
        for (int j = 0; j < nodes; ++j) {
            const cplx e = std::polar(1.0, 2.0 * kPi * j / nodes);
            sum += f(spec.center + spec.radius * e) * e;
        }
        return sum * cplx(0.0, spec.radius * 2.0 * kPi / nodes);
    };
    int nodes = spec.nodes;
    cplx value = trapezoid(nodes);
    if (spec.adaptive) {
        for (;;) {
            if (nodes >= (1 << 16)) throw NonConvergent("circle quadrature did not settle");
            nodes *= 2;
            const cplx refined = trapezoid(nodes);
            const bool settled = std::abs(refined - value) <= spec.tolerance * std::max(1.0, std::abs(refined));
            value = refined;
            if (settled) break;
        }
    }
    return spec.orientation == Orientation::cw ? -value : value;
}

cplx integrate_radial_laguerre(const std::function<cplx(cplx)>& f, const LaguerreSpec& spec) {
    validate(spec);
    static thread_local int cached_points = -1;
    static thread_local QuadratureRule cached;
    if (cached_points != spec.points) {
        cached = gauss_laguerre_rule(spec.points, 0.0);
        cached_points = spec.points;
    }
    const cplx dir = std::polar(1.0, spec.theta);
    cplx sum = 0.0;
    for (std::size_t i = 0; i < cached.size(); ++i) {
        const double t = cached.nodes[i];
        const cplx value = f(dir * std::sqrt(t / spec.scale));
        if (value == cplx(0.0)) continue;
        sum += std::exp(cached.log_weights[i] + t) * value;
    }
    return sum * dir * dir / (2.0 * spec.scale);
}

cplx neville_extrapolate(std::span<const cplx> xs, std::span<const cplx> ys, cplx x0) {
    std::vector<cplx> p(ys.begin(), ys.end());
    const std::size_t n = p.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            p[i] = ((x0 - xs[i - j]) * p[i] - (x0 - xs[i]) * p[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    return p[n - 1];
}

}  // namespace batres
