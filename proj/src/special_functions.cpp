#include "batres/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "batres/errors.hpp"

namespace batres {

namespace {

using lcplx = std::complex<long double>;

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 671/128 with 14 terms; relative error below
// 1e-15 for Re z >= 1/2.
constexpr double kLanczosG = 5.24218750000000000;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

cplx log_gamma_right(cplx z) {
    cplx tmp = z + kLanczosG;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    cplx ser = kLanczosC0;
    cplx y = z;
    for (double c : kLanczos) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(2.5066282746310005 * ser / z);
}

bool is_zero(cplx z) { return z.real() == 0.0 && z.imag() == 0.0; }

// sin(pi z) with the real part reduced to [-1/2, 1/2] first, so that values
// near the integers keep full relative accuracy.
cplx sin_pi(cplx z) {
    const double k = std::round(z.real());
    const cplx s = std::sin(kPi * cplx(z.real() - k, z.imag()));
    return std::fmod(k, 2.0) == 0.0 ? s : -s;
}

// Minimal complex arithmetic over __float128; only what the series needs.
struct qcplx {
    __float128 re, im;
};
qcplx operator+(qcplx x, qcplx y) { return {x.re + y.re, x.im + y.im}; }
qcplx operator*(qcplx x, qcplx y) { return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}; }
qcplx operator/(qcplx x, qcplx y) {
    const __float128 d = y.re * y.re + y.im * y.im;
    return {(x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d};
}
__float128 norm2(qcplx x) { return x.re * x.re + x.im * x.im; }
qcplx to_q(cplx z) { return {z.real(), z.imag()}; }

// Maclaurin series of 1F1. Stops after three consecutive terms below 1e-16
// of the partial sum, or exactly when a term vanishes (terminating case).
// Summed in long double; when the largest term exceeds the result by more
// than 1e3 the cancellation would eat the guard digits, so the sum is
// repeated in __float128.
template <class C, class R>
bool maclaurin_sum(C a, C b, C z, C& sum_out, R& max_term) {
    C term = C(1.0L);
    C sum = C(1.0L);
    max_term = 1.0L;
    int small = 0;
    for (int k = 0; k < 20000; ++k) {
        const R kk = static_cast<R>(k);
        term = term * ((a + C(kk)) / (b + C(kk))) * (z / C(kk + R(1)));
        sum = sum + term;
        const R t = std::abs(term);
        if (t > max_term) max_term = t;
        if (t == R(0)) break;
        if (t < R(1e-16) * std::abs(sum)) {
            if (++small == 3) break;
        } else {
            small = 0;
        }
        if (k == 19999) return false;
    }
    sum_out = sum;
    return true;
}

cplx maclaurin_quad(cplx a, cplx b, cplx z) {
    const qcplx qa = to_q(a), qb = to_q(b), qz = to_q(z);
    qcplx term{1, 0}, sum{1, 0};
    int small = 0;
    for (int k = 0; k < 20000; ++k) {
        const qcplx kk{static_cast<__float128>(k), 0};
        term = term * ((qa + kk) / (qb + kk)) * (qz / (kk + qcplx{1, 0}));
        sum = sum + term;
        const __float128 t = norm2(term);
        if (t == 0) return cplx(double(sum.re), double(sum.im));
        if (t < static_cast<__float128>(1e-64) * norm2(sum)) {
            if (++small == 3) return cplx(double(sum.re), double(sum.im));
        } else {
            small = 0;
        }
    }
    throw ConvergenceFailure("1F1 Maclaurin series did not converge");
}

cplx maclaurin_1f1(cplx a, cplx b, cplx z) {
    const lcplx la(a.real(), a.imag()), lb(b.real(), b.imag()), lz(z.real(), z.imag());
    lcplx sum;
    long double max_term = 0.0L;
    if (!maclaurin_sum<lcplx, long double>(la, lb, lz, sum, max_term))
        throw ConvergenceFailure("1F1 Maclaurin series did not converge");
    if (max_term > 1e3L * std::abs(sum)) return maclaurin_quad(a, b, z);
    return cplx(double(sum.real()), double(sum.imag()));
}

// Large-|z| expansion for Re z >= 0 (two divergent series, each cut at its
// smallest term). Returns nullopt when the truncation error estimate
// exceeds a few ulps of the result.
std::optional<cplx> hyp1f1_asymptotic(cplx a, cplx b, cplx z) {
    auto sum = [&](cplx p, cplx q, cplx w, double& last) {
        cplx term = 1.0, total = 1.0;
        last = 1.0;
        for (int s = 0; s < 200; ++s) {
            const cplx next = term * (p + double(s)) * (q + double(s)) / (double(s + 1) * w);
            if (std::abs(next) >= std::abs(term)) break;
            term = next;
            total += term;
            last = std::abs(term);
            if (last < 1e-18 * std::abs(total)) break;
        }
        return total;
    };
    double e1 = 0.0, e2 = 0.0;
    const cplx s1 = sum(1.0 - a, b - a, z, e1);
    const cplx s2 = sum(a, a - b + 1.0, -z, e2);
    const double sign = z.imag() >= 0.0 ? 1.0 : -1.0;
    const cplx f1 = rgamma(a) * std::exp(z + (a - b) * std::log(z));
    const cplx f2 = rgamma(b - a) * std::exp(cplx(0.0, sign * kPi) * a - a * std::log(z));
    const cplx result = gamma_complex(b) * (f1 * s1 + f2 * s2);
    const double err = std::abs(gamma_complex(b)) * (std::abs(f1) * e1 + std::abs(f2) * e2);
    if (!(err <= 4e-16 * std::abs(result))) return std::nullopt;
    return result;
}

void require_b_admissible(cplx b) {
    if (auto m = nonpositive_integer(b))
        throw ParameterPole("1F1: b = " + std::to_string(-*m) + " is a nonpositive integer");
}

// U(-n, c, z) = (-1)^n sum_k C(n,k) (c+k)_{n-k} (-z)^k; valid for every c.
// Alternating for real z > 0, so accumulated in long double.
cplx tricomi_polynomial(long n, cplx c, cplx z) {
    const lcplx lc(c.real(), c.imag()), lz(z.real(), z.imag());
    lcplx sum = 0.0L;
    long double binom = 1.0L;
    lcplx zpow = 1.0L;
    for (long k = 0; k <= n; ++k) {
        lcplx poch = 1.0L;
        for (long j = 0; j < n - k; ++j) poch *= lc + static_cast<long double>(k + j);
        sum += binom * poch * zpow;
        binom = binom * static_cast<long double>(n - k) / static_cast<long double>(k + 1);
        zpow *= -lz;
    }
    const cplx out(double(sum.real()), double(sum.imag()));
    return (n % 2 == 0) ? out : -out;
}

cplx tricomi_two_term(cplx a, cplx c, cplx z) {
    const cplx first = gamma_complex(1.0 - c) * rgamma(a - c + 1.0) * hyp1f1(a, c, z);
    const cplx second = gamma_complex(c - 1.0) * rgamma(a) * principal_pow(z, 1.0 - c) *
                        hyp1f1(a - c + 1.0, 2.0 - c, z);
    return first + second;
}

}  // namespace

std::optional<long> nonpositive_integer(cplx z) {
    if (z.imag() != 0.0) return std::nullopt;
    const double x = z.real();
    if (x > 0.0 || x != std::floor(x)) return std::nullopt;
    return static_cast<long>(-x);
}

cplx principal_pow(cplx z, cplx w) {
    if (is_zero(z)) {
        if (is_zero(w)) return 1.0;
        if (w.real() > 0.0) return 0.0;
        throw DomainError("0 raised to a power with Re <= 0");
    }
    return std::exp(w * std::log(z));
}

cplx gamma_complex(cplx z) {
    if (auto n = nonpositive_integer(z))
        throw PoleAtNonpositiveInteger(*n, "Gamma has a pole at z = " + std::to_string(-*n));
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
        return kPi / (sin_pi(z) * gamma_complex(1.0 - z));
    }
    return std::exp(log_gamma_right(z));
}

cplx rgamma(cplx z) {
    if (nonpositive_integer(z)) return 0.0;
    if (z.real() < 0.5) return sin_pi(z) * gamma_complex(1.0 - z) / kPi;
    return std::exp(-log_gamma_right(z));
}

cplx pochhammer(cplx a, int n) {
    cplx p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + double(k);
    return p;
}

cplx hyp1f1_series(cplx a, cplx b, cplx z) {
    require_b_admissible(b);
    if (is_zero(z)) return 1.0;
    return maclaurin_1f1(a, b, z);
}

cplx hyp1f1(cplx a, cplx b, cplx z) {
    require_b_admissible(b);
    if (is_zero(z)) return 1.0;
    if (nonpositive_integer(a)) return maclaurin_1f1(a, b, z);
    const bool flip = z.real() < 0.0;
    const cplx aa = flip ? b - a : a;
    const cplx zz = flip ? -z : z;
    const cplx scale = flip ? std::exp(z) : cplx(1.0);
    if (std::abs(zz) >= 25.0)
        if (auto v = hyp1f1_asymptotic(aa, b, zz)) return scale * *v;
    return scale * maclaurin_1f1(aa, b, zz);
}

cplx tricomi_u(cplx a, cplx c, cplx z) {
    if (auto n = nonpositive_integer(a)) return tricomi_polynomial(*n, c, z);
    if (is_zero(z)) throw DomainError("Tricomi U at z = 0 with non-polynomial parameters");
    if (auto n = nonpositive_integer(1.0 + a - c))
        return principal_pow(z, 1.0 - c) * tricomi_polynomial(*n, 2.0 - c, z);
    if (c.imag() == 0.0 && c.real() == std::round(c.real())) {
        constexpr double delta = 0x1p-20;  // exact in binary, so c +- delta and 1 - c stay exact
        return 0.5 * (tricomi_two_term(a, c + delta, z) + tricomi_two_term(a, c - delta, z));
    }
    return tricomi_two_term(a, c, z);
}

cplx laguerre(int n, cplx alpha, cplx z) {
    if (n < 0) throw DomainError("laguerre: n must be >= 0");
    cplx prev = 1.0;
    if (n == 0) return prev;
    cplx cur = 1.0 + alpha - z;
    for (int k = 1; k < n; ++k) {
        const double kk = k;
        const cplx next = ((2.0 * kk + 1.0 + alpha - z) * cur - (kk + alpha) * prev) / (kk + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

cplx gauss_2f1_at_1(cplx alpha, cplx beta, cplx gamma_p) {
    if (auto m = nonpositive_integer(gamma_p))
        throw ParameterPole("2F1: gamma = " + std::to_string(-*m) + " is a nonpositive integer");
    if (is_zero(alpha) || is_zero(beta)) return 1.0;
    // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c - b)_n / (c)_n
    if (auto n = nonpositive_integer(alpha)) return pochhammer(gamma_p - beta, int(*n)) / pochhammer(gamma_p, int(*n));
    if (auto n = nonpositive_integer(beta)) return pochhammer(gamma_p - alpha, int(*n)) / pochhammer(gamma_p, int(*n));
    const cplx excess = gamma_p - alpha - beta;
    if (excess.real() <= 0.0)
        throw DivergentAtUnitArgument("2F1(;1) diverges: Re(gamma - alpha - beta) <= 0");
    return gamma_complex(gamma_p) * gamma_complex(excess) * rgamma(gamma_p - alpha) * rgamma(gamma_p - beta);
}

cplx hyp2f1_series(cplx alpha, cplx beta, cplx gamma_p, cplx x) {
    if (auto m = nonpositive_integer(gamma_p))
        throw ParameterPole("2F1: gamma = " + std::to_string(-*m) + " is a nonpositive integer");
    if (std::abs(x) >= 1.0) throw SeriesDomain("2F1 series requires |x| < 1");
    const lcplx la(alpha.real(), alpha.imag()), lb(beta.real(), beta.imag());
    const lcplx lc(gamma_p.real(), gamma_p.imag()), lx(x.real(), x.imag());
    lcplx term = 1.0L, sum = 1.0L;
    int small = 0;
    for (int k = 0; k < 200000; ++k) {
        const long double kk = k;
        term *= (la + kk) * (lb + kk) / ((lc + kk) * (kk + 1.0L)) * lx;
        sum += term;
        if (term.real() == 0.0L && term.imag() == 0.0L) break;
        if (std::abs(term) < 1e-17L * std::abs(sum)) {
            if (++small == 3) break;
        } else {
            small = 0;
        }
        if (k == 199999) throw ConvergenceFailure("2F1 series did not converge");
    }
    return cplx(double(sum.real()), double(sum.imag()));
}

}  // namespace batres
