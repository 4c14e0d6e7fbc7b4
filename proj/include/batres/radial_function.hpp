#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "batres/params.hpp"

namespace batres {

using cplx = std::complex<double>;

enum class Family { ho, iho_plus, iho_minus, continuum, hyperbolic_cont, hyperbolic_disc, custom };

std::string to_string(Family family);

/// Labels carried by a radial function. Discrete families use (n, l), the
/// continuum uses (epsilon, l), the hyperbolic continuum (epsilon, nu).
/// `Omega` is the oscillator frequency of the ho family.
struct RadialLabels {
    int n = 0;
    std::optional<int> l;
    cplx epsilon = 0.0;
    cplx nu = 0.0;
    double Omega = 0.0;
};

/// A radial profile f(rho) with its angular index and provenance.
///
/// The evaluator is an analytic function of complex rho, so the same object
/// serves the real axis and rotated contours. `conj_at` evaluates the
/// analytic conjugate f*(z) = conj(f(conj z)); on the real axis this is just
/// the complex conjugate of the value. Overlaps use f* as the bra, which is
/// the convention that lets bi-orthogonality integrals be contour-rotated.
class RadialFunction {
public:
    using Evaluator = std::function<cplx(cplx)>;

    RadialFunction() = default;
    RadialFunction(Family family, RadialLabels labels, std::optional<PhysicalParams> params, Evaluator eval)
        : family_(family), labels_(labels), params_(params), eval_(std::move(eval)) {}

    /// Free-form function for test batteries and user input.
    static RadialFunction custom(std::optional<int> l, Evaluator eval,
                                 std::optional<cplx> gaussian = std::nullopt);

    cplx operator()(double rho) const { return eval_(cplx(rho, 0.0)); }
    cplx at(cplx rho) const { return eval_(rho); }
    cplx conj_at(cplx rho) const { return std::conj(eval_(std::conj(rho))); }

    Family family() const { return family_; }
    const RadialLabels& labels() const { return labels_; }
    std::optional<int> angular_index() const { return labels_.l; }
    const std::optional<PhysicalParams>& params() const { return params_; }
    /// True after an odd number of time_reverse applications.
    bool time_reversed() const { return time_reversed_; }

    /// Analytic conjugate as a new function (coefficients conjugated).
    RadialFunction conjugated() const;

    /// Pointwise linear combination helpers; the angular index is kept only
    /// when both operands agree.
    RadialFunction scaled(cplx factor) const;
    RadialFunction plus(const RadialFunction& other) const;

    const Evaluator& evaluator() const { return eval_; }

    /// Exponent c of the Gaussian factor e^{-c rho^2} when the function is a
    /// polynomial (or slowly varying factor) times that Gaussian. Used to pick
    /// a contour on which a product of two such functions decays.
    std::optional<cplx> gaussian_exponent() const { return gauss_; }
    RadialFunction with_gaussian(std::optional<cplx> c) const {
        RadialFunction out = *this;
        out.gauss_ = c;
        return out;
    }

private:
    Family family_ = Family::custom;
    RadialLabels labels_{};
    std::optional<PhysicalParams> params_;
    Evaluator eval_;
    bool time_reversed_ = false;
    std::optional<cplx> gauss_;

    friend RadialFunction time_reverse(const RadialFunction& f);
};

}  // namespace batres
