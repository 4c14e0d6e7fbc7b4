#include "batres/radial_function.hpp"

namespace batres {

std::string to_string(Family family) {
    switch (family) {
        case Family::ho: return "ho";
        case Family::iho_plus: return "iho_plus";
        case Family::iho_minus: return "iho_minus";
        case Family::continuum: return "continuum";
        case Family::hyperbolic_cont: return "hyperbolic_cont";
        case Family::hyperbolic_disc: return "hyperbolic_disc";
        case Family::custom: return "custom";
    }
    return "?";
}

RadialFunction RadialFunction::custom(std::optional<int> l, Evaluator eval, std::optional<cplx> gaussian) {
    RadialLabels labels;
    labels.l = l;
    return RadialFunction(Family::custom, labels, std::nullopt, std::move(eval)).with_gaussian(gaussian);
}

RadialFunction RadialFunction::conjugated() const {
    RadialFunction out = *this;
    Evaluator inner = eval_;
    out.eval_ = [inner](cplx z) { return std::conj(inner(std::conj(z))); };
    if (gauss_) out.gauss_ = std::conj(*gauss_);
    return out;
}

RadialFunction RadialFunction::scaled(cplx factor) const {
    RadialFunction out = *this;
    Evaluator inner = eval_;
    out.eval_ = [inner, factor](cplx z) { return factor * inner(z); };
    out.family_ = Family::custom;
    return out;
}

RadialFunction RadialFunction::plus(const RadialFunction& other) const {
    RadialLabels labels;
    if (labels_.l == other.labels_.l) labels.l = labels_.l;
    Evaluator a = eval_, b = other.eval_;
    RadialFunction out(Family::custom, labels, params_, [a, b](cplx z) { return a(z) + b(z); });
    if (gauss_ && other.gauss_ && *gauss_ == *other.gauss_) out.gauss_ = gauss_;
    return out;
}

}  // namespace batres
