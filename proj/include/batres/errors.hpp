#pragma once

#include <stdexcept>
#include <string>

namespace batres {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 2 when they come from argument validation and to 1 otherwise.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// params_transforms
class OverdampedRegime : public Error {
public:
    using Error::Error;
};
class NonPositive : public Error {
public:
    using Error::Error;
};
class UnsupportedPath : public Error {
public:
    using Error::Error;
};

// special_functions
class PoleAtNonpositiveInteger : public Error {
public:
    PoleAtNonpositiveInteger(long index, const std::string& what)
        : Error(what), index_(index) {}
    long index() const noexcept { return index_; }

private:
    long index_;
};
class ParameterPole : public Error {
public:
    using Error::Error;
};
class DomainError : public Error {
public:
    using Error::Error;
};
class DivergentAtUnitArgument : public Error {
public:
    using Error::Error;
};
class SeriesDomain : public Error {
public:
    using Error::Error;
};

// quadrature
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};
class NonConvergent : public Error {
public:
    using Error::Error;
};

// continuum_spectrum / resonance_engine / hyperbolic_rep
class PoleAtResonance : public Error {
public:
    PoleAtResonance(int n, int l, const std::string& what)
        : Error(what), n_(n), l_(l) {}
    int n() const noexcept { return n_; }
    int l() const noexcept { return l_; }

private:
    int n_;
    int l_;
};
class NearPole : public Error {
public:
    using Error::Error;
};
class SemigroupDomain : public Error {
public:
    using Error::Error;
};
class NegativeAngularIndex : public Error {
public:
    using Error::Error;
};

}  // namespace batres
