#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gradshape {

using Complex = std::complex<double>;

// Intrinsic (isothermal) coordinate z = u + iv.
using IntrinsicPoint = Complex;

inline constexpr double kPi = 3.14159265358979323846;

// Additive tolerance for slope-domain membership tests; all built-in
// slope domains are unit-scale.
inline constexpr double kBoundaryTol = 1e-12;

// |Im gamma| below this means the tangent-plane family is degenerate
// (frozen/boundary parameter).
inline constexpr double kDegenerateTol = 1e-12;

// A slope or parameter lies outside (or on the boundary of) the domain
// where the requested quantity is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The model does not provide the requested closed form.
class CapabilityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Degenerate envelope parameter: Im gamma ~ 0, the point is frozen.
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative solve failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gradshape
