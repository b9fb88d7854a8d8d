#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "gradshape/common.hpp"

namespace gradshape {

// Piecewise-constant data on the real line: value values[k] on the interval
// (jumps[k-1], jumps[k]), values.front() on (-inf, jumps.front()),
// values.back() on (jumps.back(), inf). jumps strictly increasing,
// values.size() == jumps.size() + 1.
struct PiecewiseBoundary {
    std::vector<double> jumps;
    std::vector<double> values;

    PiecewiseBoundary(std::vector<double> jumps_, std::vector<double> values_);
};

// Harmonic extension of b to the upper half-plane:
//   c_n + (1/pi) sum_k (c_{k-1} - c_k) arg(z - a_k).
// Requires Im z > 0.
double extend(const PiecewiseBoundary& b, Complex z);

// d/dz of the extension: (1/(2 pi i)) sum_k (c_{k-1} - c_k)/(z - a_k).
// Requires Im z > 0 and z not equal to a jump point.
Complex deriv(const PiecewiseBoundary& b, Complex z);

// A real harmonic function on (part of) the plane, exposing its value and
// holomorphic d/dz derivative. Backed either by piecewise boundary data on
// the real line or by caller-supplied closed forms.
class HarmonicFn {
public:
    static HarmonicFn piecewise(PiecewiseBoundary b);
    static HarmonicFn closed_form(std::function<double(Complex)> value,
                                  std::function<Complex(Complex)> deriv);
    static HarmonicFn constant(double c);

    double value(Complex z) const { return value_(z); }
    Complex deriv(Complex z) const { return deriv_(z); }

    // Non-null when backed by piecewise data.
    const PiecewiseBoundary* boundary_data() const { return boundary_.get(); }

private:
    HarmonicFn(std::function<double(Complex)> v, std::function<Complex(Complex)> d,
               std::shared_ptr<const PiecewiseBoundary> b)
        : value_(std::move(v)), deriv_(std::move(d)), boundary_(std::move(b)) {}

    std::function<double(Complex)> value_;
    std::function<Complex(Complex)> deriv_;
    std::shared_ptr<const PiecewiseBoundary> boundary_;
};

}  // namespace gradshape
