#include "gradshape/halfplane.hpp"

#include <cmath>

namespace gradshape {

PiecewiseBoundary::PiecewiseBoundary(std::vector<double> jumps_,
                                     std::vector<double> values_)
    : jumps(std::move(jumps_)), values(std::move(values_)) {
    if (values.size() != jumps.size() + 1)
        throw std::invalid_argument(
            "PiecewiseBoundary: need values.size() == jumps.size() + 1");
    for (size_t k = 0; k + 1 < jumps.size(); ++k)
        if (!(jumps[k] < jumps[k + 1]))
            throw std::invalid_argument("PiecewiseBoundary: jumps must be strictly increasing");
    for (double a : jumps)
        if (!std::isfinite(a))
            throw std::invalid_argument("PiecewiseBoundary: jumps must be finite");
    for (double c : values)
        if (!std::isfinite(c))
            throw std::invalid_argument("PiecewiseBoundary: values must be finite");
}

double extend(const PiecewiseBoundary& b, Complex z) {
    if (!(z.imag() > 0.0)) throw DomainError("extend: Im z must be positive");
    double acc = b.values.back();
    for (size_t k = 0; k < b.jumps.size(); ++k)
        acc += (b.values[k] - b.values[k + 1]) * std::arg(z - b.jumps[k]) / kPi;
    return acc;
}

Complex deriv(const PiecewiseBoundary& b, Complex z) {
    if (!(z.imag() > 0.0)) throw DomainError("deriv: Im z must be positive");
    Complex acc = 0.0;
    for (size_t k = 0; k < b.jumps.size(); ++k) {
        const Complex d = z - b.jumps[k];
        if (d == Complex(0.0, 0.0))
            throw DomainError("deriv: z coincides with a jump point");
        acc += (b.values[k] - b.values[k + 1]) / d;
    }
    return acc / (2.0 * kPi * Complex(0, 1));
}

HarmonicFn HarmonicFn::piecewise(PiecewiseBoundary b) {
    auto data = std::make_shared<const PiecewiseBoundary>(std::move(b));
    return HarmonicFn([data](Complex z) { return extend(*data, z); },
                      [data](Complex z) { return deriv(*data, z); }, data);
}

HarmonicFn HarmonicFn::closed_form(std::function<double(Complex)> value,
                                   std::function<Complex(Complex)> deriv) {
    return HarmonicFn(std::move(value), std::move(deriv), nullptr);
}

HarmonicFn HarmonicFn::constant(double c) {
    return HarmonicFn([c](Complex) { return c; }, [](Complex) { return Complex(0.0); },
                      nullptr);
}

}  // namespace gradshape
