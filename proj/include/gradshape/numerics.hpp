#pragma once

#include <functional>
#include <vector>

#include "gradshape/common.hpp"

namespace gradshape::num {

// d/dx by central differences.
double central_diff(const std::function<double(double)>& f, double x, double h);

// d2/dx2 by central differences.
double central_diff2(const std::function<double(double)>& f, double x, double h);

// Wirtinger derivative f_z = (f_x - i f_y)/2 of a real-valued function of
// z = x + iy, by central differences with step h in each direction.
Complex wirtinger_fd(const std::function<double(Complex)>& f, Complex z, double h);

// 5-point Laplacian of a real-valued function of z, step h.
double laplacian_fd(const std::function<double(Complex)>& f, Complex z, double h);

// Minimize a quasi-convex f on [a, b] by golden-section search; stops when
// the bracket is shorter than xtol. Returns the midpoint of the final bracket.
double golden_section(const std::function<double(double)>& f, double a, double b,
                      double xtol);

// Real-coefficient polynomial c[0] + c[1] x + ... + c[n] x^n.
struct Polynomial {
    std::vector<double> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<double> c) : coeffs(std::move(c)) {}

    int degree() const;
    Complex eval(Complex z) const;
    Complex eval_deriv(Complex z) const;
    static Polynomial constant(double c) { return Polynomial({c}); }
};

// All complex roots of p (Durand-Kerner with Newton polish). Deterministic.
// Throws ConvergenceError if the iteration stalls.
std::vector<Complex> polynomial_roots(const Polynomial& p);

// Damped Newton for F: R^2 -> R^2 with a finite-difference Jacobian.
// Returns true on ||F|| <= ftol. x is updated in place.
bool newton2d(const std::function<bool(const double*, double*)>& f_eval,
              double x[2], double ftol, int max_iters);

// Two-level Richardson extrapolation to eps -> 0 of samples f(eps_k),
// eps_k descending with constant ratio r = eps_k / eps_{k+1} (needs >= 3
// samples; uses the last three). Returns {limit, spread} where spread is
// the difference of the two second-level candidates.
struct Extrapolated {
    double limit;
    double spread;
};
Extrapolated richardson(const std::vector<double>& eps, const std::vector<double>& vals);

}  // namespace gradshape::num
