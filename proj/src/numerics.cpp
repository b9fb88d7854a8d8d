#include "gradshape/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace gradshape::num {

double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double central_diff2(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

Complex wirtinger_fd(const std::function<double(Complex)>& f, Complex z, double h) {
    const double fx = (f(z + h) - f(z - h)) / (2.0 * h);
    const double fy = (f(z + Complex(0, h)) - f(z - Complex(0, h))) / (2.0 * h);
    return 0.5 * Complex(fx, -fy);
}

double laplacian_fd(const std::function<double(Complex)>& f, Complex z, double h) {
    return (f(z + h) + f(z - h) + f(z + Complex(0, h)) + f(z - Complex(0, h)) -
            4.0 * f(z)) /
           (h * h);
}

double golden_section(const std::function<double(double)>& f, double a, double b,
                      double xtol) {
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

int Polynomial::degree() const {
    int d = static_cast<int>(coeffs.size()) - 1;
    while (d > 0 && coeffs[static_cast<size_t>(d)] == 0.0) --d;
    return d;
}

Complex Polynomial::eval(Complex z) const {
    Complex acc = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
}

Complex Polynomial::eval_deriv(Complex z) const {
    Complex acc = 0.0;
    for (size_t k = coeffs.size(); k-- > 1;)
        acc = acc * z + static_cast<double>(k) * coeffs[k];
    return acc;
}

std::vector<Complex> polynomial_roots(const Polynomial& p) {
    const int n = p.degree();
    if (n < 1) return {};

    // Monic complex copy.
    std::vector<Complex> a(static_cast<size_t>(n) + 1);
    const double lead = p.coeffs[static_cast<size_t>(n)];
    for (int k = 0; k <= n; ++k) a[static_cast<size_t>(k)] = p.coeffs[static_cast<size_t>(k)] / lead;

    auto eval_monic = [&](Complex z) {
        Complex acc = 0.0;
        for (size_t k = a.size(); k-- > 0;) acc = acc * z + a[k];
        return acc;
    };

    // Cauchy-style radius bound for the initial ring of guesses.
    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[static_cast<size_t>(k)]));
    radius = 1.0 + radius;

    std::vector<Complex> roots(static_cast<size_t>(n));
    const Complex seed(0.4, 0.9);
    Complex g = 1.0;
    for (int k = 0; k < n; ++k) {
        g *= seed;
        roots[static_cast<size_t>(k)] = radius * g;
    }

    const double eps = 1e-14 * std::max(1.0, radius);
    bool converged = false;
    for (int it = 0; it < 500 && !converged; ++it) {
        double step = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex denom = 1.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                denom *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
            }
            if (std::abs(denom) < 1e-300) continue;
            const Complex dz = eval_monic(roots[static_cast<size_t>(i)]) / denom;
            roots[static_cast<size_t>(i)] -= dz;
            step = std::max(step, std::abs(dz));
        }
        converged = step < eps;
    }

    // Newton polish.
    for (auto& r : roots) {
        for (int it = 0; it < 8; ++it) {
            const Complex d = p.eval_deriv(r);
            if (std::abs(d) < 1e-300) break;
            const Complex dz = p.eval(r) / d;
            r -= dz;
            if (std::abs(dz) < 1e-16 * std::max(1.0, std::abs(r))) break;
        }
    }

    if (!converged) {
        // Accept if every polished root actually annihilates p.
        for (const auto& r : roots) {
            if (std::abs(p.eval(r)) > 1e-8 * std::max(1.0, std::abs(lead)))
                throw ConvergenceError("polynomial_roots: Durand-Kerner did not converge");
        }
    }

    std::sort(roots.begin(), roots.end(), [](Complex l, Complex r) {
        if (l.real() != r.real()) return l.real() < r.real();
        return l.imag() < r.imag();
    });
    return roots;
}

bool newton2d(const std::function<bool(const double*, double*)>& f_eval,
              double x[2], double ftol, int max_iters) {
    auto norm2 = [](const double f[2]) { return std::hypot(f[0], f[1]); };

    double f[2];
    if (!f_eval(x, f)) return false;

    for (int it = 0; it < max_iters; ++it) {
        if (norm2(f) <= ftol) return true;

        const double h0 = 1e-7 * std::max(1.0, std::abs(x[0]));
        const double h1 = 1e-7 * std::max(1.0, std::abs(x[1]));
        double xp[2], fp[2], fm[2], jac[2][2];

        xp[0] = x[0] + h0; xp[1] = x[1];
        if (!f_eval(xp, fp)) return false;
        xp[0] = x[0] - h0;
        if (!f_eval(xp, fm)) return false;
        jac[0][0] = (fp[0] - fm[0]) / (2 * h0);
        jac[1][0] = (fp[1] - fm[1]) / (2 * h0);

        xp[0] = x[0]; xp[1] = x[1] + h1;
        if (!f_eval(xp, fp)) return false;
        xp[1] = x[1] - h1;
        if (!f_eval(xp, fm)) return false;
        jac[0][1] = (fp[0] - fm[0]) / (2 * h1);
        jac[1][1] = (fp[1] - fm[1]) / (2 * h1);

        const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        if (std::abs(det) < 1e-300) return false;
        const double dx0 = (-f[0] * jac[1][1] + f[1] * jac[0][1]) / det;
        const double dx1 = (-jac[0][0] * f[1] + jac[1][0] * f[0]) / det;

        // Damping: halve the step until the residual decreases.
        double lambda = 1.0;
        double xn[2], fn[2];
        bool accepted = false;
        for (int k = 0; k < 30; ++k) {
            xn[0] = x[0] + lambda * dx0;
            xn[1] = x[1] + lambda * dx1;
            if (f_eval(xn, fn) && norm2(fn) < norm2(f)) {
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted) return norm2(f) <= ftol;
        x[0] = xn[0];
        x[1] = xn[1];
        f[0] = fn[0];
        f[1] = fn[1];
    }
    return norm2(f) <= ftol;
}

Extrapolated richardson(const std::vector<double>& eps, const std::vector<double>& vals) {
    if (eps.size() < 3 || eps.size() != vals.size())
        throw std::invalid_argument("richardson: need >= 3 (eps, value) samples");
    const size_t m = eps.size();
    const double e0 = eps[m - 3], e1 = eps[m - 2], e2 = eps[m - 1];
    const double v0 = vals[m - 3], v1 = vals[m - 2], v2 = vals[m - 1];
    const double r1 = e0 / e1, r2 = e1 / e2;

    const double first_a = (r1 * v1 - v0) / (r1 - 1.0);
    const double first_b = (r2 * v2 - v1) / (r2 - 1.0);
    const double rr = r1 * r2;
    const double second = (rr * first_b - first_a) / (rr - 1.0);
    return {second, std::abs(first_b - first_a)};
}

}  // namespace gradshape::num
