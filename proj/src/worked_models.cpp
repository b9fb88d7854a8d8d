#include "gradshape/worked_models.hpp"

#include <algorithm>
#include <cmath>

namespace gradshape {

TangentPlaneField aztec_field() {
    const std::vector<double> jumps{-1.0, 0.0, 1.0};
    return TangentPlaneField(
        HarmonicFn::piecewise(PiecewiseBoundary(jumps, {0.0, 2.0, 0.0, -2.0})),
        HarmonicFn::piecewise(PiecewiseBoundary(jumps, {2.0, 0.0, -2.0, 0.0})),
        HarmonicFn::piecewise(PiecewiseBoundary(jumps, {1.0, -1.0, 1.0, -1.0})),
        HarmonicFn::constant(1.0));
}

std::array<double, 2> aztec_closed_form(Complex z) {
    if (z.imag() < 0.0) throw DomainError("aztec_closed_form: Im z must be >= 0");
    const double n = std::norm(z);
    const double d = 2.0 * (1.0 + n);
    return {(1.0 - 2.0 * z.real() - n) / d, (1.0 + 2.0 * z.real() - n) / d};
}

Complex aztec_inverse(double x, double y) {
    const double r2 = x * x + y * y;
    if (!(r2 < 0.5))
        throw DomainError("aztec_inverse: (x, y) is outside the liquid disk x^2+y^2 < 1/2");
    const double den = 1.0 + x + y;
    if (den == 0.0) throw DomainError("aztec_inverse: denominator 1 + x + y vanishes");
    return Complex(y - x, std::sqrt(1.0 - 2.0 * r2)) / den;
}

double aztec_height(double x, double y) {
    const Complex z = aztec_inverse(x, y);
    const TangentPlaneField f = aztec_field();
    return f.phi.value(z) * x + f.phi_star.value(z) * y + f.G.value(z);
}

Complex LShapeParams::z_of_u(Complex u) const {
    return A * (u - a2) * (u - a5) / u;
}

Complex LShapeParams::dz_du(Complex u) const {
    return A * (1.0 - a2 * a5 / (u * u));
}

bool lshape_from_a1a2(double a1, double a2, LShapeParams& out) {
    const double den = a2 - a1 * a2 - 2.0 * a1;
    if (den == 0.0 || a1 == 0.0) return false;
    const double a5 = a1 * (2.0 * a2 + 1.0 - a1) / den;
    const double a4 = a2 * a5 / a1;
    const double a6 = -a2 * a5;
    const double q = (1.0 + a2) * (1.0 + a5);
    if (q == 0.0) return false;

    out.a1 = a1;
    out.a2 = a2;
    out.a3 = -1.0;
    out.a4 = a4;
    out.a5 = a5;
    out.a6 = a6;
    out.A = -1.0 / q;

    if (!(a1 < a2 && a2 < -1.0 && 0.0 < a4 && a4 < a5 && a5 < a6)) return false;
    const double p = a2 * a5;
    if (!(p < 0.0)) return false;
    out.branch_point = Complex(0.0, std::sqrt(-p));
    return true;
}

PiecewiseBoundary lshape_g_data(const LShapeParams& p, double a) {
    return PiecewiseBoundary({p.a1, p.a2, -1.0, 0.0, p.a4, p.a5, p.a6},
                             {1.0, -1.0, 1.0, 4.0 * a - 1.0, 8.0 * a - 3.0,
                              4.0 * a - 1.0, 1.0, -1.0});
}

namespace {

// G_u at the branch point as a function of (a1, a2); false when the ordering
// constraints fail.
bool lshape_residual(double a, const double x[2], double f[2]) {
    LShapeParams p;
    if (!lshape_from_a1a2(x[0], x[1], p)) return false;
    const Complex gu = deriv(lshape_g_data(p, a), p.branch_point);
    f[0] = gu.real();
    f[1] = gu.imag();
    return true;
}

}  // namespace

LShapeParams lshape_solve(double a) {
    if (!(a >= 0.0 && a < 0.5))
        throw DomainError("lshape_solve: feasible range is 0 <= a < 1/2, got a = " +
                          std::to_string(a));

    auto f_eval = [a](const double* x, double* f) { return lshape_residual(a, x, f); };

    // Coarse scan for the Newton seed.
    double best[2] = {0.0, 0.0};
    double best_norm = std::numeric_limits<double>::infinity();
    const int n1 = 140, n2 = 120;
    for (int i = 0; i < n1; ++i) {
        const double a1 = -8.0 + (-1.5 + 8.0) * i / (n1 - 1);
        for (int j = 0; j < n2; ++j) {
            const double a2 = a1 + (-1.0 - a1) * (j + 0.5) / n2;
            const double x[2] = {a1, a2};
            double f[2];
            if (!f_eval(x, f)) continue;
            const double nrm = std::hypot(f[0], f[1]);
            if (nrm < best_norm) {
                best_norm = nrm;
                best[0] = a1;
                best[1] = a2;
            }
        }
    }
    if (!std::isfinite(best_norm))
        throw ConvergenceError("lshape_solve: no feasible (a1, a2) found in scan window");

    double x[2] = {best[0], best[1]};
    if (!num::newton2d(f_eval, x, 1e-12, 80)) {
        double f[2];
        f_eval(x, f);
        throw ConvergenceError("lshape_solve: Newton stalled at (a1, a2) = (" +
                               std::to_string(x[0]) + ", " + std::to_string(x[1]) +
                               "), |G_u| = " + std::to_string(std::hypot(f[0], f[1])));
    }

    LShapeParams p;
    lshape_from_a1a2(x[0], x[1], p);
    p.a = a;
    p.gu_residual = std::abs(deriv(lshape_g_data(p, a), p.branch_point));
    return p;
}

TangentPlaneField lshape_field(const LShapeParams& p, double a) {
    LShapeParams check;
    if (!lshape_from_a1a2(p.a1, p.a2, check) ||
        std::abs(check.a4 - p.a4) > 1e-9 || std::abs(check.a5 - p.a5) > 1e-9 ||
        std::abs(check.a6 - p.a6) > 1e-9 || std::abs(check.A - p.A) > 1e-9)
        throw std::invalid_argument("lshape_field: inconsistent LShapeParams");

    const std::vector<double> jumps{p.a1, p.a2, -1.0, 0.0, p.a4, p.a5, p.a6};
    return TangentPlaneField(
        HarmonicFn::piecewise(
            PiecewiseBoundary(jumps, {0, 2, 0, -2, 0, 2, 0, -2})),
        HarmonicFn::piecewise(
            PiecewiseBoundary(jumps, {2, 0, -2, 0, 2, 0, -2, 0})),
        HarmonicFn::piecewise(lshape_g_data(p, a)), HarmonicFn::constant(1.0));
}

ElementarySolutionEnh::ElementarySolutionEnh(double a_, double b_) : a(a_), b(b_) {
    const double c = a * a + b * b + a + b;
    if (std::abs(c) > 1e-12)
        throw std::invalid_argument(
            "ElementarySolutionEnh: (a, b) must satisfy a^2 + b^2 + a + b = 0");
    if (a == -1.0)
        throw std::invalid_argument("ElementarySolutionEnh: a = -1 is excluded");
}

ElementarySolutionEnh ElementarySolutionEnh::from_angle(double theta) {
    const double r = 1.0 / std::sqrt(2.0);
    return ElementarySolutionEnh(-0.5 + r * std::cos(theta), -0.5 + r * std::sin(theta));
}

std::array<double, 3> enharmonic_solution(const ElementarySolutionEnh& e, double u,
                                          double v) {
    const double a = e.a, b = e.b;
    return {std::exp(a * u + b * v),
            -(b / (a + 1.0)) * std::exp((a + 1.0) * u + (b + 1.0) * v),
            ((a - b) / (a + 1.0)) * std::exp((a + 1.0) * u + b * v)};
}

PLaplaceMode::PLaplaceMode(double p, double c, PLaplaceModeCoeffs coeffs) : k_(coeffs) {
    if (!(p > 1.0)) throw std::invalid_argument("PLaplaceMode: requires p > 1");
    C_ = (p - 2.0) * (p - 2.0) / (4.0 * (p - 1.0));
    nu_ = std::sqrt(Complex(c, 0.0));
    mu_ = std::sqrt(Complex(C_ + c, 0.0));
}

Complex PLaplaceMode::eval_polar(double R, double theta) const {
    if (!(R > 0.0)) throw DomainError("PLaplaceMode: requires R > 0");
    const Complex i(0, 1);
    const double logr = std::log(R);
    const Complex radial =
        k_.c1 * std::exp(mu_ * logr) + k_.c2 * std::exp(-mu_ * logr);
    const Complex angular =
        k_.C1 * std::exp(i * nu_ * theta) + k_.C2 * std::exp(-i * nu_ * theta);
    return radial * angular;
}

Complex PLaplaceMode::eval(Complex z) const {
    return eval_polar(std::abs(z), -std::arg(z));
}

double PLaplaceMode::potential(double R) const {
    if (!(R > 0.0)) throw DomainError("PLaplaceMode: requires R > 0");
    return C_ / (R * R);
}

PLaplaceMode plaplace_mode(double p, double c, PLaplaceModeCoeffs coeffs) {
    return PLaplaceMode(p, c, coeffs);
}

Complex burgers_solve(const RationalFn& f, double x, double y) {
    // y + x/z + num/den = 0  ->  y z den + x den + z num = 0.
    const auto& nc = f.num.coeffs;
    const auto& dc = f.den.coeffs;
    bool den_zero = true;
    for (double c : dc)
        if (c != 0.0) den_zero = false;
    if (den_zero) throw std::invalid_argument("burgers_solve: zero denominator");

    const size_t deg = std::max(nc.size(), dc.size()) + 1;
    std::vector<double> poly(deg + 1, 0.0);
    for (size_t k = 0; k < dc.size(); ++k) {
        poly[k + 1] += y * dc[k];  // y z den
        poly[k] += x * dc[k];      // x den
    }
    for (size_t k = 0; k < nc.size(); ++k) poly[k + 1] += nc[k];  // z num

    const num::Polynomial cleared(std::move(poly));
    if (cleared.degree() < 1)
        throw DegenerateError("burgers_solve: equation has no roots (frozen point)");

    const auto roots = num::polynomial_roots(cleared);
    const Complex* pick = nullptr;
    for (const auto& r : roots) {
        if (r.imag() <= 1e-10) continue;
        if (std::abs(f.den.eval(r)) < 1e-12) continue;  // spurious root from clearing
        if (!pick || r.imag() > pick->imag()) pick = &r;
    }
    if (!pick)
        throw DegenerateError("burgers_solve: no root in the upper half-plane (frozen point)");
    return *pick;
}

Slope young_slope(Complex z) {
    if (!(z.imag() > 0.0)) throw DomainError("young_slope: Im z must be positive");
    return {std::arg(z) / kPi - 0.5, z.imag() / kPi};
}

TangentPlaneField model_field(const SurfaceTensionModel& model, HarmonicFn G) {
    if (!model.trivial_potential() || !model.has_closed_chart())
        throw CapabilityError(
            "model_field: model must have trivial potential and a closed chart");

    const std::string& n = model.name();
    if (n == "trivial_example") {
        auto domain = [](Complex z) { return z.real() > 0.0 && z.imag() < 0.0; };
        return TangentPlaneField(
            HarmonicFn::closed_form([](Complex z) { return -2.0 * z.imag(); },
                                    [](Complex) { return Complex(0, 1); }),
            HarmonicFn::closed_form([](Complex z) { return 2.0 * z.real(); },
                                    [](Complex) { return Complex(1, 0); }),
            std::move(G),
            HarmonicFn::closed_form(
                [](Complex z) { return -2.0 * z.real() * z.imag(); },
                [](Complex z) { return Complex(0, 1) * z; }),
            domain);
    }
    if (n == "young_tableaux") {
        const double rt_pi = std::sqrt(kPi);
        return TangentPlaneField(
            HarmonicFn::closed_form(
                [rt_pi](Complex z) { return rt_pi * (std::arg(z) / kPi - 0.5); },
                [rt_pi](Complex z) { return rt_pi / (2.0 * kPi * Complex(0, 1) * z); }),
            HarmonicFn::closed_form(
                [rt_pi](Complex z) { return z.imag() / rt_pi; },
                [rt_pi](Complex) { return 1.0 / (2.0 * rt_pi * Complex(0, 1)); }),
            std::move(G), HarmonicFn::constant(rt_pi));
    }
    if (n == "dimer_square") {
        auto value_of = [&model](int which) {
            return [&model, which](Complex z) {
                const ChartJet j = model.chart_point(z);
                return which == 0 ? j.slope.s : j.slope.t;
            };
        };
        // The shared_ptr keeps the model alive inside the lambdas.
        auto m = make_builtin("dimer_square");
        return TangentPlaneField(
            HarmonicFn::closed_form(
                [m](Complex z) { return m->chart_point(z).slope.s; },
                [m](Complex z) { return m->chart_point(z).s_z; }),
            HarmonicFn::closed_form(
                [m](Complex z) { return m->chart_point(z).slope.t; },
                [m](Complex z) { return m->chart_point(z).t_z; }),
            std::move(G), HarmonicFn::constant(1.0));
    }
    if (n == "p_laplace") {
        // Only p = 2 has trivial potential; psi = sqrt(kappa) = sqrt(2),
        // chart z = s - i t on all of C.
        const double rt2 = std::sqrt(2.0);
        auto domain = [](Complex) { return true; };
        return TangentPlaneField(
            HarmonicFn::closed_form([rt2](Complex z) { return rt2 * z.real(); },
                                    [rt2](Complex) { return Complex(rt2 / 2, 0); }),
            HarmonicFn::closed_form([rt2](Complex z) { return -rt2 * z.imag(); },
                                    [rt2](Complex) { return Complex(0, rt2 / 2); }),
            std::move(G), HarmonicFn::constant(rt2), domain);
    }
    throw CapabilityError("model_field: unsupported model " + n);
}

}  // namespace gradshape
