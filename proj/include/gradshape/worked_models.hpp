#pragma once

#include <array>

#include "gradshape/envelope.hpp"
#include "gradshape/numerics.hpp"
#include "gradshape/tensions.hpp"

namespace gradshape {

// ---------------------------------------------------------------------------
// Aztec diamond (square dimer model, arctic circle).

// psi = 1; s, t, G are harmonic extensions of the four-facet boundary data
// on jumps (-1, 0, 1):
//   s: 0,  2, 0, -2     t: 2, 0, -2, 0     G: 1, -1, 1, -1.
TangentPlaneField aztec_field();

// Closed-form liquid-region coordinates
//   x = (1 - 2 Re z - |z|^2) / (2(1 + |z|^2)),
//   y = (1 + 2 Re z - |z|^2) / (2(1 + |z|^2)).
std::array<double, 2> aztec_closed_form(Complex z);

// Inverse map z = (y - x + i sqrt(1 - 2(x^2 + y^2)))/(1 + x + y) on the
// liquid disk x^2 + y^2 < 1/2.
Complex aztec_inverse(double x, double y);

// Height x3 = s(z) x + t(z) y + G(z) at z = aztec_inverse(x, y).
double aztec_height(double x, double y);

// ---------------------------------------------------------------------------
// L-shaped Aztec diamond.

// Parameters of the degree-2 cover z(u) = A (u - a2)(u - a5)/u with
// a1 < a2 < a3 = -1 < 0 < a4 < a5 < a6 mapping
// (a1, a2, a3, a4, a5, a6) -> (-1, 0, 1, -1, 0, 1).
struct LShapeParams {
    double a = 0.0;  // facet-intercept parameter, 0 <= a < 1/2
    double a1 = 0.0, a2 = 0.0, a3 = -1.0, a4 = 0.0, a5 = 0.0, a6 = 0.0;
    double A = 0.0;
    Complex branch_point;     // root of z_u in the upper half-plane
    double gu_residual = 0.0;  // |G_u| at the branch point

    Complex z_of_u(Complex u) const;
    Complex dz_du(Complex u) const;
};

// Given a1, a2 (and a3 = -1), the remaining cover parameters are rational:
//   a5 = a1 (2 a2 + 1 - a1) / (a2 - a1 a2 - 2 a1),
//   a4 = a2 a5 / a1,  a6 = -a2 a5,  A = -1/((1 + a2)(1 + a5)).
// Returns false if the ordering constraints fail.
bool lshape_from_a1a2(double a1, double a2, LShapeParams& out);

// The boundary data of G on the u-line for intercept parameter a:
// values (1, -1, 1, 4a-1, 8a-3, 4a-1, 1, -1) on the intervals cut at
// (a1, a2, -1, 0, a4, a5, a6).
PiecewiseBoundary lshape_g_data(const LShapeParams& p, double a);

// Solve for (a1, a2) such that G_u vanishes at the branch point of z(u)
// (coarse grid scan + damped Newton). Requires 0 <= a < 1/2.
LShapeParams lshape_solve(double a);

// psi = 1 field over the u upper half-plane with the table data
//   s: 0, 2, 0, -2, 0, 2, 0, -2    t: 2, 0, -2, 0, 2, 0, -2, 0
// and G as in lshape_g_data.
TangentPlaneField lshape_field(const LShapeParams& p, double a);

// ---------------------------------------------------------------------------
// Enharmonic elementary solutions.

// A point (a, b) on the circle a^2 + b^2 + a + b = 0, a != -1.
struct ElementarySolutionEnh {
    double a;
    double b;
    ElementarySolutionEnh(double a_, double b_);

    // Point on the constraint circle at angle theta:
    // (a, b) = (-1/2 + cos(theta)/sqrt(2), -1/2 + sin(theta)/sqrt(2)).
    static ElementarySolutionEnh from_angle(double theta);
};

// (x, y, h) = (e^{au+bv}, -(b/(a+1)) e^{(a+1)u+(b+1)v},
//              ((a-b)/(a+1)) e^{(a+1)u+bv}); slope field (e^u, e^{-v}).
std::array<double, 3> enharmonic_solution(const ElementarySolutionEnh& e, double u,
                                          double v);

// ---------------------------------------------------------------------------
// p-Laplace separated modes.

struct PLaplaceModeCoeffs {
    double C1 = 0.0, C2 = 0.0;  // angular coefficients
    double c1 = 0.0, c2 = 0.0;  // radial coefficients
};

// Separated solution of (-Laplace + q) w = 0 with q = C/R^2,
// C = (p-2)^2/(4(p-1)):
//   w(R e^{-i theta}) = (c1 R^m + c2 R^{-m})(C1 e^{i n theta} + C2 e^{-i n theta})
// with n = sqrt(c), m = sqrt(C + c) (complex exponents when negative).
class PLaplaceMode {
public:
    PLaplaceMode(double p, double c, PLaplaceModeCoeffs coeffs);

    Complex eval_polar(double R, double theta) const;
    Complex eval(Complex z) const;  // z = R e^{-i theta}
    double potential(double R) const;
    double C() const { return C_; }

private:
    double C_;
    Complex nu_;  // angular exponent sqrt(c)
    Complex mu_;  // radial exponent sqrt(C + c)
    PLaplaceModeCoeffs k_;
};

PLaplaceMode plaplace_mode(double p, double c, PLaplaceModeCoeffs coeffs);

// ---------------------------------------------------------------------------
// Young-tableaux complex Burgers solver.

// Rational function num/den with real coefficients.
struct RationalFn {
    num::Polynomial num;
    num::Polynomial den = num::Polynomial::constant(1.0);

    Complex eval(Complex z) const { return num.eval(z) / den.eval(z); }
};

// Root z with Im z > 0 of y + x/z + f(z) = 0 (cleared to a polynomial).
// Among upper half-plane roots returns the one of maximal imaginary part.
// Throws DegenerateError when no such root exists (frozen point).
Complex burgers_solve(const RationalFn& f, double x, double y);

// Slope from the young_tableaux chart: t = Im z/pi, s = arg(z)/pi - 1/2.
Slope young_slope(Complex z);

// ---------------------------------------------------------------------------

// Tangent-plane basis (phi, phi*, psi as closed-form harmonic functions)
// for a trivial-potential model, combined with intercept data G.
// Supported: trivial_example, young_tableaux, dimer_square, p_laplace p=2.
TangentPlaneField model_field(const SurfaceTensionModel& model, HarmonicFn G);

}  // namespace gradshape
