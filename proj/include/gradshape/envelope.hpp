#pragma once

#include <functional>
#include <vector>

#include "gradshape/common.hpp"
#include "gradshape/halfplane.hpp"
#include "gradshape/tensions.hpp"

namespace gradshape {

// The moving tangent-plane family x3 = s x + t y + G/psi with
// s = phi/psi, t = phi_star/psi, all four ingredients harmonic on the
// parameter domain and psi > 0 there.
struct TangentPlaneField {
    HarmonicFn phi;       // s * psi
    HarmonicFn phi_star;  // t * psi
    HarmonicFn G;         // psi * intercept
    HarmonicFn psi;
    std::function<bool(Complex)> domain;  // parameter domain, default Im > 0

    TangentPlaneField(HarmonicFn phi_, HarmonicFn phi_star_, HarmonicFn g, HarmonicFn psi_,
                      std::function<bool(Complex)> dom = nullptr)
        : phi(std::move(phi_)),
          phi_star(std::move(phi_star_)),
          G(std::move(g)),
          psi(std::move(psi_)),
          domain(dom ? std::move(dom) : [](Complex z) { return z.imag() > 0.0; }) {}
};

// One solved surface point. h = s x + t y + G/psi holds by construction.
struct EnvelopePoint {
    Complex zeta;
    double x = 0.0;
    double y = 0.0;
    double h = 0.0;
    double s = 0.0;
    double t = 0.0;
    Complex gamma;
    bool frozen = false;
};

// Solve s_z x + t_z y + (G/psi)_z = 0 at zeta:
//   x = -Im(t_z^{-1} c_z)/Im(gamma), y = -Im(s_z^{-1} c_z)/Im(1/gamma),
// with c = G/psi and gamma = s_z/t_z. Throws DegenerateError when
// |Im gamma| < kDegenerateTol (frozen parameter) and DomainError when zeta
// is outside the field's domain or psi <= 0.
EnvelopePoint envelope_point(const TangentPlaneField& f, Complex zeta);

struct FrozenPoint {
    double a = 0.0;  // real parameter sample
    double x = 0.0;
    double y = 0.0;
    double spread = 0.0;  // Richardson extrapolation spread (max over x, y)
    bool converged = true;
};

// Tangency points on the frozen boundary: for each real sample a, evaluate
// the envelope at a + i*eps for each eps and Richardson-extrapolate to
// eps -> 0. Samples whose extrapolation spread exceeds 1e-3 are flagged.
std::vector<FrozenPoint> frozen_boundary(
    const TangentPlaneField& f, const std::vector<double>& samples,
    const std::vector<double>& eps_sequence = {1e-2, 1e-3, 1e-4});

struct Window {
    double u0 = 0.0, u1 = 0.0;
    double v0 = 0.0, v1 = 0.0;
};

// Row-major (nu x nv, u fastest) grid of envelope points over the window.
// Degenerate parameters are flagged frozen (x, y, h = NaN) instead of
// aborting the mesh. Requires nu, nv >= 2.
std::vector<EnvelopePoint> sample_mesh(const TangentPlaneField& f, const Window& w,
                                       int nu, int nv);

// Diagnostics over a sampled mesh.

// Max |z_x/z_y - gamma| over interior mesh points where the parameter-to-
// plane Jacobian is safely invertible (finite-difference check of the
// intrinsic Euler-Lagrange equation).
double ampere_mesh_residual(const std::vector<EnvelopePoint>& mesh, int nu, int nv);

// Number of sign changes of det d(x,y)/d(u,v) between neighboring interior
// mesh points; nonzero values indicate folding/self-intersection.
int jacobian_sign_changes(const std::vector<EnvelopePoint>& mesh, int nu, int nv);

}  // namespace gradshape
