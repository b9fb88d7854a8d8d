#pragma once

#include "gradshape/common.hpp"
#include "gradshape/tensions.hpp"

namespace gradshape {

// Conformal data at a point: Gauss map gamma (Im gamma < 0), Beltrami
// coefficient mu (|mu| < 1), kappa = sqrt(det Hess sigma) and its square
// root psi.
struct ConformalData {
    Complex gamma;
    Complex mu;
    double kappa = 0.0;
    double psi = 0.0;
};

struct GaussData {
    Complex gamma;
    Complex mu;
};

// gamma = (-sigma_st - i sqrt(det))/sigma_ss and the Beltrami coefficient
// mu = (sigma_ss - sigma_tt + 2 i sigma_st)/(sigma_ss + sigma_tt + 2 sqrt(det)).
// Throws DomainError if h is not positive definite.
GaussData gauss_map(const HessianTriple& h);

// mu in terms of gamma alone: mu = (1 - i gamma)/(1 + i gamma).
Complex mu_from_gamma(Complex gamma);

struct ChartEval {
    Slope slope;
    Complex s_z;
    Complex t_z;
    ConformalData conformal;
};

// Slope, closed-form slope derivatives and conformal data of the model's
// chart at z. For models with a closed sigma the Gauss map comes from the
// Hessian at the slope; otherwise from s_z/t_z.
ChartEval chart_eval(const SurfaceTensionModel& model, IntrinsicPoint z);

// q = (Laplace psi)/psi. Closed form for the built-ins; zero for trivial
// potential models.
double schrodinger_potential(const SurfaceTensionModel& model, IntrinsicPoint z);

// Finite-difference cross-check of the potential: 5-point Laplacian of the
// chart's psi divided by psi, step scaled by max(1, |z|).
double schrodinger_potential_fd(const SurfaceTensionModel& model, IntrinsicPoint z,
                                double step = 1e-4);

// Residuals of the isothermal identities at z, with X_z and Y_z obtained by
// finite differences of grad sigma composed with the chart (step fd_step,
// scaled by max(1, |z|)):
//   r1 = |X_z/t_z + Y_z/s_z|
//   r2 = |s_z/t_z - gamma|
//   r3 = |X_z/t_z + i sqrt(det Hess)|
struct IsothermalResiduals {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
    double max() const;
};

IsothermalResiduals verify_isothermal(const SurfaceTensionModel& model,
                                      IntrinsicPoint z, double fd_step = 1e-5);

}  // namespace gradshape
