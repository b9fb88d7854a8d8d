#include "gradshape/intrinsic.hpp"

#include <algorithm>
#include <cmath>

#include "gradshape/numerics.hpp"

namespace gradshape {

GaussData gauss_map(const HessianTriple& h) {
    if (!h.positive_definite())
        throw DomainError("gauss_map: Hessian is not positive definite");
    const double root = std::sqrt(h.det());
    GaussData g;
    g.gamma = Complex(-h.st, -root) / h.ss;
    g.mu = Complex(h.ss - h.tt, 2.0 * h.st) / (h.ss + h.tt + 2.0 * root);
    return g;
}

Complex mu_from_gamma(Complex gamma) {
    const Complex i(0, 1);
    return (1.0 - i * gamma) / (1.0 + i * gamma);
}

ChartEval chart_eval(const SurfaceTensionModel& model, IntrinsicPoint z) {
    const ChartJet jet = model.chart_point(z);
    ChartEval out;
    out.slope = jet.slope;
    out.s_z = jet.s_z;
    out.t_z = jet.t_z;
    out.conformal.psi = jet.psi;
    if (model.has_closed_sigma()) {
        const HessianTriple h = model.hessian(jet.slope);
        const GaussData g = gauss_map(h);
        out.conformal.gamma = g.gamma;
        out.conformal.mu = g.mu;
        out.conformal.kappa = std::sqrt(h.det());
    } else {
        out.conformal.gamma = jet.s_z / jet.t_z;
        out.conformal.mu = mu_from_gamma(out.conformal.gamma);
        out.conformal.kappa = jet.psi * jet.psi;
    }
    return out;
}

double schrodinger_potential(const SurfaceTensionModel& model, IntrinsicPoint z) {
    return model.schrodinger_q(z);
}

double schrodinger_potential_fd(const SurfaceTensionModel& model, IntrinsicPoint z,
                                double step) {
    const double h = step * std::max(1.0, std::abs(z));
    auto psi = [&](Complex w) { return model.chart_point(w).psi; };
    const double p0 = psi(z);
    if (std::abs(p0) < 1e-14)
        throw DomainError("schrodinger_potential_fd: psi vanishes at z");
    return num::laplacian_fd(psi, z, h) / p0;
}

double IsothermalResiduals::max() const { return std::max({r1, r2, r3}); }

IsothermalResiduals verify_isothermal(const SurfaceTensionModel& model,
                                      IntrinsicPoint z, double fd_step) {
    if (!model.has_closed_sigma() || !model.has_closed_chart())
        throw CapabilityError("verify_isothermal: needs closed sigma and chart");

    const ChartJet jet = model.chart_point(z);
    if (std::abs(jet.s_z) < 1e-14 || std::abs(jet.t_z) < 1e-14)
        throw DegenerateError("verify_isothermal: degenerate chart derivatives");

    const double h = fd_step * std::max(1.0, std::abs(z));
    auto grad_x = [&](Complex w) {
        const ChartJet j = model.chart_point(w);
        return model.gradient(j.slope).X;
    };
    auto grad_y = [&](Complex w) {
        const ChartJet j = model.chart_point(w);
        return model.gradient(j.slope).Y;
    };
    const Complex x_z = num::wirtinger_fd(grad_x, z, h);
    const Complex y_z = num::wirtinger_fd(grad_y, z, h);

    const HessianTriple hess = model.hessian(jet.slope);
    const Complex gamma = gauss_map(hess).gamma;
    const double root = std::sqrt(hess.det());

    IsothermalResiduals r;
    r.r1 = std::abs(x_z / jet.t_z + y_z / jet.s_z);
    r.r2 = std::abs(jet.s_z / jet.t_z - gamma);
    r.r3 = std::abs(x_z / jet.t_z + Complex(0, root));
    return r;
}

}  // namespace gradshape
