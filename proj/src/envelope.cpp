#include "gradshape/envelope.hpp"

#include <cmath>
#include <limits>

#include "gradshape/numerics.hpp"

namespace gradshape {

EnvelopePoint envelope_point(const TangentPlaneField& f, Complex zeta) {
    if (!f.domain(zeta))
        throw DomainError("envelope_point: zeta is outside the field's parameter domain");

    const double psi = f.psi.value(zeta);
    if (!(psi > 0.0)) throw DomainError("envelope_point: psi <= 0 at zeta");
    const Complex psi_z = f.psi.deriv(zeta);

    const double phi = f.phi.value(zeta);
    const double phi_star = f.phi_star.value(zeta);
    const double g = f.G.value(zeta);

    // Quotient rule for s = phi/psi, t = phi*/psi, c = G/psi.
    const double inv_psi2 = 1.0 / (psi * psi);
    const Complex s_z = (f.phi.deriv(zeta) * psi - phi * psi_z) * inv_psi2;
    const Complex t_z = (f.phi_star.deriv(zeta) * psi - phi_star * psi_z) * inv_psi2;
    const Complex c_z = (f.G.deriv(zeta) * psi - g * psi_z) * inv_psi2;

    const Complex gamma = s_z / t_z;
    if (std::abs(gamma.imag()) < kDegenerateTol)
        throw DegenerateError("envelope_point: Im gamma ~ 0 (frozen parameter)");

    EnvelopePoint p;
    p.zeta = zeta;
    p.gamma = gamma;
    p.s = phi / psi;
    p.t = phi_star / psi;
    p.x = -(c_z / t_z).imag() / gamma.imag();
    p.y = -(c_z / s_z).imag() / (1.0 / gamma).imag();
    p.h = p.s * p.x + p.t * p.y + g / psi;
    return p;
}

std::vector<FrozenPoint> frozen_boundary(const TangentPlaneField& f,
                                         const std::vector<double>& samples,
                                         const std::vector<double>& eps_sequence) {
    if (eps_sequence.size() < 3)
        throw std::invalid_argument("frozen_boundary: need >= 3 eps values");

    std::vector<FrozenPoint> out;
    out.reserve(samples.size());
    for (double a : samples) {
        std::vector<double> xs, ys;
        xs.reserve(eps_sequence.size());
        ys.reserve(eps_sequence.size());
        for (double eps : eps_sequence) {
            const EnvelopePoint p = envelope_point(f, Complex(a, eps));
            xs.push_back(p.x);
            ys.push_back(p.y);
        }
        const auto ex = num::richardson(eps_sequence, xs);
        const auto ey = num::richardson(eps_sequence, ys);
        FrozenPoint fp;
        fp.a = a;
        fp.x = ex.limit;
        fp.y = ey.limit;
        fp.spread = std::max(ex.spread, ey.spread);
        fp.converged = fp.spread <= 1e-3;
        out.push_back(fp);
    }
    return out;
}

std::vector<EnvelopePoint> sample_mesh(const TangentPlaneField& f, const Window& w,
                                       int nu, int nv) {
    if (nu < 2 || nv < 2)
        throw std::invalid_argument("sample_mesh: resolution must be at least 2x2");
    if (!(w.u0 < w.u1) || !(w.v0 < w.v1))
        throw std::invalid_argument("sample_mesh: empty window");

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<EnvelopePoint> mesh;
    mesh.reserve(static_cast<size_t>(nu) * static_cast<size_t>(nv));
    for (int j = 0; j < nv; ++j) {
        const double v = w.v0 + (w.v1 - w.v0) * j / (nv - 1);
        for (int i = 0; i < nu; ++i) {
            const double u = w.u0 + (w.u1 - w.u0) * i / (nu - 1);
            const Complex zeta_ij(u, v);
            try {
                mesh.push_back(envelope_point(f, zeta_ij));
            } catch (const DegenerateError&) {
                EnvelopePoint p;
                p.zeta = zeta_ij;
                p.x = p.y = p.h = p.s = p.t = nan;
                p.frozen = true;
                mesh.push_back(p);
            }
        }
    }
    return mesh;
}

namespace {

// d(x,y)/d(u,v) at interior node (i, j) by central differences on the mesh.
bool mesh_jacobian(const std::vector<EnvelopePoint>& mesh, int nu, int nv, int i, int j,
                   double jac[2][2], double du, double dv) {
    auto at = [&](int ii, int jj) -> const EnvelopePoint& {
        return mesh[static_cast<size_t>(jj) * nu + ii];
    };
    const auto &xr = at(i + 1, j), &xl = at(i - 1, j);
    const auto &yu = at(i, j + 1), &yd = at(i, j - 1);
    if (xr.frozen || xl.frozen || yu.frozen || yd.frozen) return false;
    jac[0][0] = (xr.x - xl.x) / (2 * du);
    jac[0][1] = (yu.x - yd.x) / (2 * dv);
    jac[1][0] = (xr.y - xl.y) / (2 * du);
    jac[1][1] = (yu.y - yd.y) / (2 * dv);
    (void)nv;
    return true;
}

}  // namespace

double ampere_mesh_residual(const std::vector<EnvelopePoint>& mesh, int nu, int nv) {
    if (static_cast<size_t>(nu) * static_cast<size_t>(nv) != mesh.size() || nu < 3 || nv < 3)
        throw std::invalid_argument("ampere_mesh_residual: bad mesh dimensions");
    const double du = mesh[1].zeta.real() - mesh[0].zeta.real();
    const double dv = mesh[static_cast<size_t>(nu)].zeta.imag() - mesh[0].zeta.imag();

    double worst = 0.0;
    for (int j = 1; j + 1 < nv; ++j) {
        for (int i = 1; i + 1 < nu; ++i) {
            const EnvelopePoint& p = mesh[static_cast<size_t>(j) * nu + i];
            if (p.frozen) continue;
            double jac[2][2];
            if (!mesh_jacobian(mesh, nu, nv, i, j, jac, du, dv)) continue;
            const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
            if (std::abs(det) < 1e-8) continue;  // not locally injective here
            // Invert to z_x = u_x + i v_x, z_y = u_y + i v_y.
            const Complex z_x(jac[1][1] / det, -jac[1][0] / det);
            const Complex z_y(-jac[0][1] / det, jac[0][0] / det);
            if (std::abs(z_y) < 1e-14) continue;
            worst = std::max(worst, std::abs(z_x / z_y - p.gamma));
        }
    }
    return worst;
}

int jacobian_sign_changes(const std::vector<EnvelopePoint>& mesh, int nu, int nv) {
    if (static_cast<size_t>(nu) * static_cast<size_t>(nv) != mesh.size() || nu < 3 || nv < 3)
        throw std::invalid_argument("jacobian_sign_changes: bad mesh dimensions");
    const double du = mesh[1].zeta.real() - mesh[0].zeta.real();
    const double dv = mesh[static_cast<size_t>(nu)].zeta.imag() - mesh[0].zeta.imag();

    std::vector<int> sign(mesh.size(), 0);
    for (int j = 1; j + 1 < nv; ++j) {
        for (int i = 1; i + 1 < nu; ++i) {
            double jac[2][2];
            if (!mesh_jacobian(mesh, nu, nv, i, j, jac, du, dv)) continue;
            const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
            sign[static_cast<size_t>(j) * nu + i] = det > 0 ? 1 : (det < 0 ? -1 : 0);
        }
    }
    int changes = 0;
    for (int j = 1; j + 1 < nv; ++j) {
        for (int i = 1; i + 1 < nu; ++i) {
            const int s0 = sign[static_cast<size_t>(j) * nu + i];
            if (s0 == 0) continue;
            if (i + 2 < nu && sign[static_cast<size_t>(j) * nu + i + 1] == -s0) ++changes;
            if (j + 2 < nv && sign[static_cast<size_t>(j + 1) * nu + i] == -s0) ++changes;
        }
    }
    return changes;
}

}  // namespace gradshape
