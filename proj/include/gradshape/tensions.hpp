#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gradshape/common.hpp"

namespace gradshape {

// Slope (s, t) = (dh/dx, dh/dy).
struct Slope {
    double s = 0.0;
    double t = 0.0;
};

enum class Membership { Interior, Boundary, Outside };

// (X, Y) = (sigma_s, sigma_t), the gradient map into the amoeba.
struct SigmaGradient {
    double X = 0.0;
    double Y = 0.0;
};

// Second partials of sigma.
struct HessianTriple {
    double ss = 0.0;
    double st = 0.0;
    double tt = 0.0;

    double det() const { return ss * tt - st * st; }
    bool positive_definite() const { return ss > 0.0 && det() > 0.0; }
};

// Slope, complex slope derivatives and psi = (det Hess)^{1/4} of a chart
// point, all closed form.
struct ChartJet {
    Slope slope;
    Complex s_z;
    Complex t_z;
    double psi = 0.0;
    Complex psi_z;
};

// A surface tension sigma on a slope domain N, with whatever closed forms
// the model provides. Immutable; evaluators are pure.
class SurfaceTensionModel {
public:
    virtual ~SurfaceTensionModel() = default;

    const std::string& name() const { return name_; }
    bool has_closed_sigma() const { return has_closed_sigma_; }
    bool has_closed_chart() const { return has_closed_chart_; }
    bool trivial_potential() const { return trivial_potential_; }
    bool constant_kappa() const { return constant_kappa_; }

    Membership membership(Slope q, double tol = kBoundaryTol) const {
        return classify(q, tol);
    }

    // sigma, (X, Y) and the Hessian at a strictly interior slope.
    // Throw CapabilityError when the model has no closed sigma and
    // DomainError when the slope is not interior.
    double sigma(Slope q) const;
    SigmaGradient gradient(Slope q) const;
    HessianTriple hessian(Slope q) const;

    // Intrinsic chart z(s, t) and its inverse jet at z.
    Complex chart(Slope q) const;
    ChartJet chart_point(Complex z) const;
    bool chart_contains(Complex z) const { return chart_contains_impl(z); }

    // Schroedinger potential q = (Laplace psi)/psi at a chart point.
    double schrodinger_q(Complex z) const;

protected:
    SurfaceTensionModel(std::string name, bool closed_sigma, bool closed_chart,
                        bool trivial_pot, bool const_kappa)
        : name_(std::move(name)),
          has_closed_sigma_(closed_sigma),
          has_closed_chart_(closed_chart),
          trivial_potential_(trivial_pot),
          constant_kappa_(const_kappa) {}

    virtual Membership classify(Slope q, double tol) const = 0;
    virtual double sigma_impl(Slope q) const;
    virtual SigmaGradient gradient_impl(Slope q) const;
    virtual HessianTriple hessian_impl(Slope q) const;
    virtual Complex chart_impl(Slope q) const;
    virtual ChartJet chart_point_impl(Complex z) const;
    virtual bool chart_contains_impl(Complex z) const;
    virtual double schrodinger_q_impl(Complex z) const;

    void require_interior(Slope q) const;
    void require_chart_point(Complex z) const;

private:
    std::string name_;
    bool has_closed_sigma_;
    bool has_closed_chart_;
    bool trivial_potential_;
    bool constant_kappa_;
};

using ModelPtr = std::shared_ptr<const SurfaceTensionModel>;

// Built-in models: trivial_example, young_tableaux, enharmonic,
// p_laplace (params = {p}, p > 1), dimer_square.
ModelPtr make_builtin(const std::string& name, const std::vector<double>& params = {});

// "p_laplace:p=2.5" style model spec strings as accepted by the CLI.
ModelPtr parse_model_spec(const std::string& spec);

}  // namespace gradshape
