#include "gradshape/tensions.hpp"

#include <cmath>
#include <limits>

namespace gradshape {

namespace {

Membership classify_interval(double x, double lo, double hi, double tol) {
    // Half-open infinities encoded as +-inf.
    if (x < lo - tol || x > hi + tol) return Membership::Outside;
    if (x < lo + tol || x > hi - tol) return Membership::Boundary;
    return Membership::Interior;
}

Membership combine(Membership a, Membership b) {
    if (a == Membership::Outside || b == Membership::Outside) return Membership::Outside;
    if (a == Membership::Boundary || b == Membership::Boundary) return Membership::Boundary;
    return Membership::Interior;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

void SurfaceTensionModel::require_interior(Slope q) const {
    if (classify(q, kBoundaryTol) != Membership::Interior)
        throw DomainError(name_ + ": slope (" + std::to_string(q.s) + ", " +
                          std::to_string(q.t) + ") is not interior to the slope domain");
}

void SurfaceTensionModel::require_chart_point(Complex z) const {
    if (!has_closed_chart_)
        throw CapabilityError(name_ + ": model has no closed-form intrinsic chart");
    if (!chart_contains_impl(z))
        throw DomainError(name_ + ": z is not interior to the chart domain");
}

double SurfaceTensionModel::sigma(Slope q) const {
    if (!has_closed_sigma_)
        throw CapabilityError(name_ + ": model has no closed-form sigma");
    require_interior(q);
    return sigma_impl(q);
}

SigmaGradient SurfaceTensionModel::gradient(Slope q) const {
    if (!has_closed_sigma_)
        throw CapabilityError(name_ + ": model has no closed-form sigma");
    require_interior(q);
    return gradient_impl(q);
}

HessianTriple SurfaceTensionModel::hessian(Slope q) const {
    if (!has_closed_sigma_)
        throw CapabilityError(name_ + ": model has no closed-form sigma");
    require_interior(q);
    return hessian_impl(q);
}

Complex SurfaceTensionModel::chart(Slope q) const {
    if (!has_closed_chart_)
        throw CapabilityError(name_ + ": model has no closed-form intrinsic chart");
    require_interior(q);
    return chart_impl(q);
}

ChartJet SurfaceTensionModel::chart_point(Complex z) const {
    require_chart_point(z);
    return chart_point_impl(z);
}

double SurfaceTensionModel::schrodinger_q(Complex z) const {
    require_chart_point(z);
    return schrodinger_q_impl(z);
}

double SurfaceTensionModel::sigma_impl(Slope) const {
    throw CapabilityError(name_ + ": sigma not implemented");
}
SigmaGradient SurfaceTensionModel::gradient_impl(Slope) const {
    throw CapabilityError(name_ + ": gradient not implemented");
}
HessianTriple SurfaceTensionModel::hessian_impl(Slope) const {
    throw CapabilityError(name_ + ": hessian not implemented");
}
Complex SurfaceTensionModel::chart_impl(Slope) const {
    throw CapabilityError(name_ + ": chart not implemented");
}
ChartJet SurfaceTensionModel::chart_point_impl(Complex) const {
    throw CapabilityError(name_ + ": chart inverse not implemented");
}
bool SurfaceTensionModel::chart_contains_impl(Complex) const { return false; }
double SurfaceTensionModel::schrodinger_q_impl(Complex) const {
    throw CapabilityError(name_ + ": potential not implemented");
}

namespace {

// sigma = (2/3)(s^-2 + t^-2) on (0, inf)^2; chart z = 1/s - i/t maps to the
// open fourth quadrant; psi = -Im(z^2) is harmonic (trivial potential).
class TrivialExampleModel final : public SurfaceTensionModel {
public:
    TrivialExampleModel()
        : SurfaceTensionModel("trivial_example", true, true, true, false) {}

protected:
    Membership classify(Slope q, double tol) const override {
        return combine(classify_interval(q.s, 0.0, kInf, tol),
                       classify_interval(q.t, 0.0, kInf, tol));
    }
    double sigma_impl(Slope q) const override {
        return (2.0 / 3.0) * (1.0 / (q.s * q.s) + 1.0 / (q.t * q.t));
    }
    SigmaGradient gradient_impl(Slope q) const override {
        return {-(4.0 / 3.0) / (q.s * q.s * q.s), -(4.0 / 3.0) / (q.t * q.t * q.t)};
    }
    HessianTriple hessian_impl(Slope q) const override {
        return {4.0 / std::pow(q.s, 4), 0.0, 4.0 / std::pow(q.t, 4)};
    }
    Complex chart_impl(Slope q) const override {
        return Complex(1.0 / q.s, -1.0 / q.t);
    }
    bool chart_contains_impl(Complex z) const override {
        return z.real() > kBoundaryTol && z.imag() < -kBoundaryTol;
    }
    ChartJet chart_point_impl(Complex z) const override {
        const double u = z.real(), v = z.imag();
        ChartJet jet;
        jet.slope = {1.0 / u, -1.0 / v};
        jet.s_z = -2.0 / ((z + std::conj(z)) * (z + std::conj(z)));
        jet.t_z = Complex(0, 2) / ((z - std::conj(z)) * (z - std::conj(z)));
        jet.psi = -2.0 * u * v;  // = -Im(z^2)
        jet.psi_z = Complex(0, 1) * z;
        return jet;
    }
    double schrodinger_q_impl(Complex) const override { return 0.0; }
};

// sigma = -(1 + log(cos(pi s)/(pi t))) t on (-1/2, 1/2) x (0, inf);
// det Hess = pi^2, chart z = -pi t (tan(pi s) - i) onto the upper half-plane.
class YoungTableauxModel final : public SurfaceTensionModel {
public:
    YoungTableauxModel()
        : SurfaceTensionModel("young_tableaux", true, true, true, true) {}

protected:
    Membership classify(Slope q, double tol) const override {
        return combine(classify_interval(q.s, -0.5, 0.5, tol),
                       classify_interval(q.t, 0.0, kInf, tol));
    }
    double sigma_impl(Slope q) const override {
        return -(1.0 + std::log(std::cos(kPi * q.s) / (kPi * q.t))) * q.t;
    }
    SigmaGradient gradient_impl(Slope q) const override {
        return {kPi * q.t * std::tan(kPi * q.s),
                std::log(kPi * q.t / std::cos(kPi * q.s))};
    }
    HessianTriple hessian_impl(Slope q) const override {
        const double sec = 1.0 / std::cos(kPi * q.s);
        return {kPi * kPi * q.t * sec * sec, kPi * std::tan(kPi * q.s), 1.0 / q.t};
    }
    Complex chart_impl(Slope q) const override {
        return -kPi * q.t * Complex(std::tan(kPi * q.s), -1.0);
    }
    bool chart_contains_impl(Complex z) const override {
        return z.imag() > kBoundaryTol;
    }
    ChartJet chart_point_impl(Complex z) const override {
        ChartJet jet;
        jet.slope = {std::arg(z) / kPi - 0.5, z.imag() / kPi};
        jet.s_z = 1.0 / (2.0 * kPi * Complex(0, 1) * z);
        jet.t_z = 1.0 / (2.0 * kPi * Complex(0, 1));
        jet.psi = std::sqrt(kPi);
        jet.psi_z = 0.0;
        return jet;
    }
    double schrodinger_q_impl(Complex) const override { return 0.0; }
};

// sigma = -log(st) on (0, inf)^2; chart z = log s - i log t onto C;
// psi = e^{(-u+v)/2}, potential q = 1/2.
class EnharmonicModel final : public SurfaceTensionModel {
public:
    EnharmonicModel()
        : SurfaceTensionModel("enharmonic", true, true, false, false) {}

protected:
    Membership classify(Slope q, double tol) const override {
        return combine(classify_interval(q.s, 0.0, kInf, tol),
                       classify_interval(q.t, 0.0, kInf, tol));
    }
    double sigma_impl(Slope q) const override { return -std::log(q.s * q.t); }
    SigmaGradient gradient_impl(Slope q) const override {
        return {-1.0 / q.s, -1.0 / q.t};
    }
    HessianTriple hessian_impl(Slope q) const override {
        return {1.0 / (q.s * q.s), 0.0, 1.0 / (q.t * q.t)};
    }
    Complex chart_impl(Slope q) const override {
        return Complex(std::log(q.s), -std::log(q.t));
    }
    bool chart_contains_impl(Complex) const override { return true; }
    ChartJet chart_point_impl(Complex z) const override {
        const double u = z.real(), v = z.imag();
        const double s = std::exp(u), t = std::exp(-v);
        ChartJet jet;
        jet.slope = {s, t};
        jet.s_z = 0.5 * s;
        jet.t_z = Complex(0, 0.5) * t;
        jet.psi = std::exp(0.5 * (-u + v));
        jet.psi_z = jet.psi * Complex(-0.25, -0.25);
        return jet;
    }
    double schrodinger_q_impl(Complex) const override { return 0.5; }
};

// sigma = (s^2 + t^2)^{p/2}; chart z = r^alpha e^{-i theta}, alpha = sqrt(p-1).
class PLaplaceModel final : public SurfaceTensionModel {
public:
    explicit PLaplaceModel(double p)
        : SurfaceTensionModel("p_laplace", true, true, p == 2.0, p == 2.0),
          p_(p),
          alpha_(std::sqrt(p - 1.0)),
          // psi = (p^2 (p-1))^{1/4} R^beta with R = |z|.
          beta_((p - 2.0) / (2.0 * std::sqrt(p - 1.0))),
          psi0_(std::pow(p_ * p_ * (p_ - 1.0), 0.25)) {}

    double p() const { return p_; }

protected:
    Membership classify(Slope q, double tol) const override {
        if (p_ == 2.0) return Membership::Interior;  // smooth quadratic on all of R^2
        const double r = std::hypot(q.s, q.t);
        return r > tol ? Membership::Interior : Membership::Boundary;
    }
    double sigma_impl(Slope q) const override {
        return std::pow(q.s * q.s + q.t * q.t, 0.5 * p_);
    }
    SigmaGradient gradient_impl(Slope q) const override {
        const double f = p_ * std::pow(q.s * q.s + q.t * q.t, 0.5 * p_ - 1.0);
        return {f * q.s, f * q.t};
    }
    HessianTriple hessian_impl(Slope q) const override {
        const double r2 = q.s * q.s + q.t * q.t;
        const double f = p_ * std::pow(r2, 0.5 * p_ - 1.0);
        const double g = p_ * (p_ - 2.0) * std::pow(r2, 0.5 * p_ - 2.0);
        return {f + g * q.s * q.s, g * q.s * q.t, f + g * q.t * q.t};
    }
    Complex chart_impl(Slope q) const override {
        const double r = std::hypot(q.s, q.t);
        const double theta = std::atan2(q.t, q.s);
        return std::polar(std::pow(r, alpha_), -theta);
    }
    bool chart_contains_impl(Complex z) const override {
        return std::abs(z) > kBoundaryTol;
    }
    ChartJet chart_point_impl(Complex z) const override {
        const double big_r = std::abs(z);
        const double r = std::pow(big_r, 1.0 / alpha_);
        const double theta = -std::arg(z);
        const Complex w = std::polar(r, theta);  // s + it
        const Complex wc = std::conj(w);
        ChartJet jet;
        jet.slope = {w.real(), w.imag()};
        jet.s_z = (w * (1.0 - alpha_) + wc * (1.0 + alpha_)) / (4.0 * alpha_ * z);
        jet.t_z = (w * (1.0 - alpha_) - wc * (1.0 + alpha_)) /
                  (Complex(0, 4.0) * alpha_ * z);
        jet.psi = psi0_ * std::pow(big_r, beta_);
        jet.psi_z = beta_ * jet.psi / (2.0 * z);
        return jet;
    }
    double schrodinger_q_impl(Complex z) const override {
        const double c = (p_ - 2.0) * (p_ - 2.0) / (4.0 * (p_ - 1.0));
        return c / std::norm(z);
    }

private:
    double p_;
    double alpha_;
    double beta_;
    double psi0_;
};

// Normalized dimer surface tension sigma/pi: kappa = 1, psi = 1. No closed
// sigma; chart only. N = cvx{(2,0),(0,2),(-2,0),(0,-2)}. With z in H and
// w = (1+z)/(z-1) in the lower half-plane,
//   (s, t) = (2/pi)(arg z - arg w - pi, arg z + arg w).
class DimerSquareModel final : public SurfaceTensionModel {
public:
    DimerSquareModel()
        : SurfaceTensionModel("dimer_square", false, true, true, true) {}

protected:
    Membership classify(Slope q, double tol) const override {
        const double m = std::abs(q.s) + std::abs(q.t);
        if (m > 2.0 + tol) return Membership::Outside;
        if (m > 2.0 - tol) return Membership::Boundary;
        return Membership::Interior;
    }
    bool chart_contains_impl(Complex z) const override {
        return z.imag() > kBoundaryTol;
    }
    ChartJet chart_point_impl(Complex z) const override {
        const Complex w = (1.0 + z) / (z - 1.0);
        ChartJet jet;
        jet.slope = {(2.0 / kPi) * (std::arg(z) - std::arg(w) - kPi),
                     (2.0 / kPi) * (std::arg(z) + std::arg(w))};
        const Complex inv_pi_i = 1.0 / (kPi * Complex(0, 1));
        const Complex a = 1.0 / z;
        const Complex b = 2.0 / (z * z - 1.0);  // = w'/w with sign flipped
        jet.s_z = inv_pi_i * (a + b);
        jet.t_z = inv_pi_i * (a - b);
        jet.psi = 1.0;
        jet.psi_z = 0.0;
        return jet;
    }
    double schrodinger_q_impl(Complex) const override { return 0.0; }
};

}  // namespace

ModelPtr make_builtin(const std::string& name, const std::vector<double>& params) {
    if (name == "trivial_example") return std::make_shared<TrivialExampleModel>();
    if (name == "young_tableaux") return std::make_shared<YoungTableauxModel>();
    if (name == "enharmonic") return std::make_shared<EnharmonicModel>();
    if (name == "dimer_square") return std::make_shared<DimerSquareModel>();
    if (name == "p_laplace") {
        if (params.empty())
            throw std::invalid_argument("p_laplace requires a parameter p");
        const double p = params[0];
        if (!(p > 1.0))
            throw std::invalid_argument("p_laplace requires p > 1, got p = " +
                                        std::to_string(p));
        return std::make_shared<PLaplaceModel>(p);
    }
    throw std::invalid_argument("unknown surface tension model: " + name);
}

ModelPtr parse_model_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) return make_builtin(spec);
    const std::string name = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    const auto eq = rest.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("bad model spec, expected name:key=value, got " + spec);
    return make_builtin(name, {std::stod(rest.substr(eq + 1))});
}

}  // namespace gradshape
