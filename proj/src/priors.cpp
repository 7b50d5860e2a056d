#include "qredux/priors.hpp"

#include <cmath>

#include "qredux/errors.hpp"
#include "qredux/quadrature.hpp"
#include "qredux/specfun.hpp"

namespace qredux::priors {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_u(double u) {
    if (!(u < 1.0)) throw domain_error("prior family requires u < 1");
}

} // namespace

double q_normalization(double u) {
    require_u(u);
    return std::exp(specfun::log_gamma(2.5 - u) - specfun::log_gamma(1.0 - u)) /
           std::pow(kPi, 1.5);
}

double q_density(double u, double r) {
    require_u(u);
    if (r < 0.0 || r > 1.0 || (r == 1.0 && u > 0.0))
        throw domain_error("q_density: r outside the admissible range");
    return q_normalization(u) * std::pow(1.0 - r * r, -u);
}

double kubo_mori_density(double u, double r, double theta) {
    require_u(u);
    if (r < 0.0 || r >= 1.0)
        throw domain_error("kubo_mori_density: requires 0 <= r < 1");
    if (r == 0.0) return 0.0; // r log((1+r)/(1-r)) -> 0
    const double norm =
        (1.0 - u) *
        std::exp(specfun::log_gamma(2.5 - u) - specfun::log_gamma(1.0 - u)) /
        (std::pow(kPi, 1.5) * (3.0 - 2.0 * u));
    return norm * r * std::log((1.0 + r) / (1.0 - r)) * std::sin(theta) *
           std::pow(1.0 - r * r, -u);
}

double monotone_volume(const std::function<double(double)>& f, double r,
                       double theta) {
    // Validate the functional equation f(1) = 1, f(t) = t f(1/t) on a grid.
    if (std::abs(f(1.0) - 1.0) > 1e-10)
        throw contract_error("monotone_volume: handle violates f(1) = 1");
    for (double t : {0.05, 0.2, 0.5, 0.8, 1.5, 3.0, 10.0}) {
        if (std::abs(f(t) - t * f(1.0 / t)) > 1e-10 * std::max(1.0, std::abs(f(t))))
            throw contract_error("monotone_volume: handle violates f(t) = t f(1/t)");
        if (!(f(t) > 0.0))
            throw contract_error("monotone_volume: handle not positive");
    }
    if (r <= 0.0 || r >= 1.0)
        throw domain_error("monotone_volume: requires 0 < r < 1");
    return r * r * std::sin(theta) /
           (f((1.0 - r) / (1.0 + r)) * std::sqrt(1.0 - r * r) * (1.0 + r));
}

double spherical_from_cartesian(double density, double r, double theta) {
    return density * r * r * std::sin(theta);
}

double cartesian_from_spherical(double density, double r, double theta) {
    const double jac = r * r * std::sin(theta);
    if (jac == 0.0)
        throw domain_error("cartesian_from_spherical: Jacobian vanishes");
    return density / jac;
}

double RadialPrior::density(double r) const {
    return smooth(r) * std::pow(1.0 - r * r, -singular_exponent);
}

RadialPrior RadialPrior::from_q(double u) {
    require_u(u);
    const double norm = q_normalization(u);
    return {[norm](double) { return norm; }, u};
}

RadialPrior RadialPrior::uniform_ball() {
    return {[](double) { return 3.0 / (4.0 * kPi); }, 0.0};
}

double radial_mass(const RadialPrior& w) {
    return specfun::integrate_radial(
        [&w](double r) { return 4.0 * kPi * r * r * w.smooth(r); },
        w.singular_exponent);
}

} // namespace qredux::priors
