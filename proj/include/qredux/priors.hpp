#pragma once

#include <functional>

namespace qredux::priors {

/// The one-parameter prior family q(u) on the Bloch ball, as a density per
/// Cartesian volume dx dy dz:
///   q(u) = Gamma(5/2-u) / (pi^{3/2} Gamma(1-u) (1-r^2)^u),  u < 1.
/// u = 0 is the uniform ball; u = 1/2 the candidate quantum Jeffreys prior;
/// u -> 1 concentrates on the pure-state boundary.
double q_density(double u, double r);

/// Normalization constant of q(u): the density with the (1-r^2)^(-u)
/// factor removed.
double q_normalization(double u);

/// Volume element of the Kubo-Mori/Bogoliubov family, as a density per
/// (dr dtheta dphi):
///   (1-u) Gamma(5/2-u) r log((1+r)/(1-r)) sin(theta)
///     / (pi^{3/2} (3-2u) Gamma(1-u) (1-r^2)^u),
/// with the continuous value 0 at r = 0.
double kubo_mori_density(double u, double r, double theta);

/// Unnormalized volume element of the monotone metric defined by an
/// operator monotone f with f(1) = 1 and f(t) = t f(1/t):
///   r^2 sin(theta) / (f((1-r)/(1+r)) sqrt(1-r^2) (1+r)),
/// per (dr dtheta dphi). The functional equation is validated on a t-grid;
/// a failing handle raises contract_error.
double monotone_volume(const std::function<double(double)>& f, double r,
                       double theta);

// The paper mixes two volume conventions; these convert between a density
// per dx dy dz and one per dr dtheta dphi (factor r^2 sin theta).
double spherical_from_cartesian(double density, double r, double theta);
double cartesian_from_spherical(double density, double r, double theta);

/// A spherically symmetric probability density on the unit ball, split as
///   density(r) = smooth(r) * (1 - r^2)^(-singular_exponent)
/// so quadratures can route the endpoint-singular factor explicitly.
/// The density is per Cartesian volume.
struct RadialPrior {
    std::function<double(double)> smooth;
    double singular_exponent = 0.0;

    double density(double r) const;

    /// Radial part of q(u).
    static RadialPrior from_q(double u);
    /// Uniform density 3/(4 pi) on the ball.
    static RadialPrior uniform_ball();
};

/// Total mass of a radial prior (should be 1 for a probability density).
double radial_mass(const RadialPrior& w);

} // namespace qredux::priors
