#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace qredux::specfun {

/// Computes  int_0^1 f(r) (1 - r^2)^(-u) dr  for u < 1 by tanh-sinh
/// (double-exponential) quadrature. The weight is evaluated from
/// cancellation-free node coordinates, so the endpoint singularity at
/// r = 1 needs no special-casing by the caller.
///
/// Throws domain_error for u >= 1 and accuracy_error (carrying the best
/// estimate) if the refinement has not converged at the level cap.
double integrate_radial(const std::function<double(double)>& f, double u,
                        double abs_tol = 1e-13);

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on the
/// Legendre polynomial; exact for polynomials of degree 2m - 1).
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int m);

} // namespace qredux::specfun
