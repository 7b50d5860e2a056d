#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

namespace qredux::bayes {

/// Overlap cardinalities of two subsets I, J of [n]:
/// in_in = |I∩J|, out_out = |[n]\(I∪J)|, out_in = |J\I|, in_out = |I\J|.
struct OverlapStats {
    int n = 0;
    int in_in = 0;
    int out_out = 0;
    int out_in = 0;
    int in_out = 0;
};

OverlapStats overlap_stats(std::uint64_t row_mask, std::uint64_t col_mask, int n);

/// Entry of the Bayesian density matrix zeta_n(u): zero unless
/// out_in == in_out; otherwise k! times a Gamma ratio with
/// k = (n - in_in - out_out)/2, evaluated in log space. Depends on the
/// stats only through (in_in, out_out).
double z_entry(int n, double u, const OverlapStats& stats);

/// Full 2^n x 2^n matrix in mask order (guarded at n <= 12).
/// Real symmetric; block-diagonal over subset cardinality.
Eigen::MatrixXd zeta_matrix(int n, double u);

/// Quadrature oracle for a single entry: numerically averages the tensor
/// power entry R_IJ over the prior q(u) on the unit ball. The radial
/// direction goes through integrate_radial; the angular directions use a
/// Gauss-Legendre x trigonometric product rule. Guarded at n <= 6.
double z_entry_oracle(int n, double u, std::uint64_t row_mask,
                      std::uint64_t col_mask);

/// The generalized family: entries
///   delta_{out_in,in_out} * k! / Gamma(2 + k - u) * f(in_in - out_out),
/// for a symmetric profile f (validated as f(x) = f(-x) on |x| <= n).
Eigen::MatrixXd tilde_zeta_matrix(int n, double u,
                                  const std::function<double(double)>& f);

} // namespace qredux::bayes
