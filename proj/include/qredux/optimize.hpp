#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace qredux::optimize {

/// Root of S(n, u, r=0) = S(n, u, r=1) in u: the finite-n minimax parameter
/// under the conjecture that the worst-case radius is an endpoint.
struct MinimaxResult {
    int n = 0;
    double u_n = 0.0;
    double value = 0.0; // common redundancy at the crossing
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    std::vector<double> all_roots; // every sign change found on the scan
};

MinimaxResult minimax_u(int n);

/// Solution of 2 (1-u)^3 (psi'(1-u) - psi'(5/2-u)) = 1, the stationarity
/// condition of the asymptotic Bayes-redundancy constant C(u).
struct MaximinResult {
    double u_star = 0.0;
    double constant = 0.0; // C(u_star)
    double equation_residual = 0.0;
};

MaximinResult maximin_u();

/// Profile of the exact redundancy over r at fixed (n, u): uniform grid of
/// `grid` cells plus golden-section refinement around the best cell.
/// Reported as data; the endpoint conjecture is never asserted.
struct RmaxScan {
    double argmax_r = 0.0;
    double max_value = 0.0;
    std::vector<std::pair<double, double>> profile; // (r, S)
};

RmaxScan rmax_scan(int n, double u, int grid);

/// The Bayes-estimator optimality identity: with m = sum_i w_i P_i,
///   sum_i w_i S(P_i, Q) - sum_i w_i S(P_i, m) = S(m, Q) >= 0.
/// Returns both sides; raises accuracy_error if they disagree beyond 1e-9
/// or the gap dips below -1e-10.
struct OptimalityCheck {
    double gap = 0.0;
    double s_mq = 0.0;
};

OptimalityCheck bayes_optimality_check(
    const std::vector<Eigen::MatrixXcd>& states,
    const std::vector<double>& weights, const Eigen::MatrixXcd& q);

} // namespace qredux::optimize
