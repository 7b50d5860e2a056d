#pragma once

#include <string>
#include <vector>

namespace qredux::redundancy {

/// Weights of the tensor power on the eigenlevels of zeta_n(u):
/// w_d(r) is the trace weight of the n-fold state at Bloch radius r inside
/// the lambda_d eigenspace. Sums to 1; direction-independent.
struct LevelWeights {
    int n = 0;
    double r = 0.0;
    std::vector<double> weights; // d = 0 .. floor(n/2)
};

LevelWeights level_weights(int n, double r);

/// Exact relative entropy of the n-fold state at radius r with respect to
/// zeta_n(u), via the closed-form trace expansion. The removable limits at
/// r = 0 and r = 1 are selected by exact endpoint comparison after
/// clamping inputs within 1e-14 of an endpoint.
double relative_entropy_exact(int n, double u, double r);

enum class Regime { interior, center, boundary };

/// Leading asymptotics of the relative entropy (O(1/n) term omitted):
/// interior (0 < r < 1) carries the nonclassical term
/// (1/2r) log((1-r)/(1+r)); center is its r->0 limit; boundary (r = 1)
/// switches to (2-u) log n order.
double asymptotic_redundancy(int n, double u, double r, Regime regime);

/// Classical Clarke-Barron expressions, naively transplanted: the 3d
/// minimax constant, the 3d pointwise redundancy, and the 2d boundary
/// baseline log n + log 2 - 1.
struct ClassicalBaselines {
    double minimax3d = 0.0;
    double redundancy3d = 0.0;
    double boundary2d = 0.0;
};

ClassicalBaselines classical_baselines(int n, double u, double r);

/// Exact von Neumann entropy of zeta_n(u): -sum_d mult_d lambda_d log lambda_d.
double zeta_entropy_exact(int n, double u);

/// Its asymptotic expansion with the O(n^{u-1}) term omitted.
double zeta_entropy_asym(int n, double u);

/// Coefficient of the linear-in-n term of the entropy expansion:
/// (-7+5u)/(2(2-u)(1-u)) + psi(5-2u) - psi(1-u).
double entropy_linear_coef(double u);

/// Constant C(u) of the asymptotic Bayes redundancy (3/2) log n + C(u).
double bayes_constant(double u);

enum class BayesMode { exact, asymptotic };

/// Bayes (average-case) redundancy under the prior q(u).
double bayes_redundancy(int n, double u, BayesMode mode);

/// Parameters of the summation identities; each identity reads the fields
/// it needs.
struct IdentityParams {
    int n = 8;
    double r = 0.5;
    double u = 0.3;
    double alpha = 0.5; // must exceed u - 1
    double z = 0.2;
    int d = 2;
};

/// Residual |LHS - RHS| of a closed-form summation identity. Exact
/// identities: a8..a14, B3..B7, e37. The asymptotic expansions a15 and B8
/// instead return the scaled gap (n or n^{1-u} times the defect of the
/// expansion with its order term dropped).
double identity_check(const std::string& id, const IdentityParams& p);

/// All exact identity ids, in citation order.
const std::vector<std::string>& exact_identity_ids();

struct RedundancyReport {
    int n = 0;
    double u = 0.0;
    double r = 0.0;
    double exact = 0.0;
    double asymptotic = 0.0;
    double scaled_error = 0.0; // n * |exact - asymptotic|
};

/// Report at (n, u, r); the regime is picked from r.
RedundancyReport report(int n, double u, double r);

} // namespace qredux::redundancy
