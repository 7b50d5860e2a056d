#pragma once

#include "qredux/bignum.hpp"

namespace qredux::compress {

/// A universal coding plan: retain the eigenlevels d = 0..level_cap of
/// zeta_n(u), whole levels only, until their prior weight reaches 1 - eps.
struct CompressionPlan {
    int n = 0;
    double u = 0.0;
    double epsilon = 0.0;
    int level_cap = 0;        // largest retained level index D
    BigUint dim;              // sum of retained multiplicities
    double qubits = 0.0;      // log2(dim)
    double prior_weight = 0.0; // retained weight under zeta_n(u), >= 1 - eps
};

/// Smallest D with sum_{d<=D} multiplicity_d lambda_d >= 1 - eps (valid
/// because lambda_d decreases in d).
CompressionPlan plan(int n, double u, double epsilon);

/// Trace weight of the n-fold source state at Bloch radius r inside the
/// retained subspace (levels d = 0..levels). Direction-independent.
double source_weight(int n, int levels, double r);

/// Jozsa-Schumacher style fidelity bound 1 - 2(1 - weight), clamped to
/// [0, 1].
double fidelity_bound(double weight);

} // namespace qredux::compress
