#include "qredux/compress.hpp"

#include <algorithm>
#include <cmath>

#include "qredux/errors.hpp"
#include "qredux/redundancy.hpp"
#include "qredux/spectrum.hpp"

namespace qredux::compress {

CompressionPlan plan(int n, double u, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("plan: requires 0 < epsilon < 1");
    if (!(u < 1.0)) throw domain_error("plan: requires u < 1");
    if (n < 1) throw domain_error("plan: requires n >= 1");

    CompressionPlan out;
    out.n = n;
    out.u = u;
    out.epsilon = epsilon;
    double cumulative = 0.0;
    BigUint dim(0);
    for (int d = 0; 2 * d <= n; ++d) {
        const BigUint mult = spectrum::multiplicity(n, d);
        cumulative += mult.to_double() * spectrum::eigenvalue(n, u, d);
        dim += mult;
        out.level_cap = d;
        if (cumulative >= 1.0 - epsilon) break;
    }
    out.dim = dim;
    out.prior_weight = std::min(cumulative, 1.0);
    out.qubits = std::log2(dim.to_double());
    return out;
}

double source_weight(int n, int levels, double r) {
    if (levels < 0 || 2 * levels > n)
        throw domain_error("source_weight: requires 0 <= D <= n/2");
    const redundancy::LevelWeights lw = redundancy::level_weights(n, r);
    double total = 0.0;
    for (int d = 0; d <= levels; ++d) total += lw.weights[d];
    return total;
}

double fidelity_bound(double weight) {
    if (weight < 0.0 || weight > 1.0)
        throw domain_error("fidelity_bound: weight outside [0, 1]");
    return std::clamp(1.0 - 2.0 * (1.0 - weight), 0.0, 1.0);
}

} // namespace qredux::compress
