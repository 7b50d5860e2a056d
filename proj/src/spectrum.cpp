#include "qredux/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qredux/errors.hpp"
#include "qredux/quadrature.hpp"
#include "qredux/specfun.hpp"

namespace qredux::spectrum {

namespace {

using specfun::log_gamma;

void require_u(double u) {
    if (!(u < 1.0)) throw domain_error("spectrum: requires u < 1");
}

std::vector<int> mask_bits(std::uint64_t mask) {
    std::vector<int> bits;
    while (mask) {
        bits.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return bits;
}

// Enumerate all k-subsets of the set bits of pool, in lexicographic order
// of the chosen positions.
void for_each_subset(const std::vector<int>& pool, int k,
                     const std::function<void(std::uint64_t)>& fn) {
    const int m = static_cast<int>(pool.size());
    if (k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= 1ull << pool[i];
        fn(mask);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

double log_eigenvalue(int n, double u, int d) {
    require_u(u);
    if (d < 0 || d > n + 1)
        throw domain_error("log_eigenvalue: d outside [0, n+1]");
    return -n * std::log(2.0) + log_gamma(2.5 - u) +
           log_gamma(2.0 + n - d - u) + log_gamma(1.0 + d - u) -
           log_gamma(2.5 + 0.5 * n - u) - log_gamma(2.0 + 0.5 * n - u) -
           log_gamma(1.0 - u);
}

double eigenvalue(int n, double u, int d) {
    return std::exp(log_eigenvalue(n, u, d));
}

BigUint ballot_count(int n, int d) {
    if (d < 0 || 2 * d > n)
        throw domain_error("ballot_count: requires 0 <= d <= n/2");
    BigUint c = specfun::binomial(n + 1, d);
    c.mul(static_cast<std::uint32_t>(n - 2 * d + 1));
    c.div_exact(static_cast<std::uint32_t>(n + 1));
    return c;
}

BigUint multiplicity(int n, int d) {
    BigUint c = ballot_count(n, d);
    c.mul(static_cast<std::uint32_t>(n - 2 * d + 1));
    return c;
}

std::vector<BallotPath> ballot_paths(int n, int d) {
    if (d < 0 || 2 * d > n)
        throw domain_error("ballot_paths: requires 0 <= d <= n/2");
    std::vector<BallotPath> out;
    std::vector<bool> steps(n, false);
    // Depth-first with up before down gives lexicographic order (up < down).
    const std::function<void(int, int, int)> recurse = [&](int pos, int downs,
                                                           int height) {
        if (pos == n) {
            BallotPath p;
            p.n = n;
            p.d = d;
            p.down = steps;
            int ups_taken = 0;
            for (int i = 0; i < n; ++i) {
                if (steps[i]) {
                    p.b_mask |= 1ull << i;
                } else if (ups_taken < d) {
                    p.a_mask |= 1ull << i;
                    ++ups_taken;
                }
            }
            out.push_back(std::move(p));
            return;
        }
        const int ups_left = (n - d) - (pos - downs);
        const int downs_left = d - downs;
        if (ups_left > 0) {
            steps[pos] = false;
            recurse(pos + 1, downs, height + 1);
        }
        if (downs_left > 0 && height > 0) {
            steps[pos] = true;
            recurse(pos + 1, downs + 1, height - 1);
            steps[pos] = false;
        }
    };
    recurse(0, 0, 0);
    return out;
}

EigenvectorSpec eigenvector(int n, int d, int s, std::uint64_t a_mask,
                            std::uint64_t b_mask) {
    if (a_mask & b_mask)
        throw domain_error("eigenvector: A and B must be disjoint");
    if (d < 0 || s < d || s > n - d)
        throw domain_error("eigenvector: requires 0 <= d <= s <= n-d");
    if (std::popcount(a_mask) != d || std::popcount(b_mask) != d)
        throw domain_error("eigenvector: A and B must be d-subsets");

    EigenvectorSpec spec;
    spec.n = n;
    spec.d = d;
    spec.s = s;
    spec.a_mask = a_mask;
    spec.b_mask = b_mask;

    const std::vector<int> a_bits = mask_bits(a_mask); // ascending
    const std::vector<int> b_bits = mask_bits(b_mask);
    const std::uint64_t full = (n >= 64) ? ~0ull : ((1ull << n) - 1);
    const std::vector<int> rest = mask_bits(full & ~(a_mask | b_mask));

    // The paper pairs by rank from the largest element; on ascending order
    // this matches positions index-for-index, so X' drops b_bits[j] exactly
    // when a_bits[j] is taken into X.
    for (std::uint64_t choice = 0; choice < (1ull << d); ++choice) {
        std::uint64_t x_mask = 0, xp_mask = b_mask;
        for (int j = 0; j < d; ++j) {
            if (choice & (1ull << j)) {
                x_mask |= 1ull << a_bits[j];
                xp_mask &= ~(1ull << b_bits[j]);
            }
        }
        const int sign = (std::popcount(x_mask) % 2 == 0) ? 1 : -1;
        for_each_subset(rest, s - d, [&](std::uint64_t y_mask) {
            spec.terms.emplace_back(x_mask | xp_mask | y_mask, sign);
        });
    }
    return spec;
}

std::vector<EigenvectorSpec> eigenbasis(int n) {
    if (n < 1) throw domain_error("eigenbasis: requires n >= 1");
    if (n > 12) throw capacity_error("eigenbasis: n > 12 exceeds guard");
    std::vector<EigenvectorSpec> basis;
    for (int d = 0; 2 * d <= n; ++d) {
        const auto paths = ballot_paths(n, d);
        for (int s = d; s <= n - d; ++s)
            for (const auto& p : paths)
                basis.push_back(eigenvector(n, d, s, p.a_mask, p.b_mask));
    }
    return basis;
}

Eigen::VectorXd dense_vector(const EigenvectorSpec& spec) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(Eigen::Index{1} << spec.n);
    for (const auto& [mask, sign] : spec.terms)
        v[static_cast<Eigen::Index>(mask)] += sign;
    return v;
}

double generalized_eigenvalue(int n, double u, int d, int s,
                              const std::function<double(double)>& f) {
    require_u(u);
    if (d < 0 || s < d || s > n - d)
        throw domain_error("generalized_eigenvalue: requires 0 <= d <= s <= n-d");
    const double gamma_ratio =
        std::exp(log_gamma(2.0 + n - d - u) + log_gamma(1.0 + d - u) -
                 log_gamma(2.0 + n - s - u) - log_gamma(2.0 + s - u) -
                 log_gamma(1.0 - u));
    return f(n - 2 * s) * gamma_ratio;
}

double radial_eigenvalue(int n, int d, const priors::RadialPrior& w) {
    if (d < 0 || 2 * d > n)
        throw domain_error("radial_eigenvalue: requires 0 <= d <= n/2");
    // Fold the [-1,0] half of the printed integral onto [0,1]: the
    // substitution r -> -r swaps the two power patterns.
    auto f = [&](double r) {
        const double up = std::pow(1.0 + r, n - d + 1) * std::pow(1.0 - r, d);
        const double down = std::pow(1.0 - r, n - d + 1) * std::pow(1.0 + r, d);
        return r * (up - down) * w.smooth(r);
    };
    const double integral = specfun::integrate_radial(f, w.singular_exponent);
    return M_PI / (std::pow(2.0, n - 1) * (n - 2 * d + 1)) * integral;
}

Eigen::MatrixXd eigenprojector(int n, int d) {
    if (n < 1 || d < 0 || 2 * d > n)
        throw domain_error("eigenprojector: bad (n, d)");
    if (n > 10) throw capacity_error("eigenprojector: n > 10 exceeds guard");
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXd projector = Eigen::MatrixXd::Zero(dim, dim);
    const auto paths = ballot_paths(n, d);

    // Vectors with different s live on disjoint coordinate blocks, so
    // orthonormalization only has to run within each s.
    for (int s = d; s <= n - d; ++s) {
        std::vector<Eigen::VectorXd> basis;
        basis.reserve(paths.size());
        for (const auto& p : paths) {
            Eigen::VectorXd v =
                dense_vector(eigenvector(n, d, s, p.a_mask, p.b_mask));
            const double original_norm = v.norm();
            // Modified Gram-Schmidt with one re-orthogonalization pass.
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& q : basis) v -= q.dot(v) * q;
            const double norm = v.norm();
            if (norm <= 1e-10 * original_norm)
                throw accuracy_error(
                    "eigenprojector: unexpected rank deficiency in the "
                    "combinatorial basis",
                    norm);
            v /= norm;
            projector.noalias() += v * v.transpose();
            basis.push_back(std::move(v));
        }
    }
    return projector;
}

Spectrum closed_form_spectrum(int n, double u) {
    require_u(u);
    if (n < 1) throw domain_error("closed_form_spectrum: requires n >= 1");
    Spectrum sp;
    sp.n = n;
    sp.u = u;
    for (int d = 0; 2 * d <= n; ++d) {
        SpectrumLevel level;
        level.d = d;
        level.lambda = eigenvalue(n, u, d);
        level.multiplicity = multiplicity(n, d);
        for (int s = d; s <= n - d; ++s) level.s_values.push_back(s);
        sp.levels.push_back(std::move(level));
    }
    return sp;
}

} // namespace qredux::spectrum
