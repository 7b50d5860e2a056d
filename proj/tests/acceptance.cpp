// Acceptance suite: one line per criterion, selectable by number.
// Usage: acceptance [k]   (no argument runs all twelve)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "qredux/bayes_matrix.hpp"
#include "qredux/compress.hpp"
#include "qredux/optimize.hpp"
#include "qredux/qstate.hpp"
#include "qredux/redundancy.hpp"
#include "qredux/specfun.hpp"
#include "qredux/spectrum.hpp"

using namespace qredux;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& why) {
        if (!ok && pass) {
            pass = false;
            detail = why;
        }
    }
    void note(const std::string& text) {
        if (pass) detail = text;
    }
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c);
    return buf;
}

std::vector<double> dense_spectrum(int n, double u) {
    const auto eig = qstate::hermitian_eig(
        bayes::zeta_matrix(n, u).cast<std::complex<double>>());
    return {eig.eigenvalues.data(),
            eig.eigenvalues.data() + eig.eigenvalues.size()};
}

// 1. Catalan eigenvalue, n = 1..12, relative 1e-12.
Outcome criterion1() {
    Outcome out;
    double worst = 0.0;
    for (int n = 1; n <= 12; ++n) {
        const double scaled =
            std::exp(spectrum::log_eigenvalue(n, 0.5, 0) + n * std::log(4.0));
        const double cat = specfun::catalan(n + 1).to_double();
        worst = std::max(worst, std::abs(scaled - cat) / cat);
    }
    out.require(worst <= 1e-12, fmt("worst relative error %.3g", worst));
    out.note(fmt("worst relative error %.3g", worst));
    return out;
}

// 2. Dense eigensolver multiset vs closed-form spectrum, n <= 8.
Outcome criterion2() {
    Outcome out;
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        for (double u : {-1.0, 0.0, 0.5, 0.9}) {
            const auto dense = dense_spectrum(n, u);
            std::size_t idx = 0;
            for (int d = 0; 2 * d <= n; ++d) {
                const double lam = spectrum::eigenvalue(n, u, d);
                const long mult =
                    static_cast<long>(spectrum::multiplicity(n, d).to_double());
                for (long m = 0; m < mult; ++m)
                    worst = std::max(worst, std::abs(dense[idx++] - lam));
            }
            out.require(idx == dense.size(), "multiplicity total mismatch");
        }
    }
    out.require(worst <= 1e-9, fmt("worst |dense - closed| %.3g", worst));
    out.note(fmt("worst |dense - closed| %.3g", worst));
    return out;
}

// 3. Eigenbasis: residuals <= 1e-12, rank 2^n, 12-term vector sign-for-sign.
Outcome criterion3() {
    Outcome out;
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        const Eigen::Index dim = Eigen::Index{1} << n;
        Eigen::MatrixXd all(dim, dim);
        const auto basis = spectrum::eigenbasis(n);
        out.require(basis.size() == static_cast<std::size_t>(dim),
                    "basis size mismatch");
        for (double u : {0.0, 0.5}) {
            const Eigen::MatrixXd z = bayes::zeta_matrix(n, u);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const Eigen::VectorXd v = spectrum::dense_vector(basis[i]);
                const double lam = spectrum::eigenvalue(n, u, basis[i].d);
                worst = std::max(
                    worst, (z * v - lam * v).cwiseAbs().maxCoeff() /
                               v.cwiseAbs().maxCoeff());
                if (u == 0.0) all.col(static_cast<Eigen::Index>(i)) = v;
            }
        }
        out.require(Eigen::FullPivLU<Eigen::MatrixXd>(all).rank() == dim,
                    "rank deficiency at n = " + std::to_string(n));
    }
    out.require(worst <= 1e-12, fmt("worst eigen-residual %.3g", worst));

    // Eq. (e17): v_{2,3}({1,3},{2,5}) at n = 7, signs pinned.
    const auto spec =
        spectrum::eigenvector(7, 2, 3, (1u << 0) | (1u << 2), (1u << 1) | (1u << 4));
    auto mask_of = [](std::initializer_list<int> e) {
        std::uint64_t m = 0;
        for (int x : e) m |= 1ull << (x - 1);
        return m;
    };
    const std::vector<std::pair<std::uint64_t, int>> want = {
        {mask_of({2, 4, 5}), 1},  {mask_of({2, 5, 6}), 1},
        {mask_of({2, 5, 7}), 1},  {mask_of({1, 4, 5}), -1},
        {mask_of({1, 5, 6}), -1}, {mask_of({1, 5, 7}), -1},
        {mask_of({2, 3, 4}), -1}, {mask_of({2, 3, 6}), -1},
        {mask_of({2, 3, 7}), -1}, {mask_of({1, 3, 4}), 1},
        {mask_of({1, 3, 6}), 1},  {mask_of({1, 3, 7}), 1}};
    out.require(spec.terms.size() == 12, "12-term vector has wrong support");
    for (const auto& [mask, sign] : want) {
        bool found = false;
        for (const auto& [m, s] : spec.terms)
            if (m == mask && s == sign) found = true;
        out.require(found, "sign pattern of the 12-term vector differs");
    }
    out.note(fmt("worst eigen-residual %.3g, ranks full", worst));
    return out;
}

// 4. Identity suite on 50 random tuples, residuals <= 1e-11.
Outcome criterion4() {
    Outcome out;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        redundancy::IdentityParams p;
        p.n = 2 + static_cast<int>(unit(rng) * 18.999);
        p.r = 0.1 + 0.8 * unit(rng);
        p.u = -1.5 + 2.4 * unit(rng);
        if (std::abs(p.u) < 0.05) p.u = 0.25;
        const double alo = std::max(p.u - 0.5, -0.5);
        p.alpha = alo + unit(rng) * (0.75 - alo);
        // e37's free parameters: keep the closed form O(1)-conditioned.
        p.z = 0.4 * p.r;
        p.d = std::max(1, p.n / 4);
        for (const auto& id : redundancy::exact_identity_ids())
            worst = std::max(worst, redundancy::identity_check(id, p));
    }
    out.require(worst <= 1e-11, fmt("worst residual %.3g", worst));
    out.note(fmt("worst residual %.3g over 50 tuples x 13 identities", worst));
    return out;
}

// 5. Oracle equivalence: closed form vs dense matrices, entry vs quadrature.
Outcome criterion5() {
    Outcome out;
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(unit(rng) * 4.999);
        const double u = 0.95 - 3.0 * unit(rng);
        const double r = 0.98 * unit(rng);
        const BlochVector b = BlochVector::from_spherical(
            r, std::acos(2.0 * unit(rng) - 1.0), 2.0 * M_PI * unit(rng));
        const double dense = qstate::relative_entropy(
            qstate::tensor_power(b, n),
            bayes::zeta_matrix(n, u).cast<std::complex<double>>());
        worst = std::max(
            worst, std::abs(dense - redundancy::relative_entropy_exact(n, u, r)));
    }
    out.require(worst <= 1e-8, fmt("worst |dense - closed| %.3g", worst));

    double worst_entry = 0.0;
    for (int n : {3, 4}) {
        for (double u : {-0.5, 0.5}) {
            // one representative (I, J) per (|I|, |I∩J|) class
            for (int c = 0; c <= n; ++c) {
                for (int a = std::max(0, 2 * c - n); a <= c; ++a) {
                    const std::uint64_t i_mask = (1ull << c) - 1;
                    std::uint64_t j_mask = (1ull << a) - 1;
                    for (int bit = c; bit < 2 * c - a; ++bit)
                        j_mask |= 1ull << bit;
                    const double oracle = bayes::z_entry_oracle(n, u, i_mask, j_mask);
                    const double direct =
                        bayes::z_entry(n, u, bayes::overlap_stats(i_mask, j_mask, n));
                    worst_entry = std::max(worst_entry, std::abs(oracle - direct));
                }
            }
            // one size-mismatched pair: must vanish
            worst_entry = std::max(
                worst_entry, std::abs(bayes::z_entry_oracle(n, u, 0b001, 0b011)));
        }
    }
    out.require(worst_entry <= 1e-6, fmt("worst entry gap %.3g", worst_entry));
    out.note(fmt("relative entropy gap %.3g, entry gap %.3g", worst, worst_entry));
    return out;
}

// Shared band check: consecutive ratios of e_n within [1/3, 3].
bool band_ok(const std::vector<double>& es) {
    for (std::size_t i = 1; i < es.size(); ++i) {
        const double q = es[i] / es[i - 1];
        if (!(q >= 1.0 / 3.0 && q <= 3.0)) return false;
    }
    return true;
}

// 6. Theorem-9 asymptotics: scaled errors stay in a factor-3 band.
Outcome criterion6() {
    Outcome out;
    for (double u : {0.0, 0.5}) {
        for (double r : {0.2, 0.5, 0.8}) {
            std::vector<double> es;
            for (int n = 16; n <= 512; n *= 2)
                es.push_back(n * std::abs(redundancy::relative_entropy_exact(n, u, r) -
                                          redundancy::asymptotic_redundancy(
                                              n, u, r, redundancy::Regime::interior)));
            out.require(band_ok(es), fmt("a3 band violated at u=%.1f r=%.1f", u, r));
        }
        std::vector<double> e0, e1;
        for (int n = 16; n <= 512; n *= 2) {
            e0.push_back(n * std::abs(redundancy::relative_entropy_exact(n, u, 0.0) -
                                      redundancy::asymptotic_redundancy(
                                          n, u, 0.0, redundancy::Regime::center)));
            e1.push_back(n * std::abs(redundancy::relative_entropy_exact(n, u, 1.0) -
                                      redundancy::asymptotic_redundancy(
                                          n, u, 1.0, redundancy::Regime::boundary)));
        }
        out.require(band_ok(e0), fmt("a4 band violated at u=%.1f", u));
        out.require(band_ok(e1), fmt("a5 band violated at u=%.1f", u));
    }
    out.note("a3/a4/a5 scaled errors within the factor-3 band, n = 16..512");
    return out;
}

// 7. Theorem-11 entropy asymptotics band.
Outcome criterion7() {
    Outcome out;
    for (double u : {0.0, 0.5}) {
        std::vector<double> es;
        for (int n = 16; n <= 1024; n *= 2)
            es.push_back(std::pow(n, 1.0 - u) *
                         std::abs(redundancy::zeta_entropy_exact(n, u) -
                                  redundancy::zeta_entropy_asym(n, u)));
        out.require(band_ok(es), fmt("entropy band violated at u=%.1f", u));
    }
    out.note("n^{1-u}-scaled entropy errors within the factor-3 band, n = 16..1024");
    return out;
}

// 8. Minimax sequence: |u_n - 1/2| decreasing, |u_512 - 1/2| < 0.05.
Outcome criterion8() {
    Outcome out;
    std::vector<double> dist;
    std::string seq;
    for (int n : {8, 32, 128, 512}) {
        const double un = optimize::minimax_u(n).u_n;
        dist.push_back(std::abs(un - 0.5));
        seq += fmt("u_%g=%.4f ", static_cast<double>(n), un);
    }
    for (std::size_t i = 1; i < dist.size(); ++i)
        out.require(dist[i] < dist[i - 1], "|u_n - 1/2| not decreasing");
    out.require(dist.back() < 0.05,
                seq + fmt("-> |u_512 - 0.5| = %.4f >= 0.05 (the exact "
                          "crossing converges like 1/log n)",
                          dist.back()));
    out.note(seq);
    return out;
}

// 9. Maximin point and constants.
Outcome criterion9() {
    Outcome out;
    const auto mm = optimize::maximin_u();
    out.require(std::abs(mm.u_star - 0.531267) <= 1e-5,
                fmt("u_star = %.7f", mm.u_star));
    out.require(std::abs(mm.constant + 1.77185) <= 1e-4,
                fmt("C(u_star) = %.6f", mm.constant));
    const double c_half = redundancy::bayes_constant(0.5);
    out.require(std::abs(c_half + 1.77421) <= 1e-5, fmt("C(0.5) = %.6f", c_half));
    out.require(mm.constant > c_half, "C(u_star) <= C(0.5)");
    out.note(fmt("u_star %.6f, C(u_star) %.5f, C(0.5) %.5f", mm.u_star,
                 mm.constant, c_half));
    return out;
}

// 10. Spherically symmetric prior eigenvalues vs the closed form.
Outcome criterion10() {
    Outcome out;
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        for (double u : {-1.0, 0.0, 0.5}) {
            const auto w = priors::RadialPrior::from_q(u);
            for (int d = 0; 2 * d <= n; ++d)
                worst = std::max(worst,
                                 std::abs(spectrum::radial_eigenvalue(n, d, w) -
                                          spectrum::eigenvalue(n, u, d)));
        }
        BigUint total(0);
        for (int d = 0; 2 * d <= n; ++d) total += spectrum::multiplicity(n, d);
        out.require(total == BigUint::pow2(n), "retained dimension total != 2^n");
    }
    out.require(worst <= 1e-8, fmt("worst |radial - closed| %.3g", worst));
    out.note(fmt("worst |radial - closed| %.3g, dimensions complete", worst));
    return out;
}

// 11. Bayes-estimator optimality identity on random mixtures.
Outcome criterion11() {
    Outcome out;
    std::mt19937 rng(77);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_int_distribution<int> dim_pick(0, 2);
    auto random_density = [&](int dim) {
        Eigen::MatrixXcd a(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                a(i, j) = std::complex<double>(g(rng), g(rng));
        Eigen::MatrixXcd rho = a * a.adjoint();
        rho /= rho.trace().real();
        return rho;
    };
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int dim = 1 << (dim_pick(rng) + 1); // 2, 4, 8
        const int k = 2 + trial % 3;
        std::vector<Eigen::MatrixXcd> states;
        std::vector<double> weights;
        double total = 0.0;
        for (int i = 0; i < k; ++i) {
            states.push_back(random_density(dim));
            const double w = 0.2 + std::abs(g(rng));
            weights.push_back(w);
            total += w;
        }
        for (double& w : weights) w /= total;
        const auto chk =
            optimize::bayes_optimality_check(states, weights, random_density(dim));
        worst = std::max(worst, std::abs(chk.gap - chk.s_mq));
        out.require(chk.gap >= -1e-10, "negative gap");
    }
    out.require(worst <= 1e-9, fmt("worst |gap - S(m,Q)| %.3g", worst));
    out.note(fmt("worst |gap - S(m,Q)| %.3g over 100 mixtures", worst));
    return out;
}

// 12. Compression planner against dense projectors.
Outcome criterion12() {
    Outcome out;
    const auto p = compress::plan(2, 0.5, 0.1);
    out.require(p.level_cap == 0 && p.dim == BigUint(3),
                fmt("plan(2, 0.5, 0.1) gave D=%g dim=%g",
                    static_cast<double>(p.level_cap), p.dim.to_double()));

    double worst = 0.0;
    for (int n : {4, 5, 6}) {
        Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(Eigen::Index{1} << n,
                                                     Eigen::Index{1} << n);
        for (int levels = 0; 2 * levels <= n; ++levels) {
            proj += spectrum::eigenprojector(n, levels);
            for (double r : {0.0, 0.35, 0.8, 1.0}) {
                const BlochVector b = BlochVector::from_spherical(r, 1.0, 0.5);
                const double dense =
                    (proj.cast<std::complex<double>>() * qstate::tensor_power(b, n))
                        .trace()
                        .real();
                worst = std::max(
                    worst, std::abs(dense - compress::source_weight(n, levels, r)));
            }
        }
    }
    out.require(worst <= 1e-9, fmt("worst projector gap %.3g", worst));
    for (int n : {2, 5, 8})
        out.require(std::abs(compress::source_weight(n, 0, 1.0) - 1.0) <= 1e-12,
                    "pure state escapes the symmetric subspace");
    out.note(fmt("worst projector gap %.3g", worst));
    return out;
}

struct Criterion {
    const char* label;
    Outcome (*fn)();
};

const Criterion kCriteria[] = {
    {"Catalan eigenvalue", criterion1},
    {"spectrum vs brute force", criterion2},
    {"eigenbasis", criterion3},
    {"identity suite", criterion4},
    {"oracle equivalence", criterion5},
    {"asymptotics (relative entropy)", criterion6},
    {"entropy asymptotics", criterion7},
    {"minimax", criterion8},
    {"maximin", criterion9},
    {"radial prior cross-check", criterion10},
    {"Bayes-estimator optimality", criterion11},
    {"compression", criterion12},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    bool all_pass = true;
    for (int k = 1; k <= 12; ++k) {
        if (only != 0 && only != k) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = kCriteria[k - 1].fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("%s criterion %2d (%s): %s [%.2f s]\n",
                    out.pass ? "PASS" : "FAIL", k, kCriteria[k - 1].label,
                    out.detail.c_str(), secs);
        std::fflush(stdout);
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
