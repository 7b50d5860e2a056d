#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "qredux/bayes_matrix.hpp"
#include "qredux/cli.hpp"
#include "qredux/compress.hpp"
#include "qredux/errors.hpp"
#include "qredux/io.hpp"
#include "qredux/optimize.hpp"
#include "qredux/qstate.hpp"
#include "qredux/quadrature.hpp"
#include "qredux/redundancy.hpp"
#include "qredux/specfun.hpp"
#include "qredux/spectrum.hpp"

namespace qredux::cli {

namespace {

struct Suite {
    std::vector<CheckResult> results;

    void check(const std::string& name, bool pass, double worst) {
        std::ostringstream detail;
        detail << "worst=" << worst;
        results.push_back({name, pass, detail.str()});
    }
    void fail(const std::string& name, const std::string& why) {
        results.push_back({name, false, why});
    }
};

// Sorted eigenvalue list from the closed-form spectrum, multiplicities
// expanded, descending.
std::vector<double> expanded_spectrum(int n, double u) {
    std::vector<double> out;
    for (int d = 0; 2 * d <= n; ++d) {
        const double lam = spectrum::eigenvalue(n, u, d);
        const double mult = spectrum::multiplicity(n, d).to_double();
        for (long k = 0; k < static_cast<long>(mult); ++k) out.push_back(lam);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

double spectrum_vs_dense(int n, double u) {
    const Eigen::MatrixXd z = bayes::zeta_matrix(n, u);
    const qstate::HermitianEigen eig = qstate::hermitian_eig(z);
    const std::vector<double> closed = expanded_spectrum(n, u);
    double worst = 0.0;
    for (std::size_t i = 0; i < closed.size(); ++i)
        worst = std::max(worst,
                         std::abs(closed[i] - eig.eigenvalues[static_cast<Eigen::Index>(i)]));
    return worst;
}

void check_special_functions(Suite& s) {
    double worst = 0.0;
    for (double x = 0.1; x <= 10.0; x += 0.1)
        worst = std::max(worst, std::abs(specfun::log_gamma(x + 1.0) -
                                         specfun::log_gamma(x) - std::log(x)));
    s.check("specfun.log_gamma_recurrence", worst <= 1e-12, worst);

    worst = std::abs(specfun::digamma(1.0) + 0.57721566490153286);
    worst = std::max(worst, std::abs(specfun::trigamma(1.0) - M_PI * M_PI / 6.0));
    s.check("specfun.known_values", worst <= 1e-12, worst);

    worst = 0.0;
    for (int m = 0; m <= 8; ++m) {
        for (double u : {-0.5, 0.5}) {
            const double got = specfun::integrate_radial(
                [m](double r) { return std::pow(r, m); }, u);
            const double want = std::exp(
                specfun::log_gamma(0.5 * (m + 1)) + specfun::log_gamma(1.0 - u) -
                specfun::log_gamma(0.5 * (m + 3) - u)) / 2.0;
            worst = std::max(worst, std::abs(got - want));
        }
    }
    s.check("specfun.beta_integral", worst <= 1e-10, worst);
}

void check_spectrum(Suite& s) {
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
        for (double u : {-1.0, 0.0, 0.5, 0.9}) {
            double trace = 0.0;
            for (int d = 0; 2 * d <= n; ++d)
                trace += spectrum::multiplicity(n, d).to_double() *
                         spectrum::eigenvalue(n, u, d);
            worst = std::max(worst, std::abs(trace - 1.0));
        }
    }
    s.check("spectrum.unit_trace", worst <= 1e-12, worst);

    bool counting = true;
    for (int n = 1; n <= 20; ++n) {
        BigUint total(0);
        for (int d = 0; 2 * d <= n; ++d) total += spectrum::multiplicity(n, d);
        counting = counting && (total == BigUint::pow2(n));
    }
    s.check("spectrum.dimension_count", counting, counting ? 0.0 : 1.0);

    worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
        const double scaled =
            spectrum::eigenvalue(n, 0.5, 0) * std::pow(4.0, n);
        const double cat = specfun::catalan(n + 1).to_double();
        worst = std::max(worst, std::abs(scaled - cat) / cat);
    }
    s.check("spectrum.catalan_leading", worst <= 1e-12, worst);

    worst = std::max(spectrum_vs_dense(5, 0.5), spectrum_vs_dense(6, -1.0));
    s.check("spectrum.dense_oracle", worst <= 1e-9, worst);

    // Eigenbasis residuals and rank at n = 6.
    const int n = 6;
    const Eigen::MatrixXd z = bayes::zeta_matrix(n, 0.5);
    const auto basis = spectrum::eigenbasis(n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXd all(dim, static_cast<Eigen::Index>(basis.size()));
    worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Eigen::VectorXd v = spectrum::dense_vector(basis[i]);
        const double lam = spectrum::eigenvalue(n, 0.5, basis[i].d);
        worst = std::max(worst, (z * v - lam * v).cwiseAbs().maxCoeff());
        all.col(static_cast<Eigen::Index>(i)) = v;
    }
    const bool full_rank =
        Eigen::FullPivLU<Eigen::MatrixXd>(all).rank() == dim;
    s.check("spectrum.eigenbasis_residual", worst <= 1e-12, worst);
    s.check("spectrum.eigenbasis_rank", full_rank, full_rank ? 0.0 : 1.0);
}

void check_identities(Suite& s) {
    double worst = 0.0;
    for (const auto& tuple :
         {redundancy::IdentityParams{9, 0.37, 0.2, 0.5, 0.1, 2},
          redundancy::IdentityParams{14, 0.6, -0.8, 0.3, -0.4, 4}}) {
        for (const auto& id : redundancy::exact_identity_ids())
            worst = std::max(worst, redundancy::identity_check(id, tuple));
    }
    s.check("redundancy.identity_suite", worst <= 1e-11, worst);
}

void check_oracle_equivalence(Suite& s) {
    std::mt19937 rng(411);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const int n = 3 + trial;
        const double u = unit(rng) - 0.5;
        const double r = unit(rng);
        const BlochVector b = BlochVector::from_spherical(
            r, std::acos(2.0 * unit(rng) - 1.0), 2.0 * M_PI * unit(rng));
        const double dense = qstate::relative_entropy(
            qstate::tensor_power(b, n), bayes::zeta_matrix(n, u).cast<std::complex<double>>());
        const double closed = redundancy::relative_entropy_exact(n, u, r);
        worst = std::max(worst, std::abs(dense - closed));
    }
    s.check("redundancy.dense_oracle", worst <= 1e-8, worst);

    double worst_entry = 0.0;
    for (const auto& [row, col] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {0b011, 0b110}, {0b111, 0b111}, {0b001, 0b010}, {0b000, 0b011}}) {
        const auto st = bayes::overlap_stats(row, col, 3);
        worst_entry = std::max(
            worst_entry, std::abs(bayes::z_entry(3, 0.5, st) -
                                  bayes::z_entry_oracle(3, 0.5, row, col)));
    }
    s.check("bayes_matrix.entry_oracle", worst_entry <= 1e-8, worst_entry);
}

void check_optimize(Suite& s) {
    const auto mm = optimize::maximin_u();
    const bool pass = std::abs(mm.u_star - 0.531267) <= 1e-5 &&
                      std::abs(mm.constant + 1.77185) <= 1e-4 &&
                      mm.equation_residual <= 1e-10;
    s.check("optimize.maximin", pass, mm.equation_residual);

    const double c_half = redundancy::bayes_constant(0.5);
    s.check("optimize.bayes_constant_u_half",
            std::abs(c_half + 1.77421) <= 1e-5, std::abs(c_half + 1.77421));
}

void check_compress(Suite& s) {
    const auto p = compress::plan(2, 0.5, 0.1);
    const bool plan_ok =
        p.level_cap == 0 && p.dim == BigUint(3) && p.prior_weight >= 0.9;
    s.check("compress.plan_example", plan_ok, p.prior_weight);

    const int n = 4;
    const Eigen::MatrixXd proj01 =
        spectrum::eigenprojector(n, 0) + spectrum::eigenprojector(n, 1);
    const BlochVector b = BlochVector::from_spherical(0.5, 1.1, 0.3);
    const Eigen::MatrixXcd t = qstate::tensor_power(b, n);
    const double dense = (proj01.cast<std::complex<double>>() * t).trace().real();
    const double closed = compress::source_weight(n, 1, 0.5);
    s.check("compress.source_weight_oracle", std::abs(dense - closed) <= 1e-9,
            std::abs(dense - closed));
}

void check_level_weights(Suite& s) {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 1 + static_cast<int>(unit(rng) * 12);
        const double r = unit(rng);
        const auto lw = redundancy::level_weights(n, r);
        double total = 0.0;
        for (double w : lw.weights) total += w;
        worst = std::max(worst, std::abs(total - 1.0));
    }
    s.check("redundancy.level_weights_sum", worst <= 1e-12, worst);
}

void check_zeta_file(Suite& s, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        s.fail("file.readable", "cannot open " + path);
        return;
    }
    try {
        const io::ZetaFile f = io::read_matrix_binary(in);
        const double trace_err = std::abs(f.entries.trace() - 1.0);
        s.check("file.trace", trace_err <= 1e-9, trace_err);
        const auto eig = qstate::hermitian_eig(
            f.entries.cast<std::complex<double>>());
        const auto closed = expanded_spectrum(f.n, f.u);
        double worst = 0.0;
        for (std::size_t i = 0; i < closed.size(); ++i)
            worst = std::max(
                worst, std::abs(closed[i] -
                                eig.eigenvalues[static_cast<Eigen::Index>(i)]));
        s.check("file.spectrum", worst <= 1e-9, worst);
    } catch (const error& e) {
        s.fail("file.format", e.what());
    }
}

} // namespace

std::vector<CheckResult> run_verification(const std::string& zeta_file) {
    Suite s;
    check_special_functions(s);
    check_spectrum(s);
    check_identities(s);
    check_oracle_equivalence(s);
    check_optimize(s);
    check_compress(s);
    check_level_weights(s);
    if (!zeta_file.empty()) check_zeta_file(s, zeta_file);
    return s.results;
}

} // namespace qredux::cli
