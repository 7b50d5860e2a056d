#include "qredux/bayes_matrix.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <vector>

#include "qredux/errors.hpp"
#include "qredux/parallel.hpp"
#include "qredux/priors.hpp"
#include "qredux/quadrature.hpp"
#include "qredux/specfun.hpp"

namespace qredux::bayes {

namespace {

using specfun::log_gamma;

void require_u(double u) {
    if (!(u < 1.0)) throw domain_error("bayes matrix family requires u < 1");
}

// Entry value for |I| = |J| = c with a = |I∩J| common elements. Here
// b = n - 2c + a and k = c - a, so the prefactor (n - a - b)/2 = k is a
// true integer; the formula is only evaluated on this live branch.
double entry_value(int n, double u, int c, int a) {
    const int b = n - 2 * c + a;
    const int k = c - a;
    return std::exp(log_gamma(k + 1.0) - n * std::log(2.0) +
                    log_gamma(2.5 - u) + log_gamma(2.0 + a + k - u) +
                    log_gamma(2.0 + b + k - u) - log_gamma(2.5 + 0.5 * n - u) -
                    log_gamma(2.0 + 0.5 * n - u) - log_gamma(2.0 + k - u));
}

// value_table[c][a] for c = |I| = |J|, a = |I∩J| in [max(0, 2c-n), c].
std::vector<std::vector<double>> entry_table(int n, double u) {
    std::vector<std::vector<double>> table(n + 1);
    for (int c = 0; c <= n; ++c) {
        const int a_min = std::max(0, 2 * c - n);
        table[c].assign(c + 1, 0.0);
        for (int a = a_min; a <= c; ++a) table[c][a] = entry_value(n, u, c, a);
    }
    return table;
}

} // namespace

OverlapStats overlap_stats(std::uint64_t row_mask, std::uint64_t col_mask, int n) {
    const std::uint64_t full = (n >= 64) ? ~0ull : ((1ull << n) - 1);
    OverlapStats s;
    s.n = n;
    s.in_in = std::popcount(row_mask & col_mask);
    s.out_out = std::popcount(~(row_mask | col_mask) & full);
    s.out_in = std::popcount(col_mask & ~row_mask);
    s.in_out = std::popcount(row_mask & ~col_mask);
    return s;
}

double z_entry(int n, double u, const OverlapStats& stats) {
    require_u(u);
    if (stats.in_in + stats.out_out + stats.out_in + stats.in_out != n)
        throw domain_error("z_entry: inconsistent overlap stats");
    if (stats.out_in != stats.in_out) return 0.0;
    const int c = stats.in_in + stats.in_out; // |I| = |J|
    return entry_value(n, u, c, stats.in_in);
}

Eigen::MatrixXd zeta_matrix(int n, double u) {
    require_u(u);
    if (n < 1) throw domain_error("zeta_matrix: requires n >= 1");
    if (n > 12) throw capacity_error("zeta_matrix: n > 12 exceeds memory guard");
    const auto table = entry_table(n, u);
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    parallel_for(0, dim, [&](std::size_t i) {
        const int ci = std::popcount(i);
        for (std::size_t j = 0; j < dim; ++j) {
            if (std::popcount(j) != ci) continue;
            const int a = std::popcount(i & j);
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                table[ci][a];
        }
    });
    return m;
}

double z_entry_oracle(int n, double u, std::uint64_t row_mask,
                      std::uint64_t col_mask) {
    require_u(u);
    if (n < 1 || n > 6)
        throw capacity_error("z_entry_oracle: guarded at n <= 6");
    const OverlapStats st = overlap_stats(row_mask, col_mask, n);
    const int a = st.in_in, b = st.out_out, p = st.out_in, q = st.in_out;

    // Angular rule: Gauss-Legendre in cos(theta); a uniform grid in phi,
    // which integrates trigonometric polynomials of degree < K exactly.
    const int mc = n + 6;
    const auto [cn, cw] = specfun::gauss_legendre(mc);
    const int K = 2 * n + 4;
    std::complex<double> phi_int(0.0, 0.0); // int_0^2pi e^{i(p-q)phi} dphi
    for (int k = 0; k < K; ++k) {
        const double phi = 2.0 * M_PI * k / K;
        phi_int += std::complex<double>(std::cos((p - q) * phi),
                                        std::sin((p - q) * phi));
    }
    phi_int *= 2.0 * M_PI / K; // uniform weights

    auto angular = [&](double r) -> std::complex<double> {
        std::complex<double> acc(0.0, 0.0);
        for (int ic = 0; ic < mc; ++ic) {
            const double c = cn[ic];
            const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            const double radial_part = std::pow(1.0 + r * c, a) *
                                       std::pow(1.0 - r * c, b) *
                                       std::pow(r * s, p + q);
            acc += cw[ic] * radial_part * phi_int;
        }
        return acc;
    };

    // Separate real and imaginary quadratures; the (1-r^2)^{-u} factor and
    // the q(u) normalization ride on integrate_radial.
    const double norm = priors::q_normalization(u) * std::pow(0.5, n);
    const double re = specfun::integrate_radial(
        [&](double r) { return norm * r * r * angular(r).real(); }, u, 1e-12);
    const double im = specfun::integrate_radial(
        [&](double r) { return norm * r * r * angular(r).imag(); }, u, 1e-12);
    if (std::abs(im) > 1e-8)
        throw accuracy_error("z_entry_oracle: imaginary part did not cancel", re);
    return re;
}

Eigen::MatrixXd tilde_zeta_matrix(int n, double u,
                                  const std::function<double(double)>& f) {
    require_u(u);
    if (n < 1) throw domain_error("tilde_zeta_matrix: requires n >= 1");
    if (n > 12)
        throw capacity_error("tilde_zeta_matrix: n > 12 exceeds memory guard");
    for (int x = 0; x <= n; ++x) {
        if (std::abs(f(x) - f(-x)) >
            1e-12 * std::max(1.0, std::abs(f(x))))
            throw contract_error("tilde_zeta_matrix: profile f is not symmetric");
    }
    std::vector<std::vector<double>> table(n + 1);
    for (int c = 0; c <= n; ++c) {
        const int a_min = std::max(0, 2 * c - n);
        table[c].assign(c + 1, 0.0);
        for (int a = a_min; a <= c; ++a) {
            const int b = n - 2 * c + a;
            const int k = c - a;
            table[c][a] = std::exp(log_gamma(k + 1.0) - log_gamma(2.0 + k - u)) *
                          f(a - b);
        }
    }
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    parallel_for(0, dim, [&](std::size_t i) {
        const int ci = std::popcount(i);
        for (std::size_t j = 0; j < dim; ++j) {
            if (std::popcount(j) != ci) continue;
            const int a = std::popcount(i & j);
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                table[ci][a];
        }
    });
    return m;
}

} // namespace qredux::bayes
