#include "qredux/qstate.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include "qredux/errors.hpp"
#include "qredux/parallel.hpp"

namespace qredux::qstate {

namespace {

using cplx = std::complex<double>;

int popcount(std::uint64_t m) { return std::popcount(m); }

// Integer powers by repeated multiplication; exponents here are <= n.
template <typename T>
std::vector<T> power_table(T base, int max_exp) {
    std::vector<T> t(static_cast<std::size_t>(max_exp) + 1);
    t[0] = T(1);
    for (int k = 1; k <= max_exp; ++k) t[k] = t[k - 1] * base;
    return t;
}

void require_valid(const BlochVector& b) {
    if (!b.valid())
        throw domain_error("Bloch vector outside the unit ball");
}

} // namespace

Eigen::Matrix2cd density_from_bloch(const BlochVector& b) {
    require_valid(b);
    Eigen::Matrix2cd rho;
    rho << cplx(1.0 + b.z, 0.0), cplx(b.x, -b.y),
           cplx(b.x, b.y),       cplx(1.0 - b.z, 0.0);
    return 0.5 * rho;
}

std::complex<double> tensor_power_entry(const BlochVector& b, int n,
                                        std::uint64_t row_mask,
                                        std::uint64_t col_mask) {
    require_valid(b);
    const std::uint64_t full = (n >= 64) ? ~0ull : ((1ull << n) - 1);
    const int in_in = popcount(row_mask & col_mask);
    const int out_out = popcount(~(row_mask | col_mask) & full);
    const int out_in = popcount(col_mask & ~row_mask);
    const int in_out = popcount(row_mask & ~col_mask);
    cplx v = std::pow(0.5, n);
    for (int k = 0; k < in_in; ++k) v *= 1.0 + b.z;
    for (int k = 0; k < out_out; ++k) v *= 1.0 - b.z;
    for (int k = 0; k < out_in; ++k) v *= cplx(b.x, b.y);
    for (int k = 0; k < in_out; ++k) v *= cplx(b.x, -b.y);
    return v;
}

Eigen::MatrixXcd tensor_power(const BlochVector& b, int n) {
    require_valid(b);
    if (n < 1) throw domain_error("tensor_power: requires n >= 1");
    if (n > 14) throw capacity_error("tensor_power: n > 14 exceeds memory guard");
    const std::uint64_t dim = 1ull << n;
    const auto p_in_in = power_table(1.0 + b.z, n);
    const auto p_out_out = power_table(1.0 - b.z, n);
    const auto p_out_in = power_table(cplx(b.x, b.y), n);
    const auto p_in_out = power_table(cplx(b.x, -b.y), n);
    const double scale = std::pow(0.5, n);

    Eigen::MatrixXcd m(dim, dim);
    parallel_for(0, dim, [&](std::size_t row) {
        const std::uint64_t i = row;
        for (std::uint64_t j = 0; j < dim; ++j) {
            const int a = popcount(i & j);
            const int out_in = popcount(j & ~i);
            const int in_out = popcount(i & ~j);
            const int bb = n - a - out_in - in_out;
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                scale * p_in_in[a] * p_out_out[bb] * p_out_in[out_in] *
                p_in_out[in_out];
        }
    });
    return m;
}

HermitianEigen hermitian_eig(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols())
        throw domain_error("hermitian_eig: matrix not square");
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw domain_error("hermitian_eig: matrix not Hermitian to 1e-10");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
    if (solver.info() != Eigen::Success)
        throw accuracy_error("hermitian_eig: eigensolver did not converge", 0.0);
    HermitianEigen out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

double von_neumann_entropy_bloch(double r) {
    if (r < 0.0 || r > 1.0 + 1e-12)
        throw domain_error("von_neumann_entropy_bloch: requires 0 <= r <= 1");
    r = std::min(r, 1.0);
    const double p = 0.5 * (1.0 - r);
    const double q = 0.5 * (1.0 + r);
    double s = 0.0;
    if (p > kNullEigenvalue) s -= p * std::log(p);
    if (q > kNullEigenvalue) s -= q * std::log(q);
    return s;
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
    const HermitianEigen e = hermitian_eig(rho);
    double s = 0.0;
    for (Eigen::Index i = 0; i < e.eigenvalues.size(); ++i) {
        const double v = e.eigenvalues[i];
        if (v > kNullEigenvalue) s -= v * std::log(v);
    }
    return s;
}

namespace {

// Tr rho1 (log rho1 - log rho2)^power, power 1 or 2, via both
// eigendecompositions:
//   sum_{i,j} lam_i |<w_j|v_i>|^2 (log lam_i - log mu_j)^power.
double relative_entropy_impl(const Eigen::MatrixXcd& rho1,
                             const Eigen::MatrixXcd& rho2, int power) {
    if (rho1.rows() != rho2.rows() || rho1.cols() != rho2.cols())
        throw domain_error("relative_entropy: dimension mismatch");
    const HermitianEigen e1 = hermitian_eig(rho1);
    const HermitianEigen e2 = hermitian_eig(rho2);
    const Eigen::Index dim = e1.eigenvalues.size();

    // overlap[j][i] = |<w_j|v_i>|^2
    const Eigen::MatrixXd overlap =
        (e2.eigenvectors.adjoint() * e1.eigenvectors).cwiseAbs2();

    // Support test: rho1-weight carried by each null eigenvector of rho2.
    for (Eigen::Index j = 0; j < dim; ++j) {
        if (e2.eigenvalues[j] > kNullEigenvalue) continue;
        double weight = 0.0;
        for (Eigen::Index i = 0; i < dim; ++i) {
            if (e1.eigenvalues[i] > kNullEigenvalue)
                weight += e1.eigenvalues[i] * overlap(j, i);
        }
        if (weight > 1e-12)
            throw infinite_divergence(
                "relative entropy: support of rho1 escapes support of rho2");
    }

    double total = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double lam = e1.eigenvalues[i];
        if (lam <= kNullEigenvalue) continue;
        const double log_lam = std::log(lam);
        for (Eigen::Index j = 0; j < dim; ++j) {
            const double mu = e2.eigenvalues[j];
            if (mu <= kNullEigenvalue) continue;
            const double diff = log_lam - std::log(mu);
            total += lam * overlap(j, i) * (power == 1 ? diff : diff * diff);
        }
    }
    return total;
}

} // namespace

double relative_entropy(const Eigen::MatrixXcd& rho1,
                        const Eigen::MatrixXcd& rho2) {
    return relative_entropy_impl(rho1, rho2, 1);
}

double relative_entropy_square(const Eigen::MatrixXcd& rho1,
                               const Eigen::MatrixXcd& rho2) {
    return relative_entropy_impl(rho1, rho2, 2);
}

Eigen::Matrix3d sld_fisher_matrix(const BlochVector& b) {
    const double r2 = b.x * b.x + b.y * b.y + b.z * b.z;
    if (r2 >= 1.0)
        throw domain_error("sld_fisher_matrix: requires an interior point (r < 1)");
    Eigen::Matrix3d m;
    m << 1.0 - b.y * b.y - b.z * b.z, b.x * b.y, b.x * b.z,
         b.x * b.y, 1.0 - b.x * b.x - b.z * b.z, b.y * b.z,
         b.x * b.z, b.y * b.z, 1.0 - b.x * b.x - b.y * b.y;
    return m / (1.0 - r2);
}

} // namespace qredux::qstate
