#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "qredux/bloch.hpp"

namespace qredux::qstate {

/// Eigenvalues below this are treated as exact zeros in entropy
/// functionals and support tests (the 0 log 0 = 0 convention).
constexpr double kNullEigenvalue = 1e-14;

/// rho = 1/2 [[1+z, x-iy], [x+iy, 1-z]].
Eigen::Matrix2cd density_from_bloch(const BlochVector& b);

/// Single entry of the n-fold tensor power of rho in subset-mask indexing:
/// bit i-1 of the mask <=> element i of [n], rows and columns ordered by
/// mask value 0..2^n-1.
std::complex<double> tensor_power_entry(const BlochVector& b, int n,
                                        std::uint64_t row_mask,
                                        std::uint64_t col_mask);

/// Dense n-fold tensor power of rho (dim 2^n). Guarded at n <= 14.
Eigen::MatrixXcd tensor_power(const BlochVector& b, int n);

struct HermitianEigen {
    Eigen::VectorXd eigenvalues;    // descending
    Eigen::MatrixXcd eigenvectors;  // orthonormal columns, same order
};

/// Full eigendecomposition of a Hermitian matrix (input checked to 1e-10).
HermitianEigen hermitian_eig(const Eigen::MatrixXcd& a);

/// S(rho) for a qubit at Bloch radius r, natural logarithm.
double von_neumann_entropy_bloch(double r);

/// -Tr rho log rho via the dense eigensolver.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

/// Quantum relative entropy Tr rho1 (log rho1 - log rho2).
/// Throws infinite_divergence when rho1 has weight > 1e-12 on a null
/// eigenvector of rho2.
double relative_entropy(const Eigen::MatrixXcd& rho1,
                        const Eigen::MatrixXcd& rho2);

/// Tr rho1 (log rho1 - log rho2)^2, same support rules.
double relative_entropy_square(const Eigen::MatrixXcd& rho1,
                               const Eigen::MatrixXcd& rho2);

/// Quantum Fisher information matrix of the symmetric logarithmic
/// derivative at an interior Bloch point (r < 1).
Eigen::Matrix3d sld_fisher_matrix(const BlochVector& b);

} // namespace qredux::qstate
