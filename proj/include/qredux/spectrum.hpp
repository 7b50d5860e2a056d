#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qredux/bignum.hpp"
#include "qredux/priors.hpp"

namespace qredux::spectrum {

/// log of the d-th eigenvalue of zeta_n(u). Valid for d in [0, n+1]; the
/// extension beyond floor(n/2) realizes the symmetry
/// lambda_{n+1-d} = lambda_d used by the asymptotic machinery.
double log_eigenvalue(int n, double u, int d);
double eigenvalue(int n, double u, int d);

/// Exact multiplicity (n-2d+1)^2 C(n+1, d) / (n+1) of the d-th eigenvalue.
BigUint multiplicity(int n, int d);

/// Exact count of ballot paths from (0,0) to (n, n-2d):
/// (n-2d+1) C(n+1, d) / (n+1).
BigUint ballot_count(int n, int d);

/// A lattice path of n-d up-steps and d down-steps never dipping below the
/// axis. Steps are labeled 1..n; A holds the labels of the first d
/// up-steps, B the labels of the d down-steps.
struct BallotPath {
    int n = 0;
    int d = 0;
    std::vector<bool> down;  // step i+1 is a down-step iff down[i]
    std::uint64_t a_mask = 0;
    std::uint64_t b_mask = 0;
};

/// Exhaustive enumeration in lexicographic step order (up < down), which
/// fixes the basis order downstream.
std::vector<BallotPath> ballot_paths(int n, int d);

/// The eigenvector v_{d,s}(A,B): a signed sum of standard unit vectors
/// e_{X ∪ X' ∪ Y} over X ⊆ A and (s-d)-subsets Y of [n] \ (A ∪ B), where
/// X' drops from B the elements whose by-rank positions match X in A.
/// All coefficients are +1 or -1.
struct EigenvectorSpec {
    int n = 0;
    int d = 0;
    int s = 0;
    std::uint64_t a_mask = 0;
    std::uint64_t b_mask = 0;
    std::vector<std::pair<std::uint64_t, int>> terms; // (subset mask, sign)
};

EigenvectorSpec eigenvector(int n, int d, int s, std::uint64_t a_mask,
                            std::uint64_t b_mask);

/// The full combinatorial eigenbasis {v_{d,s}(P)}: exactly 2^n vectors
/// (guarded at n <= 12).
std::vector<EigenvectorSpec> eigenbasis(int n);

/// Dense coordinate vector of a spec (dimension 2^n).
Eigen::VectorXd dense_vector(const EigenvectorSpec& spec);

/// Eigenvalue lambda_{d,s} of the generalized family for a symmetric
/// profile f: f(n-2s) Gamma(2+n-d-u) Gamma(1+d-u) /
/// (Gamma(2+n-s-u) Gamma(2+s-u) Gamma(1-u)).
double generalized_eigenvalue(int n, double u, int d, int s,
                              const std::function<double(double)>& f);

/// Eigenvalue of the average of tensor powers over a spherically symmetric
/// prior w:
///   pi / (2^{n-1} (n-2d+1)) * int_{-1}^1 r (1+r)^{n-d+1} (1-r)^d w(|r|) dr,
/// folded onto [0,1] and routed through integrate_radial.
double radial_eigenvalue(int n, int d, const priors::RadialPrior& w);

/// Orthogonal projector onto the lambda_d eigenspace, built by modified
/// Gram-Schmidt over {v_{d,s}(P)} (guarded at n <= 10). The eigenbasis does
/// not depend on u, hence neither does the projector.
Eigen::MatrixXd eigenprojector(int n, int d);

struct SpectrumLevel {
    int d = 0;
    double lambda = 0.0;
    BigUint multiplicity;
    std::vector<int> s_values; // the n-2d+1 admissible s
};

struct Spectrum {
    int n = 0;
    double u = 0.0;
    std::vector<SpectrumLevel> levels; // d = 0 .. floor(n/2)
};

Spectrum closed_form_spectrum(int n, double u);

} // namespace qredux::spectrum
