#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "qredux/bayes_matrix.hpp"
#include "qredux/errors.hpp"
#include "qredux/qstate.hpp"
#include "qredux/specfun.hpp"
#include "qredux/spectrum.hpp"

using namespace qredux;
using namespace qredux::spectrum;

TEST_CASE("eigenvalue closed form") {
    for (double u : {-2.0, -0.5, 0.0, 0.5, 0.9})
        CHECK(eigenvalue(1, u, 0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(eigenvalue(2, 0.5, 0) == doctest::Approx(5.0 / 16.0).epsilon(1e-13));
    CHECK(eigenvalue(2, 0.5, 1) == doctest::Approx(1.0 / 16.0).epsilon(1e-13));
    CHECK_THROWS_AS(eigenvalue(4, 1.2, 0), domain_error);
    CHECK_THROWS_AS(eigenvalue(4, 0.5, 6), domain_error);
}

TEST_CASE("leading eigenvalue at u = 1/2 is a scaled Catalan number") {
    for (int n = 1; n <= 12; ++n) {
        const double scaled =
            std::exp(log_eigenvalue(n, 0.5, 0) + n * std::log(4.0));
        const double cat = specfun::catalan(n + 1).to_double();
        CHECK(std::abs(scaled - cat) / cat <= 1e-12);
    }
}

TEST_CASE("eigenvalue symmetry lambda_{n+1-d} = lambda_d") {
    for (int n : {3, 8, 15}) {
        for (double u : {-1.0, 0.3, 0.9}) {
            for (int d = 0; d <= n + 1; ++d) {
                CHECK(std::abs(log_eigenvalue(n, u, d) -
                               log_eigenvalue(n, u, n + 1 - d)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("spectrum is strictly decreasing in d and sums to unit trace") {
    for (int n = 1; n <= 30; ++n) {
        for (double u : {-2.0, -0.5, 0.0, 0.5, 0.9}) {
            double trace = 0.0;
            for (int d = 0; 2 * d <= n; ++d) {
                trace += multiplicity(n, d).to_double() * eigenvalue(n, u, d);
                if (d >= 1)
                    CHECK(eigenvalue(n, u, d - 1) > eigenvalue(n, u, d));
            }
            CHECK(std::abs(trace - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("multiplicity values") {
    // n = 7: (8, 36, 56, 28), summing to 128
    CHECK(multiplicity(7, 0) == BigUint(8));
    CHECK(multiplicity(7, 1) == BigUint(36));
    CHECK(multiplicity(7, 2) == BigUint(56));
    CHECK(multiplicity(7, 3) == BigUint(28));
    CHECK(multiplicity(2, 0) == BigUint(3));
    CHECK(multiplicity(2, 1) == BigUint(1));
    for (int n = 1; n <= 12; ++n) CHECK(multiplicity(n, 0) == BigUint(n + 1));
}

TEST_CASE("counting identity: multiplicities fill the full space") {
    for (int n = 1; n <= 40; ++n) {
        BigUint total(0);
        for (int d = 0; 2 * d <= n; ++d) total += multiplicity(n, d);
        CHECK(total == BigUint::pow2(n));
    }
}

TEST_CASE("ballot path enumeration") {
    CHECK(ballot_paths(7, 2).size() == 14);
    CHECK(ballot_paths(6, 0).size() == 1);
    for (int n = 1; n <= 10; ++n) {
        for (int d = 0; 2 * d <= n; ++d) {
            const auto paths = ballot_paths(n, d);
            CHECK(paths.size() == ballot_count(n, d).to_double());
            // prefix property holds for every path
            for (const auto& p : paths) {
                int height = 0;
                for (int i = 0; i < n; ++i) {
                    height += p.down[i] ? -1 : 1;
                    CHECK(height >= 0);
                }
                CHECK(std::popcount(p.a_mask) == d);
                CHECK(std::popcount(p.b_mask) == d);
                CHECK((p.a_mask & p.b_mask) == 0);
            }
        }
    }
    // Figure-1 path: up,down,up,up,down,up,up -> A={1,3}, B={2,5}
    const auto paths = ballot_paths(7, 2);
    const std::vector<bool> fig1 = {false, true, false, false, true, false, false};
    bool found = false;
    for (const auto& p : paths) {
        if (p.down == fig1) {
            found = true;
            CHECK(p.a_mask == ((1u << 0) | (1u << 2)));
            CHECK(p.b_mask == ((1u << 1) | (1u << 4)));
        }
    }
    CHECK(found);
}

TEST_CASE("eigenvector reproduces the 12-term example sign-for-sign") {
    // n=7, d=2, s=3, A={1,3}, B={2,5}
    const auto spec = eigenvector(7, 2, 3, (1u << 0) | (1u << 2),
                                  (1u << 1) | (1u << 4));
    auto mask_of = [](std::initializer_list<int> elems) {
        std::uint64_t m = 0;
        for (int e : elems) m |= 1ull << (e - 1);
        return m;
    };
    const std::map<std::uint64_t, int> want = {
        {mask_of({2, 4, 5}), +1}, {mask_of({2, 5, 6}), +1},
        {mask_of({2, 5, 7}), +1}, {mask_of({1, 4, 5}), -1},
        {mask_of({1, 5, 6}), -1}, {mask_of({1, 5, 7}), -1},
        {mask_of({2, 3, 4}), -1}, {mask_of({2, 3, 6}), -1},
        {mask_of({2, 3, 7}), -1}, {mask_of({1, 3, 4}), +1},
        {mask_of({1, 3, 6}), +1}, {mask_of({1, 3, 7}), +1},
    };
    REQUIRE(spec.terms.size() == 12);
    for (const auto& [mask, sign] : spec.terms) {
        auto it = want.find(mask);
        REQUIRE(it != want.end());
        CHECK(it->second == sign);
    }
}

TEST_CASE("eigenvector shape") {
    // d=0: sum of all e_Y with |Y| = s, all +1
    const auto flat = eigenvector(6, 0, 2, 0, 0);
    CHECK(flat.terms.size() == 15);
    for (const auto& [mask, sign] : flat.terms) {
        CHECK(std::popcount(mask) == 2);
        CHECK(sign == 1);
    }
    // term count is 2^d C(n-2d, s-d)
    const auto v = eigenvector(8, 2, 4, 0b0101, 0b1010);
    CHECK(v.terms.size() == 4 * specfun::binomial(4, 2).to_double());
    for (const auto& [mask, sign] : v.terms) CHECK(std::popcount(mask) == 4);
    CHECK_THROWS_AS(eigenvector(6, 2, 3, 0b011, 0b110), domain_error);
}

TEST_CASE("eigenvectors satisfy the eigenvalue equation") {
    for (int n : {4, 6, 8}) {
        for (double u : {0.0, 0.5}) {
            const Eigen::MatrixXd z = bayes::zeta_matrix(n, u);
            for (const auto& spec : eigenbasis(n)) {
                const Eigen::VectorXd v = dense_vector(spec);
                const double lam = eigenvalue(n, u, spec.d);
                CHECK((z * v - lam * v).cwiseAbs().maxCoeff() <=
                      1e-12 * v.cwiseAbs().maxCoeff());
            }
        }
    }
}

TEST_CASE("eigenbasis has full rank") {
    for (int n : {1, 4, 7}) {
        const auto basis = eigenbasis(n);
        const Eigen::Index dim = Eigen::Index{1} << n;
        REQUIRE(basis.size() == static_cast<std::size_t>(dim));
        Eigen::MatrixXd all(dim, dim);
        for (std::size_t i = 0; i < basis.size(); ++i)
            all.col(static_cast<Eigen::Index>(i)) = dense_vector(basis[i]);
        CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(all).rank() == dim);
    }
    CHECK(eigenbasis(1).size() == 2);
    CHECK(eigenbasis(7).size() == 128);
}

TEST_CASE("generalized eigenvalues against the dense matrix action") {
    const int n = 6;
    const double u = 0.25;
    for (const auto& f : {std::function<double(double)>([](double) { return 1.3; }),
                          std::function<double(double)>(
                              [](double x) { return 1.0 / (1.0 + x * x); })}) {
        const Eigen::MatrixXd m = bayes::tilde_zeta_matrix(n, u, f);
        for (int d = 0; 2 * d <= n; ++d) {
            const auto paths = ballot_paths(n, d);
            for (int s = d; s <= n - d; ++s) {
                const double lam = generalized_eigenvalue(n, u, d, s, f);
                const Eigen::VectorXd v = dense_vector(
                    eigenvector(n, d, s, paths[0].a_mask, paths[0].b_mask));
                CHECK((m * v - lam * v).cwiseAbs().maxCoeff() <= 1e-10);
            }
        }
    }
    // identity collapse at s = d = 0: lambda = f(n)/Gamma(2-u)
    auto f_const = [](double) { return 2.0; };
    CHECK(generalized_eigenvalue(5, 0.3, 0, 0, f_const) ==
          doctest::Approx(2.0 / std::exp(specfun::log_gamma(1.7)))
              .epsilon(1e-12));
}

TEST_CASE("radial eigenvalues reproduce the closed form for q(u)") {
    CHECK(radial_eigenvalue(1, 0, priors::RadialPrior::uniform_ball()) ==
          doctest::Approx(0.5).epsilon(1e-10));
    for (int n = 1; n <= 8; ++n) {
        for (double u : {-1.0, 0.0, 0.5}) {
            const auto w = priors::RadialPrior::from_q(u);
            for (int d = 0; 2 * d <= n; ++d)
                CHECK(std::abs(radial_eigenvalue(n, d, w) -
                               eigenvalue(n, u, d)) <= 1e-8);
        }
    }
}

TEST_CASE("radial eigenvalues keep unit trace for any admissible prior") {
    // a lopsided but normalized radial density: w ~ (1 + r^2), per volume
    const double norm = 1.0 / (4.0 * M_PI * (1.0 / 3.0 + 1.0 / 5.0));
    priors::RadialPrior w{[norm](double r) { return norm * (1.0 + r * r); },
                          0.0};
    CHECK(priors::radial_mass(w) == doctest::Approx(1.0).epsilon(1e-10));
    for (int n : {1, 4, 7}) {
        double trace = 0.0;
        for (int d = 0; 2 * d <= n; ++d)
            trace += multiplicity(n, d).to_double() * radial_eigenvalue(n, d, w);
        CHECK(trace == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("eigenprojectors") {
    const int n = 6;
    const Eigen::Index dim = 1 << n;
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(dim, dim);
    const Eigen::MatrixXd z = bayes::zeta_matrix(n, 0.4);
    for (int d = 0; 2 * d <= n; ++d) {
        const Eigen::MatrixXd p = eigenprojector(n, d);
        CHECK((p - p.transpose()).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK((p * p - p).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(p.trace() ==
              doctest::Approx(multiplicity(n, d).to_double()).epsilon(1e-8));
        CHECK((p * z - eigenvalue(n, 0.4, d) * p).cwiseAbs().maxCoeff() <=
              1e-10);
        sum += p;
    }
    CHECK((sum - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff() <=
          1e-10);
    CHECK(eigenprojector(4, 0).trace() == doctest::Approx(5.0).epsilon(1e-10));
    CHECK_THROWS_AS(eigenprojector(11, 0), capacity_error);
}

TEST_CASE("closed_form_spectrum assembles levels") {
    const Spectrum sp = closed_form_spectrum(7, 0.5);
    REQUIRE(sp.levels.size() == 4);
    CHECK(sp.levels[0].multiplicity == BigUint(8));
    CHECK(sp.levels[1].multiplicity == BigUint(36));
    CHECK(sp.levels[3].s_values.size() == 2); // s in {3, 4}
    CHECK(sp.levels[0].s_values.size() == 8); // s in 0..7
}
