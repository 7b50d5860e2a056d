#include "qredux/redundancy.hpp"

#include <cmath>

#include "qredux/errors.hpp"
#include "qredux/specfun.hpp"
#include "qredux/spectrum.hpp"

namespace qredux::redundancy {

namespace {

using specfun::digamma;
using specfun::log_binomial;
using specfun::log_gamma;

constexpr double kLog2 = 0.69314718055994530942;
constexpr double kEndpointClamp = 1e-14;

void require_u(double u) {
    if (!(u < 1.0)) throw domain_error("redundancy: requires u < 1");
}

/// Compensated accumulator (Kahan).
class KahanSum {
public:
    void add(double term) {
        const double y = term - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// log of the positive bracket (1+r)^{n+1-d}(1-r)^d - (1+r)^d(1-r)^{n+1-d};
// for d <= floor(n/2) the exponent gap n+1-2d is >= 1, so the bracket is
// a positive difference evaluated through expm1 to survive r -> 0.
double log_bracket(int n, int d, double r) {
    const double gap = (n + 1.0 - 2.0 * d) * (std::log1p(-r) - std::log1p(r));
    return (n + 1.0 - d) * std::log1p(r) + d * std::log1p(-r) +
           std::log(-std::expm1(gap));
}

double log_weight(int n, int d, double r) {
    return std::log(n - 2.0 * d + 1.0) - std::log(n + 1.0) +
           log_binomial(n + 1.0, static_cast<double>(d)) +
           log_bracket(n, d, r) - (n + 1.0) * kLog2 - std::log(r);
}

double log_weight_center(int n, int d) {
    return 2.0 * std::log(n - 2.0 * d + 1.0) - std::log(n + 1.0) +
           log_binomial(n + 1.0, static_cast<double>(d)) - n * kLog2;
}

double clamp_radius(double r) {
    if (r < 0.0 || r > 1.0 + kEndpointClamp)
        throw domain_error("redundancy: requires 0 <= r <= 1");
    if (r <= kEndpointClamp) return 0.0;
    if (r >= 1.0 - kEndpointClamp) return 1.0;
    return r;
}

} // namespace

LevelWeights level_weights(int n, double r) {
    if (n < 1) throw domain_error("level_weights: requires n >= 1");
    r = clamp_radius(r);
    LevelWeights lw;
    lw.n = n;
    lw.r = r;
    lw.weights.reserve(n / 2 + 1);
    for (int d = 0; 2 * d <= n; ++d) {
        double w;
        if (r == 0.0)
            w = std::exp(log_weight_center(n, d));
        else if (r == 1.0)
            w = (d == 0) ? 1.0 : 0.0;
        else
            w = std::exp(log_weight(n, d, r));
        lw.weights.push_back(w);
    }
    return lw;
}

double relative_entropy_exact(int n, double u, double r) {
    require_u(u);
    if (n < 1) throw domain_error("relative_entropy_exact: requires n >= 1");
    r = clamp_radius(r);
    if (r == 1.0) {
        // Both entropy terms vanish (0 log 0 and log 1) and only the
        // symmetric-subspace weight survives.
        return -spectrum::log_eigenvalue(n, u, 0);
    }
    KahanSum trace_term;
    if (r == 0.0) {
        for (int d = 0; 2 * d <= n; ++d)
            trace_term.add(std::exp(log_weight_center(n, d)) *
                           spectrum::log_eigenvalue(n, u, d));
        return -n * kLog2 - trace_term.value();
    }
    const double entropy_part = 0.5 * n * (1.0 - r) * std::log(0.5 * (1.0 - r)) +
                                0.5 * n * (1.0 + r) * std::log(0.5 * (1.0 + r));
    for (int d = 0; 2 * d <= n; ++d)
        trace_term.add(std::exp(log_weight(n, d, r)) *
                       spectrum::log_eigenvalue(n, u, d));
    return entropy_part - trace_term.value();
}

double asymptotic_redundancy(int n, double u, double r, Regime regime) {
    require_u(u);
    switch (regime) {
        case Regime::center:
            if (r != 0.0)
                throw domain_error("asymptotic_redundancy: center regime needs r = 0");
            return 1.5 * std::log(n) - 1.5 - 1.5 * kLog2 + log_gamma(1.0 - u) -
                   log_gamma(2.5 - u);
        case Regime::boundary:
            if (r != 1.0)
                throw domain_error("asymptotic_redundancy: boundary regime needs r = 1");
            return (2.0 - u) * std::log(n) + (2.0 * u - 3.0) * kLog2 +
                   0.5 * std::log(M_PI) - log_gamma(2.5 - u);
        case Regime::interior:
            if (!(r > 0.0 && r < 1.0))
                throw domain_error(
                    "asymptotic_redundancy: interior regime needs 0 < r < 1");
            return 1.5 * std::log(n) - 0.5 - 1.5 * kLog2 -
                   (1.0 - u) * std::log1p(-r * r) +
                   (0.5 / r) * (std::log1p(-r) - std::log1p(r)) +
                   log_gamma(1.0 - u) - log_gamma(2.5 - u);
    }
    throw domain_error("asymptotic_redundancy: unknown regime");
}

ClassicalBaselines classical_baselines(int n, double u, double r) {
    require_u(u);
    ClassicalBaselines out;
    const double base = 1.5 * (std::log(n) - kLog2 - 1.0);
    out.minimax3d = base + 0.5 * std::log(M_PI);
    out.boundary2d = std::log(n) + kLog2 - 1.0;
    if (r < 0.0 || r >= 1.0)
        throw domain_error("classical_baselines: requires 0 <= r < 1");
    out.redundancy3d = base - (1.0 - u) * std::log1p(-r * r) +
                       log_gamma(1.0 - u) - log_gamma(2.5 - u);
    return out;
}

double zeta_entropy_exact(int n, double u) {
    require_u(u);
    if (n < 1) throw domain_error("zeta_entropy_exact: requires n >= 1");
    KahanSum s;
    for (int d = 0; 2 * d <= n; ++d) {
        const double ll = spectrum::log_eigenvalue(n, u, d);
        const double log_mult = 2.0 * std::log(n - 2.0 * d + 1.0) -
                                std::log(n + 1.0) +
                                log_binomial(n + 1.0, static_cast<double>(d));
        s.add(-std::exp(log_mult + ll) * ll);
    }
    return s.value();
}

double entropy_linear_coef(double u) {
    require_u(u);
    return (-7.0 + 5.0 * u) / (2.0 * (2.0 - u) * (1.0 - u)) +
           digamma(5.0 - 2.0 * u) - digamma(1.0 - u);
}

double bayes_constant(double u) {
    require_u(u);
    return (-3.5 + 2.0 * u) * kLog2 -
           (14.0 - 20.0 * u + 7.0 * u * u) / (2.0 * (2.0 - u) * (1.0 - u)) +
           log_gamma(1.0 - u) - log_gamma(2.5 - u) +
           (2.0 - 2.0 * u) * (digamma(5.0 - 2.0 * u) - digamma(1.0 - u));
}

double zeta_entropy_asym(int n, double u) {
    require_u(u);
    return n * entropy_linear_coef(u) + 1.5 * std::log(n) + bayes_constant(u);
}

double bayes_redundancy(int n, double u, BayesMode mode) {
    require_u(u);
    if (mode == BayesMode::exact)
        return -n * entropy_linear_coef(u) + zeta_entropy_exact(n, u);
    return 1.5 * std::log(n) + bayes_constant(u);
}

namespace {

// ---- identity suite -------------------------------------------------------

// Exact binomial as a double; all identity sums run at n <= 40, where the
// counts sit well inside the 2^53 integer range of binary64.
double choose_d(int n, int k) {
    return specfun::binomial(n, k).to_double();
}

// Signed weight of the a-series sums: the single (1+r)-dominant term
// extended over d = 0..n+1 (negative past the middle).
double a_weight(int n, double r, int d) {
    return (n - 2.0 * d + 1.0) / (n + 1.0) * choose_d(n + 1, d) *
           std::pow(1.0 + r, n + 1 - d) * std::pow(1.0 - r, d) /
           (std::pow(2.0, n + 1) * r);
}

double lambda_ext(int n, double u, int d) {
    return std::exp(spectrum::log_eigenvalue(n, u, d));
}

// lambda_{-1} has Gamma(-u) in the numerator; reduce it through
// Gamma(-u) = Gamma(1-u)/(-u) so the sign is explicit and u = 0 is the
// only pole.
double lambda_minus1(int n, double u) {
    return std::exp(-n * kLog2 + log_gamma(2.5 - u) + log_gamma(3.0 + n - u) -
                    log_gamma(2.5 + 0.5 * n - u) -
                    log_gamma(2.0 + 0.5 * n - u)) /
           (-u);
}

double id_a8(const IdentityParams& p) {
    KahanSum s;
    for (int d = 0; d <= p.n + 1; ++d) s.add(a_weight(p.n, p.r, d));
    return std::abs(s.value() - 1.0);
}

double id_a9(const IdentityParams& p) {
    KahanSum s;
    for (int d = 0; d <= p.n + 1; ++d) s.add(a_weight(p.n, p.r, d) * d);
    const double rhs = (1.0 - p.r) * (p.n * p.r - 1.0) / (2.0 * p.r);
    return std::abs(s.value() - rhs);
}

double id_a10(const IdentityParams& p) {
    const int n = p.n;
    const double r = p.r;
    KahanSum s;
    for (int d = -1; d <= n + 1; ++d)
        s.add((n - 2.0 * d + 1.0) / ((n + 1.0) * (n + 2.0)) *
              choose_d(n + 2, d + 1) * std::pow(1.0 + r, n + 1 - d) *
              std::pow(1.0 - r, d) / (std::pow(2.0, n + 1) * r));
    const double rhs = 2.0 * (1.0 + 2.0 * r + n * r) /
                       ((n + 1.0) * (n + 2.0) * r * (1.0 - r));
    return std::abs(s.value() - rhs);
}

double id_a11(const IdentityParams& p) {
    const int n = p.n;
    const double r = p.r, u = p.u;
    KahanSum s;
    for (int d = 0; d <= n + 1; ++d) s.add(a_weight(n, r, d) * (0.5 - u + d));
    const double rhs = (-1.0 + 2.0 * r + n * r - n * r * r - 2.0 * r * u) /
                       (2.0 * r);
    return std::abs(s.value() - rhs);
}

double id_a12(const IdentityParams& p) {
    const int n = p.n;
    const double r = p.r, u = p.u;
    KahanSum s;
    for (int d = 0; d <= n + 1; ++d)
        s.add(a_weight(n, r, d) * (0.5 - u + d) *
              (1.0 + d - u - 0.5 * n * (1.0 - r)));
    const double rhs =
        (-5.0 - n + 7.0 * r + 5.0 * n * r - 3.0 * n * r * r - n * r * r * r +
         4.0 * u - 10.0 * r * u - 2.0 * n * r * u + 2.0 * n * r * r * u +
         4.0 * r * u * u) /
        (4.0 * r);
    return std::abs(s.value() - rhs);
}

double id_a13(const IdentityParams& p) {
    const int n = p.n;
    const double r = p.r, u = p.u;
    KahanSum s;
    for (int d = 0; d <= n + 1; ++d) {
        const double t = 1.0 + d - u - 0.5 * n * (1.0 - r);
        s.add(a_weight(n, r, d) * (0.5 - u + d) * t * t);
    }
    const double r2 = r * r, r3 = r2 * r, r4 = r3 * r;
    const double n2 = static_cast<double>(n) * n;
    const double u2 = u * u, u3 = u2 * u;
    const double rhs =
        (-22.0 - 9.0 * n + 26.0 * r + 24.0 * n * r + n2 * r - 5.0 * n * r2 -
         n2 * r2 - 8.0 * n * r3 - n2 * r3 - 2.0 * n * r4 + n2 * r4 + 32.0 * u +
         4.0 * n * u - 48.0 * r * u - 22.0 * n * r * u + 12.0 * n * r2 * u +
         6.0 * n * r3 * u - 12.0 * u2 + 32.0 * r * u2 + 4.0 * n * r * u2 -
         4.0 * n * r2 * u2 - 8.0 * r * u3) /
        (8.0 * r);
    return std::abs(s.value() - rhs);
}

double id_a14(const IdentityParams& p) {
    const int n = p.n;
    const double r = p.r, u = p.u;
    KahanSum s;
    for (int d = 0; d <= n + 1; ++d) {
        const double t = 1.0 + d - u - 0.5 * n * (1.0 - r);
        s.add(a_weight(n, r, d) * (0.5 - u + d) * t * t * t);
    }
    const double r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r;
    const double n2 = static_cast<double>(n) * n;
    const double u2 = u * u, u3 = u2 * u, u4 = u3 * u;
    const double rhs =
        (-92.0 - 61.0 * n - 3.0 * n2 + 100.0 * r + 105.0 * n * r +
         15.0 * n2 * r + 19.0 * n * r2 - 4.0 * n2 * r2 - 35.0 * n * r3 -
         20.0 * n2 * r3 - 22.0 * n * r4 + 7.0 * n2 * r4 - 6.0 * n * r5 +
         5.0 * n2 * r5 + 188.0 * u + 60.0 * n * u - 228.0 * r * u -
         162.0 * n * r * u - 6.0 * n2 * r * u + 20.0 * n * r2 * u +
         6.0 * n2 * r2 * u + 66.0 * n * r3 * u + 6.0 * n2 * r3 * u +
         16.0 * n * r4 * u - 6.0 * n2 * r4 * u - 132.0 * u2 - 12.0 * n * u2 +
         204.0 * r * u2 + 72.0 * n * r * u2 - 36.0 * n * r2 * u2 -
         24.0 * n * r3 * u2 + 32.0 * u3 - 88.0 * r * u3 - 8.0 * n * r * u3 +
         8.0 * n * r2 * u3 + 16.0 * r * u4) /
        (16.0 * r);
    return std::abs(s.value() - rhs);
}

double id_a15(const IdentityParams& p) {
    const int n = p.n;
    const double r = p.r, u = p.u;
    KahanSum s;
    for (int d = 0; d <= n + 1; ++d)
        s.add(a_weight(n, r, d) * (0.5 - u + d) * std::log(1.0 + d - u));
    const double rhs = (0.5 * n * (1.0 - r) + 1.0 - u - 0.5 / r) *
                           (std::log(n) + std::log(1.0 - r) - kLog2) +
                       1.75 - u + 0.25 * r - 0.5 / r;
    return n * std::abs(s.value() - rhs);
}

double wB(int n, int d) {
    return (n - 2.0 * d + 1.0) * (n - 2.0 * d + 1.0) / (n + 1.0) *
           choose_d(n + 1, d);
}

double id_B3(const IdentityParams& p) {
    KahanSum s;
    for (int d = 0; d <= p.n + 1; ++d) s.add(wB(p.n, d) * lambda_ext(p.n, p.u, d));
    return std::abs(s.value() - 2.0);
}

double id_B4(const IdentityParams& p) {
    KahanSum s;
    for (int d = 1; d <= p.n + 1; ++d)
        s.add((p.n - 2.0 * d + 1.0) * (p.n - 2.0 * d + 1.0) *
              choose_d(p.n, d - 1) * lambda_ext(p.n, p.u, d));
    return std::abs(s.value() - (p.n + 1.0));
}

double id_B5(const IdentityParams& p) {
    const int n = p.n;
    const double u = p.u;
    if (u == 0.0)
        throw domain_error("identity B5: u = 0 is a pole of both sides");
    KahanSum s;
    for (int d = -1; d <= n + 1; ++d) {
        const double lam = (d >= 0) ? lambda_ext(n, u, d) : lambda_minus1(n, u);
        s.add((n - 2.0 * d + 1.0) * (n - 2.0 * d + 1.0) /
              ((n + 1.0) * (n + 2.0)) * choose_d(n + 2, d + 1) * lam);
    }
    const double rhs = 2.0 * (n + 3.0) * (2.0 * u - 3.0) /
                       ((n + 1.0) * (n + 2.0) * u);
    return std::abs(s.value() - rhs);
}

double id_B6(const IdentityParams& p) {
    const int n = p.n;
    const double u = p.u, a = p.alpha;
    if (!(a > u - 1.0))
        throw domain_error("identity B6: requires alpha > u - 1");
    KahanSum s;
    for (int d = 0; d <= n + 1; ++d) {
        const double lam_alpha =
            std::exp(-n * kLog2 + log_gamma(2.5 - u) +
                     log_gamma(2.0 + n - d - u) + log_gamma(1.0 + a + d - u) -
                     log_gamma(2.5 + 0.5 * n - u) -
                     log_gamma(2.0 + 0.5 * n - u) - log_gamma(1.0 - u));
        s.add(wB(n, d) * lam_alpha * (d - u + 0.5));
    }
    const double n2 = static_cast<double>(n) * n;
    const double a2 = a * a, a3 = a2 * a;
    const double u2 = u * u, u3 = u2 * u, u4 = u3 * u;
    const double poly =
        48.0 + 64.0 * a + 25.0 * a2 + 3.0 * a3 + 40.0 * n + 66.0 * a * n +
        37.0 * a2 * n + 5.0 * a3 * n + 8.0 * n2 + 14.0 * a * n2 +
        8.0 * a2 * n2 + 2.0 * a3 * n2 - 152.0 * u - 138.0 * a * u -
        34.0 * a2 * u - 2.0 * a3 * u - 92.0 * n * u - 92.0 * a * n * u -
        32.0 * a2 * n * u - 2.0 * a3 * n * u - 12.0 * n2 * u -
        10.0 * a * n2 * u - 2.0 * a2 * n2 * u + 176.0 * u2 + 100.0 * a * u2 +
        12.0 * a2 * u2 + 68.0 * n * u2 + 32.0 * a * n * u2 +
        4.0 * a2 * n * u2 + 4.0 * n2 * u2 - 88.0 * u3 - 24.0 * a * u3 -
        16.0 * n * u3 + 16.0 * u4;
    const double rhs =
        poly *
        std::exp(log_gamma(5.0 - 2.0 * u) + log_gamma(3.0 + a + n - 2.0 * u) +
                 log_gamma(1.0 + a - u) - log_gamma(5.0 + a - 2.0 * u) -
                 log_gamma(4.0 + n - 2.0 * u) - log_gamma(3.0 - u)) /
        4.0;
    return std::abs(s.value() - rhs);
}

double id_B7(const IdentityParams& p) {
    const int n = p.n;
    const double u = p.u;
    KahanSum s;
    for (int d = 0; d <= n + 1; ++d)
        s.add(wB(n, d) * lambda_ext(n, u, d) * (d - u + 0.5) *
              digamma(1.0 + d - u));
    const double rhs =
        (32.0 + 33.0 * n + 7.0 * static_cast<double>(n) * n - 69.0 * u -
         46.0 * n * u - 5.0 * static_cast<double>(n) * n * u + 50.0 * u * u +
         16.0 * n * u * u - 12.0 * u * u * u) /
            (2.0 * (2.0 - u) * (1.0 - u) * (3.0 + n - 2.0 * u)) +
        (n + 2.0 - 2.0 * u) * (digamma(1.0 - u) + digamma(n + 3.0 - 2.0 * u) -
                               digamma(5.0 - 2.0 * u));
    return std::abs(s.value() - rhs);
}

double id_B8(const IdentityParams& p) {
    const int n = p.n;
    const double u = p.u;
    KahanSum s;
    for (int d = 0; d <= n + 1; ++d)
        s.add(wB(n, d) * lambda_ext(n, u, d) * (d - u + 0.5) *
              std::log(1.0 + d - u));
    const double rhs =
        n * (std::log(n) +
             (7.0 - 5.0 * u) / (2.0 * (2.0 - u) * (1.0 - u)) -
             digamma(5.0 - 2.0 * u) + digamma(1.0 - u)) +
        (2.0 - 2.0 * u) * std::log(n) +
        (26.0 - 46.0 * u + 25.0 * u * u - 4.0 * u * u * u) /
            (2.0 * (2.0 - u) * (1.0 - u)) +
        (-2.0 + 2.0 * u) * digamma(5.0 - 2.0 * u) +
        (2.0 - 2.0 * u) * digamma(1.0 - u);
    return std::pow(n, 1.0 - u) * std::abs(s.value() - rhs);
}

double id_e37(const IdentityParams& p) {
    const int n = p.n, d = p.d;
    const double r = p.r, z = p.z;
    if (d < 0 || 2 * d > n)
        throw domain_error("identity e37: requires 0 <= d <= n/2");
    KahanSum s;
    for (int ss = d; ss <= n - d; ++ss)
        for (int j = 0; j <= d; ++j)
            for (int k = j; k <= ss; ++k)
                s.add(((j % 2 == 0) ? 1.0 : -1.0) * choose_d(d, j) *
                      choose_d(ss - d, k - j) * choose_d(n - ss - d, k - j) *
                      std::pow(1.0 + z, ss - k) * std::pow(r * r - z * z, k) *
                      std::pow(1.0 - z, n - ss - k));
    const double rhs = (std::pow(1.0 + r, n + 1 - d) * std::pow(1.0 - r, d) -
                        std::pow(1.0 + r, d) * std::pow(1.0 - r, n + 1 - d)) /
                       (2.0 * r);
    return std::abs(s.value() - rhs);
}

} // namespace

double identity_check(const std::string& id, const IdentityParams& p) {
    if (p.n < 1 || p.n > 40)
        throw domain_error("identity_check: requires 1 <= n <= 40");
    if (!(p.u < 1.0)) throw domain_error("identity_check: requires u < 1");
    if (!(p.r > 0.0 && p.r < 1.0))
        throw domain_error("identity_check: requires 0 < r < 1");
    if (id == "a8") return id_a8(p);
    if (id == "a9") return id_a9(p);
    if (id == "a10") return id_a10(p);
    if (id == "a11") return id_a11(p);
    if (id == "a12") return id_a12(p);
    if (id == "a13") return id_a13(p);
    if (id == "a14") return id_a14(p);
    if (id == "a15") return id_a15(p);
    if (id == "B3") return id_B3(p);
    if (id == "B4") return id_B4(p);
    if (id == "B5") return id_B5(p);
    if (id == "B6") return id_B6(p);
    if (id == "B7") return id_B7(p);
    if (id == "B8") return id_B8(p);
    if (id == "e37") return id_e37(p);
    throw domain_error("identity_check: unknown id " + id);
}

const std::vector<std::string>& exact_identity_ids() {
    static const std::vector<std::string> ids = {
        "a8", "a9", "a10", "a11", "a12", "a13", "a14",
        "B3", "B4", "B5", "B6", "B7", "e37"};
    return ids;
}

RedundancyReport report(int n, double u, double r) {
    RedundancyReport rep;
    rep.n = n;
    rep.u = u;
    rep.r = r;
    rep.exact = relative_entropy_exact(n, u, r);
    Regime regime = Regime::interior;
    if (r <= kEndpointClamp) {
        regime = Regime::center;
        r = 0.0;
    } else if (r >= 1.0 - kEndpointClamp) {
        regime = Regime::boundary;
        r = 1.0;
    }
    rep.asymptotic = asymptotic_redundancy(n, u, r, regime);
    rep.scaled_error = n * std::abs(rep.exact - rep.asymptotic);
    return rep;
}

} // namespace qredux::redundancy
