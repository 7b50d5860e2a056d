#include "qredux/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "qredux/errors.hpp"
#include "qredux/qstate.hpp"
#include "qredux/redundancy.hpp"
#include "qredux/specfun.hpp"

namespace qredux::optimize {

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double flo, double width) {
    for (int it = 0; it < 200 && hi - lo > width; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

MinimaxResult minimax_u(int n) {
    if (n < 1) throw domain_error("minimax_u: requires n >= 1");
    auto g = [n](double u) {
        return redundancy::relative_entropy_exact(n, u, 0.0) -
               redundancy::relative_entropy_exact(n, u, 1.0);
    };
    // 512-point scan, log-spaced in the distance 1 - u so the bracket
    // [-8, 0.999] concentrates points near the u -> 1 blow-up.
    constexpr int kScan = 512;
    const double lo_gap = std::log(1.0 - 0.999), hi_gap = std::log(9.0);
    std::vector<double> us(kScan), gs(kScan);
    for (int i = 0; i < kScan; ++i) {
        const double t = lo_gap + (hi_gap - lo_gap) * i / (kScan - 1);
        us[i] = 1.0 - std::exp(t);
        gs[i] = g(us[i]);
    }
    MinimaxResult res;
    res.n = n;
    for (int i = 0; i + 1 < kScan; ++i) {
        if ((gs[i] < 0.0) != (gs[i + 1] < 0.0)) {
            const double a = std::min(us[i], us[i + 1]);
            const double b = std::max(us[i], us[i + 1]);
            const double fa = (us[i] < us[i + 1]) ? gs[i] : gs[i + 1];
            res.all_roots.push_back(bisect(g, a, b, fa, 1e-12));
            if (res.all_roots.size() == 1) {
                res.bracket_lo = a;
                res.bracket_hi = b;
            }
        }
    }
    if (res.all_roots.empty()) {
        std::ostringstream msg;
        msg << "minimax_u: no sign change of S(r=0) - S(r=1) on u in [-8, 0.999]"
            << " at n = " << n << "; scan endpoints g = " << gs.front() << ", "
            << gs.back();
        throw accuracy_error(msg.str(), 0.0);
    }
    res.u_n = res.all_roots.front();
    res.value = redundancy::relative_entropy_exact(n, res.u_n, 0.0);
    return res;
}

MaximinResult maximin_u() {
    auto f = [](double u) {
        return 2.0 * std::pow(1.0 - u, 3) *
                   (specfun::trigamma(1.0 - u) - specfun::trigamma(2.5 - u)) -
               1.0;
    };
    const double lo = 0.01, hi = 0.99;
    const double flo = f(lo);
    if ((flo < 0.0) == (f(hi) < 0.0))
        throw accuracy_error("maximin_u: bracketing failure on (0, 1)", 0.0);
    MaximinResult res;
    res.u_star = bisect(f, lo, hi, flo, 1e-13);
    res.constant = redundancy::bayes_constant(res.u_star);
    res.equation_residual = std::abs(f(res.u_star));
    return res;
}

RmaxScan rmax_scan(int n, double u, int grid) {
    if (grid < 64) throw domain_error("rmax_scan: requires grid >= 64");
    auto s = [&](double r) {
        return redundancy::relative_entropy_exact(n, u, r);
    };
    RmaxScan out;
    out.profile.reserve(grid + 1);
    int best = 0;
    for (int i = 0; i <= grid; ++i) {
        const double r = static_cast<double>(i) / grid;
        out.profile.emplace_back(r, s(r));
        if (out.profile[i].second > out.profile[best].second) best = i;
    }
    // Golden-section refinement inside the cells flanking the best point.
    double a = out.profile[std::max(0, best - 1)].first;
    double b = out.profile[std::min(grid, best + 1)].first;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = s(x1), f2 = s(x2);
    for (int it = 0; it < 80 && b - a > 1e-10; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = s(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = s(x1);
        }
    }
    const double rm = 0.5 * (a + b);
    const double fm = s(rm);
    out.argmax_r = rm;
    out.max_value = fm;
    if (out.profile[best].second > fm) {
        out.argmax_r = out.profile[best].first;
        out.max_value = out.profile[best].second;
    }
    return out;
}

OptimalityCheck bayes_optimality_check(
    const std::vector<Eigen::MatrixXcd>& states,
    const std::vector<double>& weights, const Eigen::MatrixXcd& q) {
    if (states.empty() || states.size() != weights.size())
        throw domain_error("bayes_optimality_check: states/weights mismatch");
    double wsum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw domain_error("bayes_optimality_check: negative weight");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-10)
        throw domain_error("bayes_optimality_check: weights must sum to 1");

    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(q.rows(), q.cols());
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].rows() != q.rows())
            throw domain_error("bayes_optimality_check: dimension mismatch");
        mix += weights[i] * states[i];
    }

    OptimalityCheck out;
    double avg_q = 0.0, avg_m = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        avg_q += weights[i] * qstate::relative_entropy(states[i], q);
        avg_m += weights[i] * qstate::relative_entropy(states[i], mix);
    }
    out.gap = avg_q - avg_m;
    out.s_mq = qstate::relative_entropy(mix, q);
    if (std::abs(out.gap - out.s_mq) > 1e-9 || out.gap < -1e-10)
        throw accuracy_error(
            "bayes_optimality_check: telescoping identity failed numerically",
            out.gap);
    return out;
}

} // namespace qredux::optimize
