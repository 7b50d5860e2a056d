#include "qredux/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qredux/bayes_matrix.hpp"
#include "qredux/compress.hpp"
#include "qredux/errors.hpp"
#include "qredux/io.hpp"
#include "qredux/optimize.hpp"
#include "qredux/redundancy.hpp"
#include "qredux/specfun.hpp"
#include "qredux/spectrum.hpp"

namespace qredux::cli {

namespace {

using nlohmann::json;

struct Output {
    std::string path; // empty means stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) throw domain_error("cannot open output file " + path);
        os << text;
    }
};

std::string table_text(const io::Table& t, const std::string& fmt) {
    if (fmt == "json") return t.json().dump(2) + "\n";
    std::ostringstream os;
    t.write_csv(os);
    return os.str();
}

// Exact counts stay JSON integers while they are exactly representable,
// strings beyond that.
json count_cell(const BigUint& v) {
    const double d = v.to_double();
    if (d < 9.007199254740992e15) return static_cast<std::uint64_t>(d);
    return v.to_string();
}

int emit_spectrum(int n, double u, const std::string& fmt, const Output& out) {
    const auto sp = spectrum::closed_form_spectrum(n, u);
    io::Table t({"d", "lambda", "multiplicity", "cumulative_weight"});
    double cumulative = 0.0;
    for (const auto& level : sp.levels) {
        cumulative += std::exp(std::log(level.multiplicity.to_double()) +
                               spectrum::log_eigenvalue(n, u, level.d));
        t.add_row({level.d, level.lambda, count_cell(level.multiplicity),
                   cumulative});
    }
    out.write(table_text(t, fmt));
    return 0;
}

int emit_matrix(int n, double u, const std::string& fmt, const Output& out) {
    const Eigen::MatrixXd m = bayes::zeta_matrix(n, u);
    if (fmt == "bin") {
        std::ostringstream os(std::ios::binary);
        io::write_matrix_binary(os, n, u, m);
        out.write(os.str());
        return 0;
    }
    if (fmt == "json") {
        json rows = json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
            rows.push_back(std::move(row));
        }
        out.write(json{{"n", n}, {"u", u}, {"values", rows}}.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    io::write_matrix_csv(os, m);
    out.write(os.str());
    return 0;
}

int emit_redundancy(int n, double u, double r, int grid,
                    const std::string& fmt, const Output& out) {
    io::Table t({"n", "u", "r", "exact", "asymptotic", "scaled_error"});
    auto add = [&](double rr) {
        const auto rep = redundancy::report(n, u, rr);
        t.add_row({rep.n, rep.u, rep.r, rep.exact, rep.asymptotic,
                   rep.scaled_error});
    };
    if (grid > 0)
        for (int i = 0; i <= grid; ++i) add(static_cast<double>(i) / grid);
    else
        add(r);
    out.write(table_text(t, fmt));
    return 0;
}

int emit_asymptotic(int n, double u, double r, std::string regime,
                    const std::string& fmt, const Output& out) {
    if (regime == "auto")
        regime = (r == 0.0) ? "center" : (r == 1.0 ? "boundary" : "interior");
    redundancy::Regime reg;
    if (regime == "interior")
        reg = redundancy::Regime::interior;
    else if (regime == "center")
        reg = redundancy::Regime::center;
    else if (regime == "boundary")
        reg = redundancy::Regime::boundary;
    else
        throw domain_error("unknown regime " + regime);
    io::Table t({"n", "u", "r", "regime", "value"});
    t.add_row({n, u, r, regime, redundancy::asymptotic_redundancy(n, u, r, reg)});
    out.write(table_text(t, fmt));
    return 0;
}

int emit_entropy(int n, double u, const std::string& fmt, const Output& out) {
    const double exact = redundancy::zeta_entropy_exact(n, u);
    const double asym = redundancy::zeta_entropy_asym(n, u);
    io::Table t({"n", "u", "exact", "asymptotic", "scaled_error"});
    t.add_row({n, u, exact, asym,
               std::pow(n, 1.0 - u) * std::abs(exact - asym)});
    out.write(table_text(t, fmt));
    return 0;
}

int emit_bayes(int n, double u, const std::string& fmt, const Output& out) {
    io::Table t({"n", "u", "exact", "asymptotic", "constant"});
    t.add_row({n, u,
               redundancy::bayes_redundancy(n, u, redundancy::BayesMode::exact),
               redundancy::bayes_redundancy(n, u,
                                            redundancy::BayesMode::asymptotic),
               redundancy::bayes_constant(u)});
    out.write(table_text(t, fmt));
    return 0;
}

int emit_minimax(const std::vector<int>& ns, const std::string& fmt,
                 const Output& out) {
    io::Table t({"n", "u_n", "value", "sign_changes"});
    for (int n : ns) {
        const auto res = optimize::minimax_u(n);
        t.add_row({res.n, res.u_n, res.value,
                   static_cast<std::uint64_t>(res.all_roots.size())});
    }
    out.write(table_text(t, fmt));
    return 0;
}

int emit_maximin(const std::string& fmt, const Output& out) {
    const auto res = optimize::maximin_u();
    if (fmt == "csv") {
        io::Table t({"u_star", "constant", "residual"});
        t.add_row({res.u_star, res.constant, res.equation_residual});
        out.write(table_text(t, "csv"));
        return 0;
    }
    out.write(json{{"u_star", res.u_star},
                   {"constant", res.constant},
                   {"residual", res.equation_residual}}
                  .dump(2) +
              "\n");
    return 0;
}

int emit_rscan(int n, double u, int grid, const std::string& fmt,
               const Output& out) {
    const auto scan = optimize::rmax_scan(n, u, grid);
    if (fmt == "json") {
        json profile = json::array();
        for (const auto& [r, sv] : scan.profile)
            profile.push_back(json{{"r", r}, {"S", sv}});
        out.write(json{{"argmax_r", scan.argmax_r},
                       {"max_value", scan.max_value},
                       {"profile", profile}}
                      .dump(2) +
                  "\n");
        return 0;
    }
    io::Table t({"r", "S"});
    for (const auto& [r, sv] : scan.profile) t.add_row({r, sv});
    out.write(table_text(t, "csv"));
    return 0;
}

int emit_compress(int n, double u, double eps, bool curve, int grid,
                  const std::string& fmt, const Output& out) {
    const auto p = compress::plan(n, u, eps);
    if (curve) {
        io::Table t({"r", "retained_weight", "fidelity_bound"});
        for (int i = 0; i <= grid; ++i) {
            const double r = static_cast<double>(i) / grid;
            const double w = compress::source_weight(n, p.level_cap, r);
            t.add_row({r, w, compress::fidelity_bound(w)});
        }
        out.write(table_text(t, fmt));
        return 0;
    }
    io::Table t({"n", "u", "epsilon", "D", "dim", "qubits", "prior_weight"});
    t.add_row({p.n, p.u, p.epsilon, p.level_cap, count_cell(p.dim), p.qubits,
               p.prior_weight});
    out.write(table_text(t, fmt));
    return 0;
}

int emit_identities(const redundancy::IdentityParams& params, double tol,
                    const std::string& fmt, const Output& out) {
    io::Table t({"id", "residual", "status"});
    bool all_pass = true;
    for (const auto& id : redundancy::exact_identity_ids()) {
        const double res = redundancy::identity_check(id, params);
        const bool pass = res <= tol;
        all_pass = all_pass && pass;
        t.add_row({id, res, pass ? "PASS" : "FAIL"});
    }
    out.write(table_text(t, fmt));
    return all_pass ? 0 : 2;
}

int emit_figure2(int grid, const std::string& fmt, const Output& out) {
    io::Table t({"r", "nonclassical_term"});
    t.add_row({0.0, -1.0}); // limit r -> 0
    for (int i = 1; i < grid; ++i) {
        const double r = static_cast<double>(i) / grid;
        t.add_row({r, 0.5 / r * (std::log1p(-r) - std::log1p(r))});
    }
    out.write(table_text(t, fmt));
    return 0;
}

int emit_figure3(double umin, double umax, int grid, const std::string& fmt,
                 const Output& out) {
    if (!(umin < umax && umax < 1.0))
        throw domain_error("figure3: requires umin < umax < 1");
    io::Table t({"u", "C"});
    for (int i = 0; i <= grid; ++i) {
        const double u = umin + (umax - umin) * i / grid;
        t.add_row({u, redundancy::bayes_constant(u)});
    }
    out.write(table_text(t, fmt));
    return 0;
}

int emit_verify(const std::string& file, const std::string& fmt,
                const Output& out) {
    const auto results = run_verification(file);
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;
    if (fmt == "json") {
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back(
                json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        out.write(json{{"pass", all_pass}, {"checks", checks}}.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& r : results)
            os << (r.pass ? "PASS " : "FAIL ") << r.name << ' ' << r.detail
               << '\n';
        os << (all_pass ? "SUMMARY PASS" : "SUMMARY FAIL") << " checks="
           << results.size() << '\n';
        out.write(os.str());
    }
    return all_pass ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Exact and asymptotic redundancies of universal quantum "
                 "coding for two-level systems"};
    app.require_subcommand(1);

    int n = 4;
    double u = 0.5;
    double r = 0.5;
    double eps = 0.1;
    int grid = 0;
    double tol = 1e-11;
    std::string fmt;
    std::string out_path;
    std::string regime = "auto";
    std::string file;
    std::vector<int> n_list;
    double alpha = 0.5, zpar = 0.2;
    int dpar = 2;
    double umin = -0.2, umax = 0.99;
    bool curve = false;

    auto add_common = [&](CLI::App* cmd, const std::string& default_fmt) {
        cmd->add_option("--format", fmt, "output format")->default_str(default_fmt);
        cmd->add_option("--out", out_path, "write to PATH instead of stdout");
        return cmd;
    };

    auto* c_spectrum = add_common(app.add_subcommand("spectrum", "closed-form spectrum table"), "csv");
    c_spectrum->add_option("--n", n)->required();
    c_spectrum->add_option("--u", u)->required();

    auto* c_matrix = add_common(app.add_subcommand("matrix", "Bayesian density matrix export"), "csv");
    c_matrix->add_option("--n", n)->required();
    c_matrix->add_option("--u", u)->required();

    auto* c_red = add_common(app.add_subcommand("redundancy", "exact vs asymptotic relative entropy"), "csv");
    c_red->add_option("--n", n)->required();
    c_red->add_option("--u", u)->required();
    c_red->add_option("--r", r);
    c_red->add_option("--grid", grid, "sweep r over a grid instead of --r");

    auto* c_asym = add_common(app.add_subcommand("asymptotic", "asymptotic redundancy value"), "csv");
    c_asym->add_option("--n", n)->required();
    c_asym->add_option("--u", u)->required();
    c_asym->add_option("--r", r);
    c_asym->add_option("--regime", regime, "interior|center|boundary|auto");

    auto* c_entropy = add_common(app.add_subcommand("entropy", "von Neumann entropy of the Bayesian matrix"), "csv");
    c_entropy->add_option("--n", n)->required();
    c_entropy->add_option("--u", u)->required();

    auto* c_bayes = add_common(app.add_subcommand("bayes", "Bayes redundancy under q(u)"), "csv");
    c_bayes->add_option("--n", n)->required();
    c_bayes->add_option("--u", u)->required();

    auto* c_minimax = add_common(app.add_subcommand("minimax", "finite-n minimax parameter u_n"), "csv");
    c_minimax->add_option("--n", n_list, "one or more block lengths")->required();

    auto* c_maximin = add_common(app.add_subcommand("maximin", "asymptotic maximin parameter"), "json");

    auto* c_rscan = add_common(app.add_subcommand("rscan", "redundancy profile over r"), "csv");
    c_rscan->add_option("--n", n)->required();
    c_rscan->add_option("--u", u)->required();
    c_rscan->add_option("--grid", grid);

    auto* c_compress = add_common(app.add_subcommand("compress", "dominant-eigenspace coding plan"), "csv");
    c_compress->add_option("--n", n)->required();
    c_compress->add_option("--u", u)->required();
    c_compress->add_option("--eps", eps)->required();
    c_compress->add_flag("--curve", curve, "emit the source-weight curve");
    c_compress->add_option("--grid", grid);

    auto* c_ident = add_common(app.add_subcommand("identities", "closed-form summation identity residuals"), "csv");
    c_ident->add_option("--n", n)->required();
    c_ident->add_option("--r", r)->required();
    c_ident->add_option("--u", u)->required();
    c_ident->add_option("--alpha", alpha);
    c_ident->add_option("--z", zpar);
    c_ident->add_option("--d", dpar);
    c_ident->add_option("--tol", tol);

    auto* c_verify = add_common(app.add_subcommand("verify", "umbrella oracle/invariant suite"), "text");
    c_verify->add_option("--file", file, "additionally check a ZETA matrix file");

    auto* c_fig2 = add_common(app.add_subcommand("figure2", "nonclassical term plot data"), "csv");
    c_fig2->add_option("--grid", grid);

    auto* c_fig3 = add_common(app.add_subcommand("figure3", "Bayes-redundancy constant C(u) plot data"), "csv");
    c_fig3->add_option("--grid", grid);
    c_fig3->add_option("--umin", umin);
    c_fig3->add_option("--umax", umax);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    const Output out{out_path};
    try {
        if (c_spectrum->parsed())
            return emit_spectrum(n, u, fmt.empty() ? "csv" : fmt, out);
        if (c_matrix->parsed())
            return emit_matrix(n, u, fmt.empty() ? "csv" : fmt, out);
        if (c_red->parsed())
            return emit_redundancy(n, u, r, grid, fmt.empty() ? "csv" : fmt, out);
        if (c_asym->parsed())
            return emit_asymptotic(n, u, r, regime, fmt.empty() ? "csv" : fmt, out);
        if (c_entropy->parsed())
            return emit_entropy(n, u, fmt.empty() ? "csv" : fmt, out);
        if (c_bayes->parsed())
            return emit_bayes(n, u, fmt.empty() ? "csv" : fmt, out);
        if (c_minimax->parsed())
            return emit_minimax(n_list, fmt.empty() ? "csv" : fmt, out);
        if (c_maximin->parsed())
            return emit_maximin(fmt.empty() ? "json" : fmt, out);
        if (c_rscan->parsed())
            return emit_rscan(n, u, grid > 0 ? grid : 128,
                              fmt.empty() ? "csv" : fmt, out);
        if (c_compress->parsed())
            return emit_compress(n, u, eps, curve, grid > 0 ? grid : 64,
                                 fmt.empty() ? "csv" : fmt, out);
        if (c_ident->parsed()) {
            redundancy::IdentityParams params{n, r, u, alpha, zpar, dpar};
            return emit_identities(params, tol, fmt.empty() ? "csv" : fmt, out);
        }
        if (c_verify->parsed())
            return emit_verify(file, fmt.empty() ? "text" : fmt, out);
        if (c_fig2->parsed())
            return emit_figure2(grid > 0 ? grid : 128, fmt.empty() ? "csv" : fmt, out);
        if (c_fig3->parsed())
            return emit_figure3(umin, umax, grid > 0 ? grid : 128,
                                fmt.empty() ? "csv" : fmt, out);
    } catch (const accuracy_error& e) {
        std::cerr << "accuracy error: " << e.what() << '\n';
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 1;
    } catch (const infinite_divergence& e) {
        std::cerr << "divergence: " << e.what() << '\n';
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 3;
}

} // namespace qredux::cli
