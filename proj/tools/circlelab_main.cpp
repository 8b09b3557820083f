// circlelab command-line tool.
//
// Subcommands: count, special, verify, perror, theorem5, report.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circlelab/arith.hpp"
#include "circlelab/common.hpp"
#include "circlelab/csv.hpp"
#include "circlelab/eulermac.hpp"
#include "circlelab/quad.hpp"
#include "circlelab/series.hpp"
#include "circlelab/specfun.hpp"
#include "circlelab/verify.hpp"

namespace {

using circlelab::Rational;
using circlelab::csv::format_double;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

long env_term_budget(long fallback) {
    const char* env = std::getenv("CIRCLELAB_MAX_TERMS");
    if (env == nullptr || *env == '\0') return fallback;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v <= 0) return fallback;
    return v;
}

std::string rational_str(const Rational& r) {
    if (r.is_integer()) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

int cmd_count(const std::string& x_text, const std::string& kind, const std::string& format) {
    Rational x = circlelab::parse_decimal(x_text);
    if (x.num <= 0) throw std::domain_error("count: requires x > 0");
    circlelab::arith::RemainderRecord rec;
    if (kind == "circle") {
        rec = circlelab::arith::p_exact(x);
    } else if (kind == "divisor") {
        rec = circlelab::arith::delta_exact(x);
    } else {
        throw CLI::ValidationError("--kind must be circle or divisor");
    }
    if (format == "json") {
        json j{{"x", x_text},
               {"kind", kind},
               {"star_sum", rational_str(rec.star_sum)},
               {"star_sum_value", rec.star_sum.to_double()},
               {"main_term", rec.main_term},
               {"remainder", rec.remainder}};
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << circlelab::csv::emit_row({"x", "kind", "star_sum", "main_term", "remainder"});
        std::cout << circlelab::csv::emit_row({x_text, kind, rational_str(rec.star_sum),
                                               format_double(rec.main_term),
                                               format_double(rec.remainder)});
    } else {
        std::cout << "x          " << x_text << "\n"
                  << "kind       " << kind << "\n"
                  << "star_sum   " << rational_str(rec.star_sum) << "\n"
                  << "main_term  " << format_double(rec.main_term) << "\n"
                  << "remainder  " << format_double(rec.remainder) << "\n";
    }
    return kExitOk;
}

int cmd_special(const std::string& fn, double arg, const std::string& format) {
    circlelab::specfun::SpecialValue v;
    if (fn == "j1") v = circlelab::specfun::j1(arg);
    else if (fn == "y1") v = circlelab::specfun::y1_k1(arg).first;
    else if (fn == "k1") v = circlelab::specfun::y1_k1(arg).second;
    else if (fn == "i1") v = circlelab::specfun::ramanujan_i1(arg);
    else if (fn == "si") v = circlelab::specfun::si(arg);
    else if (fn == "ci") v = circlelab::specfun::ci(arg);
    else if (fn == "berd") v = circlelab::specfun::ber_deriv(arg);
    else throw CLI::ValidationError("--fn must be one of j1|y1|k1|i1|si|ci|berd");
    if (format == "json") {
        json j{{"fn", fn},
               {"arg", arg},
               {"value", v.value},
               {"est_error", v.est_error},
               {"method", circlelab::specfun::method_name(v.method)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << fn << "(" << format_double(arg) << ") = " << format_double(v.value)
                  << "  est_error " << format_double(v.est_error) << "  method "
                  << circlelab::specfun::method_name(v.method) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, double tol_scale) {
    std::vector<circlelab::verify::CheckResult> results =
        circlelab::verify::run_suite(suite, tol_scale);
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  lhs="
                  << format_double(r.lhs) << "  rhs=" << format_double(r.rhs)
                  << "  tol=" << format_double(r.tol);
        if (!r.note.empty()) std::cout << "  (" << r.note << ")";
        std::cout << "\n";
    }
    std::cout << (all_pass ? "verify: all checks passed\n" : "verify: FAILURES present\n");
    return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_perror(const std::string& xmin_text, const std::string& xmax_text,
               const std::string& step_text, long series_n, long phi_k, bool exact_integers,
               const std::string& out_path) {
    Rational xmin = circlelab::parse_decimal(xmin_text);
    Rational xmax = circlelab::parse_decimal(xmax_text);
    Rational step = circlelab::parse_decimal(step_text);
    if (xmin.num <= 0 || !(xmin <= xmax) || step.num <= 0)
        throw std::domain_error("perror: requires 0 < x-min <= x-max and step > 0");

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "perror: cannot open output path '" << out_path << "'\n";
        return kExitIo;
    }

    circlelab::arith::LatticeCounter counter(xmax.floor_ll() + 2);
    const Rational shift(1, 1000000);
    circlelab::series::TruncationSpec spec;
    spec.outer_N = series_n;

    out << circlelab::csv::emit_row(
        {"x", "p_exact", "p_series", "p_series_err", "phi_p", "abs_diff_series", "abs_diff_phi"});
    double running_max = 0.0;
    for (Rational x = xmin; x <= xmax; x = x + step) {
        Rational xi = x;
        if (xi.is_integer() && !exact_integers) xi = xi + shift;
        circlelab::arith::RemainderRecord rec = counter.p_exact(xi);
        circlelab::SeriesValue ps = circlelab::series::p_series(xi.to_double(), spec);
        circlelab::series::PhiPResult pp = circlelab::series::phi_p_eval(xi.to_double(), phi_k);
        running_max = std::max(running_max, std::abs(rec.remainder));
        out << circlelab::csv::emit_row(
            {format_double(xi.to_double()), format_double(rec.remainder),
             format_double(ps.value), format_double(ps.est_error),
             format_double(pp.series.value), format_double(std::abs(ps.value - rec.remainder)),
             format_double(std::abs(pp.series.value - rec.remainder))});
    }
    out.flush();
    if (!out) {
        std::cerr << "perror: write failure on '" << out_path << "'\n";
        return kExitIo;
    }
    std::cout << "running_max_abs_p_exact " << format_double(running_max) << "\n";
    return kExitOk;
}

int cmd_theorem5(const std::string& x_text, long n_max, const std::string& out_path) {
    Rational xr = circlelab::parse_decimal(x_text);
    double x = xr.to_double();
    if (!(x > 0.0)) throw std::domain_error("theorem5: requires x > 0");
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "theorem5: cannot open output path '" << out_path << "'\n";
        return kExitIo;
    }
    out << circlelab::csv::emit_row(
        {"n", "Y", "Ystar", "xi", "lambda", "xi_residual", "lambda_residual", "metric", "status"});
    double running_max = 0.0;
    for (long n = 0; n <= n_max; ++n) {
        circlelab::series::XiLambdaRow row =
            circlelab::series::lambda_solve(circlelab::series::xi_solve(n, x));
        if (row.status == circlelab::series::RowStatus::ok)
            running_max = std::max(running_max, row.metric);
        out << circlelab::csv::emit_row(
            {std::to_string(row.n), format_double(row.y), format_double(row.y_star),
             format_double(row.xi), format_double(row.lambda), format_double(row.xi_residual),
             format_double(row.lambda_residual), format_double(row.metric),
             circlelab::series::row_status_name(row.status)});
    }
    out.flush();
    if (!out) {
        std::cerr << "theorem5: write failure on '" << out_path << "'\n";
        return kExitIo;
    }
    std::cout << "lambda_root_rule nearest-to-xi\n";
    std::cout << "running_max_metric " << format_double(running_max) << "\n";
    return kExitOk;
}

int cmd_report(const std::string& x_text, long series_n, long phi_k, long voronoi_n) {
    Rational xr = circlelab::parse_decimal(x_text);
    if (xr.num <= 0) throw std::domain_error("report: requires x > 0");
    double x = xr.to_double();

    circlelab::arith::RemainderRecord exact = circlelab::arith::p_exact(xr);
    circlelab::series::TruncationSpec spec;
    spec.outer_N = series_n;
    circlelab::SeriesValue ps = circlelab::series::p_series(x, spec);
    circlelab::series::PhiPResult pp = circlelab::series::phi_p_eval(x, phi_k);
    circlelab::SeriesValue vc = circlelab::series::voronoi_circle(x, voronoi_n);
    double voronoi_remainder = vc.value - circlelab::kPi * x;

    std::cout << "P(x) estimates at x = " << x_text << "\n";
    std::cout << "  exact_count      " << format_double(exact.remainder) << "  (star_sum "
              << rational_str(exact.star_sum) << ")\n";
    std::cout << "  bessel_series    " << format_double(ps.value) << "  est_error "
              << format_double(ps.est_error) << "  [N=" << series_n << "]\n";
    std::cout << "  arctan_series    " << format_double(pp.series.value) << "  est_error "
              << format_double(pp.series.est_error) << "  [K=" << phi_k << "]\n";
    std::cout << "  voronoi_circle   " << format_double(voronoi_remainder) << "  est_error "
              << format_double(vc.est_error) << "  [N=" << voronoi_n << "]\n";
    if (!pp.skipped_k.empty()) {
        std::cout << "  arctan_series skipped singular k:";
        for (long k : pp.skipped_k) std::cout << " " << k;
        std::cout << "\n";
    }

    bool series_ok = std::abs(ps.value - exact.remainder) <= ps.est_error + 0.1;
    bool voronoi_ok = std::abs(voronoi_remainder - exact.remainder) <= vc.est_error + 0.1;
    bool phi_ok = std::abs(pp.series.value - exact.remainder) <= pp.series.est_error + 0.1;
    std::cout << "verdict: bessel_series " << (series_ok ? "agrees" : "DISAGREES")
              << ", voronoi " << (voronoi_ok ? "agrees" : "DISAGREES") << ", arctan_series "
              << (phi_ok ? "agrees" : "DISAGREES") << " with the exact count\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circlelab: lattice-point remainder laboratory"};
    app.require_subcommand(1);

    std::string x_text, kind = "circle", format = "text", fn, suite = "all", out_path;
    double arg = 0.0, tol_scale = 1.0;
    long series_n = env_term_budget(400);
    long phi_k = env_term_budget(10000);
    long voronoi_n = env_term_budget(2000);
    long n_max = 200;
    std::string xmin_text = "1", xmax_text = "100", step_text = "0.5";
    bool exact_integers = false;

    CLI::App* count = app.add_subcommand("count", "exact star-convention counts and remainders");
    count->add_option("--x", x_text, "evaluation point (decimal string, exact)")->required();
    count->add_option("--kind", kind, "circle|divisor")->check(CLI::IsMember({"circle", "divisor"}));
    count->add_option("--format", format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    CLI::App* special = app.add_subcommand("special", "evaluate a special function");
    special->add_option("--fn", fn, "j1|y1|k1|i1|si|ci|berd")->required();
    special->add_option("--arg", arg, "argument")->required();
    special->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "run the identity verification battery");
    verify->add_option("--suite", suite, "specfun|eulermac|series|all")
        ->check(CLI::IsMember({"specfun", "eulermac", "series", "all"}));
    verify->add_option("--tol-scale", tol_scale, "scale factor applied to tolerances");

    CLI::App* perror_cmd = app.add_subcommand("perror", "P(x) comparison grid to CSV");
    perror_cmd->add_option("--x-min", xmin_text, "grid start (decimal string)");
    perror_cmd->add_option("--x-max", xmax_text, "grid end (decimal string)");
    perror_cmd->add_option("--step", step_text, "grid step (decimal string)");
    perror_cmd->add_option("--series-n", series_n, "outer terms for the Bessel-series P(x)");
    perror_cmd->add_option("--phi-k", phi_k, "terms for the arctan-series P(x)");
    perror_cmd
        ->add_flag("--exact-integers", exact_integers,
                   "evaluate integer grid points exactly instead of shifting by 1e-6")
        ->take_last();
    perror_cmd->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* theorem5 = app.add_subcommand("theorem5", "xi/lambda mean-value scan to CSV");
    theorem5->add_option("--x", x_text, "scan parameter x (decimal string)")->required();
    theorem5->add_option("--n-max", n_max, "largest row index n");
    theorem5->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* report = app.add_subcommand("report", "side-by-side P(x) estimates");
    report->add_option("--x", x_text, "evaluation point (decimal string)")->required();
    report->add_option("--series-n", series_n, "outer terms for the Bessel-series P(x)");
    report->add_option("--phi-k", phi_k, "terms for the arctan-series P(x)");
    report->add_option("--voronoi-n", voronoi_n, "terms for the Voronoi series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(x_text, kind, format);
        if (special->parsed()) return cmd_special(fn, arg, format);
        if (verify->parsed()) return cmd_verify(suite, tol_scale);
        if (perror_cmd->parsed())
            return cmd_perror(xmin_text, xmax_text, step_text, series_n, phi_k, exact_integers,
                              out_path);
        if (theorem5->parsed()) return cmd_theorem5(x_text, n_max, out_path);
        if (report->parsed()) return cmd_report(x_text, series_n, phi_k, voronoi_n);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
