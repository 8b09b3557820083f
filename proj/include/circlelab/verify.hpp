#pragma once

// Invariant batteries for every module, shared by the `verify` subcommand and
// the test suites.  Each check compares two independently computed sides and
// records both, so a failure report always shows the numbers.

#include <cmath>
#include <string>
#include <vector>

#include "circlelab/arith.hpp"
#include "circlelab/common.hpp"
#include "circlelab/csv.hpp"
#include "circlelab/eulermac.hpp"
#include "circlelab/quad.hpp"
#include "circlelab/series.hpp"
#include "circlelab/specfun.hpp"

namespace circlelab::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double tol = 0.0;
    std::string note;
};

namespace detail {

inline void check_close(std::vector<CheckResult>& out, const std::string& name, double lhs,
                        double rhs, double tol, const std::string& note = "") {
    CheckResult r{name, std::abs(lhs - rhs) <= tol, lhs, rhs, tol, note};
    out.push_back(r);
}

inline void check_true(std::vector<CheckResult>& out, const std::string& name, bool ok,
                       double lhs, double rhs, const std::string& note = "") {
    out.push_back({name, ok, lhs, rhs, 0.0, note});
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> suite_arith(double tol_scale = 1.0) {
    using namespace arith;
    std::vector<CheckResult> out;

    long long bad_r2 = -1, bad_d = -1;
    for (long long n = 0; n <= 10000; ++n) {
        if (r2(n) != r2_enumerate(n)) { bad_r2 = n; break; }
        if (n >= 1 && d(n) != d_trial(n)) { bad_d = n; break; }
    }
    detail::check_true(out, "arith.r2_formula_vs_enumeration_n_le_1e4", bad_r2 < 0,
                       double(bad_r2), 0.0, bad_r2 < 0 ? "" : "first mismatch at n");
    detail::check_true(out, "arith.d_factorization_vs_trial_n_le_1e4", bad_d < 0, double(bad_d),
                       0.0, bad_d < 0 ? "" : "first mismatch at n");

    bool star_ok = true;
    double bad_x = 0.0;
    for (int i = 1; i <= 200; ++i) {
        Rational x(3 * i, 2);  // hits integers and half-integers up to 300
        if (!(sum_star_circle(x) == lattice_count_oracle(x))) {
            star_ok = false;
            bad_x = x.to_double();
            break;
        }
    }
    detail::check_true(out, "arith.sum_star_vs_lattice_count_200pts", star_ok, bad_x, 0.0);

    bool jump_ok = true;
    for (long long n : {1LL, 2LL, 4LL, 5LL, 25LL, 50LL}) {
        Rational before(n * 1000 - 1, 1000), at(n, 1), after(n * 1000 + 1, 1000);
        Rational half_jump(r2(n), 2);
        if (!(sum_star_circle(at) - sum_star_circle(before) == half_jump &&
              sum_star_circle(after) - sum_star_circle(at) == half_jump)) {
            jump_ok = false;
            break;
        }
    }
    detail::check_true(out, "arith.sum_star_half_half_jumps", jump_ok, 0.0, 0.0);

    double worst = 0.0;
    for (double x : {2.5, 7.25, 11.0, 30.5}) {
        for (double th : {0.125, 0.3, 0.45}) {
            double a = conjecture_lhs(x, th, ConjectureFlavor::sin);
            double b = conjecture_lhs(x, 1.0 - th, ConjectureFlavor::sin);
            worst = std::max(worst, std::abs(a + b));
        }
    }
    detail::check_close(out, "arith.conjecture_lhs_theta_antisymmetry", worst, 0.0,
                        1e-9 * tol_scale);
    return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> suite_specfun(double tol_scale = 1.0) {
    using namespace specfun;
    std::vector<CheckResult> out;

    // overlap band: both branches agree within combined est_error
    {
        double worst = 0.0, slack = HUGE_VAL;
        for (double z : {14.5, 15.5, 16.5, 17.5}) {
            SpecialValue s = specfun::detail::bessel_j_series(1, z, EvalConfig::bessel());
            SpecialValue a = specfun::detail::bessel_jy_asymptotic(1, z, false);
            worst = std::max(worst, std::abs(s.value - a.value));
            slack = std::min(slack, s.est_error + a.est_error);
        }
        detail::check_true(out, "specfun.j1_overlap_band", worst <= 4.0 * slack + 1e-12, worst,
                           slack);
    }
    {
        double worst_ratio = 0.0;
        for (double z : {7.0, 8.0, 9.0, 10.0}) {
            SpecialValue s = si(z, EvalConfig{1e-14, 1e-12, 1e9, 400});   // force series
            SpecialValue a = si(z, EvalConfig{1e-14, 1e-12, 0.5, 400});   // force asymptotic
            double combined = s.est_error + a.est_error;
            worst_ratio = std::max(worst_ratio, std::abs(s.value - a.value) / (combined + 1e-300));
        }
        detail::check_true(out, "specfun.si_overlap_band", worst_ratio <= 2.0, worst_ratio, 2.0);
    }
    {
        double worst_ratio = 0.0;
        for (double z : {7.0, 8.0, 9.0, 10.0}) {
            SpecialValue s = ci(z, EvalConfig{1e-14, 1e-12, 1e9, 400});
            SpecialValue a = ci(z, EvalConfig{1e-14, 1e-12, 0.5, 400});
            double combined = s.est_error + a.est_error;
            worst_ratio = std::max(worst_ratio, std::abs(s.value - a.value) / (combined + 1e-300));
        }
        detail::check_true(out, "specfun.ci_overlap_band", worst_ratio <= 2.0, worst_ratio, 2.0);
    }

    // Bessel recurrence J0(z) + J2(z) = (2/z) J1(z)
    {
        double worst = 0.0;
        for (double z : {0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 6.0, 8.0, 10.0, 12.0, 17.0, 20.0, 30.0,
                         50.0, 100.0}) {
            double j0 = specfun::detail::bessel_j(0, z).value;
            double j1v = specfun::detail::bessel_j(1, z).value;
            double j2 = specfun::detail::bessel_j(2, z).value;
            worst = std::max(worst, std::abs(j0 + j2 - 2.0 * j1v / z));
        }
        detail::check_close(out, "specfun.bessel_recurrence_grid", worst, 0.0, 1e-10 * tol_scale);
    }

    // bracket inequalities for zeta(s) - 1/(s-1), integer s in [2,100]; s = 1
    // is outside the function's domain and must raise.
    {
        bool ok = true;
        double worst_s = 0.0;
        for (long s = 2; s <= 100; ++s) {
            double zp = zeta_minus_pole(double(s));
            double lhs1 = -zp + 1.0;  // -zeta(s) + 1/(s-1) + 1
            if (!(1.0 / double(s + 1) <= lhs1 + 1e-15 && lhs1 <= 2.0 / double(s + 1) + 1e-15)) {
                ok = false;
                worst_s = double(s);
                break;
            }
            double lhs2 = zp - 1.0;
            double lo = -1.0 / double(s + 1) - 3.0 / (double(s + 1) * double(s + 2));
            double hi = -1.0 / double(s + 1) - 0.25 / (double(s + 1) * double(s + 2));
            if (!(lo - 1e-15 <= lhs2 && lhs2 <= hi + 1e-15)) {
                ok = false;
                worst_s = double(s);
                break;
            }
        }
        detail::check_true(out, "specfun.bracket_inequalities_s_2_to_100", ok, worst_s, 0.0);
        bool raised = false;
        try {
            zeta_minus_pole(1.0);
        } catch (const std::domain_error&) {
            raised = true;
        }
        detail::check_true(out, "specfun.zeta_minus_pole_domain_error_at_1", raised, 0.0, 0.0);
    }

    // Si asymptotic vs quadrature, x >= 50
    {
        double worst = 0.0;
        for (double x : {50.0, 65.0, 80.0}) {
            quad::QuadResult q = quad::integrate(
                [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, x, 1e-12);
            worst = std::max(worst, std::abs(si(x).value - q.value));
        }
        detail::check_close(out, "specfun.si_asymptotic_vs_quadrature_x_ge_50", worst, 0.0,
                            1e-10 * tol_scale);
    }

    // Kelvin dual path; tolerance is relative to the e^{u/sqrt2} scale since
    // the series peak pins the binary64 floor
    {
        double worst = 0.0;
        for (double u = 0.5; u <= 20.0; u += 0.75) {
            SpecialValue sv = specfun::detail::kelvin_ber_deriv_series(u, EvalConfig::kelvin());
            double combo = specfun::detail::kelvin_ber_deriv_order1(u, EvalConfig::kelvin());
            worst = std::max(worst, std::abs(sv.value - combo) / (1.0 + std::abs(sv.value)));
        }
        detail::check_close(out, "specfun.ber_deriv_dual_path_u_le_20", worst, 0.0,
                            1e-9 * tol_scale);
    }
    return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> suite_quad(double tol_scale = 1.0) {
    std::vector<CheckResult> out;

    quad::QuadResult poly = quad::integrate(
        [](double t) { return ((3.0 * t - 2.0) * t + 1.0) * t * t * t - t + 0.25; }, -1.0, 2.0,
        1e-12);
    // exact: int_{-1}^{2} (3t^5 - 2t^4 + t^3 - t + 1/4) dt
    double exact = 3.0 * (64.0 + 1.0) / 6.0 - 2.0 * (32.0 + 1.0) / 5.0 + (16.0 - 1.0) / 4.0 -
                   (4.0 - 1.0) / 2.0 + 0.25 * 3.0;
    detail::check_close(out, "quad.polynomial_exactness", poly.value, exact, 1e-13 * tol_scale);

    quad::QuadResult sin_cancel =
        quad::integrate([](double t) { return std::sin(t); }, 0.0, 2.0 * kPi, 1e-12);
    detail::check_close(out, "quad.full_period_cancellation", sin_cancel.value, 0.0,
                        1e-12 * tol_scale);

    // doubling the oscillatory horizon moves the value less than est_error
    {
        auto f = [](double u) { return std::cos(2.0 * u) / (2.0 * u * u); };
        quad::QuadResult a = quad::integrate_oscillatory(f, 1.0, 0.5 * kPi, 1e-11, 200);
        quad::QuadResult b = quad::integrate_oscillatory(f, 1.0, 0.5 * kPi, 1e-13, 400);
        detail::check_true(out, "quad.osc_horizon_doubling_within_est",
                           std::abs(a.value - b.value) <= a.est_error + b.est_error + 1e-13,
                           std::abs(a.value - b.value), a.est_error);
    }

    // dual-route lower integral
    for (double y : {1.0, 10.0}) {
        quad::DualQuadResult d = quad::sin2_lower_integral(y, 1e-10);
        detail::check_close(out, "quad.sin2_lower_dual_route_Y" + csv::format_double(y),
                            d.direct.value, d.closed.value, (y < 5.0 ? 1e-8 : 1e-7) * tol_scale);
    }

    // kelvin est_error scales with tol
    {
        bool ok = true;
        double worst = HUGE_VAL;
        for (double y : {0.5, 2.0, 5.0}) {
            quad::QuadResult coarse = quad::kelvin_integral(y, 1e-4);
            quad::QuadResult fine = quad::kelvin_integral(y, 1e-6);
            double ratio = coarse.est_error / (fine.est_error + 1e-300);
            worst = std::min(worst, ratio);
            if (ratio < 10.0) ok = false;
        }
        detail::check_true(out, "quad.kelvin_est_scales_with_tol", ok, worst, 10.0);
    }
    return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> suite_eulermac(double tol_scale = 1.0) {
    using namespace eulermac;
    std::vector<CheckResult> out;

    // dual-route c(sin^2, Y)
    for (double y : {0.5, 1.0, 2.0, 2.5, 4.0}) {
        SeriesValue closed = c_sin2_closed(y);
        SeriesValue lim = limit_diff(FunctionModel::sin2(y), 100000, 1);
        detail::check_close(out, "eulermac.c_sin2_dual_route_Y" + csv::format_double(y),
                            closed.value, lim.value,
                            (closed.est_error + lim.est_error) * tol_scale);
    }

    // lattice vs bernoulli
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        detail::check_close(out, "eulermac.f_sin2_identity_x" + csv::format_double(x),
                            f_sin2(x, FSin2Method::lattice).value,
                            f_sin2(x, FSin2Method::bernoulli).value, 1e-8 * tol_scale);
    }

    // Lemma-2 intervals contain the exact monomial constants
    {
        bool ok = true;
        for (int k : {2, 3, 4}) {
            double exact = specfun::zeta_minus_pole(double(k));
            for (double x : {1.0, 2.0, 3.0}) {
                auto [lo, hi] = lemma2_estimate(FunctionModel::monomial(k), x);
                double target = exact * std::pow(x, double(k));
                if (!(lo <= target && target <= hi)) ok = false;
            }
        }
        detail::check_true(out, "eulermac.lemma2_contains_monomial_constants", ok, 0.0, 0.0);
    }

    // tail asymptotics shrink at the documented order
    {
        double r10 = std::abs(zeta_tail(2.0, 10).value - (specfun::zeta(2.0) - [] {
                                  double h = 0.0;
                                  for (int k = 1; k <= 10; ++k) h += 1.0 / double(k * k);
                                  return h;
                              }()));
        double r20 = std::abs(zeta_tail(2.0, 20).value - (specfun::zeta(2.0) - [] {
                                  double h = 0.0;
                                  for (int k = 1; k <= 20; ++k) h += 1.0 / double(k * k);
                                  return h;
                              }()));
        // documented order x^{-s-3}: doubling x should shrink by ~2^-5
        double ratio = r20 / (r10 + 1e-300);
        detail::check_true(out, "eulermac.zeta_tail_order_scaling",
                           ratio < (1.0 / 32.0) * 4.0 + 1e-12, ratio, 1.0 / 8.0);

        double h10 = 0.0, h20 = 0.0;
        for (int k = 1; k <= 10; ++k) h10 += 1.0 / double(k);
        for (int k = 1; k <= 20; ++k) h20 += 1.0 / double(k);
        double e10 = std::abs(harmonic_asymptotic(10).value - h10);
        double e20 = std::abs(harmonic_asymptotic(20).value - h20);
        double hratio = e20 / (e10 + 1e-300);
        detail::check_true(out, "eulermac.harmonic_order_scaling",
                           hratio < (1.0 / 16.0) * 4.0, hratio, 1.0 / 4.0);
    }

    // fitted factorial-series coefficients reproduce zeta - pole off-grid
    {
        CfSeriesCoeffs coeffs = cf_coeffs(8);
        bool ok = true;
        double worst = 0.0;
        for (double s : {2.5, 3.5, 5.5, 7.5}) {
            double err = std::abs(coeffs.eval(s) - specfun::zeta_minus_pole(s));
            double omitted = std::abs(coeffs.c.back()) * CfSeriesCoeffs::basis(long(coeffs.c.size()), s);
            worst = std::max(worst, err / (omitted + 1e-300));
            if (err > omitted * 4.0 + 1e-12) ok = false;
        }
        detail::check_true(out, "eulermac.cf_fit_heldout_residual", ok, worst, 4.0);
    }

    // variant-43 tail expansion fails by exactly its spurious leading term
    {
        bool ok = true;
        for (long x : {10L, 20L, 40L}) {
            double direct = specfun::zeta(2.0);
            for (long k = 1; k <= x; ++k) direct -= 1.0 / double(k * k);
            SeriesValue good = zeta_tail(2.0, x);
            SeriesValue bad = zeta_tail_variant43(2.0, x);
            if (std::abs(good.value - direct) > 5.0 * good.est_error) ok = false;
            if (std::abs(bad.value - direct - 1.0 / double(x)) > 5.0 * good.est_error) ok = false;
        }
        detail::check_true(out, "eulermac.tail_variant43_spurious_term_demonstrated", ok, 0.0,
                           0.0);
    }

    // reference integrals by two schemes; E1 decay
    detail::check_close(out, "eulermac.reference_sin2_dual_quadrature", e_reference_sin2(),
                        e_reference_sin2_alt(), 1e-8 * tol_scale);
    detail::check_close(out, "eulermac.reference_xsin_dual_quadrature", e_reference_xsin(),
                        e_reference_xsin_alt(), 1e-8 * tol_scale);
    {
        double worst = 0.0;
        for (int j = 0; j < 16; ++j) {
            double x = 50.0 + double(j) * 0.625 + 1e-3;
            worst = std::max(worst, std::abs(e1(x)) * x);
        }
        detail::check_true(out, "eulermac.e1_O_inv_x_bound", worst <= 2.0, worst, 2.0);
        double m10 = 0.0, m20 = 0.0;
        for (int j = 0; j < 16; ++j) {
            m10 += std::abs(e1(10.0 + 0.25 * double(j) + 1e-3)) / 16.0;
            m20 += std::abs(e1(20.0 + 0.5 * double(j) + 1e-3)) / 16.0;
        }
        detail::check_true(out, "eulermac.e1_halving_trend", m20 <= 0.8 * m10, m20, m10);
    }

    // generalized expansion: exact for f(u)=u, higher-order decay for sin^2
    {
        double r = generalized_expansion_check(FunctionModel::monomial(1), 40.0);
        detail::check_close(out, "eulermac.generalized_expansion_linear", r, 0.0,
                            1e-8 * tol_scale);
        double r4 = generalized_expansion_check(FunctionModel::sin2(1.0), 4.0);
        double r8 = generalized_expansion_check(FunctionModel::sin2(1.0), 8.0);
        detail::check_true(out, "eulermac.generalized_expansion_sin2_ratio",
                           r8 <= 0.5 * r4 + 1e-12, r8, r4);
    }
    return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> suite_series(double tol_scale = 1.0) {
    using namespace series;
    std::vector<CheckResult> out;

    // three-route inner sums
    {
        bool ok = true;
        double worst = 0.0;
        for (long n = 0; n <= 5; ++n) {
            for (double x : {1.0, 2.0, 3.0, 4.0}) {
                for (double th : {0.25, 1.0 / 3.0}) {
                    ThetaParams p(th, x, n);
                    SeriesValue a = inner_j1(p, InnerRoute::closed_f);
                    SeriesValue c = inner_j1(p, InnerRoute::direct, 100000);
                    double tol_ac = (a.est_error + c.est_error) * tol_scale + 1e-12;
                    if (std::abs(a.value - c.value) > tol_ac) ok = false;
                    worst = std::max(worst, std::abs(a.value - c.value) / tol_ac);
                    if (p.y() <= 25.0) {
                        SeriesValue b = inner_j1(p, InnerRoute::kelvin);
                        double tol_ab = (a.est_error + b.est_error) * tol_scale + 1e-12;
                        if (std::abs(a.value - b.value) > tol_ab) ok = false;
                        worst = std::max(worst, std::abs(a.value - b.value) / tol_ab);
                    }
                }
            }
        }
        detail::check_true(out, "series.inner_j1_three_route_grid", ok, worst, 1.0);
    }

    // Kelvin identity f(Y) + sqrt2 * kelvin_integral(Y) = 0
    for (double y : {0.5, 1.0, 2.0, 5.0}) {
        double f = eulermac::f_sin2_lattice(y).value;
        double k = quad::kelvin_integral(y, 1e-9).value;
        detail::check_close(out, "series.kelvin_identity_Y" + csv::format_double(y),
                            f + std::sqrt(2.0) * k, 0.0, 1e-4 * tol_scale);
    }

    // p_series envelope contains the exact remainder
    for (double x : {0.5, 2.3, 5.5, 10.5}) {
        TruncationSpec spec;
        spec.outer_N = 4000;
        SeriesValue ps = p_series(x, spec);
        double exact = arith::p_exact(x).remainder;
        detail::check_true(out, "series.p_series_envelope_contains_x" + csv::format_double(x),
                           std::abs(ps.value - exact) <= ps.est_error + 0.02,
                           ps.value - exact, ps.est_error);
    }

    // quarter cosine closed vs Abel
    for (double x : {0.5, 1.0, 1.5, 3.0, 5.0}) {
        QuarterCosine qp = quarter_cosine(x, QuarterKind::plus);
        QuarterCosine qm = quarter_cosine(x, QuarterKind::minus);
        detail::check_close(out, "series.quarter_cosine_plus_x" + csv::format_double(x),
                            qp.closed, qp.abel, 1e-6 * tol_scale);
        detail::check_close(out, "series.quarter_cosine_minus_x" + csv::format_double(x),
                            qm.closed, qm.abel, 1e-6 * tol_scale);
    }

    // falsification scan: max |P(x)| on [1, 1e4] exceeds 5
    {
        arith::LatticeCounter counter(10001);
        double running_max = 0.0;
        for (long k = 2; k <= 20000; ++k) {
            Rational x(k * 1000000 + 2, 2000000);  // k/2 + 1e-6, integer-avoiding
            running_max = std::max(running_max, std::abs(counter.p_exact(x).remainder));
        }
        detail::check_true(out, "series.falsification_max_p_exceeds_5", running_max > 5.0,
                           running_max, 5.0, "running max of |P| on the shifted grid");
    }

    // cot telescope
    {
        CotTelescope t = cot_telescope(0.25, 4.0, 10000);
        detail::check_close(out, "series.cot_telescope_closed_quarter", t.closed, 0.25, 1e-15);
        detail::check_close(out, "series.cot_telescope_partial_sum", t.partial.value, t.closed,
                            1e-4 * tol_scale);
    }

    // end-to-end identity at exactly known LHS values
    {
        TruncationSpec spec;
        spec.outer_N = 4000;
        Conjecture1Result a = conjecture1_check(2.5, 0.25, spec);
        detail::check_true(out, "series.conjecture1_x2.5",
                           std::abs(a.rhs.value - a.lhs) <= a.rhs.est_error + 0.02 &&
                               std::abs(a.lhs - 2.0) < 1e-12,
                           a.rhs.value, a.lhs);
        Conjecture1Result b = conjecture1_check(1.5, 0.25, spec);
        detail::check_true(out, "series.conjecture1_x1.5",
                           std::abs(b.rhs.value - b.lhs) <= b.rhs.est_error + 0.02 &&
                               std::abs(b.lhs - 1.0) < 1e-12,
                           b.rhs.value, b.lhs);
    }

    // Voronoi envelopes and trend
    {
        double exact_c = arith::p_exact(5.5).star_sum.to_double();
        SeriesValue v400 = voronoi_circle(5.5, 400);
        SeriesValue v4000 = voronoi_circle(5.5, 4000);
        detail::check_true(out, "series.voronoi_circle_envelope_contains",
                           std::abs(v4000.value - exact_c) <= v4000.est_error + 0.05,
                           v4000.value, exact_c);
        detail::check_true(out, "series.voronoi_circle_envelope_shrinks",
                           v4000.est_error < v400.est_error, v4000.est_error, v400.est_error);
        double exact_d = arith::sum_star_divisor(Rational(5, 2)).to_double();
        SeriesValue w4000 = voronoi_divisor(2.5, 4000);
        detail::check_true(out, "series.voronoi_divisor_envelope_contains",
                           std::abs(w4000.value - exact_d) <= w4000.est_error + 0.05,
                           w4000.value, exact_d);
    }

    // theorem-5 rows: residuals below 1e-10 and bit-identical re-run
    {
        bool ok = true;
        double worst = 0.0;
        std::string sig1, sig2;
        for (int pass = 0; pass < 2; ++pass) {
            std::string& sig = pass == 0 ? sig1 : sig2;
            for (long n = 0; n <= 50; ++n) {
                XiLambdaRow row = lambda_solve(xi_solve(n, 3.0));
                if (row.status == RowStatus::ok) {
                    worst = std::max(worst, std::max(row.xi_residual, row.lambda_residual));
                    if (row.xi_residual > 1e-10 || row.lambda_residual > 1e-10) ok = false;
                }
                sig += csv::format_double(row.xi) + "," + csv::format_double(row.lambda) + ";";
            }
        }
        detail::check_true(out, "series.theorem5_residuals_below_1e-10", ok, worst, 1e-10);
        detail::check_true(out, "series.theorem5_rerun_bit_identical", sig1 == sig2, 0.0, 0.0);
    }

    // phi_p basics
    {
        PhiPResult k0 = phi_p_eval(5.5, 0);
        detail::check_close(out, "series.phi_p_K0_is_1", k0.series.value, 1.0, 1e-15);
        PhiPResult big = phi_p_eval(5.5, 10000);
        bool decay_ok = true;
        // terms vanish identically past k = x: bounded by any k^-3 envelope
        PhiPResult k6 = phi_p_eval(5.5, 6);
        if (std::abs(big.series.value - k6.series.value) > 1e-10) decay_ok = false;
        detail::check_true(out, "series.phi_p_terms_vanish_past_x", decay_ok, big.series.value,
                           k6.series.value);
    }

    // cosine transform smoke test
    {
        ThetaParams p(0.25, 1.0, 0);
        TransformCheck t = cosine_transform_check(p, 1.0, 256);
        detail::check_true(out, "series.cosine_transform_residual", t.residual <= 1e-2,
                           t.residual, 1e-2);
        TransformCheck t2 = cosine_transform_check(p, 1.0, 512);
        detail::check_true(out, "series.cosine_transform_envelope_halves",
                           t2.est_error <= 0.75 * t.est_error + 1e-12, t2.est_error,
                           t.est_error);
    }
    return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> run_suite(const std::string& name, double tol_scale = 1.0) {
    std::vector<CheckResult> out;
    auto append = [&out](std::vector<CheckResult> v) {
        out.insert(out.end(), v.begin(), v.end());
    };
    if (name == "arith") append(suite_arith(tol_scale));
    else if (name == "specfun") append(suite_specfun(tol_scale));
    else if (name == "quad") append(suite_quad(tol_scale));
    else if (name == "eulermac") append(suite_eulermac(tol_scale));
    else if (name == "series") append(suite_series(tol_scale));
    else if (name == "all") {
        append(suite_arith(tol_scale));
        append(suite_specfun(tol_scale));
        append(suite_quad(tol_scale));
        append(suite_eulermac(tol_scale));
        append(suite_series(tol_scale));
    } else {
        throw std::invalid_argument("verify: unknown suite '" + name + "'");
    }
    return out;
}

}  // namespace circlelab::verify
