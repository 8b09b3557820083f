#pragma once

// Quadrature engine: adaptive Gauss-Kronrod integration, oscillatory improper
// integrals with half-period pairing, the Kelvin-kernel integral, and numeric
// iterated integrals.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "circlelab/common.hpp"
#include "circlelab/specfun.hpp"

namespace circlelab::quad {

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;
    long evaluations = 0;
};

namespace detail {

// G7-K15 nodes and weights (abscissae symmetric about the midpoint).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(F&& f, double a, double b, double& k15, double& err, double& absval, long& evals) {
    double mid = 0.5 * (a + b);
    double hl = 0.5 * (b - a);
    double fc = f(mid);
    if (!std::isfinite(fc)) throw std::runtime_error("quad: non-finite integrand value");
    double g7 = kWg[3] * fc;
    k15 = kWgk[7] * fc;
    absval = kWgk[7] * std::abs(fc);
    ++evals;
    for (int i = 0; i < 7; ++i) {
        double dx = hl * kXgk[i];
        double f1 = f(mid - dx);
        double f2 = f(mid + dx);
        evals += 2;
        if (!std::isfinite(f1) || !std::isfinite(f2))
            throw std::runtime_error("quad: non-finite integrand value");
        double fs = f1 + f2;
        k15 += kWgk[i] * fs;
        absval += kWgk[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) g7 += kWg[i / 2] * fs;
    }
    k15 *= hl;
    g7 *= hl;
    absval *= hl;
    err = std::abs(k15 - g7);
}

}  // namespace detail

// Globally adaptive bisection: the panel with the worst embedded-rule error
// estimate is split first, until the summed estimate meets tol.  Splitting
// order is deterministic (error, then position).
template <class F>
QuadResult integrate(F&& f, double a, double b, double tol = 1e-10, long max_evals = 400000) {
    if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
    struct Seg {
        double a, b, value, err, absval;
    };
    auto worse = [](const Seg& x, const Seg& y) {
        if (x.err != y.err) return x.err < y.err;  // max-heap on error
        return x.a > y.a;
    };
    long evals = 0;
    std::vector<Seg> heap;
    auto push_seg = [&](double lo, double hi) {
        Seg s{lo, hi, 0.0, 0.0, 0.0};
        detail::gk15(f, lo, hi, s.value, s.err, s.absval, evals);
        heap.push_back(s);
        std::push_heap(heap.begin(), heap.end(), worse);
        return s.err;
    };
    double err_total = push_seg(a, b);
    long splits = 0;
    while (err_total > tol) {
        const Seg worst = heap.front();
        // stop on the rounding floor of the G-K difference; splitting further
        // cannot improve a panel whose estimate is dominated by cancellation
        if (worst.err <= 100.0 * 2.2e-16 * worst.absval ||
            worst.err <= 1e-17 * std::max(1.0, std::abs(worst.value)) ||
            worst.b - worst.a < 1e-15 * (b - a) + 1e-300)
            break;
        if (evals > max_evals) throw BudgetExceeded("integrate: evaluation budget exceeded");
        std::pop_heap(heap.begin(), heap.end(), worse);
        heap.pop_back();
        double mid = 0.5 * (worst.a + worst.b);
        err_total += push_seg(worst.a, mid) + push_seg(mid, worst.b) - worst.err;
        if (++splits % 64 == 0) {  // renormalize the running sum against drift
            err_total = 0.0;
            for (const Seg& s : heap) err_total += s.err;
        }
    }
    // deterministic final combination: sum in ascending interval order
    std::sort(heap.begin(), heap.end(), [](const Seg& x, const Seg& y) { return x.a < y.a; });
    Accumulator value, errsum;
    for (const Seg& s : heap) {
        value.add(s.value);
        errsum.add(s.err);
    }
    return {value.total(), errsum.total(), evals};
}

// Improper oscillatory integral from `a`: panel integrals over consecutive
// half-periods, accelerated by iterated pairwise averaging of the partial
// sums (Euler transformation).  est_error is the last averaging increment,
// which also bounds the change from doubling the truncation horizon.
template <class F>
QuadResult integrate_oscillatory(F&& f, double a, double half_period, double tol = 1e-10,
                                 long max_half_periods = 4000) {
    if (!(half_period > 0.0)) throw std::invalid_argument("integrate_oscillatory: bad half period");
    long evals = 0;
    Accumulator raw;
    std::vector<double> avg;  // averaging triangle, newest diagonal
    double result = 0.0, prev_result = 0.0, est = HUGE_VAL;
    long j = 0;
    for (; j < max_half_periods; ++j) {
        double pa = a + double(j) * half_period;
        double pb = pa + half_period;
        QuadResult panel = integrate(f, pa, pb, tol * 0.05, 40000);
        evals += panel.evaluations;
        raw.add(panel.value);

        double carry = raw.total();
        std::size_t depth = std::min<std::size_t>(avg.size(), 14);
        for (std::size_t k = 0; k < depth; ++k) {
            double next = 0.5 * (carry + avg[k]);
            avg[k] = carry;
            carry = next;
        }
        if (avg.size() < 14)
            avg.push_back(carry);
        else
            avg[depth - 1] = carry;
        prev_result = result;
        result = carry;
        if (j >= 8) {
            est = std::abs(result - prev_result);
            if (est < tol) { ++j; break; }
        }
    }
    if (j >= max_half_periods && est > tol)
        throw BudgetExceeded("integrate_oscillatory: pairing did not converge");
    return {result, est + tol * 0.05, evals};
}

// int_0^1 sin^2(Y/t) dt by two independent routes.
//  direct: u = 1/t maps it onto Y * int_Y^inf sin^2(u)/u^2 du; the smooth
//          1/(2u^2) part integrates analytically and the cos(2u) part goes
//          through half-period pairing.
//  closed: Y (pi/2 - Si(2Y)) + sin^2(Y).
struct DualQuadResult {
    QuadResult direct;
    QuadResult closed;
};

inline DualQuadResult sin2_lower_integral(double y, double tol = 1e-10) {
    if (!(y > 0.0)) throw std::domain_error("sin2_lower_integral: requires Y > 0");
    DualQuadResult out;

    QuadResult osc = integrate_oscillatory(
        [](double u) { return std::cos(2.0 * u) / (2.0 * u * u); }, y, 0.5 * kPi, tol);
    out.direct.value = y * (0.5 / y - osc.value);
    out.direct.est_error = y * osc.est_error;
    out.direct.evaluations = osc.evaluations;

    specfun::SpecialValue s = specfun::si(2.0 * y);
    out.closed.value = y * (0.5 * kPi - s.value) + std::sin(y) * std::sin(y);
    out.closed.est_error = y * s.est_error + std::abs(out.closed.value) * 4e-16;
    out.closed.evaluations = 0;

    double combined = out.direct.est_error + out.closed.est_error + 1e-8;
    if (std::abs(out.direct.value - out.closed.value) > combined)
        throw std::runtime_error("sin2_lower_integral: route disagreement beyond estimates");
    return out;
}

// int_0^inf ber'(2 sqrt2 t) / (e^{t^2/Y} - 1) dt.  The integrand grows like
// e^{2t} against e^{t^2/Y}, peaking near t = Y at magnitude ~e^Y; the Y <= 25
// cap keeps that peak inside the binary64 cancellation budget.  Split at 2Y,
// cut off where the exponential dominance bound pushes the tail below tol.
inline QuadResult kelvin_integral(double y, double tol = 1e-9) {
    if (!(y > 0.0)) throw std::domain_error("kelvin_integral: requires Y > 0");
    if (y > 25.0) throw std::domain_error("kelvin_integral: Y > 25 rejected (dynamic range)");
    const specfun::EvalConfig cfg = specfun::EvalConfig::kelvin();
    auto integrand = [&cfg, y](double t) {
        if (t <= 0.0) return 0.0;
        double num = specfun::ber_deriv_fast(2.0 * std::sqrt(2.0) * t, cfg);
        return num / std::expm1(t * t / y);
    };
    double tail_log = std::log(std::max(tol, 1e-18) * 0.01);
    double t_cut = y * (1.0 + std::sqrt(1.0 - tail_log / y));
    t_cut = std::max({t_cut, 2.0 * y + 4.0, 8.0});

    QuadResult head = integrate(integrand, 0.0, std::min(2.0 * y + 4.0, t_cut), tol * 0.5);
    QuadResult tail{0.0, 0.0, 0};
    if (t_cut > 2.0 * y + 4.0) tail = integrate(integrand, 2.0 * y + 4.0, t_cut, tol * 0.5);

    double peak = std::exp(std::min(y, 700.0)) / std::sqrt(2.0 * kPi * std::max(2.0 * y, 1.0));
    double floor = peak * 2.2e-16 * 8.0;  // rounding floor of the cancelling peak
    QuadResult out;
    out.value = head.value + tail.value;
    out.est_error = head.est_error + tail.est_error + floor + std::exp(tail_log);
    out.evaluations = head.evaluations + tail.evaluations;
    return out;
}

// x^{-n} times the n-fold iterated integral of f from 0, by cumulative
// composite Simpson with grid-doubling Richardson control.
template <class F>
QuadResult iterated_integral(F&& f, int n, double x, double tol = 1e-9) {
    if (n < 1 || n > 4) throw std::invalid_argument("iterated_integral: requires 1 <= n <= 4");
    if (!(x > 0.0)) throw std::domain_error("iterated_integral: requires x > 0");
    long evals = 0;
    double prev = HUGE_VAL;
    double value = 0.0;
    double est = HUGE_VAL;
    for (long grid = 512; grid <= 65536; grid *= 2) {
        double h = x / double(grid);
        std::vector<double> v(grid + 1);
        for (long i = 0; i <= grid; ++i) v[i] = f(double(i) * h);
        evals += grid + 1;
        std::vector<double> c(grid + 1);
        for (int level = 0; level < n; ++level) {
            c[0] = 0.0;
            for (long j = 0; j + 2 <= grid; j += 2) {
                c[j + 1] = c[j] + h * (5.0 * v[j] + 8.0 * v[j + 1] - v[j + 2]) / 12.0;
                c[j + 2] = c[j] + h * (v[j] + 4.0 * v[j + 1] + v[j + 2]) / 3.0;
            }
            v = c;
        }
        value = v[grid];
        est = std::abs(value - prev);
        if (est < tol * std::max(1.0, std::abs(value))) break;
        prev = value;
    }
    double scale = std::pow(x, -double(n));
    if (!(est < tol * std::max(1.0, std::abs(value)) * 16.0))
        throw ToleranceError("iterated_integral: accumulated error above tol", value * scale,
                             est * scale);
    return {value * scale, est * scale + std::abs(value * scale) * 1e-14, evals};
}

}  // namespace circlelab::quad
