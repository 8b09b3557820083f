#pragma once

// Special-function kernel: J1, Y1, K1, the Ramanujan combination
// I1 = -Y1 - (2/pi) K1, the sine/cosine integrals, the Kelvin ber derivative,
// exact Bernoulli numbers, and zeta(s) - 1/(s-1).
//
// Every function follows the same scheme: a power series below a per-family
// switch threshold, the standard divergent asymptotic expansion above it,
// truncated at the smallest term.  est_error carries the first omitted term
// plus the rounding floor of the largest intermediate term, so callers can
// trust it on both branches.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "circlelab/common.hpp"

namespace circlelab::specfun {

struct EvalConfig {
    double target_abs_tol = 1e-14;
    double target_rel_tol = 1e-12;
    double series_asymptotic_switch = 16.0;
    long max_terms = 400;

    static EvalConfig bessel() { return EvalConfig{1e-14, 1e-12, 16.0, 400}; }
    static EvalConfig sici() { return EvalConfig{1e-14, 1e-12, 8.0, 400}; }
    static EvalConfig kelvin() { return EvalConfig{1e-14, 1e-12, 18.0, 400}; }
};

enum class Method { power_series, asymptotic, quadrature, recurrence };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::power_series: return "power_series";
        case Method::asymptotic: return "asymptotic";
        case Method::quadrature: return "quadrature";
        case Method::recurrence: return "recurrence";
    }
    return "?";
}

struct SpecialValue {
    double value = 0.0;
    double est_error = 0.0;
    Method method = Method::power_series;
};

namespace detail {

inline constexpr double kEps = 2.220446049250313e-16;

// ---------------------------------------------------------------------------
// Bessel J_n, Y_n power series (integer order via the nu -> n limit forms)
// ---------------------------------------------------------------------------

inline SpecialValue bessel_j_series(int nu, double z, const EvalConfig& cfg) {
    double half = 0.5 * z;
    double term = 1.0;
    for (int j = 1; j <= nu; ++j) term *= half / double(j);  // (z/2)^nu / nu!
    Accumulator acc;
    double max_term = std::abs(term);
    double q = half * half;
    long k = 0;
    for (; k < cfg.max_terms; ++k) {
        acc.add(term);
        double next = -term * q / (double(k + 1) * double(k + 1 + nu));
        if (std::abs(next) < cfg.target_abs_tol && std::abs(next) < std::abs(term)) {
            term = next;
            break;
        }
        term = next;
        max_term = std::max(max_term, std::abs(term));
    }
    if (k >= cfg.max_terms)
        throw ToleranceError("bessel_j_series: series did not converge", acc.total(),
                             std::abs(term));
    return {acc.total(), std::abs(term) + max_term * kEps, Method::power_series};
}

// Hankel asymptotic expansion; coefficient recurrence
// a_k = a_{k-1} (4 nu^2 - (2k-1)^2) / (8k), truncated at the smallest term.
inline SpecialValue bessel_jy_asymptotic(int nu, double z, bool want_y) {
    double mu = 4.0 * double(nu) * double(nu);
    double p = 1.0, q = 0.0;
    double a = 1.0;
    double omitted = 0.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 60; ++k) {
        double tw = 2.0 * k - 1.0;
        a *= (mu - tw * tw) / (8.0 * double(k) * z);
        double mag = std::abs(a);
        if (mag >= prev) { omitted = mag; break; }
        prev = mag;
        int half = k / 2;
        double s = (half % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 1)
            q += s * a;  // a_{2j+1} carries sign (-1)^j
        else
            p += s * a;  // a_{2j} carries sign (-1)^j
        omitted = mag;
    }
    double omega = z - (0.5 * nu + 0.25) * kPi;
    double pref = std::sqrt(2.0 / (kPi * z));
    double value = want_y ? pref * (std::sin(omega) * p + std::cos(omega) * q)
                          : pref * (std::cos(omega) * p - std::sin(omega) * q);
    return {value, pref * omitted + std::abs(value) * 4.0 * kEps, Method::asymptotic};
}

inline SpecialValue bessel_j(int nu, double z, const EvalConfig& cfg = EvalConfig::bessel()) {
    if (z < 0.0) throw std::domain_error("bessel_j: requires z >= 0");
    if (z == 0.0) return {nu == 0 ? 1.0 : 0.0, 0.0, Method::power_series};
    if (z <= cfg.series_asymptotic_switch) return bessel_j_series(nu, z, cfg);
    return bessel_jy_asymptotic(nu, z, false);
}

// I_1 (standard modified Bessel), used inside the K_1 log series.
inline double bessel_i1_series(double z) {
    double half = 0.5 * z;
    double term = half;
    Accumulator acc;
    double q = half * half;
    for (long k = 0; k < 200; ++k) {
        acc.add(term);
        term *= q / (double(k + 1) * double(k + 2));
        if (term < 1e-18 * std::abs(acc.total())) break;
    }
    return acc.total();
}

// Y1 and K1 log-series (the nu -> 1 limits); psi values tracked as harmonic
// numbers, psi(k+1) = -gamma + H_k.
inline std::pair<SpecialValue, SpecialValue> y1_k1_series(double z, const EvalConfig& cfg) {
    double half = 0.5 * z;
    double lg = std::log(half);
    double q = half * half;

    // common series sum_k c_k (z^2/4)^k [psi(k+1)+psi(k+2)] / (k!(k+1)!)
    // with c_k = (-1)^k for Y1 and +1 for K1.
    Accumulator acc_y, acc_k;
    double base = 1.0;           // (z^2/4)^k / (k!(k+1)!)
    double hk = 0.0, hk1 = 1.0;  // H_k, H_{k+1}
    double max_y = 0.0;
    long k = 0;
    for (; k < cfg.max_terms; ++k) {
        double psi_sum = -2.0 * kEulerGamma + hk + hk1;
        double t = base * psi_sum;
        acc_y.add((k % 2 == 0) ? t : -t);
        acc_k.add(t);
        max_y = std::max(max_y, std::abs(t));
        base *= q / (double(k + 1) * double(k + 2));
        hk = hk1;
        hk1 += 1.0 / double(k + 2);
        if (base * (std::abs(psi_sum) + 2.0) < cfg.target_abs_tol && k > 2) break;
    }
    if (k >= cfg.max_terms)
        throw ToleranceError("y1_k1_series: series did not converge", acc_y.total(), base);

    double j1 = bessel_j_series(1, z, cfg).value;
    double i1 = bessel_i1_series(z);
    double y = (2.0 / kPi) * lg * j1 - 2.0 / (kPi * z) - (z / (2.0 * kPi)) * acc_y.total();
    double kk = 1.0 / z + lg * i1 - (z / 4.0) * acc_k.total();
    double err_y = max_y * kEps * z + std::abs(y) * 8.0 * kEps;
    double err_k = max_y * kEps * z + std::abs(kk) * 8.0 * kEps;
    return {{y, err_y, Method::power_series}, {kk, err_k, Method::power_series}};
}

inline SpecialValue k1_asymptotic(double z) {
    // K_1(z) ~ sqrt(pi/2z) e^{-z} sum_k a_k / z^k
    double mu = 4.0;
    double a = 1.0;
    Accumulator acc;
    acc.add(1.0);
    double prev = std::numeric_limits<double>::max();
    double omitted = 0.0;
    for (int k = 1; k <= 60; ++k) {
        double tw = 2.0 * k - 1.0;
        a *= (mu - tw * tw) / (8.0 * double(k) * z);
        double mag = std::abs(a);
        if (mag >= prev) { omitted = mag; break; }
        prev = mag;
        acc.add(a);
        omitted = mag;
    }
    double pref = std::sqrt(kPi / (2.0 * z)) * std::exp(-z);
    return {pref * acc.total(), pref * omitted + pref * std::abs(acc.total()) * 4.0 * kEps,
            Method::asymptotic};
}

// ---------------------------------------------------------------------------
// Kelvin functions through J_nu at arg z e^{3 pi i / 4}
// ---------------------------------------------------------------------------

inline std::complex<double> kelvin_rotate(double u) {
    // u * e^{3 pi i/4}
    static const double c = -std::sqrt(0.5), s = std::sqrt(0.5);
    return {u * c, u * s};
}

inline std::complex<double> bessel_j1_complex_series(std::complex<double> z, long max_terms) {
    std::complex<double> half = 0.5 * z;
    std::complex<double> term = half;
    std::complex<double> sum = 0.0;
    std::complex<double> q = half * half;
    for (long k = 0; k < max_terms; ++k) {
        sum += term;
        term *= -q / (double(k + 1) * double(k + 2));
        if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

inline std::complex<double> bessel_j1_complex_hankel(std::complex<double> z) {
    double mu = 4.0;
    std::complex<double> p = 1.0, q = 0.0;
    std::complex<double> a = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 60; ++k) {
        double tw = 2.0 * k - 1.0;
        a *= (mu - tw * tw) / (8.0 * double(k));
        a /= z;
        double mag = std::abs(a);
        if (mag >= prev) break;
        prev = mag;
        int half = k / 2;
        double s = (half % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 1)
            q += s * a;
        else
            p += s * a;
    }
    std::complex<double> omega = z - std::complex<double>(0.75 * kPi, 0.0);
    std::complex<double> pref = std::sqrt(2.0 / (kPi * z));
    return pref * (std::cos(omega) * p - std::sin(omega) * q);
}

// (ber_1(u) + i bei_1(u)) = J_1(u e^{3 pi i/4}); ber'(u) = (ber_1 + bei_1)/sqrt(2).
inline double kelvin_ber_deriv_order1(double u, const EvalConfig& cfg) {
    if (u == 0.0) return 0.0;
    std::complex<double> z = kelvin_rotate(u);
    std::complex<double> j1 = (u <= cfg.series_asymptotic_switch)
                                  ? bessel_j1_complex_series(z, cfg.max_terms)
                                  : bessel_j1_complex_hankel(z);
    return (j1.real() + j1.imag()) / std::sqrt(2.0);
}

// Term-by-term derivative of the ber power series:
// ber'(u) = sum_{k>=1} (-1)^k 2k (u/2)^{4k-1} / ((2k)!)^2.
inline SpecialValue kelvin_ber_deriv_series(double u, const EvalConfig& cfg) {
    if (u == 0.0) return {0.0, 0.0, Method::power_series};
    double half = 0.5 * u;
    double pw = half * half * half;  // (u/2)^{4k-1} at k=1
    double fact = 4.0;               // ((2k)!)^2 at k=1
    Accumulator acc;
    double max_term = 0.0;
    for (long k = 1; k < cfg.max_terms; ++k) {
        double t = 2.0 * double(k) * pw / fact;
        acc.add((k % 2 == 1) ? -t : t);
        max_term = std::max(max_term, t);
        pw *= half * half * half * half;
        fact *= double(2 * k + 1) * double(2 * k + 1) * double(2 * k + 2) * double(2 * k + 2);
        if (t < 1e-18 * (1.0 + std::abs(acc.total())) && k > 2) break;
    }
    return {acc.total(), max_term * kEps * 4.0, Method::power_series};
}

// ---------------------------------------------------------------------------
// zeta via Euler-Maclaurin
// ---------------------------------------------------------------------------

// zeta(s) - 1/(s-1) for s > 1, stable down to s -> 1+ (limit gamma).
inline double zeta_minus_pole_impl(double s) {
    if (!(s > 1.0)) throw std::domain_error("zeta_minus_pole: requires s > 1");
    constexpr int N = 24;
    Accumulator acc;
    for (int k = 1; k <= N; ++k) acc.add(std::pow(double(k), -s));
    // (N^{1-s} - 1)/(s-1) folds the pole subtraction into the tail integral.
    double lnn = std::log(double(N));
    double pole_tail = -lnn * std::expm1((1.0 - s) * lnn) / ((1.0 - s) * lnn);
    double ns = std::pow(double(N), -s);
    acc.add(pole_tail);
    acc.add(-0.5 * ns);
    // Euler-Maclaurin derivative corrections for k^{-s}.
    double c1 = s / (12.0 * N);                                        // B2 term
    double c2 = c1 * (s + 1.0) * (s + 2.0) / (60.0 * double(N) * N);   // B4 term
    double c3 = c2 * (s + 3.0) * (s + 4.0) / (42.0 * double(N) * N);   // B6 term
    double c4 = c3 * (s + 5.0) * (s + 6.0) / (40.0 * double(N) * N);   // B8 term
    acc.add(ns * (c1 - c2 + c3 - c4));
    return acc.total();
}

inline double zeta_impl(double s) { return zeta_minus_pole_impl(s) + 1.0 / (s - 1.0); }

// zeta(2n) with the large-argument shortcut.
inline double zeta_even(long n) {
    double s = 2.0 * double(n);
    if (s >= 54.0) return 1.0 + std::pow(2.0, -s) + std::pow(3.0, -s);
    return zeta_impl(s);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

inline SpecialValue j1(double z, const EvalConfig& cfg = EvalConfig::bessel()) {
    return detail::bessel_j(1, z, cfg);
}

inline std::pair<SpecialValue, SpecialValue> y1_k1(double z,
                                                   const EvalConfig& cfg = EvalConfig::bessel()) {
    if (z <= 0.0) throw std::domain_error("y1_k1: logarithmic singularity at z <= 0");
    if (z <= cfg.series_asymptotic_switch) return detail::y1_k1_series(z, cfg);
    SpecialValue y = detail::bessel_jy_asymptotic(1, z, true);
    SpecialValue k = detail::k1_asymptotic(z);
    return {y, k};
}

// Ramanujan's I_1(z) = -Y_1(z) - (2/pi) K_1(z).  Not the modified Bessel I.
inline SpecialValue ramanujan_i1(double z, const EvalConfig& cfg = EvalConfig::bessel()) {
    auto [y, k] = y1_k1(z, cfg);
    SpecialValue out;
    out.value = -y.value - (2.0 / kPi) * k.value;
    out.est_error = y.est_error + (2.0 / kPi) * k.est_error;
    out.method = y.method;
    return out;
}

inline SpecialValue si(double x, const EvalConfig& cfg = EvalConfig::sici());
inline SpecialValue ci(double x, const EvalConfig& cfg = EvalConfig::sici());

namespace detail {

// Auxiliary asymptotic pair: Si = pi/2 - f cos - g sin, Ci = f sin - g cos.
inline void sici_fg_asymptotic(double x, double& f, double& g, double& err) {
    double x2 = x * x;
    // f-series: (1/x) sum (-1)^n (2n)!/x^{2n}; g-series: (1/x^2) sum (-1)^n (2n+1)!/x^{2n}
    double tf = 1.0, tg = 1.0;
    Accumulator af, ag;
    double prev_f = std::numeric_limits<double>::max();
    double omitted = 0.0;
    for (int n = 0; n <= 40; ++n) {
        double mag = std::max(std::abs(tf), std::abs(tg));
        if (mag >= prev_f) { omitted = mag; break; }
        prev_f = mag;
        af.add((n % 2 == 0) ? tf : -tf);
        ag.add((n % 2 == 0) ? tg : -tg);
        // (2n)! -> (2n+2)!: *(2n+1)(2n+2);  (2n+1)! -> (2n+3)!: *(2n+2)(2n+3)
        tf *= double(2 * n + 1) * double(2 * n + 2) / x2;
        tg *= double(2 * n + 2) * double(2 * n + 3) / x2;
        omitted = std::max(std::abs(tf), std::abs(tg));
    }
    f = af.total() / x;
    g = ag.total() / x2;
    err = omitted / x;
}

}  // namespace detail

inline SpecialValue si(double x, const EvalConfig& cfg) {
    if (x < 0.0) {
        SpecialValue v = si(-x, cfg);
        v.value = -v.value;
        return v;
    }
    if (x == 0.0) return {0.0, 0.0, Method::power_series};
    if (x <= cfg.series_asymptotic_switch) {
        double x2 = x * x;
        double term = x;  // x^{2n+1}/(2n+1)!
        Accumulator acc;
        double max_term = 0.0;
        long n = 0;
        for (; n < cfg.max_terms; ++n) {
            double t = term / double(2 * n + 1);
            acc.add((n % 2 == 0) ? t : -t);
            max_term = std::max(max_term, std::abs(t));
            term *= x2 / (double(2 * n + 2) * double(2 * n + 3));
            if (term < cfg.target_abs_tol && n > 1) break;
        }
        return {acc.total(), max_term * detail::kEps * 2.0 + term, Method::power_series};
    }
    double f, g, err;
    detail::sici_fg_asymptotic(x, f, g, err);
    double v = 0.5 * kPi - f * std::cos(x) - g * std::sin(x);
    return {v, err, Method::asymptotic};
}

inline SpecialValue ci(double x, const EvalConfig& cfg) {
    if (x <= 0.0) throw std::domain_error("ci: requires x > 0");
    if (x <= cfg.series_asymptotic_switch) {
        double x2 = x * x;
        double term = x2 / 2.0;  // x^{2n}/(2n)! at n=1
        Accumulator acc;
        acc.add(kEulerGamma + std::log(x));
        double max_term = 0.0;
        long n = 1;
        for (; n < cfg.max_terms; ++n) {
            double t = term / double(2 * n);
            acc.add((n % 2 == 1) ? -t : t);
            max_term = std::max(max_term, std::abs(t));
            term *= x2 / (double(2 * n + 1) * double(2 * n + 2));
            if (term < cfg.target_abs_tol && n > 1) break;
        }
        return {acc.total(), max_term * detail::kEps * 2.0 + term, Method::power_series};
    }
    double f, g, err;
    detail::sici_fg_asymptotic(x, f, g, err);
    double v = f * std::sin(x) - g * std::cos(x);
    return {v, err, Method::asymptotic};
}

// d/du ber(u), computed from the differentiated ber series and cross-checked
// against the order-1 Kelvin combination (ber_1 + bei_1)/sqrt(2) where the
// series is still trustworthy.
inline SpecialValue ber_deriv(double u, const EvalConfig& cfg = EvalConfig::kelvin()) {
    if (u < 0.0) throw std::domain_error("ber_deriv: requires u >= 0");
    if (u > 700.0)
        throw ToleranceError("ber_deriv: argument beyond asymptotic range", 0.0, HUGE_VAL);
    double order1 = detail::kelvin_ber_deriv_order1(u, cfg);
    if (u <= 40.0) {
        SpecialValue series = detail::kelvin_ber_deriv_series(u, cfg);
        // agreement is relative to the function scale; the series peak term
        // puts an absolute floor of ~|peak| * eps on both paths
        double tol = std::max(1e-9, 1e-10 * std::abs(series.value)) + 4.0 * series.est_error;
        if (std::abs(series.value - order1) > tol)
            throw ToleranceError("ber_deriv: series/order-1 paths disagree", series.value,
                                 std::abs(series.value - order1));
        if (u <= cfg.series_asymptotic_switch) {
            series.est_error = std::max(series.est_error, std::abs(series.value - order1));
            return series;
        }
    }
    double est = std::abs(order1) * 1e-12 + 1e-13;
    return {order1, est, u <= cfg.series_asymptotic_switch ? Method::power_series
                                                           : Method::asymptotic};
}

// Single-path ber' for integrand use (no cross-check overhead).
inline double ber_deriv_fast(double u, const EvalConfig& cfg = EvalConfig::kelvin()) {
    if (u <= cfg.series_asymptotic_switch) return detail::kelvin_ber_deriv_series(u, cfg).value;
    return detail::kelvin_ber_deriv_order1(u, cfg);
}

inline double zeta_minus_pole(double s) { return detail::zeta_minus_pole_impl(s); }
inline double zeta(double s) { return detail::zeta_impl(s); }

// ---------------------------------------------------------------------------
// Bernoulli numbers, exact
// ---------------------------------------------------------------------------

inline constexpr long kBernoulliMaxN = 64;  // B_{2n} available for n <= this

namespace detail {

inline const std::vector<mpq_class>& bernoulli_table() {
    static const std::vector<mpq_class> table = [] {
        const long m_max = 2 * kBernoulliMaxN;
        std::vector<mpq_class> b(m_max + 1);
        std::vector<std::vector<mpz_class>> binom(m_max + 2);
        for (long i = 0; i <= m_max + 1; ++i) {
            binom[i].resize(i + 1);
            binom[i][0] = 1;
            binom[i][i] = 1;
            for (long j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
        }
        b[0] = 1;
        for (long m = 1; m <= m_max; ++m) {
            mpq_class s = 0;
            for (long k = 0; k < m; ++k) {
                mpq_class t(binom[m + 1][k]);
                s += t * b[k];
            }
            b[m] = -s / mpq_class(binom[m + 1][m]);
            b[m].canonicalize();
        }
        return b;
    }();
    return table;
}

inline double log_mpz(const mpz_class& v) {
    signed long exp2 = 0;
    double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(std::abs(d)) + double(exp2) * std::numbers::ln2;
}

}  // namespace detail

// Exact B_{2n} and zeta(2n) = (-1)^{n-1} (2 pi)^{2n} B_{2n} / (2 (2n)!).
inline std::pair<mpq_class, double> bernoulli_zeta_even(long n) {
    if (n < 1 || n > kBernoulliMaxN)
        throw std::domain_error("bernoulli_zeta_even: n out of configured range");
    const mpq_class& b = detail::bernoulli_table()[2 * n];
    // Evaluate the zeta formula in log space; the raw factors overflow binary64
    // long before the quotient does.
    double log_zeta = 2.0 * double(n) * std::log(2.0 * kPi) + detail::log_mpz(b.get_num()) -
                      detail::log_mpz(b.get_den()) - std::numbers::ln2 -
                      std::lgamma(2.0 * double(n) + 1.0);
    return {b, std::exp(log_zeta)};
}

inline double zeta_2n(long n) { return detail::zeta_even(n); }

}  // namespace circlelab::specfun
