#pragma once

// Exact integer-arithmetic ground truth: r2(n), d(n), the star-convention
// summatory functions, and the exact lattice remainders they define.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circlelab/common.hpp"

namespace circlelab::arith {

enum class SummatoryKind { circle, divisor };

// x, the exact star sum at x, the main term, and their difference.
struct RemainderRecord {
    double x = 0.0;
    Rational star_sum;
    double main_term = 0.0;
    double remainder = 0.0;
};

// F(x): the floor function modified to x - 1/2 at integers.
inline double floor_f(double x) {
    if (x <= 0.0) throw std::domain_error("floor_f: requires x > 0");
    double fl = std::floor(x);
    return (x == fl) ? x - 0.5 : fl;
}

inline double floor_f(const Rational& x) {
    if (x.num <= 0) throw std::domain_error("floor_f: requires x > 0");
    return x.is_integer() ? x.to_double() - 0.5 : double(x.floor_ll());
}

inline constexpr long long kDefaultR2Bound = 10'000'000;

// r2(n) = #{(a,b) in Z^2 : a^2 + b^2 = n} via the divisor identity
// r2(n) = 4*(d_1(n) - d_3(n)), d_r counting divisors congruent to r mod 4.
inline long long r2(long long n, long long bound = kDefaultR2Bound) {
    if (n < 0) throw std::domain_error("r2: requires n >= 0");
    if (n > bound) throw std::overflow_error("r2: n exceeds configured bound");
    if (n == 0) return 1;
    long long val = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        long long q = n / d;
        if (d % 4 == 1) val += 4;
        else if (d % 4 == 3) val -= 4;
        if (q != d) {
            if (q % 4 == 1) val += 4;
            else if (q % 4 == 3) val -= 4;
        }
    }
    return val;
}

// Brute-force pair enumeration, kept as the oracle for r2().
inline long long r2_enumerate(long long n) {
    if (n < 0) throw std::domain_error("r2_enumerate: requires n >= 0");
    if (n == 0) return 1;
    long long count = 0;
    long long r = (long long)std::sqrt((double)n);
    while ((r + 1) * (r + 1) <= n) ++r;
    while (r * r > n) --r;
    for (long long a = -r; a <= r; ++a) {
        long long rem = n - a * a;
        long long b = (long long)std::sqrt((double)rem);
        while ((b + 1) * (b + 1) <= rem) ++b;
        while (b * b > rem) --b;
        if (b * b == rem) count += (b == 0) ? 1 : 2;
    }
    return count;
}

// d(n) by prime factorization.
inline long long d(long long n) {
    if (n < 1) throw std::domain_error("d: requires n >= 1");
    long long count = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        count *= (e + 1);
    }
    if (n > 1) count *= 2;
    return count;
}

// Trial-division oracle for d().
inline long long d_trial(long long n) {
    if (n < 1) throw std::domain_error("d_trial: requires n >= 1");
    long long count = 0;
    for (long long k = 1; k * k <= n; ++k) {
        if (n % k == 0) count += (k * k == n) ? 1 : 2;
    }
    return count;
}

inline std::vector<long long> r2_sieve(long long n_max) {
    std::vector<long long> table(n_max + 1, 0);
    table[0] = 1;
    for (long long k = 1; k <= n_max; ++k) table[k] = r2(k, n_max);
    return table;
}

// Sum_{0<=n<=x} r2(n) with the boundary term halved at integer x.  Held as
// twice the value so the result stays an exact integer.
inline Rational sum_star_circle(const Rational& x) {
    if (x.num < 0) throw std::domain_error("sum_star: requires x >= 0");
    long long fl = x.floor_ll();
    long long twice = 0;
    for (long long n = 0; n <= fl; ++n) twice += 2 * r2(n);
    if (x.is_integer()) twice -= r2(fl);
    return Rational(twice, 2);
}

inline Rational sum_star_divisor(const Rational& x) {
    if (x.num <= 0) throw std::domain_error("sum_star: divisor kind requires x > 0");
    long long fl = x.floor_ll();
    long long twice = 0;
    for (long long n = 1; n <= fl; ++n) twice += 2 * d(n);
    if (x.is_integer() && fl >= 1) twice -= d(fl);
    return Rational(twice, 2);
}

inline Rational sum_star(const Rational& x, SummatoryKind kind) {
    return kind == SummatoryKind::circle ? sum_star_circle(x) : sum_star_divisor(x);
}

// Direct lattice-count oracle: pairs with a^2 + b^2 <= x, boundary pairs
// weighted 1/2 when x is an integer.
inline Rational lattice_count_oracle(const Rational& x) {
    if (x.num < 0) throw std::domain_error("lattice_count_oracle: requires x >= 0");
    long long fl = x.floor_ll();
    long long r = (long long)std::sqrt((double)fl);
    while ((r + 1) * (r + 1) <= fl) ++r;
    while (r > 0 && r * r > fl) --r;
    long long twice = 0;
    for (long long a = -r; a <= r; ++a) {
        for (long long b = -r; b <= r; ++b) {
            Rational norm(a * a + b * b, 1);
            if (norm <= x) {
                bool boundary = x.is_integer() && norm == x;
                twice += boundary ? 1 : 2;
            }
        }
    }
    return Rational(twice, 2);
}

inline RemainderRecord p_exact(const Rational& x) {
    if (x.num <= 0) throw std::domain_error("p_exact: requires x > 0");
    RemainderRecord rec;
    rec.x = x.to_double();
    rec.star_sum = sum_star_circle(x);
    rec.main_term = kPi * rec.x;
    rec.remainder = rec.star_sum.to_double() - rec.main_term;
    return rec;
}

// Double convenience overload; integrality is decided on the binary value,
// which only matters when x was produced as an exact integer.
inline RemainderRecord p_exact(double x) {
    if (x <= 0.0) throw std::domain_error("p_exact: requires x > 0");
    long long fl = (long long)std::floor(x);
    long long twice = 0;
    for (long long n = 0; n <= fl; ++n) twice += 2 * r2(n);
    if (x == std::floor(x)) twice -= r2(fl);
    RemainderRecord rec;
    rec.x = x;
    rec.star_sum = Rational(twice, 2);
    rec.main_term = kPi * x;
    rec.remainder = rec.star_sum.to_double() - rec.main_term;
    return rec;
}

inline RemainderRecord delta_exact(const Rational& x) {
    if (Rational(1, 1) <= x) {
        RemainderRecord rec;
        rec.x = x.to_double();
        rec.star_sum = sum_star_divisor(x);
        rec.main_term = rec.x * std::log(rec.x) + (2.0 * kEulerGamma - 1.0) * rec.x + 0.25;
        rec.remainder = rec.star_sum.to_double() - rec.main_term;
        return rec;
    }
    throw std::domain_error("delta_exact: requires x >= 1");
}

// Precomputed r2 prefix sums for grid scans; sum_star lookups become O(1).
class LatticeCounter {
  public:
    explicit LatticeCounter(long long n_max) : r2_(r2_sieve(n_max)) {
        prefix_twice_.resize(r2_.size() + 1, 0);
        for (std::size_t n = 0; n < r2_.size(); ++n)
            prefix_twice_[n + 1] = prefix_twice_[n] + 2 * r2_[n];
    }

    long long max_n() const { return (long long)r2_.size() - 1; }
    long long r2_at(long long n) const { return r2_.at(n); }

    Rational sum_star_circle(const Rational& x) const {
        if (x.num < 0) throw std::domain_error("sum_star: requires x >= 0");
        long long fl = x.floor_ll();
        if (fl > max_n()) throw std::out_of_range("LatticeCounter: x beyond sieve");
        long long twice = prefix_twice_[fl + 1];
        if (x.is_integer()) twice -= r2_[fl];
        return Rational(twice, 2);
    }

    RemainderRecord p_exact(const Rational& x) const {
        RemainderRecord rec;
        rec.x = x.to_double();
        rec.star_sum = sum_star_circle(x);
        rec.main_term = kPi * rec.x;
        rec.remainder = rec.star_sum.to_double() - rec.main_term;
        return rec;
    }

  private:
    std::vector<long long> r2_;
    std::vector<long long> prefix_twice_;
};

enum class ConjectureFlavor { sin, cos };

// Finite LHS of the Ramanujan conjectures: sum_{1<=n<=x} F(x/n) * sin(2 pi n
// theta) (or cos).  Terms with n > x vanish because F(x/n) = 0 there.
inline double conjecture_lhs(const Rational& x, double theta, ConjectureFlavor flavor) {
    if (x.num <= 0) throw std::domain_error("conjecture_lhs: requires x > 0");
    if (!(theta > 0.0 && theta < 1.0))
        throw std::domain_error("conjecture_lhs: requires theta in (0,1)");
    long long n_max = x.floor_ll();
    Accumulator acc;
    for (long long n = 1; n <= n_max; ++n) {
        Rational ratio(x.num, x.den * n);
        double f = floor_f(ratio);
        double angle = 2.0 * kPi * double(n) * theta;
        acc.add(f * (flavor == ConjectureFlavor::sin ? std::sin(angle) : std::cos(angle)));
    }
    return acc.total();
}

inline double conjecture_lhs(double x, double theta, ConjectureFlavor flavor) {
    if (x <= 0.0) throw std::domain_error("conjecture_lhs: requires x > 0");
    if (!(theta > 0.0 && theta < 1.0))
        throw std::domain_error("conjecture_lhs: requires theta in (0,1)");
    Accumulator acc;
    for (long long n = 1; n <= (long long)std::floor(x); ++n) {
        double f = floor_f(x / double(n));
        double angle = 2.0 * kPi * double(n) * theta;
        acc.add(f * (flavor == ConjectureFlavor::sin ? std::sin(angle) : std::cos(angle)));
    }
    return acc.total();
}

}  // namespace circlelab::arith
