#pragma once

// Shared value types, error types and numeric helpers used across the
// circlelab headers.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circlelab {

inline constexpr double kPi = std::numbers::pi;
// Euler-Mascheroni constant to full binary64 precision.
inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024;

// Result of a truncated series evaluation: value, an honest error estimate,
// how many terms went in, and which method produced it.
struct SeriesValue {
    double value = 0.0;
    double est_error = 0.0;
    long terms_used = 0;
    std::string method;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CancellationWarning : std::runtime_error {
    CancellationWarning(const std::string& what, double best, double max_term)
        : std::runtime_error(what), best_value(best), max_term(max_term) {}
    double best_value;
    double max_term;
};

struct ToleranceError : std::runtime_error {
    ToleranceError(const std::string& what, double best, double est)
        : std::runtime_error(what), best_value(best), est_error(est) {}
    double best_value;
    double est_error;
};

// Neumaier compensated accumulator.  All long summations in this project run
// in a fixed ascending-term order through one of these, which keeps repeated
// runs bit-identical and the rounding error near one ulp of the total.
class Accumulator {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double total() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Exact rational with a small denominator.  x values enter through decimal
// strings so that the star convention's integrality test is exact; star sums
// themselves only ever need denominator 1 or 2.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return double(num) / double(den); }
    bool is_integer() const { return den == 1; }
    long long floor_ll() const {
        long long q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }
};

// Parses a plain decimal string ("5", "2.5", "10000.000001") into an exact
// rational.  Throws std::invalid_argument with the offending text on junk.
inline Rational parse_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("decimal parse error: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') { neg = (text[i] == '-'); ++i; }
    long long num = 0, den = 1;
    bool saw_digit = false, saw_dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (saw_dot) throw std::invalid_argument("decimal parse error: '" + text + "'");
            saw_dot = true;
            continue;
        }
        if (c < '0' || c > '9')
            throw std::invalid_argument("decimal parse error: '" + text + "'");
        if (num > (std::numeric_limits<long long>::max() - 9) / 10 ||
            (saw_dot && den > std::numeric_limits<long long>::max() / 10))
            throw std::invalid_argument("decimal parse error: '" + text + "' out of range");
        num = num * 10 + (c - '0');
        if (saw_dot) den *= 10;
        saw_digit = true;
    }
    if (!saw_digit) throw std::invalid_argument("decimal parse error: '" + text + "'");
    if (neg) num = -num;
    return Rational(num, den);
}

}  // namespace circlelab
