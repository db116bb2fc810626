#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace mcgcoh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Gaussian rational re + i*im with both parts exact.
struct QComplex {
    Rational re;
    Rational im;

    QComplex() = default;
    QComplex(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    /// |z|^2, exact.
    Rational norm_sq() const { return re * re + im * im; }

    QComplex conj() const { return {re, -im}; }

    QComplex& operator+=(const QComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    QComplex& operator-=(const QComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
    friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
    friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
    friend QComplex operator*(const QComplex& a, const QComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const QComplex& a, const QComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Parses "p/q", "p" or "-p/q". Throws ParseError on anything else or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Always emits "num/den" (den = 1 included) so output is byte-stable.
std::string format_rational(const Rational& q);

/// Exact square root of a nonnegative rational if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& q);

/// A nonnegative real known exactly through its square. Moduli of Gaussian
/// rationals are generally irrational, so comparisons go through squares.
class Magnitude {
public:
    Magnitude() = default;
    static Magnitude from_squared(Rational sq);
    static Magnitude from_value(const Rational& v);

    const Rational& squared() const { return squared_; }
    double value() const;
    std::optional<Rational> exact() const { return exact_sqrt(squared_); }

    friend bool operator==(const Magnitude& a, const Magnitude& b) { return a.squared_ == b.squared_; }
    friend bool operator<(const Magnitude& a, const Magnitude& b) { return a.squared_ < b.squared_; }
    friend bool operator<=(const Magnitude& a, const Magnitude& b) { return a.squared_ <= b.squared_; }

private:
    Rational squared_ = 0;
};

}  // namespace mcgcoh
