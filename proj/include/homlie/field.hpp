#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homlie {

/*
 * Exact scalars.
 *
 * Every computation in the library runs over Q(i), the Gaussian rationals,
 * with Q embedded as the elements whose imaginary part is zero. Values are
 * immutable and always stored in canonical form, so structural equality is
 * value equality.
 */

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Scalar text that does not match the grammar; `position` is a 0-based offset.
class ScalarParseError : public std::invalid_argument {
public:
    ScalarParseError(std::string message, std::size_t position)
        : std::invalid_argument(std::move(message)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(value) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class value);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

    std::string to_string() const;

private:
    mpq_class value_{0};
};

/// re + im*i with exact rational parts.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}
    Scalar(int value) : re_(value) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar fraction(long num, long den) { return Scalar(Rational(mpz_class(num), mpz_class(den))); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == Rational(1); }
    bool is_real() const { return im_.is_zero(); }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// re^2 + im^2, the field norm down to Q.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.re_ + b.re_, a.im_ + b.im_); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(a.re_ - b.re_, a.im_ - b.im_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

private:
    Rational re_;
    Rational im_;
};

using GaussianRational = Scalar;

enum class ArithOp { add, sub, mul, div };

/// Single entry point for the four field operations; div by zero throws DivisionByZero.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

/*
 * Scalar text grammar (decimal integers, no embedded whitespace):
 *
 *   scalar   ::= real [ ('+'|'-') [ratio] 'i' ]
 *              | ['-'] [ratio] 'i'
 *   real     ::= ['-'] ratio
 *   ratio    ::= digits [ '/' digits ]
 *
 * "3/4i" is (3/4)i. The canonical output of format_scalar parses back to the
 * same value.
 */
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace homlie
