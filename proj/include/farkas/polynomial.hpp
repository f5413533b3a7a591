#pragma once

// Dense univariate polynomials over Z.

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "farkas/arith.hpp"

namespace farkas {

/// Coefficient i multiplies x^i. The leading coefficient is nonzero unless
/// the polynomial is zero (empty coefficient vector, degree -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial monomial(const mpz_class& c, std::size_t degree);
    static IntPolynomial x_pow_minus_one(std::size_t n);
    static IntPolynomial x_pow_plus_one(std::size_t n);

    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    /// Coefficient of x^i; zero beyond the degree.
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const mpz_class& leading() const;
    std::span<const mpz_class> coefficients() const noexcept { return c_; }

    mpz_class eval(const mpz_class& x) const;
    /// gcd of the coefficients, sign of the leading coefficient; 0 for zero.
    mpz_class content() const;
    IntPolynomial primitive_part() const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const mpz_class& s);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s) { return a *= s; }

    /// Exact division of every coefficient; throws if not divisible.
    IntPolynomial divided_exactly(const mpz_class& s) const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    /// e.g. "3*x^2 - x + 1"; "0" for zero.
    std::string str() const;

private:
    void normalize();

    std::vector<mpz_class> c_;
};

struct PolyDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Division by a divisor with leading coefficient +-1. Throws otherwise.
PolyDivision divmod_monic(const IntPolynomial& a, const IntPolynomial& divisor);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// gcd over Q, returned as a primitive integer polynomial with positive
/// leading coefficient (subresultant remainder sequence). gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// The n-th cyclotomic polynomial.
IntPolynomial cyclotomic(u64 n);

}  // namespace farkas
