#pragma once

// Exact scalars: rationals in lowest terms and elements of Q(i).

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace farkas {

/// Arbitrary-precision fraction, always reduced with a positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T n) : v_(to_mpz(n)) {}

    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class v);

    /// Accepts "a", "-a", "a/b" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_integer() const noexcept { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    double to_double() const { return v_.get_d(); }

    /// Reduced fraction string: "a" for integers, otherwise "a/b".
    std::string str() const { return v_.get_str(); }

    /// Decimal rendering with `places` digits after the point, rounded half away from zero.
    std::string decimal(int places) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    template <std::integral T>
    static mpz_class to_mpz(T n)
    {
        if constexpr (std::is_signed_v<T>)
            return mpz_class(static_cast<long>(n));
        else
            return mpz_class(static_cast<unsigned long>(n));
    }

    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// re + im*i with rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    template <std::integral T>
    GaussianRational(T re) : re_(re) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {0, 1}; }

    /// Parses either "re,im" (each a rational, the config-file form) or the
    /// canonical "re+imi" / "re-imi" form produced by str().
    static GaussianRational parse(std::string_view text);

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }
    bool is_gaussian_integer() const noexcept { return re_.is_integer() && im_.is_integer(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    /// "a/b+c/di"; both parts always present, e.g. "3/10+1/10i", "1+0i".
    std::string str() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace farkas
