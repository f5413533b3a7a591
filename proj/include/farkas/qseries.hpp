#pragma once

// Truncated q-expansions with exact coefficients in Q(i): the weight-one
// delta series, the three weight-two divisor sums, and Cauchy products.

#include <span>
#include <vector>

#include "farkas/character.hpp"
#include "farkas/rational.hpp"

namespace farkas {

/// Coefficients c(0..N). Indexing outside 0..N throws std::out_of_range.
class QSeries {
public:
    explicit QSeries(u64 order) : c_(order + 1) {}
    explicit QSeries(std::vector<GaussianRational> coefficients);

    u64 order() const noexcept { return c_.size() - 1; }

    const GaussianRational& operator[](u64 n) const;
    GaussianRational& operator[](u64 n);

    std::span<const GaussianRational> coefficients() const noexcept { return c_; }

    QSeries conj() const;
    QSeries truncated(u64 order) const;
    bool is_zero() const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const GaussianRational& scalar);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const GaussianRational& s, QSeries a) { return a *= s; }

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<GaussianRational> c_;
};

/// Coefficients of the product A*B. When every coefficient of index >= 1 is
/// a small Gaussian integer (the case for all divisor-sum series here), the
/// sum over 0 < j < n runs in 128-bit integer arithmetic; the constant terms
/// are handled exactly. Otherwise falls back to rational arithmetic.
class Convolution {
public:
    /// Throws std::invalid_argument on mismatched truncation orders.
    Convolution(QSeries a, QSeries b);

    u64 order() const noexcept { return a_.order(); }
    bool uses_integer_path() const noexcept { return integral_; }

    /// sum_{j=0}^{n} A(j) B(n-j); throws std::out_of_range for n > order().
    GaussianRational coefficient(u64 n) const;
    /// All coefficients 0..order(); fans out across workers.
    QSeries series() const;

private:
    QSeries a_;
    QSeries b_;
    bool integral_ = false;
    std::vector<i64> are_, aim_, bre_, bim_;
};

/// Cauchy product truncated at the common order.
QSeries cauchy_product(const QSeries& a, const QSeries& b);

/// -(1/2p) * sum_{a=1}^{p-1} chi(a) a. Requires chi odd with order dividing 4.
GaussianRational delta_constant(const DirichletCharacter& chi);

/// sum_{d | n} chi(d) for n >= 1; chi must have order dividing 4.
GaussianRational delta_coefficient(const DirichletCharacter& chi, u64 n);

/// c(0) = delta_constant(chi), c(n) = sum_{d | n} chi(d).
QSeries delta_series(const DirichletCharacter& chi, u64 order);

/// sigma'_p: sum of divisors prime to p; c(0) = (p-1)/24.
QSeries sigma_prime_series(u64 p, u64 order);

/// sigma~_p(n) = sum_{d | n} (p/d) d, c(0) = -B_{2,psi}/4. Requires p = 5 (mod 8).
QSeries sigma_tilde_series(u64 p, u64 order);

/// sigma^_p(n) = sum_{d | n} (p/d) n/d, c(0) = 0. Requires p = 5 (mod 8).
QSeries sigma_hat_series(u64 p, u64 order);

/// B_{2,psi} for the quadratic character mod p = 1 (mod 4), from the class
/// number sum (2/5) * sum_s sigma((p - s^2)/4) over odd s with s^2 < p,
/// counting s and -s separately.
Rational bernoulli_B2_psi(u64 p);

/// F_chi(n) = sum_j delta_chi(j) delta_conj(chi)(n-j).
GaussianRational convolution_F(const DirichletCharacter& chi, u64 n);
/// H_chi(n) = sum_j delta_chi(j) delta_chi(n-j).
GaussianRational convolution_H(const DirichletCharacter& chi, u64 n);

}  // namespace farkas
