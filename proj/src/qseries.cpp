#include "farkas/qseries.hpp"

#include <stdexcept>
#include <string>

#include "farkas/parallel.hpp"

namespace farkas {

namespace {

constexpr i64 kSmall = i64{1} << 30;

mpz_class to_mpz(__int128 v)
{
    bool negative = v < 0;
    unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class out(static_cast<unsigned long>(u >> 64));
    out <<= 64;
    out += static_cast<unsigned long>(u & ~std::uint64_t{0});
    return negative ? mpz_class(-out) : out;
}

bool small_integer(const Rational& r, i64& out)
{
    if (!r.is_integer())
        return false;
    const mpz_class& v = r.value().get_num();
    if (!v.fits_slong_p())
        return false;
    long x = v.get_si();
    if (x <= -kSmall || x >= kSmall)
        return false;
    out = x;
    return true;
}

// Splits coefficients 1..N into integer real/imaginary arrays; false when
// any coefficient is not a small Gaussian integer.
bool integral_tail(const QSeries& s, std::vector<i64>& re, std::vector<i64>& im)
{
    re.assign(s.order() + 1, 0);
    im.assign(s.order() + 1, 0);
    for (u64 n = 1; n <= s.order(); ++n) {
        if (!small_integer(s[n].re(), re[n]) || !small_integer(s[n].im(), im[n]))
            return false;
    }
    return true;
}

struct GaussInt {
    i64 re = 0;
    i64 im = 0;
};

GaussInt unit_to_gauss(const UnitValue& v)
{
    if (v.is_zero())
        return {};
    GaussianRational g = v.gaussian();
    return {g.re().value().get_num().get_si(), g.im().value().get_num().get_si()};
}

void require_delta_character(const DirichletCharacter& chi)
{
    if (!chi.order_divides_4())
        throw std::invalid_argument("delta series: character order " + std::to_string(chi.order()) +
                                    " does not divide 4");
}

void require_five_mod_eight(u64 p, const char* what)
{
    if (p % 8 != 5 || !is_prime(p))
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) + " is not a prime = 5 (mod 8)");
}

// Divisor sieve: acc[m] += weight(d, m) for every d | m, 1 <= m <= order.
template <typename Weight>
std::vector<i64> divisor_sieve(u64 order, Weight weight)
{
    std::vector<i64> acc(order + 1, 0);
    for (u64 d = 1; d <= order; ++d)
        for (u64 m = d; m <= order; m += d)
            acc[m] += weight(d, m);
    return acc;
}

QSeries from_integers(const Rational& constant, const std::vector<i64>& values)
{
    QSeries s(values.size() - 1);
    s[0] = constant;
    for (u64 n = 1; n < values.size(); ++n)
        s[n] = GaussianRational(values[n]);
    return s;
}

}  // namespace

QSeries::QSeries(std::vector<GaussianRational> coefficients) : c_(std::move(coefficients))
{
    if (c_.empty())
        throw std::invalid_argument("QSeries: needs at least the constant term");
}

const GaussianRational& QSeries::operator[](u64 n) const
{
    if (n >= c_.size())
        throw std::out_of_range("QSeries: index " + std::to_string(n) + " beyond order " + std::to_string(order()));
    return c_[n];
}

GaussianRational& QSeries::operator[](u64 n)
{
    if (n >= c_.size())
        throw std::out_of_range("QSeries: index " + std::to_string(n) + " beyond order " + std::to_string(order()));
    return c_[n];
}

QSeries QSeries::conj() const
{
    QSeries out(order());
    for (u64 n = 0; n <= order(); ++n)
        out.c_[n] = c_[n].conj();
    return out;
}

QSeries QSeries::truncated(u64 new_order) const
{
    if (new_order > order())
        throw std::out_of_range("QSeries::truncated: cannot extend a truncated series");
    return QSeries(std::vector<GaussianRational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(new_order + 1)));
}

bool QSeries::is_zero() const
{
    for (const auto& c : c_)
        if (!c.is_zero())
            return false;
    return true;
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    if (o.order() != order())
        throw std::invalid_argument("QSeries: mismatched truncation orders");
    for (u64 n = 0; n <= order(); ++n)
        c_[n] += o.c_[n];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o)
{
    if (o.order() != order())
        throw std::invalid_argument("QSeries: mismatched truncation orders");
    for (u64 n = 0; n <= order(); ++n)
        c_[n] -= o.c_[n];
    return *this;
}

QSeries& QSeries::operator*=(const GaussianRational& scalar)
{
    for (auto& c : c_)
        c *= scalar;
    return *this;
}

Convolution::Convolution(QSeries a, QSeries b) : a_(std::move(a)), b_(std::move(b))
{
    if (a_.order() != b_.order())
        throw std::invalid_argument("Convolution: mismatched truncation orders " + std::to_string(a_.order()) +
                                    " and " + std::to_string(b_.order()));
    integral_ = integral_tail(a_, are_, aim_) && integral_tail(b_, bre_, bim_);
    if (!integral_) {
        are_.clear();
        aim_.clear();
        bre_.clear();
        bim_.clear();
    }
}

GaussianRational Convolution::coefficient(u64 n) const
{
    if (n > order())
        throw std::out_of_range("Convolution: index " + std::to_string(n) + " beyond order " +
                                std::to_string(order()));
    if (n == 0)
        return a_[0] * b_[0];
    if (!integral_) {
        GaussianRational sum;
        for (u64 j = 0; j <= n; ++j)
            sum += a_[j] * b_[n - j];
        return sum;
    }
    __int128 re = 0;
    __int128 im = 0;
    for (u64 j = 1; j < n; ++j) {
        u64 k = n - j;
        re += static_cast<__int128>(are_[j] * bre_[k] - aim_[j] * bim_[k]);
        im += static_cast<__int128>(are_[j] * bim_[k] + aim_[j] * bre_[k]);
    }
    GaussianRational out(Rational(to_mpz(re)), Rational(to_mpz(im)));
    out += a_[0] * b_[n];
    out += a_[n] * b_[0];
    return out;
}

QSeries Convolution::series() const
{
    QSeries out(order());
    parallel_for(0, order() + 1, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t n = lo; n < hi; ++n)
            out[n] = coefficient(n);
    });
    return out;
}

QSeries cauchy_product(const QSeries& a, const QSeries& b)
{
    return Convolution(a, b).series();
}

GaussianRational delta_constant(const DirichletCharacter& chi)
{
    require_delta_character(chi);
    if (chi.is_trivial() || chi.parity() != Parity::odd)
        throw std::invalid_argument("delta_constant: defined here for odd characters only");
    u64 p = chi.modulus();
    GaussianRational sum;
    for (u64 a = 1; a < p; ++a)
        sum += chi.value(static_cast<i64>(a)).gaussian() * GaussianRational(a);
    return sum * GaussianRational(Rational(-1, 2 * p));
}

GaussianRational delta_coefficient(const DirichletCharacter& chi, u64 n)
{
    require_delta_character(chi);
    GaussianRational sum;
    for (u64 d : divisors(n))
        sum += chi.value(static_cast<i64>(d)).gaussian();
    return sum;
}

QSeries delta_series(const DirichletCharacter& chi, u64 order)
{
    GaussianRational constant = delta_constant(chi);
    std::vector<GaussInt> values(chi.modulus() - 1);
    for (u64 a = 1; a < chi.modulus(); ++a)
        values[a - 1] = unit_to_gauss(chi.value(static_cast<i64>(a)));
    u64 p = chi.modulus();
    std::vector<i64> re(order + 1, 0);
    std::vector<i64> im(order + 1, 0);
    for (u64 d = 1; d <= order; ++d) {
        if (d % p == 0)
            continue;
        GaussInt v = values[d % p - 1];
        for (u64 m = d; m <= order; m += d) {
            re[m] += v.re;
            im[m] += v.im;
        }
    }
    QSeries s(order);
    s[0] = constant;
    for (u64 n = 1; n <= order; ++n)
        s[n] = GaussianRational(Rational(re[n]), Rational(im[n]));
    return s;
}

QSeries sigma_prime_series(u64 p, u64 order)
{
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("sigma_prime_series: " + std::to_string(p) + " is not an odd prime");
    auto values = divisor_sieve(order, [p](u64 d, u64) { return d % p == 0 ? i64{0} : static_cast<i64>(d); });
    return from_integers(Rational(static_cast<long>(p - 1), 24), values);
}

QSeries sigma_tilde_series(u64 p, u64 order)
{
    require_five_mod_eight(p, "sigma_tilde_series");
    Rational constant = -bernoulli_B2_psi(p) / Rational(4);
    std::vector<int> kron(p);
    for (u64 r = 0; r < p; ++r)
        kron[r] = kronecker(p, static_cast<i64>(r));
    auto values = divisor_sieve(order, [&](u64 d, u64) { return kron[d % p] * static_cast<i64>(d); });
    return from_integers(constant, values);
}

QSeries sigma_hat_series(u64 p, u64 order)
{
    require_five_mod_eight(p, "sigma_hat_series");
    std::vector<int> kron(p);
    for (u64 r = 0; r < p; ++r)
        kron[r] = kronecker(p, static_cast<i64>(r));
    auto values = divisor_sieve(order, [&](u64 d, u64 m) { return kron[d % p] * static_cast<i64>(m / d); });
    return from_integers(Rational(0), values);
}

Rational bernoulli_B2_psi(u64 p)
{
    if (p % 4 != 1 || !is_prime(p))
        throw std::invalid_argument("bernoulli_B2_psi: " + std::to_string(p) + " is not a prime = 1 (mod 4)");
    mpz_class total = 0;
    for (u64 s = 1; s * s < p; s += 2)
        total += 2 * sigma1((p - s * s) / 4);  // s and -s
    return Rational(2, 5) * Rational(total);
}

GaussianRational convolution_F(const DirichletCharacter& chi, u64 n)
{
    return Convolution(delta_series(chi, n), delta_series(chi.conj(), n)).coefficient(n);
}

GaussianRational convolution_H(const DirichletCharacter& chi, u64 n)
{
    QSeries d = delta_series(chi, n);
    return Convolution(d, d).coefficient(n);
}

}  // namespace farkas
