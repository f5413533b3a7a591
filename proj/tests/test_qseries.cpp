#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "farkas/arith.hpp"
#include "farkas/character.hpp"
#include "farkas/qseries.hpp"

using namespace farkas;

namespace {

const GaussianRational I = GaussianRational::i();

GaussianRational gq(long a, long b, long c = 0, long d = 1)
{
    return {Rational(a, b), Rational(c, d)};
}

QSeries naive_product(const QSeries& a, const QSeries& b)
{
    QSeries out(a.order());
    for (u64 n = 0; n <= a.order(); ++n) {
        GaussianRational s;
        for (u64 j = 0; j <= n; ++j)
            s += a[j] * b[n - j];
        out[n] = s;
    }
    return out;
}

// B_{2,psi} = (1/p) sum_{a=1}^{p} psi(a) a^2 for the even quadratic character.
Rational bernoulli_oracle(u64 p)
{
    Rational s;
    for (u64 a = 1; a < p; ++a)
        s += Rational(kronecker(p, static_cast<i64>(a))) * Rational(a * a);
    return s / Rational(p);
}

GaussianRational brute_delta(const DirichletCharacter& chi, u64 n)
{
    GaussianRational s;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0)
            s += chi.value(static_cast<i64>(d)).gaussian();
    return s;
}

std::vector<u64> primes_5_mod_8(u64 lo, u64 hi)
{
    std::vector<u64> out;
    for (u64 p = 5; p <= hi; p += 8)
        if (p >= lo && is_prime(p))
            out.push_back(p);
    return out;
}

}  // namespace

TEST(QSeriesBasics, BoundsAreChecked)
{
    QSeries s(3);
    EXPECT_NO_THROW(s[3]);
    EXPECT_THROW(s[4], std::out_of_range);
    const QSeries& cs = s;
    EXPECT_THROW(cs[4], std::out_of_range);
    EXPECT_THROW(cauchy_product(QSeries(3), QSeries(4)), std::invalid_argument);
    EXPECT_THROW(Convolution(QSeries(3), QSeries(4)), std::invalid_argument);
}

TEST(CauchyProduct, Examples)
{
    QSeries one(6);
    one[0] = 1;
    EXPECT_EQ(cauchy_product(one, one), one);

    auto [chi, bar] = quartic_pair(5);
    QSeries f = cauchy_product(delta_series(chi, 10), delta_series(bar, 10));
    EXPECT_EQ(f[1], gq(3, 5));
    EXPECT_EQ(f[2], gq(9, 5));
}

TEST(CauchyProduct, FastPathMatchesNaiveOracle)
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> small(-50, 50);
    for (int trial = 0; trial < 20; ++trial) {
        u64 n = 40 + trial;
        QSeries a(n), b(n);
        a[0] = gq(small(rng), 7, small(rng), 3);
        b[0] = gq(small(rng), 11, small(rng), 2);
        for (u64 k = 1; k <= n; ++k) {
            a[k] = gq(small(rng), 1, small(rng), 1);
            b[k] = gq(small(rng), 1, small(rng), 1);
        }
        Convolution c(a, b);
        EXPECT_TRUE(c.uses_integer_path());
        ASSERT_EQ(c.series(), naive_product(a, b));
        ASSERT_EQ(cauchy_product(a, b), naive_product(a, b));
    }
}

TEST(CauchyProduct, FallbackPathsMatchNaiveOracle)
{
    u64 n = 30;
    QSeries a(n), b(n), big(n);
    for (u64 k = 0; k <= n; ++k) {
        a[k] = gq(static_cast<long>(k) + 1, 3, 1, static_cast<long>(k) + 2);
        b[k] = gq(static_cast<long>(k) * 5 - 7, 1, 2, 1);
        big[k] = GaussianRational(Rational(mpz_class(mpz_class("123456789012345") * static_cast<long>(k + 1))));
    }
    Convolution rational(a, b);
    EXPECT_FALSE(rational.uses_integer_path());
    EXPECT_EQ(rational.series(), naive_product(a, b));
    Convolution wide(big, b);
    EXPECT_FALSE(wide.uses_integer_path());
    EXPECT_EQ(wide.series(), naive_product(big, b));
    EXPECT_EQ(wide.coefficient(17), naive_product(big, b)[17]);
}

TEST(DeltaConstant, Examples)
{
    auto [chi5, bar5] = quartic_pair(5);
    EXPECT_EQ(delta_constant(chi5), gq(3, 10, 1, 10));
    EXPECT_EQ(delta_constant(bar5), gq(3, 10, -1, 10));
    EXPECT_EQ(delta_constant(quartic_pair(13).first), gq(1, 2, 1, 2));
    EXPECT_EQ(delta_constant(DirichletCharacter::quadratic(3)), gq(1, 6));
    EXPECT_THROW(delta_constant(DirichletCharacter::quadratic(13)), std::invalid_argument);
    EXPECT_THROW(delta_constant(generator_character(11, 2)), std::invalid_argument);
}

TEST(DeltaSeries, ExamplesAndBruteForce)
{
    auto [chi, bar] = quartic_pair(5);
    QSeries d = delta_series(chi, 2000);
    EXPECT_EQ(d[1], GaussianRational(1));
    EXPECT_EQ(d[2], GaussianRational(1) + I);
    EXPECT_EQ(d[4], I);
    for (u64 p : {5u, 13u, 29u}) {
        DirichletCharacter c = quartic_pair(p).first;
        QSeries s = delta_series(c, 500);
        for (u64 n = 1; n <= 500; ++n)
            ASSERT_EQ(s[n], brute_delta(c, n)) << p << " " << n;
        EXPECT_EQ(delta_series(c.conj(), 500), s.conj());
    }
}

TEST(DeltaSeries, BoundedByDivisorCount)
{
    DirichletCharacter chi = quartic_pair(29).first;
    QSeries s = delta_series(chi, 10000);
    for (u64 n = 1; n <= 10000; ++n)
        ASSERT_LE(s[n].norm_sq(), Rational(divisor_count(n) * divisor_count(n))) << n;
}

TEST(SigmaSeries, Examples)
{
    QSeries sp = sigma_prime_series(5, 20);
    EXPECT_EQ(sp[0], gq(1, 6));
    EXPECT_EQ(sp[2], GaussianRational(3));
    EXPECT_EQ(sp[5], GaussianRational(1));
    QSeries st = sigma_tilde_series(5, 20);
    EXPECT_EQ(st[0], gq(-1, 5));
    EXPECT_EQ(st[1], GaussianRational(1));
    QSeries sh = sigma_hat_series(5, 20);
    EXPECT_EQ(sh[0], GaussianRational(0));
    EXPECT_EQ(sh[10], GaussianRational(5));
    for (u64 p : primes_5_mod_8(5, 200)) {
        EXPECT_EQ(sigma_tilde_series(p, 2)[2], GaussianRational(-1)) << p;
        EXPECT_EQ(sigma_hat_series(p, 2)[2], GaussianRational(1)) << p;
        EXPECT_EQ(sigma_tilde_series(p, 2)[1], GaussianRational(1)) << p;
        EXPECT_EQ(sigma_hat_series(p, 2)[1], GaussianRational(1)) << p;
    }
    EXPECT_THROW(sigma_tilde_series(17, 5), std::invalid_argument);
    EXPECT_THROW(sigma_prime_series(9, 5), std::invalid_argument);
}

TEST(SigmaSeries, BruteForceAndMultiplicativity)
{
    u64 N = 10000;
    for (u64 p : {5u, 13u, 29u, 37u}) {
        QSeries sp = sigma_prime_series(p, N), st = sigma_tilde_series(p, N), sh = sigma_hat_series(p, N);
        QSeries d = delta_series(quartic_pair(p).first, N);
        for (u64 n = 1; n <= 600; ++n) {
            i64 a = 0, b = 0, c = 0;
            for (u64 k : divisors(n)) {
                if (k % p)
                    a += static_cast<i64>(k);
                b += kronecker(p, static_cast<i64>(k)) * static_cast<i64>(k);
                c += kronecker(p, static_cast<i64>(k)) * static_cast<i64>(n / k);
            }
            ASSERT_EQ(sp[n], GaussianRational(a));
            ASSERT_EQ(st[n], GaussianRational(b));
            ASSERT_EQ(sh[n], GaussianRational(c));
        }
        std::mt19937_64 rng(p);
        std::uniform_int_distribution<u64> dist(1, 500);
        int checked = 0;
        while (checked < 1000) {
            u64 m = dist(rng), n = dist(rng);
            if (std::gcd(m, n) != 1 || m * n > N)
                continue;
            ASSERT_EQ(d[m * n], d[m] * d[n]);
            ASSERT_EQ(st[m * n], st[m] * st[n]);
            ASSERT_EQ(sh[m * n], sh[m] * sh[n]);
            ++checked;
        }
    }
}

TEST(SigmaSeries, HatIsKroneckerTwistOfTildeAndLowerBound)
{
    for (u64 p : {5u, 13u, 29u, 37u}) {
        QSeries st = sigma_tilde_series(p, 10000), sh = sigma_hat_series(p, 10000);
        for (u64 n = 1; n <= 10000; ++n) {
            if (n % p == 0)
                continue;
            ASSERT_EQ(sh[n], GaussianRational(kronecker(p, static_cast<i64>(n))) * st[n]) << p << " " << n;
            // |sigma~(n)| >= n 2^-omega(n)
            Rational lower(mpz_class(static_cast<unsigned long>(n)), mpz_class(mpz_class(1) << omega(n)));
            ASSERT_GE(st[n].re().abs(), lower) << p << " " << n;
        }
    }
}

TEST(Bernoulli, Examples)
{
    EXPECT_EQ(bernoulli_B2_psi(5), Rational(4, 5));
    EXPECT_EQ(bernoulli_B2_psi(13), Rational(4));
    EXPECT_EQ(bernoulli_B2_psi(29), Rational(12));
    EXPECT_THROW(bernoulli_B2_psi(7), std::invalid_argument);
    EXPECT_THROW(bernoulli_B2_psi(21), std::invalid_argument);
}

TEST(Bernoulli, ClassNumberSumMatchesCharacterSum)
{
    for (u64 p = 5; p <= 3000; p += 4)
        if (is_prime(p))
            ASSERT_EQ(bernoulli_B2_psi(p), bernoulli_oracle(p)) << p;
}

TEST(Convolutions, Examples)
{
    DirichletCharacter chi = quartic_pair(5).first;
    EXPECT_EQ(convolution_F(chi, 0), gq(1, 10));
    EXPECT_EQ(convolution_H(chi, 0), gq(4, 50, 3, 50));
    EXPECT_EQ(convolution_H(chi, 1), gq(3, 5, 1, 5));
}

TEST(Convolutions, FIsReal)
{
    for (u64 p : {5u, 13u, 29u, 37u, 53u}) {
        auto [chi, bar] = quartic_pair(p);
        Convolution f(delta_series(chi, 3000), delta_series(bar, 3000));
        QSeries s = f.series();
        for (u64 n = 0; n <= 3000; ++n)
            ASSERT_TRUE(s[n].is_real()) << p << " " << n;
        EXPECT_EQ(s[77], convolution_F(chi, 77));
    }
}
