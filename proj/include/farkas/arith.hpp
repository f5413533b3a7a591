#pragma once

// Elementary number theory on machine integers. Inputs are desk scale
// (well below 2^63); factorization is trial division.

#include <cstdint>
#include <utility>
#include <vector>

namespace farkas {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// All positive divisors of n in increasing order. Throws on n == 0.
std::vector<u64> divisors(u64 n);

/// Number of positive divisors of n.
u64 divisor_count(u64 n);

/// Sum of positive divisors of n. Throws on n == 0.
u64 sigma1(u64 n);

/// Prime factorization as (prime, exponent) pairs, primes increasing.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// Number of distinct prime factors; omega(1) == 0.
unsigned omega(u64 n);

/// Deterministic for every 64-bit input.
bool is_prime(u64 n);

/// Kronecker symbol (p/n) for an odd prime p; throws if p is not an odd prime.
int kronecker(u64 p, i64 n);

/// Smallest generator of (Z/pZ)^*. Throws unless p is an odd prime.
u64 primitive_root(u64 p);

u64 pow_mod(u64 base, u64 exp, u64 mod);

/// a mod m in [0, m) for signed a.
u64 reduce_mod(i64 a, u64 m);

/// Discrete logarithms to a fixed generator g modulo a prime p.
class DiscreteLogTable {
public:
    /// Throws if p is not an odd prime or g does not generate (Z/pZ)^*.
    DiscreteLogTable(u64 p, u64 g);

    u64 modulus() const noexcept { return p_; }
    u64 generator() const noexcept { return g_; }

    /// dlog_g(a) in [0, p-2]; a is reduced mod p first. Throws if p | a.
    u64 log(i64 a) const;

    /// g^k mod p.
    u64 power(u64 k) const { return pow_[k % (p_ - 1)]; }

private:
    u64 p_;
    u64 g_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> pow_;
};

}  // namespace farkas
