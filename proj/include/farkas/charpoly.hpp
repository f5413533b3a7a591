#pragma once

// Integer polynomials attached to Dirichlet characters mod p. With zeta a
// primitive (p-1)-th root of unity,
//   h_{xi,j}(x) = sum_{d | j} x^{t(xi,d)},   h_{xi,j}(zeta) = delta_xi(j),
//   f_xi(x)     = sum_{j=1}^{p-1} h_{xi,j}(x) h_{conj xi,p-j}(x),
// so f_chi(zeta^k) is the sum of delta_{chi^k}(j) delta_{conj chi^k}(p-j).
// Vanishing at roots of unity is decided by exact divisibility, never numerically.

#include <optional>
#include <vector>

#include "farkas/character.hpp"
#include "farkas/polynomial.hpp"
#include "farkas/rational.hpp"

namespace farkas {

/// Throws std::invalid_argument unless 1 <= j <= p-1.
IntPolynomial h_poly(const DirichletCharacter& xi, u64 j);

IntPolynomial f_poly(const DirichletCharacter& xi);

/// Remainder of f modulo x^(p-1) - 1 (exponents folded mod p-1).
IntPolynomial reduce_g(const IntPolynomial& f, u64 p);

bool divisible_by_xq_plus_1(const IntPolynomial& g, u64 q);

/// gcd(g, x^q - 1) is constant over Q.
bool coprime_with_xq_minus_1(const IntPolynomial& g, u64 q);

/// g(zeta^k) == 0 for zeta a primitive root_order-th root of unity, decided
/// by divisibility of g by the cyclotomic polynomial of the order of zeta^k.
bool vanishes_at_root_power(const IntPolynomial& g, u64 root_order, u64 k);

/// The four coefficient values b_0, b_1, b_{p-1}, b_p of f_chi and sign facts.
struct CoefficientFacts {
    mpz_class b0, b1, b_pm1, b_p;
    bool b0_ok = false;    // b_0 = p - 1
    bool b1_ok = false;    // b_1 = (p-1)/2 + 1
    bool b_pm1_zero = false;
    bool b_p_zero = false;
    bool nonnegative = false;
    bool degree_ok = false;  // deg f <= 2p - 4
    std::vector<u64> other_zero_degrees;  // zero coefficients below deg f besides p-1, p (flagged only)

    bool holds() const noexcept { return b0_ok && b1_ok && b_pm1_zero && b_p_zero && nonnegative && degree_ok; }
};

CoefficientFacts coefficient_facts(const IntPolynomial& f, u64 p);

/// p = 2q + 1 with p, q prime and q = 1 (mod 4).
bool is_safe_prime_shape(u64 p);

/// All such p <= bound, increasing; checks that 2 is a primitive root of each
/// (std::logic_error otherwise).
std::vector<u64> safe_prime_scan(u64 bound);

struct PowerRow {
    u64 k;
    Parity parity;
    u64 order;  // order of chi^k
    bool zero;  // f_chi(zeta^k) == 0
};

struct EvenObstructionReport {
    u64 p;
    u64 q;
    bool two_is_primitive_root;
    IntPolynomial f;
    IntPolynomial g;
    CoefficientFacts facts;
    bool divisible_by_plus;   // (x^q + 1) | g
    bool coprime_with_minus;  // gcd(g, x^q - 1) = 1
    std::vector<PowerRow> rows;  // k = 0..p-2

    /// odd k vanish, even k do not, and both divisibility verdicts hold.
    bool consistent() const;
};

/// Throws std::invalid_argument unless is_safe_prime_shape(p).
EvenObstructionReport even_character_obstruction(u64 p);

/// sum_{j=1}^{p-1} delta_xi(j) delta_{conj xi}(p-j), both routes.
struct ZeroSum {
    std::optional<GaussianRational> exact;  // direct sum in Q(i) when the order divides 4
    IntPolynomial residue;                  // f_xi mod Phi_{p-1}; zero iff the sum is zero
    bool is_zero;
    bool routes_agree;
};

/// The obstruction sum for any character; zero_sum_check additionally
/// requires an odd character.
ZeroSum obstruction_sum(const DirichletCharacter& xi);
ZeroSum zero_sum_check(const DirichletCharacter& chi);

}  // namespace farkas
