#include "farkas/charpoly.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "farkas/qseries.hpp"

namespace farkas {

IntPolynomial h_poly(const DirichletCharacter& xi, u64 j)
{
    u64 p = xi.modulus();
    if (j < 1 || j > p - 1)
        throw std::invalid_argument("h_poly: j = " + std::to_string(j) + " outside 1.." + std::to_string(p - 1));
    std::vector<mpz_class> c(p - 1);
    for (u64 d : divisors(j))
        c[xi.t_exponent(static_cast<i64>(d))] += 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial f_poly(const DirichletCharacter& xi)
{
    u64 p = xi.modulus();
    DirichletCharacter bar = xi.conj();
    std::vector<IntPolynomial> h(p), hbar(p);
    for (u64 j = 1; j < p; ++j) {
        h[j] = h_poly(xi, j);
        hbar[j] = h_poly(bar, j);
    }
    IntPolynomial f;
    for (u64 j = 1; j < p; ++j)
        f += h[j] * hbar[p - j];
    return f;
}

IntPolynomial reduce_g(const IntPolynomial& f, u64 p)
{
    std::vector<mpz_class> c(p - 1);
    auto coeffs = f.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[i % (p - 1)] += coeffs[i];
    return IntPolynomial(std::move(c));
}

bool divisible_by_xq_plus_1(const IntPolynomial& g, u64 q)
{
    return divmod_monic(g, IntPolynomial::x_pow_plus_one(q)).remainder.is_zero();
}

bool coprime_with_xq_minus_1(const IntPolynomial& g, u64 q)
{
    return gcd(g, IntPolynomial::x_pow_minus_one(q)).is_constant();
}

bool vanishes_at_root_power(const IntPolynomial& g, u64 root_order, u64 k)
{
    u64 m = root_order / std::gcd(k % root_order, root_order);
    return divmod_monic(g, cyclotomic(m)).remainder.is_zero();
}

CoefficientFacts coefficient_facts(const IntPolynomial& f, u64 p)
{
    CoefficientFacts facts;
    facts.b0 = f.coeff(0);
    facts.b1 = f.coeff(1);
    facts.b_pm1 = f.coeff(p - 1);
    facts.b_p = f.coeff(p);
    facts.b0_ok = facts.b0 == static_cast<unsigned long>(p - 1);
    facts.b1_ok = facts.b1 == static_cast<unsigned long>((p - 1) / 2 + 1);
    facts.b_pm1_zero = facts.b_pm1 == 0;
    facts.b_p_zero = facts.b_p == 0;
    facts.degree_ok = f.degree() <= static_cast<long>(2 * p - 4);
    facts.nonnegative = true;
    auto coeffs = f.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) < 0)
            facts.nonnegative = false;
        if (coeffs[i] == 0 && i != p - 1 && i != p)
            facts.other_zero_degrees.push_back(i);
    }
    return facts;
}

bool is_safe_prime_shape(u64 p)
{
    if (p < 11 || p % 2 == 0)
        return false;
    u64 q = (p - 1) / 2;
    return q % 4 == 1 && is_prime(q) && is_prime(p);
}

std::vector<u64> safe_prime_scan(u64 bound)
{
    std::vector<u64> out;
    for (u64 q = 5; 2 * q + 1 <= bound; q += 4) {
        u64 p = 2 * q + 1;
        if (!is_prime(q) || !is_prime(p))
            continue;
        if (primitive_root(p) != 2)
            throw std::logic_error("safe_prime_scan: 2 is not a primitive root mod " + std::to_string(p));
        out.push_back(p);
    }
    return out;
}

bool EvenObstructionReport::consistent() const
{
    if (!two_is_primitive_root || !divisible_by_plus || !coprime_with_minus)
        return false;
    for (const auto& row : rows)
        if (row.zero != (row.parity == Parity::odd))
            return false;
    return true;
}

EvenObstructionReport even_character_obstruction(u64 p)
{
    if (!is_safe_prime_shape(p))
        throw std::invalid_argument("even_character_obstruction: " + std::to_string(p) +
                                    " is not 2q+1 with q = 1 (mod 4) prime");
    EvenObstructionReport rep;
    rep.p = p;
    rep.q = (p - 1) / 2;
    rep.two_is_primitive_root = primitive_root(p) == 2;
    DirichletCharacter chi = generator_character(p, 2);
    rep.f = f_poly(chi);
    rep.g = reduce_g(rep.f, p);
    rep.facts = coefficient_facts(rep.f, p);
    rep.divisible_by_plus = divisible_by_xq_plus_1(rep.g, rep.q);
    rep.coprime_with_minus = coprime_with_xq_minus_1(rep.g, rep.q);

    std::map<u64, bool> zero_by_order;
    for (u64 k = 0; k < p - 1; ++k) {
        u64 order = (p - 1) / std::gcd(k, p - 1);
        auto it = zero_by_order.find(order);
        if (it == zero_by_order.end())
            it = zero_by_order.emplace(order, vanishes_at_root_power(rep.g, p - 1, k)).first;
        rep.rows.push_back({k, k % 2 == 0 ? Parity::even : Parity::odd, order, it->second});
    }
    return rep;
}

ZeroSum obstruction_sum(const DirichletCharacter& xi)
{
    u64 p = xi.modulus();
    ZeroSum out;
    out.residue = divmod_monic(f_poly(xi), cyclotomic(p - 1)).remainder;
    out.is_zero = out.residue.is_zero();
    out.routes_agree = true;
    if (xi.order_divides_4()) {
        DirichletCharacter bar = xi.conj();
        GaussianRational sum;
        for (u64 j = 1; j < p; ++j)
            sum += delta_coefficient(xi, j) * delta_coefficient(bar, p - j);
        out.exact = sum;
        out.routes_agree = sum.is_zero() == out.is_zero;
    }
    return out;
}

ZeroSum zero_sum_check(const DirichletCharacter& chi)
{
    if (chi.parity() != Parity::odd)
        throw std::invalid_argument("zero_sum_check: character " + chi.label() + " is even");
    return obstruction_sum(chi);
}

}  // namespace farkas
