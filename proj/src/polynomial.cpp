#include "farkas/polynomial.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace farkas {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : c_(std::move(coefficients))
{
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients)
{
    c_.reserve(coefficients.size());
    for (long c : coefficients)
        c_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree)
{
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n)
{
    return monomial(1, n) - IntPolynomial{1};
}

IntPolynomial IntPolynomial::x_pow_plus_one(std::size_t n)
{
    return monomial(1, n) + IntPolynomial{1};
}

void IntPolynomial::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

const mpz_class& IntPolynomial::leading() const
{
    if (c_.empty())
        throw std::domain_error("IntPolynomial: zero polynomial has no leading coefficient");
    return c_.back();
}

mpz_class IntPolynomial::eval(const mpz_class& x) const
{
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpz_class IntPolynomial::content() const
{
    if (c_.empty())
        return 0;
    mpz_class g = 0;
    for (const auto& c : c_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return sgn(c_.back()) < 0 ? mpz_class(-g) : g;
}

IntPolynomial IntPolynomial::primitive_part() const
{
    if (c_.empty())
        return {};
    return divided_exactly(content());
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& s)
{
    for (auto& c : c_)
        c *= s;
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divided_exactly(const mpz_class& s) const
{
    if (s == 0)
        throw std::domain_error("IntPolynomial: division by zero");
    std::vector<mpz_class> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!mpz_divisible_p(c_[i].get_mpz_t(), s.get_mpz_t()))
            throw std::domain_error("IntPolynomial: inexact scalar division");
        mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), s.get_mpz_t());
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::str() const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const mpz_class& c = c_[k];
        if (c == 0)
            continue;
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        mpz_class mag = abs(c);
        if (mag != 1 || k == 0)
            out += mag.get_str() + (k > 0 ? "*" : "");
        if (k >= 1)
            out += "x";
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

PolyDivision divmod_monic(const IntPolynomial& a, const IntPolynomial& divisor)
{
    if (divisor.is_zero() || abs(divisor.leading()) != 1)
        throw std::invalid_argument("divmod_monic: divisor must have leading coefficient +-1");
    long db = divisor.degree();
    std::vector<mpz_class> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<mpz_class> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
    const mpz_class& lc = divisor.leading();
    for (long k = a.degree(); k >= db; --k) {
        mpz_class c = rem[static_cast<std::size_t>(k)] * lc;  // lc = +-1 is its own inverse
        if (c == 0)
            continue;
        quot[static_cast<std::size_t>(k - db)] = c;
        for (long i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(k - db + i)] -= c * divisor.coeff(static_cast<std::size_t>(i));
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("pseudo_remainder: zero divisor");
    if (a.degree() < b.degree())
        return a;
    long db = b.degree();
    long steps = a.degree() - db + 1;
    const mpz_class& lc = b.leading();
    IntPolynomial r = a;
    long used = 0;
    while (!r.is_zero() && r.degree() >= db) {
        IntPolynomial shifted = IntPolynomial::monomial(r.leading(), static_cast<std::size_t>(r.degree() - db)) * b;
        r = r * lc - shifted;
        ++used;
    }
    for (; used < steps; ++used)
        r *= lc;
    return r;
}

IntPolynomial gcd(const IntPolynomial& a_in, const IntPolynomial& b_in)
{
    IntPolynomial a = a_in;
    IntPolynomial b = b_in;
    if (a.degree() < b.degree())
        std::swap(a, b);
    if (b.is_zero())
        return a.primitive_part();

    a = a.primitive_part();
    b = b.primitive_part();

    // Subresultant PRS: every division below is exact.
    mpz_class g = 1;
    mpz_class h = 1;
    for (;;) {
        long delta = a.degree() - b.degree();
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero())
            break;
        if (r.degree() == 0) {
            b = IntPolynomial{1};
            break;
        }
        mpz_class h_pow;
        mpz_pow_ui(h_pow.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        a = std::move(b);
        b = r.divided_exactly(g * h_pow);
        g = a.leading();
        if (delta > 0) {
            // h <- g^delta / h^(delta - 1)
            mpz_class g_pow, h_prev;
            mpz_pow_ui(g_pow.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(h_prev.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), g_pow.get_mpz_t(), h_prev.get_mpz_t());
        }
    }
    // gcd over Q: integer content is irrelevant
    return b.primitive_part();
}

IntPolynomial cyclotomic(u64 n)
{
    if (n == 0)
        throw std::invalid_argument("cyclotomic: n must be positive");
    std::map<u64, IntPolynomial> known;
    for (u64 d : divisors(n)) {
        IntPolynomial phi = IntPolynomial::x_pow_minus_one(d);
        for (auto& [e, phi_e] : known)
            if (d % e == 0)
                phi = divmod_monic(phi, phi_e).quotient;
        known.emplace(d, std::move(phi));
    }
    return known.at(n);
}

}  // namespace farkas
