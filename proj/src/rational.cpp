#include "farkas/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace farkas {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v))
{
    if (v_.get_den() == 0)
        throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text)
{
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return Rational(n, d);
}

std::string Rational::decimal(int places) const
{
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    mpz_class num = ::abs(v_.get_num()) * scale;
    const mpz_class& den = v_.get_den();
    // round half away from zero
    mpz_class q = (2 * num + den) / (2 * den);
    std::string digits = q.get_str();
    if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    std::string out;
    if (sign() < 0 && q != 0)
        out.push_back('-');
    out.append(digits, 0, digits.size() - static_cast<std::size_t>(places));
    if (places > 0) {
        out.push_back('.');
        out.append(digits, digits.size() - static_cast<std::size_t>(places), std::string::npos);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    Rational n = o.norm_sq();
    if (n.is_zero())
        throw std::domain_error("GaussianRational: division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::str() const
{
    std::string out = re_.str();
    out.push_back(im_.sign() < 0 ? '-' : '+');
    out += im_.abs().str();
    out.push_back('i');
    return out;
}

GaussianRational GaussianRational::parse(std::string_view text)
{
    std::string_view s = trim(text);
    if (auto comma = s.find(','); comma != std::string_view::npos)
        return {Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1))};
    if (s.empty() || s.back() != 'i')
        return {Rational::parse(s), 0};
    s.remove_suffix(1);
    auto sep = s.find_last_of("+-");
    if (sep == std::string_view::npos || sep == 0)
        return {0, Rational::parse(s)};
    return {Rational::parse(s.substr(0, sep)), Rational::parse(s.substr(sep))};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z)
{
    return os << z.str();
}

}  // namespace farkas
