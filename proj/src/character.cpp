#include "farkas/character.hpp"

#include <numeric>
#include <stdexcept>

namespace farkas {

const char* to_string(Parity parity)
{
    return parity == Parity::even ? "even" : "odd";
}

std::optional<GaussianRational> UnitValue::exact() const
{
    if (zero_)
        return GaussianRational(0);
    if ((4 * t_) % order_ != 0)
        return std::nullopt;
    switch ((4 * t_) / order_) {
    case 0:
        return GaussianRational(1);
    case 1:
        return GaussianRational::i();
    case 2:
        return GaussianRational(-1);
    default:
        return -GaussianRational::i();
    }
}

GaussianRational UnitValue::gaussian() const
{
    auto v = exact();
    if (!v)
        throw std::domain_error("UnitValue: zeta^" + std::to_string(t_) + " of order " + std::to_string(order_) +
                                " is not in Q(i)");
    return *v;
}

UnitValue operator*(const UnitValue& a, const UnitValue& b)
{
    if (a.order_ != b.order_)
        throw std::invalid_argument("UnitValue: mismatched root orders");
    if (a.zero_ || b.zero_)
        return UnitValue::zero(a.order_);
    return UnitValue::root(a.order_, a.t_ + b.t_);
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const DiscreteLogTable> table, u64 exponent)
    : table_(std::move(table)), e_(0)
{
    if (!table_)
        throw std::invalid_argument("DirichletCharacter: null log table");
    e_ = exponent % (table_->modulus() - 1);
}

DirichletCharacter DirichletCharacter::from_exponent(u64 p, u64 exponent)
{
    return DirichletCharacter(std::make_shared<const DiscreteLogTable>(p, primitive_root(p)), exponent);
}

DirichletCharacter DirichletCharacter::quadratic(u64 p)
{
    return from_exponent(p, (p - 1) / 2);
}

u64 DirichletCharacter::order() const
{
    u64 m = modulus() - 1;
    return m / std::gcd(e_, m);
}

UnitValue DirichletCharacter::value(i64 a) const
{
    u64 m = modulus() - 1;
    if (reduce_mod(a, modulus()) == 0)
        return UnitValue::zero(m);
    return UnitValue::root(m, static_cast<u64>((static_cast<unsigned __int128>(e_) * table_->log(a)) % m));
}

u64 DirichletCharacter::t_exponent(i64 d) const
{
    if (reduce_mod(d, modulus()) == 0)
        throw std::domain_error("t_exponent: argument divisible by the modulus");
    return value(d).exponent();
}

DirichletCharacter DirichletCharacter::power(u64 k) const
{
    u64 m = modulus() - 1;
    return DirichletCharacter(table_, static_cast<u64>((static_cast<unsigned __int128>(e_) * k) % m));
}

DirichletCharacter DirichletCharacter::conj() const
{
    u64 m = modulus() - 1;
    return DirichletCharacter(table_, (m - e_) % m);
}

bool DirichletCharacter::same_as(const DirichletCharacter& other) const
{
    if (modulus() != other.modulus())
        return false;
    auto g = static_cast<i64>(generator());
    return t_exponent(g) == other.t_exponent(g);
}

std::string DirichletCharacter::label() const
{
    return "chi[p=" + std::to_string(modulus()) + ",g=" + std::to_string(generator()) + ",e=" + std::to_string(e_) +
           "]";
}

std::pair<DirichletCharacter, DirichletCharacter> quartic_pair(u64 p)
{
    if (p % 8 != 5 || !is_prime(p))
        throw std::invalid_argument("quartic_pair: " + std::to_string(p) + " is not a prime = 5 (mod 8)");
    auto table = std::make_shared<const DiscreteLogTable>(p, primitive_root(p));
    u64 quarter = (p - 1) / 4;
    DirichletCharacter chi(table, quarter);
    // chi(2) is +-i because (p/2) = -1; pick the one with chi(2) = +i.
    if (chi.value(2).gaussian() != GaussianRational::i())
        chi = chi.conj();
    return {chi, chi.conj()};
}

DirichletCharacter generator_character(u64 p, u64 g)
{
    auto table = std::make_shared<const DiscreteLogTable>(p, g);
    return DirichletCharacter(table, 1);
}

const char* to_string(CharacterSelector sel)
{
    switch (sel) {
    case CharacterSelector::quartic_i:
        return "quartic-i";
    case CharacterSelector::quartic_minus_i:
        return "quartic-minus-i";
    case CharacterSelector::generator:
        return "generator";
    }
    return "?";
}

CharacterSelector parse_selector(const std::string& name)
{
    if (name == "quartic-i")
        return CharacterSelector::quartic_i;
    if (name == "quartic-minus-i")
        return CharacterSelector::quartic_minus_i;
    if (name == "generator")
        return CharacterSelector::generator;
    throw std::invalid_argument("unknown character selector '" + name + "'");
}

DirichletCharacter select_character(u64 p, CharacterSelector sel)
{
    switch (sel) {
    case CharacterSelector::quartic_i:
        return quartic_pair(p).first;
    case CharacterSelector::quartic_minus_i:
        return quartic_pair(p).second;
    case CharacterSelector::generator:
        return generator_character(p, primitive_root(p));
    }
    throw std::invalid_argument("select_character: bad selector");
}

}  // namespace farkas
