#pragma once

// Dirichlet characters modulo an odd prime, stored as a single exponent
// against a fixed generator: chi(g) = zeta^e with zeta = exp(2 pi i/(p-1)).

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "farkas/arith.hpp"
#include "farkas/rational.hpp"

namespace farkas {

enum class Parity { even, odd };

const char* to_string(Parity parity);

/// A value chi(a): zero when p | a, otherwise zeta^exponent with zeta a
/// primitive (p-1)-th root of unity.
class UnitValue {
public:
    static UnitValue zero(u64 root_order) { return UnitValue(root_order, 0, true); }
    static UnitValue root(u64 root_order, u64 exponent) { return UnitValue(root_order, exponent % root_order, false); }

    bool is_zero() const noexcept { return zero_; }
    u64 root_order() const noexcept { return order_; }
    /// Exponent t with value zeta^t; meaningless when is_zero().
    u64 exponent() const noexcept { return t_; }

    /// The value as an element of Q(i), if it lies there (0, +-1, +-i).
    std::optional<GaussianRational> exact() const;
    /// As exact(), but throws std::domain_error when the value is not in Q(i).
    GaussianRational gaussian() const;

    friend UnitValue operator*(const UnitValue& a, const UnitValue& b);
    friend bool operator==(const UnitValue&, const UnitValue&) = default;

private:
    UnitValue(u64 order, u64 t, bool zero) : order_(order), t_(t), zero_(zero) {}

    u64 order_;
    u64 t_;
    bool zero_;
};

class DirichletCharacter {
public:
    /// chi(g) = zeta^exponent for the generator of `table`.
    DirichletCharacter(std::shared_ptr<const DiscreteLogTable> table, u64 exponent);

    /// Character against the smallest primitive root of p.
    static DirichletCharacter from_exponent(u64 p, u64 exponent);
    static DirichletCharacter trivial(u64 p) { return from_exponent(p, 0); }
    /// The quadratic character a -> (a/p), which equals (p/a) for p = 1 mod 4.
    static DirichletCharacter quadratic(u64 p);

    u64 modulus() const noexcept { return table_->modulus(); }
    u64 generator() const noexcept { return table_->generator(); }
    u64 exponent() const noexcept { return e_; }
    const DiscreteLogTable& logs() const noexcept { return *table_; }

    /// (p-1)/gcd(e, p-1).
    u64 order() const;
    Parity parity() const noexcept { return e_ % 2 == 0 ? Parity::even : Parity::odd; }
    bool is_trivial() const noexcept { return e_ == 0; }
    bool order_divides_4() const { return 4 % order() == 0; }

    UnitValue value(i64 a) const;
    /// t(chi, d) in [0, p-2] with chi(d) = zeta^t. Throws if p | d.
    u64 t_exponent(i64 d) const;

    DirichletCharacter power(u64 k) const;
    DirichletCharacter conj() const;

    /// Same character (same values), independent of the generator used.
    bool same_as(const DirichletCharacter& other) const;

    /// e.g. "chi[p=13,g=2,e=3]".
    std::string label() const;

private:
    std::shared_ptr<const DiscreteLogTable> table_;
    u64 e_;
};

/// The two characters of exact order 4 modulo p = 5 (mod 8), labelled so
/// that first(2) = +i and second = conj(first). Throws otherwise.
std::pair<DirichletCharacter, DirichletCharacter> quartic_pair(u64 p);

/// Character with chi(g) = zeta for the given generator g. Throws if g is
/// not a primitive root mod p.
DirichletCharacter generator_character(u64 p, u64 g);

enum class CharacterSelector { quartic_i, quartic_minus_i, generator };

const char* to_string(CharacterSelector sel);
/// Throws std::invalid_argument on an unknown name.
CharacterSelector parse_selector(const std::string& name);

/// quartic_i / quartic_minus_i pick from quartic_pair(p); generator uses the
/// smallest primitive root.
DirichletCharacter select_character(u64 p, CharacterSelector sel);

}  // namespace farkas
