#pragma once

// Farkas-type convolution identities for quartic characters: exact
// verification sweeps, the finite searches that rule out p > 13, empirical
// ratio checks, and identities with user-supplied coefficient sets.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "farkas/character.hpp"
#include "farkas/qseries.hpp"

namespace farkas {

struct IdentityConstants {
    Rational alpha;                // |delta(0)|^2 / sigma'(0)
    GaussianRational alpha_prime;  // delta(0)^2 / sigma~(0)
    GaussianRational beta_prime;   // 2 delta(0) - alpha'
};

/// Requires a quartic character modulo p = 5 (mod 8).
IdentityConstants constants_for(const DirichletCharacter& chi);

struct Failure {
    u64 n;
    GaussianRational lhs;
    GaussianRational rhs;
    friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
    u64 p = 0;
    std::string character;
    std::string kind;  // conv | square | farkas | configured
    u64 nmax = 0;
    std::optional<Failure> failure;
    long long elapsed_ms = 0;

    bool passed() const noexcept { return !failure; }
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// First n in [first, nmax] with lhs(n) != rhs(n), if any.
std::optional<Failure> first_mismatch(const QSeries& lhs, const QSeries& rhs, u64 first = 0);

/// F_chi(n) == alpha sigma'_p(n) for 0 <= n <= nmax.
VerificationReport verify_id1(u64 p, u64 nmax, CharacterSelector sel = CharacterSelector::quartic_i);

/// H_chi(n) == alpha' sigma~_p(n) + beta' sigma^_p(n) for 0 <= n <= nmax.
VerificationReport verify_id2(u64 p, CharacterSelector sel, u64 nmax);

/// sum_{j=0}^n delta_F(j) delta_F(n-j) == sigma'_3(n)/3 with delta_F(0) = 1/6
/// and sigma'_3(0) = 1/12.
VerificationReport verify_farkas(u64 nmax);

enum class ResidualKind {
    conv,         // F - alpha sigma'
    square,       // H - alpha' sigma~  (leaves gamma sigma^ + cusp part)
    square_full,  // H - alpha' sigma~ - beta' sigma^
};

QSeries residual_series(const DirichletCharacter& chi, ResidualKind kind, u64 order);

enum class IdentityKind { conv, square };

const char* to_string(IdentityKind kind);
IdentityKind parse_identity_kind(const std::string& name);

struct RatioRow {
    u64 n;
    int kron;
    GaussianRational lhs;
    GaussianRational rhs;
    GaussianRational ratio;
};

struct AsymptoticReport {
    u64 p;
    IdentityKind kind;
    u64 nmax;
    std::vector<RatioRow> rows;  // 1 <= n <= nmax, p does not divide n
    u64 decile_start;            // rows with n >= decile_start form the top decile

    // conv: alpha and max |ratio - alpha| over the top decile
    Rational alpha;
    Rational max_deviation;

    // square: mean ratios over the top decile for (p/n) = +1 and -1
    GaussianRational alpha_prime;
    GaussianRational limit_plus;
    GaussianRational limit_minus;
    GaussianRational gamma;               // (L+ - L-)/2
    GaussianRational alpha_prime_check;   // (L+ + L-)/2
};

AsymptoticReport asymptotic_report(const DirichletCharacter& chi, IdentityKind kind, u64 nmax);

/// max |F(n)/sigma'(n) - alpha| over lo <= n <= hi with p not dividing n.
Rational max_ratio_deviation(const DirichletCharacter& chi, u64 lo, u64 hi);

enum class RhsKind { sigma_prime, tilde_hat };

struct ConfiguredTerm {
    GaussianRational a;
    u64 b;
    u64 c;
};

/// sum_i A_i L(n C_i / B_i) == rhs(n) for n >= 1, L = F_chi for sigma_prime
/// and H_chi for tilde_hat; terms with B_i not dividing n are dropped.
struct ConfiguredIdentity {
    u64 p = 0;
    CharacterSelector chi = CharacterSelector::quartic_i;
    std::vector<ConfiguredTerm> terms;
    RhsKind rhs_kind = RhsKind::sigma_prime;
    std::vector<GaussianRational> rhs;  // one for sigma_prime, two (tilde, hat) for tilde_hat

    /// Throws std::invalid_argument describing the first problem found.
    void validate() const;
};

VerificationReport check_configured_identity(const ConfiguredIdentity& cfg, u64 nmax);

/// The (p1, p2) identity for p = 37 with p1 in {2, 5}, p2 in {17, 19}.
ConfiguredIdentity p37_identity(u64 p1, u64 p2);

struct DiscriminantCandidate {
    u64 a;      // larger factor of 720
    u64 b;      // smaller factor
    i64 p;      // (a+b)/2 - 23
    u64 x;      // (a-b)/2
    bool admissible;  // p prime and p = 5 (mod 8)
};

struct DiscriminantSearch {
    std::vector<DiscriminantCandidate> candidates;  // all same-parity factor pairs
    std::vector<u64> primes;                        // admissible p, increasing
};

/// Rational roots of 30R^2 - (p+23)R + 6 need (p+23)^2 - 720 = x^2, i.e. a
/// factorization 720 = (p+23+x)(p+23-x).
DiscriminantSearch discriminant_search();

struct Id1Obstruction {
    u64 p;
    Rational re_l;         // Re L, L = 2 delta(0)
    Rational im_l;         // Im L for the chi(2) = +i character
    bool n1_holds;         // (p-1)/6 Re L = |L|^2
    bool n2_holds;         // (p-1)/18 (Re L +- Im L + 1) = |L|^2, both characters
    bool quadratic_root;   // 30R^2 - (p+23)R + 6 = 0 at R = Re L
    bool consistent() const noexcept { return n1_holds && n2_holds; }
};

Id1Obstruction obstruction_id1(u64 p);

struct Id2Branch {
    GaussianRational chi3;
    std::optional<GaussianRational> implied_delta;  // empty: no unique solution
    std::optional<GaussianRational> implied_b;
    bool screened;  // implied B rational and in {4/5, 4} or <= 4
};

struct Id2Obstruction {
    u64 p;
    GaussianRational chi2;
    GaussianRational chi3;
    GaussianRational delta0;
    Rational b2psi;
    std::array<Id2Branch, 4> branches;  // chi(3) = 1, -1, i, -i
    bool n2_holds;  // delta0^2 / (-B/4) = -chi(2) delta0 - 1/2
    bool n3_holds;
    bool screen_match;  // actual chi(3) branch passes the screen and reproduces delta0 and B
    bool accepted() const noexcept { return n2_holds && n3_holds; }
};

Id2Obstruction obstruction_id2(u64 p, CharacterSelector sel = CharacterSelector::quartic_i);

}  // namespace farkas
