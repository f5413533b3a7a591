#include "farkas/identities.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "farkas/parallel.hpp"

namespace farkas {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_since(Clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void require_quartic(const DirichletCharacter& chi)
{
    if (chi.modulus() % 8 != 5 || chi.order() != 4)
        throw std::invalid_argument("expected a quartic character modulo a prime = 5 (mod 8), got " + chi.label());
}

QSeries conv_lhs(const DirichletCharacter& chi, u64 order)
{
    return Convolution(delta_series(chi, order), delta_series(chi.conj(), order)).series();
}

QSeries square_lhs(const DirichletCharacter& chi, u64 order)
{
    QSeries d = delta_series(chi, order);
    return Convolution(d, d).series();
}

QSeries id2_rhs(const DirichletCharacter& chi, const IdentityConstants& k, u64 order)
{
    u64 p = chi.modulus();
    return k.alpha_prime * sigma_tilde_series(p, order) + k.beta_prime * sigma_hat_series(p, order);
}

}  // namespace

IdentityConstants constants_for(const DirichletCharacter& chi)
{
    require_quartic(chi);
    u64 p = chi.modulus();
    GaussianRational d0 = delta_constant(chi);
    Rational sigma_prime0(static_cast<long>(p - 1), 24);
    Rational sigma_tilde0 = -bernoulli_B2_psi(p) / Rational(4);
    IdentityConstants k;
    k.alpha = d0.norm_sq() / sigma_prime0;
    k.alpha_prime = d0 * d0 / GaussianRational(sigma_tilde0);
    k.beta_prime = GaussianRational(2) * d0 - k.alpha_prime;
    return k;
}

std::optional<Failure> first_mismatch(const QSeries& lhs, const QSeries& rhs, u64 first)
{
    u64 last = std::min(lhs.order(), rhs.order());
    for (u64 n = first; n <= last; ++n)
        if (lhs[n] != rhs[n])
            return Failure{n, lhs[n], rhs[n]};
    return std::nullopt;
}

VerificationReport verify_id1(u64 p, u64 nmax, CharacterSelector sel)
{
    auto start = Clock::now();
    DirichletCharacter chi = select_character(p, sel);
    IdentityConstants k = constants_for(chi);
    VerificationReport r{p, to_string(sel), "conv", nmax, std::nullopt, 0};
    r.failure = first_mismatch(conv_lhs(chi, nmax), GaussianRational(k.alpha) * sigma_prime_series(p, nmax));
    r.elapsed_ms = elapsed_since(start);
    return r;
}

VerificationReport verify_id2(u64 p, CharacterSelector sel, u64 nmax)
{
    auto start = Clock::now();
    DirichletCharacter chi = select_character(p, sel);
    IdentityConstants k = constants_for(chi);
    VerificationReport r{p, to_string(sel), "square", nmax, std::nullopt, 0};
    r.failure = first_mismatch(square_lhs(chi, nmax), id2_rhs(chi, k, nmax));
    r.elapsed_ms = elapsed_since(start);
    return r;
}

VerificationReport verify_farkas(u64 nmax)
{
    auto start = Clock::now();
    DirichletCharacter chi = DirichletCharacter::quadratic(3);
    VerificationReport r{3, "quadratic", "farkas", nmax, std::nullopt, 0};
    r.failure = first_mismatch(square_lhs(chi, nmax), GaussianRational(Rational(1, 3)) * sigma_prime_series(3, nmax));
    r.elapsed_ms = elapsed_since(start);
    return r;
}

QSeries residual_series(const DirichletCharacter& chi, ResidualKind kind, u64 order)
{
    IdentityConstants k = constants_for(chi);
    u64 p = chi.modulus();
    switch (kind) {
    case ResidualKind::conv:
        return conv_lhs(chi, order) - GaussianRational(k.alpha) * sigma_prime_series(p, order);
    case ResidualKind::square:
        return square_lhs(chi, order) - k.alpha_prime * sigma_tilde_series(p, order);
    case ResidualKind::square_full:
        return square_lhs(chi, order) - id2_rhs(chi, k, order);
    }
    throw std::invalid_argument("residual_series: bad kind");
}

const char* to_string(IdentityKind kind)
{
    return kind == IdentityKind::conv ? "conv" : "square";
}

IdentityKind parse_identity_kind(const std::string& name)
{
    if (name == "conv")
        return IdentityKind::conv;
    if (name == "square")
        return IdentityKind::square;
    throw std::invalid_argument("unknown identity kind '" + name + "'");
}

AsymptoticReport asymptotic_report(const DirichletCharacter& chi, IdentityKind kind, u64 nmax)
{
    IdentityConstants k = constants_for(chi);
    u64 p = chi.modulus();
    AsymptoticReport rep;
    rep.p = p;
    rep.kind = kind;
    rep.nmax = nmax;
    rep.decile_start = nmax - nmax / 10;
    rep.alpha = k.alpha;
    rep.alpha_prime = k.alpha_prime;

    QSeries lhs = kind == IdentityKind::conv ? conv_lhs(chi, nmax) : square_lhs(chi, nmax);
    QSeries rhs = kind == IdentityKind::conv ? sigma_prime_series(p, nmax) : sigma_tilde_series(p, nmax);

    GaussianRational sum_plus, sum_minus;
    long count_plus = 0, count_minus = 0;
    for (u64 n = 1; n <= nmax; ++n) {
        if (n % p == 0)
            continue;
        if (rhs[n].is_zero())
            throw std::logic_error("asymptotic_report: vanishing right-hand side at n = " + std::to_string(n));
        RatioRow row{n, kronecker(p, static_cast<i64>(n)), lhs[n], rhs[n], lhs[n] / rhs[n]};
        if (n >= rep.decile_start) {
            if (kind == IdentityKind::conv) {
                Rational dev = (row.ratio.re() - k.alpha).abs();
                if (dev > rep.max_deviation)
                    rep.max_deviation = dev;
            } else if (row.kron > 0) {
                sum_plus += row.ratio;
                ++count_plus;
            } else {
                sum_minus += row.ratio;
                ++count_minus;
            }
        }
        rep.rows.push_back(std::move(row));
    }
    if (kind == IdentityKind::square) {
        if (count_plus > 0)
            rep.limit_plus = sum_plus / GaussianRational(count_plus);
        if (count_minus > 0)
            rep.limit_minus = sum_minus / GaussianRational(count_minus);
        GaussianRational half(Rational(1, 2));
        rep.gamma = (rep.limit_plus - rep.limit_minus) * half;
        rep.alpha_prime_check = (rep.limit_plus + rep.limit_minus) * half;
    }
    return rep;
}

Rational max_ratio_deviation(const DirichletCharacter& chi, u64 lo, u64 hi)
{
    IdentityConstants k = constants_for(chi);
    u64 p = chi.modulus();
    QSeries lhs = conv_lhs(chi, hi);
    QSeries rhs = sigma_prime_series(p, hi);
    Rational worst;
    for (u64 n = std::max<u64>(lo, 1); n <= hi; ++n) {
        if (n % p == 0)
            continue;
        Rational dev = (lhs[n].re() / rhs[n].re() - k.alpha).abs();
        if (dev > worst)
            worst = dev;
    }
    return worst;
}

void ConfiguredIdentity::validate() const
{
    if (!is_prime(p) || p % 8 != 5)
        throw std::invalid_argument("config: p = " + std::to_string(p) + " is not a prime = 5 (mod 8)");
    DirichletCharacter c = select_character(p, chi);
    if (c.order() != 4)
        throw std::invalid_argument("config: selected character " + c.label() + " is not quartic");
    if (terms.empty())
        throw std::invalid_argument("config: terms must not be empty");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].b < 1 || terms[i].c < 1)
            throw std::invalid_argument("config: terms[" + std::to_string(i) + "]: B and C must be >= 1");
    }
    std::size_t want = rhs_kind == RhsKind::sigma_prime ? 1 : 2;
    if (rhs.size() != want)
        throw std::invalid_argument("config: rhs needs " + std::to_string(want) + " coefficient(s), got " +
                                    std::to_string(rhs.size()));
}

VerificationReport check_configured_identity(const ConfiguredIdentity& cfg, u64 nmax)
{
    auto start = Clock::now();
    cfg.validate();
    DirichletCharacter chi = select_character(cfg.p, cfg.chi);
    u64 reach = 0;
    for (const auto& t : cfg.terms)
        reach = std::max(reach, nmax / t.b * t.c);

    QSeries d = delta_series(chi, reach);
    Convolution kernel = cfg.rhs_kind == RhsKind::sigma_prime
                             ? Convolution(d, delta_series(chi.conj(), reach))
                             : Convolution(d, d);
    QSeries rhs = cfg.rhs_kind == RhsKind::sigma_prime
                      ? cfg.rhs[0] * sigma_prime_series(cfg.p, nmax)
                      : cfg.rhs[0] * sigma_tilde_series(cfg.p, nmax) + cfg.rhs[1] * sigma_hat_series(cfg.p, nmax);

    QSeries lhs(nmax);
    parallel_for(1, nmax + 1, [&](std::size_t lo, std::size_t hi) {
        for (u64 n = lo; n < hi; ++n) {
            GaussianRational sum;
            for (const auto& t : cfg.terms)
                if (n % t.b == 0)
                    sum += t.a * kernel.coefficient(n / t.b * t.c);
            lhs[n] = std::move(sum);
        }
    }, 16);

    VerificationReport r{cfg.p, to_string(cfg.chi), "configured", nmax, std::nullopt, 0};
    r.failure = first_mismatch(lhs, rhs, 1);
    r.elapsed_ms = elapsed_since(start);
    return r;
}

ConfiguredIdentity p37_identity(u64 p1, u64 p2)
{
    if ((p1 != 2 && p1 != 5) || (p2 != 17 && p2 != 19))
        throw std::invalid_argument("p37_identity: need p1 in {2,5} and p2 in {17,19}");
    ConfiguredIdentity cfg;
    cfg.p = 37;
    cfg.chi = CharacterSelector::quartic_i;
    cfg.terms = {
        {GaussianRational(1), 1, p1 * p2},
        {GaussianRational(p1), p1, p2},
        {GaussianRational(p2), p2, p1},
        {GaussianRational(p1 * p2), p1 * p2, 1},
    };
    cfg.rhs_kind = RhsKind::sigma_prime;
    cfg.rhs = {GaussianRational(Rational(static_cast<long>(1 + p1 + p2 + p1 * p2), 3))};
    return cfg;
}

DiscriminantSearch discriminant_search()
{
    constexpr u64 product = 720;
    DiscriminantSearch out;
    for (u64 b = 1; b * b <= product; ++b) {
        if (product % b != 0)
            continue;
        u64 a = product / b;
        if (a == b || (a - b) % 2 != 0)
            continue;
        i64 p = static_cast<i64>((a + b) / 2) - 23;
        bool admissible = p > 0 && is_prime(static_cast<u64>(p)) && p % 8 == 5;
        out.candidates.push_back({a, b, p, (a - b) / 2, admissible});
        if (admissible)
            out.primes.push_back(static_cast<u64>(p));
    }
    std::sort(out.primes.begin(), out.primes.end());
    return out;
}

Id1Obstruction obstruction_id1(u64 p)
{
    auto [chi, chibar] = quartic_pair(p);
    Id1Obstruction ob;
    ob.p = p;
    GaussianRational l = GaussianRational(2) * delta_constant(chi);
    ob.re_l = l.re();
    ob.im_l = l.im();
    Rational norm = l.norm_sq();
    Rational pm1(static_cast<long>(p - 1));
    ob.n1_holds = pm1 / Rational(6) * ob.re_l == norm;

    // n = 2 for each character: the sign is Im chi(2), and L is conjugated
    // for the second character.
    ob.n2_holds = true;
    for (const auto* c : {&chi, &chibar}) {
        GaussianRational lc = GaussianRational(2) * delta_constant(*c);
        Rational s = c->value(2).gaussian().im();
        if (pm1 / Rational(18) * (lc.re() + s * lc.im() + Rational(1)) != lc.norm_sq())
            ob.n2_holds = false;
    }
    Rational r = ob.re_l;
    ob.quadratic_root = Rational(30) * r * r - Rational(static_cast<long>(p + 23)) * r + Rational(6) == Rational(0);
    return ob;
}

Id2Obstruction obstruction_id2(u64 p, CharacterSelector sel)
{
    DirichletCharacter chi = select_character(p, sel);
    if (chi.order() != 4)
        throw std::invalid_argument("obstruction_id2: needs a quartic character");
    Id2Obstruction ob;
    ob.p = p;
    ob.chi2 = chi.value(2).gaussian();
    ob.chi3 = chi.value(3).gaussian();
    ob.delta0 = delta_constant(chi);
    ob.b2psi = bernoulli_B2_psi(p);

    const GaussianRational& s = ob.chi2;
    const GaussianRational one(1), two(2), half(Rational(1, 2));
    const GaussianRational i = GaussianRational::i();

    const std::array<GaussianRational, 4> chi3_values{one, -one, i, -i};
    for (std::size_t k = 0; k < 4; ++k) {
        Id2Branch br;
        br.chi3 = chi3_values[k];
        GaussianRational psi3 = br.chi3 * br.chi3;
        // Linear equation in delta from n = 3 after eliminating alpha', beta' via n = 0, 1, 2.
        GaussianRational coef = two * br.chi3 - GaussianRational(4) - two * psi3 - two * s + two * s * psi3;
        GaussianRational rhs = -one - psi3 - two * s;
        if (!coef.is_zero()) {
            br.implied_delta = rhs / coef;
            GaussianRational denom = s * *br.implied_delta + half;
            if (!denom.is_zero())
                br.implied_b = GaussianRational(4) * *br.implied_delta * *br.implied_delta / denom;
        }
        br.screened = br.implied_b && br.implied_b->is_real() &&
                      (br.implied_b->re() == Rational(4, 5) || br.implied_b->re() == Rational(4) ||
                       br.implied_b->re() <= Rational(4));
        ob.branches[k] = std::move(br);
    }

    const GaussianRational& d0 = ob.delta0;
    GaussianRational tilde0(-ob.b2psi / Rational(4));
    GaussianRational alpha_prime = d0 * d0 / tilde0;
    ob.n2_holds = alpha_prime == -s * d0 - half;
    GaussianRational psi3 = ob.chi3 * ob.chi3;
    GaussianRational lhs3 = two * (one + ob.chi3) * d0 + two * (one + s);
    GaussianRational rhs3 = alpha_prime * (one + GaussianRational(3) * psi3) + (two * d0 - alpha_prime) * (GaussianRational(3) + psi3);
    ob.n3_holds = lhs3 == rhs3;

    ob.screen_match = false;
    for (const auto& br : ob.branches) {
        if (br.chi3 != ob.chi3)
            continue;
        ob.screen_match = br.screened && br.implied_delta && *br.implied_delta == d0 && br.implied_b &&
                          *br.implied_b == GaussianRational(ob.b2psi);
    }
    return ob;
}

}  // namespace farkas
