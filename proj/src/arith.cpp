#include "farkas/arith.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace farkas {

namespace {

u64 mul_mod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

void require_positive(u64 n, const char* what)
{
    if (n == 0)
        throw std::invalid_argument(std::string(what) + ": argument must be positive");
}

void require_odd_prime(u64 p, const char* what)
{
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) + " is not an odd prime");
}

}  // namespace

std::vector<u64> divisors(u64 n)
{
    require_positive(n, "divisors");
    std::vector<u64> small;
    std::vector<u64> large;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        small.push_back(d);
        if (d != n / d)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

u64 divisor_count(u64 n)
{
    u64 count = 1;
    for (auto [prime, exp] : factorize(n))
        count *= exp + 1;
    return count;
}

u64 sigma1(u64 n)
{
    require_positive(n, "sigma1");
    u64 total = 1;
    for (auto [prime, exp] : factorize(n)) {
        u64 term = 1;
        u64 power = 1;
        for (unsigned k = 0; k < exp; ++k) {
            power *= prime;
            term += power;
        }
        total *= term;
    }
    return total;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n)
{
    require_positive(n, "factorize");
    std::vector<std::pair<u64, unsigned>> out;
    auto strip = [&](u64 d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0)
            out.emplace_back(d, e);
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel
    for (u64 d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

unsigned omega(u64 n)
{
    return static_cast<unsigned>(factorize(n).size());
}

u64 pow_mod(u64 base, u64 exp, u64 mod)
{
    u64 result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

u64 reduce_mod(i64 a, u64 m)
{
    if (a >= 0)
        return static_cast<u64>(a) % m;
    u64 r = static_cast<u64>(-(a + 1)) % m;  // avoids overflow at INT64_MIN
    return m - 1 - r;
}

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // These witnesses are deterministic below 3.3e24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

int kronecker(u64 p, i64 n)
{
    require_odd_prime(p, "kronecker");
    static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    i64 a = static_cast<i64>(p);
    i64 b = n;
    if (b == 0)
        return 0;  // |a| = p > 1
    int k;
    unsigned v = 0;
    while ((b & 1) == 0) {
        ++v;
        b /= 2;
    }
    k = (v % 2 == 0) ? 1 : tab2[a & 7];
    if (b < 0)
        b = -b;  // a > 0, so no sign flip
    // b odd and positive from here on
    for (;;) {
        if (a == 0)
            return b > 1 ? 0 : k;
        v = 0;
        while ((a & 1) == 0) {
            ++v;
            a /= 2;
        }
        if (v % 2 == 1)
            k *= tab2[b & 7];
        if (a & b & 2)
            k = -k;
        i64 r = a < 0 ? -a : a;
        a = b % r;
        b = r;
    }
}

u64 primitive_root(u64 p)
{
    require_odd_prime(p, "primitive_root");
    auto factors = factorize(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool generates = true;
        for (auto [r, e] : factors) {
            if (pow_mod(g, (p - 1) / r, p) == 1) {
                generates = false;
                break;
            }
        }
        if (generates)
            return g;
    }
    throw std::logic_error("primitive_root: no generator found");
}

DiscreteLogTable::DiscreteLogTable(u64 p, u64 g) : p_(p), g_(g % p)
{
    require_odd_prime(p, "DiscreteLogTable");
    if (p > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("DiscreteLogTable: modulus too large for a table");
    log_.assign(p, std::numeric_limits<std::uint32_t>::max());
    pow_.resize(p - 1);
    u64 x = 1;
    for (u64 k = 0; k < p - 1; ++k) {
        if (log_[x] != std::numeric_limits<std::uint32_t>::max())
            throw std::invalid_argument("DiscreteLogTable: " + std::to_string(g) + " is not a primitive root mod " +
                                        std::to_string(p));
        log_[x] = static_cast<std::uint32_t>(k);
        pow_[k] = static_cast<std::uint32_t>(x);
        x = mul_mod(x, g_, p);
    }
}

u64 DiscreteLogTable::log(i64 a) const
{
    u64 r = reduce_mod(a, p_);
    if (r == 0)
        throw std::domain_error("DiscreteLogTable::log: argument divisible by the modulus");
    return log_[r];
}

}  // namespace farkas
