#include "zdg/modring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zdg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod_u(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod_u(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod_u(r, a, m);
        a = mul_mod_u(a, a, m);
        e >>= 1;
    }
    return r;
}

constexpr u64 kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Deterministic for n < 2^64 with the base set above.
bool miller_rabin(u64 n) {
    u64 d = n - 1;
    const int s = std::countr_zero(d);
    d >>= s;
    for (u64 a : kMillerRabinBases) {
        u64 x = pow_mod_u(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod_u(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mul_mod_u(x, x, n) + c) % n;
            y = (mul_mod_u(y, y, n) + c) % n;
            y = (mul_mod_u(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    while (n > 1) {
        if (is_prime(n)) {
            out.push_back(n);
            return;
        }
        u64 d = pollard_rho(n);
        factor_rec(d, out);
        n /= d;
    }
}

// Divisor enumeration with phi of the cofactor, driven by the exponent
// vector so no residue scan is ever needed.
struct DivisorInfo {
    std::int64_t d;
    u64 phi_cofactor;  // phi(m / d)
};

void enumerate_divisors(const std::vector<std::pair<std::int64_t, int>>& factors,
                        std::size_t i, u64 d, std::vector<int>& exps,
                        std::vector<DivisorInfo>& out) {
    if (i == factors.size()) {
        u64 phi = 1;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            const u64 p = static_cast<u64>(factors[k].first);
            const int rem = factors[k].second - exps[k];
            if (rem > 0) {
                phi *= p - 1;
                for (int t = 1; t < rem; ++t) phi *= p;
            }
        }
        out.push_back({static_cast<std::int64_t>(d), phi});
        return;
    }
    const u64 p = static_cast<u64>(factors[i].first);
    u64 pk = 1;
    for (int e = 0; e <= factors[i].second; ++e) {
        exps[i] = e;
        enumerate_divisors(factors, i + 1, d * pk, exps, out);
        pk *= p;
    }
    exps[i] = 0;
}

std::vector<DivisorInfo> proper_divisors_with_phi(Modulus m) {
    const auto factors = factorize(m.value());
    std::vector<DivisorInfo> all;
    std::vector<int> exps(factors.size(), 0);
    enumerate_divisors(factors, 0, 1, exps, all);
    std::sort(all.begin(), all.end(),
              [](const DivisorInfo& a, const DivisorInfo& b) { return a.d < b.d; });
    // Drop 1 and m itself.
    std::vector<DivisorInfo> proper;
    proper.reserve(all.size() > 2 ? all.size() - 2 : 0);
    for (const auto& info : all)
        if (info.d != 1 && info.d != m.value()) proper.push_back(info);
    return proper;
}

}  // namespace

Modulus::Modulus(std::int64_t m) : m_(m) {
    if (m < 2)
        throw std::invalid_argument("Modulus: m must be >= 2, got " + std::to_string(m));
}

std::int64_t mul_mod(std::int64_t x, std::int64_t y, Modulus m) {
    return static_cast<std::int64_t>(
        mul_mod_u(static_cast<u64>(x), static_cast<u64>(y), static_cast<u64>(m.value())));
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : kMillerRabinBases) {
        if (n % p == 0) return n == p;
    }
    return miller_rabin(n);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<u64> primes;
    u64 rest = static_cast<u64>(n);
    // Strip small factors first; rho handles whatever survives.
    for (u64 p = 2; p < 100'000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (rest % p == 0) {
            primes.push_back(p);
            rest /= p;
        }
    }
    if (rest > 1) factor_rec(rest, primes);
    std::sort(primes.begin(), primes.end());

    std::vector<std::pair<std::int64_t, int>> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().first == static_cast<std::int64_t>(p))
            ++out.back().second;
        else
            out.emplace_back(static_cast<std::int64_t>(p), 1);
    }
    return out;
}

std::vector<std::int64_t> proper_divisors(Modulus m) {
    const auto infos = proper_divisors_with_phi(m);
    std::vector<std::int64_t> out;
    out.reserve(infos.size());
    for (const auto& info : infos) out.push_back(info.d);
    return out;
}

std::vector<std::int64_t> zero_divisors(Modulus m) {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 2; x < m.value(); ++x)
        if (std::gcd(x, m.value()) > 1) out.push_back(x);
    return out;
}

std::vector<std::int64_t> annihilator(std::int64_t x, Modulus m) {
    if (x < 0 || x >= m.value())
        throw std::invalid_argument("annihilator: residue out of range");
    const std::int64_t g = std::gcd(x, m.value());  // gcd(0, m) == m
    const std::int64_t step = m.value() / g;
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(g));
    for (std::int64_t y = 0; y < m.value(); y += step) out.push_back(y);
    return out;
}

std::vector<AnnClass> ann_classes(Modulus m) {
    const auto infos = proper_divisors_with_phi(m);
    std::vector<AnnClass> out;
    out.reserve(infos.size());
    for (const auto& info : infos)
        out.push_back(AnnClass{info.d, info.d, info.phi_cofactor});
    return out;
}

std::vector<std::int64_t> ann_class_members(Modulus m, std::int64_t key) {
    if (key <= 1 || key >= m.value() || m.value() % key != 0)
        throw std::invalid_argument("ann_class_members: key " + std::to_string(key) +
                                    " is not a proper divisor of " +
                                    std::to_string(m.value()));
    const std::int64_t cofactor = m.value() / key;
    std::vector<std::int64_t> out;
    for (std::int64_t u = 1; u < cofactor; ++u)
        if (std::gcd(u, cofactor) == 1) out.push_back(key * u);
    return out;
}

}  // namespace zdg
