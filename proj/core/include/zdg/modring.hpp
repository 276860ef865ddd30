#pragma once

// Arithmetic in Z_m: zero divisors, annihilators, and the annihilator
// equivalence classes behind the compressed zero-divisor graph.
//
// Residues are canonical least nonnegative values. Moduli live in
// [2, 2^63 - 1]. Class enumeration walks the divisor lattice of m rather
// than the residues, so large smooth moduli stay cheap; the member set of
// a class is materialized only on demand.

#include <cstdint>
#include <utility>
#include <vector>

namespace zdg {

class Modulus {
public:
    // Throws std::invalid_argument unless m >= 2.
    explicit Modulus(std::int64_t m);

    std::int64_t value() const noexcept { return m_; }

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::int64_t m_;
};

/// x * y mod m, overflow-safe for any residues in [0, m).
std::int64_t mul_mod(std::int64_t x, std::int64_t y, Modulus m);

// One annihilator-equivalence class of nonzero zero divisors of Z_m.
// Every member x has gcd(x, m) == key, and every such x is a member.
struct AnnClass {
    std::int64_t key = 0;             // divisor of m with 1 < key < m
    std::int64_t representative = 0;  // least member; always equals key
    std::uint64_t size = 0;           // phi(m / key) members

    friend bool operator==(const AnnClass&, const AnnClass&) = default;
};

/// All x in {1..m-1} with gcd(x, m) > 1, ascending. Empty for prime m.
std::vector<std::int64_t> zero_divisors(Modulus m);

/// All y in {0..m-1} with x*y = 0 (mod m), ascending: exactly the
/// multiples of m / gcd(x, m). Requires 0 <= x < m.
std::vector<std::int64_t> annihilator(std::int64_t x, Modulus m);

/// One class per divisor d of m with 1 < d < m, ascending by key.
/// The classes partition zero_divisors(m).
std::vector<AnnClass> ann_classes(Modulus m);

/// Members of the class keyed `key`, ascending; phi(m/key) residues.
/// Throws std::invalid_argument unless key divides m and 1 < key < m.
std::vector<std::int64_t> ann_class_members(Modulus m, std::int64_t key);

// Factorization support (deterministic Miller-Rabin plus Pollard rho;
// exact for the full 64-bit range).
bool is_prime(std::uint64_t n);

/// (prime, exponent) pairs, ascending by prime. factorize(1) is empty.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Divisors d of m with 1 < d < m, ascending.
std::vector<std::int64_t> proper_divisors(Modulus m);

}  // namespace zdg
