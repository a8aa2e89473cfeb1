#pragma once

// Overflow-safe modular arithmetic on 64-bit integers, deterministic
// primality, and prime enumeration. Everything here is a pure function;
// moduli are capped at 2^62 so products always fit a 128-bit intermediate.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace resperm {

// A residue is a plain uint64_t in [0, m); an absolute-least residue is a
// signed value in (-m/2, m/2). The functions below keep those ranges.
using Residue = std::uint64_t;
using AbsLeast = std::int64_t;

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

inline void require_modulus(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    if (m > kMaxModulus) throw std::invalid_argument("modulus above 2^62");
}

// (a*b) mod m through a 128-bit product.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    require_modulus(m);
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a % m) * (b % m)) % m);
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(std::gcd(a, b));
}

// y with x*y = 1 mod m, 0 < y < m. Extended Euclid; throws if gcd(x,m) != 1.
inline std::uint64_t inv_mod(std::uint64_t x, std::uint64_t m) {
    require_modulus(m);
    x %= m;
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(x);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("inv_mod: argument not invertible");
    if (s0 < 0) s0 += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(s0);
}

// x^e mod m; negative exponents resolved through the modular inverse.
inline std::uint64_t pow_mod(std::uint64_t x, std::int64_t e, std::uint64_t m) {
    require_modulus(m);
    std::uint64_t base = x % m;
    std::uint64_t exp;
    if (e < 0) {
        base = inv_mod(base, m);  // throws when gcd(x,m) != 1
        exp = static_cast<std::uint64_t>(-(e + 1)) + 1;
    } else {
        exp = static_cast<std::uint64_t>(e);
    }
    std::uint64_t acc = 1 % m;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Deterministic Miller-Rabin. The 12-prime base set decides primality
// exactly for every n < 3.3 * 10^24, far above the 2^62 modulus cap.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, static_cast<std::int64_t>(d), n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Strictly increasing list of primes in [lo, hi]; segmented sieve.
inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("primes_in: lo > hi");
    std::vector<std::uint64_t> out;
    if (hi < 2) return out;
    if (lo < 2) lo = 2;

    std::uint64_t root = 2;
    while ((root + 1) * (root + 1) <= hi) ++root;
    std::vector<bool> small(root + 1, true);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
    }

    constexpr std::uint64_t kSegment = 1 << 18;
    std::vector<bool> seg;
    for (std::uint64_t low = lo; low <= hi; ) {
        std::uint64_t high = std::min(hi, low + kSegment - 1);
        seg.assign(high - low + 1, true);
        for (std::uint64_t q : base) {
            std::uint64_t start = std::max(q * q, (low + q - 1) / q * q);
            for (std::uint64_t j = start; j <= high; j += q) seg[j - low] = false;
        }
        // composites have a factor <= root and were crossed off from q*q up
        for (std::uint64_t v = low; v <= high; ++v)
            if (seg[v - low]) out.push_back(v);
        if (high == hi) break;
        low = high + 1;
    }
    return out;
}

// The unique c = a mod p with |c| < p/2. Only defined for odd moduli;
// an even modulus has a midpoint class with no absolute-least pick.
inline std::int64_t abs_least(std::int64_t a, std::uint64_t p) {
    require_modulus(p);
    if (p % 2 == 0) throw std::invalid_argument("abs_least: modulus must be odd");
    std::int64_t m = static_cast<std::int64_t>(p);
    std::int64_t r = a % m;
    if (r < 0) r += m;
    if (r > m / 2) r -= m;
    return r;
}

}  // namespace resperm
