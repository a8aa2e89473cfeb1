#pragma once

// The coset set C = {A x^(k-1) mod p} of absolute-least residues, its size
// control d = gcd(k-1, p-1), and box-principle rational representations
// C = (t p - r)/s with gcd(r, s) = 1. The integer identity C*s = t*p - r is
// the ground truth for every representation returned here; r = -C*s mod p.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "resperm/residue.hpp"

namespace resperm {

// d = gcd(k-1, p-1) on the normalized exponent. k = 1 gives gcd(0, p-1) =
// p-1, so the coset set degenerates to {A} as it should.
inline std::uint64_t d_of(const PermutationSpec& spec) {
    return std::gcd(spec.k - 1, spec.p - 1);
}

struct CosetSet {
    std::uint64_t p = 0;
    std::int64_t a = 0;
    std::uint64_t k = 0;
    std::uint64_t d = 0;
    std::vector<std::int64_t> elements;  // sorted absolute-least residues, (p-1)/d of them
};

namespace detail {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t q = 2; q * q <= m; q += (q == 2 ? 1 : 2)) {
        if (m % q) continue;
        fs.push_back(q);
        while (m % q == 0) m /= q;
    }
    if (m > 1) fs.push_back(m);
    return fs;
}

inline std::uint64_t primitive_root(std::uint64_t p) {
    const auto fs = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t q : fs)
            if (pow_mod(g, static_cast<std::int64_t>((p - 1) / q), p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    return 1;  // unreachable for prime p >= 3
}

}  // namespace detail

// C = {A g : g a d-th power mod p} reduced to (-p/2, p/2), walked along a
// generator of the d-th power subgroup so the cost is O((p-1)/d) multiplies.
inline CosetSet c_set(const PermutationSpec& spec) {
    const std::uint64_t p = spec.p;
    const std::uint64_t d = d_of(spec);
    const std::uint64_t size = (p - 1) / d;
    CosetSet cs{p, spec.a, spec.k, d, {}};
    cs.elements.reserve(size);
    const std::uint64_t a_pos = static_cast<std::uint64_t>(spec.a < 0 ? spec.a + static_cast<std::int64_t>(p) : spec.a);
    const std::uint64_t h = pow_mod(detail::primitive_root(p), static_cast<std::int64_t>(d), p);
    std::uint64_t c = a_pos;
    for (std::uint64_t i = 0; i < size; ++i) {
        cs.elements.push_back(abs_least(static_cast<std::int64_t>(c), p));
        c = mul_mod(c, h, p);
    }
    std::sort(cs.elements.begin(), cs.elements.end());
    return cs;
}

// One rational representation C = (t p - r)/s. The triple always satisfies
// the exact identity C*s - t*p + r = 0 with gcd(r, s) = 1, s >= 1.
struct RationalRep {
    std::int64_t r = 0;
    std::uint64_t s = 1;
    std::int64_t t = 0;
    std::int64_t c = 0;
    std::uint64_t p = 0;

    bool operator==(const RationalRep&) const = default;
};

// All reduced representations with 1 <= s <= n and |r| < p/n: for each s,
// r = abs_least(-C*s), kept iff |r|*n < p, divided by gcd(|r|, s),
// deduplicated, ordered by s. Nonempty whenever p > n^2 (box principle).
inline std::vector<RationalRep> reps_of(std::int64_t c, std::uint64_t p, int n) {
    if (n < 2) throw std::invalid_argument("reps_of: n must be >= 2");
    if (abs_least(c, p) == 0) throw std::invalid_argument("reps_of: C must be nonzero mod p");
    const std::int64_t cc = abs_least(c, p);
    const std::uint64_t c_pos = static_cast<std::uint64_t>(cc < 0 ? cc + static_cast<std::int64_t>(p) : cc);
    std::vector<RationalRep> out;
    for (std::uint64_t s = 1; s <= static_cast<std::uint64_t>(n); ++s) {
        std::int64_t r = abs_least(-static_cast<std::int64_t>(mul_mod(c_pos, s, p)), p);
        if (r == 0) continue;  // impossible for prime p > s, kept as a guard
        // strict |r| < p/n without rounding
        if (static_cast<std::uint64_t>(r < 0 ? -r : r) * static_cast<std::uint64_t>(n) >= p) continue;
        std::int64_t g = std::gcd(r < 0 ? -r : r, static_cast<std::int64_t>(s));
        std::int64_t rr = r / g;
        std::uint64_t ss = s / static_cast<std::uint64_t>(g);
        std::int64_t t = static_cast<std::int64_t>(
            (static_cast<__int128>(cc) * static_cast<std::int64_t>(ss) + rr) / static_cast<std::int64_t>(p));
        RationalRep rep{rr, ss, t, cc, p};
        if (std::find(out.begin(), out.end(), rep) == out.end()) out.push_back(rep);
    }
    return out;
}

// Deterministic pick: minimal s after reduction, then minimal |r|, then r > 0.
inline std::optional<RationalRep> canonical_rep(std::int64_t c, std::uint64_t p, int n) {
    auto reps = reps_of(c, p, n);
    if (reps.empty()) return std::nullopt;
    return *std::min_element(reps.begin(), reps.end(), [](const RationalRep& x, const RationalRep& y) {
        auto key = [](const RationalRep& v) {
            return std::tuple<std::uint64_t, std::int64_t, int>(v.s, v.r < 0 ? -v.r : v.r, v.r < 0 ? 1 : 0);
        };
        return key(x) < key(y);
    });
}

// Witness for the critical form A = (t p - r)/s, gcd(r,s)=1, |r| + s <= n.
// Scanning s = 1..n-1 with the unique small r per s is complete: any
// non-reduced witness reduces to one found at s/g.
inline std::optional<RationalRep> critical_rep(std::int64_t a, std::uint64_t p, int n) {
    if (n < 2) throw std::invalid_argument("critical_rep: n must be >= 2");
    const std::int64_t aa = abs_least(a, p);
    if (aa == 0) throw std::invalid_argument("critical_rep: A must be nonzero mod p");
    const std::uint64_t a_pos = static_cast<std::uint64_t>(aa < 0 ? aa + static_cast<std::int64_t>(p) : aa);
    for (std::uint64_t s = 1; s < static_cast<std::uint64_t>(n); ++s) {
        std::int64_t r = abs_least(-static_cast<std::int64_t>(mul_mod(a_pos, s, p)), p);
        if (r == 0) continue;
        std::int64_t ra = r < 0 ? -r : r;
        if (ra + static_cast<std::int64_t>(s) > n) continue;
        if (std::gcd(ra, static_cast<std::int64_t>(s)) != 1) continue;
        std::int64_t t = static_cast<std::int64_t>(
            (static_cast<__int128>(aa) * static_cast<std::int64_t>(s) + r) / static_cast<std::int64_t>(p));
        return RationalRep{r, s, t, aa, p};
    }
    return std::nullopt;
}

inline bool is_critical(std::int64_t a, std::uint64_t p, int n) {
    return critical_rep(a, p, n).has_value();
}

// Scans the coset set for an element C (or its inverse mod p) with
// n <= |C| <= p/n, or with a representation (n+3)s <= |r| <= p/n.
// These are the hypotheses under which the large-d theorems apply.
inline std::optional<std::int64_t> good_c_exists(const PermutationSpec& spec, int n) {
    if (n < 2) throw std::invalid_argument("good_c_exists: n must be >= 2");
    const std::uint64_t p = spec.p;
    const auto cs = c_set(spec);
    const auto in_mid_range = [&](std::int64_t v) {
        std::uint64_t av = static_cast<std::uint64_t>(v < 0 ? -v : v);
        return av >= static_cast<std::uint64_t>(n) && av * static_cast<std::uint64_t>(n) <= p;
    };
    const auto has_big_r_rep = [&](std::int64_t v) {
        std::uint64_t v_pos = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
        for (std::uint64_t s = 1; s <= static_cast<std::uint64_t>(n); ++s) {
            std::int64_t r = abs_least(-static_cast<std::int64_t>(mul_mod(v_pos, s, p)), p);
            if (r == 0) continue;
            std::uint64_t ra = static_cast<std::uint64_t>(r < 0 ? -r : r);
            if (std::gcd(static_cast<std::uint64_t>(ra), s) != 1) continue;
            if (ra >= static_cast<std::uint64_t>(n + 3) * s && ra * static_cast<std::uint64_t>(n) <= p)
                return true;
        }
        return false;
    };
    for (std::int64_t c : cs.elements) {
        std::uint64_t c_pos = static_cast<std::uint64_t>(c < 0 ? c + static_cast<std::int64_t>(p) : c);
        std::int64_t c_inv = abs_least(static_cast<std::int64_t>(inv_mod(c_pos, p)), p);
        if (in_mid_range(c) || in_mid_range(c_inv)) return c;
        if (has_big_r_rep(c) || has_big_r_rep(c_inv)) return c;
    }
    return std::nullopt;
}

}  // namespace resperm
