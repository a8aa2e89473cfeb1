#pragma once

// Closed-form coefficient families that force Type (iv) maps at every
// admissible prime: the linear (k = 1) families |r| + s <= n, and the
// square-root exponent (k = (p+1)/2) families admitted clause by clause
// according to the 2-adic alignment of r and s with n. Each descriptor is
// one display label "(a p +- r)/s"; instantiation evaluates it at a prime.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "resperm/ratrep.hpp"

namespace resperm {

enum class FamilyKind { linear, sqrt_map };

enum class FamilyCase {
    // linear admissions
    small_integer,    // |A| < n (s = 1)
    gcd_adjusted,     // |r| + s + gcd(n,s) - 1 <= n: misses in every row
    sharp,            // |r| + s <= n only: misses in >= n/gcd(n,s) rows
    // sqrt admissions, n odd / n even split by 2-adic alignment
    sqrt_odd_n,       // n odd: |r| + s + min(gcd(n,r), gcd(n,s)) - 1 <= n
    sqrt_aligned_r,   // n even, 2^v(n) | r: |r| + s + gcd(n,s) - 1 <= n
    sqrt_aligned_s,   // n even, 2^v(n) | s: |r| + s + gcd(n,r) - 1 <= n
    sqrt_unaligned,   // n even, 2^v(n) | neither: |r| + s + gcd(n,s) + gcd(n,r) - 1 <= n
    sqrt_relaxed,     // parity/divisibility relaxations; not part of the baseline table
};

enum class SignBranch { both, minus, plus };  // which of (a p -+ r)/s the label covers

struct FamilyDescriptor {
    FamilyKind kind = FamilyKind::linear;
    int a = 0;      // multiple of p in the label; 0 means plain integer r
    int r = 1;      // positive; the +- fold is part of the label
    int s = 1;
    SignBranch sign = SignBranch::both;
    FamilyCase case_tag = FamilyCase::small_integer;
    int bound_b = 0;  // the clause's B; at least n - B classes are missed

    std::string label() const {
        if (s == 1) return std::to_string(r);
        std::string ap = (a == 1) ? "p" : std::to_string(a) + "p";
        const char* sgn = sign == SignBranch::both ? "±" : (sign == SignBranch::minus ? "−" : "+");
        return "(" + ap + sgn + std::to_string(r) + ")/" + std::to_string(s);
    }
};

namespace detail {

inline int two_adic_part(int n) {
    int t = 1;
    while (n % 2 == 0) { n /= 2; t *= 2; }
    return t;
}

inline bool linear_admits(int n, int r, int s) { return r + s <= n; }

inline FamilyCase linear_case(int n, int r, int s) {
    if (s == 1 && r < n) return FamilyCase::small_integer;
    int b = static_cast<int>(std::gcd(n, s));
    if (r + s + b - 1 <= n) return FamilyCase::gcd_adjusted;
    return FamilyCase::sharp;
}

inline int linear_bound_b(int n, int r, int s) {
    int b = static_cast<int>(std::gcd(n, s));
    if (s == 1) return r;                       // B = |A|
    if (r + s + b - 1 <= n) return r + s + b - 2;
    return r + s - 1;                           // sharp-only admission
}

inline bool sqrt_admits(int n, int r, int s, FamilyCase* tag, int* bound) {
    const int tb = two_adic_part(n);
    const int b = static_cast<int>(std::gcd(n, s));
    const int c = static_cast<int>(std::gcd(n, r));
    if (n % 2 == 1) {
        int m = std::min(b, c);
        if (r + s + m - 1 <= n) { *tag = FamilyCase::sqrt_odd_n; *bound = r + s + m - 2; return true; }
        return false;
    }
    if (r % tb == 0) {
        if (r + s + b - 1 <= n) { *tag = FamilyCase::sqrt_aligned_r; *bound = r + s + b - 2; return true; }
        return false;
    }
    if (s % tb == 0) {
        if (r + s + c - 1 <= n) { *tag = FamilyCase::sqrt_aligned_s; *bound = r + s + c - 2; return true; }
        return false;
    }
    if (r + s + b + c - 1 <= n) { *tag = FamilyCase::sqrt_unaligned; *bound = r + s + b + c - 2; return true; }
    return false;
}

// Parity/divisibility relaxations on the sqrt clauses: when the class-count
// ceiling never rounds up, |r| + s <= n (plus the gcd(n,r) term in the
// unaligned clause) is already enough. Tagged sqrt_relaxed, off by default.
inline bool sqrt_relaxed_admits(int n, int r, int s) {
    const int tb = two_adic_part(n);
    const int b = static_cast<int>(std::gcd(n, s));
    const int c = static_cast<int>(std::gcd(n, r));
    if (n % 2 == 1 || r % tb == 0) {          // aligned-r / odd-n orientation, count runs over gcd(n,s)
        if (r + s <= n && b > 1 && ((r + s - 1) % b == 0 || (r % 2) != ((r / b) % 2))) return true;
    }
    if (n % 2 == 1 || s % tb == 0) {          // flipped orientation, count runs over gcd(n,r)
        if (r + s <= n && c > 1 && ((r + s - 1) % c == 0 || (s % 2) != ((s / c) % 2))) return true;
    }
    if (n % 2 == 0 && r % tb != 0 && s % tb != 0) {
        bool drop = (s % 2 == 1 && (r + c) % b == 0) || (s % 2 == 0 && (r + c) % (2 * b) == 0) ||
                    ((r + c) % b != 0 && ((r + c) / b) % 2 == 1);
        if (drop && r + s + c <= n) return true;
    }
    return false;
}

// The (a, sign) labels family (r, s) can take over admissible primes. For
// the sqrt kind primes are restricted to p = 1 mod 4, which prunes branches
// whenever 4 | s. t is the unique representative of r * p^{-1} mod s with
// |(t p - r)/s| < p/2, i.e. t in (-s/2, s/2] for r > 0.
inline std::vector<std::pair<int, int>> branch_labels(int r, int s, FamilyKind kind) {
    if (s == 1) return {{0, 0}};
    std::vector<std::pair<int, int>> out;
    const int mod = kind == FamilyKind::linear ? s : 4 * s / static_cast<int>(std::gcd(4, s));
    for (int pi = 1; pi < mod; ++pi) {
        if (std::gcd(pi, s) != 1) continue;
        if (kind == FamilyKind::sqrt_map && pi % 4 != 1) continue;
        int t = static_cast<int>((static_cast<std::int64_t>(r) * static_cast<std::int64_t>(inv_mod(
                    static_cast<std::uint64_t>(pi % s == 0 ? s : pi % s), static_cast<std::uint64_t>(s)))) %
                s);
        const int lo = (s % 2 == 1) ? -(s - 1) / 2 : -s / 2 + 1;
        while (t > lo + s - 1) t -= s;
        while (t < lo) t += s;
        std::pair<int, int> lab = t > 0 ? std::make_pair(t, -1) : std::make_pair(-t, +1);
        if (std::find(out.begin(), out.end(), lab) == out.end()) out.push_back(lab);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline void push_labels(std::vector<FamilyDescriptor>& out, FamilyKind kind, int r, int s,
                        FamilyCase tag, int bound) {
    auto labs = branch_labels(r, s, kind);
    std::size_t i = 0;
    while (i < labs.size()) {
        auto [a, sg] = labs[i];
        if (a == 0) {
            out.push_back({kind, 0, r, 1, SignBranch::both, tag, bound});
            ++i;
            continue;
        }
        if (i + 1 < labs.size() && labs[i + 1].first == a) {  // both signs present: fold
            out.push_back({kind, a, r, s, SignBranch::both, tag, bound});
            i += 2;
            continue;
        }
        out.push_back({kind, a, r, s, sg < 0 ? SignBranch::minus : SignBranch::plus, tag, bound});
        ++i;
    }
}

}  // namespace detail

// All coprime pairs with |r| + s <= n, one descriptor per display label.
// Ordered by s, then r, then a.
inline std::vector<FamilyDescriptor> critical_families(int n) {
    if (n < 2) throw std::invalid_argument("critical_families: n must be >= 2");
    std::vector<FamilyDescriptor> out;
    for (int s = 1; s < n; ++s)
        for (int r = 1; r < n; ++r) {
            if (std::gcd(r, s) != 1 || !detail::linear_admits(n, r, s)) continue;
            detail::push_labels(out, FamilyKind::linear, r, s, detail::linear_case(n, r, s),
                                detail::linear_bound_b(n, r, s));
        }
    return out;
}

// Families for k = (p+1)/2, p = 1 mod 4, admitted by the clause matching the
// 2-adic alignment of (r, s) with n. The relaxed tier is off by default; the
// baseline clauses alone regenerate the published lists.
inline std::vector<FamilyDescriptor> sqrt_families(int n, bool include_relaxed = false) {
    if (n < 2) throw std::invalid_argument("sqrt_families: n must be >= 2");
    std::vector<FamilyDescriptor> out;
    for (int s = 1; s < n; ++s)
        for (int r = 1; r < n; ++r) {
            if (std::gcd(r, s) != 1) continue;
            FamilyCase tag{};
            int bound = 0;
            if (detail::sqrt_admits(n, r, s, &tag, &bound)) {
                detail::push_labels(out, FamilyKind::sqrt_map, r, s, tag, bound);
            } else if (include_relaxed && detail::sqrt_relaxed_admits(n, r, s)) {
                detail::push_labels(out, FamilyKind::sqrt_map, r, s, FamilyCase::sqrt_relaxed, r + s - 1);
            }
        }
    return out;
}

// Evaluates the label at p: the positive instance (a p - r)/s or
// (a p + r)/s when that branch is integral and below p/2; none when p sits
// in a congruence class the label does not cover.
inline std::optional<std::int64_t> instantiate(const FamilyDescriptor& fam, std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("instantiate: p must be an odd prime");
    if (fam.kind == FamilyKind::sqrt_map && p % 4 != 1) return std::nullopt;
    if (fam.s == 1) {
        if (2 * static_cast<std::uint64_t>(fam.r) >= p) return std::nullopt;
        return fam.r;
    }
    if (p % static_cast<std::uint64_t>(fam.s) == 0) return std::nullopt;
    const auto branch = [&](int sign) -> std::optional<std::int64_t> {
        __int128 num = static_cast<__int128>(fam.a) * static_cast<std::int64_t>(p) + sign * fam.r;
        if (num % fam.s != 0) return std::nullopt;
        __int128 v = num / fam.s;
        if (v <= 0 || 2 * v >= static_cast<__int128>(p)) return std::nullopt;
        return static_cast<std::int64_t>(v);
    };
    if (fam.sign != SignBranch::plus)
        if (auto v = branch(-1)) return v;
    if (fam.sign != SignBranch::minus)
        if (auto v = branch(+1)) return v;
    return std::nullopt;
}

struct MissBound {
    int per_row = 1;    // empty cells guaranteed in a designated row
    int min_rows = 1;   // how many rows carry the guarantee
    bool all_rows = false;
};

// n - B for the admitting clause's B. Linear gcd-adjusted clauses guarantee
// the bound in every row; the sharp-only clause in at least n/gcd(n,s) rows;
// sqrt clauses designate specific rows (or columns), so at least one.
inline MissBound predicted_miss_bound(const FamilyDescriptor& fam, int n) {
    MissBound mb;
    mb.per_row = n - fam.bound_b;
    if (mb.per_row < 1) throw std::invalid_argument("predicted_miss_bound: family not admitted at this n");
    if (fam.kind == FamilyKind::linear) {
        if (fam.case_tag == FamilyCase::sharp) {
            mb.min_rows = n / static_cast<int>(std::gcd(n, fam.s));
            mb.all_rows = false;
        } else {
            mb.min_rows = n;
            mb.all_rows = true;
        }
    } else {
        mb.min_rows = 1;
        mb.all_rows = false;
    }
    return mb;
}

struct SCount {
    int n_limit = 0;
    std::int64_t value = 0;
    double asymptotic = 0.0;  // 3 N^2 / pi^2
};

// S(N) = #{(r, s) : r, s >= 1, gcd(r, s) = 1, r + s <= N}, by enumeration.
inline SCount s_count(int N) {
    if (N < 0) throw std::invalid_argument("s_count: N must be >= 0");
    SCount sc{N, 0, 3.0 * N * static_cast<double>(N) / (3.14159265358979323846 * 3.14159265358979323846)};
    for (int r = 1; r < N; ++r)
        for (int s = 1; r + s <= N; ++s)
            if (std::gcd(r, s) == 1) ++sc.value;
    return sc;
}

// {A : is_critical(A, p, n)} generated from the family side: both signs of
// every instantiated linear label. Equal to 2 S(n) values once p > n^3.
inline std::vector<std::int64_t> critical_set(std::uint64_t p, int n) {
    if (p <= static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n))
        throw std::invalid_argument("critical_set: requires p > n^2");
    std::set<std::int64_t> vals;
    for (const auto& fam : critical_families(n))
        if (auto v = instantiate(fam, p)) {
            vals.insert(*v);
            vals.insert(-*v);
        }
    return {vals.begin(), vals.end()};
}

// Canonical row text: integers first, then fractional labels, the two
// groups separated by ", ", labels inside a group by ",".
inline std::string table_row(int n, FamilyKind kind) {
    const auto fams = kind == FamilyKind::linear ? critical_families(n) : sqrt_families(n);
    std::string ints, fracs;
    for (const auto& f : fams) {
        std::string& dst = f.s == 1 ? ints : fracs;
        if (!dst.empty()) dst += ",";
        dst += f.label();
    }
    if (fracs.empty()) return ints;
    if (ints.empty()) return fracs;
    return ints + ", " + fracs;
}

}  // namespace resperm
