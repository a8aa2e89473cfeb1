#pragma once

// Decidable hypothesis predicates for the non-exceptionality theorems, and a
// dispatcher that certifies "no Type (iv)" when some theorem's hypotheses
// hold. Inequalities involving transcendentals are evaluated in double
// precision rounded against the claim, so a guard can under-claim but never
// over-claim. log means natural logarithm throughout.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "resperm/families.hpp"

namespace resperm {

enum class Verdict { no_type4_guaranteed, exceptional_family, undecided };

struct Certificate {
    Verdict verdict = Verdict::undecided;
    std::string rule;  // which guard fired
    std::vector<std::pair<std::string, double>> margins;
};

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::no_type4_guaranteed: return "no-type4-guaranteed";
        case Verdict::exceptional_family: return "exceptional-family";
        default: return "undecided";
    }
}

namespace detail {

// Safety factor absorbing double rounding in the conservative direction.
inline constexpr double kOutward = 1.0 + 1e-9;

inline double pow_d(double base, double e) { return std::pow(base, e); }

}  // namespace detail

// d <= 0.006 p^(89/92) together with p > 4e29 n^(184/3). The p threshold
// exceeds any 64-bit input for n >= 2; the predicate is exact about that.
inline bool guard_small_gcd(std::uint64_t p, int n, std::uint64_t d) {
    if (p < 3 || n < 2 || d == 0) return false;
    double dp = static_cast<double>(p);
    bool d_ok = static_cast<double>(d) * detail::kOutward <= 0.006 * detail::pow_d(dp, 89.0 / 92.0);
    bool p_ok = dp > detail::kOutward * 4e29 * detail::pow_d(static_cast<double>(n), 184.0 / 3.0);
    return d_ok && p_ok;
}

// p >= 16.2 |k-1|^2 n^4 for signed exponent k != 1.
inline bool guard_small_k(std::uint64_t p, int n, std::int64_t k_signed) {
    if (k_signed == 1) throw std::invalid_argument("guard_small_k: k = 1 is excluded");
    if (n < 2) return false;
    double km1 = std::fabs(static_cast<double>(k_signed) - 1.0);
    double n4 = detail::pow_d(static_cast<double>(n), 4.0);
    return static_cast<double>(p) >= detail::kOutward * 16.2 * km1 * km1 * n4;
}

// The large-d route: a coset-set element in the middle range n <= |C| <= p/n
// needs d >= 0.88 n^2 sqrt(p) log^2 p, the representation route
// (n+3)s <= |r| <= p/n needs 1.32 in place of 0.88; both need p > 10^6.
// k = 1 needs neither: the counting bound is unconditional.
inline bool guard_big_gcd(const PermutationSpec& spec, int n) {
    if (n < 2) return false;
    const bool linear = spec.is_linear();
    if (!linear && spec.p <= 1000000) return false;  // cheap reject before touching the coset set
    auto copt = good_c_exists(spec, n);
    if (!copt.has_value()) return false;
    if (linear) return true;
    // pick the constant for the route the returned C actually satisfies:
    // 0.88 for the middle range n <= |C| <= p/n, 1.32 for the |r| >= (n+3)s
    // representation (checking C and its inverse, as the scan did)
    const std::uint64_t p = spec.p;
    const auto mid = [&](std::int64_t v) {
        std::uint64_t av = static_cast<std::uint64_t>(v < 0 ? -v : v);
        return av >= static_cast<std::uint64_t>(n) && av * static_cast<std::uint64_t>(n) <= p;
    };
    std::uint64_t c_pos = static_cast<std::uint64_t>(*copt < 0 ? *copt + static_cast<std::int64_t>(p) : *copt);
    std::int64_t c_inv = abs_least(static_cast<std::int64_t>(inv_mod(c_pos, p)), p);
    double constant = (mid(*copt) || mid(c_inv)) ? 0.88 : 1.32;
    double dp = static_cast<double>(p);
    double lg = std::log(dp);
    double need = detail::kOutward * constant * n * static_cast<double>(n) * std::sqrt(dp) * lg * lg;
    return static_cast<double>(d_of(spec)) >= need;
}

// Small-but-not-critical representations, A = (tp - r)/s with |r| + s > n:
// p > |r| s n settles the linear map, p > (|r| s n + 1)^2 the sqrt map.
inline bool guard_smallrs(std::uint64_t p, int n, std::int64_t r, std::uint64_t s, FamilyKind kind) {
    std::uint64_t ra = static_cast<std::uint64_t>(r < 0 ? -r : r);
    if (s == 0 || ra == 0 || std::gcd(ra, s) != 1)
        throw std::invalid_argument("guard_smallrs: need s > 0, gcd(r, s) = 1");
    if (ra + s <= static_cast<std::uint64_t>(n))
        throw std::invalid_argument("guard_smallrs: |r| + s <= n is the exceptional-family regime");
    unsigned __int128 q = static_cast<unsigned __int128>(ra) * s * static_cast<std::uint64_t>(n);
    if (kind == FamilyKind::linear) return static_cast<unsigned __int128>(p) > q;
    if (q > 0xFFFFFFFFull) return false;  // (q+1)^2 would exceed any valid p
    return static_cast<unsigned __int128>(p) > (q + 1) * (q + 1);
}

// Any exponent other than 1 and (p+1)/2 is non-exceptional once
// p > 4e29 n^(184/3); astronomically out of 64-bit reach, evaluated exactly.
inline bool guard_mainiv(const PermutationSpec& spec, int n) {
    if (n < 2) return false;
    if (spec.is_linear() || spec.is_sqrt()) return false;
    return static_cast<double>(spec.p) >
           detail::kOutward * 4e29 * detail::pow_d(static_cast<double>(n), 184.0 / 3.0);
}

// k = 1 complete classification: above p > n^3 (n+3) the map is Type (iv)
// exactly when A has a critical representation.
inline Certificate guard_k1_classification(const PermutationSpec& spec, int n) {
    if (!spec.is_linear()) throw std::invalid_argument("guard_k1_classification: spec must have k = 1");
    Certificate cert;
    cert.rule = "k1-classification";
    const std::uint64_t threshold = static_cast<std::uint64_t>(n) * n * n * static_cast<std::uint64_t>(n + 3);
    cert.margins.emplace_back("p_over_threshold", static_cast<double>(spec.p) - static_cast<double>(threshold));
    if (spec.p <= threshold) {
        cert.verdict = Verdict::undecided;
        return cert;
    }
    cert.verdict = is_critical(spec.a, spec.p, n) ? Verdict::exceptional_family : Verdict::no_type4_guaranteed;
    return cert;
}

// k = (p+1)/2, p = 1 mod 4: above max{(n^3+1)^2, 8e4 (n log n)^4} every
// non-critical A maps onto every class; critical A is family candidacy.
inline Certificate guard_sqrt_classification(const PermutationSpec& spec, int n) {
    if (spec.p % 4 != 1) throw std::invalid_argument("guard_sqrt_classification: p must be 1 mod 4");
    if (!spec.is_sqrt()) throw std::invalid_argument("guard_sqrt_classification: spec must have k = (p+1)/2");
    Certificate cert;
    cert.rule = "sqrt-classification";
    // (n^3+1)^2 is compared in integers; the transcendental term outward
    const unsigned __int128 n3p1 = static_cast<std::uint64_t>(n) * n * n + 1;
    const bool above_sq = static_cast<unsigned __int128>(spec.p) > n3p1 * n3p1;
    const double nl = static_cast<double>(n) * std::log(static_cast<double>(n));
    const double trans = detail::kOutward * 8e4 * detail::pow_d(nl, 4.0);
    const bool above_trans = static_cast<double>(spec.p) > trans;
    cert.margins.emplace_back("p_over_threshold",
                              static_cast<double>(spec.p) -
                                  std::max(static_cast<double>(n3p1) * static_cast<double>(n3p1), trans));
    if (!(above_sq && above_trans)) {
        cert.verdict = Verdict::undecided;
        return cert;
    }
    cert.verdict = is_critical(spec.a, spec.p, n) ? Verdict::exceptional_family : Verdict::no_type4_guaranteed;
    return cert;
}

struct ConjectureBounds {
    std::uint64_t big = 0;    // 6 n^3: no Type (iv) beyond this for k != 1, (p+1)/2
    std::uint64_t small = 0;  // 3 n^3: no non-family Type (iv) beyond this for k = 1, (p+1)/2
    std::uint64_t optimal_big = 0;    // published optimum, n = 3..12, else 0
    std::uint64_t optimal_small = 0;
};

inline ConjectureBounds conjecture_bounds(int n) {
    if (n < 2) throw std::invalid_argument("conjecture_bounds: n must be >= 2");
    static constexpr std::uint64_t kOptBig[10] = {127, 271, 601, 571, 1733, 1777, 3433, 2473, 6577, 3851};
    static constexpr std::uint64_t kOptSmall[10] = {17, 61, 137, 197, 277, 937, 653, 2297, 1061, 2857};
    ConjectureBounds cb;
    std::uint64_t n3 = static_cast<std::uint64_t>(n) * n * n;
    cb.big = 6 * n3;
    cb.small = 3 * n3;
    if (n >= 3 && n <= 12) {
        cb.optimal_big = kOptBig[n - 3];
        cb.optimal_small = kOptSmall[n - 3];
    }
    return cb;
}

// Tries the guards from cheap and specific to broad: exponent-specific
// classification, small |k|, small gcd, big gcd, small (r, s), then the
// generic-exponent threshold. First success wins; margins are attached for
// whichever rule fired.
inline Certificate certify_no_type4(const PermutationSpec& spec, int n) {
    if (n < 2) throw std::invalid_argument("certify_no_type4: n must be >= 2");

    if (spec.is_linear()) {
        Certificate cert = guard_k1_classification(spec, n);
        if (cert.verdict != Verdict::undecided) return cert;
    } else if (spec.is_sqrt()) {
        Certificate cert = guard_sqrt_classification(spec, n);
        if (cert.verdict != Verdict::undecided) return cert;
    }

    // signed k of least magnitude describing the same map
    std::int64_t k_signed = static_cast<std::int64_t>(spec.k);
    if (spec.k > (spec.p - 1) / 2) k_signed -= static_cast<std::int64_t>(spec.p - 1);
    if (k_signed != 1 && guard_small_k(spec.p, n, k_signed)) {
        Certificate cert;
        cert.verdict = Verdict::no_type4_guaranteed;
        cert.rule = "small-k";
        cert.margins.emplace_back("p_over_threshold",
                                  static_cast<double>(spec.p) -
                                      16.2 * std::pow(std::fabs(static_cast<double>(k_signed) - 1.0), 2.0) *
                                          std::pow(static_cast<double>(n), 4.0));
        return cert;
    }

    const std::uint64_t d = d_of(spec);
    if (guard_small_gcd(spec.p, n, d)) {
        Certificate cert;
        cert.verdict = Verdict::no_type4_guaranteed;
        cert.rule = "small-gcd";
        cert.margins.emplace_back("d", static_cast<double>(d));
        return cert;
    }

    if (guard_big_gcd(spec, n)) {
        Certificate cert;
        cert.verdict = Verdict::no_type4_guaranteed;
        cert.rule = "big-gcd";
        cert.margins.emplace_back("d", static_cast<double>(d));
        return cert;
    }

    if (spec.is_linear() || spec.is_sqrt()) {
        if (auto rep = canonical_rep(spec.a, spec.p, n)) {
            std::uint64_t ra = static_cast<std::uint64_t>(rep->r < 0 ? -rep->r : rep->r);
            if (ra + rep->s > static_cast<std::uint64_t>(n) &&
                guard_smallrs(spec.p, n, rep->r, rep->s,
                              spec.is_linear() ? FamilyKind::linear : FamilyKind::sqrt_map)) {
                Certificate cert;
                cert.verdict = Verdict::no_type4_guaranteed;
                cert.rule = "small-rs";
                cert.margins.emplace_back("r", static_cast<double>(rep->r));
                cert.margins.emplace_back("s", static_cast<double>(rep->s));
                return cert;
            }
        }
    }

    if (guard_mainiv(spec, n)) {
        Certificate cert;
        cert.verdict = Verdict::no_type4_guaranteed;
        cert.rule = "generic-exponent";
        return cert;
    }

    Certificate cert;
    cert.verdict = Verdict::undecided;
    cert.rule = "none";
    return cert;
}

}  // namespace resperm
