#pragma once

// Residue-class partitions I_j = {1 <= x <= p-1 : x = j mod n}, exact image
// matrices of the power permutation f(x) = A x^k mod p, and the Type
// (i)/(iia)/(iib)/(iii)/(iv) classification of how class images distribute.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "resperm/modnum.hpp"

namespace resperm {

enum class SpecFault { not_odd_prime, zero_coefficient, exponent_not_coprime };

struct SpecError : std::domain_error {
    SpecFault fault;
    SpecError(SpecFault f, const char* what) : std::domain_error(what), fault(f) {}
};

// A validated triple (p, A, k): p odd prime, A the absolute-least residue of
// the coefficient (nonzero mod p), k the exponent reduced into [1, p-2] with
// gcd(k, p-1) = 1, so f permutes {1, ..., p-1}. k_raw keeps the exponent as
// supplied (possibly negative); the map depends only on k mod (p-1).
struct PermutationSpec {
    std::uint64_t p = 0;
    std::int64_t a = 0;    // |a| < p/2, a != 0
    std::uint64_t k = 0;   // 1 <= k <= p-2
    std::int64_t k_raw = 0;

    bool is_linear() const { return k == 1; }
    bool is_sqrt() const { return p % 4 == 1 && k == (p + 1) / 2; }
};

inline PermutationSpec normalize_spec(std::uint64_t p, std::int64_t a, std::int64_t k) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw SpecError(SpecFault::not_odd_prime, "p must be an odd prime");
    std::int64_t a_red = abs_least(a, p);
    if (a_red == 0)
        throw SpecError(SpecFault::zero_coefficient, "A must be nonzero mod p");
    std::int64_t order = static_cast<std::int64_t>(p - 1);
    std::int64_t k_red = k % order;
    if (k_red <= 0) k_red += order;  // k = 0 mod (p-1) lands on p-1 and fails the gcd test
    if (std::gcd(k_red, order) != 1)
        throw SpecError(SpecFault::exponent_not_coprime, "gcd(k, p-1) must be 1");
    return PermutationSpec{p, a_red, static_cast<std::uint64_t>(k_red), k};
}

inline int class_of(std::uint64_t x, int n) {
    if (n < 2) throw std::invalid_argument("class modulus must be >= 2");
    return static_cast<int>(x % static_cast<std::uint64_t>(n));
}

struct ResiduePartition {
    int n = 0;
    std::vector<std::uint64_t> sizes;  // sizes[j] = |I_j|
};

inline ResiduePartition partition(std::uint64_t p, int n) {
    if (n < 2) throw std::invalid_argument("class modulus must be >= 2");
    ResiduePartition part{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
    // |I_j| = floor((p-1-j)/n) + 1 for 1 <= j <= p-1; class 0 starts at n
    std::uint64_t last = p - 1;
    for (int j = 0; j < n; ++j) {
        std::uint64_t first = (j == 0) ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(j);
        part.sizes[static_cast<std::size_t>(j)] = first > last ? 0 : (last - first) / n + 1;
    }
    return part;
}

inline std::uint64_t eval_map(const PermutationSpec& spec, std::uint64_t x) {
    if (x < 1 || x > spec.p - 1) throw std::invalid_argument("eval_map: x out of range");
    std::uint64_t a_pos = static_cast<std::uint64_t>(spec.a < 0 ? spec.a + static_cast<std::int64_t>(spec.p) : spec.a);
    return mul_mod(a_pos, pow_mod(x, static_cast<std::int64_t>(spec.k), spec.p), spec.p);
}

struct ImageMatrix {
    int n = 0;
    std::uint64_t p = 0;
    std::int64_t a = 0;
    std::uint64_t k = 0;
    std::vector<std::uint64_t> cells;  // row-major n*n

    std::uint64_t at(int i, int j) const {
        return cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    }
    std::uint64_t row_sum(int i) const {
        std::uint64_t s = 0;
        for (int j = 0; j < n; ++j) s += at(i, j);
        return s;
    }
    std::uint64_t col_sum(int j) const {
        std::uint64_t s = 0;
        for (int i = 0; i < n; ++i) s += at(i, j);
        return s;
    }
    std::vector<std::pair<int, int>> empty_cells() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j) == 0) out.emplace_back(i, j);
        return out;
    }
};

// m[i][j] = |{x in I_i : f(x) in I_j}| by a single pass over x = 1..p-1.
// Reference implementation; the search module has the table-driven fast path.
inline ImageMatrix image_matrix(const PermutationSpec& spec, int n) {
    if (n < 2) throw std::invalid_argument("class modulus must be >= 2");
    ImageMatrix m{n, spec.p, spec.a, spec.k,
                  std::vector<std::uint64_t>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0)};
    const std::uint64_t p = spec.p;
    const std::uint64_t a_pos = static_cast<std::uint64_t>(spec.a < 0 ? spec.a + static_cast<std::int64_t>(p) : spec.a);
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    for (std::uint64_t x = 1; x < p; ++x) {
        std::uint64_t fx = mul_mod(a_pos, pow_mod(x, static_cast<std::int64_t>(spec.k), p), p);
        m.cells[static_cast<std::size_t>(x % un) * un + fx % un] += 1;
    }
    return m;
}

enum class ScanOrder { sequential, shuffled };

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic per-prime visit order: each residue class shuffled
// independently, then classes interleaved round-robin so row coverage stays
// balanced. With ScanOrder::sequential it is just 1..p-1.
inline std::vector<std::uint32_t> sample_order(std::uint64_t p, int n, ScanOrder order,
                                               std::uint64_t seed = 0x5eedu) {
    std::vector<std::uint32_t> xs;
    xs.reserve(static_cast<std::size_t>(p - 1));
    if (order == ScanOrder::sequential) {
        for (std::uint64_t x = 1; x < p; ++x) xs.push_back(static_cast<std::uint32_t>(x));
        return xs;
    }
    std::vector<std::vector<std::uint32_t>> by_class(static_cast<std::size_t>(n));
    for (std::uint64_t x = 1; x < p; ++x)
        by_class[static_cast<std::size_t>(x % static_cast<std::uint64_t>(n))].push_back(static_cast<std::uint32_t>(x));
    std::uint64_t state = seed ^ (p * 0x9e3779b97f4a7c15ull);
    for (auto& cls : by_class) {
        for (std::size_t i = cls.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(splitmix64(state) % i);
            std::swap(cls[i - 1], cls[j]);
        }
    }
    std::size_t remaining = static_cast<std::size_t>(p - 1);
    std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
    while (remaining > 0) {
        for (int c = 0; c < n; ++c) {
            auto& cls = by_class[static_cast<std::size_t>(c)];
            if (next[static_cast<std::size_t>(c)] < cls.size()) {
                xs.push_back(cls[next[static_cast<std::size_t>(c)]++]);
                --remaining;
            }
        }
    }
    return xs;
}

}  // namespace detail

// Early-exit Type (iv) probe. Returns nothing as soon as every cell (i,j)
// with nonempty I_i and I_j has been witnessed; otherwise, after the full
// pass, the lexicographically least empty cell.
inline std::optional<std::pair<int, int>> has_missed_cell(const PermutationSpec& spec, int n,
                                                          ScanOrder order = ScanOrder::shuffled) {
    if (n < 2) throw std::invalid_argument("class modulus must be >= 2");
    const std::uint64_t p = spec.p;
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const auto part = partition(p, n);
    std::vector<char> hit(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::size_t needed = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (part.sizes[static_cast<std::size_t>(i)] > 0 && part.sizes[static_cast<std::size_t>(j)] > 0)
                ++needed;
    const std::uint64_t a_pos = static_cast<std::uint64_t>(spec.a < 0 ? spec.a + static_cast<std::int64_t>(p) : spec.a);
    std::size_t covered = 0;
    for (std::uint32_t x : detail::sample_order(p, n, order)) {
        std::uint64_t fx = mul_mod(a_pos, pow_mod(x, static_cast<std::int64_t>(spec.k), p), p);
        std::size_t cell = static_cast<std::size_t>(x % un) * un + fx % un;
        if (!hit[cell]) {
            hit[cell] = 1;
            if (++covered == needed) return std::nullopt;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (part.sizes[static_cast<std::size_t>(i)] == 0 || part.sizes[static_cast<std::size_t>(j)] == 0)
                continue;
            if (!hit[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)])
                return std::make_pair(i, j);
        }
    return std::nullopt;
}

struct TypeReport {
    bool type_i = false;
    bool type_iia = false;
    bool type_iib = false;
    bool type_iii = false;
    bool type_iv = false;
    std::optional<int> fixed_class;                    // witness for (iib)
    std::optional<std::pair<int, int>> containment;    // witness for (iii)
    std::vector<std::pair<int, int>> empty_cells;      // all witnesses for (iv)
    std::vector<int> class_permutation;                // sigma for (iia), empty otherwise
};

// All five flags from the exact image matrix:
//   (i)   m[j][j] = |I_j| for all j
//   (iia) each row has one nonzero cell sigma(i), sigma injective, full rows
//   (iib) some j has m[j][j] = |I_j|
//   (iii) some row has a single nonzero cell
//   (iv)  some cell is zero
inline TypeReport classify(const PermutationSpec& spec, int n) {
    const ImageMatrix m = image_matrix(spec, n);
    const auto part = partition(spec.p, n);
    TypeReport rep;

    rep.type_i = true;
    for (int j = 0; j < n; ++j)
        if (m.at(j, j) != part.sizes[static_cast<std::size_t>(j)]) { rep.type_i = false; break; }

    std::vector<int> sigma(static_cast<std::size_t>(n), -1);
    bool iia = true;
    for (int i = 0; i < n && iia; ++i) {
        int nz = -1;
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j) == 0) continue;
            if (nz >= 0) { nz = -2; break; }
            nz = j;
        }
        if (nz < 0) { iia = false; break; }
        if (m.at(i, nz) != part.sizes[static_cast<std::size_t>(i)] ||
            part.sizes[static_cast<std::size_t>(i)] != part.sizes[static_cast<std::size_t>(nz)]) {
            iia = false;
            break;
        }
        sigma[static_cast<std::size_t>(i)] = nz;
    }
    if (iia) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            int j = sigma[static_cast<std::size_t>(i)];
            if (seen[static_cast<std::size_t>(j)]) { iia = false; break; }
            seen[static_cast<std::size_t>(j)] = 1;
        }
    }
    rep.type_iia = iia;
    if (iia) rep.class_permutation = sigma;

    for (int j = 0; j < n; ++j)
        if (m.at(j, j) == part.sizes[static_cast<std::size_t>(j)]) {
            rep.type_iib = true;
            rep.fixed_class = j;
            break;
        }

    for (int i = 0; i < n && !rep.containment.has_value(); ++i) {
        int nz = -1;
        bool single = part.sizes[static_cast<std::size_t>(i)] > 0;
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j) == 0) continue;
            if (nz >= 0) { single = false; break; }
            nz = j;
        }
        if (single && nz >= 0) {
            rep.type_iii = true;
            rep.containment = std::make_pair(i, nz);
        }
    }

    rep.empty_cells = m.empty_cells();
    rep.type_iv = !rep.empty_cells.empty();
    return rep;
}

}  // namespace resperm
