#pragma once

// Exhaustive search over (p, A, k) for Type (iv) maps. Per prime: discrete
// logs give x^k by table lookup, A runs over the positive half range (the
// negation symmetry recovers the rest), and each (A, k) is probed in a fixed
// seeded sample order with early exit once every class pair is witnessed.
// Emptiness is only ever declared after a complete pass, so the early exit
// is purely an accelerator. Output order is (p, A, k) regardless of jobs.

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "resperm/bounds.hpp"

namespace resperm {

enum class KMode { linear, sqrt_map, other, all };

inline const char* to_string(KMode m) {
    switch (m) {
        case KMode::linear: return "linear";
        case KMode::sqrt_map: return "sqrt";
        case KMode::other: return "other";
        default: return "all";
    }
}

enum class ARange { positive_half, full };

struct ScanConfig {
    int n = 3;
    std::uint64_t p_min = 3;
    std::uint64_t p_max = 3;
    KMode mode = KMode::all;
    bool exclude_families = false;
    ARange a_range = ARange::positive_half;
    int jobs = 1;  // 0 picks hardware concurrency
    std::uint64_t seed = 0x5eedu;
};

struct Finding {
    std::uint64_t p = 0;
    std::int64_t a = 0;   // least positive residue of the scanned coefficient
    std::uint64_t k = 0;  // normalized exponent
    int n = 0;
    KMode k_mode = KMode::other;
    std::vector<std::pair<int, int>> witnesses;  // all empty cells, lexicographic
};

// True iff no x in I_i has f(x) in I_j; one exact pass over I_i.
inline bool verify_witness(std::uint64_t p, std::int64_t a, std::int64_t k, int n, int i, int j) {
    const PermutationSpec spec = normalize_spec(p, a, k);
    if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("verify_witness: class out of range");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t x0 = (i == 0) ? un : static_cast<std::uint64_t>(i);
    for (std::uint64_t x = x0; x < p; x += un)
        if (eval_map(spec, x) % un == static_cast<std::uint64_t>(j)) return false;
    return true;
}

namespace detail {

// Reduction by a fixed 32-bit modulus without division. Exact for any
// x < 2^32 * p / 2^32 ... i.e. all 64-bit products of reduced operands.
struct Barrett32 {
    std::uint32_t p = 1;
    std::uint64_t m = 0;  // floor(2^64 / p)

    explicit Barrett32(std::uint32_t mod) : p(mod), m(~std::uint64_t{0} / mod) {}

    std::uint32_t reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m) >> 64);
        std::uint32_t r = static_cast<std::uint32_t>(x - q * p);
        return r >= p ? r - p : r;
    }
};

// Per-prime scaffolding shared by every (A, k) pair at that prime.
struct PrimeTables {
    std::uint64_t p = 0;
    int n = 0;
    std::vector<std::uint32_t> dlog;   // dlog[x] for x = 1..p-1, dlog[g^e] = e
    std::vector<std::uint32_t> gpow;   // gpow[e] = g^e mod p, e = 0..p-2
    std::vector<std::uint32_t> order;  // sample order of x values
    std::vector<std::uint8_t> row;     // order[t] mod n

    PrimeTables(std::uint64_t prime, int nn, std::uint64_t seed) : p(prime), n(nn) {
        const std::uint64_t g = resperm::detail::primitive_root(p);
        dlog.assign(static_cast<std::size_t>(p), 0);
        gpow.assign(static_cast<std::size_t>(p - 1), 0);
        std::uint64_t v = 1;
        for (std::uint64_t e = 0; e < p - 1; ++e) {
            gpow[static_cast<std::size_t>(e)] = static_cast<std::uint32_t>(v);
            dlog[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(e);
            v = mul_mod(v, g, p);
        }
        order = resperm::detail::sample_order(p, n, ScanOrder::shuffled, seed);
        row.resize(order.size());
        for (std::size_t t = 0; t < order.size(); ++t)
            row[t] = static_cast<std::uint8_t>(order[t] % static_cast<std::uint64_t>(n));
    }

    // x^k for the sample at position t
    std::uint32_t power_at(std::size_t t, std::uint64_t k) const {
        std::uint64_t e = static_cast<std::uint64_t>(dlog[order[t]]) * k % (p - 1);
        return gpow[static_cast<std::size_t>(e)];
    }
};

// Coverage masks for one exponent over every A in [1, h]: bit i*n+j set
// once some sampled x in I_i had A x^k in I_j. Runs a dense phase over all
// A (vector-friendly, no early exit) until the undone set is small, then a
// compacted survivor phase with per-A exit. Returns the A values whose mask
// is still incomplete after the full pass, i.e. the Type (iv) coefficients.
template <int N>
std::vector<std::pair<std::uint32_t, std::uint32_t>> incomplete_masks(const PrimeTables& tab,
                                                                      std::uint64_t k,
                                                                      std::uint32_t h) {
    static_assert(N >= 2 && N * N <= 32);
    const std::uint32_t p32 = static_cast<std::uint32_t>(tab.p);
    const Barrett32 bar(p32);
    const std::uint32_t full = (N * N == 32) ? ~0u : ((1u << (N * N)) - 1u);
    const std::size_t total = tab.order.size();
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(h) + 1, 0);

    std::size_t t = 0;
    std::size_t undone = h;
    while (t < total) {
        const std::size_t t_end = std::min(t + 8, total);
        for (; t < t_end; ++t) {
            const std::uint32_t y = tab.power_at(t, k);
            const std::uint32_t base = static_cast<std::uint32_t>(tab.row[t]) * N;
            std::uint32_t* m = masks.data() + 1;
            for (std::uint32_t a = 1; a <= h; ++a, ++m) {
                std::uint32_t v = bar.reduce(static_cast<std::uint64_t>(a) * y);
                *m |= 1u << (base + v % N);
            }
        }
        if (t >= 16) {
            undone = 0;
            for (std::uint32_t a = 1; a <= h; ++a) undone += masks[a] != full;
            if (undone == 0) return {};
            if (undone * 32 <= h || t >= 96) break;
        }
    }

    std::vector<std::uint32_t> surv;
    surv.reserve(undone);
    for (std::uint32_t a = 1; a <= h; ++a)
        if (masks[a] != full) surv.push_back(a);

    for (; t < total && !surv.empty(); ++t) {
        const std::uint32_t y = tab.power_at(t, k);
        const std::uint32_t base = static_cast<std::uint32_t>(tab.row[t]) * N;
        for (std::size_t idx = 0; idx < surv.size();) {
            const std::uint32_t a = surv[idx];
            std::uint32_t v = bar.reduce(static_cast<std::uint64_t>(a) * y);
            const std::uint32_t m = masks[a] | (1u << (base + v % N));
            masks[a] = m;
            if (m == full) {
                surv[idx] = surv.back();
                surv.pop_back();
            } else {
                ++idx;
            }
        }
    }

    std::sort(surv.begin(), surv.end());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(surv.size());
    for (std::uint32_t a : surv) out.emplace_back(a, masks[a]);
    return out;
}

// Same contract for n beyond the bitmask fast path; per-A early-exit walk.
inline std::vector<std::pair<std::uint32_t, std::vector<std::uint64_t>>> incomplete_masks_wide(
    const PrimeTables& tab, std::uint64_t k, std::uint32_t h, int n) {
    const std::uint32_t p32 = static_cast<std::uint32_t>(tab.p);
    const Barrett32 bar(p32);
    const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    const std::size_t words = (cells + 63) / 64;
    const std::size_t total = tab.order.size();

    // structurally impossible cells count as covered
    const auto part = partition(tab.p, n);
    std::vector<std::uint64_t> base_mask(words, 0);
    std::size_t needed = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::size_t cell = static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
            if (part.sizes[static_cast<std::size_t>(i)] == 0 || part.sizes[static_cast<std::size_t>(j)] == 0)
                base_mask[cell / 64] |= std::uint64_t{1} << (cell % 64);
            else
                ++needed;
        }

    std::vector<std::uint32_t> ypow(total);
    for (std::size_t t = 0; t < total; ++t) ypow[t] = tab.power_at(t, k);

    std::vector<std::pair<std::uint32_t, std::vector<std::uint64_t>>> out;
    std::vector<std::uint64_t> mask(words);
    for (std::uint32_t a = 1; a <= h; ++a) {
        mask = base_mask;
        std::size_t covered = 0;
        for (std::size_t t = 0; t < total; ++t) {
            std::uint32_t v = bar.reduce(static_cast<std::uint64_t>(a) * ypow[t]);
            std::size_t cell = static_cast<std::size_t>(tab.row[t]) * static_cast<std::size_t>(n) +
                               v % static_cast<std::uint32_t>(n);
            const std::uint64_t bit = std::uint64_t{1} << (cell % 64);
            if (!(mask[cell / 64] & bit)) {
                mask[cell / 64] |= bit;
                if (++covered == needed) break;
            }
        }
        if (covered < needed) out.emplace_back(a, mask);
    }
    return out;
}

}  // namespace detail

inline KMode classify_k(std::uint64_t p, std::uint64_t k) {
    if (k == 1) return KMode::linear;
    if (p % 4 == 1 && k == (p + 1) / 2) return KMode::sqrt_map;
    return KMode::other;
}

// All Type (iv) findings at one prime, ordered by (A, k).
inline std::vector<Finding> scan_prime(std::uint64_t p, const ScanConfig& cfg) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("scan_prime: p must be an odd prime");
    if (cfg.n < 2) throw std::invalid_argument("scan_prime: n must be >= 2");
    if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("scan_prime: p above 2^31 not supported");
    const int n = cfg.n;
    const std::uint32_t h =
        cfg.a_range == ARange::positive_half ? static_cast<std::uint32_t>((p - 1) / 2)
                                             : static_cast<std::uint32_t>(p - 1);

    // family exclusion bitmap over |abs least| values
    std::vector<char> excluded;
    if (cfg.exclude_families && (cfg.mode == KMode::linear || cfg.mode == KMode::sqrt_map)) {
        excluded.assign(static_cast<std::size_t>((p - 1) / 2) + 1, 0);
        if (cfg.mode == KMode::linear) {
            if (p > static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n))
                for (std::int64_t v : critical_set(p, n))
                    if (v > 0) excluded[static_cast<std::size_t>(v)] = 1;
        } else {
            for (const auto& fam : sqrt_families(n))
                if (auto v = instantiate(fam, p)) excluded[static_cast<std::size_t>(*v)] = 1;
        }
    }

    const detail::PrimeTables tab(p, n, cfg.seed);
    std::vector<Finding> findings;

    const auto sweep_k = [&](std::uint64_t k) {
        const auto attach = [&](std::uint32_t a, auto has_bit) {
            if (!excluded.empty()) {
                std::uint64_t abs_a = a <= (p - 1) / 2 ? a : p - a;
                if (excluded[static_cast<std::size_t>(abs_a)]) return;
            }
            Finding f{p, static_cast<std::int64_t>(a), k, n, classify_k(p, k), {}};
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!has_bit(i, j)) f.witnesses.emplace_back(i, j);
            if (!f.witnesses.empty()) findings.push_back(std::move(f));
        };
        if (n * n <= 32 && static_cast<std::uint64_t>(n) < p) {
            auto run = [&]<int N>() {
                for (auto [a, mask] : detail::incomplete_masks<N>(tab, k, h))
                    attach(a, [mask](int i, int j) { return (mask >> (i * N + j)) & 1u; });
            };
            switch (n) {
                case 2: run.template operator()<2>(); break;
                case 3: run.template operator()<3>(); break;
                case 4: run.template operator()<4>(); break;
                case 5: run.template operator()<5>(); break;
                default:
                    for (auto& [a, mask] : detail::incomplete_masks_wide(tab, k, h, n))
                        attach(a, [&mask, n](int i, int j) {
                            std::size_t cell = static_cast<std::size_t>(i) * n + j;
                            return (mask[cell / 64] >> (cell % 64)) & 1u;
                        });
            }
        } else {
            for (auto& [a, mask] : detail::incomplete_masks_wide(tab, k, h, n))
                attach(a, [&mask, n](int i, int j) {
                    std::size_t cell = static_cast<std::size_t>(i) * n + j;
                    return (mask[cell / 64] >> (cell % 64)) & 1u;
                });
        }
    };

    const std::uint64_t sqrt_k = p % 4 == 1 ? (p + 1) / 2 : 0;
    switch (cfg.mode) {
        case KMode::linear:
            sweep_k(1);
            break;
        case KMode::sqrt_map:
            if (sqrt_k != 0 && std::gcd(sqrt_k, p - 1) == 1) sweep_k(sqrt_k);
            break;
        default:
            for (std::uint64_t k = 1; k <= p - 2; ++k) {
                if (std::gcd(k, p - 1) != 1) continue;
                if (cfg.mode == KMode::other && (k == 1 || k == sqrt_k)) continue;
                sweep_k(k);
            }
    }

    std::sort(findings.begin(), findings.end(), [](const Finding& x, const Finding& y) {
        return std::tie(x.a, x.k) < std::tie(y.a, y.k);
    });
    return findings;
}

// Parallel ordered driver: primes are scanned independently, findings are
// delivered to the sink in (p, A, k) order whatever the job count.
inline void scan_range(const ScanConfig& cfg, const std::function<void(const Finding&)>& sink,
                       const std::function<void(std::uint64_t, std::size_t, std::size_t)>& progress = {}) {
    const auto primes = primes_in(std::max<std::uint64_t>(cfg.p_min, 3), cfg.p_max);
    int jobs = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    if (jobs == 1 || primes.size() <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) {
            for (const Finding& f : scan_prime(primes[i], cfg)) sink(f);
            if (progress) progress(primes[i], i + 1, primes.size());
        }
        return;
    }

    std::vector<std::vector<Finding>> done(primes.size());
    std::vector<char> ready(primes.size(), 0);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;

    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= primes.size()) return;
            auto res = scan_prime(primes[i], cfg);
            {
                std::lock_guard<std::mutex> lock(mu);
                done[i] = std::move(res);
                ready[i] = 1;
            }
            cv.notify_one();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);

    {
        std::unique_lock<std::mutex> lock(mu);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            cv.wait(lock, [&] { return ready[i] != 0; });
            auto batch = std::move(done[i]);
            lock.unlock();
            for (const Finding& f : batch) sink(f);
            if (progress) progress(primes[i], i + 1, primes.size());
            lock.lock();
        }
    }
    for (auto& th : pool) th.join();
}

inline std::vector<Finding> scan_range(const ScanConfig& cfg) {
    std::vector<Finding> out;
    scan_range(cfg, [&](const Finding& f) { out.push_back(f); });
    return out;
}

// One displayed row: coefficients sharing an exponent set and witness set.
struct TableRow {
    std::uint64_t p = 0;
    std::vector<std::int64_t> a_values;
    std::vector<std::uint64_t> k_values;
    std::vector<std::pair<int, int>> witnesses;
};

namespace detail {

inline std::vector<TableRow> group_rows(std::uint64_t p, const std::vector<Finding>& fs) {
    // group by witness set, then merge exponents with identical coefficient
    // lists; splits honestly whenever the (A, k) grid is not a full product
    std::vector<TableRow> rows;
    std::vector<std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<std::uint64_t, std::int64_t>>>>
        by_wit;
    for (const auto& f : fs) {
        auto it = std::find_if(by_wit.begin(), by_wit.end(),
                               [&](const auto& e) { return e.first == f.witnesses; });
        if (it == by_wit.end()) {
            by_wit.push_back({f.witnesses, {{f.k, f.a}}});
        } else {
            it->second.emplace_back(f.k, f.a);
        }
    }
    for (auto& [wit, ka] : by_wit) {
        std::sort(ka.begin(), ka.end());
        std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::uint64_t>>> merged;
        std::size_t i = 0;
        while (i < ka.size()) {
            std::size_t j = i;
            std::vector<std::int64_t> as;
            while (j < ka.size() && ka[j].first == ka[i].first) as.push_back(ka[j++].second);
            bool appended = false;
            for (auto& [mas, mks] : merged)
                if (mas == as) {
                    mks.push_back(ka[i].first);
                    appended = true;
                    break;
                }
            if (!appended) merged.push_back({as, {ka[i].first}});
            i = j;
        }
        for (auto& [as, ks] : merged) rows.push_back(TableRow{p, as, ks, wit});
    }
    std::sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) {
        return std::tie(x.a_values, x.k_values) < std::tie(y.a_values, y.k_values);
    });
    return rows;
}

}  // namespace detail

// Rows for the five largest primes <= p_max admitting findings.
inline std::vector<TableRow> five_largest(int n, std::uint64_t p_max, KMode mode = KMode::other,
                                          int jobs = 1) {
    ScanConfig cfg;
    cfg.n = n;
    cfg.p_min = 3;
    cfg.p_max = p_max;
    cfg.mode = mode;
    cfg.jobs = jobs;
    std::vector<std::pair<std::uint64_t, std::vector<Finding>>> per_prime;
    scan_range(cfg, [&](const Finding& f) {
        if (per_prime.empty() || per_prime.back().first != f.p) per_prime.push_back({f.p, {}});
        per_prime.back().second.push_back(f);
    });
    std::vector<TableRow> rows;
    std::size_t start = per_prime.size() > 5 ? per_prime.size() - 5 : 0;
    for (std::size_t i = start; i < per_prime.size(); ++i) {
        auto grouped = detail::group_rows(per_prime[i].first, per_prime[i].second);
        rows.insert(rows.end(), grouped.begin(), grouped.end());
    }
    return rows;
}

// Rows for the largest prime <= p_max with a finding whose coefficient is
// outside the instantiated family set.
inline std::vector<TableRow> largest_excluding_families(int n, std::uint64_t p_max, KMode mode,
                                                        int jobs = 1) {
    if (mode != KMode::linear && mode != KMode::sqrt_map)
        throw std::invalid_argument("largest_excluding_families: mode must be linear or sqrt");
    ScanConfig cfg;
    cfg.n = n;
    cfg.p_min = 3;
    cfg.p_max = p_max;
    cfg.mode = mode;
    cfg.exclude_families = true;
    cfg.jobs = jobs;
    std::vector<std::pair<std::uint64_t, std::vector<Finding>>> per_prime;
    scan_range(cfg, [&](const Finding& f) {
        if (per_prime.empty() || per_prime.back().first != f.p) per_prime.push_back({f.p, {}});
        per_prime.back().second.push_back(f);
    });
    if (per_prime.empty()) return {};
    return detail::group_rows(per_prime.back().first, per_prime.back().second);
}

// Exponent pairing: when a witness (i, j) has 2j = p mod n, the companion
// exponent k' = k +- (p-1)/2 shows the same witness (x^((p-1)/2) = +-1 and
// the class j is fixed under y -> p - y). Confirms by direct verification;
// vacuously true when no such witness exists or k' is not coprime.
inline bool pairing_check(std::uint64_t p, std::int64_t a, std::uint64_t k, int n) {
    const PermutationSpec spec = normalize_spec(p, a, static_cast<std::int64_t>(k));
    std::uint64_t k2 = (spec.k + (p - 1) / 2) % (p - 1);
    if (k2 == 0 || std::gcd(k2, p - 1) != 1) return true;
    const auto empties = image_matrix(spec, n).empty_cells();
    for (const auto& [i, j] : empties) {
        if ((2 * static_cast<std::uint64_t>(j)) % static_cast<std::uint64_t>(n) !=
            p % static_cast<std::uint64_t>(n))
            continue;
        if (!verify_witness(p, a, static_cast<std::int64_t>(k2), n, i, j)) return false;
    }
    return true;
}

// JSON-lines and CSV emission; stable field order, integers only.
inline std::string finding_jsonl(const Finding& f) {
    std::ostringstream os;
    os << "{\"p\":" << f.p << ",\"A\":" << f.a << ",\"k\":" << f.k << ",\"n\":" << f.n
       << ",\"k_mode\":\"" << to_string(f.k_mode) << "\",\"witnesses\":[";
    for (std::size_t i = 0; i < f.witnesses.size(); ++i) {
        if (i) os << ",";
        os << "[" << f.witnesses[i].first << "," << f.witnesses[i].second << "]";
    }
    os << "]}";
    return os.str();
}

inline std::string finding_csv_header() { return "p,A,k,n,k_mode,witnesses"; }

inline std::string finding_csv(const Finding& f) {
    std::ostringstream os;
    os << f.p << "," << f.a << "," << f.k << "," << f.n << "," << to_string(f.k_mode) << ",";
    for (std::size_t i = 0; i < f.witnesses.size(); ++i) {
        if (i) os << ";";
        os << f.witnesses[i].first << ":" << f.witnesses[i].second;
    }
    return os.str();
}

}  // namespace resperm
