#pragma once

#include "skeletal/chip.hpp"

#include <future>
#include <thread>

namespace skeletal {

namespace detail {

struct IntGridParams {
    int n;
    long long m;
    long long c;
    long long x_bound;  // inclusive upper bound m*(n-1) + c - 1 forced by (A1)
};

inline IntGridParams int_grid(const Params& params) {
    params.validate();
    if (params.mode != GroupMode::Integers)
        throw std::domain_error("exhaustive enumeration requires integer mode "
                                "(the rational families are infinite)");
    const long long m = to_longlong(numerator(params.m), "m");
    const long long c = to_longlong(numerator(params.c), "c");
    return {params.n, m, c, m * (params.n - 1) + c - 1};
}

/// Truth interval of k for a candidate tuple: a path in the search box is
/// k-skeletal iff max_run(entries > c) <= k < pos. (A0) holds throughout the
/// box since x_0 >= 0.
struct SkeletalInterval {
    int k_min;
    int k_max;  // inclusive; empty when k_min > k_max
};

inline SkeletalInterval classify(const std::vector<long long>& xs, const IntGridParams& grid) {
    const int n = grid.n;
    int trailing_positive = 0;
    for (int i = n - 1; i >= 0; --i) {
        if (grid.m * i + grid.c - xs[i] > 0)
            ++trailing_positive;
        else
            break;
    }
    int above = 0, longest_above = 0;
    for (int i = 0; i < n; ++i) {
        above = grid.m * i - xs[i] > 0 ? above + 1 : 0;  // g_i > c  <=>  x_i < m*i
        longest_above = std::max(longest_above, above);
    }
    return {longest_above, trailing_positive - 1};
}

inline AreaVector area_vector_of_ints(const std::vector<long long>& xs,
                                      const IntGridParams& grid) {
    AreaVector g;
    g.gs.reserve(xs.size());
    for (int i = 0; i < grid.n; ++i) g.gs.emplace_back(grid.m * i + grid.c - xs[i]);
    return g;
}

/// Visits every weakly increasing tuple in [first_x0, last_x0] x ... x
/// [0, x_bound] with the given first coordinate range.
template <typename Visit>
void scan_tuples(const IntGridParams& grid, long long first_x0, long long last_x0,
                 Visit&& visit) {
    std::vector<long long> xs(grid.n);
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == grid.n) {
            visit(xs);
            return;
        }
        const long long low = depth == 0 ? first_x0 : xs[depth - 1];
        const long long high = depth == 0 ? last_x0 : grid.x_bound;
        for (long long x = low; x <= high; ++x) {
            xs[depth] = x;
            self(self, depth + 1);
        }
    };
    if (first_x0 <= last_x0) dfs(dfs, 0);
}

}  // namespace detail

/// All k-skeletal area vectors for every k at once, indexed by k and sorted
/// lexicographically. Generation partitions the search box on x_0 across
/// threads; the final per-k sort keeps the output deterministic.
inline std::vector<std::vector<AreaVector>> enumerate_skv_all_k(const Params& params) {
    const auto grid = detail::int_grid(params);
    const int n = grid.n;

    using Buckets = std::vector<std::vector<AreaVector>>;
    auto scan_range = [&](long long first_x0, long long last_x0) {
        Buckets buckets(n);
        detail::scan_tuples(grid, first_x0, last_x0, [&](const std::vector<long long>& xs) {
            const auto interval = detail::classify(xs, grid);
            if (interval.k_min > interval.k_max) return;
            AreaVector g = detail::area_vector_of_ints(xs, grid);
            for (int k = interval.k_min; k < interval.k_max; ++k) buckets[k].push_back(g);
            buckets[interval.k_max].push_back(std::move(g));
        });
        return buckets;
    };

    const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
    const long long splits = std::min<long long>(grid.x_bound + 1, hardware);
    Buckets merged(n);
    if (splits <= 1 || n < 4) {
        merged = scan_range(0, grid.x_bound);
    } else {
        std::vector<std::future<Buckets>> parts;
        for (long long x0 = 0; x0 <= grid.x_bound; ++x0)
            parts.push_back(std::async(std::launch::async, scan_range, x0, x0));
        for (auto& part : parts) {
            Buckets local = part.get();
            for (int k = 0; k < n; ++k)
                merged[k].insert(merged[k].end(), std::make_move_iterator(local[k].begin()),
                                 std::make_move_iterator(local[k].end()));
        }
    }
    for (auto& bucket : merged) std::sort(bucket.begin(), bucket.end());
    return merged;
}

inline std::vector<AreaVector> enumerate_skv(int k, const Params& params) {
    require_k(params, k);
    return std::move(enumerate_skv_all_k(params)[k]);
}

/// All label sequences compatible with the run structure of g, i.e. the
/// permutations of 1..n increasing within each run, in lexicographic order.
inline std::vector<std::vector<int>> label_sequences_for(const AreaVector& g,
                                                         const Params& params) {
    const std::vector<int> runs = run_lengths(g, params);
    const int n = params.n;
    std::vector<std::vector<int>> out;
    std::vector<int> word;
    std::vector<bool> used(n + 1, false);
    std::vector<int> block;

    auto fill_block = [&](auto&& self, std::size_t run_index, int remaining, int min_label) -> void {
        if (remaining == 0) {
            if (run_index + 1 == runs.size()) {
                out.push_back(word);
                return;
            }
            self(self, run_index + 1, runs[run_index + 1], 1);
            return;
        }
        // Labels within a block appear in increasing order.
        for (int label = min_label; label <= n; ++label) {
            if (used[label]) continue;
            used[label] = true;
            word.push_back(label);
            self(self, run_index, remaining - 1, label + 1);
            word.pop_back();
            used[label] = false;
        }
    };
    fill_block(fill_block, 0, runs[0], 1);
    return out;
}

/// All k-skeletal functions (integer mode), ordered by area vector and then
/// label sequence.
inline std::vector<FnTable> enumerate_skf(int k, const Params& params) {
    std::vector<FnTable> out;
    for (const AreaVector& g : enumerate_skv(k, params)) {
        const Path p = path_of_area_vector(g, params);
        for (const std::vector<int>& w : label_sequences_for(g, params)) {
            FnTable f;
            f.values.resize(params.n);
            for (int i = 0; i < params.n; ++i) f.values[w[i] - 1] = p.xs[i];
            out.push_back(std::move(f));
        }
    }
    return out;
}

/// m-ballot number c/((m+1)n + c) * binom((m+1)n + c, n): the common size of
/// every k-skeletal path family over the integers.
inline BigInt ballot_count(const Params& params) {
    const auto grid = detail::int_grid(params);
    const BigInt total = (grid.m + 1) * BigInt(grid.n) + grid.c;
    const BigInt product = grid.c * binomial(total, grid.n);
    if (product % total != 0) throw std::logic_error("ballot count division not exact");
    return product / total;
}

/// c * (m*n + c)^{n-1}: the common size of every k-skeletal function family
/// over the integers.
inline BigInt parking_count(const Params& params) {
    const auto grid = detail::int_grid(params);
    return grid.c * int_pow(BigInt(grid.m) * grid.n + grid.c, grid.n - 1);
}

enum class Family { Skv, Skf };

inline const char* family_name(Family family) { return family == Family::Skv ? "skv" : "skf"; }

/// One grid point of a count check: the exhaustive per-k counts next to the
/// closed-form value.
struct CountReport {
    Params params;
    Family family = Family::Skv;
    std::vector<BigInt> per_k;
    BigInt formula;
    bool match = false;
};

inline CountReport count_report(const Params& params, Family family) {
    CountReport report;
    report.params = params;
    report.family = family;
    if (family == Family::Skv) {
        report.formula = ballot_count(params);
        for (const auto& bucket : enumerate_skv_all_k(params))
            report.per_k.emplace_back(bucket.size());
    } else {
        report.formula = parking_count(params);
        for (int k = 0; k < params.n; ++k)
            report.per_k.emplace_back(enumerate_skf(k, params).size());
    }
    report.match = std::all_of(report.per_k.begin(), report.per_k.end(),
                               [&](const BigInt& count) { return count == report.formula; });
    return report;
}

/// Exhaustive counts vs. closed forms over a whole parameter grid.
inline std::vector<CountReport> verify_grid(int n_max, long long m_max, long long c_max,
                                            Family family) {
    if (n_max < 1 || m_max < 0 || c_max < 1)
        throw std::domain_error("grid bounds need n_max >= 1, m_max >= 0, c_max >= 1");
    std::vector<CountReport> reports;
    for (int n = 1; n <= n_max; ++n)
        for (long long m = 0; m <= m_max; ++m)
            for (long long c = 1; c <= c_max; ++c)
                reports.push_back(count_report(params_z(n, m, c), family));
    return reports;
}

}  // namespace skeletal
