#pragma once

#include "skeletal/labeled.hpp"

#include <bit>
#include <cstdint>

namespace skeletal {

/// Chip counts on the non-sink vertices 1..n of the weighted complete graph
/// K_{n+1} (non-sink/non-sink edges carry weight m, sink edges weight c).
/// The sink's count is determined by the total degree and is not stored.
struct ChipConfig {
    std::vector<Scalar> chips;  // chips[i-1] = count at vertex i

    bool operator==(const ChipConfig&) const = default;
};

/// Vertex subsets of [n] as bitmasks: bit i-1 stands for vertex i.
using VertexSet = std::uint64_t;

inline void validate_chip_config(const ChipConfig& D, const Params& params) {
    params.validate();
    if (static_cast<int>(D.chips.size()) != params.n)
        throw std::domain_error("chip configuration has " + std::to_string(D.chips.size()) +
                                " vertices, expected n=" + std::to_string(params.n));
    for (const Scalar& v : D.chips)
        if (!in_group(v, params.mode))
            throw std::domain_error("chip count " + format_scalar(v) + " is not an integer");
}

inline void require_vertex_set(VertexSet S, const Params& params) {
    if (params.n > 62) throw std::domain_error("vertex subsets support at most n = 62");
    if (S == 0) throw std::domain_error("vertex subset must be nonempty");
    if (S >> params.n)
        throw std::domain_error("vertex subset mentions a vertex beyond n");
}

inline bool is_nonnegative(const ChipConfig& D) {
    for (const Scalar& v : D.chips)
        if (v < 0) return false;
    return true;
}

/// Fire the subset S of size f: each firing vertex loses m*(n-f) + c (m to
/// every outside vertex, c to the sink) and every outside vertex gains m*f.
inline ChipConfig fire(const ChipConfig& D, VertexSet S, const Params& params) {
    validate_chip_config(D, params);
    require_vertex_set(S, params);
    const int f = std::popcount(S);
    const Scalar loss = params.m * (params.n - f) + params.c;
    const Scalar gain = params.m * f;
    ChipConfig out = D;
    for (int i = 0; i < params.n; ++i)
        out.chips[i] += (S >> i) & 1 ? -loss : gain;
    return out;
}

/// Borrow at the subset T of size p: the inverse of fire(., T).
inline ChipConfig borrow(const ChipConfig& D, VertexSet T, const Params& params) {
    validate_chip_config(D, params);
    require_vertex_set(T, params);
    const int p = std::popcount(T);
    const Scalar gain = params.m * (params.n - p) + params.c;
    const Scalar loss = params.m * p;
    ChipConfig out = D;
    for (int i = 0; i < params.n; ++i)
        out.chips[i] += (T >> i) & 1 ? gain : -loss;
    return out;
}

/// S can legally fire iff every vertex of S holds at least m*(n-|S|) + c.
inline bool can_fire(const ChipConfig& D, VertexSet S, const Params& params) {
    validate_chip_config(D, params);
    require_vertex_set(S, params);
    const Scalar need = params.m * (params.n - std::popcount(S)) + params.c;
    for (int i = 0; i < params.n; ++i)
        if (((S >> i) & 1) && D.chips[i] < need) return false;
    return true;
}

/// T can legally borrow iff every vertex outside T holds at least m*|T|.
inline bool can_borrow(const ChipConfig& D, VertexSet T, const Params& params) {
    validate_chip_config(D, params);
    require_vertex_set(T, params);
    const Scalar need = params.m * std::popcount(T);
    for (int i = 0; i < params.n; ++i)
        if (!((T >> i) & 1) && D.chips[i] < need) return false;
    return true;
}

/// The labeled path of D: vertices sorted from poorest to richest (ties by
/// label), exactly the labeled-path encoding of D read as a function table.
inline LabeledPath chip_to_labeled(const ChipConfig& D, const Params& params) {
    validate_chip_config(D, params);
    return labeled_path_of_fn(FnTable{D.chips}, params);
}

/// Some p-element subset can legally borrow iff p = n or g_p <= c, where g
/// is the area vector of D. Requires D >= 0.
inline bool exists_legal_borrow_of_size(const ChipConfig& D, int p, const Params& params) {
    validate_chip_config(D, params);
    if (p < 1 || p > params.n) throw std::domain_error("borrow size must lie in 1..n");
    if (!is_nonnegative(D)) throw std::domain_error("exists_legal_borrow_of_size needs D >= 0");
    if (p == params.n) return true;
    return chip_to_labeled(D, params).g.gs[p] <= params.c;
}

/// pos of C^p(g) without materializing the cycled vector.
inline int pos_after_cycle(const AreaVector& g, int p, const Params& params) {
    const int n = static_cast<int>(g.gs.size());
    int count = 0;
    for (int i = n - 1; i >= 0; --i) {
        const bool wrapped = i >= n - p;
        const Scalar& entry = wrapped ? g.gs[i - (n - p)] : g.gs[p + i];
        if (wrapped ? entry > params.c : entry > 0)
            ++count;
        else
            break;
    }
    return count;
}

/// Direct evaluation of the defining conditions by subset scan (exponential;
/// meant as the oracle for desk-scale n):
///   (C0) D >= 0,
///   (C1) no nonempty subset of size <= k+1 can legally fire,
///   (C2) after every legal borrow, some subset of size <= k+1 can fire.
inline bool is_k_skeletal_chip(const ChipConfig& D, int k, const Params& params) {
    validate_chip_config(D, params);
    require_k(params, k);
    const int n = params.n;
    if (n > 62) throw std::domain_error("subset scan supports at most n = 62");
    if (!is_nonnegative(D)) return false;

    // Thresholds m*(n-f) + c for firing and m*p for borrowing, by subset size.
    std::vector<Scalar> fire_need(n + 1), borrow_need(n + 1);
    for (int size = 1; size <= n; ++size) {
        fire_need[size] = params.m * (n - size) + params.c;
        borrow_need[size] = params.m * size;
    }

    const VertexSet full = (VertexSet(1) << n) - 1;
    auto small_subset_can_fire = [&](const std::vector<Scalar>& chips) {
        for (VertexSet S = 1; S <= full; ++S) {
            const int f = std::popcount(S);
            if (f > k + 1) continue;
            bool legal = true;
            for (int i = 0; legal && i < n; ++i)
                if (((S >> i) & 1) && chips[i] < fire_need[f]) legal = false;
            if (legal) return true;
        }
        return false;
    };

    if (small_subset_can_fire(D.chips)) return false;  // (C1)
    std::vector<Scalar> after(n);
    for (VertexSet T = 1; T <= full; ++T) {
        const int p = std::popcount(T);
        bool legal = true;
        for (int i = 0; legal && i < n; ++i)
            if (!((T >> i) & 1) && D.chips[i] < borrow_need[p]) legal = false;
        if (!legal) continue;
        const Scalar gain = params.m * (n - p) + params.c;
        for (int i = 0; i < n; ++i)
            after[i] = D.chips[i] + (((T >> i) & 1) ? gain : -borrow_need[p]);
        if (!small_subset_can_fire(after)) return false;  // (C2)
    }
    return true;
}

/// Polynomial-time equivalent of is_k_skeletal_chip, via the area vector:
///   (C0) D >= 0,
///   (C1) pos(g) > k,
///   (C2') for every p with (p = n or g_p <= c) and g_{p-1} > c, borrowing at
///         the p poorest vertices gives area vector C^p(g), which must again
///         have pos <= k.
inline bool is_k_skeletal_chip_fast(const ChipConfig& D, int k, const Params& params) {
    validate_chip_config(D, params);
    require_k(params, k);
    if (!is_nonnegative(D)) return false;
    const AreaVector g = chip_to_labeled(D, params).g;
    if (pos(g) <= k) return false;
    for (int p = 1; p <= params.n; ++p) {
        if (!(p == params.n || g.gs[p] <= params.c)) continue;
        if (!(g.gs[p - 1] > params.c)) continue;
        if (pos_after_cycle(g, p, params) > k) return false;
    }
    return true;
}

}  // namespace skeletal
