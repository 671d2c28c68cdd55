#pragma once

#include "skeletal/params.hpp"

#include <algorithm>

namespace skeletal {

/// A path of height n, stored as the x-coordinates of its north-step starts
/// (x_0 <= x_1 <= ... <= x_{n-1}). East steps are derived when rendering.
struct Path {
    std::vector<Scalar> xs;

    bool operator==(const Path&) const = default;
};

/// The area vector g of a path: g_i = m*i + c - x_i, the signed horizontal
/// distance from the i-th north-step start to the reference line x = m*y + c.
/// Valid vectors satisfy g_{i+1} <= g_i + m.
struct AreaVector {
    std::vector<Scalar> gs;

    bool operator==(const AreaVector&) const = default;
    auto operator<=>(const AreaVector&) const = default;
};

/// Multiset of run lengths, kept sorted ascending. A run is a maximal block
/// of north steps sharing one x-coordinate (equivalently, a maximal block of
/// area-vector entries each exceeding the previous one by m).
struct RunMultiset {
    std::vector<int> lengths;

    bool operator==(const RunMultiset&) const = default;
};

inline void validate_path(const Path& p, const Params& params) {
    params.validate();
    if (static_cast<int>(p.xs.size()) != params.n)
        throw std::domain_error("path has " + std::to_string(p.xs.size()) +
                                " north steps, expected n=" + std::to_string(params.n));
    for (std::size_t i = 0; i < p.xs.size(); ++i) {
        if (!in_group(p.xs[i], params.mode))
            throw std::domain_error("path coordinate x_" + std::to_string(i) + " = " +
                                    format_scalar(p.xs[i]) + " is not an integer");
        if (i + 1 < p.xs.size() && p.xs[i] > p.xs[i + 1])
            throw std::domain_error("path coordinates must be weakly increasing");
    }
}

/// Size and group membership only; the cycling operator acts on arbitrary
/// tuples, which need not satisfy the area-vector inequality.
inline void validate_group_tuple(const AreaVector& g, const Params& params) {
    params.validate();
    if (static_cast<int>(g.gs.size()) != params.n)
        throw std::domain_error("tuple has " + std::to_string(g.gs.size()) +
                                " entries, expected n=" + std::to_string(params.n));
    for (std::size_t i = 0; i < g.gs.size(); ++i)
        if (!in_group(g.gs[i], params.mode))
            throw std::domain_error("entry g_" + std::to_string(i) + " = " +
                                    format_scalar(g.gs[i]) + " is not an integer");
}

inline void validate_area_vector(const AreaVector& g, const Params& params) {
    validate_group_tuple(g, params);
    for (std::size_t i = 0; i + 1 < g.gs.size(); ++i)
        if (g.gs[i + 1] > g.gs[i] + params.m)
            throw std::domain_error("area-vector invariant g_{i+1} <= g_i + m fails at i=" +
                                    std::to_string(i));
}

inline AreaVector area_vector_of_path(const Path& p, const Params& params) {
    validate_path(p, params);
    AreaVector g;
    g.gs.reserve(p.xs.size());
    for (int i = 0; i < params.n; ++i) g.gs.push_back(params.m * i + params.c - p.xs[i]);
    return g;
}

inline Path path_of_area_vector(const AreaVector& g, const Params& params) {
    validate_area_vector(g, params);
    Path p;
    p.xs.reserve(g.gs.size());
    for (int i = 0; i < params.n; ++i) p.xs.push_back(params.m * i + params.c - g.gs[i]);
    return p;
}

/// Number of trailing strictly positive entries of g (n means g is a Dyck
/// vector, 0 means the final entry is already <= 0).
inline int pos(const AreaVector& g) {
    int count = 0;
    for (auto it = g.gs.rbegin(); it != g.gs.rend() && *it > 0; ++it) ++count;
    return count;
}

inline Scalar area(const AreaVector& g) {
    Scalar total = 0;
    for (const Scalar& gi : g.gs) total += gi;
    return total;
}

inline bool is_dyck(const AreaVector& g) {
    return pos(g) == static_cast<int>(g.gs.size());
}

/// The k-skeletal predicate on area vectors:
///   (A0) g_0 <= c,
///   (A1) the last k+1 entries are strictly positive,
///   (A2) no k+1 consecutive entries strictly exceed c.
inline bool is_k_skeletal(const AreaVector& g, int k, const Params& params) {
    validate_area_vector(g, params);
    require_k(params, k);
    const int n = params.n;
    if (g.gs.front() > params.c) return false;
    for (int i = n - 1 - k; i < n; ++i)
        if (!(g.gs[i] > 0)) return false;
    int above = 0;  // current streak of entries > c
    for (int i = 0; i < n; ++i) {
        above = g.gs[i] > params.c ? above + 1 : 0;
        if (above >= k + 1) return false;
    }
    return true;
}

/// Run lengths in path order (bottom to top).
inline std::vector<int> run_lengths(const AreaVector& g, const Params& params) {
    validate_area_vector(g, params);
    std::vector<int> lengths;
    int current = 1;
    for (std::size_t i = 1; i < g.gs.size(); ++i) {
        if (g.gs[i] == g.gs[i - 1] + params.m) {
            ++current;
        } else {
            lengths.push_back(current);
            current = 1;
        }
    }
    lengths.push_back(current);
    return lengths;
}

inline RunMultiset run_multiset(const AreaVector& g, const Params& params) {
    RunMultiset runs{run_lengths(g, params)};
    std::sort(runs.lengths.begin(), runs.lengths.end());
    return runs;
}

/// Number of functions f with path(f) equal to the path of g: the
/// multinomial coefficient n! / prod(r_i!) over the run lengths.
inline BigInt function_count_for_path(const AreaVector& g, const Params& params) {
    return multinomial(run_lengths(g, params));
}

/// 180-degree rotation about the point ((m*n - m + c - 1)/2, n/2), realizing
/// the duality between the k = 0 and k = n-1 families. Integer mode only.
inline Path rotate_180(const Path& p, const Params& params) {
    validate_path(p, params);
    if (params.mode != GroupMode::Integers)
        throw std::domain_error("rotate_180 requires integer mode");
    const Scalar span = params.m * (params.n - 1) + params.c - 1;
    Path result;
    result.xs.reserve(p.xs.size());
    for (auto it = p.xs.rbegin(); it != p.xs.rend(); ++it) result.xs.push_back(span - *it);
    return result;
}

inline std::string format_vector(const std::vector<Scalar>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += format_scalar(values[i]);
    }
    out += ")";
    return out;
}

}  // namespace skeletal
