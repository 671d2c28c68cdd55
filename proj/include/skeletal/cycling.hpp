#pragma once

#include "skeletal/path.hpp"

#include <optional>
#include <utility>

namespace skeletal {

/// One application of the cycling operator:
/// C(g_0, ..., g_{n-1}) = (g_1, ..., g_{n-1}, g_0 - c). Drops area by c.
/// Defined on arbitrary tuples; powers of C stay inside the area vectors
/// only when started from S.
inline AreaVector cycle(const AreaVector& g, const Params& params) {
    validate_group_tuple(g, params);
    AreaVector h;
    h.gs.assign(g.gs.begin() + 1, g.gs.end());
    h.gs.push_back(g.gs.front() - params.c);
    return h;
}

/// C^{-1}(h_0, ..., h_{n-1}) = (h_{n-1} + c, h_0, ..., h_{n-2}).
inline AreaVector cycle_inv(const AreaVector& h, const Params& params) {
    validate_group_tuple(h, params);
    AreaVector g;
    g.gs.reserve(h.gs.size());
    g.gs.push_back(h.gs.back() + params.c);
    g.gs.insert(g.gs.end(), h.gs.begin(), h.gs.end() - 1);
    return g;
}

namespace detail {

inline AreaVector cycle_pow_unchecked(const AreaVector& g, long long j, const Params& params) {
    const long long n = params.n;
    long long e = j / n, p = j % n;
    if (p < 0) {
        p += n;
        --e;
    }
    AreaVector h;
    h.gs.reserve(g.gs.size());
    const Scalar drop = params.c * e;
    for (long long i = p; i < n; ++i) h.gs.push_back(g.gs[i] - drop);
    for (long long i = 0; i < p; ++i) h.gs.push_back(g.gs[i] - drop - params.c);
    return h;
}

/// Walk step without revalidating: the caller guarantees g in S.
inline std::optional<std::pair<AreaVector, int>> next_step_unchecked(const AreaVector& g,
                                                                     const Params& params) {
    const int n = params.n;
    int s = 0;
    while (s < n && g.gs[s] <= params.c) ++s;
    if (s == n) return std::nullopt;
    int t = 0;
    while (s + t < n && g.gs[s + t] > params.c) ++t;
    return std::make_pair(cycle_pow_unchecked(g, s + t, params), s + t);
}

}  // namespace detail

/// C^j in closed form: writing j = e*n + p with 0 <= p < n,
/// C^j(g) = (g_p - e*c, ..., g_{n-1} - e*c, g_0 - (e+1)*c, ..., g_{p-1} - (e+1)*c).
inline AreaVector cycle_pow(const AreaVector& g, long long j, const Params& params) {
    validate_group_tuple(g, params);
    return detail::cycle_pow_unchecked(g, j, params);
}

/// Membership in S = {g in AV_n : g_0 <= c and g_{n-1} > 0}, the ambient set
/// whose cycling-equivalence classes carry the canonical representatives.
inline bool is_in_S(const AreaVector& g, const Params& params) {
    params.validate();
    if (static_cast<int>(g.gs.size()) != params.n) return false;
    for (std::size_t i = 0; i < g.gs.size(); ++i) {
        if (!in_group(g.gs[i], params.mode)) return false;
        if (i + 1 < g.gs.size() && g.gs[i + 1] > g.gs[i] + params.m) return false;
    }
    return g.gs.front() <= params.c && g.gs.back() > 0;
}

inline void require_in_S(const AreaVector& g, const Params& params) {
    if (!is_in_S(g, params))
        throw std::domain_error("area vector " + format_vector(g.gs) +
                                " is not in S (need a valid area vector with g_0 <= c and "
                                "g_{n-1} > 0)");
}

/// The minimal positive power of C taking g in S to the next element of its
/// class, together with that element: with s the longest prefix of entries
/// <= c and t the following maximal block of entries > c, the step is s + t.
/// Returns nothing when s = n (no later class element exists).
inline std::optional<std::pair<AreaVector, int>> next_in_S_step(const AreaVector& g,
                                                                const Params& params) {
    require_in_S(g, params);
    return detail::next_step_unchecked(g, params);
}

inline std::optional<AreaVector> next_in_S(const AreaVector& g, const Params& params) {
    auto step = next_in_S_step(g, params);
    if (!step) return std::nullopt;
    return std::move(step->first);
}

/// The unique Dyck vector of g's class, plus the power j0 with rep = C^{j0}(g)
/// (j0 <= 0). Construction: take the least e > 0 making every g_i + e*c
/// positive, then the least index j with g_j + e*c <= c; rep = C^{j - e*n}(g).
inline std::pair<AreaVector, long long> dyck_representative_offset(const AreaVector& g,
                                                                   const Params& params) {
    require_in_S(g, params);
    if (is_dyck(g)) return {g, 0};

    const Scalar least = *std::min_element(g.gs.begin(), g.gs.end());
    // least <= 0 here, so e >= 1.
    long long e = to_longlong(floor_scalar(-least / params.c) + 1, "cycling exponent");
    long long j = 0;
    while (j < params.n && g.gs[j] + params.c * e > params.c) ++j;
    if (j == params.n)
        throw std::logic_error("no admissible cut index while canonicalizing " +
                               format_vector(g.gs));
    return {detail::cycle_pow_unchecked(g, j - e * params.n, params), j - e * params.n};
}

inline AreaVector dyck_representative(const AreaVector& g, const Params& params) {
    return dyck_representative_offset(g, params).first;
}

/// One element of a class walk; offset is the total power of C applied from
/// the class's Dyck representative (0 for the representative itself).
struct ClassElement {
    AreaVector g;
    long long offset = 0;
};

/// A complete cycling-equivalence class in S, ordered by strictly
/// decreasing area starting from the Dyck representative.
struct ClassWalk {
    std::vector<ClassElement> elements;

    const ClassElement& front() const { return elements.front(); }
    std::size_t size() const { return elements.size(); }
};

inline ClassWalk enumerate_class(const AreaVector& g, const Params& params) {
    auto [rep, j0] = dyck_representative_offset(g, params);
    ClassWalk walk;
    walk.elements.push_back({std::move(rep), 0});
    bool input_seen = false;
    for (;;) {
        const ClassElement& last = walk.elements.back();
        input_seen = input_seen || last.g == g;
        auto step = detail::next_step_unchecked(last.g, params);
        if (!step) break;
        walk.elements.push_back({std::move(step->first), last.offset + step->second});
    }
    if (!input_seen)
        throw std::logic_error("class walk failed to revisit its seed " + format_vector(g.gs));
    return walk;
}

/// The unique k-skeletal element of g's class: the least element (by area)
/// with pos > k. The returned offset is the total power of C from the input
/// g to the result (negative when the result lies above g in the class).
inline std::pair<AreaVector, long long> k_skeletal_representative(const AreaVector& g, int k,
                                                                  const Params& params) {
    require_k(params, k);
    auto [rep, j0] = dyck_representative_offset(g, params);
    // Walk down from the Dyck element, remembering the last element whose
    // pos still exceeds k; the walk is strictly area-decreasing.
    ClassElement best{std::move(rep), 0};
    ClassElement current = best;
    for (;;) {
        auto step = detail::next_step_unchecked(current.g, params);
        if (!step) break;
        current = {std::move(step->first), current.offset + step->second};
        if (pos(current.g) > k) best = current;
    }
    return {std::move(best.g), best.offset + j0};
}

/// The canonical bijection between the k- and k'-skeletal families: map g to
/// the unique k'-skeletal area vector in its cycling class.
inline AreaVector map_k_to_kprime(const AreaVector& g, int k, int kp, const Params& params) {
    require_k(params, k);
    require_k(params, kp);
    if (!is_k_skeletal(g, k, params))
        throw std::domain_error("input area vector " + format_vector(g.gs) + " is not " +
                                std::to_string(k) + "-skeletal");
    if (k == kp) return g;
    return k_skeletal_representative(g, kp, params).first;
}

}  // namespace skeletal
