#pragma once

#include "skeletal/cycling.hpp"

#include <numeric>

namespace skeletal {

/// A function f : [n] -> G, stored by position (values[a-1] = f(a)).
struct FnTable {
    std::vector<Scalar> values;

    bool operator==(const FnTable&) const = default;
};

/// A labeled path: an area vector plus the permutation w listing which input
/// labels each north step carries, bottom to top. Within every run of equal
/// x-coordinates (g_{i+1} = g_i + m) the labels strictly increase.
struct LabeledPath {
    AreaVector g;
    std::vector<int> w;

    bool operator==(const LabeledPath&) const = default;
};

inline void validate_labeled_path(const LabeledPath& lp, const Params& params) {
    validate_area_vector(lp.g, params);
    const int n = params.n;
    if (static_cast<int>(lp.w.size()) != n)
        throw std::domain_error("label sequence has wrong length");
    std::vector<bool> seen(n + 1, false);
    for (int label : lp.w) {
        if (label < 1 || label > n || seen[label])
            throw std::domain_error("label sequence is not a permutation of 1..n");
        seen[label] = true;
    }
    for (int i = 0; i + 1 < n; ++i)
        if (lp.g.gs[i + 1] == lp.g.gs[i] + params.m && !(lp.w[i] < lp.w[i + 1]))
            throw std::domain_error("labels must increase within a run of equal x-coordinates");
}

inline LabeledPath labeled_path_of_fn(const FnTable& f, const Params& params) {
    params.validate();
    const int n = params.n;
    if (static_cast<int>(f.values.size()) != n)
        throw std::domain_error("function table has " + std::to_string(f.values.size()) +
                                " values, expected n=" + std::to_string(n));
    for (const Scalar& v : f.values)
        if (!in_group(v, params.mode))
            throw std::domain_error("function value " + format_scalar(v) + " is not an integer");

    // Sort inputs by value, ties broken by increasing label.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Scalar& fa = f.values[a - 1];
        const Scalar& fb = f.values[b - 1];
        return fa != fb ? fa < fb : a < b;
    });

    Path p;
    p.xs.reserve(n);
    for (int label : order) p.xs.push_back(f.values[label - 1]);
    return {area_vector_of_path(p, params), std::move(order)};
}

inline FnTable fn_of_labeled_path(const LabeledPath& lp, const Params& params) {
    validate_labeled_path(lp, params);
    Path p = path_of_area_vector(lp.g, params);
    FnTable f;
    f.values.resize(params.n);
    for (int i = 0; i < params.n; ++i) f.values[lp.w[i] - 1] = p.xs[i];
    return f;
}

/// A function is k-skeletal exactly when its unlabeled path is.
inline bool is_k_skeletal_fn(const FnTable& f, int k, const Params& params) {
    return is_k_skeletal(labeled_path_of_fn(f, params).g, k, params);
}

inline std::vector<int> rotate_left(std::vector<int> w, long long amount) {
    const long long n = static_cast<long long>(w.size());
    long long r = ((amount % n) + n) % n;
    std::rotate(w.begin(), w.begin() + r, w.end());
    return w;
}

/// The canonical bijection between the k- and k'-skeletal function families:
/// cycle the underlying area vector to its k'-skeletal representative and
/// rotate the label sequence by the same total power of C (mod n).
inline FnTable map_fn_k_to_kprime(const FnTable& f, int k, int kp, const Params& params) {
    require_k(params, k);
    require_k(params, kp);
    LabeledPath lp = labeled_path_of_fn(f, params);
    if (!is_k_skeletal(lp.g, k, params))
        throw std::domain_error("input function is not " + std::to_string(k) + "-skeletal");
    if (k == kp) return f;
    auto [target, offset] = k_skeletal_representative(lp.g, kp, params);
    LabeledPath moved{std::move(target), rotate_left(std::move(lp.w), offset)};
    // Run boundaries are preserved along class steps, so the rotated labels
    // still satisfy the joint invariant; fn_of_labeled_path re-checks it.
    return fn_of_labeled_path(moved, params);
}

}  // namespace skeletal
