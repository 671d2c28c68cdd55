#pragma once

#include "skeletal/rational.hpp"

namespace skeletal {

/// Shared context for all predicates and enumerators: height n, inverse
/// slope m >= 0, base c > 0, and the group the coordinates live in.
struct Params {
    int n = 0;
    Scalar m = 0;
    Scalar c = 1;
    GroupMode mode = GroupMode::Integers;

    void validate() const {
        if (n <= 0) throw std::domain_error("n must be a positive integer");
        if (!(c > 0)) throw std::domain_error("c must be positive");
        if (m < 0) throw std::domain_error("m must be nonnegative");
        if (mode == GroupMode::Integers && (!is_integer(m) || !is_integer(c)))
            throw std::domain_error("integer mode requires integer m and c");
    }
};

inline Params params_z(int n, long long m, long long c) {
    Params p{n, Scalar(m), Scalar(c), GroupMode::Integers};
    p.validate();
    return p;
}

inline Params params_q(int n, Scalar m, Scalar c) {
    Params p{n, std::move(m), std::move(c), GroupMode::Rationals};
    p.validate();
    return p;
}

inline void require_k(const Params& params, int k) {
    if (k < 0 || k >= params.n)
        throw std::domain_error("k must satisfy 0 <= k <= n-1 (got k=" + std::to_string(k) +
                                ", n=" + std::to_string(params.n) + ")");
}

}  // namespace skeletal
