#pragma once

#include "skeletal/path.hpp"

#include <string>
#include <string_view>

namespace skeletal {

/// Signed horizontal distance from (x, y) to the line x = m*y; north steps
/// raise the level by m, east steps lower it by 1.
inline long long level(long long x, long long y, long long m) { return m * y - x; }

namespace detail {

inline void require_step_word(std::string_view word) {
    for (char ch : word)
        if (ch != 'N' && ch != 'E')
            throw std::domain_error("step words may contain only 'N' and 'E'");
}

inline int north_count(std::string_view word) {
    int n = 0;
    for (char ch : word) n += ch == 'N';
    return n;
}

/// Start levels of the north steps, bottom to top.
inline std::vector<long long> north_start_levels(std::string_view word, long long m) {
    std::vector<long long> levels;
    long long lvl = 0;
    for (char ch : word) {
        if (ch == 'N') {
            levels.push_back(lvl);
            lvl += m;
        } else {
            --lvl;
        }
    }
    return levels;
}

}  // namespace detail

/// Membership in the augmented m-Dyck paths of height n: n north steps and
/// m*n + 1 east steps, weakly above x = m*y except for the final east step.
inline bool is_augmented_m_dyck(std::string_view word, long long m) {
    detail::require_step_word(word);
    if (word.empty() || word.back() != 'E') return false;
    const long long n = detail::north_count(word);
    if (static_cast<long long>(word.size()) != n + m * n + 1) return false;
    long long lvl = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        lvl += word[i] == 'N' ? m : -1;
        if (lvl < 0) return false;
    }
    return true;
}

/// Membership in the augmented k-skeletal paths (c = 1): the last k+1 north
/// steps start at levels >= 0, and no k+1 consecutive north steps all start
/// at levels > 0. Checked directly on levels, independently of the
/// area-vector predicate.
inline bool is_augmented_k_skeletal(std::string_view word, long long m, int k) {
    detail::require_step_word(word);
    if (word.empty() || word.back() != 'E') return false;
    const long long n = detail::north_count(word);
    if (static_cast<long long>(word.size()) != n + m * n + 1) return false;
    if (k < 0 || k >= n) return false;
    const auto levels = detail::north_start_levels(word, m);
    for (long long i = n - 1 - k; i < n; ++i)
        if (levels[i] < 0) return false;
    int above = 0;
    for (long long i = 0; i < n; ++i) {
        above = levels[i] > 0 ? above + 1 : 0;
        if (above >= k + 1) return false;
    }
    return true;
}

/// First-return factorization pi = N pi_1 pi_2 ... pi_{m+1}: the prefix
/// N pi_1 ... pi_j is the shortest initial segment ending at level m - j.
inline std::vector<std::string> decompose(std::string_view pi, long long m) {
    if (m < 1) throw std::domain_error("first-return decomposition needs m >= 1");
    if (!is_augmented_m_dyck(pi, m))
        throw std::domain_error("not an augmented m-Dyck path: " + std::string(pi));
    if (detail::north_count(pi) == 0)
        throw std::domain_error("cannot decompose a path of height 0");

    std::vector<std::string> factors;
    std::string current;
    long long lvl = m;  // after the leading north step
    long long target = m - 1;
    for (std::size_t i = 1; i < pi.size(); ++i) {
        current.push_back(pi[i]);
        lvl += pi[i] == 'N' ? m : -1;
        if (lvl == target) {
            factors.push_back(std::move(current));
            current.clear();
            --target;
        }
    }
    if (static_cast<long long>(factors.size()) != m + 1 || !current.empty())
        throw std::logic_error("first-return decomposition did not close");
    return factors;
}

inline std::string recompose(const std::vector<std::string>& factors) {
    std::string pi = "N";
    for (const std::string& factor : factors) pi += factor;
    return pi;
}

namespace detail {

inline std::string reversed(std::string word) {
    std::reverse(word.begin(), word.end());
    return word;
}

/// Index s from the factorization: the largest s in 1..m+2 with
/// p_1 + ... + p_{s-1} <= k.
inline int choose_s(const std::vector<std::string>& factors, int k) {
    int s = 1;
    long long sum = 0;
    for (const std::string& factor : factors) {
        sum += north_count(factor);
        if (sum > k) break;
        ++s;
    }
    return s;
}

}  // namespace detail

/// The bijection from augmented m-Dyck paths to augmented k-skeletal paths
/// (c = 1). The tail recursion of the defining cases is unrolled into a loop.
inline std::string phi(std::string_view pi, long long m, int n, int k) {
    if (m < 1) throw std::domain_error("phi needs m >= 1");
    if (k < 0 || k >= n) throw std::domain_error("phi needs 0 <= k <= n-1");
    if (detail::north_count(pi) != n)
        throw std::domain_error("phi: path has wrong height");
    if (!is_augmented_m_dyck(pi, m))
        throw std::domain_error("phi: not an augmented m-Dyck path: " + std::string(pi));

    std::string out;
    std::string work(pi);
    for (;;) {
        const int height = detail::north_count(work);
        if (height == k + 1) {
            out += work;
            return out;
        }
        const auto factors = decompose(work, m);
        const int s = detail::choose_s(factors, k);
        if (s > m + 1)
            throw std::logic_error("phi: s = m+2 can only occur when n = k+1");
        std::string tail;
        for (std::size_t j = s; j < factors.size(); ++j) tail += factors[j];
        out += detail::reversed(std::move(tail));
        out += 'N';
        for (int j = 0; j + 1 < s; ++j) out += factors[j];
        if (k + 1 >= detail::north_count(factors[s - 1])) {
            out += factors[s - 1];
            return out;
        }
        work = factors[s - 1];
    }
}

/// Inverse of phi. Splits omega = omega_1 N omega_2 omega_3 where omega_1 N
/// is the shortest initial segment ending at a nonnegative level and
/// omega_1 N omega_2 the shortest one ending at level zero.
inline std::string psi(std::string_view omega, long long m, int n, int k) {
    if (m < 1) throw std::domain_error("psi needs m >= 1");
    if (k < 0 || k >= n) throw std::domain_error("psi needs 0 <= k <= n-1");
    if (detail::north_count(omega) != n)
        throw std::domain_error("psi: path has wrong height");
    if (!is_augmented_k_skeletal(omega, m, k))
        throw std::domain_error("psi: not an augmented k-skeletal path: " + std::string(omega));

    std::string prefix;
    std::vector<std::string> suffixes;
    std::string work(omega);
    std::string middle;
    for (;;) {
        const int height = detail::north_count(work);
        if (height == k + 1) {
            middle = std::move(work);
            break;
        }
        long long lvl = 0;
        std::size_t cut1 = work.size();  // end of omega_1 N (exclusive)
        for (std::size_t i = 0; i < work.size(); ++i) {
            lvl += work[i] == 'N' ? m : -1;
            if (lvl >= 0) {
                cut1 = i + 1;
                break;
            }
        }
        if (cut1 == work.size() || work[cut1 - 1] != 'N')
            throw std::logic_error("psi: no north step returns to a nonnegative level");
        std::size_t cut2 = cut1;  // end of omega_1 N omega_2 (exclusive)
        while (lvl != 0) {
            lvl += work[cut2] == 'N' ? m : -1;
            ++cut2;
        }
        prefix += 'N';
        prefix.append(work, cut1, cut2 - cut1);
        suffixes.push_back(detail::reversed(work.substr(0, cut1 - 1)));
        std::string rest = work.substr(cut2);
        if (k + 1 >= detail::north_count(rest)) {
            middle = std::move(rest);
            break;
        }
        work = std::move(rest);
    }
    std::string out = std::move(prefix);
    out += middle;
    while (!suffixes.empty()) {
        out += suffixes.back();
        suffixes.pop_back();
    }
    return out;
}

/// Fuss-Catalan number C_n^m = binom(m*n + n, n) / (m*n + 1), the size of
/// the augmented m-Dyck family.
inline BigInt fuss_catalan(long long n, long long m) {
    if (n < 0 || m < 0) throw std::domain_error("fuss_catalan needs n, m >= 0");
    BigInt numerator = binomial(BigInt(m * n + n), n);
    BigInt divisor = m * n + 1;
    if (numerator % divisor != 0) throw std::logic_error("Fuss-Catalan division not exact");
    return numerator / divisor;
}

/// All augmented m-Dyck paths of height n, in lexicographic order ('E' < 'N').
inline std::vector<std::string> enumerate_m_dyck(int n, long long m) {
    if (n < 0 || m < 0) throw std::domain_error("enumerate_m_dyck needs n, m >= 0");
    std::vector<std::string> out;
    std::string word;
    auto dfs = [&](auto&& self, int rem_n, long long rem_e, long long lvl) -> void {
        if (rem_n == 0 && rem_e == 0) {
            out.push_back(word + 'E');
            return;
        }
        if (rem_e > 0 && lvl >= 1) {
            word.push_back('E');
            self(self, rem_n, rem_e - 1, lvl - 1);
            word.pop_back();
        }
        if (rem_n > 0) {
            word.push_back('N');
            self(self, rem_n - 1, rem_e, lvl + m);
            word.pop_back();
        }
    };
    dfs(dfs, n, m * static_cast<long long>(n), 0);
    return out;
}

/// Strips the augmentation east step and reads off north-step x-coordinates.
/// Accepts any word of the augmented shape (n norths, m*n + 1 easts, final
/// step east), whether m-Dyck or skeletal.
inline Path path_of_augmented_word(std::string_view word, long long m) {
    detail::require_step_word(word);
    const long long n = detail::north_count(word);
    if (word.empty() || word.back() != 'E' ||
        static_cast<long long>(word.size()) != n + m * n + 1)
        throw std::domain_error("not an augmented step word: " + std::string(word));
    Path p;
    long long x = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] == 'N')
            p.xs.push_back(Scalar(x));
        else
            ++x;
    }
    return p;
}

/// Appends the augmentation east step to the standard word of a c = 1 path.
inline std::string augmented_word_of_path(const Path& p, const Params& params) {
    validate_path(p, params);
    if (params.mode != GroupMode::Integers || params.c != 1)
        throw std::domain_error("augmented words are defined for integer mode with c = 1");
    if (!p.xs.empty() && p.xs.front() < 0)
        throw std::domain_error("augmented words need a nonnegative path");
    std::string word;
    long long x = 0;
    for (const Scalar& xi : p.xs) {
        const long long target = to_longlong(numerator(xi), "path coordinate");
        if (target < x) throw std::logic_error("path coordinates must be weakly increasing");
        word.append(target - x, 'E');
        word.push_back('N');
        x = target;
    }
    const long long end = to_longlong(numerator(params.m), "m") * params.n;
    if (x > end) throw std::domain_error("path escapes the augmented region");
    word.append(end - x, 'E');
    word.push_back('E');
    return word;
}

}  // namespace skeletal
