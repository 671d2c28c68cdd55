#pragma once

#include "skeletal/path.hpp"

namespace skeletal {

namespace detail {

inline long long int_coord(const Scalar& x, const char* what) {
    if (!is_integer(x)) throw std::domain_error(std::string(what) + " is not an integer");
    return to_longlong(numerator(x), what);
}

}  // namespace detail

/// Step word of a nonnegative integer path, drawn from (0,0) to (M, n) with
/// M = m*n + c - 1 (widened if the path escapes that box).
inline std::string word_of_path(const Path& p, const Params& params) {
    validate_path(p, params);
    if (params.mode != GroupMode::Integers)
        throw std::domain_error("step words require integer mode");
    if (p.xs.front() < 0)
        throw std::domain_error("step words require a nonnegative path");
    const long long m = detail::int_coord(params.m, "m");
    const long long c = detail::int_coord(params.c, "c");
    const long long last = detail::int_coord(p.xs.back(), "x");
    const long long width = std::max(m * params.n + c - 1, last);

    std::string word;
    long long x = 0;
    for (const Scalar& xi : p.xs) {
        const long long target = detail::int_coord(xi, "x");
        word.append(target - x, 'E');
        word.push_back('N');
        x = target;
    }
    word.append(width - x, 'E');
    return word;
}

/// Reads a step word back into a path (n = number of norths).
inline Path path_of_word(std::string_view word, const Params& params) {
    Path p;
    long long x = 0;
    for (char ch : word) {
        if (ch == 'N')
            p.xs.push_back(Scalar(x));
        else if (ch == 'E')
            ++x;
        else
            throw std::domain_error("step words may contain only 'N' and 'E'");
    }
    validate_path(p, params);
    return p;
}

/// Character picture of an integer-mode path, printed top row (height n)
/// first. Each row shows the east steps entering at its base height as '_',
/// the north step as '|', and the reference line x = m*y + c as '+'.
inline std::string ascii_path(const Path& p, const Params& params) {
    validate_path(p, params);
    if (params.mode != GroupMode::Integers)
        throw std::domain_error("ASCII rendering requires integer mode");
    if (p.xs.front() < 0)
        throw std::domain_error("ASCII rendering requires a nonnegative path");
    const long long m = detail::int_coord(params.m, "m");
    const long long c = detail::int_coord(params.c, "c");
    const int n = params.n;

    std::vector<long long> xs;
    xs.reserve(n);
    for (const Scalar& xi : p.xs) xs.push_back(detail::int_coord(xi, "x"));
    const long long top_edge = std::max(m * n + c - 1, xs.back());
    long long width = std::max(top_edge, m * n + c) + 1;

    std::string out;
    for (int y = n; y >= 0; --y) {
        std::string row(width, '.');
        const long long from = y == 0 ? 0 : xs[y - 1];
        const long long to = y == n ? top_edge : xs[y];
        for (long long col = from + 1; col <= to; ++col) row[col] = '_';
        if (y < n) row[xs[y]] = '|';
        const long long ref = m * y + c;
        if (ref < width && row[ref] == '.') row[ref] = '+';
        while (!row.empty() && row.back() == '.') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace skeletal
