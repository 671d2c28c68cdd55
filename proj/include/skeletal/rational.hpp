#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skeletal {

/// Arbitrary-precision integer used for counts and polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Values are kept in lowest terms with a positive
/// denominator, so the denominator is 1 exactly when the value is an integer.
using Scalar = boost::multiprecision::cpp_rational;

/// The additive group the scalars are required to live in.
enum class GroupMode { Integers, Rationals };

inline bool is_integer(const Scalar& x) { return denominator(x) == 1; }

inline bool in_group(const Scalar& x, GroupMode mode) {
    return mode == GroupMode::Rationals || is_integer(x);
}

inline const char* group_mode_name(GroupMode mode) {
    return mode == GroupMode::Integers ? "Z" : "Q";
}

/// Largest integer <= x.
inline BigInt floor_scalar(const Scalar& x) {
    BigInt num = numerator(x);
    BigInt den = denominator(x);  // > 0
    BigInt q = num / den;         // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

/// Canonical text form: plain decimal for integers, "p/q" with q > 0 and
/// gcd(p, q) = 1 otherwise.
inline std::string format_scalar(const Scalar& x) {
    std::string s = numerator(x).str();
    if (!is_integer(x)) {
        s += '/';
        s += denominator(x).str();
    }
    return s;
}

/// Parses the text form accepted everywhere in this library: an optional
/// sign, a decimal integer, and an optional "/q" with q a positive integer.
inline Scalar parse_scalar(std::string_view text) {
    auto fail = [&] {
        throw std::domain_error("invalid rational literal: '" + std::string(text) + "'");
    };
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) fail();

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto digits = [&](std::string_view part) {
        if (part.empty()) fail();
        for (char ch : part)
            if (ch < '0' || ch > '9') fail();
        return BigInt(std::string(part));
    };

    std::size_t slash = s.find('/');
    BigInt num, den;
    if (slash == std::string_view::npos) {
        num = digits(s);
        den = 1;
    } else {
        num = digits(s.substr(0, slash));
        den = digits(s.substr(slash + 1));
        if (den == 0) fail();
    }
    if (negative) num = -num;
    return Scalar(num, den);
}

/// n! / (r_1! r_2! ... r_a!) for parts summing to n.
inline BigInt multinomial(const std::vector<int>& parts) {
    BigInt result = 1;
    long long placed = 0;
    for (int part : parts) {
        if (part <= 0) throw std::domain_error("multinomial parts must be positive");
        for (long long i = 1; i <= part; ++i) {
            result *= placed + i;
            result /= i;  // exact: result is binom(placed + i, i) * earlier factors
        }
        placed += part;
    }
    return result;
}

inline BigInt binomial(const BigInt& n, long long k) {
    if (k < 0 || n < 0 || BigInt(k) > n) return 0;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline BigInt int_pow(BigInt base, long long exp) {
    if (exp < 0) throw std::domain_error("negative exponent");
    BigInt result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

/// Narrowing helper for offsets and loop bounds derived from BigInt values.
inline long long to_longlong(const BigInt& v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::domain_error(std::string(what) + " out of supported range");
    return static_cast<long long>(v);
}

}  // namespace skeletal
