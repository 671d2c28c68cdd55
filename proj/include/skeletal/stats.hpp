#pragma once

#include "skeletal/labeled.hpp"

namespace skeletal {

/// A dinv-style weight function F, summed over ordered pairs of area-vector
/// entries to form a statistic that cycling leaves invariant. Every kernel
/// satisfies F(z) = F(c - z) for its associated c.
struct StatKernel {
    enum class Kind { IndicatorDinv, RangeDinv, SlopeDinv, TrapezoidDinv, Tabulated };

    Kind kind = Kind::IndicatorDinv;
    Scalar m = 1;
    Scalar c = 1;
    std::vector<std::pair<Scalar, Scalar>> table;  // Tabulated only

    /// F = 1 on {0, 1}: the classical dinv kernel (c = 1).
    static StatKernel indicator_dinv() { return {Kind::IndicatorDinv, 1, 1, {}}; }

    /// F = 1 on [0, c].
    static StatKernel range_dinv(Scalar c) {
        if (!(c > 0)) throw std::domain_error("range kernel needs c > 0");
        return {Kind::RangeDinv, 1, std::move(c), {}};
    }

    /// F(z) = max(0, m + 1/2 - |z - 1/2|): the slope-m dinv kernel (c = 1).
    static StatKernel slope_dinv(Scalar m) {
        if (m < 0) throw std::domain_error("slope kernel needs m >= 0");
        return {Kind::SlopeDinv, std::move(m), 1, {}};
    }

    /// F(z) = max(0, m + c/2 - |z - c/2|).
    static StatKernel trapezoid_dinv(Scalar m, Scalar c) {
        if (m < 0 || !(c > 0)) throw std::domain_error("trapezoid kernel needs m >= 0, c > 0");
        return {Kind::TrapezoidDinv, std::move(m), std::move(c), {}};
    }

    /// Escape hatch: a finitely supported F given by (z, F(z)) pairs, zero
    /// elsewhere. Symmetry F(z) = F(c - z) is checked on every evaluation.
    static StatKernel tabulated(std::vector<std::pair<Scalar, Scalar>> table, Scalar c) {
        if (!(c > 0)) throw std::domain_error("tabulated kernel needs c > 0");
        for (const auto& [z, value] : table)
            if (value < 0)
                throw std::domain_error("tabulated kernel values must be nonnegative");
        return {Kind::Tabulated, 1, std::move(c), std::move(table)};
    }

    const Scalar& associated_c() const { return c; }

    Scalar eval(const Scalar& z) const {
        switch (kind) {
            case Kind::IndicatorDinv:
                return z == 0 || z == 1 ? 1 : 0;
            case Kind::RangeDinv:
                return z >= 0 && z <= c ? 1 : 0;
            case Kind::SlopeDinv:
            case Kind::TrapezoidDinv: {
                Scalar half = c / 2;
                Scalar value = m + half - abs(z - half);
                return value > 0 ? value : Scalar(0);
            }
            case Kind::Tabulated: {
                Scalar fz = lookup(z);
                if (fz != lookup(c - z))
                    throw std::domain_error("tabulated kernel breaks F(z) = F(c - z) at z = " +
                                            format_scalar(z));
                return fz;
            }
        }
        throw std::logic_error("unknown kernel kind");
    }

  private:
    Scalar lookup(const Scalar& z) const {
        for (const auto& [key, value] : table)
            if (key == z) return value;
        return 0;
    }
};

/// Generating polynomial in t with nonnegative integer coefficients
/// (coeffs[i] multiplies t^i); trailing zeros are trimmed away.
struct Poly {
    std::vector<BigInt> coeffs;

    void add_term(const BigInt& exponent, const BigInt& coefficient = 1) {
        if (exponent < 0) throw std::domain_error("polynomial exponents must be nonnegative");
        const auto e = static_cast<std::size_t>(to_longlong(exponent, "polynomial exponent"));
        if (coeffs.size() <= e) coeffs.resize(e + 1);
        coeffs[e] += coefficient;
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool operator==(const Poly& other) const {
        Poly a = *this, b = other;
        a.trim();
        b.trim();
        return a.coeffs == b.coeffs;
    }

    std::string str() const {
        Poly t = *this;
        t.trim();
        if (t.coeffs.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
            if (t.coeffs[i] == 0) continue;
            if (!out.empty()) out += " + ";
            if (i == 0 || t.coeffs[i] != 1) out += t.coeffs[i].str();
            if (i > 0) {
                if (t.coeffs[i] != 1) out += "*";
                out += "t";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }
};

/// stat(g) = sum over pairs i < j of F(g_i - g_j). Every kernel value that
/// occurs must be a nonnegative integer; half-integral trapezoid values on
/// non-integral differences are rejected rather than scaled.
inline BigInt stat(const AreaVector& g, const StatKernel& kernel) {
    BigInt total = 0;
    const std::size_t n = g.gs.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar value = kernel.eval(g.gs[i] - g.gs[j]);
            if (!is_integer(value) || value < 0)
                throw std::domain_error("kernel value " + format_scalar(value) +
                                        " at difference " + format_scalar(g.gs[i] - g.gs[j]) +
                                        " is not a nonnegative integer");
            total += numerator(value);
        }
    }
    return total;
}

/// Labeled dinv for m = c = 1: pairs i < j with g_i - g_j = 0 and w_i < w_j,
/// or g_i - g_j = 1 and w_i > w_j. Invariant under the extended cycling
/// operator (g, w) -> (C(g), w rotated left by one).
inline BigInt labeled_dinv(const LabeledPath& lp, const Params& params) {
    if (params.m != 1 || params.c != 1)
        throw std::domain_error("labeled dinv is defined for m = c = 1");
    validate_labeled_path(lp, params);
    BigInt count = 0;
    const int n = params.n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Scalar diff = lp.g.gs[i] - lp.g.gs[j];
            if ((diff == 0 && lp.w[i] < lp.w[j]) || (diff == 1 && lp.w[i] > lp.w[j])) ++count;
        }
    }
    return count;
}

/// sum over the family of t^{stat(member)}.
template <typename Range, typename StatFn>
Poly generating_poly(const Range& family, StatFn&& statistic) {
    Poly poly;
    for (const auto& member : family) poly.add_term(statistic(member));
    poly.trim();
    return poly;
}

}  // namespace skeletal
