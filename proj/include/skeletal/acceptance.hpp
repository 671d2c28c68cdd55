#pragma once

#include "skeletal/enumerate.hpp"
#include "skeletal/first_return.hpp"
#include "skeletal/render.hpp"
#include "skeletal/stats.hpp"

#include <chrono>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace skeletal::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

using skeletal::detail::north_count;

inline AreaVector av(std::vector<long long> entries) {
    AreaVector g;
    g.gs.reserve(entries.size());
    for (long long e : entries) g.gs.emplace_back(e);
    return g;
}

inline AreaVector avq(const std::vector<std::string>& entries) {
    AreaVector g;
    g.gs.reserve(entries.size());
    for (const std::string& e : entries) g.gs.push_back(parse_scalar(e));
    return g;
}

inline std::vector<Scalar> scalars(std::vector<long long> entries) {
    std::vector<Scalar> out;
    out.reserve(entries.size());
    for (long long e : entries) out.emplace_back(e);
    return out;
}

/// Deterministic integer area vector: g_0 near [-spread, c + spread], then
/// g_{i+1} = g_i + m - drop with a small random drop.
inline AreaVector random_int_area_vector(std::mt19937_64& rng, const Params& params,
                                         long long spread) {
    const long long c = to_longlong(numerator(params.c), "c");
    const long long m = to_longlong(numerator(params.m), "m");
    std::uniform_int_distribution<long long> first(-spread, c + spread);
    std::uniform_int_distribution<long long> drop(0, m + 3);
    std::vector<long long> entries{first(rng)};
    for (int i = 1; i < params.n; ++i) entries.push_back(entries.back() + m - drop(rng));
    return av(std::move(entries));
}

inline Scalar random_rational(std::mt19937_64& rng, long long lo, long long hi) {
    std::uniform_int_distribution<long long> num(lo, hi);
    std::uniform_int_distribution<int> den_pick(0, 4);
    static constexpr long long kDens[5] = {1, 2, 3, 4, 6};
    return Scalar(num(rng), kDens[den_pick(rng)]);
}

inline std::string count_mismatch(const CountReport& report) {
    std::ostringstream out;
    out << "n=" << report.params.n << " m=" << format_scalar(report.params.m)
        << " c=" << format_scalar(report.params.c) << " formula=" << report.formula.str()
        << " per-k=[";
    for (std::size_t k = 0; k < report.per_k.size(); ++k)
        out << (k ? "," : "") << report.per_k[k].str();
    out << "]";
    return out.str();
}

struct Check {
    bool pass = true;
    long long cases = 0;
    std::string first_failure;

    void count(bool ok, const std::string& label) {
        ++cases;
        if (!ok && pass) {
            pass = false;
            first_failure = label;
        }
    }
    void require(bool ok, const std::string& label) { count(ok, label); }
};

/// k-skeletal representatives of a whole class, one per k, read off a walk.
inline std::vector<ClassElement> reps_by_k(const ClassWalk& walk, int n) {
    std::vector<int> positions;
    positions.reserve(walk.size());
    for (const ClassElement& element : walk.elements) positions.push_back(pos(element.g));
    std::vector<ClassElement> reps(n);
    for (int k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < walk.size(); ++i)
            if (positions[i] > k) reps[k] = walk.elements[i];
    }
    return reps;
}

}  // namespace detail

// --- criterion 1: ballot-count formula vs exhaustive enumeration ------------

inline CriterionResult criterion_ballot_counts() {
    detail::Check check;
    for (int n = 1; n <= 6; ++n)
        for (long long m = 0; m <= 3; ++m)
            for (long long c = 1; c <= 3; ++c) {
                const CountReport report = count_report(params_z(n, m, c), Family::Skv);
                check.require(report.match, detail::count_mismatch(report));
            }
    return {1, "ballot counts: c/((m+1)n+c)*binom((m+1)n+c,n) on n<=6, m<=3, c<=3",
            check.pass, check.pass ? std::to_string(check.cases) + " grid points"
                                   : check.first_failure};
}

// --- criterion 2: worked-example fixtures -----------------------------------

inline void fixture_small_families(detail::Check& check) {
    using detail::av;
    const Params params = params_z(3, 1, 1);
    const auto buckets = enumerate_skv_all_k(params);

    auto as_set = [](std::vector<AreaVector> list) {
        std::sort(list.begin(), list.end());
        return list;
    };
    const std::vector<AreaVector> skv0 = as_set(
        {av({1, 1, 1}), av({0, 0, 1}), av({1, 0, 1}), av({0, 1, 1}), av({-1, 0, 1})});
    const std::vector<AreaVector> skv1 = as_set(
        {av({1, 1, 1}), av({1, 1, 2}), av({1, 2, 1}), av({0, 1, 1}), av({0, 1, 2})});
    const std::vector<AreaVector> skv2 = as_set(
        {av({1, 1, 1}), av({1, 1, 2}), av({1, 2, 1}), av({1, 2, 2}), av({1, 2, 3})});
    check.require(buckets[0] == skv0, "k=0 family of (n=3, m=1, c=1)");
    check.require(buckets[1] == skv1, "k=1 family of (n=3, m=1, c=1)");
    check.require(buckets[2] == skv2, "k=2 family of (n=3, m=1, c=1)");

    auto words_of = [&](const std::vector<AreaVector>& bucket) {
        std::set<std::string> words;
        for (const AreaVector& g : bucket)
            words.insert(word_of_path(path_of_area_vector(g, params), params));
        return words;
    };
    const std::set<std::string> words0{"NENENE", "ENENNE", "NEENNE", "ENNENE", "EENNNE"};
    const std::set<std::string> words1{"NENENE", "NENNEE", "NNEENE", "ENNENE", "ENNNEE"};
    const std::set<std::string> words2{"NENENE", "NENNEE", "NNEENE", "NNENEE", "NNNEEE"};
    check.require(words_of(buckets[0]) == words0, "k=0 step words");
    check.require(words_of(buckets[1]) == words1, "k=1 step words");
    check.require(words_of(buckets[2]) == words2, "k=2 step words");

    // The k=0 and k=2 families are mirror images under 180-degree rotation.
    std::vector<AreaVector> rotated;
    for (const AreaVector& g : buckets[0])
        rotated.push_back(area_vector_of_path(
            rotate_180(path_of_area_vector(g, params), params), params));
    check.require(as_set(std::move(rotated)) == skv2, "rotation duality k=0 <-> k=2");
}

inline void fixture_class_walk(detail::Check& check) {
    using detail::av;
    const Params params = params_z(14, 1, 4);
    const AreaVector seed = av({3, 4, 5, 5, 2, -1, 0, 1, 2, 3, 3, 0, 1, 2});
    const AreaVector dyck = av({3, 4, 5, 6, 7, 7, 4, 5, 6, 3, 4, 5, 5, 2});
    const AreaVector second = av({4, 5, 6, 3, 4, 5, 5, 2, -1, 0, 1, 2, 3, 3});
    const AreaVector fourth = av({2, -1, 0, 1, 2, 3, 3, 0, 1, 2, -1, 0, 1, 1});

    check.require(dyck_representative(seed, params) == dyck, "Dyck representative");
    const ClassWalk walk = enumerate_class(seed, params);
    check.require(walk.size() == 4, "class has four elements");
    const std::vector<AreaVector> expected{dyck, second, seed, fourth};
    const std::vector<long long> offsets{0, 6, 9, 13};
    const std::vector<int> positions{14, 4, 2, 2};
    for (std::size_t i = 0; i < walk.size(); ++i) {
        check.require(walk.elements[i].g == expected[i], "walk element " + std::to_string(i));
        check.require(walk.elements[i].offset == offsets[i], "walk offset " + std::to_string(i));
        check.require(pos(walk.elements[i].g) == positions[i], "walk pos " + std::to_string(i));
    }

    check.require(k_skeletal_representative(dyck, 0, params).first == fourth, "k=0 rep");
    check.require(k_skeletal_representative(dyck, 2, params).first == second, "k=2 rep");
    check.require(k_skeletal_representative(dyck, 3, params).first == second, "k=3 rep");
    check.require(k_skeletal_representative(dyck, 5, params).first == dyck, "k=5 rep");
    for (int k = 0; k < 14; ++k)
        check.require(is_k_skeletal(second, k, params) == (k == 2 || k == 3),
                      "truth set of the second walk element");
}

inline void fixture_rational_cycling(detail::Check& check) {
    const Params params = params_q(2, Scalar(3, 2), Scalar(1, 2));
    const AreaVector g = detail::avq({"1/2", "2"});
    const AreaVector gp = detail::avq({"1/2", "1"});

    AreaVector six = g;
    for (int i = 0; i < 6; ++i) six = cycle(six, params);
    check.require(six == detail::avq({"-1", "1/2"}), "six cycling steps");
    AreaVector two = gp;
    for (int i = 0; i < 2; ++i) two = cycle(two, params);
    check.require(two == detail::avq({"0", "1/2"}), "two cycling steps");

    check.require(map_k_to_kprime(g, 1, 0, params) == detail::avq({"-1", "1/2"}),
                  "map k=1 -> k=0 of (1/2,2)");
    check.require(map_k_to_kprime(gp, 1, 0, params) == detail::avq({"0", "1/2"}),
                  "map k=1 -> k=0 of (1/2,1)");
    check.require(map_k_to_kprime(map_k_to_kprime(g, 1, 0, params), 0, 1, params) == g,
                  "rational round trip");
}

inline void fixture_function_tables(detail::Check& check) {
    const Params params = params_z(12, 2, 6);
    const FnTable f1{detail::scalars({4, 12, 6, 1, 12, 16, 1, 1, 16, 17, 1, 16})};
    const FnTable f2{detail::scalars({22, 0, 24, 19, 0, 4, 19, 19, 4, 5, 19, 4})};

    const LabeledPath lp1 = labeled_path_of_fn(f1, params);
    check.require(lp1.g == detail::av({5, 7, 9, 11, 10, 10, 6, 8, 6, 8, 10, 11}),
                  "area vector of the first table");
    check.require(lp1.w == std::vector<int>({4, 7, 8, 11, 1, 3, 2, 5, 6, 9, 12, 10}),
                  "label sequence of the first table");
    check.require(is_k_skeletal_fn(f1, 7, params), "first table is 7-skeletal");
    check.require(is_k_skeletal_fn(f2, 4, params), "second table is 4-skeletal");

    check.require(map_fn_k_to_kprime(f1, 7, 4, params) == f2, "table map k=7 -> k=4");
    check.require(map_fn_k_to_kprime(f2, 4, 7, params) == f1, "table map k=4 -> k=7");

    const LabeledPath lp2 = labeled_path_of_fn(f2, params);
    check.require(lp2.g == detail::av({6, 8, 6, 8, 10, 11, -1, 1, 3, 5, 4, 4}),
                  "area vector of the second table");
    check.require(lp2.w == std::vector<int>({2, 5, 6, 9, 12, 10, 4, 7, 8, 11, 1, 3}),
                  "label sequence of the second table");
    check.require(run_multiset(lp1.g, params).lengths == std::vector<int>({1, 1, 1, 2, 3, 4}),
                  "run multiset of the first table");
}

inline void fixture_chip_moves(detail::Check& check) {
    const Params params = params_z(6, 2, 4);
    const ChipConfig D{detail::scalars({4, 1, 5, 5, 14, 8})};
    auto subset = [](std::initializer_list<int> vertices) {
        VertexSet S = 0;
        for (int v : vertices) S |= VertexSet(1) << (v - 1);
        return S;
    };

    const LabeledPath lp = chip_to_labeled(D, params);
    check.require(lp.w == std::vector<int>({2, 1, 3, 4, 6, 5}), "chip label sequence");
    check.require(lp.g == detail::av({3, 2, 3, 5, 4, 0}), "chip area vector");

    check.require(fire(D, subset({5}), params) == ChipConfig{detail::scalars({6, 3, 7, 7, 0, 10})},
                  "firing vertex 5");
    const ChipConfig borrowed = borrow(D, subset({1, 2, 3, 4}), params);
    check.require(borrowed == ChipConfig{detail::scalars({12, 9, 13, 13, 6, 0})},
                  "borrowing at the four poorest vertices");
    check.require(chip_to_labeled(borrowed, params).g == detail::av({4, 0, -1, -2, -1, 1}),
                  "borrow transports the area vector");
    check.require(chip_to_labeled(borrowed, params).g == cycle_pow(lp.g, 4, params),
                  "borrow acts as C^4");

    check.require(can_fire(D, subset({5}), params), "vertex 5 can fire");
    for (VertexSet S = 1; S < 64; ++S)
        if (std::popcount(S) == 2)
            check.require(!can_fire(D, S, params), "no 2-element subset fires");
    for (int p = 1; p <= 6; ++p)
        check.require(exists_legal_borrow_of_size(D, p, params) == (p != 3),
                      "legal borrow sizes are {1,2,4,5,6}");
}

inline void fixture_first_return(detail::Check& check) {
    const std::string pi = "N" "NEEE" "E" "NNENEEENNEEENEEEEEE";
    const std::string expected = "NNEEEE" "EEN" "NENEEE" "ENNEEE" "NEEE";
    check.require(phi(pi, 2, 8, 1) == expected, "phi on the height-8 fixture");
    check.require(psi(expected, 2, 8, 1) == pi, "psi inverts the fixture");
}

inline CriterionResult criterion_worked_examples() {
    detail::Check check;
    fixture_small_families(check);
    fixture_class_walk(check);
    fixture_rational_cycling(check);
    fixture_function_tables(check);
    fixture_chip_moves(check);
    fixture_first_return(check);
    return {2, "worked-example fixtures reproduce byte-exactly", check.pass,
            check.pass ? std::to_string(check.cases) + " exact comparisons"
                       : check.first_failure};
}

// --- criterion 3: parking-count formula vs exhaustive enumeration -----------

inline CriterionResult criterion_parking_counts() {
    detail::Check check;
    for (int n = 1; n <= 5; ++n)
        for (long long m = 0; m <= 2; ++m)
            for (long long c = 1; c <= 2; ++c) {
                const CountReport report = count_report(params_z(n, m, c), Family::Skf);
                check.require(report.match, detail::count_mismatch(report));
            }
    return {3, "parking counts: c*(mn+c)^(n-1) on n<=5, m<=2, c<=2", check.pass,
            check.pass ? std::to_string(check.cases) + " grid points" : check.first_failure};
}

// --- criterion 4: bijection round-trips --------------------------------------

inline void roundtrip_skv_maps(detail::Check& check) {
    long long sampled = 0;
    for (int n = 1; n <= 6; ++n)
        for (long long m = 0; m <= 3; ++m)
            for (long long c = 1; c <= 3; ++c) {
                const Params params = params_z(n, m, c);
                const auto buckets = enumerate_skv_all_k(params);
                // Classes are indexed by their Dyck vectors; collecting the
                // per-class representatives for each k must rebuild each
                // bucket exactly, which forces every mapped element back to
                // itself under the inverse map.
                std::vector<std::vector<AreaVector>> reps(n);
                for (const AreaVector& dyck : buckets[n - 1]) {
                    const ClassWalk walk = enumerate_class(dyck, params);
                    const auto by_k = detail::reps_by_k(walk, n);
                    for (int k = 0; k < n; ++k) {
                        check.count(is_k_skeletal(by_k[k].g, k, params),
                                    "class representative must be k-skeletal");
                        reps[k].push_back(by_k[k].g);
                    }
                }
                for (int k = 0; k < n; ++k) {
                    std::sort(reps[k].begin(), reps[k].end());
                    check.require(reps[k] == buckets[k],
                                  "per-class representatives must tile the k-family (n=" +
                                      std::to_string(n) + ")");
                }
                // Exercise the public map directly on a deterministic sample.
                for (int k = 0; k < n; ++k)
                    for (std::size_t i = 0; i < buckets[k].size(); i += 23)
                        for (int kp = 0; kp < n; ++kp) {
                            const AreaVector& g = buckets[k][i];
                            const AreaVector h = map_k_to_kprime(g, k, kp, params);
                            ++sampled;
                            check.count(is_k_skeletal(h, kp, params), "mapped element skeletal");
                            check.count(map_k_to_kprime(h, kp, k, params) == g,
                                        "map round trip");
                        }
            }
    check.require(sampled > 1000, "enough direct map samples");
}

inline void roundtrip_skf_maps(detail::Check& check) {
    for (int n = 1; n <= 5; ++n)
        for (long long m = 0; m <= 2; ++m)
            for (long long c = 1; c <= 2; ++c) {
                const Params params = params_z(n, m, c);
                const auto buckets = enumerate_skv_all_k(params);
                for (const AreaVector& dyck : buckets[n - 1]) {
                    const ClassWalk walk = enumerate_class(dyck, params);
                    const auto by_k = detail::reps_by_k(walk, n);
                    for (int k = 0; k < n; ++k) {
                        const auto labels_k = label_sequences_for(by_k[k].g, params);
                        for (int kp = 0; kp < n; ++kp) {
                            const long long shift = by_k[kp].offset - by_k[k].offset;
                            // Rotating every label sequence of the k-side
                            // representative must give exactly the label
                            // sequences of the kp-side representative.
                            auto rotated = labels_k;
                            for (auto& w : rotated) w = rotate_left(std::move(w), shift);
                            std::sort(rotated.begin(), rotated.end());
                            auto target = label_sequences_for(by_k[kp].g, params);
                            std::sort(target.begin(), target.end());
                            check.count(rotated == target,
                                        "label sets transport along the class");
                        }
                    }
                }
                // Direct public-API round trips on a deterministic sample.
                for (int k = 0; k < n; ++k) {
                    const auto family = enumerate_skf(k, params);
                    for (std::size_t i = 0; i < family.size(); i += 19)
                        for (int kp = 0; kp < n; ++kp) {
                            const FnTable mapped = map_fn_k_to_kprime(family[i], k, kp, params);
                            check.count(is_k_skeletal_fn(mapped, kp, params),
                                        "mapped function skeletal");
                            check.count(map_fn_k_to_kprime(mapped, kp, k, params) == family[i],
                                        "function map round trip");
                        }
                }
            }
}

inline void roundtrip_first_return(detail::Check& check) {
    for (long long m = 1; m <= 3; ++m)
        for (int n = 1; n <= 6; ++n) {
            const auto family = enumerate_m_dyck(n, m);
            check.require(BigInt(family.size()) == fuss_catalan(n, m),
                          "family size equals the Fuss-Catalan number (n=" + std::to_string(n) +
                              ", m=" + std::to_string(m) + ")");
            for (int k = 0; k < n; ++k) {
                std::set<std::string> image;
                for (const std::string& pi : family) {
                    const std::string omega = phi(pi, m, n, k);
                    check.count(is_augmented_k_skeletal(omega, m, k), "phi image is skeletal");
                    check.count(psi(omega, m, n, k) == pi, "psi inverts phi");
                    image.insert(omega);
                }
                check.require(image.size() == family.size(), "phi is injective");
            }
        }
}

inline CriterionResult criterion_bijection_roundtrips() {
    detail::Check check;
    roundtrip_skv_maps(check);
    roundtrip_skf_maps(check);
    roundtrip_first_return(check);
    return {4, "bijection round-trips (k-maps, labeled k-maps, phi/psi)", check.pass,
            check.pass ? std::to_string(check.cases) + " checks" : check.first_failure};
}

// --- criterion 5: the two chip predicates and the path predicate agree ------

inline CriterionResult criterion_chip_equivalence() {
    detail::Check check;
    for (int n = 1; n <= 4; ++n)
        for (long long m = 0; m <= 2; ++m)
            for (long long c = 1; c <= 2; ++c) {
                const Params params = params_z(n, m, c);
                const long long bound = m * (n - 1) + c - 1;
                std::vector<long long> chips(n, 0);
                for (;;) {
                    ChipConfig D;
                    for (long long v : chips) D.chips.emplace_back(v);
                    for (int k = 0; k < n; ++k) {
                        const bool naive = is_k_skeletal_chip(D, k, params);
                        const bool fast = is_k_skeletal_chip_fast(D, k, params);
                        const bool fn = is_k_skeletal_fn(FnTable{D.chips}, k, params);
                        check.count(naive == fast && fast == fn,
                                    "predicates disagree at n=" + std::to_string(n) + " m=" +
                                        std::to_string(m) + " c=" + std::to_string(c) +
                                        " k=" + std::to_string(k));
                    }
                    int idx = n - 1;
                    while (idx >= 0 && chips[idx] == bound) chips[idx--] = 0;
                    if (idx < 0) break;
                    ++chips[idx];
                }
            }
    return {5, "chip predicates: subset-scan == fast == path predicate (n<=4, m,c<=2)",
            check.pass,
            check.pass ? std::to_string(check.cases) + " (D,k) pairs" : check.first_failure};
}

// --- criterion 6: statistic invariance under cycling -------------------------

inline CriterionResult criterion_stat_invariance() {
    detail::Check check;
    std::mt19937_64 rng(0x5eedb01dull);

    struct NamedKernel {
        StatKernel kernel;
        Params params;
    };
    const std::vector<NamedKernel> kernels{
        {StatKernel::indicator_dinv(), params_z(7, 1, 1)},
        {StatKernel::range_dinv(2), params_z(7, 1, 2)},
        {StatKernel::slope_dinv(2), params_z(7, 2, 1)},
        {StatKernel::trapezoid_dinv(2, 3), params_z(7, 2, 3)},
    };
    for (const auto& [kernel, params] : kernels)
        for (int trial = 0; trial < 10000; ++trial) {
            const AreaVector g = detail::random_int_area_vector(rng, params, 6);
            check.count(stat(g, kernel) == stat(cycle(g, params), kernel),
                        "pointwise invariance under one cycling step");
        }

    // Distribution over the k-skeletal families is independent of k.
    for (int n = 1; n <= 5; ++n)
        for (long long m = 0; m <= 2; ++m)
            for (long long c = 1; c <= 2; ++c) {
                const Params params = params_z(n, m, c);
                std::vector<StatKernel> applicable{StatKernel::range_dinv(Scalar(c)),
                                                   StatKernel::trapezoid_dinv(Scalar(m), Scalar(c))};
                if (c == 1) {
                    applicable.push_back(StatKernel::indicator_dinv());
                    if (m >= 1) applicable.push_back(StatKernel::slope_dinv(Scalar(m)));
                }
                const auto buckets = enumerate_skv_all_k(params);
                for (const StatKernel& kernel : applicable) {
                    const Poly reference = generating_poly(
                        buckets[n - 1], [&](const AreaVector& g) { return stat(g, kernel); });
                    for (int k = 0; k + 1 < n; ++k)
                        check.count(generating_poly(buckets[k],
                                                    [&](const AreaVector& g) {
                                                        return stat(g, kernel);
                                                    }) == reference,
                                    "family polynomial is k-independent");
                }
            }

    // Labeled dinv polynomial over the k-skeletal functions, m = c = 1.
    for (int n = 1; n <= 4; ++n) {
        const Params params = params_z(n, 1, 1);
        Poly reference;
        for (int k = 0; k < n; ++k) {
            const auto family = enumerate_skf(k, params);
            const Poly poly = generating_poly(family, [&](const FnTable& f) {
                return labeled_dinv(labeled_path_of_fn(f, params), params);
            });
            if (k == 0)
                reference = poly;
            else
                check.count(poly == reference, "labeled dinv polynomial is k-independent");
        }
    }
    return {6, "statistic invariance: pointwise under C and distributionally over k", check.pass,
            check.pass ? std::to_string(check.cases) + " checks" : check.first_failure};
}

// --- criterion 7: first-return recursion -------------------------------------

inline CriterionResult criterion_first_return_recursion() {
    detail::Check check;
    for (long long m = 1; m <= 3; ++m)
        for (long long n = 1; n <= 8; ++n) {
            BigInt total = 0;
            // sum over compositions i_1 + ... + i_{m+1} = n - 1 of the
            // product of the parts' Fuss-Catalan numbers
            std::vector<long long> parts(m + 1, 0);
            auto recurse = [&](auto&& self, long long index, long long remaining) -> void {
                if (index == m) {
                    parts[index] = remaining;
                    BigInt product = 1;
                    for (long long part : parts) product *= fuss_catalan(part, m);
                    total += product;
                    return;
                }
                for (long long take = 0; take <= remaining; ++take) {
                    parts[index] = take;
                    self(self, index + 1, remaining - take);
                }
            };
            recurse(recurse, 0, n - 1);
            check.require(total == fuss_catalan(n, m),
                          "recursion at n=" + std::to_string(n) + ", m=" + std::to_string(m));
        }
    return {7, "first-return recursion for the Fuss-Catalan numbers (n<=8, m<=3)", check.pass,
            check.pass ? std::to_string(check.cases) + " (n,m) pairs" : check.first_failure};
}

// --- criterion 8: structural property suite ----------------------------------

inline CriterionResult criterion_property_suite() {
    detail::Check check;
    std::mt19937_64 rng(0x0ff5e75ull);

    // Path <-> area-vector round trips, integer and rational modes.
    for (int trial = 0; trial < 10000; ++trial) {
        const bool rational = trial % 2;
        const int n = 1 + static_cast<int>(rng() % 8);
        const Params params =
            rational ? params_q(n, detail::random_rational(rng, 0, 4),
                                detail::random_rational(rng, 1, 4) + Scalar(1, 6))
                     : params_z(n, static_cast<long long>(rng() % 4),
                                1 + static_cast<long long>(rng() % 4));
        std::vector<Scalar> xs;
        for (int i = 0; i < n; ++i)
            xs.push_back(rational ? detail::random_rational(rng, -12, 12)
                                  : Scalar(static_cast<long long>(rng() % 25) - 12));
        std::sort(xs.begin(), xs.end());
        const Path p{xs};
        const AreaVector g = area_vector_of_path(p, params);
        check.count(path_of_area_vector(g, params) == p, "path round trip");
        check.count(area_vector_of_path(path_of_area_vector(g, params), params) == g,
                    "area-vector round trip");
    }

    // Fire/borrow inversion and nonnegativity preservation.
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Params params = params_z(n, static_cast<long long>(rng() % 3),
                                       1 + static_cast<long long>(rng() % 3));
        ChipConfig D;
        for (int i = 0; i < n; ++i) D.chips.emplace_back(static_cast<long long>(rng() % 20));
        const VertexSet S = 1 + rng() % ((VertexSet(1) << n) - 1);
        check.count(borrow(fire(D, S, params), S, params) == D, "borrow undoes fire");
        check.count(fire(borrow(D, S, params), S, params) == D, "fire undoes borrow");
        if (can_fire(D, S, params))
            check.count(is_nonnegative(fire(D, S, params)), "legal fire keeps D >= 0");
        if (can_borrow(D, S, params))
            check.count(is_nonnegative(borrow(D, S, params)), "legal borrow keeps D >= 0");
    }

    // Run-multiset constancy and uniqueness of the k-skeletal representative
    // along every class of the small integer grid.
    for (int n = 1; n <= 5; ++n)
        for (long long m = 0; m <= 2; ++m)
            for (long long c = 1; c <= 2; ++c) {
                const Params params = params_z(n, m, c);
                for (const AreaVector& dyck : enumerate_skv(n - 1, params)) {
                    const ClassWalk walk = enumerate_class(dyck, params);
                    const RunMultiset runs = run_multiset(dyck, params);
                    int dyck_count = 0;
                    for (const ClassElement& element : walk.elements) {
                        check.count(run_multiset(element.g, params) == runs,
                                    "run multiset constant along the class");
                        check.count(is_in_S(element.g, params), "walk stays inside S");
                        dyck_count += is_dyck(element.g);
                    }
                    check.count(dyck_count == 1, "exactly one Dyck vector per class");
                    for (int k = 0; k < n; ++k) {
                        int hits = 0;
                        for (const ClassElement& element : walk.elements)
                            hits += is_k_skeletal(element.g, k, params);
                        check.count(hits == 1, "exactly one k-skeletal element per class");
                        const auto [rep, offset] = k_skeletal_representative(dyck, k, params);
                        check.count(is_k_skeletal(rep, k, params),
                                    "representative is k-skeletal");
                        check.count(cycle_pow(dyck, offset, params) == rep,
                                    "offset reproduces the representative");
                    }
                }
            }

    // Rational-mode spot checks of the same class properties.
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const Params params = params_q(n, detail::random_rational(rng, 0, 3),
                                       detail::random_rational(rng, 1, 3) + Scalar(1, 4));
        AreaVector g;
        for (int attempts = 0; attempts < 500; ++attempts) {
            g.gs.clear();
            Scalar value = detail::random_rational(rng, -4, 4);
            for (int i = 0; i < n; ++i) {
                g.gs.push_back(value);
                value += params.m - detail::random_rational(rng, 0, 3);
            }
            if (is_in_S(g, params)) break;
        }
        if (!is_in_S(g, params)) continue;
        const ClassWalk walk = enumerate_class(g, params);
        const RunMultiset runs = run_multiset(walk.front().g, params);
        for (const ClassElement& element : walk.elements)
            check.count(run_multiset(element.g, params) == runs,
                        "rational run multiset constant");
        for (int k = 0; k < n; ++k) {
            int hits = 0;
            for (const ClassElement& element : walk.elements)
                hits += is_k_skeletal(element.g, k, params);
            check.count(hits == 1, "rational class uniqueness");
        }
    }

    return {8, "property suite: round trips, fire/borrow inversion, class structure", check.pass,
            check.pass ? std::to_string(check.cases) + " checks" : check.first_failure};
}

// --- criterion 9: the documented dinv/area normalization offset --------------

inline CriterionResult criterion_dinv_area_offset() {
    detail::Check check;
    const Params params = params_z(3, 1, 1);
    const auto buckets = enumerate_skv_all_k(params);
    const StatKernel dinv = StatKernel::indicator_dinv();

    auto area_exponent = [&](const AreaVector& g, long long shift) {
        const Scalar value = area(g) - shift;
        if (!is_integer(value) || value < 0)
            throw std::logic_error("area exponent must be a nonnegative integer");
        return BigInt(numerator(value));
    };
    const Poly area_shifted = generating_poly(
        buckets[params.n - 1],
        [&](const AreaVector& g) { return area_exponent(g, params.n); });
    const Poly area_raw = generating_poly(
        buckets[params.n - 1], [&](const AreaVector& g) { return area_exponent(g, 0); });

    for (int k = 0; k < params.n; ++k) {
        const Poly dinv_poly = generating_poly(
            buckets[k], [&](const AreaVector& g) { return stat(g, dinv); });
        check.require(dinv_poly == area_shifted,
                      "dinv over the k-family matches area - n over the Dyck family");
        check.require(!(dinv_poly == area_raw),
                      "the unnormalized area identity must fail");
    }
    return {9, "dinv distribution equals (area - n), not area, over the Dyck family", check.pass,
            check.pass ? std::to_string(check.cases) + " comparisons" : check.first_failure};
}

inline std::vector<CriterionResult> run_all(std::ostream* progress = nullptr) {
    using Runner = CriterionResult (*)();
    const Runner runners[] = {
        criterion_ballot_counts,    criterion_worked_examples,
        criterion_parking_counts,   criterion_bijection_roundtrips,
        criterion_chip_equivalence, criterion_stat_invariance,
        criterion_first_return_recursion, criterion_property_suite,
        criterion_dinv_area_offset,
    };
    std::vector<CriterionResult> results;
    for (Runner runner : runners) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult result = runner();
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        result.detail += " [" + std::to_string(elapsed.count()) + " ms]";
        if (progress)
            *progress << (result.pass ? "PASS" : "FAIL") << "  criterion " << result.id << ": "
                      << result.name << " — " << result.detail << std::endl;
        results.push_back(std::move(result));
    }
    return results;
}

inline bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.pass; });
}

}  // namespace skeletal::acceptance
