#include "skeletal/chip.hpp"

#include "oracle.hpp"
#include "skeletal/enumerate.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace skeletal;
using oracle::av;
using oracle::scalars;

namespace {

VertexSet subset(std::initializer_list<int> vertices) {
    VertexSet mask = 0;
    for (int v : vertices) mask |= VertexSet(1) << (v - 1);
    return mask;
}

const Params kSix = params_z(6, 2, 4);
const ChipConfig kDemo{scalars({4, 1, 5, 5, 14, 8})};

}  // namespace

TEST_CASE("fire and borrow moves") {
    CHECK(fire(kDemo, subset({5}), kSix) == ChipConfig{scalars({6, 3, 7, 7, 0, 10})});
    CHECK(borrow(kDemo, subset({1, 2, 3, 4}), kSix) ==
          ChipConfig{scalars({12, 9, 13, 13, 6, 0})});

    // firing everyone drains c chips from each vertex
    const ChipConfig all_fired = fire(kDemo, subset({1, 2, 3, 4, 5, 6}), kSix);
    for (int i = 0; i < 6; ++i) CHECK(all_fired.chips[i] == kDemo.chips[i] - 4);

    CHECK_THROWS_AS(fire(kDemo, 0, kSix), std::domain_error);
    CHECK_THROWS_AS(fire(kDemo, subset({7}), kSix), std::domain_error);
}

TEST_CASE("legality predicates") {
    CHECK(can_fire(kDemo, subset({5}), kSix));
    for (VertexSet S = 1; S < 64; ++S)
        if (std::popcount(S) >= 2) CHECK_FALSE(can_fire(kDemo, S, kSix));

    CHECK(can_borrow(kDemo, subset({1, 2, 3, 4, 5, 6}), kSix));
    CHECK(can_borrow(kDemo, subset({1, 2, 3, 4}), kSix));
    CHECK_FALSE(can_borrow(kDemo, subset({1, 2, 3}), kSix));

    const Params p3 = params_z(3, 1, 1);
    const ChipConfig zero{scalars({0, 0, 0})};
    for (VertexSet S = 1; S < 8; ++S) CHECK_FALSE(can_fire(zero, S, p3));

    // everyone-but-the-richest can borrow when the richest holds m(n-1)
    const ChipConfig rich{scalars({0, 0, 10})};
    CHECK(can_borrow(rich, subset({1, 2}), params_z(3, 3, 1)));
    CHECK_FALSE(can_borrow(rich, subset({1, 2}), params_z(3, 6, 1)));
}

TEST_CASE("borrow feasibility by size matches the area-vector criterion") {
    for (int p = 1; p <= 6; ++p)
        CHECK(exists_legal_borrow_of_size(kDemo, p, kSix) == (p != 3));

    oracle::Rng rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng.pick(0, 4));
        const Params params = params_z(n, rng.pick(0, 3), rng.pick(1, 3));
        ChipConfig D;
        for (int i = 0; i < n; ++i) D.chips.push_back(Scalar(rng.pick(0, 12)));
        for (int p = 1; p <= n; ++p)
            CHECK(exists_legal_borrow_of_size(D, p, params) ==
                  oracle::brute_exists_borrow_of_size(D, p, params));
    }
    CHECK_THROWS_AS(exists_legal_borrow_of_size(ChipConfig{scalars({-1, 0})}, 1, params_z(2, 1, 1)),
                    std::domain_error);
}

TEST_CASE("fire feasibility by size matches the area-vector criterion") {
    oracle::Rng rng(59);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng.pick(0, 4));
        const Params params = params_z(n, rng.pick(0, 3), rng.pick(1, 3));
        ChipConfig D;
        for (int i = 0; i < n; ++i) D.chips.push_back(Scalar(rng.pick(0, 12)));
        const AreaVector g = chip_to_labeled(D, params).g;
        for (int f = 1; f <= n; ++f) {
            const bool brute = oracle::brute_exists_fire_of_size(D, f, params);
            CHECK(brute == (g.gs[n - f] <= 0));
            if (brute) {
                // the f richest vertices can fire
                std::vector<int> order(n);
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(),
                          [&](int a, int b) { return D.chips[a] > D.chips[b]; });
                VertexSet richest = 0;
                for (int i = 0; i < f; ++i) richest |= VertexSet(1) << order[i];
                CHECK(can_fire(D, richest, params));
            }
        }
    }
}

TEST_CASE("chips are labeled paths") {
    const LabeledPath lp = chip_to_labeled(kDemo, kSix);
    CHECK(lp.w == std::vector<int>({2, 1, 3, 4, 6, 5}));
    CHECK(lp.g == av({3, 2, 3, 5, 4, 0}));
    CHECK(lp == labeled_path_of_fn(FnTable{kDemo.chips}, kSix));
    CHECK(fn_of_labeled_path(lp, kSix).values == kDemo.chips);
}

TEST_CASE("borrowing at the poorest vertices cycles the area vector") {
    const ChipConfig borrowed = borrow(kDemo, subset({1, 2, 3, 4}), kSix);
    CHECK(chip_to_labeled(borrowed, kSix).g == av({4, 0, -1, -2, -1, 1}));
    CHECK(chip_to_labeled(borrowed, kSix).g ==
          cycle_pow(chip_to_labeled(kDemo, kSix).g, 4, kSix));

    oracle::Rng rng(61);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng.pick(0, 4));
        const Params params = params_z(n, rng.pick(0, 2), rng.pick(1, 3));
        ChipConfig D;
        for (int i = 0; i < n; ++i) D.chips.push_back(Scalar(rng.pick(0, 8)));
        const LabeledPath lp = chip_to_labeled(D, params);
        if (pos(lp.g) == 0) continue;  // the transport needs g_{n-1} > 0
        for (int p = 1; p <= n; ++p) {
            if (!((p == n || lp.g.gs[p] <= params.c) && lp.g.gs[p - 1] > params.c)) continue;
            VertexSet poorest = 0;
            for (int i = 0; i < p; ++i) poorest |= VertexSet(1) << (lp.w[i] - 1);
            CHECK(chip_to_labeled(borrow(D, poorest, params), params).g ==
                  cycle_pow(lp.g, p, params));
        }
    }
}

TEST_CASE("the two skeletal predicates agree with the path predicate") {
    const Params p3 = params_z(3, 1, 1);
    int skeletal = 0;
    for (long long a = 0; a <= 3; ++a)
        for (long long b = 0; b <= 3; ++b)
            for (long long d = 0; d <= 3; ++d) {
                const ChipConfig D{scalars({a, b, d})};
                for (int k = 0; k < 3; ++k) {
                    const bool naive = is_k_skeletal_chip(D, k, p3);
                    CHECK(naive == is_k_skeletal_chip_fast(D, k, p3));
                    CHECK(naive == is_k_skeletal_fn(FnTable{D.chips}, k, p3));
                    skeletal += k == 2 && naive;
                }
            }
    CHECK(skeletal == 16);  // the classical parking functions of order 3

    CHECK_FALSE(is_k_skeletal_chip(ChipConfig{scalars({-1, 0, 1})}, 0, p3));
    CHECK_FALSE(is_k_skeletal_chip_fast(ChipConfig{scalars({-1, 0, 1})}, 0, p3));
    CHECK_THROWS_AS(is_k_skeletal_chip(ChipConfig{scalars({0, 0, 0})}, 3, p3),
                    std::domain_error);
}

TEST_CASE("moves are mutually inverse and preserve nonnegativity when legal") {
    oracle::Rng rng(67);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng.pick(0, 5));
        const bool rational = trial % 4 == 0;
        const Params params = rational
                                  ? params_q(n, rng.rational(0, 2), rng.rational(1, 2) + Scalar(1, 4))
                                  : params_z(n, rng.pick(0, 2), rng.pick(1, 3));
        ChipConfig D;
        for (int i = 0; i < n; ++i)
            D.chips.push_back(rational ? rng.rational(0, 15) : Scalar(rng.pick(0, 15)));
        const VertexSet S = 1 + static_cast<VertexSet>(rng.pick(0, (1 << n) - 2));
        CHECK(borrow(fire(D, S, params), S, params) == D);
        CHECK(fire(borrow(D, S, params), S, params) == D);
        if (can_fire(D, S, params)) CHECK(is_nonnegative(fire(D, S, params)));
        if (can_borrow(D, S, params)) CHECK(is_nonnegative(borrow(D, S, params)));
    }
}

TEST_CASE("vertex subsets are capped at 62 bits") {
    Params big;
    big.n = 63;
    big.m = 1;
    big.c = 1;
    ChipConfig D;
    D.chips.assign(63, Scalar(0));
    CHECK_THROWS_AS(can_fire(D, 1, big), std::domain_error);
}
