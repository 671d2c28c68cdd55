#include "skeletal/stats.hpp"

#include "oracle.hpp"
#include "skeletal/enumerate.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace skeletal;
using oracle::av;

TEST_CASE("pairwise statistic with the indicator kernel") {
    const StatKernel dinv = StatKernel::indicator_dinv();
    CHECK(stat(av({1, 1, 1}), dinv) == 3);
    CHECK(stat(av({1, 2, 3}), dinv) == 0);
    CHECK(stat(av({7}), dinv) == 0);
    CHECK(stat(av({1, 0, 1}), dinv) == 2);
}

TEST_CASE("kernel symmetry F(z) = F(c - z)") {
    const std::vector<StatKernel> kernels{
        StatKernel::indicator_dinv(), StatKernel::range_dinv(3), StatKernel::slope_dinv(2),
        StatKernel::trapezoid_dinv(2, 3),
        StatKernel::tabulated({{Scalar(0), Scalar(2)}, {Scalar(2), Scalar(2)}, {Scalar(1), Scalar(5)}},
                              Scalar(2))};
    for (const StatKernel& kernel : kernels)
        for (long long twice = -20; twice <= 20; ++twice) {
            const Scalar z(twice, 2);
            CHECK(kernel.eval(z) == kernel.eval(kernel.associated_c() - z));
        }
}

TEST_CASE("slope kernel matches its piecewise integer description") {
    for (long long m = 1; m <= 3; ++m) {
        const StatKernel kernel = StatKernel::slope_dinv(Scalar(m));
        for (long long z = -10; z <= 10; ++z) {
            Scalar expected = 0;
            if (1 <= z && z <= m) expected = m + 1 - z;
            if (-m <= z && z <= 0) expected = m + z;
            CHECK(kernel.eval(Scalar(z)) == expected);
        }
    }
}

TEST_CASE("pointwise invariance under cycling") {
    oracle::Rng rng(73);
    const Params params = params_z(6, 2, 3);
    const StatKernel kernel = StatKernel::trapezoid_dinv(2, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        const AreaVector g = rng.int_area_vector(params, 5);
        CHECK(stat(g, kernel) == stat(cycle(g, params), kernel));
        CHECK(stat(g, kernel) == stat(cycle_inv(g, params), kernel));
    }
}

TEST_CASE("trapezoid kernel rejects non-integral values") {
    const StatKernel kernel = StatKernel::trapezoid_dinv(1, 1);
    AreaVector g;
    g.gs = {Scalar(1, 2), Scalar(0)};
    CHECK_THROWS_AS(stat(g, kernel), std::domain_error);
}

TEST_CASE("tabulated kernels catch symmetry violations") {
    const StatKernel lopsided =
        StatKernel::tabulated({{Scalar(0), Scalar(1)}}, Scalar(1));  // F(0)=1 but F(1)=0
    CHECK_THROWS_AS(stat(av({1, 1}), lopsided), std::domain_error);
    CHECK_THROWS_AS(StatKernel::tabulated({{Scalar(0), Scalar(-1)}}, Scalar(1)),
                    std::domain_error);

    const StatKernel balanced = StatKernel::tabulated(
        {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)}}, Scalar(1));
    CHECK(stat(av({1, 1, 1}), balanced) == 3);
}

TEST_CASE("labeled dinv") {
    const Params p3 = params_z(3, 1, 1);
    CHECK(labeled_dinv(LabeledPath{av({1, 1, 1}), {1, 2, 3}}, p3) == 3);
    CHECK(labeled_dinv(LabeledPath{av({1, 2, 3}), {1, 2, 3}}, p3) == 0);
    CHECK(labeled_dinv(LabeledPath{av({1, 2, 2}), {1, 3, 2}}, p3) == 0);
    CHECK_THROWS_AS(labeled_dinv(LabeledPath{av({1, 1}), {1, 2}}, params_z(2, 2, 1)),
                    std::domain_error);
}

TEST_CASE("labeled dinv is invariant under the extended cycling step") {
    oracle::Rng rng(79);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng.pick(0, 5));
        const Params params = params_z(n, 1, 1);
        // random labeled Dyck path with g_0 <= c, built from a random function
        FnTable f;
        for (int i = 0; i < n; ++i) f.values.push_back(Scalar(rng.pick(0, i)));
        LabeledPath lp = labeled_path_of_fn(f, params);
        if (!is_in_S(lp.g, params) || !is_dyck(lp.g)) continue;
        const BigInt before = labeled_dinv(lp, params);
        const LabeledPath cycled{cycle(lp.g, params), rotate_left(lp.w, 1)};
        CHECK(labeled_dinv(cycled, params) == before);
    }
}

TEST_CASE("generating polynomials over the smallest family") {
    const Params p3 = params_z(3, 1, 1);
    const StatKernel dinv = StatKernel::indicator_dinv();
    const auto buckets = enumerate_skv_all_k(p3);

    const Poly expected{{BigInt(1), BigInt(2), BigInt(1), BigInt(1)}};  // 1 + 2t + t^2 + t^3
    const Poly from2 =
        generating_poly(buckets[2], [&](const AreaVector& g) { return stat(g, dinv); });
    const Poly from0 =
        generating_poly(buckets[0], [&](const AreaVector& g) { return stat(g, dinv); });
    CHECK(from2 == expected);
    CHECK(from0 == expected);
    CHECK(from2.str() == "1 + 2*t + t^2 + t^3");

    const Poly empty = generating_poly(std::vector<AreaVector>{},
                                       [&](const AreaVector& g) { return stat(g, dinv); });
    CHECK(empty == Poly{});
    CHECK(empty.str() == "0");
}

TEST_CASE("polynomial plumbing") {
    Poly p;
    p.add_term(BigInt(3));
    p.add_term(BigInt(0), BigInt(2));
    p.add_term(BigInt(3));
    CHECK(p.str() == "2 + 2*t^3");
    Poly q{{BigInt(2), BigInt(0), BigInt(0), BigInt(2), BigInt(0)}};
    CHECK(p == q);
    CHECK_THROWS_AS(p.add_term(BigInt(-1)), std::domain_error);
}
