#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sphavg/experiments.hpp"
#include "sphavg/operator.hpp"

using namespace sphavg;
using namespace sphavg::funcs;
using namespace sphavg::op;
using sphere::SphereGrid;
using sphere::TruncationMask;
using sphere::VectorFamily;

namespace {
const TestFunction kOne = Constant{1.0};

std::vector<double> xgrid_nodes(const XGrid& g) {
    std::vector<double> xs(g.count());
    for (long i = 0; i < g.count(); ++i) xs[i] = g.node(i);
    return xs;
}
}  // namespace

TEST_CASE("normalization: all-ones input integrates to exactly 1 (n=2)") {
    const auto grid = SphereGrid::build(2, 4096);
    CHECK(eval_T({kOne, kOne}, 0.37, grid) == 1.0);
}

TEST_CASE("normalization within 1e-9 for n=3") {
    const auto grid = SphereGrid::build(3, 128);
    CHECK(eval_T({kOne, kOne, kOne}, -1.4, grid) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("half of the circle sees a one-sided window") {
    const auto grid = SphereGrid::build(2, 4096);
    const double v = eval_T({Indicator{{0.0, 2.0}}, kOne}, 0.0, grid);
    CHECK(v == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("near-pole pair matches the exact arc value") {
    const double eps = 1.0 / 16.0;
    const auto grid = SphereGrid::build(2, 1 << 16);
    const std::vector<TestFunction> fs = {
        Indicator{{-eps, eps}}, Indicator{{1.0 - 2.0 * eps * eps, 1.0 + 2.0 * eps * eps}}};
    const double expected = oracles::near_pole_value(eps);
    CHECK(std::abs(eval_T(fs, 0.0, grid) - expected) <= 0.02 * expected);
}

TEST_CASE("eval_T_v with the standard basis is bitwise equal to eval_T") {
    const auto grid = SphereGrid::build(2, 2048);
    const std::vector<TestFunction> fs = {StepSum{{{{-0.7, 0.3}, 1.0}, {{0.1, 0.9}, 0.5}}},
                                          Indicator{{-0.4, 1.1}}};
    const auto v = VectorFamily::standard(2);
    for (double x : {-1.3, -0.21, 0.0, 0.64, 2.2})
        CHECK(eval_T(fs, x, grid) == eval_T_v(fs, x, grid, v));
}

TEST_CASE("eval_T_v: constants give 1 for any admissible family") {
    const auto grid = SphereGrid::build(2, 2048);
    const VectorFamily g{2, {{-1.0, 1.0}, {0.0, 1.0}}};
    CHECK(eval_T_v({kOne, kOne}, 5.0, grid, g) == doctest::Approx(1.0).epsilon(1e-12));
    VectorFamily bad{2, {{1.0, 2.0}, {2.0, 4.0}}};
    CHECK_THROWS_AS(eval_T_v({kOne, kOne}, 0.0, grid, bad), error);
}

TEST_CASE("eval_T_v is invariant under flipping the family's sign") {
    // sigma -> -sigma is an exact symmetry of the midpoint circle grid
    const auto grid = SphereGrid::build(2, 4096);
    const std::vector<TestFunction> fs = {PowerLog{0.0, 1.0 / 3.0, 0.4, 0.9},
                                          Indicator{{-0.5, 0.7}}};
    const VectorFamily g{2, {{-1.0, 1.0}, {0.0, 1.0}}};
    const VectorFamily gneg{2, {{1.0, -1.0}, {0.0, -1.0}}};
    for (double x : {-0.31, 0.11})
        CHECK(eval_T_v(fs, x, grid, g) ==
              doctest::Approx(eval_T_v(fs, x, grid, gneg)).epsilon(1e-12));
}

TEST_CASE("truncated averages") {
    const auto grid = SphereGrid::build(2, 1 << 15);
    const auto v = VectorFamily::standard(2);
    const std::vector<TestFunction> fs = {kOne, kOne};

    // constants: the mask leaves the arc measure of {|cos| > eps}
    CHECK(eval_U(fs, 0.0, grid, v, {1, 0.5}) ==
          doctest::Approx(oracles::truncated_constant_value(0.5)).epsilon(1e-3));

    // a tiny mask recovers the full average
    CHECK(eval_U(fs, 0.0, grid, v, {1, 1e-6}) == doctest::Approx(1.0).epsilon(1e-5));

    // shrinking eps is monotone, and never exceeds the untruncated value
    const std::vector<TestFunction> gs = {StepSum{{{{-0.8, 0.2}, 1.0}}}, Indicator{{-1.0, 1.0}}};
    double prev = -1.0;
    const double full = eval_T_v(gs, 0.1, grid, v);
    for (double eps : {0.5, 0.25, 0.1, 0.01}) {
        const double u = eval_U(gs, 0.1, grid, v, {2, eps});
        CHECK(u >= prev);
        CHECK(u <= full + 1e-15);
        prev = u;
    }
    CHECK_THROWS_AS(eval_U(fs, 0.0, grid, v, {3, 0.5}), error);
    CHECK_THROWS_AS(eval_U(fs, 0.0, grid, v, {1, 1.5}), error);
}

TEST_CASE("translation equivariance") {
    const auto grid = SphereGrid::build(2, 8192);
    const std::vector<TestFunction> fs = {StepSum{{{{-0.63, 0.41}, 1.25}}},
                                          Indicator{{-0.39, 0.82}}};
    const double h = 0.8125;  // dyadic shift
    std::vector<TestFunction> shifted;
    for (const auto& f : fs) shifted.push_back(translate_scale(f, h, 1.0));
    for (double x : {-0.51, 0.0, 0.27})
        CHECK(eval_T(shifted, x + h, grid) == doctest::Approx(eval_T(fs, x, grid)).epsilon(1e-9));
}

TEST_CASE("permutation symmetry for n=2") {
    const auto grid = SphereGrid::build(2, 8192);
    const std::vector<TestFunction> fs = {StepSum{{{{-0.63, 0.41}, 1.25}, {{0.0, 0.3}, 0.5}}},
                                          Indicator{{-0.39, 0.82}}};
    const std::vector<TestFunction> swapped = {fs[1], fs[0]};
    for (double x : {-0.51, 0.0, 0.27})
        CHECK(eval_T(fs, x, grid) == doctest::Approx(eval_T(swapped, x, grid)).epsilon(1e-9));
}

TEST_CASE("permutation symmetry for n=3 within quadrature tolerance") {
    // the symmetrized grid makes permutations an exact node relabeling
    const auto grid = SphereGrid::build(3, 256);
    const std::vector<TestFunction> fs = {Indicator{{-0.8, 0.3}}, Indicator{{-0.2, 0.9}},
                                          Indicator{{-0.5, 0.5}}};
    const std::vector<TestFunction> rotated = {fs[2], fs[0], fs[1]};
    CHECK(eval_T(fs, 0.13, grid) == doctest::Approx(eval_T(rotated, 0.13, grid)).epsilon(1e-6));
}

TEST_CASE("monotonicity in the inputs") {
    const auto grid = SphereGrid::build(2, 2048);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double lo = -u(rng), hi = u(rng);
        const std::vector<TestFunction> fs = {Indicator{{lo, hi}}, Indicator{{-u(rng), u(rng)}}};
        std::vector<TestFunction> gs = {StepSum{{{{lo, hi}, 1.0}, {{-2.0, 2.0}, u(rng)}}}, fs[1]};
        const double x = u(rng) - 0.5;
        CHECK(eval_T(fs, x, grid) <= eval_T(gs, x, grid) + 1e-15);
    }
}

TEST_CASE("grid refinement converges at first order or better") {
    const std::vector<TestFunction> fs = {StepSum{{{{-0.37, 0.81}, 1.0}}},
                                          Indicator{{-0.93, 0.24}}};
    // averaging over several x values washes out the boundary-cell phase noise
    const std::vector<double> xs = {-0.613, -0.257, 0.1234, 0.489, 0.9321};
    const auto refgrid = SphereGrid::build(2, 1 << 17);
    std::vector<double> reference;
    for (double x : xs) reference.push_back(eval_T(fs, x, refgrid));
    std::vector<double> ns, errs;
    for (long n = 1 << 9; n <= 1 << 13; n <<= 1) {
        const auto grid = SphereGrid::build(2, n);
        double mean = 0;
        for (std::size_t i = 0; i < xs.size(); ++i)
            mean += std::abs(eval_T(fs, xs[i], grid) - reference[i]);
        ns.push_back(static_cast<double>(n));
        errs.push_back(mean / xs.size() + 1e-16);
    }
    const auto fit = xpr::fit_loglog(ns, errs);
    CHECK(fit.slope < -0.85);
}

TEST_CASE("sweep agrees with pointwise evaluation") {
    const auto grid = SphereGrid::build(2, 4096);
    const std::vector<TestFunction> fs = {Indicator{{-0.25, 0.25}}, Indicator{{0.5, 1.5}}};
    const XGrid xg{-2.0, 2.0, 0.125};
    const auto xs = xgrid_nodes(xg);
    const auto sweep = eval_T_v_sweep(fs, xs, grid, VectorFamily::standard(2));
    for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(sweep[i] == doctest::Approx(eval_T(fs, xs[i], grid)).epsilon(1e-12));
}

TEST_CASE("pairing: zero function, box value, window guard") {
    const auto grid = SphereGrid::build(2, 4096);
    const auto v = VectorFamily::standard(2);
    const XGrid xg{-5.0, 5.0, 1.0 / 1024};
    const TestFunction box = Indicator{{-2.0, 2.0}};

    CHECK(pairing({box, box}, Constant{0.0}, grid, v, xg) == 0.0);
    const double expected = oracles::box_pairing_value();
    CHECK(std::abs(pairing({box, box}, box, grid, v, xg) - expected) <= 0.01 * expected);
    CHECK_THROWS_AS(pairing({box, box}, TestFunction(Indicator{{-4.0, 4.0}}), grid, v, xg), error);
    CHECK_THROWS_AS(pairing({box, box}, kOne, grid, v, xg), error);
}

TEST_CASE("adjoint identity on a step-function pair") {
    const auto grid = SphereGrid::build(2, 8192);
    const auto v = VectorFamily::standard(2);
    const XGrid xg{-4.5, 4.5, 1.0 / 4096};
    const TestFunction f1 = StepSum{{{{-1.2, 0.4}, 1.0}, {{-0.1, 0.8}, 0.5}}};
    const TestFunction f2 = Indicator{{-0.9, 1.3}};
    const TestFunction h = StepSum{{{{-1.5, 1.5}, 1.0}, {{0.2, 2.0}, 0.75}}};

    const double lhs = pairing({f1, f2}, h, grid, v, xg);
    const double rhs = pairing({h, f2}, f1, grid, adjoint_family(v, 1), xg);
    CHECK(rhs == doctest::Approx(lhs).epsilon(1e-3));
}

TEST_CASE("norm_ratio at the origin exponent") {
    const auto grid = SphereGrid::build(2, 4096);
    const TestFunction box = Indicator{{-4.0, 4.0}};
    const XGrid xg{-6.0, 6.0, 0.125};
    const auto O = region::pt(2, {{0, 1}, {0, 1}}, {0, 1});
    CHECK(norm_ratio({box, box}, O, grid, xg) == 1.0);

    // infinite denominator factor is rejected
    const auto M = region::pt(2, {{3, 5}, {3, 5}}, {2, 5});
    CHECK_THROWS_AS(norm_ratio({kOne, box}, M, grid, xg), error);
    // zero numerator is fine; zero denominator is not
    CHECK_THROWS_AS(norm_ratio({TestFunction(Constant{0.0}), box}, M, grid, xg), error);
}

TEST_CASE("sphere_fourier: zero frequency, J0 agreement, warning flag") {
    const auto grid = SphereGrid::build(2, 1 << 14);
    CHECK(sphere_fourier({0.0, 0.0}, grid).value.real() == 1.0);
    CHECK(sphere_fourier({0.0, 0.0}, grid).value.imag() == 0.0);

    for (double xi : {0.5, 3.0, 11.0, 20.0}) {
        const auto s = sphere_fourier({0.0, xi}, grid);
        CHECK_FALSE(s.resolution_warning);
        CHECK(s.value.real() ==
              doctest::Approx(oracles::bessel_j0(2.0 * M_PI * xi)).epsilon(1e-9));
        CHECK(std::abs(s.value.imag()) < 1e-9);
    }

    const auto coarse = SphereGrid::build(2, 64);
    CHECK(sphere_fourier({0.0, 10.0}, coarse).resolution_warning);
    CHECK_FALSE(sphere_fourier({0.0, 7.9}, coarse).resolution_warning);
}
