#include <doctest.h>

#include <cmath>
#include <limits>

#include "sphavg/testfunction.hpp"

using namespace sphavg;
using namespace sphavg::funcs;

TEST_CASE("evaluate: half-open indicator") {
    const TestFunction f = Indicator{{-1.0, 1.0}};
    CHECK(evaluate(f, 0.0) == 1.0);
    CHECK(evaluate(f, -1.0) == 1.0);
    CHECK(evaluate(f, 1.0) == 0.0);
    CHECK(evaluate(f, 2.0) == 0.0);
}

TEST_CASE("evaluate: power-log at 1/e") {
    const TestFunction f = PowerLog{0.0, 0.5, 2.0 / 3.0, 0.9};
    // |log(1/e)| = 1, so the value is e^(1/2)
    CHECK(evaluate(f, std::exp(-1.0)) == doctest::Approx(std::sqrt(M_E)).epsilon(1e-12));
    CHECK(std::isinf(evaluate(f, 0.0)));
    CHECK(evaluate(f, 0.95) == 0.0);
    CHECK(evaluate(f, 0.9) > 0.0);  // support is closed at the radius
}

TEST_CASE("evaluate: constant and step sum") {
    CHECK(evaluate(Constant{1.0}, 123.0) == 1.0);
    const TestFunction s = StepSum{{{{0.0, 2.0}, 1.0}, {{1.0, 3.0}, 0.5}}};
    CHECK(evaluate(s, 0.5) == 1.0);
    CHECK(evaluate(s, 1.5) == 1.5);  // overlaps add
    CHECK(evaluate(s, 2.5) == 0.5);
}

TEST_CASE("validation rejects out-of-domain parameters") {
    CHECK_THROWS_AS(validate(TestFunction(PowerLog{0.0, 1.0, 0.0, 0.5})), error);   // a = 1
    CHECK_THROWS_AS(validate(TestFunction(PowerLog{0.0, 0.5, -1.0, 0.5})), error);  // b < 0
    CHECK_THROWS_AS(validate(TestFunction(PowerLog{0.0, 0.5, 0.0, 1.0})), error);   // rho = 1
    CHECK_THROWS_AS(validate(TestFunction(Indicator{{1.0, 1.0}})), error);
    CHECK_THROWS_AS(validate(TestFunction(Constant{-1.0})), error);
}

TEST_CASE("translate_scale") {
    const double eps = 0.25;
    const auto shifted = translate_scale(Indicator{{-eps, eps}}, 1.0, 1.0);
    const auto* ind = std::get_if<Indicator>(&shifted);
    REQUIRE(ind != nullptr);
    CHECK(ind->iv.lo == 1.0 - eps);
    CHECK(ind->iv.hi == 1.0 + eps);

    const auto dilated = translate_scale(Indicator{{0.0, 1.0}}, 0.0, 3.0);
    CHECK(std::get<Indicator>(dilated).iv.hi == 3.0);

    // the E-type profile: the center moves to -1 under the shift
    const auto pl = translate_scale(PowerLog{0.0, 0.5, 2.0 / 3.0, 0.5}, -1.0, 1.0);
    CHECK(std::get<PowerLog>(pl).center == -1.0);
    CHECK_THROWS_AS(translate_scale(PowerLog{0.0, 0.5, 0.5, 0.5}, 0.0, 2.0), error);

    CHECK_THROWS_AS(translate_scale(TestFunction(Constant{1.0}), 0.0, 0.0), error);
}

TEST_CASE("support bounds") {
    CHECK(support_bounds(Indicator{{-1.0, 2.0}}).lo == -1.0);
    CHECK(support_bounds(PowerLog{-1.0, 0.5, 0.5, 0.5}).lo == -1.5);
    CHECK(std::isinf(support_bounds(Constant{2.0}).hi));
    const auto empty = support_bounds(Constant{0.0});
    CHECK(empty.lo > empty.hi);
}

TEST_CASE("step profile: overlaps and touching intervals") {
    const TestFunction s = StepSum{{{{0.0, 1.0}, 1.0}, {{1.0, 2.0}, 1.0}}};
    const auto profile = step_profile(s);
    double total = 0;
    for (const auto& p : profile) {
        CHECK(p.height == 1.0);
        total += p.iv.length();
    }
    CHECK(total == 2.0);  // half-open algebra is exactly additive

    const auto overlap = step_profile(TestFunction(StepSum{{{{0.0, 2.0}, 1.0}, {{1.0, 3.0}, 2.0}}}));
    REQUIRE(overlap.size() == 3);
    CHECK(overlap[1].height == 3.0);
    CHECK_THROWS_AS(step_profile(TestFunction(Constant{1.0})), error);
}
