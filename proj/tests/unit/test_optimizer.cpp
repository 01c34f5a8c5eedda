#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ramsey/optimizer.hpp"
#include "ramsey/units.hpp"

using namespace ramsey;

namespace {

const double eta = units::ghz_to_angular(0.1);

SystemParams system_defaults() { return {default_transmon(), eta}; }

SchemeSpec base_scheme() {
    SchemeSpec s;
    s.kind = SchemeKind::double_resonance;
    return s;
}

const SweepPlan fast_plan{4.0, 5.0, 0.004, false, 0.0001};

}  // namespace

TEST_CASE("seed points") {
    const auto s = seed_points(eta, {3.0, 2.0});
    REQUIRE(s.size() == 2);
    CHECK(units::s_to_ns(s[0]) == doctest::Approx(1.1333333333).epsilon(1e-9));
    CHECK(s[1] == doctest::Approx(1.5 * s[0]).epsilon(1e-14));
    CHECK(seed_points(eta, {}).empty());
    CHECK_THROWS_AS(seed_points(eta, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(seed_points(0.0, {1.0}), std::invalid_argument);
}

TEST_CASE("log grid") {
    const auto g = log_grid(1e-4, 1e-2, 3);
    REQUIRE(g.size() == 3);
    CHECK(g[1] == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(g.front() == 1e-4);
    CHECK(g.back() == doctest::Approx(1e-2).epsilon(1e-14));
    CHECK(log_grid(0.5, 0.5, 1) == std::vector<double>{0.5});
    CHECK_THROWS_AS(log_grid(0.0, 1.0, 2), std::invalid_argument);
}

TEST_CASE("dominance") {
    SpectrumMetrics a;
    a.peak_value = 0.6;
    a.fwhm = 1.0;
    SpectrumMetrics b = a;
    CHECK_FALSE(dominates(a, b));
    b.fwhm = 2.0;
    CHECK(dominates(a, b));
    CHECK_FALSE(dominates(b, a));
    b.peak_value = 0.7;
    CHECK_FALSE(dominates(a, b));
    CHECK_FALSE(dominates(b, a));
}

TEST_CASE("single-point search space") {
    const auto s = seed_points(eta, {3.0});
    const SearchSpace space{s, {0.001}, SchemeKind::double_resonance};
    const auto res = optimize(space, system_defaults(), base_scheme(), fast_plan, {});
    REQUIRE(res.trace.size() == 1);
    CHECK(res.trace[0].on_pareto);
    REQUIRE(res.pareto_front.size() == 1);
    CHECK(res.best.s == s[0]);

    auto scheme = base_scheme();
    scheme.s = s[0];
    scheme.ratio_r = 0.001;
    const auto direct = metrics(measure(system_defaults(), scheme, fast_plan));
    CHECK(res.best.metrics.fwhm == direct.fwhm);
    CHECK(res.best.metrics.peak_value == direct.peak_value);
    CHECK(res.best.metrics.peak_omega == direct.peak_omega);
}

TEST_CASE("grid search over the double-resonance seeds") {
    const SearchSpace space{seed_points(eta, {2.5, 3.0, 3.5}), {0.0005, 0.001, 0.002},
                            SchemeKind::double_resonance};
    const auto res = optimize(space, system_defaults(), base_scheme(), fast_plan, {});
    REQUIRE(res.trace.size() == 9);

    SUBCASE("front is non-dominated and contains the best point") {
        for (const auto& p : res.pareto_front) {
            CHECK(p.on_pareto);
            for (const auto& q : res.trace)
                if (q.measured) CHECK_FALSE(dominates(q.metrics, p.metrics));
        }
        const bool best_on_front =
            std::any_of(res.pareto_front.begin(), res.pareto_front.end(), [&](const auto& p) {
                return p.s == res.best.s && p.ratio_r == res.best.ratio_r;
            });
        CHECK(best_on_front);
        for (const auto& q : res.trace) {
            if (!q.on_pareto && q.measured) {
                const bool dominated = std::any_of(
                    res.trace.begin(), res.trace.end(),
                    [&](const auto& p) { return p.measured && dominates(p.metrics, q.metrics); });
                CHECK(dominated);
            }
        }
    }
    SUBCASE("best point is the narrowest feasible one") {
        CHECK(res.best.metrics.peak_value >= 0.3);
        for (const auto& q : res.trace)
            if (q.measured && q.metrics.peak_value >= 0.3) CHECK(res.best.metrics.fwhm <= q.metrics.fwhm);
        CHECK(res.best.s == doctest::Approx(seed_points(eta, {3.0})[0]).epsilon(1e-12));
    }
    SUBCASE("deterministic") {
        const auto again = optimize(space, system_defaults(), base_scheme(), fast_plan, {}, 2);
        CHECK(again.best.s == res.best.s);
        CHECK(again.best.ratio_r == res.best.ratio_r);
        CHECK(again.best.metrics.fwhm == res.best.metrics.fwhm);
        CHECK(again.pareto_front.size() == res.pareto_front.size());
    }
    SUBCASE("a sub-space never beats the full space") {
        const SearchSpace sub{seed_points(eta, {2.5, 3.5}), {0.0005, 0.002}, SchemeKind::double_resonance};
        const auto small = optimize(sub, system_defaults(), base_scheme(), fast_plan, {});
        CHECK(res.best.metrics.fwhm <= small.best.metrics.fwhm);
    }
}

TEST_CASE("infeasible objective") {
    const SearchSpace space{seed_points(eta, {3.0}), {0.001, 0.002}, SchemeKind::double_resonance};
    ObjectiveConfig strict;
    strict.p_min = 0.99;
    try {
        optimize(space, system_defaults(), base_scheme(), fast_plan, strict);
        FAIL("expected InfeasibleSearch");
    } catch (const InfeasibleSearch& e) {
        const auto& partial = e.partial();
        CHECK(partial.trace.size() == 2);
        for (const auto& q : partial.trace) CHECK(partial.best.metrics.peak_value >= q.metrics.peak_value);
    }
}

TEST_CASE("search space validation") {
    CHECK_THROWS_AS(validate(SearchSpace{{}, {0.001}, SchemeKind::double_resonance}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SearchSpace{{1e-9}, {-1.0}, SchemeKind::double_resonance}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SearchSpace{{1e-9}, {0.0}, SchemeKind::cw}), std::invalid_argument);
}
