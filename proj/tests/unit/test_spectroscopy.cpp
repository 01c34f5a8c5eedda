#include <doctest.h>

#include <cmath>

#include "ramsey/diagnostics.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/spectroscopy.hpp"
#include "ramsey/units.hpp"

using namespace ramsey;

namespace {

SystemParams default_system() {
    SystemParams sys;
    sys.eta = units::ghz_to_angular(0.1);
    return sys;
}

SchemeSpec double_scheme(double k, double r) {
    SchemeSpec s;
    s.kind = SchemeKind::double_resonance;
    s.s = 0.68 * units::pi / (k * units::ghz_to_angular(0.1));
    s.ratio_r = r;
    return s;
}

Spectrum from_values(const std::vector<double>& x, const std::vector<double>& y) {
    Spectrum sp;
    for (std::size_t i = 0; i < x.size(); ++i) sp.points.push_back({x[i], y[i]});
    return sp;
}

}  // namespace

TEST_CASE("frequency grid") {
    const auto g = frequency_grid_ghz(4.0, 5.0, 0.25);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == doctest::Approx(units::ghz_to_angular(4.0)));
    CHECK(g.back() == doctest::Approx(units::ghz_to_angular(5.0)));
    CHECK(frequency_grid_ghz(4.0, 5.0, 0.3).size() == 4);
    CHECK_THROWS_WITH_AS(frequency_grid_ghz(5.0, 5.0, 0.1), doctest::Contains("empty grid"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(frequency_grid_ghz(5.0, 4.0, 0.1), doctest::Contains("empty grid"),
                         std::invalid_argument);
    CHECK_THROWS_AS(frequency_grid_ghz(4.0, 5.0, 0.0), std::invalid_argument);
}

TEST_CASE("metrics of an analytic Lorentzian") {
    const double w0 = 10.0;
    const double g = 0.5;  // half width
    std::vector<double> x;
    std::vector<double> y;
    for (int i = 0; i <= 4000; ++i) {
        x.push_back(5.0 + 1e-3 * i * 2.5);
        const double d = x.back() - w0;
        y.push_back(0.8 * g * g / (d * d + g * g));
    }
    const auto m = metrics(from_values(x, y));
    CHECK(m.peak_omega == doctest::Approx(w0).epsilon(1e-9));
    CHECK(m.peak_value == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(m.fwhm == doctest::Approx(2.0 * g).epsilon(1e-5));
    CHECK(m.fringes.empty());
    CHECK_FALSE(m.shift_vs_ref.has_value());
}

TEST_CASE("metrics invariances") {
    std::vector<double> x;
    std::vector<double> y;
    for (int i = 0; i <= 600; ++i) {
        x.push_back(-3.0 + 0.01 * i);
        y.push_back(std::exp(-x.back() * x.back()) * (1.0 + 0.1 * std::cos(9.0 * x.back())));
    }
    const auto m = metrics(from_values(x, y));

    SUBCASE("scaling the amplitude leaves FWHM and peak position unchanged") {
        std::vector<double> y2 = y;
        for (auto& v : y2) v *= 0.37;
        const auto m2 = metrics(from_values(x, y2));
        CHECK(m2.fwhm == doctest::Approx(m.fwhm).epsilon(1e-12));
        CHECK(m2.peak_omega == doctest::Approx(m.peak_omega).epsilon(1e-12));
        CHECK(m2.peak_value == doctest::Approx(0.37 * m.peak_value).epsilon(1e-12));
    }
    SUBCASE("mirroring the spectrum mirrors the crossings") {
        std::vector<double> xm;
        std::vector<double> ym;
        for (std::size_t i = x.size(); i-- > 0;) {
            xm.push_back(-x[i]);
            ym.push_back(y[i]);
        }
        const auto mm = metrics(from_values(xm, ym));
        CHECK(mm.fwhm == doctest::Approx(m.fwhm).epsilon(1e-12));
        CHECK(mm.half_max_left == doctest::Approx(-m.half_max_right).epsilon(1e-12));
    }
    SUBCASE("fringes lie outside the half-max interval and below the peak") {
        for (const auto& f : m.fringes) {
            CHECK((f.omega < m.half_max_left || f.omega > m.half_max_right));
            CHECK(f.height < m.peak_value);
            CHECK(f.height >= fringe_detection_fraction * m.peak_value);
        }
    }
}

TEST_CASE("metrics error paths") {
    CHECK_THROWS_AS(metrics(from_values({1, 2}, {0.1, 0.2})), NoPeakError);
    CHECK_THROWS_AS(metrics(from_values({1, 2, 3, 4}, {0.1, 0.2, 0.3, 0.4})), NoPeakError);
    try {
        metrics(from_values({1, 2, 3, 4, 5}, {0.5, 0.6, 0.9, 0.4, 0.1}));
        FAIL("expected a missing crossing");
    } catch (const NoCrossingError& e) {
        CHECK(e.side() == Side::left);
    }
    try {
        metrics(from_values({1, 2, 3, 4, 5}, {0.1, 0.6, 0.9, 0.8, 0.7}));
        FAIL("expected a missing crossing");
    } catch (const NoCrossingError& e) {
        CHECK(e.side() == Side::right);
    }
}

TEST_CASE("shift against a reference") {
    std::vector<double> x;
    std::vector<double> a;
    std::vector<double> b;
    for (int i = 0; i <= 200; ++i) {
        x.push_back(0.01 * i);
        a.push_back(std::exp(-50.0 * (x.back() - 1.0) * (x.back() - 1.0)));
        b.push_back(std::exp(-50.0 * (x.back() - 0.9) * (x.back() - 0.9)));
    }
    const auto ref = from_values(x, b);
    const auto m = metrics(from_values(x, a), &ref);
    REQUIRE(m.shift_vs_ref.has_value());
    CHECK(*m.shift_vs_ref == doctest::Approx(0.1).epsilon(1e-3));
}

TEST_CASE("CW baseline") {
    const auto sys = default_system();
    const double w_eg = omega_eg(sys.transmon, sys.transmon.phi_res);
    const double h = units::ghz_to_angular(0.0001);
    SpectrumMetrics m;
    {
        std::vector<double> grid;
        for (int i = -5000; i <= 5000; ++i) grid.push_back(w_eg + h * i);
        m = metrics(cw_baseline(sys, grid));
    }
    CHECK(m.peak_omega == doctest::Approx(w_eg).epsilon(1e-12));
    CHECK(m.peak_value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.fwhm == doctest::Approx(4.0 * sys.eta).epsilon(1e-6));
    CHECK(m.half_max_left == doctest::Approx(w_eg - 2.0 * sys.eta).epsilon(1e-9));

    const std::vector<double> sym = {w_eg - 0.37 * sys.eta, w_eg + 0.37 * sys.eta};
    const auto pair = cw_baseline(sys, sym, 0.8);
    CHECK(pair.points[0].p_e == doctest::Approx(pair.points[1].p_e).epsilon(1e-12));
}

TEST_CASE("sweep") {
    const auto sys = default_system();
    const auto scheme = double_scheme(3.0, 0.001);

    SUBCASE("single point equals the direct evaluation") {
        const double w = units::ghz_to_angular(4.505);
        const auto sp = sweep(sys, scheme, {w});
        REQUIRE(sp.points.size() == 1);
        CHECK(sp.points[0].p_e == averaged_probability(sys, scheme, w));
        CHECK(sp.points[0].p_e == doctest::Approx(0.6757755911810314).epsilon(1e-12));
    }
    SUBCASE("threaded sweeps are bit-identical to sequential ones") {
        const auto grid = frequency_grid_ghz(4.3, 4.7, 0.01);
        const auto a = sweep(sys, scheme, grid, 1);
        const auto b = sweep(sys, scheme, grid, 3);
        REQUIRE(a.points.size() == b.points.size());
        for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i].p_e == b.points[i].p_e);
    }
    SUBCASE("non-increasing grid") {
        CHECK_THROWS_AS(sweep(sys, scheme, {2.0, 1.0}), std::invalid_argument);
    }
    SUBCASE("domain errors carry the offending frequency") {
        const double singular = omega_eg(sys.transmon, sys.transmon.phi_disp);
        CHECK_THROWS_WITH_AS(sweep(sys, scheme, {singular}), doctest::Contains("GHz"), DomainError);
        auto bad = sys;
        bad.transmon.phi_res = 0.5;
        CHECK_THROWS_AS(sweep(bad, scheme, frequency_grid_ghz(4.4, 4.6, 0.1)), DomainError);
    }
}

TEST_CASE("refined measurement converges") {
    const auto sys = default_system();
    const auto scheme = double_scheme(3.0, 0.001);
    SweepPlan coarse{3.5, 5.5, 0.004, false, 0.0001};
    SweepPlan fine{3.5, 5.5, 0.001, true, 0.0001};
    const auto mc = metrics(measure(sys, scheme, coarse));
    const auto mf = metrics(measure(sys, scheme, fine));
    CHECK(std::abs(units::angular_to_mhz(mf.fwhm - mc.fwhm)) < 0.5);
    CHECK(std::abs(units::angular_to_mhz(mf.peak_omega - mc.peak_omega)) < 0.5);
    // refinement stays sorted and inside the window
    const auto sp = measure(sys, scheme, fine);
    for (std::size_t i = 1; i < sp.points.size(); ++i)
        CHECK(sp.points[i].omega > sp.points[i - 1].omega);
}

TEST_CASE("triple scheme closed form and numeric agree at resonance") {
    const auto sys = default_system();
    SchemeSpec closed;
    closed.kind = SchemeKind::triple_resonance;
    closed.s = 0.68 * units::pi / (2.0 * sys.eta);
    closed.ratio_r = 0.045;
    SchemeSpec numeric = closed;
    numeric.method = AverageMethod::numeric;
    const double w = omega_eg(sys.transmon, sys.transmon.phi_res);
    CHECK(std::abs(averaged_probability(sys, closed, w) - averaged_probability(sys, numeric, w)) <=
          1e-6);
}

TEST_CASE("scheme validation") {
    SchemeSpec s = double_scheme(3.0, 0.001);
    s.s = 0.0;
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
    s = double_scheme(3.0, -0.1);
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
    SchemeSpec g;
    g.kind = SchemeKind::general;
    g.n_res = 0;
    g.s = 1e-9;
    CHECK_THROWS_AS(validate(g), std::invalid_argument);
    CHECK(to_string(SchemeKind::triple_resonance) != to_string(SchemeKind::double_resonance));
}

TEST_CASE("charging-energy fit moves the CW peak onto the target") {
    const auto sys = default_system();
    SchemeSpec cw;
    cw.kind = SchemeKind::cw;
    SweepPlan plan{3.5, 5.5, 0.002, true, 0.0001};
    const double target = units::ghz_to_angular(4.505);
    const double e_c = fit_charging_energy(sys, cw, plan, target);
    auto fitted = sys;
    fitted.transmon.e_c = e_c;
    CHECK(std::abs(units::angular_to_mhz(omega_eg(fitted.transmon, fitted.transmon.phi_res) - target)) <
          0.01);
}
