#include <doctest.h>

#include <cmath>

#include "ramsey/diagnostics.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/qubit_model.hpp"
#include "ramsey/units.hpp"
#include "test_support.hpp"

using namespace ramsey;
using units::angular_to_ghz;
using units::ghz_to_angular;

TEST_CASE("omega_eg at zero flux and at the resonant bias point") {
    const auto params = default_transmon();
    // (sqrt(800) - 1) * 0.5 GHz
    CHECK(angular_to_ghz(omega_eg(params, 0.0)) == doctest::Approx(13.642135623730950).epsilon(1e-13));
    // Independent high-precision evaluation of the same expression.
    CHECK(angular_to_ghz(omega_eg(params, 0.46)) == doctest::Approx(4.5066602354125087).epsilon(1e-13));
}

TEST_CASE("omega_eg rejects flux at half a quantum") {
    CHECK_THROWS_AS(omega_eg(default_transmon(), 0.5), DomainError);
    TransmonParams bad = default_transmon();
    bad.phi_disp = 0.5;
    CHECK_THROWS_AS(validate(bad), DomainError);
}

TEST_CASE("transmon parameter invariants") {
    TransmonParams p = default_transmon();
    CHECK_NOTHROW(validate(p));
    p.e_c = 0.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = default_transmon();
    p.phi_res = 1.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    CHECK_THROWS_AS(validate(DriveParams{0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("omega_eg decreases monotonically on [0, 0.5)") {
    const auto p = default_transmon();
    double prev = omega_eg(p, 0.0);
    for (int i = 1; i < 490; ++i) {
        const double w = omega_eg(p, i * 1e-3);
        CHECK(w < prev);
        prev = w;
    }
}

TEST_CASE("resonant quantities on and off resonance") {
    const double eta = ghz_to_angular(0.1);
    const auto on = resonant_from_detuning(0.0, eta);
    CHECK(on.theta == doctest::Approx(units::pi / 2));
    CHECK(on.lambda == doctest::Approx(eta));

    // eta -> 0 at fixed delta: theta -> 0 (delta > 0) or pi (delta < 0), lambda -> |delta|
    const double tiny = 1e-12;
    const auto above = resonant_from_detuning(1.0, tiny);
    const auto below = resonant_from_detuning(-1.0, tiny);
    CHECK(above.theta == doctest::Approx(0.0));
    CHECK(below.theta == doctest::Approx(units::pi));
    CHECK(above.lambda == doctest::Approx(1.0));
}

TEST_CASE("dispersive detuning at the dispersive bias point") {
    const auto params = default_transmon();
    const DriveParams drive{ghz_to_angular(0.1), ghz_to_angular(4.505)};
    const auto q = regime_quantities(params, drive, 0.49, Regime::dispersive);
    // Regression fixture from an independent 30-digit evaluation.
    CHECK(angular_to_ghz(q.delta_d) == doctest::Approx(-1.2532912194709305).epsilon(1e-12));
}

TEST_CASE("dispersive detuning singular when omega'_eg equals omega") {
    const auto params = default_transmon();
    const double w = omega_eg(params, params.phi_disp);
    const DriveParams drive{ghz_to_angular(0.1), w};
    CHECK_THROWS_AS(regime_quantities(params, drive, params.phi_disp, Regime::dispersive),
                    SingularDetuningError);
}

TEST_CASE("dispersive regime near the qubit raises a warning diagnostic") {
    const auto params = default_transmon();
    const double w = omega_eg(params, params.phi_disp);
    diagnostics::reset_counts();
    regime_quantities(params, DriveParams{ghz_to_angular(0.1), w + ghz_to_angular(0.5)},
                      params.phi_disp, Regime::dispersive);
    CHECK(diagnostics::warning_count() == 1);
    regime_quantities(params, DriveParams{ghz_to_angular(0.1), w + ghz_to_angular(2.5)},
                      params.phi_disp, Regime::dispersive);
    CHECK(diagnostics::warning_count() == 1);
}

TEST_CASE("property: lambda, theta and F identities") {
    test::Gen g(7);
    for (int k = 0; k < 2000; ++k) {
        const double eta = g.uniform(1e-3, 5.0);
        const double delta = g.uniform(-50.0, 50.0);
        const auto q = resonant_from_detuning(delta, eta);
        CHECK(q.lambda * q.lambda == doctest::Approx(delta * delta + eta * eta).epsilon(1e-14));
        CHECK(q.lambda >= std::abs(delta));
        CHECK(q.lambda >= eta);
        CHECK(q.theta > 0.0);
        CHECK(q.theta < units::pi);
        CHECK(std::abs(std::sin(q.theta) - eta / q.lambda) < 1e-14);
        CHECK(std::abs(std::cos(q.theta) - delta / q.lambda) < 1e-14);
        CHECK(std::abs(q.f() - std::sin(q.theta) * std::cos(q.theta)) < 1e-14);
        CHECK(std::abs(q.f_prime() - std::sin(q.theta)) < 1e-14);
    }
}
