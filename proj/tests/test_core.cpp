#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ringfwm/core/grid.hpp"
#include "ringfwm/core/quadrature.hpp"
#include "ringfwm/core/units.hpp"

using namespace ringfwm;

TEST_CASE("make_grid produces symmetric uniform nodes") {
    const auto g = make_grid(0.0, 1.0, 3);
    CHECK(g.node(0) == doctest::Approx(-1.0));
    CHECK(g.node(1) == doctest::Approx(0.0));
    CHECK(g.node(2) == doctest::Approx(1.0));

    const auto g2 = make_grid(5.0, 2.0, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(g2.node(i) == doctest::Approx(3.0 + static_cast<double>(i)));
    }
    CHECK(g2.node(2) == doctest::Approx(g2.center));
}

TEST_CASE("make_grid rejects bad arguments") {
    CHECK_THROWS_AS(make_grid(0.0, 0.0, 11), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0.0, -1.0, 11), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 2), std::invalid_argument);
}

TEST_CASE("integrate_1d: constants and odd functions") {
    const auto g = make_grid(0.0, 1.0, 101);
    std::vector<Complex> ones(g.points, Complex{1.0, 0.0});
    CHECK(integrate_1d({g, ones}).real() == doctest::Approx(2.0).epsilon(1e-12));

    std::vector<Complex> odd(g.points);
    for (std::size_t i = 0; i < g.points; ++i) {
        const double x = g.node(i);
        odd[i] = x * x * x;
    }
    CHECK(std::abs(integrate_1d({g, odd})) < 1e-14);
}

TEST_CASE("integrate_1d: Lorentzian near pi, limited by tail truncation") {
    // Tails beyond +-200 hold 2/(200*pi) ~ 3.2e-3 of the integral.
    const auto g = make_grid(0.0, 200.0, 40001);
    std::vector<Complex> v(g.points);
    for (std::size_t i = 0; i < g.points; ++i) {
        const double x = g.node(i);
        v[i] = 1.0 / (x * x + 1.0);
    }
    const double got = integrate_1d({g, v}).real();
    CHECK(std::abs(got - std::numbers::pi) / std::numbers::pi < 3.5e-3);
    CHECK(std::abs(got - std::numbers::pi) / std::numbers::pi > 2.0e-3);
}

TEST_CASE("trapezoid converges at second order against the truncated value") {
    const double exact = 2.0 * std::atan(200.0);
    const auto err = [&](std::size_t points) {
        const auto g = make_grid(0.0, 200.0, points);
        std::vector<Complex> v(g.points);
        for (std::size_t i = 0; i < g.points; ++i) {
            const double x = g.node(i);
            v[i] = 1.0 / (x * x + 1.0);
        }
        return std::abs(integrate_1d({g, v}).real() - exact);
    };
    const double e1 = err(4001);   // h = 0.1
    const double e2 = err(8001);   // h = 0.05
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("integrate_2d: constant and separable integrands") {
    const auto g = make_grid(0.5, 0.5, 51);
    ComplexGrid2D f(g, g);
    for (auto& v : f.values) v = 1.0;
    CHECK(integrate_2d(f).real() == doctest::Approx(1.0).epsilon(1e-12));

    // f(x, y) = x e^x * cos(y): product of the 1-D integrals.
    ComplexGrid2D s(g, g);
    std::vector<Complex> fx(g.points), fy(g.points);
    for (std::size_t i = 0; i < g.points; ++i) {
        fx[i] = g.node(i) * std::exp(g.node(i));
        fy[i] = std::cos(g.node(i));
    }
    for (std::size_t i = 0; i < g.points; ++i) {
        for (std::size_t j = 0; j < g.points; ++j) {
            s.at(i, j) = fx[i] * fy[j];
        }
    }
    const Complex lhs = integrate_2d(s);
    const Complex rhs = integrate_1d({g, fx}) * integrate_1d({g, fy});
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
}

TEST_CASE("dB conversions") {
    CHECK(db_to_linear(0.0) == doctest::Approx(1.0));
    CHECK(db_to_linear(-0.88) == doctest::Approx(0.8165823713585925).epsilon(1e-12));
    CHECK(linear_to_db(0.75) == doctest::Approx(-1.2493873660829995).epsilon(1e-10));
    CHECK_THROWS_AS(linear_to_db(0.0), std::invalid_argument);
    CHECK_THROWS_AS(linear_to_db(-2.0), std::invalid_argument);

    for (double db = -30.0; db <= 0.0; db += 1.7) {
        CHECK(linear_to_db(db_to_linear(db)) == doctest::Approx(db).epsilon(1e-12));
    }
}

TEST_CASE("wavelength conversion round trip") {
    const double w = omega_from_wavelength_nm(1561.25);
    CHECK(wavelength_nm_from_omega(w) == doctest::Approx(1561.25).epsilon(1e-12));
}

TEST_CASE("pow_n matches std::pow on magnitudes") {
    const Complex z{0.3, -0.7};
    for (unsigned n : {0u, 1u, 5u, 29u, 31u, 64u}) {
        const Complex got = pow_n(z, n);
        CHECK(std::abs(got) ==
              doctest::Approx(std::pow(std::abs(z), n)).epsilon(1e-10));
    }
}
