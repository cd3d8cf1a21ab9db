#include <doctest.h>

#include <random>

#include "alf/gamma.hpp"
#include "oracles.hpp"

using namespace alf;

TEST_CASE("gamma at classical points") {
    CHECK(gamma_c({0.5, 0}).real() == doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
    CHECK(gamma_c({5, 0}).real() == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_c({1, 0}).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma({-3, 0}).at_pole);
    CHECK(gamma({0, 0}).at_pole);
    CHECK_FALSE(gamma({-2.5, 0}).at_pole);
}

TEST_CASE("gamma at a complex point against the integral definition") {
    for (Complex z : {Complex(0.5, 1.5), Complex(2.3, -0.7), Complex(4.1, 2.2)}) {
        Complex got = gamma_c(z);
        Complex want = oracles::gamma_by_quadrature(z);
        CHECK(std::abs(got - want) / std::abs(want) < 1e-12);
    }
}

TEST_CASE("recip_gamma: entire, exact zeros at nonpositive integers") {
    CHECK(recip_gamma({0, 0}) == Complex(0, 0));
    CHECK(recip_gamma({-3, 0}) == Complex(0, 0));
    CHECK(recip_gamma({-41, 0}) == Complex(0, 0));
    CHECK(recip_gamma({0.5, 0}).real() ==
          doctest::Approx(1.0 / std::sqrt(pi)).epsilon(1e-14));
}

TEST_CASE("digamma at classical points and against the log-gamma oracle") {
    const double euler = 0.57721566490153286;
    CHECK(digamma({1, 0}).real() == doctest::Approx(-euler).epsilon(1e-13));
    CHECK(digamma({0.5, 0}).real() ==
          doctest::Approx(-euler - 2.0 * std::log(2.0)).epsilon(1e-13));
    // nu + 1/2 at nu = 2.3, checked by Richardson differences of log Gamma
    Complex z(2.8, 0.0);
    Complex want = oracles::digamma_by_log_ratio([](const Complex& w) { return gamma_c(w); }, z);
    CHECK(std::abs(digamma(z) - want) < 1e-9);
    CHECK_THROWS_AS(digamma({-2, 0}), pole_error);
    CHECK_THROWS_AS(digamma({0, 0}), pole_error);
}

TEST_CASE("recurrence and reflection sweeps") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-20, 20);
    int done = 0;
    while (done < 1000) {
        Complex z(u(rng), u(rng));
        if (std::abs(z) > 20.0) continue;
        if (near_integer(z, 1e-3) && z.real() < 0.5) continue;
        ++done;
        Complex lhs = gamma_c(z + 1.0);
        Complex rhs = z * gamma_c(z);
        CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-12);
        if (std::abs(z) < 19.0) {
            Complex pl = digamma(z + 1.0);
            Complex pr = digamma(z) + 1.0 / z;
            CHECK(std::abs(pl - pr) / std::max(1.0, std::abs(pl)) < 1e-11);
        }
        if (!near_integer(z, 1e-2)) {
            Complex refl = gamma_c(z) * gamma_c(1.0 - z) * detail::sin_pi(z) / pi;
            CHECK(std::abs(refl - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("psi_over_gamma: entire combination, finite at the poles") {
    CHECK(psi_over_gamma({0, 0}).real() == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(psi_over_gamma({-1, 0}).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(psi_over_gamma({-3, 0}).real() == doctest::Approx(6.0).epsilon(1e-13));
    // near-pole continuity
    Complex near = psi_over_gamma({-3 + 1e-7, 1e-8});
    CHECK(std::abs(near - Complex(6.0, 0.0)) < 1e-4);
    // regular point agrees with the naive product
    Complex z(1.7, 0.4);
    CHECK(std::abs(psi_over_gamma(z) - digamma(z) * recip_gamma(z)) < 1e-13);
}

TEST_CASE("pochhammer products") {
    CHECK(pochhammer({3, 0}, 4).real() == doctest::Approx(3 * 4 * 5 * 6));
    CHECK(pochhammer({-2, 0}, 4) == Complex(0, 0)); // hits the zero factor exactly
    CHECK(pochhammer({0.5, 0}, 0) == Complex(1, 0));
}
