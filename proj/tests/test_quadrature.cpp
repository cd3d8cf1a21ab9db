#include <doctest.h>

#include <functional>
#include <vector>

#include "alf/bessel.hpp"
#include "alf/quadrature.hpp"

using namespace alf;

namespace {

struct CorpusCase {
    const char* name;
    std::function<QuadratureResult(double tol)> run;
    double truth;
};

// the 20-integral closed-form corpus
std::vector<CorpusCase> corpus() {
    std::vector<CorpusCase> c;
    auto lap = [](BesselKind k, Complex ord, Complex s, Complex decay) {
        return [=](double tol) {
            IntegrandSpec spec{k, ord, s, decay};
            return laplace_bessel_integral(spec, tol);
        };
    };
    auto fin = [](auto f, double a, double b) {
        return [=](double tol) { return integrate_finite(f, a, b, EndpointSingularity::both, tol); };
    };
    const double s3 = std::sqrt(3.0), s8 = std::sqrt(8.0);
    // int_0^inf e^{-pt} K_0(t) dt = arccosh(p)/sqrt(p^2-1)
    c.push_back({"K0 p=2", lap(BesselKind::K, {0, 0}, {0.5, 0}, {2, 0}), std::acosh(2.0) / s3});
    c.push_back({"K0 p=1.5", lap(BesselKind::K, {0, 0}, {0.5, 0}, {1.5, 0}),
                 std::acosh(1.5) / std::sqrt(1.25)});
    c.push_back({"K0 p=3", lap(BesselKind::K, {0, 0}, {0.5, 0}, {3, 0}), std::acosh(3.0) / s8});
    // int e^{-2t} K_{1/2}(t) dt = pi/sqrt6  (K_{1/2} = sqrt(pi/2t) e^{-t})
    c.push_back({"K1/2 p=2", lap(BesselKind::K, {0.5, 0}, {0.5, 0}, {2, 0}), pi / std::sqrt(6.0)});
    c.push_back({"K1/2 p=3", lap(BesselKind::K, {0.5, 0}, {0.5, 0}, {3, 0}), pi / s8});
    // int e^{-pt} K_0(t) t dt = [p arccosh p - sqrt(p^2-1)] / (p^2-1)^{3/2}
    c.push_back({"K0 t p=2", lap(BesselKind::K, {0, 0}, {1.5, 0}, {2, 0}),
                 (2.0 * std::acosh(2.0) - s3) / std::pow(3.0, 1.5)});
    // int e^{-pt} K_{1/2} t dt = sqrt(pi/2) Gamma(3/2) (p+1)^{-3/2}
    c.push_back({"K1/2 t p=2", lap(BesselKind::K, {0.5, 0}, {1.5, 0}, {2, 0}),
                 std::sqrt(0.5 * pi) * 0.5 * std::sqrt(pi) * std::pow(3.0, -1.5)});
    // int e^{-pt} I_nu(t) dt = (p - sqrt(p^2-1))^nu / sqrt(p^2-1)
    c.push_back({"I0 p=2", lap(BesselKind::I, {0, 0}, {0.5, 0}, {2, 0}), 1.0 / s3});
    c.push_back({"I1 p=2", lap(BesselKind::I, {1, 0}, {0.5, 0}, {2, 0}), (2.0 - s3) / s3});
    c.push_back({"I2 p=3", lap(BesselKind::I, {2, 0}, {0.5, 0}, {3, 0}),
                 std::pow(3.0 - s8, 2.0) / s8});
    c.push_back({"I1/2 p=2", lap(BesselKind::I, {0.5, 0}, {0.5, 0}, {2, 0}),
                 std::sqrt(2.0 - s3) / s3});
    // int e^{-pt} I_{1/2}(t) t^{1/2} dt = sqrt(2/pi)/(p^2-1)
    c.push_back({"I1/2 s=1 p=2", lap(BesselKind::I, {0.5, 0}, {1, 0}, {2, 0}),
                 std::sqrt(2.0 / pi) / 3.0});
    c.push_back({"I1/2 s=1 p=1.5", lap(BesselKind::I, {0.5, 0}, {1, 0}, {1.5, 0}),
                 std::sqrt(2.0 / pi) / 1.25});
    // K_{3/2}(t) = sqrt(pi/2t) e^{-t} (1 + 1/t): int e^{-pt} K_{3/2} t^{3/2-1/2} dt
    //   = sqrt(pi/2) sqrt(pi) [ (1/2) (p+1)^{-3/2} + (p+1)^{-1/2} ]
    c.push_back({"K3/2 s=3/2 p=2", lap(BesselKind::K, {1.5, 0}, {1.5, 0}, {2, 0}),
                 std::sqrt(0.5 * pi) * std::sqrt(pi) *
                     (0.5 * std::pow(3.0, -1.5) + std::pow(3.0, -0.5))});
    // finite-interval members
    c.push_back({"int_0^1 1", fin([](double, double, double) { return Complex(1, 0); }, 0, 1),
                 1.0});
    c.push_back({"int_0^1 -ln(1-x)",
                 fin([](double, double, double db) { return Complex(-std::log(db), 0); }, 0, 1),
                 1.0});
    c.push_back({"int_0^1 x^{-1/2}",
                 fin([](double, double da, double) { return Complex(1.0 / std::sqrt(da), 0); },
                     0, 1),
                 2.0});
    c.push_back({"beta(1/2,1/2)",
                 fin([](double, double da, double db) {
                         return Complex(1.0 / std::sqrt(da * db), 0);
                     },
                     0, 1),
                 pi});
    c.push_back({"int_0^1 ln x ln(1-x)",
                 fin([](double, double da, double db) {
                         return Complex(std::log(da) * std::log(db), 0);
                     },
                     0, 1),
                 2.0 - pi * pi / 6.0});
    c.push_back({"int_0^pi sin",
                 fin([](double x, double, double) { return Complex(std::sin(x), 0); }, 0, pi),
                 2.0});
    return c;
}

} // namespace

TEST_CASE("error-estimate honesty and tolerance scaling on the corpus") {
    auto c = corpus();
    CHECK(c.size() == 20);
    for (const auto& item : c) {
        auto r1 = item.run(1e-8);
        CAPTURE(item.name);
        CHECK(r1.converged);
        double err1 = std::abs(r1.value - Complex(item.truth, 0));
        CHECK(err1 <= 3.0 * std::max(r1.abs_error_estimate, 1e-16 * std::abs(item.truth)));
        // halving (here: tightening) the tolerance never worsens the result
        auto r2 = item.run(5e-9);
        double err2 = std::abs(r2.value - Complex(item.truth, 0));
        CHECK(err2 <= err1 + 1e-15 * std::abs(item.truth));
    }
}

TEST_CASE("laplace_bessel_integral spec examples") {
    // kind=K, order=0, power 1/2 (t^0 weight), decay 2
    IntegrandSpec s1{BesselKind::K, {0, 0}, {0.5, 0}, {2, 0}};
    auto r1 = laplace_bessel_integral(s1, 1e-12);
    CHECK(r1.value.real() == doctest::Approx(std::acosh(2.0) / std::sqrt(3.0)).epsilon(1e-11));
    CHECK(r1.converged);
    CHECK(r1.nodes_used > 0);
    CHECK(r1.abs_error_estimate >= 0.0);

    // divergent I-integrand: Re(decay) = 0.5 violates Re(decay) > 1
    IntegrandSpec bad{BesselKind::I, {0, 0}, {0.5, 0}, {0.5, 0}};
    CHECK_THROWS_WITH_AS(laplace_bessel_integral(bad),
                         doctest::Contains("Re(decay) > 1"), constraint_error);
    // divergent K-integrand power
    IntegrandSpec bad2{BesselKind::K, {1, 0}, {0.25, 0}, {2, 0}};
    CHECK_THROWS_WITH_AS(laplace_bessel_integral(bad2),
                         doctest::Contains("|Re(order)| - 1/2"), constraint_error);
    // K decay threshold
    IntegrandSpec bad3{BesselKind::K, {0, 0}, {0.5, 0}, {-1.0, 0}};
    CHECK_THROWS_WITH_AS(laplace_bessel_integral(bad3),
                         doctest::Contains("Re(decay) > -1"), constraint_error);
}

TEST_CASE("integrate_finite handles the dI/dnu integrand") {
    // int_0^1 K_0(1-x) I_1(x) x^{-1} dx = -[dI/dnu]_{nu=1}(1)
    auto q = integrate_finite(
        [](double, double da, double db) {
            return Complex(bessel_k({0, 0}, db).real() * bessel_i({1, 0}, da).real() / da, 0);
        },
        0.0, 1.0, EndpointSingularity::both, 1e-11);
    CHECK(q.converged);
    CHECK(q.value.real() == doctest::Approx(-di_dorder_at_int(1, +1, 1.0)).epsilon(1e-9));
    CHECK_THROWS_AS(
        integrate_finite([](double, double, double) { return Complex(1, 0); }, 1.0, 0.0),
        domain_error);
}

TEST_CASE("convergence flag honours the contract") {
    // a converged result's estimate is below the requested tolerance
    IntegrandSpec s{BesselKind::K, {0.25, 0}, {0.75, 0}, {1.2, 0.4}};
    auto r = laplace_bessel_integral(s, 1e-9);
    CHECK(r.converged);
    CHECK(r.abs_error_estimate <= 1e-9 * std::max(1.0, std::abs(r.value)) + 1e-18);
}
