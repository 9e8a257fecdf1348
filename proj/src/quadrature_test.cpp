#include <doctest.h>

#include <cmath>

#include "casimir/quadrature.hpp"

using namespace casimir;

TEST_CASE("polynomials are exact on one panel") {
  const auto r = quadrature::integrate([](double x) { return 3 * x * x - x + 2; }, -1.0, 2.0);
  CHECK(r.value == doctest::Approx(13.5).epsilon(1e-15));
  CHECK(r.converged);
  CHECK(r.panels == 1);
}

TEST_CASE("smooth and endpoint-singular integrands") {
  auto r = quadrature::integrate([](double x) { return std::exp(-x) * std::cos(5 * x); }, 0.0, 10.0);
  const double exact = (1 - std::exp(-10.0) * (std::cos(50.0) - 5 * std::sin(50.0))) / 26.0;
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-12));
  CHECK(std::abs(r.value - exact) <= r.abs_error + 1e-16);

  r = quadrature::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.converged);
}

TEST_CASE("breakpoints resolve a kink") {
  const double cuts[] = {0.3};
  const auto r = quadrature::integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0,
                                       std::span<const double>(cuts));
  CHECK(r.value == doctest::Approx(0.045 + 0.245).epsilon(1e-14));
  CHECK(r.panels == 2);
}

TEST_CASE("auxiliary channel is integrated alongside") {
  const auto r = quadrature::integrate(
      [](double x) { return quadrature::Sample{x, 2.0}; }, 0.0, 3.0);
  CHECK(r.value == doctest::Approx(4.5));
  CHECK(r.aux == doctest::Approx(6.0));
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  quadrature::Options opt;
  opt.rel_tol = 1e-14;
  opt.max_panels = 3;
  const auto r = quadrature::integrate([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0,
                                       {}, opt);
  CHECK_FALSE(r.converged);
}

TEST_CASE("deterministic") {
  auto f = [](double x) { return std::log(x) * std::sin(40 * x); };
  const auto a = quadrature::integrate(f, 0.0, 3.0);
  const auto b = quadrature::integrate(f, 0.0, 3.0);
  CHECK(a.value == b.value);
  CHECK(a.abs_error == b.abs_error);
}
