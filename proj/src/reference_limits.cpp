#include "casimir/reference_limits.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace casimir::reference {

namespace {

double series(double x) {
  double sum = 0.0, power = x;
  for (int n = 1; n < 200; ++n) {
    const double term = power / (static_cast<double>(n) * n * n);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    power *= x;
  }
  return sum;
}

// Li_3(e^mu) = zeta(3) + zeta(2) mu + (3/2 - ln(-mu)) mu^2/2
//            + sum_{k>=3} zeta(3-k) mu^k/k!,   |mu| < 2 pi.
// zeta(3-k) vanishes for even negative arguments; the odd ones are
// zeta(-n) = -B_{n+1}/(n+1).
double near_one(double x) {
  const double mu = std::log(x);
  if (mu == 0.0) return units::zeta3;
  constexpr double zeta2 = units::pi * units::pi / 6.0;
  // zeta(3-k) for k = 3..20
  constexpr std::array<double, 18> zeta_neg = {
      -0.5,                    // zeta(0)
      -1.0 / 12.0,             // zeta(-1)
      0.0,                     // zeta(-2)
      1.0 / 120.0,             // zeta(-3)
      0.0,
      -1.0 / 252.0,            // zeta(-5)
      0.0,
      1.0 / 240.0,             // zeta(-7)
      0.0,
      -1.0 / 132.0,            // zeta(-9)
      0.0,
      691.0 / 32760.0,         // zeta(-11)
      0.0,
      -1.0 / 12.0,             // zeta(-13)
      0.0,
      3617.0 / 8160.0,         // zeta(-15)
      0.0,
      -43867.0 / 14364.0,      // zeta(-17)
  };
  double sum = units::zeta3 + zeta2 * mu + (1.5 - std::log(-mu)) * mu * mu / 2.0;
  double power = mu * mu / 2.0;  // mu^k / k!
  for (std::size_t i = 0; i < zeta_neg.size(); ++i) {
    const double k = static_cast<double>(i + 3);
    power *= mu / k;
    sum += zeta_neg[i] * power;
  }
  return sum;
}

}  // namespace

double polylog3(double x) {
  if (!(x >= -1.0 && x <= 1.0)) throw std::domain_error("polylog3: |x| must be <= 1");
  if (x == 0.0) return 0.0;
  if (x <= 0.5 && x >= -0.5) return series(x);
  if (x > 0.5) return near_one(x);
  // Li3(-y) = Li3(y^2)/4 - Li3(y)
  const double y = -x;
  return polylog3(y * y) / 4.0 - polylog3(y);
}

ClassicalLimitResult classical_limit(Polarization pol, const PlateSystem& sys,
                                     PermittivityModel model, const units::PhysicalConstants& k) {
  auto r0 = [&](const MaterialSpec& m) {
    if (pol == Polarization::TM) return 1.0;
    if (model == PermittivityModel::Drude) return (m.mu_static - 1.0) / (m.mu_static + 1.0);
    return -1.0;
  };
  ClassicalLimitResult out;
  out.pol = pol;
  out.r1r2 = r0(sys.plate1) * r0(sys.plate2);
  out.value = -k.k_B * sys.T * polylog3(out.r1r2) / (8.0 * units::pi * sys.a * sys.a * sys.a);
  return out;
}

double ideal_metal_zero_T(double a, const units::PhysicalConstants& k) {
  if (!(a > 0.0)) throw std::domain_error("ideal_metal_zero_T: a must be positive");
  const double a2 = a * a;
  return -units::pi * units::pi * k.hbar * k.c / (240.0 * a2 * a2);
}

}  // namespace casimir::reference
