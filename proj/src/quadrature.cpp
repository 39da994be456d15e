#include "framescope/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace framescope::quad {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
using Gauss = boost::math::quadrature::gauss<double, 15>;

constexpr unsigned kMaxDepth = 12;

// Bisection until the Gauss–Kronrod error estimate is below abs_tol or at
// the rounding level of the panel.
std::complex<double> adaptive(const Integrand& f, double a, double b, double abs_tol, unsigned depth) {
  double l1 = 0.0;
  const auto estimate = GK::integrate(f, a, b, 0, 0.0, nullptr, &l1);
  const double error = std::abs(estimate - Gauss::integrate(f, a, b));
  const double rounding = 64.0 * std::numeric_limits<double>::epsilon() * l1;
  if (depth == 0 || error <= std::max(abs_tol, rounding)) return estimate;
  const double mid = 0.5 * (a + b);
  return adaptive(f, a, mid, abs_tol / 2.0, depth - 1) + adaptive(f, mid, b, abs_tol / 2.0, depth - 1);
}

struct Panel {
  double a;
  double b;
};

void split_panel(std::vector<Panel>& panels, double a, double b, double frequency) {
  const double width = b - a;
  const auto parts = static_cast<int>(std::ceil(2.0 * width * (std::abs(frequency) + 1.0)));
  const double h = width / parts;
  for (int i = 0; i < parts; ++i) panels.push_back({a + i * h, (i + 1 == parts) ? b : a + (i + 1) * h});
}

}  // namespace

std::complex<double> integrate(const Integrand& f, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  double l1 = 0.0;
  GK::integrate(f, a, b, 0, 0.0, nullptr, &l1);
  return adaptive(f, a, b, tol * l1, kMaxDepth);
}

std::complex<double> integrate_graded(const Integrand& f, double frequency, double abs_tol, int levels) {
  std::vector<Panel> panels;
  // Panels [2^{-j-1}, 2^{-j}], j = 1, 2, ..., then [0, 2^{-levels-1}].
  for (int j = 1; j <= levels; ++j) split_panel(panels, std::ldexp(1.0, -j - 1), std::ldexp(1.0, -j), frequency);
  panels.push_back({0.0, std::ldexp(1.0, -levels - 1)});
  const double share = abs_tol / static_cast<double>(panels.size());
  std::complex<double> acc = 0.0;
  for (const auto& p : panels) acc += adaptive(f, p.a, p.b, share, kMaxDepth);
  return acc;
}

}  // namespace framescope::quad
