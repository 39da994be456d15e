#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "framescope/quadrature.hpp"
#include "framescope/windows.hpp"

namespace fixtures {

using framescope::cplx;
using framescope::WindowSpec;

inline WindowSpec two_plus_cos() { return WindowSpec::trig_poly({{0, 2.0}, {1, 0.5}, {-1, 0.5}}); }

inline WindowSpec shifted_ramp() { return WindowSpec::piecewise_poly({{-0.5, 0.5, {0.6, 1.0}}}); }

/// The six windows used across the property tests.
inline std::vector<std::pair<std::string, WindowSpec>> builtin_windows() {
  return {
      {"sawtooth", WindowSpec::sawtooth()},
      {"sign", WindowSpec::sign()},
      {"constant2", WindowSpec::constant(2.0)},
      {"two_plus_cos", two_plus_cos()},
      {"shifted_ramp", shifted_ramp()},
      {"modulated_quarter", WindowSpec::modulated(0.25)},
  };
}

/// Breakpoints of a window in [-1/2, 1/2], endpoints included.
inline std::vector<double> breakpoints(const WindowSpec& w) {
  std::vector<double> out{-0.5};
  if (auto pw = w.get_if<framescope::PiecewisePoly>()) {
    for (const auto& p : pw->pieces)
      if (p.b < 0.5) out.push_back(p.b);
  }
  out.push_back(0.5);
  return out;
}

/// ∫ f over [-1/2, 1/2], split at the window's breakpoints and into panels
/// carrying at most one oscillation of frequency `freq`.
template <class F>
cplx integrate_panels(const WindowSpec& w, F&& f, double freq) {
  const auto bps = breakpoints(w);
  cplx acc = 0.0;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const double a = bps[i], b = bps[i + 1];
    const int parts = 1 + static_cast<int>(std::ceil((b - a) * (std::abs(freq) + 1.0)));
    for (int p = 0; p < parts; ++p) {
      const double lo = a + (b - a) * p / parts;
      const double hi = a + (b - a) * (p + 1) / parts;
      acc += framescope::quad::integrate(f, lo, hi, 1e-14);
    }
  }
  return acc;
}

}  // namespace fixtures
