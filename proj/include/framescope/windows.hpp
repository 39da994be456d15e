#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "framescope/xi.hpp"

namespace framescope {

using cplx = std::complex<double>;

/// Finitely supported g(x) = Σ b_n e^{2πinx}. No explicit zeros are stored.
struct TrigPoly {
  std::map<int, cplx> coeffs;
};

/// Real polynomial on [a, b]; poly[j] multiplies x^j.
struct Piece {
  double a = -0.5;
  double b = 0.5;
  std::vector<double> poly;
};

/// Pieces are sorted, contiguous and cover [-1/2, 1/2]. Each piece is
/// half-open [a, b) except the last, which also owns x = 1/2.
struct PiecewisePoly {
  std::vector<Piece> pieces;
};

/// g(x) = e^{2πiξx}.
struct Modulated {
  Xi xi;
};

struct Constant {
  cplx value;
};

using WindowKind = std::variant<TrigPoly, PiecewisePoly, Modulated, Constant>;

/// Immutable description of a window on [-1/2, 1/2] with exactly computable
/// Fourier coefficients. Construct through the named factories; they validate
/// the representation and precompute the real flag and the sup norm.
class WindowSpec {
 public:
  static WindowSpec trig_poly(std::map<int, cplx> coeffs);
  static WindowSpec piecewise_poly(std::vector<Piece> pieces);
  static WindowSpec modulated(Xi xi);
  static WindowSpec constant(cplx value);

  /// g(x) = x.
  static WindowSpec sawtooth();
  /// g = -1 on [-1/2, 0), +1 on [0, 1/2].
  static WindowSpec sign();

  const WindowKind& kind() const { return kind_; }
  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&kind_);
  }

  bool is_real() const { return is_real_; }
  double sup_norm() const { return sup_norm_; }
  /// "sawtooth", "sign", or the kind name ("trigpoly", "piecewise_poly", ...).
  const std::string& name() const { return name_; }

  /// Largest |n| with b_n possibly nonzero, when the support is finite.
  std::optional<std::int64_t> support_radius() const;

 private:
  WindowSpec(WindowKind kind, std::string name);

  WindowKind kind_;
  std::string name_;
  bool is_real_ = false;
  double sup_norm_ = 0.0;
};

/// Closed interval [lo, hi].
struct IntervalHull {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return lo <= v && v <= hi; }
  IntervalHull widened(double eps) const { return {lo - eps, hi + eps}; }
};

/// sin(πu)/(πu) with sinc(0) = 1.
double sinc(double u);

/// e^{iπt}, exact at multiples of 1/2.
cplx cis_pi(double t);

/// b_n = ∫ g(x) e^{-2πinx} dx, from closed forms.
cplx fourier_coeff(const WindowSpec& w, std::int64_t n);

/// b_first, ..., b_{first+count-1}.
std::vector<cplx> fourier_coeffs(const WindowSpec& w, std::int64_t first, std::int64_t count);

/// Pointwise value; x must lie in [-1/2, 1/2].
cplx evaluate(const WindowSpec& w, double x);

/// g̃(x) = conj(g(-x)), whose coefficients are conj(b_n).
WindowSpec reflect_conj(const WindowSpec& w);

/// [essinf g, esssup g] for a real window. Throws NotRealValued otherwise.
IntervalHull real_hull(const WindowSpec& w);

/// Rigorous upper bound on Σ_{u ≥ u0} |b_u|² for u0 ≥ 1. Returns +inf when no
/// certificate is available at this u0.
double coefficient_tail_bound(const WindowSpec& w, std::int64_t u0);

}  // namespace framescope
