#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "framescope/windows.hpp"
#include "framescope/xi.hpp"

namespace framescope {

/// {offset + direction·j : j ≥ start}.
struct Ray {
  double offset = 0.0;
  int direction = 1;
  std::int64_t start = 0;

  double at(std::int64_t j) const { return offset + static_cast<double>(direction) * static_cast<double>(j); }
};

/// Finite union of unit-step rays plus finitely many extra points.
struct FrequencySet {
  std::vector<Ray> rays;
  std::vector<double> extra;

  /// The integers, N₀ = {0, 1, ...} and N⁻ = {-1, -2, ...}.
  static FrequencySet integers();
  static FrequencySet nonnegative();
  static FrequencySet negative();

  /// Index range [j_lo, j_hi] of the K elements of a ray with smallest |λ|.
  static std::pair<std::int64_t, std::int64_t> window(const Ray& ray, std::int64_t K);

  /// The K smallest-|λ| elements of every ray together with the extra points,
  /// sorted ascending with coincident values (within 1e-12) merged.
  std::vector<double> enumerate(std::int64_t K) const;

  /// Elements inside [lo, hi], sorted and merged as in enumerate().
  std::vector<double> points_in(double lo, double hi) const;
};

/// Γ_ξ = {n - ξ/2 : n ≥ 0} ∪ {n + ξ/2 : n ≤ -1}. For integer ξ ≥ 1 the second
/// ray starts past the ξ elements it shares with the first.
FrequencySet gamma_of_xi(const Xi& xi);

/// Extremes of a frame quadratic form on span{e_k : |k| ≤ M}.
///
/// The exact restricted extremes lie in [A_M, A_M + tail] and
/// [B_M, B_M + tail]; in particular the true lower frame bound is at most
/// A_M + tail and the true upper bound is at least B_M.
struct FrameBoundEstimate {
  int M = 0;
  double A_M = 0.0;
  double B_M = 0.0;
  double tail = 0.0;
  bool rigorous = true;
};

/// Default number of negative frequencies kept for windows with infinite
/// coefficient support.
inline constexpr std::int64_t kDefaultTruncation = 16384;

/// Quadratic form Σ_{n≥0}|f̂(n)|² + Σ_{n<0}|⟨f, g e_n⟩|² of F(g).
FrameBoundEstimate frame_bounds_subspace(const WindowSpec& w, int M, std::int64_t truncation = kDefaultTruncation);

/// Quadratic form Σ_{λ∈Γ}|⟨f, e_λ⟩|² of the exponential system E(Γ), with
/// ⟨e_k, e_λ⟩ = sinc(k - λ) and each ray enumerated to `cutoff` elements.
FrameBoundEstimate exp_system_bounds(const FrequencySet& gamma, int M, std::int64_t cutoff);

/// Classical Kadec bounds for |λ_n - n| ≤ δ < 1/4:
/// A = (cos πδ - sin πδ)², B = (2 - cos πδ + sin πδ)².
std::pair<double, double> kadec_envelope(double delta);

/// ∫ F_t(x) e^{-2πisx} dx with F_t(x) = sin(πx) cos^{2t-1}(πx), at s = n + t
/// for n ≥ 0 and s = n - t for n < 0.
std::vector<std::pair<std::int64_t, cplx>> witness_values(double t, std::int64_t n_lo, std::int64_t n_hi);

/// Upper Beurling density of a finite union of unit-step rays.
double upper_beurling_density(const FrequencySet& gamma);

}  // namespace framescope
