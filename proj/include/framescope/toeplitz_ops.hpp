#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "framescope/windows.hpp"

namespace framescope {

enum class SectionKind { Toeplitz, Hankel, AnalysisBlock };

std::string to_string(SectionKind kind);

/// Dense finite section together with the recipe that produced it.
///
/// Index convention: Toeplitz entry(i, j) = b_{i-j} (rows are output
/// frequencies), Hankel entry(i, j) = conj(b_{i+j+1}), and the analysis block
/// is [[conj(T_g), H_ḡ], [0, I]] of size 2N.
struct FiniteSection {
  Eigen::MatrixXcd data;
  SectionKind kind = SectionKind::Toeplitz;
  WindowSpec window = WindowSpec::constant(1.0);
  int N = 0;

  Eigen::Index rows() const { return data.rows(); }
  Eigen::Index cols() const { return data.cols(); }
};

struct SpectralSummary {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  /// Ascending; present iff the matrix is Hermitian to 1e-12.
  std::optional<std::vector<double>> hermitian_eigs;
};

/// Largest N accepted by the section builders. Reads FRAMESCOPE_MAX_N once
/// (default 2048).
int max_section_size();

FiniteSection toeplitz_section(const WindowSpec& w, int N);
FiniteSection hankel_section(const WindowSpec& w, int N);
FiniteSection analysis_section(const WindowSpec& w, int N);

bool is_hermitian(const Eigen::MatrixXcd& m, double tol = 1e-12);

/// Extreme singular values by dense SVD, plus Hermitian eigenvalues when they apply.
SpectralSummary spectral_summary(const FiniteSection& s);
SpectralSummary spectral_summary(const Eigen::MatrixXcd& m);

/// Lower bound κ with σ_min(Φ)² ≥ κ for every Φ = [[A, B], [0, I]] such that
/// σ_min(A) ≥ c1 and ‖B‖ ≤ c2:
///   κ = min(c1²/2, c1²/(4·c2²), 1/2),  with the middle term dropped when c2 = 0.
double block_lower_bound(double c1, double c2);

}  // namespace framescope
