#include "framescope/toeplitz_ops.hpp"

#include <algorithm>
#include <cstdlib>

#include "framescope/errors.hpp"

namespace framescope {

namespace {

constexpr int kDefaultMaxN = 2048;

void check_size(int N) {
  if (N < 1) throw Error(Errc::InvalidArgument, "section size N must be positive (got " + std::to_string(N) + ")");
  if (N > max_section_size()) {
    throw Error(Errc::SizeLimitExceeded,
                "N = " + std::to_string(N) + " exceeds FRAMESCOPE_MAX_N = " + std::to_string(max_section_size()));
  }
}

}  // namespace

std::string to_string(SectionKind kind) {
  switch (kind) {
    case SectionKind::Toeplitz: return "toeplitz";
    case SectionKind::Hankel: return "hankel";
    case SectionKind::AnalysisBlock: return "analysis";
  }
  return "unknown";
}

int max_section_size() {
  static const int cap = [] {
    if (const char* env = std::getenv("FRAMESCOPE_MAX_N")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0 && v <= (1L << 20)) return static_cast<int>(v);
    }
    return kDefaultMaxN;
  }();
  return cap;
}

FiniteSection toeplitz_section(const WindowSpec& w, int N) {
  check_size(N);
  // b_{-(N-1)}, ..., b_{N-1}
  const auto coeffs = fourier_coeffs(w, -(N - 1), 2 * N - 1);
  Eigen::MatrixXcd m(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m(i, j) = coeffs[static_cast<std::size_t>(i - j + N - 1)];
  return {std::move(m), SectionKind::Toeplitz, w, N};
}

FiniteSection hankel_section(const WindowSpec& w, int N) {
  check_size(N);
  // b_1, ..., b_{2N-1}
  const auto coeffs = fourier_coeffs(w, 1, 2 * N - 1);
  Eigen::MatrixXcd m(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m(i, j) = std::conj(coeffs[static_cast<std::size_t>(i + j)]);
  return {std::move(m), SectionKind::Hankel, w, N};
}

FiniteSection analysis_section(const WindowSpec& w, int N) {
  check_size(N);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * N, 2 * N);
  m.topLeftCorner(N, N) = toeplitz_section(w, N).data.conjugate();
  m.topRightCorner(N, N) = hankel_section(w, N).data;
  m.bottomRightCorner(N, N).setIdentity();
  return {std::move(m), SectionKind::AnalysisBlock, w, N};
}

bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

SpectralSummary spectral_summary(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::NonSquare,
                "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  SpectralSummary out;
  if (m.size() == 0) return out;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  out.sigma_max = sv(0);
  out.sigma_min = sv(sv.size() - 1);
  if (is_hermitian(m)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m, Eigen::EigenvaluesOnly);
    const auto& ev = eig.eigenvalues();
    std::vector<double> eigs(ev.data(), ev.data() + ev.size());
    std::sort(eigs.begin(), eigs.end());
    out.hermitian_eigs = std::move(eigs);
  }
  return out;
}

SpectralSummary spectral_summary(const FiniteSection& s) { return spectral_summary(s.data); }

double block_lower_bound(double c1, double c2) {
  if (!(c1 > 0.0)) throw Error(Errc::NonPositiveC1, "c1 must be positive (got " + std::to_string(c1) + ")");
  if (!(c2 >= 0.0)) throw Error(Errc::InvalidArgument, "c2 must be nonnegative (got " + std::to_string(c2) + ")");
  const double sq = c1 * c1;
  double bound = std::min(sq / 2.0, 0.5);
  if (c2 > 0.0) bound = std::min(bound, sq / (4.0 * c2 * c2));
  return bound;
}

}  // namespace framescope
