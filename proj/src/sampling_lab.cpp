#include "framescope/sampling_lab.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "framescope/errors.hpp"
#include "framescope/toeplitz_ops.hpp"

namespace framescope {

namespace {

constexpr double pi = std::numbers::pi;

void check_pair(const SequenceWindowPair& pair) {
  if (pair.N < 1) throw Error(Errc::InvalidArgument, "truncation N must be >= 1 (got " + std::to_string(pair.N) + ")");
  if (2 * pair.N + 1 > max_section_size()) {
    throw Error(Errc::SizeLimitExceeded,
                "2N+1 = " + std::to_string(2 * pair.N + 1) + " exceeds FRAMESCOPE_MAX_N = " +
                    std::to_string(max_section_size()));
  }
  if (pair.F.size() != 2 * pair.N + 1) {
    throw Error(Errc::InvalidArgument, "F must have 2N+1 = " + std::to_string(2 * pair.N + 1) + " entries");
  }
  if (pair.kernels.empty()) throw Error(Errc::EmptySampleSet, "no kernels given");
  for (const auto& k : pair.kernels) {
    if (!std::isfinite(k.ghat.sup_norm())) throw Error(Errc::UnboundedWindow, "kernel symbol is not bounded");
  }
}

// G(n) = b_{-n}(ĝ) for |n| ≤ N, stored at index n + N.
std::vector<cplx> taps(const WindowSpec& ghat, std::int64_t N) {
  const auto b = fourier_coeffs(ghat, -N, 2 * N + 1);
  std::vector<cplx> g(b.size());
  for (std::int64_t n = -N; n <= N; ++n) g[static_cast<std::size_t>(n + N)] = b[static_cast<std::size_t>(N - n)];
  return g;
}

RecoveryReport solve_report(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& y, const Eigen::VectorXcd& truth,
                            std::int64_t N) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  const double floor =
      smax * std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(A.rows(), A.cols()));
  if (!(smin > floor)) {
    throw Error(Errc::RankDeficient, "forward matrix is singular to machine precision (sigma_min/sigma_max = " +
                                         std::to_string(smin / smax) + ")");
  }
  const Eigen::VectorXcd x = svd.solve(y);
  const double scale = truth.norm();
  RecoveryReport r;
  r.relative_error = scale > 0.0 ? (x - truth).norm() / scale : x.norm();
  r.condition_number = smax / smin;
  r.residual = (A * x - y).norm();
  r.N = N;
  return r;
}

}  // namespace

SequenceWindowPair split_scheme(const WindowSpec& ghat, const Eigen::VectorXcd& F) {
  if (F.size() < 3 || F.size() % 2 == 0) {
    throw Error(Errc::InvalidArgument, "F must have odd length 2N+1 >= 3 (got " + std::to_string(F.size()) + ")");
  }
  SequenceWindowPair pair;
  pair.N = (F.size() - 1) / 2;
  pair.F = F;
  pair.kernels.push_back({WindowSpec::constant(1.0), FrequencySet::negative()});
  pair.kernels.push_back({ghat, FrequencySet::nonnegative()});
  return pair;
}

std::vector<std::int64_t> sample_positions(const FrequencySet& omega, std::int64_t N) {
  const auto pts = omega.points_in(static_cast<double>(-N), static_cast<double>(N));
  if (pts.empty()) throw Error(Errc::EmptySampleSet, "sample set has no points in [-N, N]");
  std::vector<std::int64_t> out;
  out.reserve(pts.size());
  for (double p : pts) {
    const double r = std::round(p);
    if (std::abs(p - r) > 1e-12) throw Error(Errc::InvalidArgument, "sample set contains a non-integer point");
    out.push_back(static_cast<std::int64_t>(r));
  }
  return out;
}

std::vector<Eigen::VectorXcd> dynamical_forward(const SequenceWindowPair& pair) {
  check_pair(pair);
  const auto N = pair.N;
  std::vector<Eigen::VectorXcd> out;
  for (const auto& kernel : pair.kernels) {
    const auto g = taps(kernel.ghat, N);
    const auto positions = sample_positions(kernel.omega, N);
    Eigen::VectorXcd s(static_cast<Eigen::Index>(positions.size()));
    for (std::size_t i = 0; i < positions.size(); ++i) {
      const auto m = positions[i];
      cplx acc = 0.0;
      for (std::int64_t j = -N; j <= N; ++j) {
        const auto d = m - j;
        if (d < -N || d > N) continue;
        acc += g[static_cast<std::size_t>(d + N)] * pair.F(j + N);
      }
      s(static_cast<Eigen::Index>(i)) = acc;
    }
    out.push_back(std::move(s));
  }
  return out;
}

Eigen::MatrixXcd forward_matrix(const SequenceWindowPair& pair) {
  check_pair(pair);
  const auto N = pair.N;
  std::vector<std::vector<cplx>> kernel_taps;
  std::vector<std::vector<std::int64_t>> kernel_rows;
  Eigen::Index total = 0;
  for (const auto& kernel : pair.kernels) {
    kernel_taps.push_back(taps(kernel.ghat, N));
    kernel_rows.push_back(sample_positions(kernel.omega, N));
    total += static_cast<Eigen::Index>(kernel_rows.back().size());
  }
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(total, 2 * N + 1);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < kernel_rows.size(); ++i) {
    for (const auto m : kernel_rows[i]) {
      for (std::int64_t j = std::max(-N, m - N); j <= std::min(N, m + N); ++j)
        A(row, j + N) = kernel_taps[i][static_cast<std::size_t>(m - j + N)];
      ++row;
    }
  }
  return A;
}

RecoveryReport dynamical_recover(const SequenceWindowPair& pair, const std::vector<Eigen::VectorXcd>& samples) {
  const Eigen::MatrixXcd A = forward_matrix(pair);
  if (A.rows() < A.cols()) {
    throw Error(Errc::InvalidArgument, "total sample count " + std::to_string(A.rows()) + " is below 2N+1 = " +
                                           std::to_string(A.cols()));
  }
  if (samples.size() != pair.kernels.size()) {
    throw Error(Errc::InvalidArgument, "expected one sample vector per kernel");
  }
  Eigen::VectorXcd y(A.rows());
  Eigen::Index offset = 0;
  for (const auto& s : samples) {
    if (offset + s.size() > y.size()) throw Error(Errc::InvalidArgument, "sample vectors do not match Ω ∩ [-N, N]");
    y.segment(offset, s.size()) = s;
    offset += s.size();
  }
  if (offset != y.size()) throw Error(Errc::InvalidArgument, "sample vectors do not match Ω ∩ [-N, N]");
  return solve_report(A, y, pair.F, pair.N);
}

Eigen::VectorXcd random_sequence(std::int64_t N, std::uint64_t seed) {
  if (N < 0) throw Error(Errc::InvalidArgument, "N must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd F(2 * N + 1);
  for (Eigen::Index i = 0; i < F.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    F(i) = cplx(re, im);
  }
  return F;
}

std::vector<Eigen::VectorXcd> add_noise(std::vector<Eigen::VectorXcd> samples, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw Error(Errc::InvalidArgument, "noise level must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, sigma);
  for (auto& s : samples) {
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      s(i) += cplx(re, im);
    }
  }
  return samples;
}

DerivativeSamples derivative_samples(const TrigPoly& f, std::int64_t n_min, std::int64_t n_max) {
  const auto saw = WindowSpec::sawtooth();
  DerivativeSamples out;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    auto it = f.coeffs.find(static_cast<int>(n));
    out.values.push_back(it == f.coeffs.end() ? cplx(0.0) : it->second);
  }
  for (std::int64_t n = n_min; n <= -1; ++n) {
    cplx acc = 0.0;
    for (const auto& [k, c] : f.coeffs) acc += c * fourier_coeff(saw, n - k);
    out.derivatives.push_back(acc);
  }
  return out;
}

double even_subspace_bound(int M) {
  if (M < 0) throw Error(Errc::InvalidArgument, "M must be >= 0 (got " + std::to_string(M) + ")");
  if (M + 1 > max_section_size()) throw Error(Errc::SizeLimitExceeded, "M + 1 exceeds FRAMESCOPE_MAX_N");
  // For even real f: Q(f) = ½‖f‖² + ½|f̂(0)|² + ½∫x²f², in the basis {1, √2 cos 2πkx}.
  const auto moment = [](int j) {
    if (j == 0) return 1.0 / 12.0;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return sign / (2.0 * pi * pi * static_cast<double>(j) * static_cast<double>(j));
  };
  const int dim = M + 1;
  Eigen::MatrixXd X(dim, dim);
  X(0, 0) = moment(0);
  for (int k = 1; k <= M; ++k) {
    X(0, k) = X(k, 0) = std::sqrt(2.0) * moment(k);
    for (int l = 1; l <= M; ++l) X(k, l) = moment(k - l) + moment(k + l);
  }
  Eigen::MatrixXd Q = 0.5 * X;
  Q.diagonal().array() += 0.5;
  Q(0, 0) += 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Q, Eigen::EigenvaluesOnly);
  return eig.eigenvalues()(0);
}

FrameBoundEstimate derivative_rayleigh_full(int M) { return frame_bounds_subspace(WindowSpec::sawtooth(), M); }

DerivativeReport derivative_recover(int M, std::int64_t N, std::uint64_t seed, bool even) {
  if (M < (even ? 0 : 1)) throw Error(Errc::InvalidArgument, "M is out of range (got " + std::to_string(M) + ")");
  if (N < M) throw Error(Errc::InvalidArgument, "N must be >= M (got N = " + std::to_string(N) + ")");
  if (2 * N + 1 > max_section_size()) throw Error(Errc::SizeLimitExceeded, "2N+1 exceeds FRAMESCOPE_MAX_N");

  // Basis element c as a trig polynomial.
  std::vector<TrigPoly> basis;
  if (even) {
    basis.push_back({{{0, 1.0}}});
    for (int k = 1; k <= M; ++k) basis.push_back({{{k, std::sqrt(0.5)}, {-k, std::sqrt(0.5)}}});
  } else {
    for (int k = -M; k <= M; ++k) basis.push_back({{{k, 1.0}}});
  }

  // Rows: n = -N..-1 derivative samples, then n = 0..N values.
  Eigen::MatrixXcd A(2 * N + 1, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto s = derivative_samples(basis[c], -N, N);
    for (std::int64_t r = 0; r < N; ++r) A(r, static_cast<Eigen::Index>(c)) = s.derivatives[static_cast<std::size_t>(r)];
    for (std::int64_t r = 0; r <= N; ++r) A(N + r, static_cast<Eigen::Index>(c)) = s.values[static_cast<std::size_t>(r)];
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd truth(A.cols());
  for (Eigen::Index i = 0; i < truth.size(); ++i) {
    const double re = normal(rng);
    const double im = even ? 0.0 : normal(rng);
    truth(i) = cplx(re, im);
  }

  DerivativeReport out;
  out.recovery = solve_report(A, A * truth, truth, N);
  out.M = M;
  out.min_rayleigh = even ? even_subspace_bound(M) : derivative_rayleigh_full(M).A_M;
  return out;
}

}  // namespace framescope
