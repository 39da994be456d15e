#include "framescope/frame_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "framescope/errors.hpp"
#include "framescope/quadrature.hpp"
#include "framescope/toeplitz_ops.hpp"

namespace framescope {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kMergeTol = 1e-12;

void check_degree(int M) {
  if (M < 1) throw Error(Errc::InvalidArgument, "subspace degree M must be >= 1 (got " + std::to_string(M) + ")");
  if (2 * static_cast<std::int64_t>(M) + 1 > max_section_size()) {
    throw Error(Errc::SizeLimitExceeded, "subspace dimension 2M+1 = " + std::to_string(2 * M + 1) +
                                             " exceeds FRAMESCOPE_MAX_N = " + std::to_string(max_section_size()));
  }
}

void merge_sorted(std::vector<double>& pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  out.reserve(pts.size());
  for (double p : pts)
    if (out.empty() || p - out.back() > kMergeTol) out.push_back(p);
  pts = std::move(out);
}

FrameBoundEstimate extremes(const Eigen::MatrixXcd& q, int M, double tail) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(q, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  return {M, std::max(ev(0), 0.0), ev(ev.size() - 1), tail, std::isfinite(tail)};
}

FrameBoundEstimate extremes(const Eigen::MatrixXd& q, int M, double tail) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(q, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  return {M, std::max(ev(0), 0.0), ev(ev.size() - 1), tail, std::isfinite(tail)};
}

// Σ_{|k| ≤ M} sinc²(k - λ).
double sinc_column_energy(double lambda, int M) {
  double acc = 0.0;
  for (int k = -M; k <= M; ++k) {
    const double s = sinc(static_cast<double>(k) - lambda);
    acc += s * s;
  }
  return acc;
}

// Σ_{|k| ≤ M} Σ_{j > j_hi} sinc²(k - ray(j)).
double far_side_energy(const Ray& ray, std::int64_t j_hi, int M) {
  double acc = 0.0;
  for (int k = -M; k <= M; ++k) {
    // Signed distance d(j) = dir·(ray(j) - k) grows by one per step.
    const double d0 = static_cast<double>(ray.direction) * (ray.at(j_hi + 1) - static_cast<double>(k));
    std::int64_t j = j_hi + 1;
    double d = d0;
    if (d < 1.0) {
      const auto steps = static_cast<std::int64_t>(std::ceil(1.0 - d0));
      for (std::int64_t m = 0; m < steps; ++m) {
        const double s = sinc(static_cast<double>(k) - ray.at(j + m));
        acc += s * s;
      }
      j += steps;
      d = static_cast<double>(ray.direction) * (ray.at(j) - static_cast<double>(k));
    }
    // Σ_{m ≥ 0} 1/(π(d+m))² ≤ 1/(π²(d - 1/2)).
    acc += 1.0 / (pi * pi * (d - 0.5));
  }
  return acc;
}

}  // namespace

FrequencySet FrequencySet::integers() { return {{{0.0, 1, 0}, {0.0, -1, 1}}, {}}; }
FrequencySet FrequencySet::nonnegative() { return {{{0.0, 1, 0}}, {}}; }
FrequencySet FrequencySet::negative() { return {{{0.0, -1, 1}}, {}}; }

std::pair<std::int64_t, std::int64_t> FrequencySet::window(const Ray& ray, std::int64_t K) {
  if (K < 1) throw Error(Errc::InvalidArgument, "ray cutoff must be >= 1 (got " + std::to_string(K) + ")");
  const double unconstrained = -ray.offset * static_cast<double>(ray.direction);
  auto best = std::max(ray.start, static_cast<std::int64_t>(std::floor(unconstrained)));
  if (best + 1 >= ray.start && std::abs(ray.at(best + 1)) < std::abs(ray.at(best))) ++best;
  std::int64_t lo = best, hi = best;
  for (std::int64_t count = 1; count < K; ++count) {
    const bool can_lower = lo - 1 >= ray.start;
    if (can_lower && std::abs(ray.at(lo - 1)) <= std::abs(ray.at(hi + 1))) {
      --lo;
    } else {
      ++hi;
    }
  }
  return {lo, hi};
}

std::vector<double> FrequencySet::enumerate(std::int64_t K) const {
  std::vector<double> pts(extra);
  for (const auto& ray : rays) {
    const auto [lo, hi] = window(ray, K);
    for (std::int64_t j = lo; j <= hi; ++j) pts.push_back(ray.at(j));
  }
  merge_sorted(pts);
  return pts;
}

std::vector<double> FrequencySet::points_in(double lo, double hi) const {
  std::vector<double> pts;
  for (double p : extra)
    if (p >= lo - kMergeTol && p <= hi + kMergeTol) pts.push_back(p);
  for (const auto& ray : rays) {
    double jl = 0.0, jh = 0.0;
    if (ray.direction > 0) {
      jl = std::ceil(lo - ray.offset - kMergeTol);
      jh = std::floor(hi - ray.offset + kMergeTol);
    } else {
      jl = std::ceil(ray.offset - hi - kMergeTol);
      jh = std::floor(ray.offset - lo + kMergeTol);
    }
    const auto first = std::max(ray.start, static_cast<std::int64_t>(jl));
    const auto last = static_cast<std::int64_t>(jh);
    for (std::int64_t j = first; j <= last; ++j) pts.push_back(ray.at(j));
  }
  merge_sorted(pts);
  return pts;
}

FrequencySet gamma_of_xi(const Xi& xi) {
  const double half = xi.value() / 2.0;
  std::int64_t second_start = 1;
  if (xi.is_integer() && xi.compare_twice(2) >= 0) second_start = std::llround(xi.value()) + 1;
  return {{{-half, 1, 0}, {half, -1, second_start}}, {}};
}

FrameBoundEstimate frame_bounds_subspace(const WindowSpec& w, int M, std::int64_t truncation) {
  check_degree(M);
  if (!std::isfinite(w.sup_norm())) throw Error(Errc::UnboundedWindow, "window has no certified sup norm");

  const int dim = 2 * M + 1;
  std::int64_t rows = 0;
  double tail = 0.0;
  if (const auto radius = w.support_radius()) {
    rows = M + *radius;
  } else {
    if (truncation < M) {
      throw Error(Errc::InvalidArgument, "truncation must be >= M (got " + std::to_string(truncation) + ")");
    }
    rows = truncation;
    for (int k = -M; k <= M; ++k) tail += coefficient_tail_bound(w, k + rows + 1);
  }

  // Row n = -1 - r, column k = c - M, entry conj(b_{k-n}).
  const std::int64_t first = 1 - M;
  const auto coeffs = fourier_coeffs(w, first, 2 * M + rows);
  Eigen::MatrixXcd R(rows, dim);
  for (std::int64_t r = 0; r < rows; ++r)
    for (int c = 0; c < dim; ++c) R(r, c) = std::conj(coeffs[static_cast<std::size_t>(c + r + 1 - M - first)]);

  Eigen::MatrixXcd Q = R.adjoint() * R;
  for (int c = M; c < dim; ++c) Q(c, c) += 1.0;
  return extremes(Q, M, tail);
}

FrameBoundEstimate exp_system_bounds(const FrequencySet& gamma, int M, std::int64_t cutoff) {
  check_degree(M);
  if (cutoff < 1) throw Error(Errc::InvalidArgument, "cutoff must be >= 1 (got " + std::to_string(cutoff) + ")");

  const auto pts = gamma.enumerate(cutoff);
  const int dim = 2 * M + 1;
  Eigen::MatrixXd S(static_cast<Eigen::Index>(pts.size()), dim);
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (int c = 0; c < dim; ++c) S(static_cast<Eigen::Index>(r), c) = sinc(static_cast<double>(c - M) - pts[r]);

  double tail = 0.0;
  for (const auto& ray : gamma.rays) {
    const auto [lo, hi] = FrequencySet::window(ray, cutoff);
    for (std::int64_t j = ray.start; j < lo; ++j) tail += sinc_column_energy(ray.at(j), M);
    tail += far_side_energy(ray, hi, M);
  }

  const Eigen::MatrixXd Q = S.transpose() * S;
  return extremes(Q, M, tail);
}

std::pair<double, double> kadec_envelope(double delta) {
  if (!(delta >= 0.0)) throw Error(Errc::InvalidArgument, "delta must be >= 0 (got " + std::to_string(delta) + ")");
  if (delta >= 0.25) throw Error(Errc::DeltaTooLarge, "delta must be < 1/4 (got " + std::to_string(delta) + ")");
  const double c = std::cos(pi * delta);
  const double s = std::sin(pi * delta);
  return {(c - s) * (c - s), (2.0 - c + s) * (2.0 - c + s)};
}

std::vector<std::pair<std::int64_t, cplx>> witness_values(double t, std::int64_t n_lo, std::int64_t n_hi) {
  if (!(t > 0.25)) throw Error(Errc::TNotAdmissible, "t must exceed 1/4 (got " + std::to_string(t) + ")");
  if (n_lo > n_hi) throw Error(Errc::InvalidArgument, "empty index range [n_lo, n_hi]");

  const double alpha = 2.0 * t - 1.0;
  std::vector<std::pair<std::int64_t, cplx>> out;
  out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const double s = n >= 0 ? static_cast<double>(n) + t : static_cast<double>(n) - t;
    // Folding x = ±(1/2 - u) gives I(s) = 2i ∫_0^{1/2} cos(πu) sin(πu)^α sin(πs(2u - 1)) du.
    const auto integrand = [alpha, s](double u) {
      return cplx(std::cos(pi * u) * std::pow(std::sin(pi * u), alpha) * std::sin(pi * s * (2.0 * u - 1.0)));
    };
    out.emplace_back(n, cplx(0.0, 2.0) * quad::integrate_graded(integrand, s, 1e-13));
  }
  return out;
}

double upper_beurling_density(const FrequencySet& gamma) {
  double best = 0.0;
  for (int dir : {1, -1}) {
    std::vector<double> residues;
    for (const auto& ray : gamma.rays) {
      if (ray.direction != dir) continue;
      double r = ray.offset - std::floor(ray.offset);
      if (r > 1.0 - kMergeTol) r = 0.0;
      residues.push_back(r);
    }
    merge_sorted(residues);
    best = std::max(best, static_cast<double>(residues.size()));
  }
  return best;
}

}  // namespace framescope
