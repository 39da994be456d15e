#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "framescope/frame_bounds.hpp"
#include "framescope/windows.hpp"

namespace framescope {

/// Convolution kernel G given through ĝ(x) = Σ G(n) e^{-2πinx}, so that
/// G(n) = b_{-n}(ĝ), sampled on the integer set omega.
struct SampledKernel {
  WindowSpec ghat;
  FrequencySet omega;
};

/// F on [-N, N] (index n + N) and the kernels of AF = (G_i ∗ F)|_{Ω_i}.
struct SequenceWindowPair {
  std::int64_t N = 0;
  Eigen::VectorXcd F;
  std::vector<SampledKernel> kernels;
};

struct RecoveryReport {
  double relative_error = 0.0;
  double condition_number = 1.0;
  double residual = 0.0;
  std::int64_t N = 0;
};

/// Ω_1 = N⁻ with G_1 = δ_0 and Ω_2 = N₀ with kernel ĝ.
SequenceWindowPair split_scheme(const WindowSpec& ghat, const Eigen::VectorXcd& F);

/// Sample positions Ω ∩ [-N, N], ascending. Throws EmptySampleSet when empty
/// and InvalidArgument for non-integer points.
std::vector<std::int64_t> sample_positions(const FrequencySet& omega, std::int64_t N);

/// (G_i ∗ F)(m) for m ∈ Ω_i ∩ [-N, N], with F extended by zero and taps
/// truncated to |n| ≤ N.
std::vector<Eigen::VectorXcd> dynamical_forward(const SequenceWindowPair& pair);

/// Stacked matrix of the truncated forward map, rows in kernel order.
Eigen::MatrixXcd forward_matrix(const SequenceWindowPair& pair);

/// Least-squares recovery by SVD of the stacked forward matrix. Throws
/// RankDeficient when σ_min vanishes to machine precision.
RecoveryReport dynamical_recover(const SequenceWindowPair& pair, const std::vector<Eigen::VectorXcd>& samples);

/// Seeded complex Gaussian vector of length 2N+1.
Eigen::VectorXcd random_sequence(std::int64_t N, std::uint64_t seed);

/// Adds seeded complex Gaussian noise of standard deviation sigma.
std::vector<Eigen::VectorXcd> add_noise(std::vector<Eigen::VectorXcd> samples, double sigma, std::uint64_t seed);

/// F(n) = f̂(n) on [0, n_max] and -F'(n)/(2πi) = (x·f)^(n) on [n_min, -1].
struct DerivativeSamples {
  std::vector<cplx> values;        // n = 0..n_max
  std::vector<cplx> derivatives;   // n = n_min..-1
};

DerivativeSamples derivative_samples(const TrigPoly& f, std::int64_t n_min, std::int64_t n_max);

/// Minimal Rayleigh quotient of Q(f) = Σ_{n≥0}|f̂(n)|² + Σ_{n<0}|(x·f)^(n)|²
/// over even real trig polynomials of degree ≤ M.
double even_subspace_bound(int M);

/// Extremes of the same form over all trig polynomials of degree ≤ M.
FrameBoundEstimate derivative_rayleigh_full(int M);

struct DerivativeReport {
  RecoveryReport recovery;
  int M = 0;
  double min_rayleigh = 0.0;
};

/// Recovers a seeded random trig polynomial of degree ≤ M (even and real when
/// `even`) from its samples with |n| ≤ N.
DerivativeReport derivative_recover(int M, std::int64_t N, std::uint64_t seed, bool even);

}  // namespace framescope
