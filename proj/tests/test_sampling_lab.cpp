#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "framescope/errors.hpp"
#include "framescope/frame_bounds.hpp"
#include "framescope/quadrature.hpp"
#include "framescope/sampling_lab.hpp"

using namespace framescope;
using std::numbers::pi;

namespace {

// G(n) = b_{-n} = -(-1)^n i/(2πn) for ĝ(x) = x.
cplx sawtooth_tap(std::int64_t n) {
  if (n == 0) return 0.0;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return cplx(0.0, -sign / (2.0 * pi * static_cast<double>(n)));
}

SequenceWindowPair delta_scheme(std::int64_t N, std::uint64_t seed) {
  return split_scheme(WindowSpec::constant(1.0), random_sequence(N, seed));
}

}  // namespace

TEST(DynamicalForward, IdentityKernelReturnsSamples) {
  const auto F = random_sequence(6, 3);
  SequenceWindowPair pair{6, F, {{WindowSpec::constant(1.0), FrequencySet::nonnegative()}}};
  const auto s = dynamical_forward(pair);
  ASSERT_EQ(s.size(), 1u);
  ASSERT_EQ(s[0].size(), 7);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(s[0](n), F(n + 6));
}

TEST(DynamicalForward, DeltaSignalReturnsTaps) {
  const std::int64_t N = 5;
  Eigen::VectorXcd F = Eigen::VectorXcd::Zero(2 * N + 1);
  F(N) = 1.0;
  const auto ghat = fixtures::two_plus_cos();
  SequenceWindowPair pair{N, F, {{ghat, FrequencySet::nonnegative()}}};
  const auto s = dynamical_forward(pair);
  ASSERT_EQ(s[0].size(), N + 1);
  EXPECT_EQ(s[0](0), cplx(2.0));
  EXPECT_EQ(s[0](1), cplx(0.5));
  for (int n = 2; n <= N; ++n) EXPECT_EQ(s[0](n), cplx(0.0));
}

TEST(DynamicalForward, SawtoothSchemeMatchesDirectSummation) {
  for (std::int64_t N : {4, 9, 16}) {
    const auto F = random_sequence(N, 11);
    const auto pair = split_scheme(WindowSpec::sawtooth(), F);
    const auto s = dynamical_forward(pair);
    ASSERT_EQ(s.size(), 2u);
    ASSERT_EQ(s[0].size(), N);
    ASSERT_EQ(s[1].size(), N + 1);
    for (std::int64_t m = -N; m <= -1; ++m) EXPECT_EQ(s[0](m + N), F(m + N));
    for (std::int64_t m = 0; m <= N; ++m) {
      cplx acc = 0.0;
      for (std::int64_t j = -N; j <= N; ++j)
        if (std::abs(m - j) <= N) acc += sawtooth_tap(m - j) * F(j + N);
      EXPECT_NEAR(std::abs(s[1](m) - acc), 0.0, 1e-12) << "N=" << N << " m=" << m;
    }
  }
}

TEST(DynamicalForward, MatrixAgreesWithLoop) {
  const auto pair = split_scheme(WindowSpec::sign(), random_sequence(10, 5));
  const auto s = dynamical_forward(pair);
  const Eigen::VectorXcd y = forward_matrix(pair) * pair.F;
  Eigen::VectorXcd stacked(y.size());
  stacked << s[0], s[1];
  EXPECT_LT((y - stacked).norm(), 1e-12);
}

TEST(DynamicalForward, EmptySampleSet) {
  SequenceWindowPair pair{4, random_sequence(4, 1), {{WindowSpec::constant(1.0), {{{100.0, 1, 0}}, {}}}}};
  try {
    dynamical_forward(pair);
    FAIL() << "expected EmptySampleSet";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptySampleSet);
  }
  SequenceWindowPair none{4, random_sequence(4, 1), {}};
  EXPECT_THROW(dynamical_forward(none), Error);
}

TEST(DynamicalRecover, DeltaKernelsAreOrthonormal) {
  for (std::int64_t N : {8, 16, 32}) {
    const auto pair = delta_scheme(N, 42);
    const auto r = dynamical_recover(pair, dynamical_forward(pair));
    EXPECT_LT(r.relative_error, 1e-12);
    EXPECT_NEAR(r.condition_number, 1.0, 1e-12);
    EXPECT_LT(r.residual, 1e-12);
    EXPECT_EQ(r.N, N);
  }
}

TEST(DynamicalRecover, TwoPlusCosineIsStable) {
  const auto ghat = fixtures::two_plus_cos();
  for (std::int64_t N : {8, 16, 32}) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto pair = split_scheme(ghat, random_sequence(N, seed));
      const auto r = dynamical_recover(pair, dynamical_forward(pair));
      EXPECT_LT(r.relative_error, 1e-8);
      EXPECT_LT(r.condition_number, 4.0);
    }
  }
}

TEST(DynamicalRecover, ConditionMatchesFrameBounds) {
  const auto ghat = fixtures::two_plus_cos();
  for (std::int64_t N : {8, 16, 32}) {
    const auto pair = split_scheme(ghat, random_sequence(N, 1));
    const auto r = dynamical_recover(pair, dynamical_forward(pair));
    const auto e = frame_bounds_subspace(ghat, static_cast<int>(N));
    EXPECT_NEAR(r.condition_number / std::sqrt(e.B_M / e.A_M), 1.0, 0.05) << N;
  }
}

TEST(DynamicalRecover, SawtoothEvenTruncationIsSingular) {
  // The convolution block is i·(real skew-symmetric) of odd size N+1.
  for (std::int64_t N : {8, 16}) {
    const auto pair = split_scheme(WindowSpec::sawtooth(), random_sequence(N, 1));
    try {
      dynamical_recover(pair, dynamical_forward(pair));
      FAIL() << "expected RankDeficient at N=" << N;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::RankDeficient);
      EXPECT_TRUE(e.is_numerical());
    }
  }
}

TEST(DynamicalRecover, SawtoothOddTruncationConditionGrows) {
  double previous = 0.0;
  for (std::int64_t N : {9, 17, 33}) {
    const auto pair = split_scheme(WindowSpec::sawtooth(), random_sequence(N, 1));
    const auto r = dynamical_recover(pair, dynamical_forward(pair));
    EXPECT_GT(r.condition_number, 1.5 * previous);
    EXPECT_LT(r.relative_error, 1e-8);
    previous = r.condition_number;
  }
}

TEST(DynamicalRecover, NoiseIsDeterministicAndVisible) {
  const auto pair = delta_scheme(8, 4);
  const auto clean = dynamical_forward(pair);
  const auto noisy_a = add_noise(clean, 1e-3, 9);
  const auto noisy_b = add_noise(clean, 1e-3, 9);
  EXPECT_EQ(noisy_a[0], noisy_b[0]);
  const auto r = dynamical_recover(pair, noisy_a);
  EXPECT_GT(r.relative_error, 1e-6);
  EXPECT_LT(r.relative_error, 1e-2);
}

TEST(DynamicalRecover, TooFewSamples) {
  SequenceWindowPair pair{4, random_sequence(4, 1), {{WindowSpec::constant(1.0), FrequencySet::nonnegative()}}};
  try {
    dynamical_recover(pair, dynamical_forward(pair));
    FAIL() << "expected InvalidArgument";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
}

TEST(RandomSequence, SeededAndReproducible) {
  EXPECT_EQ(random_sequence(5, 77), random_sequence(5, 77));
  EXPECT_NE(random_sequence(5, 77), random_sequence(5, 78));
}

TEST(DerivativeSamples, ConstantFunction) {
  const auto s = derivative_samples(TrigPoly{{{0, 1.0}}}, -6, 4);
  EXPECT_EQ(s.values[0], cplx(1.0));
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(s.values[n], cplx(0.0));
  const auto saw = WindowSpec::sawtooth();
  for (int n = -6; n <= -1; ++n) EXPECT_EQ(s.derivatives[n + 6], fourier_coeff(saw, n));
}

TEST(DerivativeSamples, SingleExponential) {
  const auto s = derivative_samples(TrigPoly{{{1, 1.0}}}, -3, 5);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(s.values[n], n == 1 ? cplx(1.0) : cplx(0.0));
}

TEST(DerivativeSamples, CosineMatchesQuadrature) {
  const auto s = derivative_samples(TrigPoly{{{1, 1.0}, {-1, 1.0}}}, -12, 3);
  EXPECT_EQ(s.values[1], cplx(1.0));
  for (int n = -12; n <= -1; ++n) {
    const auto q = quad::integrate(
        [n](double x) { return x * 2.0 * std::cos(2.0 * pi * x) * std::polar(1.0, -2.0 * pi * n * x); }, -0.5, 0.5,
        1e-14);
    EXPECT_NEAR(std::abs(s.derivatives[n + 12] - q), 0.0, 1e-10) << n;
  }
}

TEST(EvenSubspaceBound, ConstantSubspace) { EXPECT_NEAR(even_subspace_bound(0), 25.0 / 24.0, 1e-12); }

TEST(EvenSubspaceBound, StaysAboveElevenTwentyFourthsAndDecreases) {
  double previous = 1e300;
  for (int M : {0, 1, 2, 4, 8, 16, 32, 64}) {
    const double v = even_subspace_bound(M);
    EXPECT_GE(v, 11.0 / 24.0 - 1e-9) << M;
    EXPECT_LE(v, previous + 1e-12) << M;
    previous = v;
  }
}

TEST(EvenSubspaceBound, MatchesTruncatedSampleForm) {
  // Build Q from the samples over n ∈ [-T, M] on the basis {1, √2 cos 2πkx}.
  const std::int64_t T = 20000;
  const auto saw = WindowSpec::sawtooth();
  for (int M : {2, 6, 12}) {
    Eigen::MatrixXcd S(T + M + 1, M + 1);
    for (int k = 0; k <= M; ++k) {
      TrigPoly f;
      if (k == 0) {
        f.coeffs = {{0, 1.0}};
      } else {
        f.coeffs = {{k, std::sqrt(0.5)}, {-k, std::sqrt(0.5)}};
      }
      const auto s = derivative_samples(f, -T, M);
      for (std::int64_t r = 0; r < T; ++r) S(r, k) = s.derivatives[static_cast<std::size_t>(r)];
      for (int r = 0; r <= M; ++r) S(T + r, k) = s.values[static_cast<std::size_t>(r)];
    }
    const Eigen::MatrixXcd Q = S.adjoint() * S;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(Q);
    double tail = 0.0;
    for (int k = -M; k <= M; ++k) tail += coefficient_tail_bound(saw, T + 1 + k);
    const double truncated = eig.eigenvalues()(0);
    const double exact = even_subspace_bound(M);
    EXPECT_GE(exact, truncated - 1e-12) << M;
    EXPECT_LE(exact, truncated + tail + 1e-12) << M;
  }
}

TEST(DerivativeRayleigh, FullSpaceDecays) {
  const auto a8 = derivative_rayleigh_full(8);
  const auto a32 = derivative_rayleigh_full(32);
  EXPECT_LT(a32.A_M + a32.tail, a8.A_M / 2.0);
  EXPECT_GT(a32.A_M, 0.0);
}

TEST(DerivativeRecover, EvenAndFullRecover) {
  const auto even = derivative_recover(8, 32, 3, true);
  EXPECT_LT(even.recovery.relative_error, 1e-10);
  EXPECT_NEAR(even.min_rayleigh, even_subspace_bound(8), 0.0);
  const auto full = derivative_recover(8, 32, 3, false);
  EXPECT_LT(full.recovery.relative_error, 1e-9);
  EXPECT_GT(full.recovery.condition_number, even.recovery.condition_number);
}

TEST(DerivativeRecover, RejectsShortSampleRange) {
  try {
    derivative_recover(8, 4, 1, true);
    FAIL() << "expected InvalidArgument";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
}
