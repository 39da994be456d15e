#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "framescope/classifier.hpp"
#include "framescope/errors.hpp"

using namespace framescope;

namespace {

const ToeplitzVerdict kAllFalse{false, false, false};
const ToeplitzVerdict kInjectiveOnly{true, false, false};
const ToeplitzVerdict kBoundedBelow{true, true, false};
const ToeplitzVerdict kInvertible{true, true, true};

std::vector<Xi> xi_grid() {
  std::vector<Xi> grid;
  for (int q = -24; q <= 24; ++q) grid.push_back(Xi::exact(q, 8));
  for (double v : {-3.3, -1.01, -0.5000001, -0.4999999, 0.0001, 0.7, 1.9, 5.5, 7.25}) grid.emplace_back(v);
  return grid;
}

}  // namespace

TEST(ClassifyModulated, RegionTable) {
  const std::vector<std::tuple<Xi, Status, ToeplitzVerdict>> table = {
      {Xi(-1.0), Status::Incomplete, kAllFalse},
      {Xi(-0.5), Status::CompleteOnly, kInjectiveOnly},
      {Xi(-0.25), Status::RieszBasis, kInvertible},
      {Xi(0.0), Status::RieszBasis, kInvertible},
      {Xi(0.25), Status::RieszBasis, kInvertible},
      {Xi::exact(1, 2), Status::CompleteOnly, kInjectiveOnly},
      {Xi(0.75), Status::FrameNotRiesz, kBoundedBelow},
      {Xi::exact(3, 2), Status::CompleteOnly, kInjectiveOnly},
      {Xi(2.25), Status::FrameNotRiesz, kBoundedBelow},
  };
  for (const auto& [xi, status, tv] : table) {
    const auto v = classify_modulated(xi);
    EXPECT_EQ(v.status, status) << xi.to_string();
    EXPECT_EQ(v.toeplitz, tv) << xi.to_string();
    EXPECT_EQ(toeplitz_verdict_modulated(xi), tv) << xi.to_string();
    EXPECT_FALSE(v.citation.empty());
  }
}

TEST(ClassifyModulated, BoundariesAreBitExact) {
  EXPECT_EQ(classify_modulated(Xi(0.5)).status, Status::CompleteOnly);
  EXPECT_EQ(classify_modulated(Xi(std::nextafter(0.5, 1.0))).status, Status::FrameNotRiesz);
  EXPECT_EQ(classify_modulated(Xi(std::nextafter(0.5, 0.0))).status, Status::RieszBasis);
  EXPECT_EQ(classify_modulated(Xi(std::nextafter(-0.5, -1.0))).status, Status::Incomplete);
  EXPECT_EQ(classify_modulated(Xi(std::nextafter(-0.5, 0.0))).status, Status::RieszBasis);
  EXPECT_EQ(classify_modulated(Xi::exact(-3, 2)).status, Status::Incomplete);
  EXPECT_EQ(classify_modulated(Xi::exact(5, 2)).status, Status::CompleteOnly);
  EXPECT_EQ(classify_modulated(Xi::exact(5000001, 1000000)).status, Status::FrameNotRiesz);
}

TEST(ClassifyModulated, StatusFollowsFromToeplitzVerdict) {
  for (const auto& xi : xi_grid()) {
    const auto v = classify_modulated(xi);
    EXPECT_EQ(v.status, verdict_from_toeplitz(toeplitz_verdict_modulated(xi), true)) << xi.to_string();
  }
}

TEST(ClassifyModulated, CoburnAlternative) {
  // conj(g_ξ) = g_{-ξ}, and one of T_g, T_ḡ is injective.
  for (const auto& xi : xi_grid()) {
    const Xi neg = xi.is_exact() ? Xi(Rational::make(-xi.exact()->num, xi.exact()->den)) : Xi(-xi.value());
    const bool either = toeplitz_verdict_modulated(xi).injective.value() ||
                        toeplitz_verdict_modulated(neg).injective.value();
    EXPECT_TRUE(either) << xi.to_string();
  }
}

TEST(ClassifyModulated, HigherFlagsImplyLowerFlags) {
  for (const auto& xi : xi_grid()) {
    const auto tv = toeplitz_verdict_modulated(xi);
    EXPECT_TRUE(!tv.invertible.value() || tv.bounded_below.value()) << xi.to_string();
    EXPECT_TRUE(!tv.bounded_below.value() || tv.injective.value()) << xi.to_string();
  }
}

TEST(Classify, RealWindows) {
  EXPECT_EQ(classify(WindowSpec::sawtooth()).status, Status::CompleteOnly);
  EXPECT_EQ(classify(WindowSpec::sign()).status, Status::CompleteOnly);
  EXPECT_EQ(classify(WindowSpec::constant(2.0)).status, Status::RieszBasis);
  EXPECT_EQ(classify(fixtures::two_plus_cos()).status, Status::RieszBasis);
  EXPECT_EQ(classify(fixtures::shifted_ramp()).status, Status::RieszBasis);
  EXPECT_EQ(classify(WindowSpec::constant(-0.3)).status, Status::RieszBasis);
  // 0 on the boundary of the range: min of 1 + cos 2πx is 0.
  EXPECT_EQ(classify(WindowSpec::trig_poly({{0, 1.0}, {1, 0.5}, {-1, 0.5}})).status, Status::CompleteOnly);
}

TEST(Classify, RealWindowFlags) {
  EXPECT_EQ(classify(WindowSpec::sawtooth()).toeplitz, kInjectiveOnly);
  EXPECT_EQ(classify(fixtures::two_plus_cos()).toeplitz, kInvertible);
}

TEST(Classify, ZeroWindowIsIncomplete) {
  const auto v = classify(WindowSpec::constant(0.0));
  EXPECT_EQ(v.status, Status::Incomplete);
  EXPECT_EQ(v.toeplitz.injective, false);
  EXPECT_EQ(classify(WindowSpec::trig_poly({})).status, Status::Incomplete);
  EXPECT_EQ(classify(WindowSpec::piecewise_poly({{-0.5, 0.5, {0.0}}})).status, Status::Incomplete);
}

TEST(Classify, ComplexConstantIsRieszBasis) {
  EXPECT_EQ(classify(WindowSpec::constant(cplx(0.0, 2.0))).status, Status::RieszBasis);
}

TEST(Classify, ModulatedWindowDelegates) {
  for (const auto& xi : xi_grid()) {
    const auto a = classify(WindowSpec::modulated(xi));
    const auto b = classify_modulated(xi);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.toeplitz, b.toeplitz);
  }
}

TEST(Classify, GeneralComplexWindowIsUnknown) {
  const auto v = classify(WindowSpec::trig_poly({{0, 2.0}, {1, cplx(0.0, 1.0)}}));
  EXPECT_EQ(v.status, Status::Unknown);
  EXPECT_FALSE(v.toeplitz.injective.has_value());
  EXPECT_FALSE(v.citation.empty());
}

TEST(VerdictFromToeplitz, Dictionary) {
  EXPECT_EQ(verdict_from_toeplitz(kInvertible, true), Status::RieszBasis);
  EXPECT_EQ(verdict_from_toeplitz(kBoundedBelow, true), Status::FrameNotRiesz);
  EXPECT_EQ(verdict_from_toeplitz(kInjectiveOnly, true), Status::CompleteOnly);
  EXPECT_EQ(verdict_from_toeplitz(kAllFalse, true), Status::Incomplete);
  EXPECT_EQ(verdict_from_toeplitz({false, std::nullopt, std::nullopt}, true), Status::Incomplete);
  EXPECT_EQ(verdict_from_toeplitz({std::nullopt, std::nullopt, true}, true), Status::RieszBasis);
  EXPECT_EQ(verdict_from_toeplitz({}, true), Status::Unknown);
  EXPECT_EQ(verdict_from_toeplitz({true, std::nullopt, std::nullopt}, true), Status::Unknown);
  EXPECT_EQ(verdict_from_toeplitz({std::nullopt, false, std::nullopt}, true), Status::Unknown);
  EXPECT_EQ(verdict_from_toeplitz({true, true, std::nullopt}, true), Status::Unknown);
}

TEST(VerdictFromToeplitz, UnboundedSymbolIsNotBessel) {
  EXPECT_EQ(verdict_from_toeplitz(kInvertible, false), Status::NotBessel);
  EXPECT_EQ(verdict_from_toeplitz({}, false), Status::NotBessel);
}

TEST(VerdictFromToeplitz, InconsistentFlagsAreRejected) {
  const std::vector<ToeplitzVerdict> bad = {
      {true, false, true}, {false, true, false}, {false, true, true}, {false, std::nullopt, true}};
  for (const auto& tv : bad) {
    try {
      verdict_from_toeplitz(tv, true);
      FAIL() << "accepted inconsistent flags";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InconsistentFlags);
    }
  }
}

TEST(Status, Names) {
  EXPECT_EQ(to_string(Status::NotBessel), "NotBessel");
  EXPECT_EQ(to_string(Status::FrameNotRiesz), "FrameNotRiesz");
  EXPECT_EQ(to_string(Status::Unknown), "Unknown");
}
