#pragma once

#include <optional>
#include <string>

#include "framescope/windows.hpp"
#include "framescope/xi.hpp"

namespace framescope {

enum class Status { NotBessel, Incomplete, CompleteOnly, FrameNotRiesz, RieszBasis, Unknown };

std::string to_string(Status status);

/// Tri-state facts about T_g; std::nullopt means "not decided".
struct ToeplitzVerdict {
  std::optional<bool> injective;
  std::optional<bool> bounded_below;
  std::optional<bool> invertible;

  friend bool operator==(const ToeplitzVerdict&, const ToeplitzVerdict&) = default;
};

struct Verdict {
  Status status = Status::Unknown;
  ToeplitzVerdict toeplitz;
  std::string citation;
};

/// Symbolic classification of F(g) = {e_n : n ≥ 0} ∪ {g·e_n : n < 0}.
///
/// Real windows are decided by the position of 0 relative to
/// [essinf g, esssup g]; pure modulations by the ξ table; every other complex
/// window is Unknown, since invertibility of T_g then hinges on the
/// Helson–Szegő condition, for which no algorithm is offered here.
Verdict classify(const WindowSpec& w);

/// Four-region table for g_ξ(x) = e^{2πiξx}:
///   ξ < -1/2                      Incomplete
///   -1/2 < ξ < 1/2                RieszBasis
///   ξ = -1/2 + n, n ≥ 0           CompleteOnly
///   ξ > 1/2, not a half-integer   FrameNotRiesz
/// Boundary membership is exact for rational ξ and bit-exact for floats.
Verdict classify_modulated(const Xi& xi);

/// Injectivity / lower bound / invertibility of T_{g_ξ} on the same regions.
ToeplitzVerdict toeplitz_verdict_modulated(const Xi& xi);

/// Dictionary from the spectral facts of T_g to the frame status of F(g).
/// Throws InconsistentFlags when invertible ⇒ bounded_below ⇒ injective is
/// violated by known flags.
Status verdict_from_toeplitz(const ToeplitzVerdict& tv, bool bounded_symbol);

}  // namespace framescope
