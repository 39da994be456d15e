#include "framescope/classifier.hpp"

#include "framescope/errors.hpp"

namespace framescope {

namespace {

constexpr const char* kZeroWindow = "Toeplitz dictionary: T_0 = 0 is not injective, so F(0) is incomplete";
constexpr const char* kRealInside =
    "real-window theorem: F(g) is complete; 0 in [essinf g, esssup g] so it is not a frame";
constexpr const char* kRealOutside =
    "real-window theorem: 0 outside [essinf g, esssup g] so F(g) is a Riesz basis";
constexpr const char* kNonzeroConstant = "Toeplitz dictionary: T_c = c*I is invertible for c != 0";
constexpr const char* kUndecided =
    "Widom-Devinatz theorem: invertibility of T_g hinges on the Helson-Szego condition, which has no checkable "
    "test for general complex windows";
constexpr const char* kModulatedBelow = "modulated-window theorem, case (1): xi < -1/2, F(g_xi) is incomplete";
constexpr const char* kModulatedCentral =
    "modulated-window theorem, case (2): -1/2 < xi < 1/2, F(g_xi) is a Riesz basis (Kadec 1/4 theorem)";
constexpr const char* kModulatedAbove =
    "modulated-window theorem, case (3): xi > 1/2 off the half-integers, F(g_xi) is a frame but not a Riesz basis";
constexpr const char* kModulatedHalf =
    "modulated-window theorem, case (4): xi = -1/2 + n, F(g_xi) is complete but neither a frame nor a Riesz basis";

enum class Region { Below, HalfInteger, Central, Above };

Region region_of(const Xi& xi) {
  if (xi.compare_twice(-1) < 0) return Region::Below;
  if (xi.is_half_integer()) return Region::HalfInteger;
  if (xi.compare_twice(1) < 0) return Region::Central;
  return Region::Above;
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::NotBessel: return "NotBessel";
    case Status::Incomplete: return "Incomplete";
    case Status::CompleteOnly: return "CompleteOnly";
    case Status::FrameNotRiesz: return "FrameNotRiesz";
    case Status::RieszBasis: return "RieszBasis";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

ToeplitzVerdict toeplitz_verdict_modulated(const Xi& xi) {
  switch (region_of(xi)) {
    case Region::Below: return {false, false, false};
    case Region::Central: return {true, true, true};
    case Region::HalfInteger: return {true, false, false};
    case Region::Above: return {true, true, false};
  }
  return {};
}

Verdict classify_modulated(const Xi& xi) {
  Verdict v;
  v.toeplitz = toeplitz_verdict_modulated(xi);
  switch (region_of(xi)) {
    case Region::Below:
      v.status = Status::Incomplete;
      v.citation = kModulatedBelow;
      break;
    case Region::Central:
      v.status = Status::RieszBasis;
      v.citation = kModulatedCentral;
      break;
    case Region::HalfInteger:
      v.status = Status::CompleteOnly;
      v.citation = kModulatedHalf;
      break;
    case Region::Above:
      v.status = Status::FrameNotRiesz;
      v.citation = kModulatedAbove;
      break;
  }
  return v;
}

Verdict classify(const WindowSpec& w) {
  if (auto m = w.get_if<Modulated>()) return classify_modulated(m->xi);

  if (auto c = w.get_if<Constant>()) {
    if (c->value == cplx(0.0)) return {Status::Incomplete, {false, false, false}, kZeroWindow};
    return {Status::RieszBasis, {true, true, true}, c->value.imag() == 0.0 ? kRealOutside : kNonzeroConstant};
  }

  if (w.is_real()) {
    const auto hull = real_hull(w);
    if (hull.lo == 0.0 && hull.hi == 0.0) return {Status::Incomplete, {false, false, false}, kZeroWindow};
    if (hull.contains(0.0)) return {Status::CompleteOnly, {true, false, false}, kRealInside};
    return {Status::RieszBasis, {true, true, true}, kRealOutside};
  }

  return {Status::Unknown, {}, kUndecided};
}

Status verdict_from_toeplitz(const ToeplitzVerdict& tv, bool bounded_symbol) {
  const bool broken = (tv.invertible == true && (tv.bounded_below == false || tv.injective == false)) ||
                      (tv.bounded_below == true && tv.injective == false);
  if (broken) throw Error(Errc::InconsistentFlags, "flags violate invertible => bounded_below => injective");

  if (!bounded_symbol) return Status::NotBessel;
  if (tv.invertible == true) return Status::RieszBasis;
  if (tv.injective == false) return Status::Incomplete;
  if (tv.bounded_below == true) return tv.invertible == false ? Status::FrameNotRiesz : Status::Unknown;
  if (tv.bounded_below == false && tv.injective == true) return Status::CompleteOnly;
  return Status::Unknown;
}

}  // namespace framescope
