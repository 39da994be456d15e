#include "framescope/xi.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "framescope/errors.hpp"

namespace framescope {

namespace {

// Keeps 2·num·k products comfortably inside 128 bits and 2·num inside 64.
constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 52;

std::int64_t parse_int(std::string_view text, std::string_view field) {
  std::int64_t out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw Error(Errc::InvalidArgument, "xi: cannot parse " + std::string(field) + " '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "xi: zero denominator");
  if (num > kMaxMagnitude || num < -kMaxMagnitude || den > kMaxMagnitude || den < -kMaxMagnitude) {
    throw Error(Errc::InvalidArgument, "xi: rational components exceed 2^52");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

Xi Xi::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::InvalidArgument, "xi: empty value");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Xi(Rational::make(parse_int(text.substr(0, slash), "numerator"),
                             parse_int(text.substr(slash + 1), "denominator")));
  }
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw Error(Errc::InvalidArgument, "xi: cannot parse '" + std::string(text) + "'");
  }
  return Xi(value);
}

std::optional<std::int64_t> Xi::twice_as_integer() const {
  if (exact_) {
    const __int128 twice = static_cast<__int128>(exact_->num) * 2;
    if (twice % exact_->den != 0) return std::nullopt;
    return static_cast<std::int64_t>(twice / exact_->den);
  }
  const double twice = 2.0 * value_;  // exact in binary floating point
  if (twice != std::floor(twice) || std::abs(twice) > 9.0e15) return std::nullopt;
  return static_cast<std::int64_t>(twice);
}

bool Xi::is_half_integer() const {
  auto twice = twice_as_integer();
  return twice && (*twice % 2 != 0);
}

bool Xi::is_integer() const {
  auto twice = twice_as_integer();
  return twice && (*twice % 2 == 0);
}

int Xi::compare_twice(std::int64_t k) const {
  if (exact_) {
    const __int128 lhs = static_cast<__int128>(exact_->num) * 2;
    const __int128 rhs = static_cast<__int128>(k) * exact_->den;
    return (lhs > rhs) - (lhs < rhs);
  }
  const double twice = 2.0 * value_;
  const double kk = static_cast<double>(k);
  return (twice > kk) - (twice < kk);
}

std::string Xi::to_string() const {
  if (exact_) {
    if (exact_->den == 1) return std::to_string(exact_->num);
    return std::to_string(exact_->num) + "/" + std::to_string(exact_->den);
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value_);
  return std::string(buf, ptr);
}

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidWindow: return "InvalidWindow";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::NotRealValued: return "NotRealValued";
    case Errc::NonSquare: return "NonSquare";
    case Errc::NonPositiveC1: return "NonPositiveC1";
    case Errc::InconsistentFlags: return "InconsistentFlags";
    case Errc::UnboundedWindow: return "UnboundedWindow";
    case Errc::DeltaTooLarge: return "DeltaTooLarge";
    case Errc::TNotAdmissible: return "TNotAdmissible";
    case Errc::EmptySampleSet: return "EmptySampleSet";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::RankDeficient: return "RankDeficient";
  }
  return "Unknown";
}

}  // namespace framescope
