#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace framescope {

/// Reduced fraction num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// A modulation frequency. Either an exact rational or a binary float; floats
/// are never promoted to exact values, so a float sits on a half-integer only
/// when it is bit-equal to one.
class Xi {
 public:
  Xi() = default;
  Xi(double value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Xi(Rational exact) : exact_(exact), value_(exact.value()) {}  // NOLINT

  static Xi exact(std::int64_t num, std::int64_t den) { return Xi(Rational::make(num, den)); }

  /// Accepts "p/q" (exact) or any floating-point literal.
  static Xi parse(std::string_view text);

  double value() const { return value_; }
  const std::optional<Rational>& exact() const { return exact_; }
  bool is_exact() const { return exact_.has_value(); }

  /// ξ = -1/2 + n for some integer n (any sign).
  bool is_half_integer() const;
  bool is_integer() const;
  /// Integer part of 2ξ when 2ξ is an integer.
  std::optional<std::int64_t> twice_as_integer() const;

  /// Sign of (2ξ - k), decided exactly for rationals.
  int compare_twice(std::int64_t k) const;

  std::string to_string() const;

 private:
  std::optional<Rational> exact_;
  double value_ = 0.0;
};

}  // namespace framescope
