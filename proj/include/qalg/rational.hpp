#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qalg {

/// Exact rational number, always in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in 62 bits are stored inline
/// and handled with 128-bit intermediate arithmetic; anything larger is
/// promoted to a shared immutable GMP rational and demoted again as soon as
/// a result fits.  Almost every coefficient met while working with small
/// quiver algebras stays on the inline path.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& value);

  /// Parses `p`, `-p`, `p/q`, optionally wrapped in parentheses.
  /// Throws std::invalid_argument on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;

  /// Bits in numerator plus denominator.
  [[nodiscard]] std::size_t bit_size() const;
  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// Fused `*this += a * b`, the inner step of every elimination loop.
  void add_product(const Rational& a, const Rational& b);

  [[nodiscard]] Rational inverse() const;

 private:
  void assign_big(mpq_class value);
  static bool fits(__int128 v) noexcept;
  void set_reduced(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qalg
