#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ternalg {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word live
/// inline; anything larger is promoted to a shared, immutable GMP rational.
/// The representation is canonical (a value is big only when it does not fit
/// inline), so structural equality is value equality.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t n) : num_(n) {  // NOLINT(google-explicit-constructor)
    if (n == INT64_MIN) *this = from_i128(n, 1);
  }
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string str() const;
  [[nodiscard]] mpq_class to_mpq() const;

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] int sign() const noexcept;

  [[nodiscard]] Rational numerator() const;
  [[nodiscard]] Rational denominator() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  static Rational from_i128(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class&& q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

using Scalar = Rational;

}  // namespace ternalg
