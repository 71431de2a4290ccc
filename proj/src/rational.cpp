#include "ternalg/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace ternalg {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// The inline range excludes INT64_MIN so negation never overflows.
bool fits(i128 v) { return v > kMin && v <= kMax; }
bool fits(std::int64_t v) { return v != kMin; }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  mpz_class lo(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  *this = from_mpq(std::move(c));
}

Rational Rational::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  r.num_ = 0;
  r.den_ = 1;
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(mpq_class&& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    const long ln = n.get_si();
    const long ld = d.get_si();
    if (fits(static_cast<std::int64_t>(ln)) && fits(static_cast<std::int64_t>(ld))) {
      Rational r;
      r.num_ = ln;
      r.den_ = ld;
      return r;
    }
  }
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num_part = text;
  std::string_view den_part = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = trim(text.substr(0, slash));
    den_part = trim(text.substr(slash + 1));
  }
  if (!valid_int(num_part, true) || !valid_int(den_part, false))
    throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
  if (num_part.front() == '+') num_part.remove_prefix(1);
  mpz_class n(std::string(num_part), 10);
  mpz_class d(std::string(den_part), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
  mpq_class q(n, d);
  q.canonicalize();
  return from_mpq(std::move(q));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::numerator() const {
  if (big_) return Rational(mpq_class(big_->get_num()));
  return Rational(num_);
}

Rational Rational::denominator() const {
  if (big_) return Rational(mpq_class(big_->get_den()));
  return Rational(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && fits(s)) return Rational(s);
      return Rational::from_i128(static_cast<i128>(a.num_) + b.num_, 1);
    }
    if (a.den_ == b.den_)
      return Rational::from_i128(static_cast<i128>(a.num_) + b.num_, a.den_);
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const i128 num = static_cast<i128>(a.num_) * (b.den_ / g) +
                     static_cast<i128>(b.num_) * (a.den_ / g);
    const i128 den = static_cast<i128>(a.den_) * (b.den_ / g);
    return Rational::from_i128(num, den);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a) {
  if (!a.big_) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  return Rational::from_mpq(-a.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && fits(p)) return Rational(p);
      return Rational::from_i128(static_cast<i128>(a.num_) * b.num_, 1);
    }
    const std::int64_t g1 = std::gcd(abs64(a.num_), b.den_);
    const std::int64_t g2 = std::gcd(abs64(b.num_), a.den_);
    std::int64_t num, den;
    if (!__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &num) &&
        !__builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &den) && fits(num) && fits(den)) {
      Rational r;
      r.num_ = num;
      r.den_ = den;
      return r;
    }
    return Rational::from_i128(static_cast<i128>(a.num_ / g1) * (b.num_ / g2),
                               static_cast<i128>(a.den_ / g2) * (b.den_ / g1));
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return Rational();
  if (!b.big_) {
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = abs64(b.num_);
    return a * inv;
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace ternalg
