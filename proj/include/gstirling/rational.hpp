#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "gstirling/errors.hpp"

namespace gstirling {

/// Exact rational number backed by GMP.
///
/// Values are kept in lowest terms with a positive denominator after every
/// operation, so equality is plain structural equality.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::unsigned_integral U>
  Rational(U value) : q_(static_cast<unsigned long>(value)) {}  // NOLINT(implicit)

  explicit Rational(const mpz_class& integer) : q_(integer) {}

  Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    q_.get_num() = numerator;
    q_.get_den() = denominator;
    q_.canonicalize();
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "7", "-3", "0.25", "-1.5", ".5", "p/q" (optionally signed).
  static Rational parse(std::string_view text);

  const mpq_class& get() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Decimal when the denominator is a power of ten, "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// (-1)^exponent as a small integer.
inline int parity_sign(std::size_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Returns the index one past a run of digits starting at `pos`.
inline std::size_t scan_digits(std::string_view s, std::size_t pos) {
  while (pos < s.size() && is_digit(s[pos])) ++pos;
  return pos;
}

inline mpz_class digits_to_mpz(std::string_view digits) {
  if (digits.empty()) return 0;
  return mpz_class(std::string(digits), 10);
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && (text[begin] == ' ' || text[begin] == '\t')) ++begin;
  while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
  const std::string_view s = text.substr(begin, end - begin);
  if (s.empty()) throw ParseError("empty rational", begin);

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  const std::size_t int_begin = pos;
  pos = detail::scan_digits(s, pos);
  const std::string_view int_part = s.substr(int_begin, pos - int_begin);

  mpz_class num, den = 1;
  if (pos < s.size() && s[pos] == '/') {
    if (int_part.empty()) throw ParseError("expected numerator digits", begin + pos);
    const std::size_t den_begin = ++pos;
    pos = detail::scan_digits(s, pos);
    if (pos == den_begin) throw ParseError("expected denominator digits", begin + pos);
    if (pos != s.size()) throw ParseError("unexpected character", begin + pos);
    num = detail::digits_to_mpz(int_part);
    den = detail::digits_to_mpz(s.substr(den_begin, pos - den_begin));
    if (den == 0) throw ParseError("zero denominator", begin + den_begin);
  } else {
    std::string_view frac_part;
    if (pos < s.size() && s[pos] == '.') {
      const std::size_t frac_begin = ++pos;
      pos = detail::scan_digits(s, pos);
      frac_part = s.substr(frac_begin, pos - frac_begin);
    }
    if (int_part.empty() && frac_part.empty()) throw ParseError("expected digits", begin + pos);
    if (pos != s.size()) throw ParseError("unexpected character", begin + pos);
    num = detail::digits_to_mpz(std::string(int_part) + std::string(frac_part));
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
  }
  if (negative) num = -num;
  return Rational(num, den);
}

inline std::string Rational::to_string() const {
  const mpz_class& num = q_.get_num();
  const mpz_class& den = q_.get_den();
  if (den == 1) return num.get_str();

  // Count the decimal places if den == 10^places.
  mpz_class rest = den;
  std::size_t places = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 10)) {
    rest /= 10;
    ++places;
  }
  if (rest != 1) return num.get_str() + "/" + den.get_str();

  mpz_class mag = num;
  const bool negative = mag < 0;
  if (negative) mag = -mag;
  std::string digits = mag.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, 1, '.');
  return negative ? "-" + digits : digits;
}

}  // namespace gstirling
