#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rmzv {

/// Exact rational number, always stored reduced with a positive denominator.
/// Thin value wrapper around GMP's mpq_class.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t num, std::int64_t den);
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(mpq_class q);

  /// Parses "p", "-p", "p/q". Whitespace is not accepted.
  static BigRational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }
  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  /// Throws DivisionByZero.
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const;

  BigRational inverse() const;
  BigRational pow(std::int64_t exponent) const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

BigRational factorial(std::int64_t n);
BigRational binomial(std::int64_t n, std::int64_t k);

}  // namespace rmzv
