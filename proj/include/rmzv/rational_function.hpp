#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "rmzv/polynomial.hpp"
#include "rmzv/rational.hpp"

namespace rmzv {

/// Element of Q(delta): a ratio of polynomials in the deformation parameter,
/// kept in canonical form (coprime, monic denominator) so that equality is
/// structural.
class DeltaRationalFunction {
 public:
  DeltaRationalFunction() : den_(1) {}
  DeltaRationalFunction(BigRational c) : num_(std::move(c)), den_(1) {}  // NOLINT
  DeltaRationalFunction(std::int64_t c) : DeltaRationalFunction(BigRational(c)) {}  // NOLINT
  DeltaRationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  /// Throws DivisionByZero when `den` is the zero polynomial.
  DeltaRationalFunction(Polynomial num, Polynomial den);

  /// The deformation parameter itself.
  static DeltaRationalFunction delta() { return DeltaRationalFunction(Polynomial::variable()); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Value at delta = 0. Throws PoleAtZero if the canonical denominator
  /// vanishes there.
  BigRational limit_at_zero() const;

  /// Positive for all small delta > 0 in the restricted sense used for
  /// directions: a nonzero polynomial with nonnegative coefficients.
  bool is_positive_direction() const;

  DeltaRationalFunction inverse() const;

  DeltaRationalFunction& operator+=(const DeltaRationalFunction& o);
  DeltaRationalFunction& operator-=(const DeltaRationalFunction& o);
  DeltaRationalFunction& operator*=(const DeltaRationalFunction& o);
  DeltaRationalFunction& operator/=(const DeltaRationalFunction& o);

  friend DeltaRationalFunction operator+(DeltaRationalFunction a, const DeltaRationalFunction& b) { return a += b; }
  friend DeltaRationalFunction operator-(DeltaRationalFunction a, const DeltaRationalFunction& b) { return a -= b; }
  friend DeltaRationalFunction operator*(DeltaRationalFunction a, const DeltaRationalFunction& b) { return a *= b; }
  friend DeltaRationalFunction operator/(DeltaRationalFunction a, const DeltaRationalFunction& b) { return a /= b; }
  DeltaRationalFunction operator-() const;

  friend bool operator==(const DeltaRationalFunction&, const DeltaRationalFunction&) = default;
  /// Total order on canonical forms (numerator first); not an order of the field.
  friend std::strong_ordering operator<=>(const DeltaRationalFunction& a, const DeltaRationalFunction& b);

  /// "3/8", "1 + d", or "(1)/(2*d + 1)" style text in the variable d.
  std::string to_string() const;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

/// Accepts "p/q" rationals, polynomials in d (or the Greek letter), and
/// "(num)/(den)" quotients.
DeltaRationalFunction parse_delta_function(std::string_view text);

}  // namespace rmzv
