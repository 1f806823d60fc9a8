#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rmzv/rational.hpp"

namespace rmzv {

/// Dense univariate polynomial over BigRational, coefficients in ascending
/// degree with no trailing zeros (the zero polynomial has no coefficients).
///
/// Serves both as the numerator/denominator ring of DeltaRationalFunction and
/// as the coefficient ring Q[T] of Laurent series in the logarithmic variable.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(BigRational constant);  // NOLINT(google-explicit-constructor)
  Polynomial(std::int64_t constant) : Polynomial(BigRational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<BigRational> coeffs);

  /// The monomial c * x^k.
  static Polynomial monomial(BigRational c, std::int64_t k);
  static Polynomial variable() { return monomial(BigRational(1), 1); }

  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  BigRational coefficient(std::int64_t k) const;
  BigRational leading() const;

  BigRational evaluate(const BigRational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const BigRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
  friend Polynomial operator*(const BigRational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Exact quotient; the remainder is required to vanish.
  Polynomial exact_divide(const Polynomial& divisor) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

  /// Human-readable form in the given variable, ascending degree,
  /// e.g. "1 + 3/2*d^2".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// Parses sums of terms "c", "c*x", "cx", "x^k", "c*x^k" in the variable
/// `var` (additional spelling `alt_var` accepted), e.g. "2+d", "1/2*d^2-3".
Polynomial parse_polynomial(std::string_view text, std::string_view var,
                            std::string_view alt_var = {});

}  // namespace rmzv
