#pragma once

#include <string>

#include "rmzv/polynomial.hpp"
#include "rmzv/rational.hpp"
#include "rmzv/rational_function.hpp"

namespace rmzv {

/// Coefficient rings admitted by TruncatedLaurentSeries. `inner_derivative`
/// is the part of the series derivation acting on the coefficient itself:
/// zero for constants, d/dT for Q[T] (T = -ln(-eps), so dT/deps = 1/eps).
template <class C>
struct CoefficientTraits;

template <>
struct CoefficientTraits<BigRational> {
  static BigRational inner_derivative(const BigRational&) { return BigRational(0); }
  static std::string to_text(const BigRational& c) { return c.to_string(); }
  static bool is_compound(const BigRational&) { return false; }
};

template <>
struct CoefficientTraits<DeltaRationalFunction> {
  static DeltaRationalFunction inner_derivative(const DeltaRationalFunction&) { return {}; }
  static std::string to_text(const DeltaRationalFunction& c) { return c.to_string(); }
  static bool is_compound(const DeltaRationalFunction& c) {
    return !(c.is_polynomial() && c.numerator().is_constant());
  }
};

/// Q[T], the logarithmic coefficient ring.
template <>
struct CoefficientTraits<Polynomial> {
  static Polynomial inner_derivative(const Polynomial& c) { return c.derivative(); }
  static std::string to_text(const Polynomial& c) { return c.to_string("T"); }
  static bool is_compound(const Polynomial& c) { return !c.is_constant(); }
};

template <class C>
concept Coefficient = requires(C a, const C& b) {
  C{};
  C(std::int64_t{1});
  { a += b };
  { a -= b };
  { a *= b };
  { -b } -> std::convertible_to<C>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b == b } -> std::convertible_to<bool>;
  { CoefficientTraits<C>::inner_derivative(b) } -> std::convertible_to<C>;
  { CoefficientTraits<C>::to_text(b) } -> std::convertible_to<std::string>;
};

}  // namespace rmzv
