#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rmzv/coefficient.hpp"
#include "rmzv/errors.hpp"

namespace rmzv {

/// A Laurent series in eps known modulo eps^precision.
///
/// The stored window is [min_order, precision); coefficients outside it are
/// either zero (below) or unknown (at or above precision). Leading zeros are
/// trimmed, and the all-zero window is stored as a single zero at
/// precision - 1. Every operation returns the tightest window that is sound
/// for the inputs' windows.
template <Coefficient C>
class TruncatedLaurentSeries {
 public:
  using coefficient_type = C;

  /// Zero known modulo eps^0.
  TruncatedLaurentSeries() : coeffs_(1) {}

  static TruncatedLaurentSeries zero(std::int64_t precision) {
    return TruncatedLaurentSeries(precision - 1, std::vector<C>(1), precision);
  }

  static TruncatedLaurentSeries one(std::int64_t precision) { return monomial(C(1), 0, precision); }

  static TruncatedLaurentSeries monomial(C c, std::int64_t order, std::int64_t precision) {
    if (order >= precision) return zero(precision);
    std::vector<C> v(static_cast<std::size_t>(precision - order));
    v.front() = std::move(c);
    return TruncatedLaurentSeries(order, std::move(v), precision);
  }

  /// Coefficients start at `min_order`; missing entries up to `precision`
  /// are zero-filled. Throws std::invalid_argument if more coefficients than
  /// the window holds are supplied or the window is empty.
  TruncatedLaurentSeries(std::int64_t min_order, std::vector<C> coeffs, std::int64_t precision)
      : min_order_(min_order), precision_(precision), coeffs_(std::move(coeffs)) {
    if (precision <= min_order) throw std::invalid_argument("series window is empty");
    const auto width = static_cast<std::size_t>(precision - min_order);
    if (coeffs_.size() > width) throw std::invalid_argument("more coefficients than the series window");
    coeffs_.resize(width);
    normalize();
  }

  std::int64_t min_order() const { return min_order_; }
  std::int64_t precision() const { return precision_; }
  const std::vector<C>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.size() == 1 && coeffs_.front().is_zero(); }

  /// Coefficient of eps^k; throws InsufficientPrecision when k >= precision.
  C coefficient(std::int64_t k) const {
    if (k >= precision_)
      throw InsufficientPrecision("coefficient of eps^" + std::to_string(k) + " requested from a series known mod eps^" +
                                  std::to_string(precision_));
    if (k < min_order_) return C{};
    return coeffs_[static_cast<std::size_t>(k - min_order_)];
  }

  /// Same series known modulo eps^min(p, precision).
  TruncatedLaurentSeries truncated(std::int64_t p) const {
    if (p >= precision_) return *this;
    if (p <= min_order_) return zero(p);
    std::vector<C> v(coeffs_.begin(), coeffs_.begin() + (p - min_order_));
    return TruncatedLaurentSeries(min_order_, std::move(v), p);
  }

  TruncatedLaurentSeries& operator+=(const TruncatedLaurentSeries& o) { return *this = combine(*this, o, false); }
  TruncatedLaurentSeries& operator-=(const TruncatedLaurentSeries& o) { return *this = combine(*this, o, true); }
  TruncatedLaurentSeries& operator*=(const TruncatedLaurentSeries& o) { return *this = multiply(*this, o); }
  TruncatedLaurentSeries& operator*=(const C& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
  }

  friend TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
    return combine(a, b, false);
  }
  friend TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
    return combine(a, b, true);
  }
  friend TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
    return multiply(a, b);
  }
  friend TruncatedLaurentSeries operator*(TruncatedLaurentSeries a, const C& c) { return a *= c; }
  friend TruncatedLaurentSeries operator*(const C& c, TruncatedLaurentSeries a) { return a *= c; }
  TruncatedLaurentSeries operator-() const {
    TruncatedLaurentSeries r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
  }

  /// Structural equality: same window and same coefficients.
  friend bool operator==(const TruncatedLaurentSeries&, const TruncatedLaurentSeries&) = default;

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
      min_order_ = precision_ - 1;
      coeffs_.assign(1, C{});
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      min_order_ += static_cast<std::int64_t>(lead);
    }
  }

  static TruncatedLaurentSeries combine(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b,
                                        bool subtract) {
    const std::int64_t prec = std::min(a.precision_, b.precision_);
    const std::int64_t lo = std::min({a.min_order_, b.min_order_, prec - 1});
    std::vector<C> v(static_cast<std::size_t>(prec - lo));
    for (std::int64_t k = lo; k < prec; ++k) {
      auto& slot = v[static_cast<std::size_t>(k - lo)];
      if (k >= a.min_order_) slot = a.coeffs_[static_cast<std::size_t>(k - a.min_order_)];
      if (k >= b.min_order_) {
        const auto& y = b.coeffs_[static_cast<std::size_t>(k - b.min_order_)];
        if (subtract) {
          slot -= y;
        } else {
          slot += y;
        }
      }
    }
    return TruncatedLaurentSeries(lo, std::move(v), prec);
  }

  static TruncatedLaurentSeries multiply(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
    const std::int64_t lo = a.min_order_ + b.min_order_;
    const std::int64_t prec = std::min(a.precision_ + b.min_order_, b.precision_ + a.min_order_);
    const auto width = static_cast<std::size_t>(prec - lo);
    std::vector<C> v(width);
    for (std::size_t i = 0; i < a.coeffs_.size() && i < width; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < width; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        C t = a.coeffs_[i];
        t *= b.coeffs_[j];
        v[i + j] += t;
      }
    }
    return TruncatedLaurentSeries(lo, std::move(v), prec);
  }

  std::int64_t min_order_ = -1;
  std::int64_t precision_ = 0;
  std::vector<C> coeffs_;
};

/// Truncation bookkeeping for a computation that must deliver an exact
/// constant term.
struct PrecisionBudget {
  bool required_constant_term_exactness = true;
  std::int64_t requested_precision = 1;

  explicit PrecisionBudget(std::int64_t requested = 1, bool exact_constant = true)
      : required_constant_term_exactness(exact_constant), requested_precision(requested) {
    if (requested < 1) throw std::invalid_argument("requested precision must be >= 1");
  }
};

/// Minimal subtraction P: the terms of exponent <= -1. The pole part of a
/// series known mod eps^p (p >= 0) is a Laurent polynomial known exactly, so
/// it may be represented with any window `precision` >= 0; by default the
/// input's window is kept.
template <Coefficient C>
TruncatedLaurentSeries<C> pole_part(const TruncatedLaurentSeries<C>& a, std::int64_t precision) {
  if (a.precision() < 0)
    throw IncompletePolePart("pole part of a series known only mod eps^" + std::to_string(a.precision()));
  if (precision < 0) throw std::invalid_argument("pole part window must reach eps^0");
  if (a.min_order() >= 0) return TruncatedLaurentSeries<C>::zero(precision);
  std::vector<C> v(a.coefficients().begin(), a.coefficients().begin() + (-a.min_order()));
  return TruncatedLaurentSeries<C>(a.min_order(), std::move(v), precision);
}

template <Coefficient C>
TruncatedLaurentSeries<C> pole_part(const TruncatedLaurentSeries<C>& a) {
  return pole_part(a, std::max<std::int64_t>(a.precision(), 0));
}

/// (id - P): the nonnegative-exponent part.
template <Coefficient C>
TruncatedLaurentSeries<C> finite_part(const TruncatedLaurentSeries<C>& a) {
  if (a.precision() < 0)
    throw IncompletePolePart("finite part of a series known only mod eps^" + std::to_string(a.precision()));
  if (a.min_order() >= 0) return a;
  if (a.precision() == 0) return TruncatedLaurentSeries<C>::zero(0);
  const auto& c = a.coefficients();
  std::vector<C> v(c.begin() + (-a.min_order()), c.end());
  return TruncatedLaurentSeries<C>(0, std::move(v), a.precision());
}

template <Coefficient C>
C constant_term(const TruncatedLaurentSeries<C>& a) {
  if (a.precision() < 1)
    throw InsufficientPrecision("constant term of a series known only mod eps^" + std::to_string(a.precision()));
  return a.coefficient(0);
}

/// d/deps, termwise: alpha * eps^k -> (alpha' + k * alpha) * eps^(k-1), where
/// alpha' is the coefficient ring's inner derivative (nonzero only on Q[T]).
template <Coefficient C>
TruncatedLaurentSeries<C> derive(const TruncatedLaurentSeries<C>& a) {
  const auto& c = a.coefficients();
  std::vector<C> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::int64_t k = a.min_order() + static_cast<std::int64_t>(i);
    C t = c[i];
    t *= C(k);
    t += CoefficientTraits<C>::inner_derivative(c[i]);
    v[i] = std::move(t);
  }
  return TruncatedLaurentSeries<C>(a.min_order() - 1, std::move(v), a.precision() - 1);
}

/// True when `a` and `b` have identical coefficients at every exponent below
/// min(precision(a), precision(b)).
template <Coefficient C>
bool agree_on_common_window(const TruncatedLaurentSeries<C>& a, const TruncatedLaurentSeries<C>& b) {
  const std::int64_t prec = std::min(a.precision(), b.precision());
  const std::int64_t lo = std::min(a.min_order(), b.min_order());
  for (std::int64_t k = lo; k < prec; ++k) {
    if (!(a.coefficient(k) == b.coefficient(k))) return false;
  }
  return true;
}

/// Floating-point evaluation of the stored window at eps = x.
inline double evaluate(const TruncatedLaurentSeries<BigRational>& a, double x) {
  double acc = 0.0;
  const auto& c = a.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].to_double();
  double scale = 1.0;
  const std::int64_t m = a.min_order();
  for (std::int64_t k = 0; k < (m < 0 ? -m : m); ++k) scale *= x;
  return m < 0 ? acc / scale : acc * scale;
}

/// "c·eps^k" terms joined by " + " in ascending k, then " + O(eps^p)".
/// Zero coefficients are omitted; compound coefficients are parenthesized.
template <Coefficient C>
std::string to_text(const TruncatedLaurentSeries<C>& a, const std::string& var = "eps") {
  std::string out;
  const auto& c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    const std::int64_t k = a.min_order() + static_cast<std::int64_t>(i);
    std::string coeff = CoefficientTraits<C>::to_text(c[i]);
    if (CoefficientTraits<C>::is_compound(c[i])) coeff = "(" + coeff + ")";
    std::string term = coeff;
    if (k == 1) {
      term += "·" + var;
    } else if (k != 0) {
      term += "·" + var + "^" + std::to_string(k);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  if (out.empty()) out = "0";
  return out + " + O(" + var + "^" + std::to_string(a.precision()) + ")";
}

using RationalSeries = TruncatedLaurentSeries<BigRational>;
using DeltaSeries = TruncatedLaurentSeries<DeltaRationalFunction>;
/// Series with coefficients in Q[T], T = -ln(-eps).
using LogSeries = TruncatedLaurentSeries<Polynomial>;

}  // namespace rmzv
