#include "rmzv/rational_function.hpp"

#include <algorithm>

#include "rmzv/errors.hpp"

namespace rmzv {

namespace {
constexpr std::string_view kVar = "d";
constexpr std::string_view kGreekVar = "δ";
}  // namespace

DeltaRationalFunction::DeltaRationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalize();
}

void DeltaRationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_divide(g);
      den_ = den_.exact_divide(g);
    }
  }
  const BigRational lead = den_.leading();
  if (!lead.is_one()) {
    const BigRational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

BigRational DeltaRationalFunction::limit_at_zero() const {
  const BigRational d0 = den_.coefficient(0);
  if (d0.is_zero()) throw PoleAtZero("rational function " + to_string() + " has a pole at delta = 0");
  return num_.coefficient(0) / d0;
}

bool DeltaRationalFunction::is_positive_direction() const {
  if (!is_polynomial() || num_.is_zero()) return false;
  return std::all_of(num_.coefficients().begin(), num_.coefficients().end(),
                     [](const BigRational& c) { return c.sign() >= 0; });
}

DeltaRationalFunction DeltaRationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return DeltaRationalFunction(den_, num_);
}

DeltaRationalFunction& DeltaRationalFunction::operator+=(const DeltaRationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

DeltaRationalFunction& DeltaRationalFunction::operator-=(const DeltaRationalFunction& o) {
  return *this += -o;
}

DeltaRationalFunction& DeltaRationalFunction::operator*=(const DeltaRationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    *this = DeltaRationalFunction();
    return *this;
  }
  if (is_polynomial() && o.is_polynomial()) {
    // Both denominators are 1 after canonicalization.
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel so that the result is already coprime.
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  num_ = num_.exact_divide(g1) * o.num_.exact_divide(g2);
  den_ = den_.exact_divide(g2) * o.den_.exact_divide(g1);
  const BigRational lead = den_.leading();
  if (!lead.is_one()) {
    const BigRational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

DeltaRationalFunction& DeltaRationalFunction::operator/=(const DeltaRationalFunction& o) {
  return *this *= o.inverse();
}

DeltaRationalFunction DeltaRationalFunction::operator-() const {
  DeltaRationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const DeltaRationalFunction& a, const DeltaRationalFunction& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

std::string DeltaRationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string(kVar);
  return "(" + num_.to_string(kVar) + ")/(" + den_.to_string(kVar) + ")";
}

DeltaRationalFunction parse_delta_function(std::string_view text) {
  // "(num)/(den)" form; the inner parts are polynomials.
  if (!text.empty() && text.front() == '(') {
    const auto close = text.find(')');
    if (close == text.npos) throw ParseError("unbalanced parenthesis in '" + std::string(text) + "'");
    auto num = parse_polynomial(text.substr(1, close - 1), kVar, kGreekVar);
    auto rest = text.substr(close + 1);
    if (rest.empty()) return DeltaRationalFunction(std::move(num));
    if (rest.size() < 3 || rest[0] != '/' || rest[1] != '(' || rest.back() != ')')
      throw ParseError("malformed rational function '" + std::string(text) + "'");
    auto den = parse_polynomial(rest.substr(2, rest.size() - 3), kVar, kGreekVar);
    return DeltaRationalFunction(std::move(num), std::move(den));
  }
  return DeltaRationalFunction(parse_polynomial(text, kVar, kGreekVar));
}

}  // namespace rmzv
