#include "rmzv/rational.hpp"

#include <ostream>

#include "rmzv/errors.hpp"

namespace rmzv {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("malformed integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

BigRational::BigRational(std::int64_t n) : value_(static_cast<long>(n)) {}

BigRational::BigRational(std::int64_t num, std::int64_t den)
    : BigRational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  text = first == std::string_view::npos ? std::string_view{} : text.substr(first, text.find_last_not_of(" \t") - first + 1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text), mpz_class(1));
  const auto den = text.substr(slash + 1);
  if (!den.empty() && (den[0] == '-' || den[0] == '+'))
    throw ParseError("sign not allowed in denominator '" + std::string(text) + "'");
  return BigRational(parse_integer(text.substr(0, slash)), parse_integer(den));
}

std::string BigRational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator+=(const BigRational& o) {
  value_ += o.value_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
  value_ -= o.value_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
  value_ *= o.value_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational BigRational::inverse() const { return BigRational(1) / *this; }

BigRational BigRational::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigRational factorial(std::int64_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return BigRational(f, mpz_class(1));
}

BigRational binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return BigRational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRational(b, mpz_class(1));
}

}  // namespace rmzv
