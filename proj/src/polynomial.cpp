#include "rmzv/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "rmzv/errors.hpp"

namespace rmzv {

Polynomial::Polynomial(BigRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(BigRational c, std::int64_t k) {
  std::vector<BigRational> v(static_cast<std::size_t>(k) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational Polynomial::coefficient(std::int64_t k) const {
  if (k < 0 || k > degree()) return BigRational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

BigRational Polynomial::leading() const { return is_zero() ? BigRational(0) : coeffs_.back(); }

BigRational Polynomial::evaluate(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<BigRational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(coeffs_[k] * BigRational(static_cast<std::int64_t>(k)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || coeffs_.back().is_one()) return *this;
  return *this * coeffs_.back().inverse();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  Polynomial rem = *this;
  if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
  std::vector<BigRational> quot(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1));
  const BigRational lead_inv = divisor.leading().inverse();
  const auto dsize = divisor.coeffs_.size();
  for (auto k = static_cast<std::int64_t>(quot.size()) - 1; k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k) + dsize - 1;
    if (top >= rem.coeffs_.size()) continue;
    BigRational q = rem.coeffs_[top] * lead_inv;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < dsize; ++j) rem.coeffs_[static_cast<std::size_t>(k) + j] -= q * divisor.coeffs_[j];
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  rem.trim();
  return {Polynomial(std::move(quot)), std::move(rem)};
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
    if (auto c = a.coeffs_[k] <=> b.coeffs_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string term;
    if (k == 0) {
      term = c.to_string();
    } else {
      if (c.is_one()) {
      } else if (c == BigRational(-1)) {
        term = "-";
      } else {
        term = c.to_string() + "*";
      }
      term += var;
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (!out.empty()) {
      if (term[0] == '-') {
        out += " - ";
        term.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    out += term;
  }
  return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::string_view var, std::string_view alt_var) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty polynomial");
  Polynomial result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in '" + s + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw ParseError("empty term in '" + s + "'");
    pos = end;

    auto var_at = term.npos;
    std::size_t var_len = 0;
    for (auto v : {var, alt_var}) {
      if (v.empty()) continue;
      if (auto at = term.find(v); at != term.npos && (var_at == term.npos || at < var_at)) {
        var_at = at;
        var_len = v.size();
      }
    }
    BigRational coeff(1);
    std::int64_t power = 0;
    if (var_at == term.npos) {
      coeff = BigRational::parse(term);
    } else {
      auto head = term.substr(0, var_at);
      if (!head.empty() && head.back() == '*') head.remove_suffix(1);
      if (!head.empty()) coeff = BigRational::parse(head);
      auto tail = term.substr(var_at + var_len);
      power = 1;
      if (!tail.empty()) {
        if (tail[0] != '^') throw ParseError("malformed term '" + std::string(term) + "'");
        const auto e = BigRational::parse(tail.substr(1));
        if (!e.is_integer() || e.sign() < 0) throw ParseError("bad exponent in '" + std::string(term) + "'");
        power = e.numerator().get_si();
      }
    }
    result += Polynomial::monomial(sign < 0 ? -coeff : coeff, power);
  }
  return result;
}

}  // namespace rmzv
