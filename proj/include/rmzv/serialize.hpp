#pragma once

#include <string>

#include "json.hpp"
#include "rmzv/birkhoff.hpp"
#include "rmzv/hopf.hpp"
#include "rmzv/laurent.hpp"
#include "rmzv/polynomial.hpp"
#include "rmzv/rational.hpp"
#include "rmzv/rational_function.hpp"

namespace rmzv {

using Json = nlohmann::json;

/// "p/q" string.
Json to_json(const BigRational& q);
/// {"num": [c0, c1, ...], "den": [d0, d1, ...]}, ascending degree.
Json to_json(const DeltaRationalFunction& f);
/// Coefficient list in ascending degree (used for Q[T] coefficients).
Json to_json(const Polynomial& p);

BigRational rational_from_json(const Json& j);
DeltaRationalFunction delta_function_from_json(const Json& j);

/// {"var": "eps", "minOrder": o, "precision": p, "coeffs": [...]}.
template <Coefficient C>
Json to_json(const TruncatedLaurentSeries<C>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  return Json{{"var", "eps"}, {"minOrder", s.min_order()}, {"precision", s.precision()}, {"coeffs", coeffs}};
}

template <class D>
Json to_json(const Word<D>& w) {
  Json letters = Json::array();
  for (const auto& a : w) letters.push_back(Json::array({a.s, to_json(a.r)}));
  return letters;
}

/// [{"coeff": scalar, "word": [[s, r], ...]}, ...] in canonical word order.
template <class D>
Json to_json(const HopfElement<D>& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) out.push_back(Json{{"coeff", to_json(c)}, {"word", to_json(w)}});
  return out;
}

/// [{"coeff": scalar, "left": word, "right": word}, ...].
template <class D>
Json to_json(const TensorElement<D>& t) {
  Json out = Json::array();
  for (const auto& [k, c] : t.terms())
    out.push_back(Json{{"coeff", to_json(c)}, {"left", to_json(k.first)}, {"right", to_json(k.second)}});
  return out;
}

/// {"word", "check", "pass", "lhs", "rhs"}.
template <Coefficient C>
Json to_json(const SeriesCheck<C>& c) {
  return Json{{"word", c.word}, {"check", c.check}, {"pass", c.pass}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}};
}

inline Json check_json(const std::string& word, const std::string& check, bool pass, Json lhs, Json rhs) {
  return Json{{"word", word}, {"check", check}, {"pass", pass}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}};
}

}  // namespace rmzv
