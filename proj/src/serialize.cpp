#include "rmzv/serialize.hpp"

#include "rmzv/errors.hpp"

namespace rmzv {

Json to_json(const BigRational& q) { return q.to_string(); }

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  if (out.empty()) out.push_back("0");
  return out;
}

Json to_json(const DeltaRationalFunction& f) {
  return Json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

BigRational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return BigRational::parse(j.get<std::string>());
}

namespace {

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of rational strings");
  std::vector<BigRational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Polynomial(std::move(c));
}

}  // namespace

DeltaRationalFunction delta_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParseError("rational function must be {\"num\": [...], \"den\": [...]}");
  return DeltaRationalFunction(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

}  // namespace rmzv
