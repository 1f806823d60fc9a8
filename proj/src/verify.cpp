#include "rmzv/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "rmzv/bernoulli.hpp"
#include "rmzv/birkhoff.hpp"
#include "rmzv/mzv.hpp"

namespace rmzv {

using Q = BigRational;
using QLetter = Letter<Q>;
using QWord = Word<Q>;
using QElement = HopfElement<Q>;

std::vector<QLetter> nonpositive_alphabet(std::int64_t max_abs_s, const std::vector<std::int64_t>& directions) {
  std::vector<QLetter> out;
  for (std::int64_t s = 0; s >= -max_abs_s; --s)
    for (auto r : directions) out.push_back(QLetter{s, Q(r)});
  return out;
}

RationalSeries random_series(Rng& rng, std::int64_t lowest, std::int64_t lo_prec, std::int64_t hi_prec) {
  const std::int64_t lo = rng.uniform(lowest, 1);
  const std::int64_t prec = std::max(rng.uniform(lo_prec, hi_prec), lo + 1);
  std::vector<Q> c;
  for (std::int64_t k = lo; k < prec; ++k) c.push_back(rng.uniform(0, 3) == 0 ? Q(0) : rng.small_rational());
  return RationalSeries(lo, std::move(c), prec);
}

void SuiteResult::add(Json report) {
  if (!report.at("pass").get<bool>()) ++failures;
  reports.push_back(std::move(report));
}

void SuiteResult::merge(SuiteResult other) {
  failures += other.failures;
  for (auto& r : other.reports) reports.push_back(std::move(r));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hopf", "rota-baxter", "birkhoff", "differential", "mzv", "all"};
  return names;
}

namespace {

std::string pair_name(const QWord& u, const QWord& v) { return to_text(u) + "*" + to_text(v); }

bool in_sector(const QElement& x) {
  return std::all_of(x.terms().begin(), x.terms().end(), [](const auto& t) { return t.first.in_nonpositive_sector(); });
}

Json value_check(const std::string& word, const std::string& check, const Q& lhs, const Q& rhs) {
  return check_json(word, check, lhs == rhs, to_json(lhs), to_json(rhs));
}

}  // namespace

// --- hopf ----------------------------------------------------------------------

SuiteResult hopf_suite(const SuiteOptions& options) {
  SuiteResult result{"hopf", {}, 0};
  Rng rng(options.seed);
  const std::vector<QLetter> alphabet{{0, Q(1)}, {-1, Q(1)}, {0, Q(2)}};
  const auto w = static_cast<std::size_t>(std::clamp<std::int64_t>(options.max_weight, 1, 5));
  const auto words = all_words(alphabet, w);

  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.size() + v.size() > w) continue;
      const auto product = quasi_shuffle(u, v);
      const auto direct = mixable_shuffle_direct(u, v);
      result.add(check_json(pair_name(u, v), "quasi-shuffle-oracle", product == direct, to_json(product), to_json(direct)));
      const auto swapped = quasi_shuffle(v, u);
      result.add(check_json(pair_name(u, v), "commutativity", product == swapped, to_json(product), to_json(swapped)));
      bool filtered = true;
      for (const auto& [x, c] : product.terms())
        filtered = filtered && x.size() <= u.size() + v.size() && x.size() >= std::max(u.size(), v.size());
      result.add(check_json(pair_name(u, v), "filtration", filtered, Json(u.size() + v.size()), Json(product.size())));
    }
  }

  for (const auto& x : words) {
    const auto dx = coproduct(x);
    const QElement left = counit_left(dx), right = counit_right(dx);
    result.add(check_json(to_text(x), "counit", left == QElement(x) && right == QElement(x), to_json(left), to_json(right)));
    const auto lhs = coproduct(hopf_derivation(x));
    const auto rhs = tensor_derivation(dx);
    result.add(check_json(to_text(x), "co-leibniz", lhs == rhs, to_json(lhs), to_json(rhs)));
  }

  const int random_cases = 50;
  for (int t = 0; t < random_cases; ++t) {
    const auto lu = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(w)));
    const auto lv = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(w - lu)));
    const auto u = random_word(rng, alphabet, lu), v = random_word(rng, alphabet, lv);
    const auto lhs = coproduct(quasi_shuffle(u, v));
    const auto rhs = quasi_shuffle(coproduct(u), coproduct(v));
    result.add(check_json(pair_name(u, v), "bialgebra", lhs == rhs, to_json(lhs), to_json(rhs)));

    const auto dl = hopf_derivation(quasi_shuffle(u, v));
    const auto dr = quasi_shuffle(hopf_derivation(QElement(u)), QElement(v)) +
                    quasi_shuffle(QElement(u), hopf_derivation(QElement(v)));
    result.add(check_json(pair_name(u, v), "derivation", dl == dr, to_json(dl), to_json(dr)));

    const bool closed = in_sector(quasi_shuffle(u, v)) && in_sector(hopf_derivation(QElement(u)));
    result.add(check_json(pair_name(u, v), "sector-closure", closed, Json(true), Json(closed)));

    const auto lz = static_cast<std::size_t>(rng.uniform(0, 2));
    const auto z = random_word(rng, alphabet, lz);
    const auto a1 = quasi_shuffle(quasi_shuffle(QElement(u), QElement(v)), QElement(z));
    const auto a2 = quasi_shuffle(QElement(u), quasi_shuffle(QElement(v), QElement(z)));
    result.add(check_json(pair_name(u, v) + "*" + to_text(z), "associativity", a1 == a2, to_json(a1), to_json(a2)));
  }
  return result;
}

// --- rota-baxter -----------------------------------------------------------------

SuiteResult rota_baxter_suite(const SuiteOptions& options) {
  SuiteResult result{"rota-baxter", {}, 0};
  Rng rng(options.seed);
  const int cases = static_cast<int>(std::clamp<std::int64_t>(options.max_weight, 1, 10)) * 50;
  for (int t = 0; t < cases; ++t) {
    const auto x = random_series(rng, -2, 2, 6);
    const auto y = random_series(rng, -2, 2, 6);
    const auto z = random_series(rng, -2, 2, 6);
    const std::string name = "case" + std::to_string(t);

    const auto px = pole_part(x), py = pole_part(y);
    result.add(check_json(name, "rota-baxter", rota_baxter_identity_holds(x, y), to_json(px * py),
                          to_json(pole_part(x * py) + pole_part(px * y) - pole_part(x * y))));
    result.add(check_json(name, "idempotence",
                          pole_part(px) == px && finite_part(finite_part(x)) == finite_part(x), to_json(px),
                          to_json(pole_part(px))));
    const auto lhs = derive(x * y);
    const auto rhs = derive(x) * y + x * derive(y);
    result.add(check_json(name, "leibniz", agree_on_common_window(lhs, rhs), to_json(lhs), to_json(rhs)));
    const auto dp = derive(px);
    const auto pd = pole_part(derive(x));
    result.add(check_json(name, "commutation", agree_on_common_window(dp, pd), to_json(dp), to_json(pd)));
    const auto assoc_l = (x * y) * z, assoc_r = x * (y * z);
    const auto sum_l = (x + y) + z, sum_r = x + (y + z);
    result.add(check_json(name, "precision-soundness",
                          agree_on_common_window(assoc_l, assoc_r) && agree_on_common_window(sum_l, sum_r),
                          to_json(assoc_l), to_json(assoc_r)));
  }

  // On Q[T] coefficients P and d/deps do not commute: T is regular, while
  // d/deps T = 1/eps is a pole.
  const auto t_series = LogSeries::monomial(Polynomial::variable(), 0, 2);
  const auto dp = derive(pole_part(t_series));
  const auto pd = pole_part(derive(t_series));
  const bool witness = dp.is_zero() && pd == LogSeries::monomial(Polynomial(1), -1, 1);
  result.add(check_json("T", "t-ring-noncommutation", witness, to_json(dp), to_json(pd)));

  for (int t = 0; t < 20; ++t) {
    auto random_t = [&rng]() {
      const std::int64_t lo = rng.uniform(-2, 1);
      const std::int64_t prec = std::max(rng.uniform(2, 5), lo + 1);
      std::vector<Polynomial> c;
      for (std::int64_t k = lo; k < prec; ++k)
        c.emplace_back(std::vector<Q>{rng.small_rational(), rng.small_rational(), rng.uniform(0, 1) ? rng.small_rational() : Q(0)});
      return LogSeries(lo, std::move(c), prec);
    };
    const auto x = random_t(), y = random_t();
    const auto lhs = derive(x * y), rhs = derive(x) * y + x * derive(y);
    result.add(check_json("t-case" + std::to_string(t), "t-ring-rota-baxter", rota_baxter_identity_holds(x, y),
                          to_json(pole_part(x) * pole_part(y)), to_json(pole_part(x * y))));
    result.add(check_json("t-case" + std::to_string(t), "t-ring-leibniz", agree_on_common_window(lhs, rhs),
                          to_json(lhs), to_json(rhs)));
  }
  return result;
}

// --- birkhoff --------------------------------------------------------------------

SuiteResult birkhoff_suite(const SuiteOptions& options) {
  SuiteResult result{"birkhoff", {}, 0};
  const auto w = static_cast<std::size_t>(std::clamp<std::int64_t>(options.max_weight, 1, 4));
  const auto alphabet = nonpositive_alphabet(2, {1, 2});
  DecompositionSession<Q, Q> session(mzv_character<Q>());
  const std::int64_t precision = 3;

  const auto small_alphabet = nonpositive_alphabet(1, {1, 2});
  for (const auto& x : all_words(w <= 3 ? alphabet : small_alphabet, w)) {
    result.add(to_json(check_decomposition(session, x, precision)));
    result.add(to_json(check_range(session, x, precision)));
  }
  for (const auto& u : all_words(alphabet, w - 1, 1)) {
    for (const auto& v : all_words(alphabet, w - u.size(), 1)) {
      result.add(to_json(check_plus_multiplicativity(session, u, v, precision)));
      result.add(to_json(check_minus_multiplicativity(session, u, v)));
    }
  }
  const auto character = mzv_character<Q>();
  for (const auto& x : all_words(alphabet, 2, 2)) {
    auto s = make_check<Q>(to_text(x), "uniqueness", zplus_length2_direct(character, x, precision),
                           session.plus(x, precision));
    result.add(to_json(s));
  }
  return result;
}

// --- differential ------------------------------------------------------------

SuiteResult differential_suite(const SuiteOptions& options) {
  SuiteResult result{"differential", {}, 0};
  const auto w = static_cast<std::size_t>(std::clamp<std::int64_t>(options.max_weight, 0, 3));
  const auto alphabet = nonpositive_alphabet(2, {1, 2});
  DecompositionSession<Q, Q> session(mzv_character<Q>());
  const auto& phi = session.character();
  const std::int64_t precision = 3;
  for (const auto& x : all_words(alphabet, w)) {
    auto report = verify_differential_compatibility(session, x, precision);
    result.add(to_json(report.plus));
    result.add(to_json(report.minus));
    auto leibniz = make_check<Q>(to_text(x), "character-differential", phi(hopf_derivation(x), precision),
                                 derive(phi(x, precision + 1)));
    result.add(to_json(leibniz));
  }
  return result;
}

// --- mzv ---------------------------------------------------------------------

SuiteResult mzv_suite(const SuiteOptions& options) {
  SuiteResult result{"mzv", {}, 0};
  const std::int64_t w = std::clamp<std::int64_t>(options.max_weight, 1, 4);

  // Riemann values from the one-variable series.
  const auto z0 = one_var_series<Q>(0, Q(1), 3 * w + 2);
  for (std::int64_t k = 0; k <= 3 * w + 1; ++k)
    result.add(value_check("(0,1)", "riemann-coefficient-" + std::to_string(k), z0.coefficient(k) * factorial(k),
                           zeta_nonpositive(k)));

  const auto expansion = regularized_expansion(MZVArgument<Q>({0, 0}, {Q(1), Q(1)}), 1);
  const auto expected = RationalSeries(-2, {Q(1, 2), Q(3, 4), Q(11, 24)}, 1);
  result.add(check_json("(0,1)(0,1)", "double-zero-expansion", expansion == expected, to_json(expansion),
                        to_json(expected)));

  result.add(value_check("(0)", "renormalized", renorm_mzv({0}), Q(-1, 2)));
  result.add(value_check("(-1)", "renormalized", renorm_mzv({-1}), Q(-1, 12)));
  const Q zz = renorm_mzv({0, 0});
  result.add(value_check("(0,0)", "renormalized", zz, Q(3, 8)));
  const QWord double_zero{{0, Q(1)}, {0, Q(1)}};
  result.add(value_check("(0,1)(0,1)", "zplus-length2",
                         constant_term(zplus_length2_direct(mzv_character<Q>(), double_zero, 1)), Q(3, 8)));
  const Q z = renorm_mzv({0});
  result.add(value_check("(0)*(0)", "stuffle-relation", z * z, Q(2) * zz + z));
  result.add(check_json("(0,0)", "differs-from-continuation-values", zz != Q(5, 12) && zz != Q(1, 3), to_json(zz),
                        Json::array({"5/12", "1/3"})));

  // Quasi-shuffle relation at the value level.
  {
    DecompositionSession<Q, Q> session(mzv_character<Q>());
    const auto alphabet = nonpositive_alphabet(1, {1, 2});
    for (const auto& u : all_words(alphabet, static_cast<std::size_t>(w - 1), 1)) {
      for (const auto& v : all_words(alphabet, static_cast<std::size_t>(w) - u.size(), 1)) {
        const Q lhs = constant_term(session.plus(u, 1)) * constant_term(session.plus(v, 1));
        const Q rhs = constant_term(session.plus(quasi_shuffle(u, v), 1));
        result.add(value_check(pair_name(u, v), "quasi-shuffle-values", lhs, rhs));
      }
    }
  }

  auto add_generating = [&](std::size_t k, std::vector<Q> r, std::int64_t order) {
    const auto g = generating_check<Q>(k, r, order);
    Json lhs = Json::array(), rhs = Json::array();
    for (const auto& x : g.series_side) lhs.push_back(to_json(x));
    for (const auto& x : g.value_side) rhs.push_back(to_json(x));
    std::string name = "0_" + std::to_string(k);
    result.add(check_json(name, "generating-function", g.pass, lhs, rhs));
  };
  add_generating(1, {Q(1)}, 2 * w);
  add_generating(2, {Q(1), Q(2)}, w);

  const Q sym_a = symmetrized_zero<Q>(2, {Q(1), Q(3)});
  const Q sym_b = symmetrized_zero<Q>(2, {Q(2), Q(5)});
  result.add(value_check("0_2", "symmetrization", sym_a, sym_b));
  result.add(value_check("0_2", "symmetrization-limit", sym_a, zz));

  for (std::int64_t n = 0; n <= w; ++n) {
    for (const auto& r : std::vector<std::pair<Q, Q>>{{Q(1), Q(1)}, {Q(1), Q(2)}}) {
      const auto a = two_var_an_check<Q>(n, r.first, r.second);
      result.add(check_json("a_" + std::to_string(n) + "(" + r.first.to_string() + "," + r.second.to_string() + ")",
                            "two-variable-coefficient", a.pass, to_json(a.series_side), to_json(a.formula_side)));
    }
  }

  // Equal directions delta: the all-zeros value does not depend on delta.
  {
    const auto d = DeltaRationalFunction::delta();
    const auto v = renorm_directional<DeltaRationalFunction>({0, 0}, {d, d});
    result.add(check_json("(0,d)(0,d)", "direction-limit-stability", v.is_polynomial() && v.numerator().is_constant(),
                          to_json(v), to_json(Q(3, 8))));
  }

  // d/deps Z(s; r) = sum_i r_i Z(s - e_i; r).
  {
    const auto alphabet = nonpositive_alphabet(1, {1, 2});
    const std::int64_t precision = 3;
    for (const auto& x : all_words(alphabet, static_cast<std::size_t>(std::min<std::int64_t>(w, 3)), 1)) {
      const auto arg = MZVArgument<Q>::from_word(x);
      const auto lhs = derive(regularized_expansion(arg, precision + 1));
      auto rhs = RationalSeries::zero(precision);
      for (std::size_t i = 0; i < arg.depth(); ++i) {
        auto shifted = arg.s;
        shifted[i] -= 1;
        rhs += regularized_expansion(MZVArgument<Q>(shifted, arg.r), precision) * arg.r[i];
      }
      result.add(to_json(make_check<Q>(to_text(x), "character-differential", lhs, rhs)));
    }
  }

  // Floating-point cross-check against direct partial sums.
  {
    const auto alphabet = nonpositive_alphabet(2, {1});
    for (const auto& x : all_words(alphabet, static_cast<std::size_t>(std::min<std::int64_t>(w, 2)), 1)) {
      const auto arg = MZVArgument<Q>::from_word(x);
      const auto series = regularized_expansion(arg, 16);
      for (double eps0 : {-0.1, -0.05}) {
        std::vector<double> r;
        for (const auto& q : arg.r) r.push_back(q.to_double());
        const auto oracle = numeric_oracle(arg.s, r, eps0, 20000);
        const double value = evaluate(series, eps0);
        const double rel = std::abs(value - oracle.value) / std::abs(oracle.value);
        result.add(check_json(to_text(x) + "@" + std::to_string(eps0), "numeric", rel < 1e-6, Json(value),
                              Json(oracle.value)));
      }
    }
  }
  return result;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "hopf") return hopf_suite(options);
  if (name == "rota-baxter") return rota_baxter_suite(options);
  if (name == "birkhoff") return birkhoff_suite(options);
  if (name == "differential") return differential_suite(options);
  if (name == "mzv") return mzv_suite(options);
  if (name == "all") {
    SuiteResult all{"all", {}, 0};
    for (const auto& n : suite_names()) {
      if (n == "all") continue;
      all.merge(run_suite(n, options));
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace rmzv
