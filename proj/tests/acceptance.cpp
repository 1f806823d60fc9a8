// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rmzv/bernoulli.hpp"
#include "rmzv/birkhoff.hpp"
#include "rmzv/mzv.hpp"
#include "rmzv/verify.hpp"

using namespace rmzv;
using Q = BigRational;
using L = Letter<Q>;
using W = Word<Q>;
using H = HopfElement<Q>;

namespace {

constexpr double kRelativeTolerance = 1e-6;
constexpr std::int64_t kOracleTerms = 20000;
constexpr std::int64_t kEvaluationPrecision = 16;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

bool criterion_1(Outcome& o) {
  const auto s = one_var_series<Q>(0, Q(1), 11);
  for (std::int64_t k = 0; k <= 10; ++k) {
    const Q expected = (k % 2 == 0 ? Q(1) : Q(-1)) * bernoulli(k + 1) / Q(k + 1);
    o.require(s.coefficient(k) * factorial(k) == expected, "zeta(-" + std::to_string(k) + ")");
  }
  o.require(s.coefficient(-1) == Q(-1), "pole coefficient");
  o.detail = o.pass ? "zeta(-k) for k <= 10" : o.detail;
  return o.pass;
}

bool criterion_2(Outcome& o) {
  const auto e = regularized_expansion(MZVArgument<Q>({0, 0}, {Q(1), Q(1)}), 1);
  o.require(e.min_order() == -2, "leading order");
  o.require(e.coefficient(-2) == Q(1, 2) && e.coefficient(-1) == Q(3, 4) && e.coefficient(0) == Q(11, 24),
            "coefficients " + to_text(e));
  o.detail = o.pass ? to_text(e) : o.detail;
  return o.pass;
}

bool criterion_3(Outcome& o) {
  const Q via_delta = renorm_mzv({0, 0});
  const W aa{L{0, Q(1)}, L{0, Q(1)}};
  const Q via_direct = constant_term(zplus_length2_direct(mzv_character<Q>(), aa, 1));
  o.require(via_delta == Q(3, 8), "delta pipeline gave " + via_delta.to_string());
  o.require(via_direct == Q(3, 8), "length-two formula gave " + via_direct.to_string());
  o.detail = o.pass ? "3/8 by both routes" : o.detail;
  return o.pass;
}

bool criterion_4(Outcome& o) {
  const Q z = renorm_mzv({0}), zz = renorm_mzv({0, 0});
  o.require(z * z == Q(1, 4) && Q(2) * zz + z == Q(1, 4), "zeta(0)^2 = 2 zeta(0,0) + zeta(0)");
  DecompositionSession<Q, Q> session(mzv_character<Q>());
  const auto alphabet = nonpositive_alphabet(2, {1, 2});
  std::size_t pairs = 0;
  for (const auto& u : all_words(alphabet, 3, 1)) {
    for (const auto& v : all_words(alphabet, 4 - u.size(), 1)) {
      const auto c = check_plus_multiplicativity(session, u, v, 2);
      o.require(c.pass, c.word);
      ++pairs;
    }
  }
  o.detail = o.pass ? std::to_string(pairs) + " word pairs" : o.detail;
  return o.pass;
}

bool criterion_5(Outcome& o) {
  const std::vector<L> alphabet{{0, Q(1)}, {-1, Q(1)}, {0, Q(2)}};
  const auto words = all_words(alphabet, 5);
  std::size_t exhaustive = 0;
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() + v.size() > 5) continue;
      o.require(quasi_shuffle(u, v) == mixable_shuffle_direct(u, v), to_text(u) + "*" + to_text(v));
      ++exhaustive;
    }
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto u = random_word(rng, alphabet, static_cast<std::size_t>(rng.uniform(0, 3)));
    const auto v = random_word(rng, alphabet, static_cast<std::size_t>(rng.uniform(0, 3)));
    o.require(coproduct(quasi_shuffle(u, v)) == quasi_shuffle(coproduct(u), coproduct(v)),
              "bialgebra " + to_text(u) + "*" + to_text(v));
  }
  o.detail = o.pass ? std::to_string(exhaustive) + " exhaustive pairs, 200 random pairs" : o.detail;
  return o.pass;
}

bool criterion_6(Outcome& o) {
  Rng rng(2);
  for (int t = 0; t < 500; ++t) {
    const auto x = random_series(rng, -2, 2, 6), y = random_series(rng, -2, 2, 6);
    o.require(rota_baxter_identity_holds(x, y), "rota-baxter case " + std::to_string(t));
    o.require(agree_on_common_window(derive(x * y), derive(x) * y + x * derive(y)), "leibniz case " + std::to_string(t));
    o.require(agree_on_common_window(derive(pole_part(x)), pole_part(derive(x))), "commutation case " + std::to_string(t));
  }
  const auto t_series = LogSeries::monomial(Polynomial::variable(), 0, 2);
  const auto dp = derive(pole_part(t_series)), pd = pole_part(derive(t_series));
  o.require(dp.is_zero(), "dP(T) = 0");
  o.require(pd.min_order() == -1 && pd.coefficient(-1) == Polynomial(1) && pd.coefficient(0).is_zero(),
            "P d(T) = 1/eps");
  o.detail = o.pass ? "500 series; dP(T) = 0, Pd(T) = eps^-1" : o.detail;
  return o.pass;
}

bool criterion_7(Outcome& o) {
  DecompositionSession<Q, Q> session(mzv_character<Q>());
  const auto alphabet = nonpositive_alphabet(2, {1, 2});
  const std::int64_t precision = 3;
  std::size_t words = 0;
  for (const auto& x : all_words(alphabet, 3)) {
    const auto r = verify_differential_compatibility(session, x, precision);
    o.require(r.plus.pass, "phi_+ " + to_text(x));
    o.require(r.minus.pass, "phi_- " + to_text(x));
    if (!x.empty()) {
      const auto arg = MZVArgument<Q>::from_word(x);
      const auto lhs = derive(regularized_expansion(arg, precision + 1));
      auto rhs = RationalSeries::zero(precision);
      for (std::size_t i = 0; i < arg.depth(); ++i) {
        auto shifted = arg.s;
        shifted[i] -= 1;
        rhs += regularized_expansion(MZVArgument<Q>(shifted, arg.r), precision) * arg.r[i];
      }
      o.require(agree_on_common_window(lhs, rhs), "character " + to_text(x));
    }
    ++words;
  }
  o.detail = o.pass ? std::to_string(words) + " words" : o.detail;
  return o.pass;
}

bool criterion_8(Outcome& o) {
  struct Case {
    std::size_t k;
    std::vector<Q> r;
    std::int64_t order;
  };
  const std::vector<Case> cases{{1, {Q(1)}, 6}, {2, {Q(1), Q(1)}, 4}, {2, {Q(1), Q(2)}, 3}, {3, {Q(1), Q(1), Q(1)}, 2}};
  for (const auto& c : cases) {
    const auto g = generating_check<Q>(c.k, c.r, c.order);
    o.require(g.pass && g.series_side.size() == static_cast<std::size_t>(c.order) + 1,
              "k=" + std::to_string(c.k) + " N=" + std::to_string(c.order));
  }
  o.detail = o.pass ? "4 cases" : o.detail;
  return o.pass;
}

bool criterion_9(Outcome& o) {
  const Q two = renorm_mzv({0, 0}), three = renorm_mzv({0, 0, 0});
  for (const auto& r : std::vector<std::vector<Q>>{{Q(1), Q(2)}, {Q(2), Q(5)}, {Q(3), Q(1)}})
    o.require(symmetrized_zero<Q>(2, r) == two, "k=2 r=(" + r[0].to_string() + "," + r[1].to_string() + ")");
  for (const auto& r : std::vector<std::vector<Q>>{{Q(1), Q(2), Q(3)}, {Q(2), Q(5), Q(1)}})
    o.require(symmetrized_zero<Q>(3, r) == three, "k=3");
  o.detail = o.pass ? "k=2 value " + two.to_string() + ", k=3 value " + three.to_string() : o.detail;
  return o.pass;
}

bool criterion_10(Outcome& o) {
  for (std::int64_t n = 0; n <= 4; ++n)
    for (const auto& [r1, r2] : std::vector<std::pair<Q, Q>>{{Q(1), Q(1)}, {Q(1), Q(2)}}) {
      const auto c = two_var_an_check<Q>(n, r1, r2);
      o.require(c.pass, "n=" + std::to_string(n) + " r=(" + r1.to_string() + "," + r2.to_string() + ")");
    }
  const auto a0 = two_var_an_check<Q>(0, Q(1), Q(1));
  o.require(a0.series_side == Q(11, 24) && a0.formula_side == Q(3, 8) + Q(1, 12), "a_0 = 11/24 = 3/8 + 1/12");
  o.detail = o.pass ? "n <= 4, two direction pairs" : o.detail;
  return o.pass;
}

bool criterion_11(Outcome& o) {
  const auto alphabet = nonpositive_alphabet(2, {1, 2});
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& x : all_words(alphabet, 2, 1)) {
    const auto arg = MZVArgument<Q>::from_word(x);
    const auto series = regularized_expansion(arg, kEvaluationPrecision);
    std::vector<double> r;
    for (const auto& q : arg.r) r.push_back(q.to_double());
    for (double eps0 : {-0.1, -0.05}) {
      const auto oracle = numeric_oracle(arg.s, r, eps0, kOracleTerms);
      const double rel = std::abs(evaluate(series, eps0) - oracle.value) / std::abs(oracle.value);
      worst = std::max(worst, rel);
      o.require(rel < kRelativeTolerance && oracle.tail_bound < kRelativeTolerance, to_text(x));
      ++count;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu evaluations, worst relative error %.2e", count, worst);
  o.detail = o.pass ? std::string(buf) : o.detail;
  return o.pass;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<bool(Outcome&)> run;
    double time_limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {"riemann values", criterion_1, 1},
      {"double zero expansion", criterion_2, 1},
      {"renormalized double zero", criterion_3, 1},
      {"quasi-shuffle value relation", criterion_4, 120},
      {"hopf axioms", criterion_5, 60},
      {"rota-baxter and differential ring", criterion_6, 30},
      {"differential birkhoff", criterion_7, 120},
      {"generating function", criterion_8, 120},
      {"symmetrization", criterion_9, 120},
      {"two-variable coefficient formula", criterion_10, 60},
      {"float cross-validation", criterion_11, 60},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].run(o);
    } catch (const std::exception& e) {
      ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds > criteria[i].time_limit_seconds) {
      ok = false;
      o.detail += "; over the time limit";
    }
    std::printf("%s %zu %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(), o.detail.c_str(),
                seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
