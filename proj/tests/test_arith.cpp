#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rmzv/bernoulli.hpp"
#include "rmzv/errors.hpp"
#include "rmzv/polynomial.hpp"
#include "rmzv/rational.hpp"
#include "rmzv/rational_function.hpp"

using namespace rmzv;
using Q = BigRational;
using RF = DeltaRationalFunction;

namespace {

// B_n from sum_{k=0}^{n} C(n+1, k) B_k = 0, computed with a separate binomial table.
std::vector<Q> bernoulli_by_recurrence(int n_max) {
  std::vector<std::vector<Q>> c(n_max + 2, std::vector<Q>(n_max + 2, Q(0)));
  for (int n = 0; n <= n_max + 1; ++n) {
    c[n][0] = Q(1);
    for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : Q(0));
  }
  std::vector<Q> b(n_max + 1, Q(0));
  b[0] = Q(1);
  for (int n = 1; n <= n_max; ++n) {
    Q acc(0);
    for (int k = 0; k < n; ++k) acc += c[n + 1][k] * b[k];
    b[n] = -acc / c[n + 1][n];
  }
  return b;
}

Polynomial poly(std::vector<Q> c) { return Polynomial(std::move(c)); }

}  // namespace

TEST_CASE("rational arithmetic and formatting") {
  CHECK(Q(2, 4) == Q(1, 2));
  CHECK(Q(1, -2).to_string() == "-1/2");
  CHECK(Q(6, 3).to_string() == "2");
  CHECK(Q::parse("-3/9") == Q(-1, 3));
  CHECK(Q::parse(" 7 ") == Q(7));
  CHECK((Q(1, 2) + Q(1, 3)) == Q(5, 6));
  CHECK((Q(1, 2) * Q(2, 3)) == Q(1, 3));
  CHECK(Q(2, 3).inverse() == Q(3, 2));
  CHECK(Q(-2, 3).pow(3) == Q(-8, 27));
  CHECK(Q(2).pow(-2) == Q(1, 4));
  CHECK(Q(1, 3) < Q(1, 2));
  CHECK_THROWS_AS(Q(1) / Q(0), DivisionByZero);
  CHECK_THROWS_AS(Q(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Q(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Q::parse("1/x"), ParseError);
  CHECK(factorial(10) == Q(3628800));
  CHECK(binomial(6, 2) == Q(15));
  CHECK(binomial(3, 5) == Q(0));
}

TEST_CASE("rationals are arbitrary precision") {
  const Q big = factorial(40) / factorial(38);
  CHECK(big == Q(40 * 39));
  CHECK(Q::parse("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");
}

TEST_CASE("bernoulli examples") {
  CHECK(bernoulli(0) == Q(1));
  CHECK(bernoulli(1) == Q(-1, 2));
  CHECK(bernoulli(2) == Q(1, 6));
  CHECK(bernoulli(3) == Q(0));
  CHECK(bernoulli(12) == Q(-691, 2730));
  CHECK_THROWS_AS(bernoulli(-1), std::invalid_argument);
}

TEST_CASE("bernoulli matches the binomial recurrence") {
  const auto oracle = bernoulli_by_recurrence(40);
  for (int n = 0; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(bernoulli(n) == oracle[n]);
    if (n >= 3 && n % 2 == 1) CHECK(bernoulli(n).is_zero());
  }
}

TEST_CASE("zeta at non-positive integers") {
  CHECK(zeta_nonpositive(0) == Q(-1, 2));
  CHECK(zeta_nonpositive(1) == Q(-1, 12));
  CHECK(zeta_nonpositive(2) == Q(0));
  CHECK(zeta_nonpositive(3) == Q(1, 120));
  CHECK(zeta_nonpositive(5) == Q(-1, 252));
}

TEST_CASE("polynomial division and gcd") {
  const auto x = Polynomial::variable();
  const auto p = (x - Polynomial(1)) * (x + Polynomial(2)) * (x * Q(3) + Polynomial(1));
  const auto q = (x - Polynomial(1)) * (x * x + Polynomial(1));
  CHECK(gcd(p, q) == x - Polynomial(1));
  const auto [quo, rem] = p.divmod(q);
  CHECK(quo * q + rem == p);
  CHECK(rem.degree() < q.degree());
  CHECK(gcd(Polynomial(), Polynomial(3)) == Polynomial(1));
  CHECK(p.exact_divide(x - Polynomial(1)) == (x + Polynomial(2)) * (x * Q(3) + Polynomial(1)));
  CHECK_THROWS_AS(p.divmod(Polynomial()), DivisionByZero);
  CHECK_THROWS(p.exact_divide(x * x + Polynomial(5)));
  CHECK(Polynomial().degree() == -1);
  CHECK((x * x * Q(3)).derivative() == x * Q(6));
  CHECK(poly({Q(1), Q(2)}).evaluate(Q(1, 2)) == Q(2));
}

TEST_CASE("polynomial parsing and printing") {
  const auto p = parse_polynomial("3*d^2 - 1/2*d + 1", "d", "\xCE\xB4");
  CHECK(p == poly({Q(1), Q(-1, 2), Q(3)}));
  CHECK(parse_polynomial("2\xCE\xB4+1", "d", "\xCE\xB4") == poly({Q(1), Q(2)}));
  CHECK(parse_polynomial("-d", "d", "") == poly({Q(0), Q(-1)}));
  CHECK_THROWS_AS(parse_polynomial("d^", "d", ""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x+1", "d", ""), ParseError);
  CHECK(parse_polynomial(p.to_string("d"), "d", "") == p);
}

TEST_CASE("rational functions in delta: cancellation and limits") {
  const RF d = RF::delta();
  CHECK(d / d * RF(1) == RF(1));
  CHECK(RF(1) / d * d == RF(1));
  const RF f(poly({Q(1), Q(3)}), poly({Q(2), Q(1)}));
  CHECK((f - f).is_zero());
  CHECK(f.limit_at_zero() == Q(1, 2));
  CHECK_THROWS_AS((RF(1) / d).limit_at_zero(), PoleAtZero);
  const RF g(poly({Q(0), Q(3, 8), Q(3)}), poly({Q(0), Q(1)}));
  CHECK(g.is_polynomial());
  CHECK(g.limit_at_zero() == Q(3, 8));
}

TEST_CASE("rational functions are canonical") {
  const RF a(poly({Q(2), Q(2)}), poly({Q(4), Q(4)}));
  CHECK(a == RF(Q(1, 2)));
  const RF b(poly({Q(1)}), poly({Q(0), Q(2)}));
  CHECK(b.denominator() == poly({Q(0), Q(1)}));
  CHECK(b.numerator() == poly({Q(1, 2)}));
  CHECK_THROWS_AS(RF(poly({Q(1)}), Polynomial()), DivisionByZero);
  CHECK_THROWS_AS(RF(0).inverse(), DivisionByZero);
  CHECK(parse_delta_function("(3d+1)/(d+2)") == RF(poly({Q(1), Q(3)}), poly({Q(2), Q(1)})));
  CHECK(parse_delta_function("1+\xCE\xB4") == RF(poly({Q(1), Q(1)})));
  CHECK(parse_delta_function(b.to_string()) == b);
}

TEST_CASE("direction positivity") {
  CHECK(RF(2).is_positive_direction());
  CHECK(parse_delta_function("1+d").is_positive_direction());
  CHECK(RF::delta().is_positive_direction());
  CHECK_FALSE(RF(0).is_positive_direction());
  CHECK_FALSE(RF(-1).is_positive_direction());
  CHECK_FALSE(parse_delta_function("1-d").is_positive_direction());
}

TEST_CASE("rational function field axioms on random elements") {
  std::mt19937_64 gen(11);
  auto small = [&gen]() { return Q(static_cast<std::int64_t>(gen() % 7) - 3, static_cast<std::int64_t>(gen() % 3) + 1); };
  auto random_rf = [&]() {
    Polynomial den;
    while (den.is_zero()) den = poly({small(), small(), small()});
    return RF(poly({small(), small(), small()}), den);
  };
  for (int t = 0; t < 200; ++t) {
    const RF a = random_rf(), b = random_rf(), c = random_rf();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a - a == RF(0));
    CHECK(a.denominator().leading() == Q(1));
    CHECK(gcd(a.numerator(), a.denominator()).degree() <= 0);
  }
}
