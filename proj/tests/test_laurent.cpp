#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rmzv/errors.hpp"
#include "rmzv/laurent.hpp"
#include "rmzv/verify.hpp"

using namespace rmzv;
using Q = BigRational;
using S = RationalSeries;

namespace {

S series(std::int64_t lo, std::vector<Q> c, std::int64_t prec) { return S(lo, std::move(c), prec); }

void check_coeffs(const S& a, std::int64_t lo, const std::vector<Q>& expected, std::int64_t prec) {
  CHECK(a.precision() == prec);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CAPTURE(i);
    CHECK(a.coefficient(lo + static_cast<std::int64_t>(i)) == expected[i]);
  }
  for (std::int64_t k = lo - 3; k < lo; ++k) CHECK(a.coefficient(k).is_zero());
}

// Expansion of Z(0; eps): -1/eps - 1/2 - eps/12 + 0 eps^2.
const S z0 = series(-1, {Q(-1), Q(-1, 2), Q(-1, 12), Q(0)}, 3);

}  // namespace

TEST_CASE("series construction and windows") {
  const auto zero = S::zero(4);
  CHECK(zero.is_zero());
  CHECK(zero.precision() == 4);
  CHECK(S::one(3).coefficient(0) == Q(1));
  CHECK_THROWS_AS(S::one(3).coefficient(3), InsufficientPrecision);
  CHECK_THROWS_AS(series(0, {Q(1)}, -1), std::invalid_argument);
  const auto padded = series(-2, {Q(0), Q(1)}, 2);
  CHECK(padded.min_order() == -1);
  CHECK(padded.coefficient(1) == Q(0));
  CHECK(z0.truncated(1).precision() == 1);
  CHECK(z0.truncated(10).precision() == 3);
}

TEST_CASE("series addition") {
  const auto a = series(-1, {Q(-1), Q(-1, 2)}, 1);
  const auto b = series(-1, {Q(1)}, 5);
  check_coeffs(a + b, 0, {Q(-1, 2)}, 1);
  CHECK((a + S::zero(7)) == a);
  const auto c = series(-2, {Q(1), Q(0), Q(0), Q(0), Q(0)}, 3);
  const auto d = series(0, {Q(1)}, 1);
  check_coeffs(c + d, -2, {Q(1), Q(0), Q(1)}, 1);
  CHECK((z0 - z0).is_zero());
}

TEST_CASE("series multiplication") {
  const auto z0_doubled = series(-1, {Q(-1, 2), Q(-1, 2), Q(-1, 6)}, 2);
  const auto product = z0.truncated(2) * z0_doubled;
  check_coeffs(product, -2, {Q(1, 2), Q(3, 4), Q(11, 24)}, 1);
  CHECK((z0 * S::one(10)) == z0);
  const auto inv = series(-1, {Q(1)}, 10), eps = series(1, {Q(1)}, 10);
  check_coeffs(inv * eps, 0, {Q(1)}, 9);
}

TEST_CASE("pole part, finite part and constant term") {
  check_coeffs(pole_part(z0), -1, {Q(-1), Q(0), Q(0), Q(0)}, 3);
  CHECK(pole_part(series(0, {Q(1), Q(2)}, 2)).is_zero());
  const auto e = series(-2, {Q(1, 2), Q(3, 4), Q(11, 24)}, 1);
  check_coeffs(pole_part(e), -2, {Q(1, 2), Q(3, 4), Q(0)}, 1);
  check_coeffs(finite_part(z0), 0, {Q(-1, 2), Q(-1, 12), Q(0)}, 3);
  CHECK(finite_part(series(-2, {Q(1), Q(1)}, 0)).is_zero());
  check_coeffs(finite_part(e), 0, {Q(11, 24)}, 1);
  CHECK(constant_term(z0) == Q(-1, 2));
  CHECK(constant_term(series(1, {Q(1)}, 3)) == Q(0));
  CHECK(constant_term(finite_part(e)) == Q(11, 24));
  CHECK_THROWS_AS(constant_term(series(-1, {Q(1)}, 0)), InsufficientPrecision);
  CHECK_THROWS_AS(pole_part(series(-3, {Q(1), Q(2)}, -1)), IncompletePolePart);
  // The pole part is exact, so it can be lifted to any window.
  CHECK(pole_part(z0, 20).precision() == 20);
  CHECK(pole_part(z0, 20).coefficient(15) == Q(0));
}

TEST_CASE("derivation on rational coefficients") {
  check_coeffs(derive(series(-1, {Q(1)}, 4)), -2, {Q(-1)}, 3);
  // -1/eps + sum zeta(-i) eps^i / i!  ->  1/eps^2 + sum_{i>=1} zeta(-i) eps^{i-1}/(i-1)!.
  const auto z = series(-1, {Q(-1), Q(-1, 2), Q(-1, 12), Q(0), Q(1, 120) / Q(6)}, 4);
  check_coeffs(derive(z), -2, {Q(1), Q(0), Q(-1, 12), Q(0), Q(1, 240)}, 3);
}

TEST_CASE("derivation on Q[T] coefficients") {
  const auto T = Polynomial::variable();
  const auto t2 = LogSeries::monomial(T * T, 0, 3);
  const auto d = derive(t2);
  CHECK(d.min_order() == -1);
  CHECK(d.coefficient(-1) == T * Q(2));
  CHECK(d.coefficient(0).is_zero());
  CHECK(to_text(d) == "(2*T)·eps^-1 + O(eps^2)");
  // d/deps T = 1/eps is a pole although T is regular.
  const auto t = LogSeries::monomial(T, 0, 2);
  CHECK(derive(pole_part(t)).is_zero());
  CHECK(pole_part(derive(t)).coefficient(-1) == Polynomial(1));
}

TEST_CASE("text rendering") {
  CHECK(to_text(series(-2, {Q(1, 2), Q(3, 4), Q(11, 24)}, 1)) == "1/2·eps^-2 + 3/4·eps^-1 + 11/24 + O(eps^1)");
  CHECK(to_text(series(0, {Q(-1, 2), Q(-1, 12)}, 2)) == "-1/2 + -1/12·eps + O(eps^2)");
  CHECK(to_text(S::zero(2)) == "0 + O(eps^2)");
}

TEST_CASE("rota-baxter identity, idempotence and leibniz on seeded random series") {
  Rng rng(2024);
  for (int t = 0; t < 300; ++t) {
    const auto x = random_series(rng, -2, 2, 6), y = random_series(rng, -2, 2, 6);
    CAPTURE(to_text(x));
    CAPTURE(to_text(y));
    CHECK(rota_baxter_identity_holds(x, y));
    CHECK(pole_part(pole_part(x)) == pole_part(x));
    CHECK(agree_on_common_window(pole_part(x) + finite_part(x), x));
    CHECK(agree_on_common_window(derive(x * y), derive(x) * y + x * derive(y)));
    CHECK(agree_on_common_window(derive(pole_part(x)), pole_part(derive(x))));
  }
}

TEST_CASE("precision never overstates what is known") {
  // Perturbing an input beyond its window must not change the product on the
  // product's declared window.
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto x = random_series(rng, -2, 2, 6), y = random_series(rng, -2, 2, 6);
    auto coeffs = x.coefficients();
    coeffs.push_back(Q(17, 3));
    coeffs.push_back(Q(-5));
    const auto x_longer = S(x.min_order(), coeffs, x.precision() + 2);
    CHECK(agree_on_common_window(x * y, x_longer * y));
    CHECK((x * y).precision() <= (x_longer * y).precision());
  }
}
