#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rmzv/hopf.hpp"
#include "rmzv/verify.hpp"

using namespace rmzv;
using Q = BigRational;
using L = Letter<Q>;
using W = Word<Q>;
using H = HopfElement<Q>;
using T = TensorElement<Q>;

namespace {

H sum(std::initializer_list<std::pair<W, Q>> terms) {
  H x;
  for (const auto& [w, c] : terms) x.add(w, c);
  return x;
}

const L a{0, Q(1)}, b{-1, Q(1)}, c{0, Q(2)};

}  // namespace

TEST_CASE("letter semigroup") {
  CHECK(letter_mul(L{0, Q(1)}, L{0, Q(1)}) == L{0, Q(2)});
  CHECK(letter_mul(L{-1, Q(1)}, L{-2, Q(2)}) == L{-3, Q(3)});
}

TEST_CASE("quasi-shuffle examples") {
  CHECK(quasi_shuffle(W{a}, W{a}) == sum({{W{a, a}, Q(2)}, {W{L{0, Q(2)}}, Q(1)}}));
  CHECK(quasi_shuffle(W{}, W{a, b}) == H(W{a, b}));
  const L m2{-2, Q(2)};
  const auto expected = sum({{W{b, a, m2}, Q(1)},
                             {W{a, b, m2}, Q(1)},
                             {W{a, m2, b}, Q(1)},
                             {W{a, L{-3, Q(3)}}, Q(1)},
                             {W{L{-1, Q(2)}, m2}, Q(1)}});
  CHECK(quasi_shuffle(W{b}, W{a, m2}) == expected);
  CHECK(mixable_shuffle_direct(W{b}, W{a, m2}) == expected);
}

TEST_CASE("mixable shuffle enumeration") {
  CHECK(mixable_shuffle_direct(W{a}, W{b}).size() == 3);
  CHECK(mixable_shuffle_direct(W{}, W{a, c}) == H(W{a, c}));
  CHECK(mixable_shuffle_direct(W{a}, W{b, c}).size() == 5);
  // Words of length 2 and 2: 6 shuffles, 6 one-merge, 1 two-merge terms.
  CHECK(mixable_shuffle_direct(W{a, b}, W{c, L{-2, Q(1)}}).size() == 13);
}

TEST_CASE("coproduct and counit") {
  T one;
  one.add(W{}, W{}, Q(1));
  CHECK(coproduct(W{}) == one);
  T da;
  da.add(W{}, W{a}, Q(1));
  da.add(W{a}, W{}, Q(1));
  CHECK(coproduct(W{a}) == da);
  T dab;
  dab.add(W{}, W{a, b}, Q(1));
  dab.add(W{a}, W{b}, Q(1));
  dab.add(W{a, b}, W{}, Q(1));
  CHECK(coproduct(W{a, b}) == dab);

  CHECK(reduced_coproduct(W{a}).empty());
  CHECK(reduced_coproduct(W{a, b}) == std::vector<std::pair<W, W>>{{W{a}, W{b}}});
  CHECK(reduced_coproduct(W{a, b, c}) == std::vector<std::pair<W, W>>{{W{a}, W{b, c}}, {W{a, b}, W{c}}});
  CHECK_THROWS_AS(reduced_coproduct(W{}), std::invalid_argument);

  CHECK(counit(H::unit()) == Q(1));
  CHECK(counit(H(W{a, b})) == Q(0));
  CHECK(counit(sum({{W{}, Q(3)}, {W{a}, Q(2)}})) == Q(3));
}

TEST_CASE("derivation examples") {
  CHECK(hopf_derivation(W{a}) == H(W{b}));
  CHECK(hopf_derivation(W{a, c}) == sum({{W{b, c}, Q(1)}, {W{a, L{-1, Q(2)}}, Q(2)}}));
  CHECK(hopf_derivation(W{}).is_zero());
  CHECK(letter_derivation(L{-2, Q(3, 2)}) == std::pair<Q, L>{Q(3, 2), L{-3, Q(3, 2)}});
}

TEST_CASE("word ordering, text and parsing") {
  CHECK(W{a} < W{a, a});
  CHECK(W{b} < W{a});
  CHECK(to_text(W{a, L{-1, Q(1, 2)}}) == "(0,1)(-1,1/2)");
  CHECK(to_text(W{}) == "1");
  CHECK(parse_word<Q>("(0,1)(-1,1/2)") == W{a, L{-1, Q(1, 2)}});
  CHECK(parse_word<Q>(" ( 0 , 2 ) ") == W{c});
  CHECK(parse_word<Q>("1") == W{});
  CHECK_THROWS(parse_word<Q>("(0,1"));
  CHECK_THROWS(parse_word<Q>("(1/2,1)"));
  CHECK_THROWS(parse_word<Q>("(0,-1)"));
  const auto wd = parse_word<DeltaRationalFunction>("(0,1+d)(-1,(d)/(2))");
  CHECK(wd.size() == 2);
  CHECK(wd[0].r == parse_delta_function("1+d"));
}

TEST_CASE("exhaustive hopf axioms over a three-letter alphabet") {
  const std::vector<L> alphabet{a, b, c};
  const auto words = all_words(alphabet, 4);
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.size() + v.size() > 4) continue;
      CAPTURE(to_text(u));
      CAPTURE(to_text(v));
      const auto p = quasi_shuffle(u, v);
      CHECK(p == mixable_shuffle_direct(u, v));
      CHECK(p == quasi_shuffle(v, u));
      CHECK(coproduct(p) == quasi_shuffle(coproduct(u), coproduct(v)));
      CHECK(hopf_derivation(p) == quasi_shuffle(hopf_derivation(H(u)), H(v)) + quasi_shuffle(H(u), hopf_derivation(H(v))));
      for (const auto& [w, k] : p.terms()) {
        CHECK(w.size() <= u.size() + v.size());
        CHECK(w.size() >= std::max(u.size(), v.size()));
        CHECK(w.in_nonpositive_sector());
      }
    }
  }
}

TEST_CASE("associativity, counit and co-leibniz") {
  const std::vector<L> alphabet{a, b, c};
  const auto words = all_words(alphabet, 2);
  for (const auto& u : words)
    for (const auto& v : words)
      for (const auto& w : words)
        CHECK(quasi_shuffle(quasi_shuffle(H(u), H(v)), H(w)) == quasi_shuffle(H(u), quasi_shuffle(H(v), H(w))));
  for (const auto& x : all_words(alphabet, 4)) {
    CHECK(counit_left(coproduct(x)) == H(x));
    CHECK(counit_right(coproduct(x)) == H(x));
    CHECK(coproduct(hopf_derivation(x)) == tensor_derivation(coproduct(x)));
  }
}

TEST_CASE("delta-valued directions") {
  using LD = Letter<DeltaRationalFunction>;
  using WD = Word<DeltaRationalFunction>;
  const auto d = DeltaRationalFunction::delta();
  const LD x{0, d}, y{-1, d + DeltaRationalFunction(1)};
  const auto p = quasi_shuffle(WD{x}, WD{y});
  CHECK(p.size() == 3);
  CHECK(p.coefficient(WD{LD{-1, d * DeltaRationalFunction(2) + DeltaRationalFunction(1)}}) == DeltaRationalFunction(1));
  CHECK(hopf_derivation(WD{x}).coefficient(WD{LD{-1, d}}) == d);
}
