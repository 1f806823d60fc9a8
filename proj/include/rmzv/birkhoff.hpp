#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "rmzv/hopf.hpp"
#include "rmzv/laurent.hpp"

namespace rmzv {

/// A linear map from words to series that can be asked for any precision:
/// `map(w, p)` must return a series known at least mod eps^p.
template <class D, Coefficient C>
using SeriesMap = std::function<TruncatedLaurentSeries<C>(const Word<D>&, std::int64_t)>;

/// A map phi: H -> R given on words; phi(1) = 1 is enforced here, while
/// multiplicativity is a property the suites verify, not an assumption.
template <class D, Coefficient C>
class Character {
 public:
  using Series = TruncatedLaurentSeries<C>;

  explicit Character(SeriesMap<D, C> word_map, PrecisionBudget budget = PrecisionBudget{1})
      : word_map_(std::move(word_map)), budget_(budget) {}

  const PrecisionBudget& budget() const { return budget_; }

  Series operator()(const Word<D>& w, std::int64_t precision) const {
    if (w.empty()) return Series::one(precision);
    Series s = word_map_(w, precision);
    if (s.precision() < precision)
      throw InsufficientPrecision("character returned a series known mod eps^" + std::to_string(s.precision()) +
                                  ", eps^" + std::to_string(precision) + " requested");
    return s.truncated(precision);
  }

  Series operator()(const HopfElement<D>& x, std::int64_t precision) const {
    Series acc = Series::zero(precision);
    for (const auto& [w, c] : x.terms()) acc += (*this)(w, precision) * C(c);
    return acc;
  }

 private:
  SeriesMap<D, C> word_map_;
  PrecisionBudget budget_;
};

/// f * g (x) = sum over the full deconcatenation coproduct of f(x1) g(x2),
/// known mod eps^precision. The factor precisions are chosen from the
/// reported leading orders so that every product is valid to `precision`.
template <class D, Coefficient C>
TruncatedLaurentSeries<C> convolve(const SeriesMap<D, C>& f, const SeriesMap<D, C>& g, const Word<D>& x,
                                   std::int64_t precision) {
  using Series = TruncatedLaurentSeries<C>;
  Series acc = Series::zero(precision);
  for (std::size_t i = 0; i <= x.size(); ++i) {
    const Word<D> left = x.prefix(i), right = x.suffix_from(i);
    Series a = f(left, precision);
    Series b = g(right, precision - std::min<std::int64_t>(a.min_order(), 0));
    if (a.precision() + b.min_order() < precision) a = f(left, precision - b.min_order());
    acc += (a * b).truncated(precision);
  }
  return acc;
}

/// Owner of one Birkhoff decomposition phi = phi_-^{*-1} * phi_+ over a
/// minimal-subtraction target. Memo entries are write-once; a session is
/// driven by a single thread, distinct sessions are independent.
///
///   phi_-(x) = -P(phi(x) + sum phi_-(x') phi(x''))
///   phi_+(x) = (id - P)(phi(x) + sum phi_-(x') phi(x''))
///
/// with the sums over the reduced coproduct. Counterterms phi_-(x), |x| >= 1,
/// are Laurent polynomials in 1/eps and are held exactly.
template <class D, Coefficient C>
class DecompositionSession {
 public:
  using Series = TruncatedLaurentSeries<C>;

  explicit DecompositionSession(Character<D, C> character) : character_(std::move(character)) {}

  const Character<D, C>& character() const { return character_; }

  /// phi(w) known mod eps^precision, memoized.
  Series phi(const Word<D>& w, std::int64_t precision) {
    auto& by_precision = memo_phi_[w];
    if (auto it = by_precision.lower_bound(precision); it != by_precision.end())
      return it->second.truncated(precision);
    Series s = character_(w, precision);
    by_precision.emplace(precision, s);
    return s;
  }

  /// phi_-(x) represented with window eps^window (exact for any window >= 0).
  Series minus(const Word<D>& x, std::int64_t window = 0) {
    if (window < 0) throw std::invalid_argument("counterterm window must reach eps^0");
    if (x.empty()) return Series::one(window);
    // Reduced-coproduct left factors are exactly the proper prefixes, so
    // filling prefixes by increasing length is a bottom-up evaluation.
    for (std::size_t len = 1; len <= x.size(); ++len) {
      const Word<D> p = x.prefix(len);
      if (memo_minus_.count(p)) continue;
      memo_minus_.emplace(p, -pole_part(bracket(p, 0), 0));
    }
    return pole_part(memo_minus_.at(x), window);
  }

  /// phi_+(x) known mod eps^precision.
  Series plus(const Word<D>& x, std::int64_t precision) {
    if (x.empty()) return Series::one(precision);
    auto& by_precision = memo_plus_[x];
    if (auto it = by_precision.lower_bound(precision); it != by_precision.end())
      return it->second.truncated(precision);
    Series s = finite_part(bracket(x, precision));
    by_precision.emplace(precision, s);
    return s;
  }

  Series plus(const HopfElement<D>& x, std::int64_t precision) {
    Series acc = Series::zero(precision);
    for (const auto& [w, c] : x.terms()) acc += plus(w, precision) * C(c);
    return acc;
  }

  Series minus(const HopfElement<D>& x, std::int64_t window = 0) {
    Series acc = Series::zero(window);
    for (const auto& [w, c] : x.terms()) acc += minus(w, window) * C(c);
    return acc;
  }

  /// phi(x) + sum over the reduced coproduct of phi_-(x') phi(x''), known
  /// mod eps^precision.
  Series bracket(const Word<D>& x, std::int64_t precision) {
    Series acc = phi(x, precision);
    if (x.empty()) return acc;
    for (const auto& [left, right] : reduced_coproduct(x)) {
      const Series& counter = counterterm(left);
      if (counter.is_zero()) continue;
      Series rest = phi(right, precision - counter.min_order());
      const std::int64_t window = std::max<std::int64_t>(0, precision - rest.min_order());
      acc += (pole_part(counter, window) * rest).truncated(precision);
    }
    return acc;
  }

  SeriesMap<D, C> phi_map() {
    return [this](const Word<D>& w, std::int64_t p) { return phi(w, p); };
  }
  SeriesMap<D, C> minus_map() {
    return [this](const Word<D>& w, std::int64_t p) { return minus(w, std::max<std::int64_t>(p, 0)); };
  }
  SeriesMap<D, C> plus_map() {
    return [this](const Word<D>& w, std::int64_t p) { return plus(w, p); };
  }

 private:
  const Series& counterterm(const Word<D>& x) {
    if (!memo_minus_.count(x)) minus(x);
    return memo_minus_.at(x);
  }

  Character<D, C> character_;
  std::map<Word<D>, std::map<std::int64_t, Series>> memo_phi_;
  std::map<Word<D>, Series> memo_minus_;
  std::map<Word<D>, std::map<std::int64_t, Series>> memo_plus_;
};

template <class D, Coefficient C>
TruncatedLaurentSeries<C> birkhoff_minus(DecompositionSession<D, C>& session, const Word<D>& x,
                                         std::int64_t window = 0) {
  return session.minus(x, window);
}

template <class D, Coefficient C>
TruncatedLaurentSeries<C> birkhoff_plus(DecompositionSession<D, C>& session, const Word<D>& x,
                                        std::int64_t precision) {
  return session.plus(x, precision);
}

/// Closed form on a length-2 word:
/// phi_+(ab) = (id - P)(phi(ab) - P(phi(a)) phi(b)).
template <class D, Coefficient C>
TruncatedLaurentSeries<C> zplus_length2_direct(const Character<D, C>& character, const Word<D>& w,
                                               std::int64_t precision) {
  if (w.size() != 2) throw std::invalid_argument("zplus_length2_direct needs a word of length 2");
  const Word<D> a = w.prefix(1), b = w.suffix_from(1);
  auto whole = character(w, precision);
  auto pole_a = pole_part(character(a, 0), 0);
  if (pole_a.is_zero()) return finite_part(whole);
  auto phi_b = character(b, precision - pole_a.min_order());
  auto lifted = pole_part(pole_a, std::max<std::int64_t>(0, precision - phi_b.min_order()));
  return finite_part(whole - (lifted * phi_b).truncated(precision));
}

/// Outcome of one identity check: both sides and whether they agree.
template <Coefficient C>
struct SeriesCheck {
  std::string word;
  std::string check;
  bool pass = false;
  TruncatedLaurentSeries<C> lhs;
  TruncatedLaurentSeries<C> rhs;
};

template <Coefficient C>
SeriesCheck<C> make_check(std::string word, std::string check, TruncatedLaurentSeries<C> lhs,
                          TruncatedLaurentSeries<C> rhs) {
  const bool pass = agree_on_common_window(lhs, rhs);
  return SeriesCheck<C>{std::move(word), std::move(check), pass, std::move(lhs), std::move(rhs)};
}

template <Coefficient C>
struct DifferentialReport {
  SeriesCheck<C> plus;
  SeriesCheck<C> minus;
  bool pass() const { return plus.pass && minus.pass; }
};

/// phi_+(d x) = d/deps phi_+(x) mod eps^precision, and the same for phi_-.
template <class D, Coefficient C>
DifferentialReport<C> verify_differential_compatibility(DecompositionSession<D, C>& session, const Word<D>& x,
                                                        std::int64_t precision) {
  const auto dx = hopf_derivation(x);
  const std::string name = to_text(x);
  auto plus_check = make_check<C>(name, "differential", session.plus(dx, precision),
                                  derive(session.plus(x, precision + 1)));
  // Counterterms are exact Laurent polynomials; compare them on the window
  // ending at eps^0.
  auto minus_check = make_check<C>(name, "differential", session.minus(dx, 0),
                                   derive(session.minus(x, 1)));
  return DifferentialReport<C>{std::move(plus_check), std::move(minus_check)};
}

/// phi_+(u * v) = phi_+(u) phi_+(v) with the left side extended linearly over
/// the quasi-shuffle expansion.
template <class D, Coefficient C>
SeriesCheck<C> check_plus_multiplicativity(DecompositionSession<D, C>& session, const Word<D>& u, const Word<D>& v,
                                           std::int64_t precision) {
  return make_check<C>(to_text(u) + "*" + to_text(v), "multiplicativity", session.plus(quasi_shuffle(u, v), precision),
                       session.plus(u, precision) * session.plus(v, precision));
}

template <class D, Coefficient C>
SeriesCheck<C> check_minus_multiplicativity(DecompositionSession<D, C>& session, const Word<D>& u,
                                            const Word<D>& v) {
  auto a = session.minus(u, 0), b = session.minus(v, 0);
  auto product = session.minus(u, std::max<std::int64_t>(0, -b.min_order())) *
                 session.minus(v, std::max<std::int64_t>(0, -a.min_order()));
  return make_check<C>(to_text(u) + "*" + to_text(v), "multiplicativity", session.minus(quasi_shuffle(u, v), 0),
                       product.truncated(0));
}

/// phi_-(x) has no regular part and phi_+(x) has no pole part.
template <class D, Coefficient C>
SeriesCheck<C> check_range(DecompositionSession<D, C>& session, const Word<D>& x, std::int64_t precision) {
  using Series = TruncatedLaurentSeries<C>;
  auto m = session.minus(x, precision);
  auto p = session.plus(x, precision);
  // lhs collects what must vanish; rhs is the zero it is compared with.
  Series stray = x.empty() ? Series::zero(precision) : finite_part(m) + pole_part(p);
  return make_check<C>(to_text(x), "range", stray, Series::zero(precision));
}

/// (phi_- * phi)(x) = phi_+(x).
template <class D, Coefficient C>
SeriesCheck<C> check_decomposition(DecompositionSession<D, C>& session, const Word<D>& x, std::int64_t precision) {
  auto lhs = convolve<D, C>(session.minus_map(), session.phi_map(), x, precision);
  return make_check<C>(to_text(x), "decomposition", lhs, session.plus(x, precision));
}

}  // namespace rmzv
