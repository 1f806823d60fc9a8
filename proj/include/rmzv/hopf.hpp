#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rmzv/errors.hpp"
#include "rmzv/rational.hpp"
#include "rmzv/rational_function.hpp"

namespace rmzv {

/// Direction domains: positive rationals, or polynomials in delta with
/// nonnegative coefficients (positive for every small delta > 0).
template <class D>
struct DirectionTraits;

template <>
struct DirectionTraits<BigRational> {
  static bool is_positive(const BigRational& r) { return r.sign() > 0; }
  static std::string to_string(const BigRational& r) { return r.to_string(); }
  static BigRational parse(std::string_view text) { return BigRational::parse(text); }
};

template <>
struct DirectionTraits<DeltaRationalFunction> {
  static bool is_positive(const DeltaRationalFunction& r) { return r.is_positive_direction(); }
  static std::string to_string(const DeltaRationalFunction& r) { return r.to_string(); }
  static DeltaRationalFunction parse(std::string_view text) { return parse_delta_function(text); }
};

/// The generator f<s;r> of the letter semigroup: exponent s, direction r.
template <class D>
struct Letter {
  std::int64_t s = 0;
  D r{1};

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Semigroup law (s, r)(s', r') = (s + s', r + r').
template <class D>
Letter<D> letter_mul(const Letter<D>& a, const Letter<D>& b) {
  return Letter<D>{a.s + b.s, a.r + b.r};
}

/// A pure tensor a_1 (x) ... (x) a_m of letters; the empty word is the unit.
template <class D>
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter<D>> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter<D>> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter<D>& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter<D>>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word prefix(std::size_t n) const { return Word(std::vector<Letter<D>>(letters_.begin(), letters_.begin() + n)); }
  Word suffix_from(std::size_t i) const { return Word(std::vector<Letter<D>>(letters_.begin() + i, letters_.end())); }

  Word prepended(const Letter<D>& a) const {
    std::vector<Letter<D>> v;
    v.reserve(letters_.size() + 1);
    v.push_back(a);
    v.insert(v.end(), letters_.begin(), letters_.end());
    return Word(std::move(v));
  }

  Word with_letter(std::size_t i, Letter<D> a) const {
    Word w = *this;
    w.letters_[i] = std::move(a);
    return w;
  }

  /// Every exponent is <= 0.
  bool in_nonpositive_sector() const {
    for (const auto& a : letters_)
      if (a.s > 0) return false;
    return true;
  }

  friend bool operator==(const Word&, const Word&) = default;
  /// Length first, then lexicographic on (s, r).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (auto c = a.letters_[i].s <=> b.letters_[i].s; c != 0) return c;
      if (auto c = a.letters_[i].r <=> b.letters_[i].r; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Letter<D>> letters_;
};

/// Finite linear combination of words with coefficients in D. Zero
/// coefficients are never stored.
template <class D>
class HopfElement {
 public:
  using Terms = std::map<Word<D>, D>;

  HopfElement() = default;
  HopfElement(const Word<D>& w) { add(w, D(1)); }  // NOLINT(google-explicit-constructor)
  HopfElement(const Word<D>& w, D coeff) { add(w, std::move(coeff)); }

  static HopfElement unit() { return HopfElement(Word<D>{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  D coefficient(const Word<D>& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? D(0) : it->second;
  }

  void add(const Word<D>& w, const D& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  HopfElement& operator+=(const HopfElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  HopfElement& operator-=(const HopfElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  HopfElement& operator*=(const D& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
  }
  friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
  friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
  friend HopfElement operator*(HopfElement a, const D& c) { return a *= c; }
  friend HopfElement operator*(const D& c, HopfElement a) { return a *= c; }

  friend bool operator==(const HopfElement&, const HopfElement&) = default;

  /// a (x) this: prepends the letter to every word.
  HopfElement prepended(const Letter<D>& a) const {
    HopfElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w.prepended(a), c);
    return r;
  }

 private:
  Terms terms_;
};

/// Element of H (x) H: linear combination of word pairs.
template <class D>
class TensorElement {
 public:
  using Key = std::pair<Word<D>, Word<D>>;
  using Terms = std::map<Key, D>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word<D>& left, const Word<D>& right, const D& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{left, right}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorElement& operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  Terms terms_;
};

// --- product ---------------------------------------------------------------

namespace detail {

template <class D>
HopfElement<D> quasi_shuffle_suffixes(const Word<D>& u, const Word<D>& v) {
  // table[i][j] = u[i..] * v[j..], filled from the back.
  const std::size_t m = u.size(), n = v.size();
  std::vector<std::vector<HopfElement<D>>> table(m + 1, std::vector<HopfElement<D>>(n + 1));
  for (std::size_t i = m + 1; i-- > 0;) {
    for (std::size_t j = n + 1; j-- > 0;) {
      if (i == m) {
        table[i][j] = HopfElement<D>(v.suffix_from(j));
      } else if (j == n) {
        table[i][j] = HopfElement<D>(u.suffix_from(i));
      } else {
        HopfElement<D> r = table[i + 1][j].prepended(u[i]);
        r += table[i][j + 1].prepended(v[j]);
        r += table[i + 1][j + 1].prepended(letter_mul(u[i], v[j]));
        table[i][j] = std::move(r);
      }
    }
  }
  return table[0][0];
}

}  // namespace detail

/// Quasi-shuffle product of words:
/// a * b = a1 (x) (a' * b) + b1 (x) (a * b') + (a1 b1) (x) (a' * b'),
/// with the empty word as identity.
template <class D>
HopfElement<D> quasi_shuffle(const Word<D>& u, const Word<D>& v) {
  return detail::quasi_shuffle_suffixes(u, v);
}

template <class D>
HopfElement<D> quasi_shuffle(const HopfElement<D>& x, const HopfElement<D>& y) {
  HopfElement<D> r;
  for (const auto& [u, a] : x.terms()) {
    for (const auto& [v, b] : y.terms()) {
      D c = a;
      c *= b;
      r += quasi_shuffle(u, v) * c;
    }
  }
  return r;
}

/// Mixable shuffles by direct enumeration: pairs of order-preserving
/// injections of the positions of u and v into [l] whose images cover [l];
/// a slot hit by both receives the merged letter.
template <class D>
HopfElement<D> mixable_shuffle_direct(const Word<D>& u, const Word<D>& v) {
  const std::size_t m = u.size(), n = v.size();
  if (m + n > 24) throw std::invalid_argument("mixable_shuffle_direct: words too long to enumerate");
  HopfElement<D> result;
  auto masks_with_popcount = [](std::size_t len, std::size_t count) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask)
      if (static_cast<std::size_t>(__builtin_popcount(mask)) == count) out.push_back(mask);
    return out;
  };
  for (std::size_t len = std::max(m, n); len <= m + n; ++len) {
    const std::uint32_t full = len == 0 ? 0u : ((1u << len) - 1u);
    const auto us = masks_with_popcount(len, m);
    const auto vs = masks_with_popcount(len, n);
    for (auto mu : us) {
      for (auto mv : vs) {
        if ((mu | mv) != full) continue;
        std::vector<Letter<D>> letters;
        std::size_t iu = 0, iv = 0;
        for (std::size_t slot = 0; slot < len; ++slot) {
          const bool hu = (mu >> slot) & 1u, hv = (mv >> slot) & 1u;
          if (hu && hv) {
            letters.push_back(letter_mul(u[iu++], v[iv++]));
          } else if (hu) {
            letters.push_back(u[iu++]);
          } else {
            letters.push_back(v[iv++]);
          }
        }
        result.add(Word<D>(std::move(letters)), D(1));
      }
    }
  }
  return result;
}

// --- coproduct ---------------------------------------------------------------

/// Deconcatenation: sum over i = 0..m of (a_1..a_i) (x) (a_{i+1}..a_m).
template <class D>
TensorElement<D> coproduct(const Word<D>& w) {
  TensorElement<D> t;
  for (std::size_t i = 0; i <= w.size(); ++i) t.add(w.prefix(i), w.suffix_from(i), D(1));
  return t;
}

template <class D>
TensorElement<D> coproduct(const HopfElement<D>& x) {
  TensorElement<D> t;
  for (const auto& [w, c] : x.terms()) {
    for (std::size_t i = 0; i <= w.size(); ++i) t.add(w.prefix(i), w.suffix_from(i), c);
  }
  return t;
}

/// Coproduct minus the primitive terms w (x) 1 and 1 (x) w; every factor has
/// length in [1, |w| - 1]. Rejects the empty word.
template <class D>
std::vector<std::pair<Word<D>, Word<D>>> reduced_coproduct(const Word<D>& w) {
  if (w.empty()) throw std::invalid_argument("reduced coproduct of the unit word");
  std::vector<std::pair<Word<D>, Word<D>>> out;
  for (std::size_t i = 1; i < w.size(); ++i) out.emplace_back(w.prefix(i), w.suffix_from(i));
  return out;
}

/// Componentwise product in H (x) H.
template <class D>
TensorElement<D> quasi_shuffle(const TensorElement<D>& x, const TensorElement<D>& y) {
  TensorElement<D> r;
  for (const auto& [kx, a] : x.terms()) {
    for (const auto& [ky, b] : y.terms()) {
      const auto left = quasi_shuffle(kx.first, ky.first);
      const auto right = quasi_shuffle(kx.second, ky.second);
      D c = a;
      c *= b;
      for (const auto& [wl, cl] : left.terms()) {
        for (const auto& [wr, cr] : right.terms()) {
          D t = c;
          t *= cl;
          t *= cr;
          r.add(wl, wr, t);
        }
      }
    }
  }
  return r;
}

/// Projection onto the scalar summand.
template <class D>
D counit(const HopfElement<D>& x) {
  return x.coefficient(Word<D>{});
}

/// (counit (x) id) applied to a tensor.
template <class D>
HopfElement<D> counit_left(const TensorElement<D>& t) {
  HopfElement<D> r;
  for (const auto& [k, c] : t.terms())
    if (k.first.empty()) r.add(k.second, c);
  return r;
}

/// (id (x) counit) applied to a tensor.
template <class D>
HopfElement<D> counit_right(const TensorElement<D>& t) {
  HopfElement<D> r;
  for (const auto& [k, c] : t.terms())
    if (k.second.empty()) r.add(k.first, c);
  return r;
}

// --- derivation --------------------------------------------------------------

/// Letter derivation d(s, r) = r (s - 1, r).
template <class D>
std::pair<D, Letter<D>> letter_derivation(const Letter<D>& a) {
  return {a.r, Letter<D>{a.s - 1, a.r}};
}

/// Leibniz extension of the letter derivation over tensor positions.
template <class D>
HopfElement<D> hopf_derivation(const Word<D>& w) {
  HopfElement<D> r;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto [c, a] = letter_derivation(w[i]);
    r.add(w.with_letter(i, std::move(a)), c);
  }
  return r;
}

template <class D>
HopfElement<D> hopf_derivation(const HopfElement<D>& x) {
  HopfElement<D> r;
  for (const auto& [w, c] : x.terms()) r += hopf_derivation(w) * c;
  return r;
}

/// (d (x) id + id (x) d) applied to a tensor.
template <class D>
TensorElement<D> tensor_derivation(const TensorElement<D>& t) {
  TensorElement<D> r;
  for (const auto& [k, c] : t.terms()) {
    const auto dl = hopf_derivation(k.first), dr = hopf_derivation(k.second);
    for (const auto& [w, a] : dl.terms()) {
      D x = c;
      x *= a;
      r.add(w, k.second, x);
    }
    for (const auto& [w, a] : dr.terms()) {
      D x = c;
      x *= a;
      r.add(k.first, w, x);
    }
  }
  return r;
}

// --- text syntax -------------------------------------------------------------

/// "(s1,r1)(s2,r2)..."; the empty word prints as "1".
template <class D>
std::string to_text(const Word<D>& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& a : w) out += "(" + std::to_string(a.s) + "," + DirectionTraits<D>::to_string(a.r) + ")";
  return out;
}

/// Parses "(s1,r1)(s2,r2)..." ("" or "1" for the unit). Directions must be
/// positive.
template <class D>
Word<D> parse_word(std::string_view text) {
  std::vector<Letter<D>> letters;
  std::string compact;
  for (char ch : text)
    if (ch != ' ') compact += ch;
  std::string_view s = compact;
  if (s.empty() || s == "1") return Word<D>{};
  while (!s.empty()) {
    if (s.front() != '(') throw ParseError("expected '(' in word '" + compact + "'");
    // The direction may itself contain parentheses: match the closing one.
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string_view::npos) throw ParseError("unbalanced letter in '" + compact + "'");
    auto body = s.substr(1, close - 1);
    const auto comma = body.find(',');
    if (comma == body.npos) throw ParseError("letter without direction in '" + compact + "'");
    const auto exponent = BigRational::parse(body.substr(0, comma));
    if (!exponent.is_integer()) throw ParseError("non-integer exponent in '" + compact + "'");
    D r = DirectionTraits<D>::parse(body.substr(comma + 1));
    if (!DirectionTraits<D>::is_positive(r)) throw ParseError("direction must be positive in '" + compact + "'");
    letters.push_back(Letter<D>{exponent.numerator().get_si(), std::move(r)});
    s.remove_prefix(close + 1);
  }
  return Word<D>(std::move(letters));
}

}  // namespace rmzv
