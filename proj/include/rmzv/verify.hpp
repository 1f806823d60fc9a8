#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rmzv/hopf.hpp"
#include "rmzv/laurent.hpp"
#include "rmzv/serialize.hpp"

namespace rmzv {

/// Seeded generator whose draws do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  BigRational small_rational() { return BigRational(uniform(-5, 5), uniform(1, 4)); }

 private:
  std::mt19937_64 engine_;
};

/// All words over `alphabet` with length in [min_len, max_len], shortest first.
template <class D>
std::vector<Word<D>> all_words(const std::vector<Letter<D>>& alphabet, std::size_t max_len, std::size_t min_len = 0) {
  std::vector<Word<D>> out;
  std::vector<Word<D>> layer{Word<D>{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Word<D>> next;
    for (const auto& w : layer) {
      for (const auto& a : alphabet) {
        auto letters = w.letters();
        letters.push_back(a);
        next.emplace_back(std::move(letters));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Letters (s, r) with -max_abs_s <= s <= 0 and r from `directions`.
std::vector<Letter<BigRational>> nonpositive_alphabet(std::int64_t max_abs_s, const std::vector<std::int64_t>& directions);

template <class D>
Word<D> random_word(Rng& rng, const std::vector<Letter<D>>& alphabet, std::size_t len) {
  std::vector<Letter<D>> letters;
  for (std::size_t i = 0; i < len; ++i)
    letters.push_back(alphabet[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(alphabet.size()) - 1))]);
  return Word<D>(std::move(letters));
}

/// Random series with min order in [lowest, 1] and precision in [lo_prec, hi_prec].
RationalSeries random_series(Rng& rng, std::int64_t lowest, std::int64_t lo_prec, std::int64_t hi_prec);

struct SuiteOptions {
  std::int64_t max_weight = 3;
  std::uint64_t seed = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<Json> reports;
  std::size_t failures = 0;
  bool pass() const { return failures == 0; }
  void add(Json report);
  void merge(SuiteResult other);
};

/// Suites: hopf, rota-baxter, birkhoff, differential, mzv, all.
const std::vector<std::string>& suite_names();

/// Runs a named property suite. `max_weight` bounds the total word length
/// of the words (or word pairs) examined. Throws std::invalid_argument for
/// an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

SuiteResult hopf_suite(const SuiteOptions& options);
SuiteResult rota_baxter_suite(const SuiteOptions& options);
SuiteResult birkhoff_suite(const SuiteOptions& options);
SuiteResult differential_suite(const SuiteOptions& options);
SuiteResult mzv_suite(const SuiteOptions& options);

/// Rota-Baxter identity of weight -1 on the common window:
/// P(x)P(y) = P(xP(y)) + P(P(x)y) - P(xy).
template <Coefficient C>
bool rota_baxter_identity_holds(const TruncatedLaurentSeries<C>& x, const TruncatedLaurentSeries<C>& y) {
  const auto px = pole_part(x), py = pole_part(y);
  const auto lhs = px * py;
  const auto rhs = pole_part(x * py) + pole_part(px * y) - pole_part(x * y);
  return agree_on_common_window(lhs, rhs);
}

}  // namespace rmzv
