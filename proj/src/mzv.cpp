#include "rmzv/mzv.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rmzv/bernoulli.hpp"

namespace rmzv {

namespace {

template <class D>
D power(const D& base, std::int64_t e) {
  D acc(1);
  for (std::int64_t i = 0; i < e; ++i) acc *= base;
  return acc;
}

template <class D>
bool is_positive(const D& r) {
  return DirectionTraits<D>::is_positive(r);
}

}  // namespace

// --- argument ----------------------------------------------------------------

template <class D>
MZVArgument<D>::MZVArgument(std::vector<std::int64_t> exponents, std::vector<D> directions)
    : s(std::move(exponents)), r(std::move(directions)) {
  if (s.empty()) throw std::invalid_argument("MZV argument needs depth >= 1");
  if (s.size() != r.size()) throw std::invalid_argument("exponent and direction vectors differ in length");
  for (auto x : s)
    if (x > 0) throw std::invalid_argument("positive exponent outside the non-positive sector");
  for (const auto& x : r)
    if (!is_positive(x)) throw std::invalid_argument("direction " + DirectionTraits<D>::to_string(x) + " is not positive");
}

template <class D>
MZVArgument<D> MZVArgument<D>::from_word(const Word<D>& w) {
  std::vector<std::int64_t> s;
  std::vector<D> r;
  for (const auto& a : w) {
    s.push_back(a.s);
    r.push_back(a.r);
  }
  return MZVArgument(std::move(s), std::move(r));
}

template <class D>
Word<D> MZVArgument<D>::word() const {
  std::vector<Letter<D>> letters;
  for (std::size_t i = 0; i < s.size(); ++i) letters.push_back(Letter<D>{s[i], r[i]});
  return Word<D>(std::move(letters));
}

template <class D>
std::int64_t MZVArgument<D>::pole_depth() const {
  std::int64_t m = 0;
  for (auto x : s) m += -x + 1;
  return m;
}

// --- expansion plan ----------------------------------------------------------

std::vector<std::vector<std::int64_t>> compositions(std::int64_t total, std::size_t parts) {
  if (parts == 0) return total == 0 ? std::vector<std::vector<std::int64_t>>{{}} : std::vector<std::vector<std::int64_t>>{};
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t last = 0; last <= total; ++last) {
    for (auto head : compositions(total - last, parts - 1)) {
      head.push_back(last);
      out.push_back(std::move(head));
    }
  }
  return out;
}

template <class D>
ExpansionPlan<D> make_expansion_plan(const MZVArgument<D>& arg) {
  const std::size_t k = arg.depth();
  ExpansionPlan<D> plan;
  plan.pole_depth = arg.pole_depth();
  D acc(0);
  for (const auto& r : arg.r) {
    acc += r;
    plan.cumulative_directions.push_back(acc);
  }
  std::vector<std::int64_t> m(k);
  for (std::size_t i = 0; i < k; ++i) {
    m[i] = -arg.s[i];
    plan.compositions.push_back(compositions(m[i], k - i));
  }

  // Walk the Cartesian product of per-index compositions.
  std::map<std::vector<std::int64_t>, BigRational> weights;
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::vector<std::int64_t> b(k, 0);
    BigRational w(1);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& a = plan.compositions[i][pick[i]];
      w *= factorial(m[i]);
      for (std::size_t t = 0; t < a.size(); ++t) {
        w /= factorial(a[t]);
        b[i + t] += a[t];
      }
    }
    weights[b] += w;
    std::size_t i = 0;
    while (i < k && ++pick[i] == plan.compositions[i].size()) pick[i++] = 0;
    if (i == k) break;
  }
  for (auto& [b, w] : weights) plan.slot_terms.emplace_back(b, w);
  return plan;
}

// --- series ------------------------------------------------------------------

template <class D>
TruncatedLaurentSeries<D> one_var_series(std::int64_t m, const D& rho, std::int64_t precision) {
  if (m < 0) throw std::invalid_argument("one_var_series: m must be >= 0");
  if (!is_positive(rho)) throw std::invalid_argument("one_var_series: direction must be positive");
  const std::int64_t lowest = -m - 1;
  if (precision <= lowest) return TruncatedLaurentSeries<D>::zero(precision);
  std::vector<D> c(static_cast<std::size_t>(precision - lowest));
  BigRational lead = factorial(m);
  if ((m + 1) % 2 != 0) lead = -lead;
  c[0] = D(lead) * power(rho, m + 1).inverse();
  D rho_power(1);
  for (std::int64_t j = 0; j < precision; ++j) {
    const BigRational z = zeta_nonpositive(m + j);
    if (!z.is_zero()) c[static_cast<std::size_t>(j - lowest)] = D(z / factorial(j)) * rho_power;
    rho_power *= rho;
  }
  return TruncatedLaurentSeries<D>(lowest, std::move(c), precision);
}

template <class D>
TruncatedLaurentSeries<D> regularized_expansion(const MZVArgument<D>& arg, std::int64_t precision) {
  const auto plan = make_expansion_plan(arg);
  const std::size_t k = arg.depth();
  const std::int64_t factor_precision = std::max<std::int64_t>(precision + plan.pole_depth, 1);
  std::vector<std::map<std::int64_t, TruncatedLaurentSeries<D>>> factors(k);
  auto factor = [&](std::size_t l, std::int64_t b) -> const TruncatedLaurentSeries<D>& {
    auto it = factors[l].find(b);
    if (it == factors[l].end())
      it = factors[l].emplace(b, one_var_series(b, plan.cumulative_directions[l], factor_precision)).first;
    return it->second;
  };
  auto total = TruncatedLaurentSeries<D>::zero(precision);
  for (const auto& [b, weight] : plan.slot_terms) {
    TruncatedLaurentSeries<D> term = factor(0, b[0]);
    for (std::size_t l = 1; l < k; ++l) term *= factor(l, b[l]);
    if (term.precision() < precision) throw std::logic_error("expansion window too small");
    total += term.truncated(precision) * D(weight);
  }
  return total;
}

template <class D>
Character<D, D> mzv_character() {
  return Character<D, D>([](const Word<D>& w, std::int64_t precision) {
    return regularized_expansion(MZVArgument<D>::from_word(w), precision);
  });
}

// --- renormalized values -----------------------------------------------------

template <class D>
D renorm_directional(DecompositionSession<D, D>& session, const std::vector<std::int64_t>& s,
                     const std::vector<D>& r) {
  const MZVArgument<D> arg(s, r);
  return constant_term(session.plus(arg.word(), 1));
}

template <class D>
D renorm_directional(const std::vector<std::int64_t>& s, const std::vector<D>& r) {
  DecompositionSession<D, D> session(mzv_character<D>());
  return renorm_directional(session, s, r);
}

DeltaRationalFunction renorm_mzv_delta(const std::vector<std::int64_t>& s) {
  std::vector<DeltaRationalFunction> r;
  for (auto x : s) r.emplace_back(Polynomial(std::vector<BigRational>{BigRational(x < 0 ? -x : x), BigRational(1)}));
  return renorm_directional<DeltaRationalFunction>(s, r);
}

BigRational renorm_mzv(const std::vector<std::int64_t>& s) { return renorm_mzv_delta(s).limit_at_zero(); }

template <class D>
D symmetrized_zero(std::size_t k, const std::vector<D>& r) {
  if (k == 0) throw std::invalid_argument("symmetrized_zero needs k >= 1");
  if (r.size() != k) throw std::invalid_argument("symmetrized_zero: direction vector must have length k");
  DecompositionSession<D, D> session(mzv_character<D>());
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  const std::vector<std::int64_t> zeros(k, 0);
  D sum(0);
  do {
    std::vector<D> permuted;
    for (auto i : perm) permuted.push_back(r[i]);
    sum += renorm_directional(session, zeros, permuted);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum * D(factorial(static_cast<std::int64_t>(k)).inverse());
}

template <class D>
GeneratingReport<D> generating_check(std::size_t k, const std::vector<D>& r, std::int64_t order) {
  if (order < 0) throw std::invalid_argument("generating_check: order must be >= 0");
  DecompositionSession<D, D> session(mzv_character<D>());
  GeneratingReport<D> report;
  report.k = k;
  report.r = r;
  const MZVArgument<D> zero_arg(std::vector<std::int64_t>(k, 0), r);
  const auto plus = session.plus(zero_arg.word(), order + 1);
  report.pass = true;
  for (std::int64_t n = 0; n <= order; ++n) {
    report.series_side.push_back(plus.coefficient(n));
    D sum(0);
    for (const auto& parts : compositions(n, k)) {
      std::vector<std::int64_t> s(k);
      D weight(1);
      for (std::size_t j = 0; j < k; ++j) {
        s[j] = -parts[j];
        weight *= power(r[j], parts[j]) * D(factorial(parts[j]).inverse());
      }
      sum += renorm_directional(session, s, r) * weight;
    }
    report.value_side.push_back(sum);
    if (!(report.series_side.back() == sum)) report.pass = false;
  }
  return report;
}

template <class D>
CoefficientReport<D> two_var_an_check(std::int64_t n, const D& r1, const D& r2) {
  if (n < 0) throw std::invalid_argument("two_var_an_check: n must be >= 0");
  CoefficientReport<D> report;
  report.n = n;
  report.r1 = r1;
  report.r2 = r2;
  const MZVArgument<D> arg({0, 0}, {r1, r2});
  const auto fp = finite_part(regularized_expansion(arg, n + 1));
  report.series_side = fp.coefficient(n) * D(factorial(n));

  DecompositionSession<D, D> session(mzv_character<D>());
  D sum(0);
  for (std::int64_t i = 0; i <= n; ++i) {
    sum += D(binomial(n, i)) * power(r1, i) * power(r2, n - i) * renorm_directional(session, {-i, i - n}, {r1, r2});
  }
  sum -= power(r2, n + 1) * r1.inverse() * D(zeta_nonpositive(n + 1) / BigRational(n + 1));
  report.formula_side = sum;
  report.pass = report.series_side == report.formula_side;
  return report;
}

// --- floating-point oracle ---------------------------------------------------

NumericOracleResult numeric_oracle(const std::vector<std::int64_t>& s, const std::vector<double>& r, double eps0,
                                   std::int64_t terms) {
  if (!(eps0 < 0.0)) throw std::invalid_argument("numeric_oracle: eps0 must be negative");
  if (s.empty() || s.size() != r.size()) throw std::invalid_argument("numeric_oracle: bad argument vectors");
  if (terms < static_cast<std::int64_t>(s.size())) throw std::invalid_argument("numeric_oracle: too few terms");
  const std::size_t k = s.size();
  const auto n_max = static_cast<std::size_t>(terms);
  auto f = [&](std::size_t i, std::size_t n) {
    const long double x = static_cast<long double>(n);
    return std::pow(x, static_cast<long double>(-s[i])) * std::exp(x * r[i] * eps0);
  };
  // level[n] = sum over n > n_{i+1} > ... > n_k of the inner factors, built
  // from the innermost index outwards.
  std::vector<long double> level(n_max + 1, 0.0L);
  for (std::size_t n = 1; n <= n_max; ++n) level[n] = f(k - 1, n);
  for (std::size_t i = k - 1; i-- > 0;) {
    std::vector<long double> next(n_max + 1, 0.0L);
    long double below = 0.0L;
    for (std::size_t n = 1; n <= n_max; ++n) {
      next[n] = f(i, n) * below;
      below += level[n];
    }
    level = std::move(next);
  }
  long double total = 0.0L;
  for (std::size_t n = 1; n <= n_max; ++n) total += level[n];
  const double r_min = *std::min_element(r.begin(), r.end());
  return NumericOracleResult{static_cast<double>(total), std::exp(static_cast<double>(terms) * r_min * eps0)};
}

// --- instantiations ----------------------------------------------------------

#define RMZV_INSTANTIATE(D)                                                                                     \
  template struct MZVArgument<D>;                                                                               \
  template ExpansionPlan<D> make_expansion_plan(const MZVArgument<D>&);                                          \
  template TruncatedLaurentSeries<D> one_var_series(std::int64_t, const D&, std::int64_t);                       \
  template TruncatedLaurentSeries<D> regularized_expansion(const MZVArgument<D>&, std::int64_t);                 \
  template Character<D, D> mzv_character();                                                                     \
  template D renorm_directional(const std::vector<std::int64_t>&, const std::vector<D>&);                        \
  template D renorm_directional(DecompositionSession<D, D>&, const std::vector<std::int64_t>&,                   \
                                const std::vector<D>&);                                                         \
  template D symmetrized_zero(std::size_t, const std::vector<D>&);                                               \
  template GeneratingReport<D> generating_check(std::size_t, const std::vector<D>&, std::int64_t);               \
  template CoefficientReport<D> two_var_an_check(std::int64_t, const D&, const D&);

RMZV_INSTANTIATE(BigRational)
RMZV_INSTANTIATE(DeltaRationalFunction)

#undef RMZV_INSTANTIATE

}  // namespace rmzv
