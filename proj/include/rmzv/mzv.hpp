#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rmzv/birkhoff.hpp"
#include "rmzv/hopf.hpp"
#include "rmzv/laurent.hpp"
#include "rmzv/rational.hpp"
#include "rmzv/rational_function.hpp"

namespace rmzv {

/// (s, r) of a directional regularized MZV in the non-positive sector.
/// Throws std::invalid_argument on empty or mismatched vectors, positive
/// exponents, or non-positive directions.
template <class D>
struct MZVArgument {
  std::vector<std::int64_t> s;
  std::vector<D> r;

  MZVArgument(std::vector<std::int64_t> exponents, std::vector<D> directions);

  static MZVArgument from_word(const Word<D>& w);
  Word<D> word() const;
  std::size_t depth() const { return s.size(); }
  /// Total pole order M = sum_i (|s_i| + 1) of the regularized sum.
  std::int64_t pole_depth() const;
};

/// Reduction of Z(s; r; eps) to products of one-variable series: with
/// n_i = j_i + ... + j_k, the exponent of e^{j_l eps} is the cumulative
/// direction rho_l = r_1 + ... + r_l, and prod n_i^{m_i} expands
/// multinomially into monomials prod j_l^{b_l}.
template <class D>
struct ExpansionPlan {
  std::vector<D> cumulative_directions;
  /// compositions[i] lists the splittings (a_{i,i}, ..., a_{i,k}) of m_i over
  /// the slots l >= i, in colexicographic order.
  std::vector<std::vector<std::vector<std::int64_t>>> compositions;
  /// Distinct slot-exponent vectors b with their total multinomial weight.
  std::vector<std::pair<std::vector<std::int64_t>, BigRational>> slot_terms;
  std::int64_t pole_depth = 0;
};

template <class D>
ExpansionPlan<D> make_expansion_plan(const MZVArgument<D>& arg);

/// Compositions of `total` into `parts` nonnegative parts, colexicographic.
std::vector<std::vector<std::int64_t>> compositions(std::int64_t total, std::size_t parts);

/// sum_{n>=1} n^m e^{n rho eps}
///   = (-1)^{m+1} m! (rho eps)^{-m-1} + sum_j zeta(-m-j) (rho eps)^j / j!,
/// known mod eps^precision.
template <class D>
TruncatedLaurentSeries<D> one_var_series(std::int64_t m, const D& rho, std::int64_t precision);

/// Laurent expansion of Z(s; r; eps) = sum_{n_1 > ... > n_k > 0}
/// prod n_i^{-s_i} e^{n_i r_i eps}, known mod eps^precision.
template <class D>
TruncatedLaurentSeries<D> regularized_expansion(const MZVArgument<D>& arg, std::int64_t precision);

/// The regularization character on the non-positive sector.
template <class D>
Character<D, D> mzv_character();

/// Renormalized directional MZV: the constant term of phi_+ at (s; r).
template <class D>
D renorm_directional(const std::vector<std::int64_t>& s, const std::vector<D>& r);

template <class D>
D renorm_directional(DecompositionSession<D, D>& session, const std::vector<std::int64_t>& s,
                     const std::vector<D>& r);

/// Renormalized MZV: delta -> 0+ limit of the directional value at
/// directions |s_i| + delta. Throws PoleAtZero if the limit is not finite.
BigRational renorm_mzv(const std::vector<std::int64_t>& s);

/// The directional value at r_i = |s_i| + delta before taking the limit.
DeltaRationalFunction renorm_mzv_delta(const std::vector<std::int64_t>& s);

/// (1/k!) sum over permutations sigma of the directional value at
/// (0_k; sigma(r)).
template <class D>
D symmetrized_zero(std::size_t k, const std::vector<D>& r);

template <class D>
struct GeneratingReport {
  std::size_t k = 0;
  std::vector<D> r;
  /// Taylor coefficients of phi_+ on the all-zero word, eps^0..eps^N.
  std::vector<D> series_side;
  /// sum over ordered partitions of renormalized values times prod (r_j)^{i_j}/i_j!.
  std::vector<D> value_side;
  bool pass = false;
};

template <class D>
GeneratingReport<D> generating_check(std::size_t k, const std::vector<D>& r, std::int64_t order);

template <class D>
struct CoefficientReport {
  std::int64_t n = 0;
  D r1, r2;
  /// n! times the eps^n coefficient of the finite part of Z((0,0); (r1,r2)).
  D series_side;
  /// The formula in renormalized directional values and zeta(-n-1).
  D formula_side;
  bool pass = false;
};

template <class D>
CoefficientReport<D> two_var_an_check(std::int64_t n, const D& r1, const D& r2);

struct NumericOracleResult {
  double value = 0.0;
  /// exp(terms * min(r) * eps0): the size of the first dropped geometric factor.
  double tail_bound = 0.0;
};

/// Direct partial summation of Z(s; r; eps0) over n_1 > ... > n_k with
/// n_1 <= terms, in floating point. eps0 must be negative.
NumericOracleResult numeric_oracle(const std::vector<std::int64_t>& s, const std::vector<double>& r, double eps0,
                                   std::int64_t terms);

}  // namespace rmzv
