#pragma once

#include <cstdint>

#include "rmzv/rational.hpp"

namespace rmzv {

/// B_n from eps / (e^eps - 1) = sum_k B_k eps^k / k!  (so B_1 = -1/2).
/// Thread-safe; values are memoized process-wide.
BigRational bernoulli(std::int64_t n);

/// Riemann zeta at -k, k >= 0: (-1)^k B_{k+1} / (k + 1).
BigRational zeta_nonpositive(std::int64_t k);

}  // namespace rmzv
