#include "rmzv/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace rmzv {

namespace {

// Power-series coefficients of eps / (e^eps - 1), i.e. B_k / k!, obtained by
// long division of 1 by (e^eps - 1) / eps = sum_k eps^k / (k + 1)!.
class BernoulliTable {
 public:
  BigRational get(std::int64_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<std::int64_t>(scaled_.size())) return scaled_[static_cast<std::size_t>(n)] * factorial(n);
    }
    std::unique_lock lock(mutex_);
    extend(n);
    return scaled_[static_cast<std::size_t>(n)] * factorial(n);
  }

 private:
  void extend(std::int64_t n) {
    while (static_cast<std::int64_t>(divisor_.size()) <= n) {
      divisor_.push_back(factorial(static_cast<std::int64_t>(divisor_.size()) + 1).inverse());
    }
    while (static_cast<std::int64_t>(scaled_.size()) <= n) {
      const std::size_t m = scaled_.size();
      if (m == 0) {
        scaled_.emplace_back(1);
        continue;
      }
      BigRational acc(0);
      for (std::size_t k = 1; k <= m; ++k) acc += divisor_[k] * scaled_[m - k];
      scaled_.push_back(-acc);
    }
  }

  std::shared_mutex mutex_;
  std::vector<BigRational> divisor_;
  std::vector<BigRational> scaled_;
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

BigRational bernoulli(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  return table().get(n);
}

BigRational zeta_nonpositive(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("zeta_nonpositive: negative argument");
  BigRational z = bernoulli(k + 1) / BigRational(k + 1);
  return (k % 2 == 0) ? z : -z;
}

}  // namespace rmzv
