#include "reram/rng.hpp"

#include <cmath>
#include <numbers>

namespace reram {

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_gauss_;
  }
  double u1 = unit();
  while (u1 <= 0.0) u1 = unit();
  const double u2 = unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_gauss_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

std::vector<std::int32_t> random_permutation(int n, Rng& rng) {
  std::vector<std::int32_t> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint32_t>(i + 1)));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace reram
