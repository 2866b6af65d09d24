#include "reram/params.hpp"

#include <stdexcept>
#include <string>

namespace reram {

ChannelParams ChannelParams::make(double r0, double r1, double rs, double sigma,
                                  double p_f, double q, double alpha) {
  if (!(r0 > 0.0) || !(r1 > 0.0) || !(rs > 0.0))
    throw std::invalid_argument("resistances must be positive");
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
  if (!(p_f >= 0.0 && p_f <= 1.0))
    throw std::invalid_argument("p_f must be in [0,1]");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must be in [0,1]");

  ChannelParams p;
  p.r0 = r0;
  p.r1 = r1;
  p.rs = rs;
  p.r0_prime = 1.0 / (1.0 / r0 + 1.0 / rs);
  p.sigma = sigma;
  p.p_f = p_f;
  p.q = q;
  p.alpha = alpha;
  if (!(p.r0 > p.r0_prime && p.r0_prime > p.r1))
    throw std::invalid_argument("level ordering r0 > r0' > r1 violated");
  return p;
}

ChannelParams ChannelParams::reference(double sigma, double q) {
  return make(1000.0, 100.0, 250.0, sigma, 1e-3, q);
}

}  // namespace reram
