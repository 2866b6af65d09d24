#pragma once

#include <cstdint>

namespace reram {

// Physical and statistical parameters of the resistive-crossbar read channel.
// Resistances in ohms. A logical 0 is stored as the high resistance r0 and a
// logical 1 as the low resistance r1; a sneak-path-affected 0 cell reads at
// r0_prime = (1/r0 + 1/rs)^-1 where rs is the parasitic resistance of the
// parallel path.
struct ChannelParams {
  double r0 = 1000.0;       // high-resistance state (logical 0)
  double r1 = 100.0;        // low-resistance state (logical 1)
  double rs = 250.0;        // sneak-path parasitic resistance
  double r0_prime = 200.0;  // derived: (1/r0 + 1/rs)^-1
  double sigma = 100.0;     // read noise std dev (additive Gaussian)
  double p_f = 1e-3;        // per-cell selector failure probability
  double q = 0.5;           // input bias Pr(bit = 1)
  double alpha = 0.8;       // balance factor of the second-order rate approximation

  // Validates ranges and derives r0_prime. Requires r0 > r0_prime > r1 > 0.
  static ChannelParams make(double r0, double r1, double rs, double sigma,
                            double p_f, double q, double alpha = 0.8);

  // Reference resistance set used throughout the experiments:
  // r1 = 100, r0 = 1000, rs = 250 (so r0_prime = 200), p_f = 1e-3.
  static ChannelParams reference(double sigma, double q);
};

}  // namespace reram
