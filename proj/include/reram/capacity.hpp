#pragma once

#include <cstdint>
#include <vector>

#include "reram/params.hpp"

namespace reram {

// Binary-input memoryless channel: a 0 passes to level r0_prime with
// probability epsilon and to r0 otherwise, a 1 passes to r1, then additive
// Gaussian noise of std dev params.sigma.
struct EsChannel {
  double epsilon = 0.0;
  ChannelParams params;
};

// Composite-Simpson evaluator for the mutual information of the channel at
// given (epsilon, q). The grid spans [r1 - 10 sigma, r0 + 10 sigma] with step
// sigma / 50; the three Gaussian kernels are tabulated once so repeated
// (epsilon, q) queries only mix and take logs.
class MiQuadrature {
 public:
  explicit MiQuadrature(const ChannelParams& params);

  // Bits per channel use. Result lies in [0, H_b(q)] up to quadrature error.
  double mi(double epsilon, double q) const;

 private:
  ChannelParams p_;
  std::vector<double> g1_, g0p_, g0_;  // phi(y, r1), phi(y, r0'), phi(y, r0)
  std::vector<double> w_;              // Simpson weights including h/3
  double gauss_entropy_ = 0.0;         // log2 sqrt(2 pi e sigma^2)
};

// I(X;Y) of the channel with input Bernoulli(q). sigma = 0 falls back to the
// discrete ternary-output channel in closed form.
double mutual_information(const EsChannel& ch, double q);

// Achievable-rate lower bound: mutual information at the mean sneak-path rate
// eps_q of an m x n array (p.p_f, p.sigma taken from the params).
double lower_bound(int m, int n, double q, const ChannelParams& p);

struct UpperBound {
  double value = 0.0;
  double stderr_ = 0.0;
  int samples = 0;
};

// Rate upper bound: E[C_q(eps, sigma)] with eps the per-array sneak-path rate
// of single synthesized arrays, Monte Carlo over `samples` arrays.
UpperBound upper_bound(int m, int n, double q, const ChannelParams& p,
                       int samples, std::uint64_t seed);

struct QOpt {
  double q_star = 0.0;
  double value = 0.0;
};

// Argmax of the lower bound over the grid; ties break toward smaller q.
QOpt optimize_q(int m, int n, const ChannelParams& p,
                const std::vector<double>& q_grid);

// Default sweep grid: k/64 for k = 1..63.
std::vector<double> default_q_grid();

struct CapacityReport {
  std::vector<double> q_grid;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> upper_stderr;
  double argmax_q_lower = 0.0;
  double max_lower = 0.0;
};

// Lower/upper sweep over the grid. upper_samples = 0 skips the Monte Carlo
// upper bound (columns left at 0).
CapacityReport capacity_report(int m, int n, const ChannelParams& p,
                               const std::vector<double>& q_grid,
                               int upper_samples, std::uint64_t seed);

}  // namespace reram
