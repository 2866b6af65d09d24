#include "reram/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "reram/crossbar.hpp"

namespace reram {

namespace {

// x log2 x with the limit value 0 at x -> 0; guards denormal-range mixtures.
double xlog2x(double x) {
  return x < 1e-300 ? 0.0 : x * std::log2(x);
}

double binary_entropy(double q) {
  return -xlog2x(q) - xlog2x(1.0 - q);
}

// Ternary-output channel in closed form, used when sigma = 0 and the three
// levels are distinct: H(Y) - (1-q) H_b(eps).
double discrete_mi(double epsilon, double q) {
  const double p1 = q;
  const double p0p = (1.0 - q) * epsilon;
  const double p0 = (1.0 - q) * (1.0 - epsilon);
  const double hy = -xlog2x(p1) - xlog2x(p0p) - xlog2x(p0);
  return hy - (1.0 - q) * binary_entropy(epsilon);
}

}  // namespace

MiQuadrature::MiQuadrature(const ChannelParams& params) : p_(params) {
  if (!(p_.sigma > 0.0)) return;  // sigma = 0 served by the discrete path
  const double lo = p_.r1 - 10.0 * p_.sigma;
  const double hi = p_.r0 + 10.0 * p_.sigma;
  const double step = p_.sigma / 50.0;
  long nsteps = static_cast<long>(std::ceil((hi - lo) / step));
  if (nsteps % 2) ++nsteps;
  const double h = (hi - lo) / static_cast<double>(nsteps);
  const long npts = nsteps + 1;
  g1_.resize(npts);
  g0p_.resize(npts);
  g0_.resize(npts);
  w_.resize(npts);
  const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * p_.sigma);
  const double s2 = 2.0 * p_.sigma * p_.sigma;
  for (long i = 0; i < npts; ++i) {
    const double y = lo + h * static_cast<double>(i);
    g1_[i] = norm * std::exp(-(y - p_.r1) * (y - p_.r1) / s2);
    g0p_[i] = norm * std::exp(-(y - p_.r0_prime) * (y - p_.r0_prime) / s2);
    g0_[i] = norm * std::exp(-(y - p_.r0) * (y - p_.r0) / s2);
    double w = (i == 0 || i == npts - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    w_[i] = w * h / 3.0;
  }
  gauss_entropy_ =
      std::log2(std::sqrt(2.0 * std::numbers::pi * std::numbers::e) * p_.sigma);
}

double MiQuadrature::mi(double epsilon, double q) const {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("epsilon must be in [0,1]");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must be in [0,1]");
  if (!(p_.sigma > 0.0)) return discrete_mi(epsilon, q);
  double hy = 0.0, h0 = 0.0;
  const std::size_t npts = w_.size();
  for (std::size_t i = 0; i < npts; ++i) {
    const double p0 = epsilon * g0p_[i] + (1.0 - epsilon) * g0_[i];
    const double py = (1.0 - q) * p0 + q * g1_[i];
    hy -= w_[i] * xlog2x(py);
    h0 -= w_[i] * xlog2x(p0);
  }
  return hy - q * gauss_entropy_ - (1.0 - q) * h0;
}

double mutual_information(const EsChannel& ch, double q) {
  return MiQuadrature(ch.params).mi(ch.epsilon, q);
}

double lower_bound(int m, int n, double q, const ChannelParams& p) {
  const double eps = sneak_rate_exact(m, n, q, p.p_f);
  return MiQuadrature(p).mi(eps, q);
}

UpperBound upper_bound(int m, int n, double q, const ChannelParams& p,
                       int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples >= 1");
  const MiQuadrature quad(p);
  const auto rates = sample_sneak_rates(m, n, q, p.p_f, 1, samples, seed);
  double sum = 0.0, sumsq = 0.0;
  for (double r : rates) {
    const double c = quad.mi(std::clamp(r, 0.0, 1.0), q);
    sum += c;
    sumsq += c * c;
  }
  UpperBound ub;
  ub.samples = samples;
  ub.value = sum / samples;
  if (samples > 1) {
    const double var = (sumsq - sum * sum / samples) / (samples - 1);
    ub.stderr_ = std::sqrt(std::max(0.0, var) / samples);
  }
  return ub;
}

QOpt optimize_q(int m, int n, const ChannelParams& p,
                const std::vector<double>& q_grid) {
  if (q_grid.empty()) throw std::invalid_argument("q grid must be nonempty");
  const MiQuadrature quad(p);
  QOpt best{q_grid.front(), -1.0};
  for (double q : q_grid) {
    const double c = quad.mi(sneak_rate_exact(m, n, q, p.p_f), q);
    if (c > best.value) best = {q, c};
  }
  return best;
}

std::vector<double> default_q_grid() {
  std::vector<double> grid;
  for (int k = 1; k < 64; ++k) grid.push_back(k / 64.0);
  return grid;
}

CapacityReport capacity_report(int m, int n, const ChannelParams& p,
                               const std::vector<double>& q_grid,
                               int upper_samples, std::uint64_t seed) {
  CapacityReport rep;
  rep.q_grid = q_grid;
  rep.lower.reserve(q_grid.size());
  rep.upper.assign(q_grid.size(), 0.0);
  rep.upper_stderr.assign(q_grid.size(), 0.0);
  const MiQuadrature quad(p);
  rep.max_lower = -1.0;
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    const double q = q_grid[i];
    const double lo = quad.mi(sneak_rate_exact(m, n, q, p.p_f), q);
    rep.lower.push_back(lo);
    if (lo > rep.max_lower) {
      rep.max_lower = lo;
      rep.argmax_q_lower = q;
    }
    if (upper_samples > 0) {
      const auto ub = upper_bound(m, n, q, p, upper_samples,
                                  derive_seed(seed, static_cast<std::uint64_t>(i)));
      rep.upper[i] = ub.value;
      rep.upper_stderr[i] = ub.stderr_;
    }
  }
  return rep;
}

}  // namespace reram
