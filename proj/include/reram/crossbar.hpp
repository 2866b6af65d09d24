#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "reram/params.hpp"
#include "reram/rng.hpp"

namespace reram {

// One m x n crossbar memory array: the stored bit matrix plus the selector
// failure map. The failure map is fixed for the lifetime of the array (a
// failed selector never recovers), which is what correlates sneak-path events
// across cells of the same array.
struct CrossbarState {
  int m = 0;
  int n = 0;
  std::vector<std::uint8_t> data;    // row-major bits x_{i,j} in {0,1}
  std::vector<std::uint8_t> failed;  // row-major selector failure flags

  std::uint8_t bit(int i, int j) const {
    return data[static_cast<std::size_t>(i) * n + j];
  }
  std::uint8_t failed_at(int i, int j) const {
    return failed[static_cast<std::size_t>(i) * n + j];
  }
};

// Noisy readback of a full array. `sneak` is the ground-truth event map kept
// for test oracles and estimator MSE studies; decoders never read it.
struct ReadbackArray {
  int m = 0;
  int n = 0;
  std::vector<double> values;        // ohms
  std::vector<std::uint8_t> sneak;   // e_{i,j}
};

// Samples an array: bits i.i.d. Bernoulli(q), selector failures i.i.d.
// Bernoulli(p_f). Deterministic for a fixed seed.
CrossbarState generate_array(int m, int n, double q, double p_f,
                             std::uint64_t seed);

// Sneak-path event for cell (i, j): the cell stores 0 and there is a diagonal
// cell (k, l), k != i, l != j, with x_{i,l} = x_{k,l} = x_{k,j} = 1 whose
// selector has failed. Cells storing 1 are never affected (a parallel path
// only hurts high-resistance reads).
bool detect_sneak_path(const CrossbarState& s, int i, int j);

// Event map for the whole array (rows [0, row_limit), all rows if negative).
// Bit-parallel over columns; equals detect_sneak_path cell by cell.
std::vector<std::uint8_t> detect_all(const CrossbarState& s, int row_limit = -1);

// Fraction of 0-storing cells that are sneak-path affected, over the first
// `cells` row-major cells (whole array if negative). Returns 0 when the range
// holds no 0 cells.
double empirical_sneak_rate(const CrossbarState& s, long cells = -1);

// Readback per the channel law: a 1 cell reads r1, a 0 cell reads r0 or
// r0_prime depending on its sneak-path event, plus N(0, sigma^2) noise.
ReadbackArray read_array(const CrossbarState& s, const ChannelParams& p,
                         std::uint64_t seed);

// Mean sneak-path rate eps_q = Pr(e = 1 | x = 0) for i.i.d. Bernoulli(q)
// data and failure rate p_f:
//   eps_q = 1 - sum_{u=0..m-1} sum_{v=0..n-1} C(m-1,u) C(n-1,v) q^(u+v)
//           (1-q)^((m-1-u)+(n-1-v)) (1 - p_f q)^(uv)
// evaluated with log-domain terms. Guarded to m, n <= 512.
double sneak_rate_exact(int m, int n, double q, double p_f);

struct TaylorRate {
  double value = 0.0;
  // Set when the raw value left [0,1] or the first-order term is too large
  // for the second-order expansion to be trusted.
  bool outside_validity = false;
};

// Second-order approximation of eps_q, valid when p_f * q is small:
//   (m-1)(n-1) p_f q^3
//   - alpha [2q C(m-1,2) C(n-1,2) + (n-1) C(m-1,2) + (m-1) C(n-1,2)] p_f^2 q^5
// The value is clamped to [0,1]; callers sweeping q grids check the flag.
TaylorRate sneak_rate_taylor(int m, int n, double q, double p_f,
                             double alpha = 0.8);

struct SneakRatePmf {
  std::vector<double> epsilon;  // bin centers
  std::vector<double> prob;     // sums to 1
  double mean = 0.0;            // unbinned sample mean
  double stddev = 0.0;          // unbinned sample std dev
  int samples = 0;
};

// Per-trial sneak-path rates over ~m*n/T cells drawn from each of T
// independent arrays: sum(e) / (m n (1-q)). Raw samples, for consumers that
// need the empirical distribution itself.
std::vector<double> sample_sneak_rates(int m, int n, double q, double p_f,
                                       int T, int samples, std::uint64_t seed);

// Empirical PMF of the sneak-path rate over one codeword spread across T
// arrays. Natural bin width is one event count, 1/(m n (1-q)), re-binned to
// at most `max_bins` for display; the mean is reported unbinned.
SneakRatePmf estimate_pmf(int m, int n, double q, double p_f, int T,
                          int samples, std::uint64_t seed, int max_bins = 200);

// Plain-text grid fixtures: one row per line, characters 0/1. The failure map
// is written as a companion grid of the same shape.
void write_grid(std::ostream& out, int m, int n,
                const std::vector<std::uint8_t>& cells);
std::vector<std::uint8_t> read_grid(std::istream& in, int& m, int& n);
void save_state(std::ostream& data_out, std::ostream& failed_out,
                const CrossbarState& s);
CrossbarState load_state(std::istream& data_in, std::istream& failed_in);

}  // namespace reram
