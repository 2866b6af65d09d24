#include "reram/crossbar.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace reram {

namespace {

constexpr int kMaxExactDim = 512;

void check_dims(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("array dims must be >= 1");
}

void check_prob(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(name) + " must be in [0,1]");
}

// log C(n, k) via lgamma; exact enough for the guarded dimension range.
double lchoose(int n, int k) {
  if (k < 0 || k > n) return -1e300;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double choose2(int n) { return 0.5 * n * (n - 1); }  // C(n,2), n >= 0

}  // namespace

CrossbarState generate_array(int m, int n, double q, double p_f,
                             std::uint64_t seed) {
  check_dims(m, n);
  check_prob(q, "q");
  check_prob(p_f, "p_f");
  CrossbarState s;
  s.m = m;
  s.n = n;
  const std::size_t cells = static_cast<std::size_t>(m) * n;
  s.data.resize(cells);
  s.failed.resize(cells);
  Rng rng(seed);
  for (std::size_t c = 0; c < cells; ++c) s.data[c] = rng.bernoulli(q);
  for (std::size_t c = 0; c < cells; ++c) s.failed[c] = rng.bernoulli(p_f);
  return s;
}

bool detect_sneak_path(const CrossbarState& s, int i, int j) {
  if (i < 0 || i >= s.m || j < 0 || j >= s.n)
    throw std::out_of_range("cell index out of range");
  if (s.bit(i, j) != 0) return false;
  for (int k = 0; k < s.m; ++k) {
    if (k == i || !s.bit(k, j)) continue;
    for (int l = 0; l < s.n; ++l) {
      if (l == j) continue;
      if (s.bit(i, l) && s.bit(k, l) && s.failed_at(k, l)) return true;
    }
  }
  return false;
}

std::vector<std::uint8_t> detect_all(const CrossbarState& s, int row_limit) {
  const int m = s.m, n = s.n;
  const int rows = row_limit < 0 ? m : std::min(row_limit, m);
  const int words = (n + 63) / 64;
  // Row bitmaps of the data and of the trigger cells (stored 1, selector
  // failed). Row i is affected through row k iff they share a logic-1 column
  // where row k's cell is a trigger; every logic-1 column of row k then
  // completes a path into row i.
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(m) * words, 0);
  std::vector<std::uint64_t> trig(static_cast<std::size_t>(m) * words, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!s.bit(i, j)) continue;
      const std::size_t w = static_cast<std::size_t>(i) * words + (j >> 6);
      const std::uint64_t mask = 1ULL << (j & 63);
      bits[w] |= mask;
      if (s.failed_at(i, j)) trig[w] |= mask;
    }
  }
  std::vector<std::uint8_t> e(static_cast<std::size_t>(m) * n, 0);
  std::vector<std::uint64_t> acc(words);
  for (int i = 0; i < rows; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const std::uint64_t* ri = &bits[static_cast<std::size_t>(i) * words];
    for (int k = 0; k < m; ++k) {
      const std::uint64_t* tk = &trig[static_cast<std::size_t>(k) * words];
      std::uint64_t hit = 0;
      for (int w = 0; w < words; ++w) hit |= ri[w] & tk[w];
      if (!hit) continue;
      const std::uint64_t* rk = &bits[static_cast<std::size_t>(k) * words];
      for (int w = 0; w < words; ++w) acc[w] |= rk[w];
    }
    for (int j = 0; j < n; ++j) {
      const bool covered = (acc[j >> 6] >> (j & 63)) & 1;
      e[static_cast<std::size_t>(i) * n + j] = covered && !s.bit(i, j);
    }
  }
  return e;
}

double empirical_sneak_rate(const CrossbarState& s, long cells) {
  const long total = static_cast<long>(s.m) * s.n;
  const long limit = cells < 0 ? total : std::min(cells, total);
  const int rows = static_cast<int>((limit + s.n - 1) / s.n);
  const auto e = detect_all(s, rows);
  long zeros = 0, events = 0;
  for (long c = 0; c < limit; ++c) {
    if (!s.data[c]) {
      ++zeros;
      events += e[c];
    }
  }
  return zeros > 0 ? static_cast<double>(events) / zeros : 0.0;
}

ReadbackArray read_array(const CrossbarState& s, const ChannelParams& p,
                         std::uint64_t seed) {
  ReadbackArray r;
  r.m = s.m;
  r.n = s.n;
  r.sneak = detect_all(s);
  const std::size_t cells = static_cast<std::size_t>(s.m) * s.n;
  r.values.resize(cells);
  Rng rng(seed);
  for (std::size_t c = 0; c < cells; ++c) {
    const double level =
        s.data[c] ? p.r1 : (r.sneak[c] ? p.r0_prime : p.r0);
    r.values[c] = level + p.sigma * rng.gaussian();
  }
  return r;
}

double sneak_rate_exact(int m, int n, double q, double p_f) {
  check_dims(m, n);
  check_prob(q, "q");
  check_prob(p_f, "p_f");
  if (m > kMaxExactDim || n > kMaxExactDim)
    throw std::invalid_argument("sneak_rate_exact guarded to dims <= 512");
  if (q <= 0.0 || p_f <= 0.0) return 0.0;

  const double lq = std::log(q);
  const double l1q = q < 1.0 ? std::log1p(-q) : 0.0;
  const double lpq = std::log1p(-p_f * q);
  // Kahan-compensated sum of the positive log-domain terms.
  double sum = 0.0, comp = 0.0;
  for (int u = 0; u <= m - 1; ++u) {
    const double lu = lchoose(m - 1, u) + u * lq;
    const int ru = m - 1 - u;
    for (int v = 0; v <= n - 1; ++v) {
      const int rv = n - 1 - v;
      if (q >= 1.0 && ru + rv > 0) continue;  // (1-q)^k vanishes
      const double lt = lu + lchoose(n - 1, v) + v * lq + (ru + rv) * l1q +
                        static_cast<double>(u) * v * lpq;
      const double term = std::exp(lt);
      const double y = term - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
  }
  return std::clamp(1.0 - sum, 0.0, 1.0);
}

TaylorRate sneak_rate_taylor(int m, int n, double q, double p_f, double alpha) {
  check_dims(m, n);
  check_prob(q, "q");
  check_prob(p_f, "p_f");
  const double first =
      static_cast<double>(m - 1) * (n - 1) * p_f * q * q * q;
  const double bracket = 2.0 * q * choose2(m - 1) * choose2(n - 1) +
                         (n - 1) * choose2(m - 1) + (m - 1) * choose2(n - 1);
  const double raw = first - alpha * bracket * p_f * p_f * std::pow(q, 5);
  TaylorRate out;
  out.value = std::clamp(raw, 0.0, 1.0);
  out.outside_validity = raw < 0.0 || raw > 1.0 || first > 1.0;
  return out;
}

std::vector<double> sample_sneak_rates(int m, int n, double q, double p_f,
                                       int T, int samples,
                                       std::uint64_t seed) {
  check_dims(m, n);
  check_prob(q, "q");
  check_prob(p_f, "p_f");
  if (T < 1 || samples < 1) throw std::invalid_argument("T, samples >= 1");
  const long cells = static_cast<long>(m) * n;
  if (cells % T != 0)
    throw std::invalid_argument("T must divide the per-codeword cell budget");
  if (q >= 1.0)
    throw std::invalid_argument("sneak-path rate undefined at q = 1");
  const long per_array = cells / T;
  const int rows = static_cast<int>((per_array + n - 1) / n);
  const double denom = static_cast<double>(cells) * (1.0 - q);

  std::vector<double> rates(samples);
  for (int s = 0; s < samples; ++s) {
    long events = 0;
    for (int t = 0; t < T; ++t) {
      const auto arr = generate_array(
          m, n, q, p_f,
          derive_seed(seed, static_cast<std::uint64_t>(s) * T + t));
      const auto e = detect_all(arr, rows);
      for (long c = 0; c < per_array; ++c) events += e[c];
    }
    rates[s] = static_cast<double>(events) / denom;
  }
  return rates;
}

SneakRatePmf estimate_pmf(int m, int n, double q, double p_f, int T,
                          int samples, std::uint64_t seed, int max_bins) {
  const auto rates = sample_sneak_rates(m, n, q, p_f, T, samples, seed);
  SneakRatePmf pmf;
  pmf.samples = samples;
  double mean = 0.0;
  for (double r : rates) mean += r;
  mean /= samples;
  double var = 0.0;
  for (double r : rates) var += (r - mean) * (r - mean);
  pmf.mean = mean;
  pmf.stddev = samples > 1 ? std::sqrt(var / (samples - 1)) : 0.0;

  // Count-valued support: rate * denom is an integer event count.
  const double denom = static_cast<double>(m) * n * (1.0 - q);
  long max_count = 0;
  for (double r : rates)
    max_count = std::max(max_count, std::lround(r * denom));
  const long group = std::max(1L, (max_count + max_bins) / max_bins);
  const long bins = max_count / group + 1;
  pmf.epsilon.resize(bins);
  pmf.prob.assign(bins, 0.0);
  for (long b = 0; b < bins; ++b) {
    const double lo = static_cast<double>(b) * group;
    const double hi = std::min<double>(lo + group - 1, max_count);
    pmf.epsilon[b] = 0.5 * (lo + hi) / denom;
  }
  const double w = 1.0 / samples;
  for (double r : rates) pmf.prob[std::lround(r * denom) / group] += w;
  return pmf;
}

void write_grid(std::ostream& out, int m, int n,
                const std::vector<std::uint8_t>& cells) {
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j)
      out.put(cells[static_cast<std::size_t>(i) * n + j] ? '1' : '0');
    out.put('\n');
  }
}

std::vector<std::uint8_t> read_grid(std::istream& in, int& m, int& n) {
  std::vector<std::uint8_t> cells;
  std::string line;
  m = 0;
  n = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (n < 0)
      n = static_cast<int>(line.size());
    else if (static_cast<int>(line.size()) != n)
      throw std::runtime_error("ragged grid row");
    for (char ch : line) {
      if (ch != '0' && ch != '1') throw std::runtime_error("bad grid char");
      cells.push_back(ch == '1');
    }
    ++m;
  }
  if (m == 0) throw std::runtime_error("empty grid");
  return cells;
}

void save_state(std::ostream& data_out, std::ostream& failed_out,
                const CrossbarState& s) {
  write_grid(data_out, s.m, s.n, s.data);
  write_grid(failed_out, s.m, s.n, s.failed);
}

CrossbarState load_state(std::istream& data_in, std::istream& failed_in) {
  CrossbarState s;
  s.data = read_grid(data_in, s.m, s.n);
  int fm = 0, fn = 0;
  s.failed = read_grid(failed_in, fm, fn);
  if (fm != s.m || fn != s.n)
    throw std::runtime_error("data/failure grid shape mismatch");
  return s;
}

}  // namespace reram
