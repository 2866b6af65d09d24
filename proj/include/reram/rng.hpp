#pragma once

#include <cstdint>
#include <vector>

namespace reram {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based sub-stream derivation: seed of stream k is obtained by
// running splitmix64 twice over (master, k). Every parallel job derives its
// own stream so results do not depend on scheduling or thread count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master;
  splitmix64(s);
  s ^= 0x9e3779b97f4a7c15ULL * (stream + 1);
  std::uint64_t t = s;
  splitmix64(t);
  return splitmix64(t);
}

// xoshiro256++ with splitmix64 seeding. Self-contained so that streams are
// bit-reproducible independently of the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : s_) w = splitmix64(s);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  // Standard normal via Box-Muller; the second draw of each pair is cached.
  double gaussian();

  // Uniform integer in [0, n), n >= 1.
  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4] = {};
  double cached_gauss_ = 0.0;
  bool has_cached_ = false;
};

// Fisher-Yates permutation of {0, ..., n-1}.
std::vector<std::int32_t> random_permutation(int n, Rng& rng);

}  // namespace reram
