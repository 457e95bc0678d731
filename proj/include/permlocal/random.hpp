#pragma once

#include <cstdint>
#include <random>

namespace permlocal {

// Deterministic stream keyed by (seed, stream_id).
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  std::mt19937_64& engine() { return engine_; }

  bool coin() { return (engine_() >> 63) != 0; }
  bool bernoulli(double p) { return std::bernoulli_distribution(p)(engine_); }
  // Uniform on [0, n).
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_); }
  // Number of failures before the first success, success probability 1/2.
  int geometric_half() { return std::geometric_distribution<int>(0.5)(engine_); }

 private:
  std::uint64_t seed_, stream_id_;
  std::mt19937_64 engine_;
};

std::uint64_t entropy_seed();

}  // namespace permlocal
