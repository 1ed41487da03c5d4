#pragma once

#include <cstdint>

namespace powmean {

/// splitmix64 finalizer: full-avalanche 64-bit mix.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based per-stream seed derivation. Streams for distinct indices
/// under one master seed are decorrelated by the avalanche; the scheme is
/// order-independent, which is what makes parallel runs bit-reproducible.
inline std::uint64_t derive_stream_seed(std::uint64_t master,
                                        std::uint64_t index) {
  return mix64(master ^ (0xd1342543de82ef95ULL * (index + 1)));
}

/// Minimal splitmix64 generator. Cheap, stateless apart from one word,
/// bit-identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on the open interval (0, 1); never returns an endpoint.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) *
           (1.0 / 9007199254740992.0);
  }

 private:
  std::uint64_t state_;
};

}  // namespace powmean
