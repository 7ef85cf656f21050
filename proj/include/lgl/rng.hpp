#pragma once

#include <cmath>
#include <cstdint>

namespace lgl {

// Stateless 64-bit mixer (splitmix64 finalizer).  Used both as the stream
// generator of CounterRng and as the keyed hash behind coupling-from-the-past,
// where the randomness at absolute time -t must be reproducible from
// (seed, stream, t) alone.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Keyed hash of a (seed, stream, counter) triple onto 64 uniform bits.
inline constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                            std::uint64_t counter) noexcept {
  std::uint64_t h = mix64(seed ^ 0x8f1bbcdcbfa53e0bULL);
  h = mix64(h ^ stream * 0xd6e8feb86659fd93ULL);
  h = mix64(h ^ counter * 0xa0761d6478bd642fULL);
  return h;
}

// Counter-based generator: the n-th output is a pure function of
// (seed, stream, n), so independent streams never share state and any
// position can be replayed.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64() noexcept { return counter_hash(seed_, stream_, counter_++); }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n) via the multiply-high trick (bias < 2^-64 * n).
  std::uint64_t next_below(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Standard normal via Box-Muller; the spare deviate is cached.
  double next_gaussian() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  std::uint64_t counter() const noexcept { return counter_; }
  void set_counter(std::uint64_t c) noexcept { counter_ = c; has_spare_ = false; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace lgl
