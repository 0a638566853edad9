#ifndef GSA_RNG_HPP
#define GSA_RNG_HPP

#include <cstdint>

namespace gsa {

// Counter-based generator built on the SplitMix64 finalizer
// (Steele, Lea & Flood 2014): state advances by the golden-ratio
// increment and each output is a strong 64-bit mix of the counter.
// Streams are derived by hashing (root seed, stream id) through the
// same finalizer, so any (seed, stream...) pair names an independent,
// reproducible sequence regardless of draw order elsewhere.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    // Rejection to kill modulo bias.
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  std::uint64_t state() const { return state_; }

private:
  std::uint64_t state_;
};

/// Derive the seed of an independent substream from a root seed.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  return mix64(mix64(root + kGolden) ^ (mix64(stream + 1) + kGolden));
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a,
                                 std::uint64_t b) {
  return derive_seed(derive_seed(root, a), b);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a,
                                 std::uint64_t b, std::uint64_t c) {
  return derive_seed(derive_seed(root, a, b), c);
}

}  // namespace gsa

#endif
