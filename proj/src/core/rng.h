// xlam -- cross-lingual argument mining toolkit
//
// Seeded random number generation. All sampling primitives are implemented
// here on top of std::mt19937_64 (whose output sequence the standard pins
// down exactly) instead of the <random> distributions, whose output is
// implementation-defined. This keeps every seeded artifact byte-identical
// across compilers and standard libraries.
#ifndef XLAM_CORE_RNG_H_
#define XLAM_CORE_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace xlam {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n), unbiased via rejection. n must be > 0.
  uint64_t next_below(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform integer in [lo, hi], inclusive.
  long next_int(long lo, long hi) {
    return lo + static_cast<long>(next_below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Standard normal via Box-Muller (one value per call; the mate is cached).
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1, u2;
    do {
      u1 = next_unit();
    } while (u1 <= 0.0);
    u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T> *items) {
    for (size_t i = items->size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(next_below(i));
      std::swap((*items)[i - 1], (*items)[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// FNV-1a 64-bit, used for feature hashing and seed derivation.
inline uint64_t fnv1a64(const void *data, size_t size,
                        uint64_t basis = 0xcbf29ce484222325ull) {
  const unsigned char *p = static_cast<const unsigned char *>(data);
  uint64_t h = basis;
  for (size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace xlam

#endif  // XLAM_CORE_RNG_H_
