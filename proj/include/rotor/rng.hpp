#pragma once
// Counter-based splittable RNG.
//
// Output i is mix64(key + i * PHI) where mix64 is the SplitMix64 finalizer
// and PHI is the 64-bit golden-ratio constant.  The generator is a pure
// function of (key, counter), so streams are reproducible bit-for-bit on any
// platform, can be split without statistical interference (a child stream
// re-keys through the finalizer), and never depend on call order elsewhere
// in the program.  This is deliberately not std::mt19937 +
// std::uniform_real_distribution: the standard distributions are allowed to
// differ between standard library implementations, which would break
// byte-identical report output.

#include <cstdint>

namespace rotor {

namespace detail {
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}
}  // namespace detail

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(detail::mix64(seed + 0x9E3779B97F4A7C15ULL) ^
             detail::mix64(~stream * 0x9E3779B97F4A7C15ULL)),
        ctr_(0) {}

  std::uint64_t next_u64() {
    return detail::mix64(key_ + (ctr_++) * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Uniform integer in [lo, hi] inclusive (small ranges; modulo bias is
  // below 2^-32 for ranges under 2^32 and irrelevant for test sampling).
  long long uniform_int(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next_u64() % span);
  }

  // Independent child stream; deterministic function of (parent key, id).
  Rng split(std::uint64_t child_id) const {
    Rng r(0);
    r.key_ = detail::mix64(key_ ^ detail::mix64(child_id + 0xD1B54A32D192ED03ULL));
    r.ctr_ = 0;
    return r;
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_;
};

}  // namespace rotor
