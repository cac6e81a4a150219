#ifndef BQAP_RNG_HPP
#define BQAP_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace bqap {

/// Seedable random source with portable sampling helpers.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// C++ standard, so identical seeds give identical streams on every
/// platform. The standard library's distribution objects are *not*
/// portable across implementations, so the bounded-integer and unit-real
/// samplers below are implemented here: rejection sampling for integers
/// (unbiased) and a 53-bit mantissa fill for reals.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64()); // full range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
  }

  /// Uniform real in [0, 1) with 53 random mantissa bits.
  double uniform_real01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Fisher-Yates shuffle, driven by uniform_int for portability.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(
          uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

} // namespace bqap

#endif // BQAP_RNG_HPP
