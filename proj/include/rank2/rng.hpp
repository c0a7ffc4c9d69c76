#ifndef RANK2_RNG_HPP
#define RANK2_RNG_HPP

#include <cstdint>
#include <random>

#include "rank2/matrix.hpp"

namespace rank2 {

/// Deterministic rational sampler.  mt19937_64 output is pinned by the
/// standard, and raw modular reduction keeps the stream identical across
/// platforms (std distributions are not portable).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  Rational small_rational() {
    const long num = static_cast<long>(eng_() % 17) - 8;
    const long den = 1 + static_cast<long>(eng_() % 3);
    return Rational(num, den);
  }

  VecQ vector(std::size_t dim) {
    VecQ v(dim);
    for (auto& x : v) x = small_rational();
    return v;
  }

  VecQ nonzero_vector(std::size_t dim) {
    for (;;) {
      VecQ v = vector(dim);
      for (const auto& x : v)
        if (!x.is_zero()) return v;
    }
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace rank2

#endif
