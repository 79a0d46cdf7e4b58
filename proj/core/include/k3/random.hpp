#pragma once

#include <cstdint>
#include <random>

#include "k3/binary_form.hpp"
#include "k3/weierstrass.hpp"

namespace k3 {

/// Seeded generator whose draws are identical on every platform.
///
/// Each (seed, stream) pair gives an independent sequence, so parallel
/// trials can use their index as the stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi] by rejection sampling.
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// Integer parameters with every entry uniform in [-bound, bound].
SurfaceParams random_surface(Rng& rng, long bound);

/// Uniform integer matrix of determinant 1 with entries in [-bound, bound].
Mat2<Scalar> random_sl2(Rng& rng, long bound = 3);

}  // namespace k3
