#include "k3/random.hpp"

#include "k3/errors.hpp"

namespace k3 {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw PreconditionError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<long>(static_cast<std::uint64_t>(lo) + x % span);
}

SurfaceParams random_surface(Rng& rng, long bound) {
  SurfaceParams u;
  for (auto& c : u.g2) c = Scalar(rng.uniform(-bound, bound));
  for (auto& c : u.g3) c = Scalar(rng.uniform(-bound, bound));
  return u;
}

Mat2<Scalar> random_sl2(Rng& rng, long bound) {
  if (bound < 1) throw PreconditionError("SL2 sampling needs bound >= 1");
  for (;;) {
    const long a = rng.uniform(-bound, bound);
    const long b = rng.uniform(-bound, bound);
    const long c = rng.uniform(-bound, bound);
    const long d = rng.uniform(-bound, bound);
    if (a * d - b * c == 1) return {Scalar(a), Scalar(b), Scalar(c), Scalar(d)};
  }
}

}  // namespace k3
