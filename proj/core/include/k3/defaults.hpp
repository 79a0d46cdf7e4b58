#pragma once

#include <cstdint>

namespace k3 {

/// Default seed and trial counts of the randomized verification.
struct VerificationDefaults {
  std::uint64_t seed = 20240531;
  int pointwise_trials = 200;
  int homogeneity_trials = 50;
  int sl2_trials = 50;
  int slice_lines = 5;
  int fiber_trials = 100;
  /// Entries of random u are drawn from [-entry_bound, entry_bound].
  long entry_bound = 9;
  long sl2_entry_bound = 3;
  /// Scalars used for the G_m homogeneity checks.
  long lambdas[3] = {2, 3, 5};
};

inline constexpr VerificationDefaults kVerificationDefaults{};

}  // namespace k3
