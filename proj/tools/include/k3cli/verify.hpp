#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "k3/defaults.hpp"
#include "k3/parallel.hpp"
#include "k3cli/io.hpp"

namespace k3cli {

struct RunConfig {
  std::uint64_t seed = k3::kVerificationDefaults.seed;
  int trials = k3::kVerificationDefaults.pointwise_trials;
  /// Prime used by the homogeneity, SL2 and slice checks; the default 62-bit
  /// prime when absent (the slice check then runs over Z).
  std::optional<std::uint64_t> modulus;
  int max_degree = 24;
  std::filesystem::path input;
  std::filesystem::path output;

  /// InputError unless trials >= 1 and the modulus is an odd prime below 2^62.
  void validate() const;
};

/// The invariants under test. Tests substitute deliberately broken versions.
struct InvariantBackend {
  std::function<k3::Scalar(const k3::SurfaceParams&)> r96;
  std::function<k3::Scalar(const k3::SurfaceParams&)> k552;

  static InvariantBackend library();
};

struct TrialFailure {
  int trial = 0;
  std::string check;
  k3::SurfaceParams u;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::optional<std::uint64_t> modulus;
  std::vector<TrialFailure> failures;  // sorted by (check, trial)
  std::string convention_tag;

  bool ok() const { return failures.empty(); }
  Json to_json() const;
};

/// Pointwise factorization over Z (config.trials points), weighted
/// homogeneity mod p, SL2 invariance and one slice division. Trials draw
/// from independent seeded streams, so the report depends only on the config.
VerifyReport run_verification(const RunConfig& config, const InvariantBackend& backend = InvariantBackend::library(),
                              unsigned workers = k3::default_workers());

}  // namespace k3cli
