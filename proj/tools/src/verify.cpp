#include "k3cli/verify.hpp"

#include <algorithm>
#include <tuple>

#include "k3/errors.hpp"
#include "k3/invariants.hpp"
#include "k3/modarith.hpp"
#include "k3/random.hpp"

namespace k3cli {

using k3::Scalar;
using k3::SurfaceParams;

namespace {

constexpr auto kDefaults = k3::kVerificationDefaults;

enum Check : std::uint64_t { pointwise = 1, homogeneity = 2, sl2 = 3, slice = 4 };

const char* check_name(Check c) {
  switch (c) {
    case pointwise:
      return "pointwise";
    case homogeneity:
      return "homogeneity";
    case sl2:
      return "sl2";
    case slice:
      return "slice";
  }
  return "?";
}

k3::Rng trial_rng(std::uint64_t seed, Check check, std::size_t trial) {
  return k3::Rng(seed + static_cast<std::uint64_t>(check) * 0x9E3779B97F4A7C15ULL, trial);
}

// The failing point of a trial, if any.
using Outcome = std::optional<SurfaceParams>;

template <class Body>
Outcome guarded(const SurfaceParams& u, Body body) {
  try {
    return body() ? Outcome{} : Outcome{u};
  } catch (const k3::Error&) {
    return Outcome{u};
  }
}

Outcome pointwise_trial(const InvariantBackend& backend, k3::Rng& rng) {
  for (;;) {
    const SurfaceParams u = k3::random_surface(rng, kDefaults.entry_bound);
    Scalar r;
    try {
      r = backend.r96(u);
    } catch (const k3::Error&) {
      return u;
    }
    if (r.is_zero()) continue;
    return guarded(u, [&] {
      const Scalar k = backend.k552(u);
      const mpz_class cube = r.pow(3).integer();
      return mpz_divisible_p(k.integer().get_mpz_t(), cube.get_mpz_t()) != 0;
    });
  }
}

Outcome homogeneity_trial(const InvariantBackend& backend, k3::Rng& rng, std::uint64_t p, std::size_t i) {
  const SurfaceParams u = k3::random_surface(rng, kDefaults.entry_bound);
  return guarded(u, [&] {
    const Scalar lambda = Scalar(kDefaults.lambdas[i % 3]).reduce_mod(p);
    const SurfaceParams up = u.reduce_mod(p);
    const SurfaceParams v = k3::gm_act(lambda, up);
    return backend.r96(v) == lambda.pow(96) * backend.r96(up) &&
           backend.k552(v) == lambda.pow(552) * backend.k552(up);
  });
}

Outcome sl2_trial(const InvariantBackend& backend, k3::Rng& rng, std::optional<std::uint64_t> modulus) {
  const SurfaceParams u = k3::random_surface(rng, kDefaults.entry_bound);
  const auto gamma = k3::random_sl2(rng, kDefaults.sl2_entry_bound);
  return guarded(u, [&] {
    const SurfaceParams v = k3::sl2_act(gamma, u);
    if (backend.r96(v) != backend.r96(u)) return false;
    if (modulus) return backend.k552(v.reduce_mod(*modulus)) == backend.k552(u.reduce_mod(*modulus));
    return backend.k552(v) == backend.k552(u);
  });
}

// Exact division along u0 + s u1, and agreement of the slice with the
// pointwise backend at s = 1.
Outcome slice_trial(const InvariantBackend& backend, k3::Rng& rng, std::optional<std::uint64_t> modulus) {
  for (;;) {
    const SurfaceParams u0 = k3::random_surface(rng, kDefaults.entry_bound);
    const SurfaceParams u1 = k3::random_surface(rng, kDefaults.entry_bound);
    k3::SliceRecord rec;
    try {
      rec = k3::slice_divisibility(u0, u1, modulus);
    } catch (const k3::PreconditionError&) {
      continue;  // r96 vanishes along the whole line
    }
    SurfaceParams at_one = u0;
    for (std::size_t i = 0; i < at_one.g2.size(); ++i) at_one.g2[i] += u1.g2[i];
    for (std::size_t i = 0; i < at_one.g3.size(); ++i) at_one.g3[i] += u1.g3[i];
    return guarded(u0, [&] {
      const Scalar one = rec.k552.ring().one();
      const SurfaceParams point = modulus ? at_one.reduce_mod(*modulus) : at_one;
      return rec.divisible && rec.k552.evaluate(one) == backend.k552(point);
    });
  }
}

}  // namespace

void RunConfig::validate() const {
  if (trials < 1) throw InputError("--trials must be at least 1");
  if (modulus && (*modulus % 2 == 0 || *modulus >= (1ULL << 62) || !k3::modarith::is_prime(*modulus))) {
    throw InputError("--modulus " + std::to_string(*modulus) + " is not an odd prime below 2^62");
  }
  if (max_degree < 0) throw InputError("--max-degree must be nonnegative");
}

InvariantBackend InvariantBackend::library() {
  return {[](const SurfaceParams& u) { return k3::r96(u).value; },
          [](const SurfaceParams& u) { return k3::k552(u).value; }};
}

Json VerifyReport::to_json() const {
  Json list = Json::array();
  for (const auto& f : failures) {
    list.push_back({{"trial", f.trial}, {"check", f.check}, {"u", surface_params_json(f.u)}});
  }
  return Json{{"seed", std::to_string(seed)},
              {"trials", trials},
              {"modulus", modulus ? Json(std::to_string(*modulus)) : Json(nullptr)},
              {"failures", list},
              {"convention_tag", convention_tag}};
}

VerifyReport run_verification(const RunConfig& config, const InvariantBackend& backend, unsigned workers) {
  config.validate();
  const std::uint64_t p = config.modulus.value_or(k3::modarith::kDefaultPrime);
  const auto n_small = static_cast<std::size_t>(std::min(config.trials, kDefaults.sl2_trials));
  const auto n_homogeneity = static_cast<std::size_t>(std::min(config.trials, kDefaults.homogeneity_trials));

  struct Job {
    Check check;
    std::size_t trial;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < static_cast<std::size_t>(config.trials); ++i) jobs.push_back({pointwise, i});
  for (std::size_t i = 0; i < n_homogeneity; ++i) jobs.push_back({homogeneity, i});
  for (std::size_t i = 0; i < n_small; ++i) jobs.push_back({sl2, i});
  jobs.push_back({slice, 0});

  const auto outcomes = k3::parallel_map(
      jobs.size(),
      [&](std::size_t j) {
        const Job job = jobs[j];
        k3::Rng rng = trial_rng(config.seed, job.check, job.trial);
        switch (job.check) {
          case pointwise:
            return pointwise_trial(backend, rng);
          case homogeneity:
            return homogeneity_trial(backend, rng, p, job.trial);
          case sl2:
            return sl2_trial(backend, rng, config.modulus);
          case slice:
            return slice_trial(backend, rng, config.modulus);
        }
        return Outcome{};
      },
      workers);

  VerifyReport report;
  report.seed = config.seed;
  report.trials = config.trials;
  report.modulus = config.modulus;
  report.convention_tag = k3::kConventionTag;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    if (outcomes[j]) report.failures.push_back({static_cast<int>(jobs[j].trial), check_name(jobs[j].check), *outcomes[j]});
  }
  std::stable_sort(report.failures.begin(), report.failures.end(), [](const TrialFailure& a, const TrialFailure& b) {
    return std::tie(a.check, a.trial) < std::tie(b.check, b.trial);
  });
  return report;
}

}  // namespace k3cli
