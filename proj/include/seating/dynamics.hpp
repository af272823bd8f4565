#pragma once

// Swap dynamics: repeatedly exchange a blocking pair until none is left, a
// state repeats, or the step cap is hit. Also the binary-string rewriting
// operators used to build long distance-2 runs.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "seating/judge.hpp"
#include "seating/profile.hpp"

namespace seating {

enum class Selection { Lexicographic, SeededRandom, MaxPotentialGain };

std::string to_string(Selection s);
Selection parse_selection(const std::string& text);

struct SwapPolicy {
  /// Largest seat distance of an admissible swap; nullopt = unrestricted.
  std::optional<std::size_t> max_distance;
  Selection selection = Selection::Lexicographic;
};

struct SwapStep {
  Agent first = 0, second = 0;  ///< first < second
  Arrangement arrangement;      ///< after the swap
};

/// Admissible blocking pairs (i < j by agent id) under the distance bound.
std::vector<std::pair<Agent, Agent>> admissible_pairs(const Profile& p, const Topology& t, const Arrangement& a,
                                                      const SwapPolicy& policy);

std::optional<SwapStep> step(const Profile& p, const Topology& t, const Arrangement& a, const SwapPolicy& policy,
                             std::mt19937_64& rng);

enum class Outcome { Converged, LoopDetected, StepCapReached };
std::string to_string(Outcome o);

struct DynamicsReport {
  Outcome outcome = Outcome::StepCapReached;
  std::size_t period = 0;  ///< LoopDetected only
  std::size_t steps = 0;
  Arrangement start;
  Arrangement final_arrangement;
  std::vector<SwapStep> trace;
  /// Potential of the start and after every step (binary profiles on paths).
  std::vector<PotentialValue> potentials;
  /// Step at which a canonical state first repeated (kept when running on).
  std::optional<std::size_t> first_revisit;
};

struct RunOptions {
  std::size_t max_steps = 0;  ///< 0 = 10^4 * n
  std::uint64_t seed = 0;
  /// Keep going after a repeated state instead of stopping with LoopDetected.
  bool continue_after_loop = false;
  bool keep_trace = true;
};

DynamicsReport run(const Profile& p, const Topology& t, const Arrangement& a0, const SwapPolicy& policy,
                   const RunOptions& opts = {});

/// True iff the potential strictly increased at every recorded step.
/// Throws std::invalid_argument unless the report carries potentials
/// (binary profile on a path).
bool audit_potential(const Profile& p, const DynamicsReport& report);

struct EnsembleSummary {
  std::size_t runs = 0;
  std::size_t converged = 0;
  std::size_t loops = 0;
  std::size_t capped = 0;
  std::uint64_t total_steps = 0;
  bool operator==(const EnsembleSummary&) const = default;
};

/// Runs from uniformly random starts; run r uses a generator seeded from
/// (seed, r) only, so results do not depend on the worker count.
EnsembleSummary run_ensemble(const Profile& p, const Topology& t, const SwapPolicy& policy, std::size_t runs,
                             std::uint64_t seed, std::size_t max_steps = 0);
EnsembleSummary run_ensemble_serial(const Profile& p, const Topology& t, const SwapPolicy& policy, std::size_t runs,
                                    std::uint64_t seed, std::size_t max_steps = 0);

/// Seed of run `index` in an ensemble.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// ---- rewriting operators on binary strings --------------------------------

enum class RewriteOp { F3, F4 };
std::string to_string(RewriteOp op);

/// f3: 0x1 -> 1x'0, f4: 0xy1 -> 1y'x'0 (x' = complement) applied at the
/// 0-based position `pos`. Throws std::invalid_argument on a mismatch.
std::string apply_f(RewriteOp op, const std::string& s, std::size_t pos);

struct RewriteStep {
  RewriteOp op;
  std::size_t pos;  ///< 0-based
  std::string before, after;
};

struct RewriteTrace {
  std::string start, end;
  std::vector<RewriteStep> steps;
};

/// Expands 0^(3k-2)1 -> 10^(3k-2) into atomic f3/f4 steps (2^k - 2 of them),
/// validating each with apply_f.
RewriteTrace expand_chain(std::size_t k);

}  // namespace seating
