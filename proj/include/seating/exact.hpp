#pragma once

// Brute-force solvers and counters over arrangements.
//
// Agent mode enumerates one representative per symmetry orbit: on a cycle,
// agent 0 is pinned to seat 0 and seat 1 holds the smaller of its two
// neighbours, giving (n-1)!/2 arrangements; on a path the first seat holds a
// smaller agent than the last, giving n!/2. Class mode enumerates class
// sequences (multiset permutations) with the same pinning applied to classes.
//
// The *_serial variants are the single-threaded references for the
// OpenMP-sharded kernels and must return identical results.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "seating/judge.hpp"
#include "seating/profile.hpp"

namespace seating {

struct Digraph;

struct ExactOptions {
  std::size_t agent_limit = 11;
  std::uint64_t sequence_limit = 100'000'000;
};

struct SolveResult {
  std::optional<Arrangement> arrangement;
  /// Arrangements (or class sequences) evaluated; on failure this is the
  /// full deduplicated search space, which certifies nonexistence.
  std::uint64_t enumerated = 0;
  explicit operator bool() const noexcept { return arrangement.has_value(); }
};

struct ClassSolveResult {
  std::optional<std::vector<int>> sequence;
  std::optional<Arrangement> arrangement;  ///< on expand_classes(c)
  std::uint64_t enumerated = 0;
  explicit operator bool() const noexcept { return sequence.has_value(); }
};

/// (n-1)!/2 on cycles, n!/2 on paths (1 for a one-seat path).
std::uint64_t arrangement_count(const Topology& t);

/// n! / (n_1! ... n_k!), saturating at UINT64_MAX.
std::uint64_t multinomial(const std::vector<std::size_t>& sizes);

/// Calls f on every deduplicated arrangement until it returns true.
/// Returns the number of arrangements visited.
std::uint64_t for_each_arrangement(const Topology& t, const std::function<bool(std::span<const int>)>& f);

/// Calls f on every class sequence (with cycle pinning / path reflection
/// dedup) until it returns true. Returns the number visited.
std::uint64_t for_each_class_sequence(const ClassStructure& c, const Topology& t,
                                      const std::function<bool(std::span<const int>)>& f);

/// Lowest-ranked arrangement meeting the criterion, or a nonexistence
/// certificate. Throws LimitExceeded above opts.agent_limit agents.
SolveResult find_arrangement(const Profile& p, const Topology& t, Criterion c, const ExactOptions& opts = {});
SolveResult find_arrangement_serial(const Profile& p, const Topology& t, Criterion c,
                                    const ExactOptions& opts = {});

ClassSolveResult find_class_arrangement(const ClassStructure& c, const Topology& t, Criterion crit,
                                        const ExactOptions& opts = {});

/// Number of deduplicated arrangements with no blocking pair.
std::uint64_t count_stable(const Profile& p, const Topology& t, const ExactOptions& opts = {});
std::uint64_t count_stable_serial(const Profile& p, const Topology& t, const ExactOptions& opts = {});

/// Class-level counterpart of count_stable: class sequences without a
/// blocking pair (with the class-mode symmetry pinning).
std::uint64_t count_class_sequences(const ClassStructure& c, const Topology& t, Criterion crit,
                                    const ExactOptions& opts = {});

struct EfHamiltonicity {
  bool ef_exists = false;
  bool ham_exists = false;
};

/// Envy-free existence on the cycle gadget profile vs. Hamiltonian-cycle
/// existence in g; both computed by independent enumeration.
EfHamiltonicity ef_equiv_hamiltonicity_cycle(const Digraph& g);

/// Path variant; `sink` must have no outgoing edges.
EfHamiltonicity ef_equiv_hamiltonicity_path(const Digraph& g, std::size_t sink);

bool has_hamiltonian_cycle(const Digraph& g);
bool has_hamiltonian_path(const Digraph& g);

}  // namespace seating
