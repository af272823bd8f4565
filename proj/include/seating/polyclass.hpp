#pragma once

// k-class decision procedure over class sequences.
//
// A class sequence is built left to right. Each time the triple centred at a
// position is complete it is checked against its left neighbour (short
// range) and against every earlier triple (long range) through per-triple
// counters, so the state only needs the last few symbols, the per-class
// usage and the counters. Paths pad the sequence with a dummy class at both
// ends; cycles guess the last symbol up front and close the ring with an
// extra step.

#include <cstdint>
#include <optional>
#include <vector>

#include "seating/judge.hpp"
#include "seating/profile.hpp"

namespace seating {

/// Compatibility relations for one class structure and criterion. Class ids
/// are shifted by one; 0 is the dummy class with zero preferences.
class TripleTable {
 public:
  TripleTable(const ClassStructure& c, Criterion crit);

  std::size_t symbols() const noexcept { return m_; }  ///< k + 1
  Value pref(int observer, int other) const noexcept;

  /// (a,b,c) and (b,c,d) on consecutive positions.
  bool short_ok(int a, int b, int c, int d) const noexcept { return short_[((a * m_ + b) * m_ + c) * m_ + d]; }
  /// Triples with index t = (a*m + b)*m + c.
  bool long_ok(std::size_t t1, std::size_t t2) const noexcept { return long_[t1 * m_ * m_ * m_ + t2]; }
  std::size_t triple(int a, int b, int c) const noexcept { return (static_cast<std::size_t>(a) * m_ + b) * m_ + c; }

 private:
  std::size_t m_;
  std::vector<Value> pref_;
  std::vector<char> short_;
  std::vector<char> long_;
};

/// How a state remembers the triples seen so far (excluding the most recent
/// one, which is still in the window).
enum class TripleMemory {
  /// Union of the triples that can no longer appear. States with the same
  /// union are merged.
  ForbiddenSet,
  /// Per-triple counters.
  Counts,
};

struct PolyOptions {
  TripleMemory memory = TripleMemory::ForbiddenSet;
  /// Counts mode: counters saturate at 4; false keeps exact counts.
  bool cap_counters = true;
  std::uint64_t max_states = 50'000'000;
};

struct PolyResult {
  std::optional<std::vector<int>> sequence;  ///< class per seat (0-based classes)
  std::optional<Arrangement> arrangement;    ///< on expand_classes(c)
  std::uint64_t visited = 0;
  std::uint64_t frontier_peak = 0;
  explicit operator bool() const noexcept { return sequence.has_value(); }
};

/// Largest class count the tables are built for.
inline constexpr std::size_t kPolyMaxClasses = 8;

PolyResult decide_path(const ClassStructure& c, Criterion crit, const PolyOptions& opts = {});
PolyResult decide_cycle(const ClassStructure& c, Criterion crit, const PolyOptions& opts = {});
PolyResult decide(const ClassStructure& c, const Topology& t, Criterion crit, const PolyOptions& opts = {});

/// Same search with a prebuilt table; `tab` must come from a structure with
/// the same class matrix as `c` (sizes may differ).
PolyResult decide(const TripleTable& tab, const ClassStructure& c, const Topology& t, Criterion crit,
                  const PolyOptions& opts = {});

struct CompatResult {
  bool ok = true;
  /// Seats (0-based) of the first incompatible pair.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
};

/// Pairwise triple check of a full class sequence; agrees with the judge on
/// the expanded arrangement.
CompatResult check_compatible(const ClassStructure& c, const Topology& t, std::span<const int> sequence,
                              Criterion crit);

}  // namespace seating
