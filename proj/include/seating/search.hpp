#pragma once

// Exhaustive and sampled scans over profile spaces.
//
// A profile over a value set of size g is the base-g integer whose digit c
// (least significant first) is the value index of off-diagonal cell c, cells
// numbered row-major. Shards are integer ranges of that index space.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seating/profile.hpp"

namespace seating {

struct SearchMode {
  enum class Kind { Full, Sharded, Sampled };
  Kind kind = Kind::Full;
  std::uint64_t shard = 0, shards = 1;  ///< Sharded: shard a of b
  std::uint64_t trials = 0, seed = 0;   ///< Sampled

  static SearchMode full() { return {}; }
  static SearchMode sharded(std::uint64_t a, std::uint64_t b);
  static SearchMode sampled(std::uint64_t trials, std::uint64_t seed);
};

std::string to_string(const SearchMode& m);

struct SearchOptions {
  /// Largest index space a Full scan accepts.
  std::uint64_t budget = std::uint64_t{1} << 32;
};

struct SearchReport {
  std::size_t n = 0;
  std::vector<Value> values;
  TopologyKind topology = TopologyKind::Cycle;
  SearchMode mode;
  std::uint64_t scanned = 0;  ///< indices covered
  std::uint64_t tested = 0;   ///< profiles whose stability was decided
  std::uint64_t unstable = 0; ///< tested profiles without a stable arrangement
  /// Canonical forms of the unstable profiles, sorted, deduplicated.
  std::vector<Profile> families;

  std::size_t family_count() const noexcept { return families.size(); }
};

/// |values|^(n(n-1)), or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> profile_space_size(std::size_t n, std::size_t value_count);

Profile decode_profile(std::size_t n, const std::vector<Value>& values, std::uint64_t index);

/// Profiles whose row sums are not non-decreasing are skipped (counted as
/// scanned, not tested): every profile is isomorphic to one that is not.
SearchReport exhaust(std::size_t n, const std::vector<Value>& values, const Topology& t, const SearchMode& mode,
                     const SearchOptions& opts = {});
SearchReport exhaust_serial(std::size_t n, const std::vector<Value>& values, const Topology& t,
                            const SearchMode& mode, const SearchOptions& opts = {});

/// Union of shard reports (same n, values, topology).
SearchReport merge_reports(const std::vector<SearchReport>& parts);

/// "P5", "P7(1)" or "P7(2)" for the unstable binary cycle families.
std::optional<std::string> family_label(const Profile& canonical);

/// Family `index` of a Full scan of (n, values, t).
Profile recover_family(std::size_t n, const std::vector<Value>& values, const Topology& t, std::size_t index,
                       const SearchOptions& opts = {});
Profile recover_family(const SearchReport& report, std::size_t index);

struct SweepOptions {
  /// Cross-check polyclass against exact class-sequence search when the
  /// number of sequences is at most this.
  std::uint64_t cross_check_limit = 500;
  /// Above the cross-check limit, class sequences tried for a stable
  /// witness before falling back to polyclass.
  std::uint64_t probe_limit = 20'000;
};

struct SweepReport {
  std::size_t k = 0, max_per_class = 0;
  std::vector<Value> values;
  TopologyKind topology = TopologyKind::Path;
  std::uint64_t instances = 0;      ///< (matrix, sizes) pairs decided
  std::uint64_t skipped = 0;        ///< class relabelings of decided ones
  std::uint64_t cross_checked = 0;  ///< also decided by exact search
  std::uint64_t witnessed = 0;      ///< settled by a probed stable sequence
  std::vector<ClassStructure> unstable;
};

/// Every k x k class matrix over `values` and every size tuple in
/// [1, max_per_class]^k, up to class relabeling, decided for stability.
/// Small instances run both polyclass and exact search; larger ones take a
/// stable sequence from a bounded probe when one turns up, else polyclass.
/// Throws std::logic_error if polyclass and exact search disagree.
SweepReport kclass_sweep(std::size_t k, std::size_t max_per_class, const std::vector<Value>& values,
                         TopologyKind t, const SweepOptions& opts = {});
SweepReport kclass_sweep_serial(std::size_t k, std::size_t max_per_class, const std::vector<Value>& values,
                                TopologyKind t, const SweepOptions& opts = {});

/// Writes one profile JSON per family to `dir` as <prefix><i>.json and
/// returns the paths.
std::vector<std::string> write_family_fixtures(const SearchReport& report, const std::string& dir,
                                               const std::string& prefix);

}  // namespace seating
