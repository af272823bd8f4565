#pragma once

// Core data model: preference profiles, seat topologies, arrangements and
// agent classes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seating {

using Value = std::int64_t;
using Agent = int;

/// Thrown when an instance is larger than an enumeration budget allows.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n x n integer preference matrix; entry (i, j) is what agent i gains from
/// sitting next to agent j. The diagonal is always zero.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::size_t n) : n_(n), values_(n * n, 0) {}

  /// Validates squareness and a zero diagonal.
  static Profile from_rows(const std::vector<std::vector<Value>>& rows);

  std::size_t size() const noexcept { return n_; }
  Value operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * n_ + j]; }
  std::span<const Value> row(std::size_t i) const noexcept {
    return {values_.data() + i * n_, n_};
  }
  std::span<const Value> data() const noexcept { return values_; }

  /// Off-diagonal write. Throws std::invalid_argument for i == j and v != 0.
  void set(std::size_t i, std::size_t j, Value v);

  std::vector<std::vector<Value>> rows() const;

  /// Profile on agents `order[0..m)`, relabeled 0..m-1.
  Profile restricted(std::span<const Agent> order) const;

  bool is_symmetric() const noexcept;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile& a, const Profile& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.values_ <=> b.values_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Value> values_;
};

enum class TopologyKind { Path, Cycle };

struct Topology {
  TopologyKind kind = TopologyKind::Path;
  std::size_t n = 0;

  /// n >= 1.
  static Topology path(std::size_t n);
  /// n >= 3; a two-seat cycle would count the single neighbour twice.
  static Topology cycle(std::size_t n);

  bool is_cycle() const noexcept { return kind == TopologyKind::Cycle; }

  /// Up to two neighbouring seats; on a path the missing ones are absent.
  int neighbors(std::size_t seat, std::size_t out[2]) const noexcept {
    int k = 0;
    if (kind == TopologyKind::Cycle) {
      out[k++] = (seat + n - 1) % n;
      out[k++] = (seat + 1) % n;
    } else {
      if (seat > 0) out[k++] = seat - 1;
      if (seat + 1 < n) out[k++] = seat + 1;
    }
    return k;
  }

  /// Seat-index distance; on a cycle, the shorter arc.
  std::size_t distance(std::size_t a, std::size_t b) const noexcept {
    std::size_t d = a > b ? a - b : b - a;
    if (kind == TopologyKind::Cycle && n - d < d) d = n - d;
    return d;
  }

  friend bool operator==(const Topology&, const Topology&) = default;
};

std::string to_string(TopologyKind kind);
TopologyKind parse_topology_kind(const std::string& text);

/// Seat index -> agent. Always a permutation of 0..n-1.
class Arrangement {
 public:
  Arrangement() = default;
  explicit Arrangement(std::vector<Agent> seats);
  static Arrangement identity(std::size_t n);

  std::size_t size() const noexcept { return seats_.size(); }
  Agent operator[](std::size_t seat) const noexcept { return seats_[seat]; }
  std::span<const Agent> seats() const noexcept { return seats_; }
  /// Agent -> seat.
  std::vector<std::size_t> positions() const;

  /// Exchanges the agents sitting at two seats.
  Arrangement swapped_seats(std::size_t a, std::size_t b) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
  friend auto operator<=>(const Arrangement&, const Arrangement&) = default;

 private:
  std::vector<Agent> seats_;
};

/// Canonical representative up to reflection (path) or rotation and
/// reflection (cycle).
Arrangement canonical_arrangement(const Arrangement& a, const Topology& t);

/// Compressed k-class profile. matrix[a][b] is what a class-a agent gains
/// from a class-b neighbour; the diagonal is the within-class value.
struct ClassStructure {
  std::vector<std::size_t> sizes;
  std::vector<std::vector<Value>> matrix;

  std::size_t k() const noexcept { return sizes.size(); }
  std::size_t n() const noexcept;
  void validate() const;

  friend bool operator==(const ClassStructure&, const ClassStructure&) = default;
};

/// Result of class detection: the structure plus each agent's class label.
/// Classes are numbered by first appearance.
struct ClassDecomposition {
  ClassStructure classes;
  std::vector<int> label;
};

ClassDecomposition detect_classes(const Profile& p);

/// Class c occupies a contiguous block of agent ids, in class order.
Profile expand_classes(const ClassStructure& c);

/// Agent ids of each class in the expanded profile.
std::vector<std::vector<Agent>> class_members(const ClassStructure& c);

/// Arrangement realizing a class sequence; agents of one class are seated
/// in ascending id order.
Arrangement arrangement_from_classes(const ClassStructure& c, std::span<const int> sequence);

struct ValueProfileMeta {
  std::vector<Value> value_set;
  bool is_binary = false;
  bool is_nonnegative = false;
  std::size_t k_valued = 0;
};

ValueProfileMeta value_meta(const Profile& p);

/// Per-row positive affine normalization: subtract the row minimum and
/// divide by the gcd of the shifted entries. Utility comparisons on regular
/// seat graphs are unchanged.
Profile normalize_for_cycle(const Profile& p);

inline constexpr std::size_t kCanonicalLimit = 8;

/// Lexicographically least matrix over simultaneous row/column relabelings.
Profile canonical_profile(const Profile& p);

/// Connected components of the "cares about" graph (p_ab != 0 or p_ba != 0),
/// as a component label per agent numbered by first appearance.
std::vector<int> components(const Profile& p);

// ---- text formats ---------------------------------------------------------

/// Accepts profile JSON {"n", "values"} or CSV rows.
Profile parse_profile(const std::string& text);
std::string emit_profile_json(const Profile& p);
std::string emit_profile_csv(const Profile& p);

ClassStructure parse_classes(const std::string& text);
std::string emit_classes_json(const ClassStructure& c);

/// "0,1,2,3" style seat lists.
Arrangement parse_arrangement(const std::string& text);
std::string format_arrangement(const Arrangement& a);

}  // namespace seating
