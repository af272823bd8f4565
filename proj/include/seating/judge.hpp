#pragma once

// Ground-truth evaluation of an arrangement: utilities, envy, blocking pairs,
// stability / envy-freeness certificates, welfare and the lexicographic
// (welfare, edge-sequence) potential used on binary paths.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "seating/profile.hpp"

namespace seating {

enum class Criterion { Stable, EnvyFree };

std::string to_string(Criterion c);
Criterion parse_criterion(const std::string& text);

struct Witness {
  enum class Kind { Envy, BlockingPair };
  Kind kind = Kind::BlockingPair;
  Agent first = 0;   ///< the envious agent for Kind::Envy
  Agent second = 0;  ///< the envied agent for Kind::Envy
  std::size_t first_seat = 0;
  std::size_t second_seat = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// {"kind": "envy"|"blocking_pair", "agents": [i, j]}
std::string witness_json(const Witness& w);

Value utility(const Profile& p, const Topology& t, const Arrangement& a, Agent agent);

/// Whether i strictly gains from trading seats with j. Adjacent trades keep
/// the partner as a neighbour.
bool envies(const Profile& p, const Topology& t, const Arrangement& a, Agent i, Agent j);

/// Same question answered by rebuilding the swapped arrangement and
/// recomputing utility from scratch. Slow; kept as the reference for envies().
bool envies_by_definition(const Profile& p, const Topology& t, const Arrangement& a, Agent i, Agent j);

/// All mutual-envy pairs (i < j), sorted by agent id.
std::vector<Witness> blocking_pairs(const Profile& p, const Topology& t, const Arrangement& a);

/// All directed envy edges, sorted by (envious, envied).
std::vector<Witness> envy_edges(const Profile& p, const Topology& t, const Arrangement& a);

struct Verdict {
  bool ok = true;
  std::optional<Witness> witness;
  explicit operator bool() const noexcept { return ok; }
};

Verdict is_stable(const Profile& p, const Topology& t, const Arrangement& a);
Verdict is_envy_free(const Profile& p, const Topology& t, const Arrangement& a);
Verdict check(const Profile& p, const Topology& t, const Arrangement& a, Criterion c);

Value welfare(const Profile& p, const Topology& t, const Arrangement& a);

/// Adjacent-pair coding on a binary path: 0 neither likes the other,
/// 3 mutual, 1 only left->right, 2 only right->left. Throws
/// std::invalid_argument for non-binary profiles or cycles.
std::vector<int> edge_sequence(const Profile& p, const Arrangement& a, const Topology& t);

struct PotentialValue {
  Value welfare = 0;
  std::vector<int> edge_seq;

  friend bool operator==(const PotentialValue&, const PotentialValue&) = default;
  friend std::strong_ordering operator<=>(const PotentialValue& x, const PotentialValue& y) {
    if (auto c = x.welfare <=> y.welfare; c != 0) return c;
    return x.edge_seq <=> y.edge_seq;
  }
};

PotentialValue potential(const Profile& p, const Arrangement& a, const Topology& t);

}  // namespace seating
