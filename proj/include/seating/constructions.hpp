#pragma once

// Generators for the named instance families and reductions, plus the
// constructive stable-arrangement builders for the always-stable regimes.

#include <string>
#include <utility>
#include <vector>

#include "seating/profile.hpp"

namespace seating {

/// Directed graph without self-loops on vertices 0..vertices-1.
struct Digraph {
  std::size_t vertices = 0;
  std::vector<std::pair<int, int>> edges;

  Digraph() = default;
  Digraph(std::size_t n, std::vector<std::pair<int, int>> e);

  bool has_edge(int u, int v) const noexcept;
  std::size_t out_degree(int v) const noexcept;

  /// The graph on n vertices whose edge set is given by the bits of `mask`
  /// over the n(n-1) ordered pairs (u, v), u != v, in row-major order.
  static Digraph from_mask(std::size_t n, std::uint64_t mask);
};

/// "u v" per line, 0-based. The vertex count is 1 + the largest id unless a
/// leading "n <count>" line is present.
Digraph parse_edge_list(const std::string& text);

/// Gadget x_v -> y_v -> z_v -> {x_u : (v,u) in E}. A vertex without outgoing
/// edges maps to the canonical no-instance (abf_cycle(4)), except for the
/// single-vertex graph, which maps to three mutually indifferent agents.
Profile hamiltonian_cycle_profile(const Digraph& g);

/// Same gadget for paths; only non-sink vertices must have outgoing edges
/// (otherwise the canonical no-instance pm1_path(3)).
Profile hamiltonian_path_profile(const Digraph& g, std::size_t sink);

/// Agent ids of the gadget: x_v = 3v, y_v = 3v + 1, z_v = 3v + 2.
inline int gadget_x(int v) { return 3 * v; }
inline int gadget_y(int v) { return 3 * v + 1; }
inline int gadget_z(int v) { return 3 * v + 2; }

/// Alice (0), Bob (1), n-2 friends. Alice: Bob 0, friend 1. Bob: Alice 1,
/// friend 0. Friend: Bob 2, friend 1, Alice 0. No stable cycle arrangement.
Profile abf_cycle(std::size_t n);

/// Alice (0), three Bobs (1..3), n-4 friends. No stable path arrangement.
Profile abf_path(std::size_t n);

/// a (0), b1 b2 (1, 2), c (3), d_1..d_{n-4}. Binary, four classes, no stable
/// cycle arrangement.
Profile four_class_cycle(std::size_t n);

/// Alice (0), Bob (1), n-2 friends over {-1, 1}. No stable path arrangement.
Profile pm1_path(std::size_t n);

/// Directed 4-cycle a -> b -> c -> d -> a (agents 0..3).
Profile p4_loop();

struct NonmonotoneTriple {
  Profile unstable;  ///< four_class_cycle(n)
  Profile minus_a;   ///< agent a removed (n-1 agents)
  Profile plus_b3;   ///< an extra B-class agent appended as agent n
  Arrangement minus_a_stable;  ///< c seated between b1 and b2
  Arrangement plus_b3_stable;  ///< b1, c, b2, a, b3 consecutive
};

NonmonotoneTriple nonmonotone_pair(std::size_t n);

struct BlockwiseEuler {
  Profile profile;          ///< 2l+1 diagonal copies of the base
  Arrangement arrangement;  ///< cycle arrangement following an Euler tour of K_{2l+1}
  std::vector<int> tour;    ///< component visited at each seat
};

/// Euler tour of the complete graph on `k` (odd) vertices by Hierholzer's
/// method, lowest-numbered vertex first. Returns the closed vertex sequence
/// without repeating the start.
std::vector<int> complete_graph_euler_tour(std::size_t k);

BlockwiseEuler blockwise_euler(const Profile& base);

/// Both conditions of the zero-utility stability lemma: every agent's two
/// neighbours lie outside its component, and every pair of components is
/// adjacent at most once.
bool zero_utility_lemma_holds(const Profile& p, const Arrangement& a);

/// Stable arrangement for k <= 2 classes. Throws std::logic_error if the
/// result fails verification.
Arrangement two_class_stable(const ClassStructure& c, const Topology& t);

/// Stable cycle arrangement for a three-class two-valued structure. Throws
/// std::logic_error if the result fails verification.
Arrangement three_class_two_valued_cycle_stable(const ClassStructure& c);

/// Class sequence on a cycle with the fewest same-class adjacencies.
std::vector<int> min_monochromatic_cycle_sequence(const std::vector<std::size_t>& sizes);

std::size_t monochromatic_adjacencies(std::span<const int> sequence, bool cycle);

std::vector<std::string> family_names();

/// Profile for a named family ("abf_cycle", "abf_path", "four_class_cycle",
/// "pm1_path", "p4_loop").
Profile construct_family(const std::string& name, std::size_t n);

}  // namespace seating
