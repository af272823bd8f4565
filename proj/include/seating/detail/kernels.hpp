#pragma once

// Inner loops shared by the agent-level judge and the class-sequence
// solvers. `Val` maps (occupant, occupant) -> Value; occupants are agent ids
// or class ids, depending on the caller.

#include <cstddef>
#include <span>
#include <vector>

#include "seating/profile.hpp"

namespace seating::detail {

/// Utility of `who` when seated at `seat`, where seat `moved_from` now holds
/// `moved_in` (pass moved_from == n for an untouched arrangement).
template <class Val>
Value utility_at(const Val& val, std::span<const int> occ, const Topology& t, std::size_t seat, int who,
                 std::size_t moved_from, int moved_in) {
  std::size_t nb[2];
  const int k = t.neighbors(seat, nb);
  Value u = 0;
  for (int q = 0; q < k; ++q) u += val(who, nb[q] == moved_from ? moved_in : occ[nb[q]]);
  return u;
}

/// Whether the occupant of seat `a` strictly gains by trading seats with the
/// occupant of seat `b`.
template <class Val>
bool envies_seat(const Val& val, std::span<const int> occ, const Topology& t, std::size_t a, std::size_t b) {
  const int x = occ[a];
  const int y = occ[b];
  const Value before = utility_at(val, occ, t, a, x, t.n, 0);
  const Value after = utility_at(val, occ, t, b, x, a, y);
  return after > before;
}

template <class Val>
bool blocks_seats(const Val& val, std::span<const int> occ, const Topology& t, std::size_t a, std::size_t b) {
  return envies_seat(val, occ, t, a, b) && envies_seat(val, occ, t, b, a);
}

/// Seat pairs in scan order: adjacent pairs first, then the rest by seat.
/// Calls f(a, b) and stops when it returns true; returns whether it stopped.
template <class F>
bool for_each_seat_pair(const Topology& t, F&& f) {
  const std::size_t n = t.n;
  for (std::size_t a = 0; a + 1 < n; ++a)
    if (f(a, a + 1)) return true;
  if (t.is_cycle() && n > 2 && f(0, n - 1)) return true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 2; b < n; ++b) {
      if (t.is_cycle() && a == 0 && b == n - 1) continue;
      if (f(a, b)) return true;
    }
  }
  return false;
}

/// True when no seat pair forms a blocking pair (stable) or, with
/// `envy_free`, when nobody envies anybody.
template <class Val>
bool satisfies(const Val& val, std::span<const int> occ, const Topology& t, bool envy_free) {
  const bool violated = for_each_seat_pair(t, [&](std::size_t a, std::size_t b) {
    if (envy_free) return envies_seat(val, occ, t, a, b) || envies_seat(val, occ, t, b, a);
    return blocks_seats(val, occ, t, a, b);
  });
  return !violated;
}

struct ProfileVal {
  const Profile* p;
  Value operator()(int a, int b) const noexcept { return (*p)(a, b); }
};

/// Row-major copy of a class matrix.
struct ClassVal {
  std::vector<Value> m;
  std::size_t k = 0;
  explicit ClassVal(const ClassStructure& c) : k(c.k()) {
    m.reserve(k * k);
    for (const auto& r : c.matrix) m.insert(m.end(), r.begin(), r.end());
  }
  Value operator()(int a, int b) const noexcept { return m[a * k + b]; }
};

}  // namespace seating::detail
