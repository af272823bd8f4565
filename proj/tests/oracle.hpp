#pragma once

// Reference implementations for tests. Everything here works from the
// definitions on plain matrices and seat vectors and shares no code with the
// library kernels.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<long long>>;
using Seats = std::vector<int>;

inline std::vector<std::size_t> seat_neighbours(std::size_t n, bool cycle, std::size_t s) {
  std::vector<std::size_t> out;
  if (cycle) {
    out = {(s + n - 1) % n, (s + 1) % n};
  } else {
    if (s > 0) out.push_back(s - 1);
    if (s + 1 < n) out.push_back(s + 1);
  }
  return out;
}

inline long long utility(const Matrix& m, const Seats& seats, bool cycle, int agent) {
  const std::size_t n = seats.size();
  const std::size_t s = std::find(seats.begin(), seats.end(), agent) - seats.begin();
  long long u = 0;
  for (auto t : seat_neighbours(n, cycle, s)) u += m[agent][seats[t]];
  return u;
}

inline bool envies(const Matrix& m, const Seats& seats, bool cycle, int i, int j) {
  Seats sw = seats;
  auto pi = std::find(sw.begin(), sw.end(), i);
  auto pj = std::find(sw.begin(), sw.end(), j);
  std::iter_swap(pi, pj);
  return utility(m, sw, cycle, i) > utility(m, seats, cycle, i);
}

inline bool stable(const Matrix& m, const Seats& seats, bool cycle) {
  const int n = static_cast<int>(seats.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (envies(m, seats, cycle, i, j) && envies(m, seats, cycle, j, i)) return false;
  return true;
}

inline bool envy_free(const Matrix& m, const Seats& seats, bool cycle) {
  const int n = static_cast<int>(seats.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && envies(m, seats, cycle, i, j)) return false;
  return true;
}

/// Visits all n! seatings, no symmetry reduction.
template <class F>
void for_each_seating(std::size_t n, F&& f) {
  Seats s(n);
  std::iota(s.begin(), s.end(), 0);
  do f(s);
  while (std::next_permutation(s.begin(), s.end()));
}

inline bool exists(const Matrix& m, bool cycle, bool ef) {
  bool found = false;
  Seats s(m.size());
  std::iota(s.begin(), s.end(), 0);
  do found = ef ? envy_free(m, s, cycle) : stable(m, s, cycle);
  while (!found && std::next_permutation(s.begin(), s.end()));
  return found;
}

/// Stable seatings among all n!; each cycle arrangement appears 2n times,
/// each path arrangement twice.
inline std::uint64_t count_stable_raw(const Matrix& m, bool cycle) {
  std::uint64_t c = 0;
  for_each_seating(m.size(), [&](const Seats& s) { c += stable(m, s, cycle); });
  return c;
}

inline Matrix expand(const std::vector<std::size_t>& sizes, const Matrix& cls) {
  std::vector<int> label;
  for (std::size_t c = 0; c < sizes.size(); ++c) label.insert(label.end(), sizes[c], static_cast<int>(c));
  Matrix m(label.size(), std::vector<long long>(label.size(), 0));
  for (std::size_t i = 0; i < label.size(); ++i)
    for (std::size_t j = 0; j < label.size(); ++j)
      if (i != j) m[i][j] = cls[label[i]][label[j]];
  return m;
}

inline Matrix random_matrix(std::size_t n, const std::vector<long long>& values, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  Matrix m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m[i][j] = values[pick(rng)];
  return m;
}

/// Least row-major matrix over all n! simultaneous relabelings.
inline Matrix canonical(const Matrix& m) {
  Matrix best;
  for_each_seating(m.size(), [&](const Seats& perm) {
    Matrix r(m.size(), std::vector<long long>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = m[perm[i]][perm[j]];
    if (best.empty() || r < best) best = r;
  });
  return best;
}

/// Probability that agents 0 and j block each other in the identity cycle
/// on n seats when every approval edge appears independently with
/// probability p: sums over all assignments of the edges leaving 0 and j,
/// the only edges their utilities depend on.
template <class Rational>
Rational blocking_by_summation(std::size_t n, int j, const Rational& p) {
  std::vector<std::pair<int, int>> edges;
  for (int from : {0, j})
    for (int to = 0; to < static_cast<int>(n); ++to)
      if (to != from) edges.emplace_back(from, to);
  const Rational q = 1 - p;
  Rational total = 0;
  Seats seats(n);
  std::iota(seats.begin(), seats.end(), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    Matrix m(n, std::vector<long long>(n, 0));
    Rational w = 1;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const bool on = mask >> e & 1;
      m[edges[e].first][edges[e].second] = on;
      w *= on ? p : q;
    }
    if (envies(m, seats, true, 0, j) && envies(m, seats, true, j, 0)) total += w;
  }
  return total;
}

}  // namespace oracle
