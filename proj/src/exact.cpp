#include "seating/exact.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#include "seating/constructions.hpp"
#include "seating/detail/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seating {

namespace {

std::uint64_t factorial(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

/// Permutations of `base` (sorted) in lexicographic rank order, mapped to
/// seatings and filtered down to one representative per reflection.
struct PermSpace {
  Topology t;
  std::vector<int> base;
  std::uint64_t total = 0;

  explicit PermSpace(const Topology& top) : t(top) {
    const int first = t.is_cycle() ? 1 : 0;
    for (int a = first; a < static_cast<int>(t.n); ++a) base.push_back(a);
    total = factorial(base.size());
  }

  std::vector<int> unrank(std::uint64_t r) const {
    std::vector<int> pool = base;
    std::vector<int> out;
    out.reserve(pool.size());
    for (std::size_t left = pool.size(); left > 0; --left) {
      const std::uint64_t f = factorial(left - 1);
      const std::size_t idx = static_cast<std::size_t>(r / f);
      r %= f;
      out.push_back(pool[idx]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
  }

  void seat(const std::vector<int>& perm, std::vector<int>& seats) const {
    if (t.is_cycle()) {
      seats[0] = 0;
      std::copy(perm.begin(), perm.end(), seats.begin() + 1);
    } else {
      std::copy(perm.begin(), perm.end(), seats.begin());
    }
  }

  bool representative(const std::vector<int>& seats) const {
    if (t.n < 2) return true;
    return t.is_cycle() ? seats[1] < seats[t.n - 1] : seats[0] < seats[t.n - 1];
  }

  /// Visits ranks [begin, end). Returns (representatives visited, stopped).
  template <class F>
  std::pair<std::uint64_t, bool> scan(std::uint64_t begin, std::uint64_t end, F&& f) const {
    if (begin >= end) return {0, false};
    std::vector<int> perm = unrank(begin);
    std::vector<int> seats(t.n);
    std::uint64_t visited = 0;
    for (std::uint64_t r = begin; r < end; ++r) {
      seat(perm, seats);
      if (representative(seats)) {
        ++visited;
        if (f(std::span<const int>(seats))) return {visited, true};
      }
      std::next_permutation(perm.begin(), perm.end());
    }
    return {visited, false};
  }
};

void check_agent_limit(const Profile& p, const Topology& t, const ExactOptions& opts) {
  if (p.size() != t.n) throw std::invalid_argument("profile and topology sizes disagree");
  if (t.n > opts.agent_limit)
    throw LimitExceeded("exact enumeration limited to " + std::to_string(opts.agent_limit) + " agents (got " +
                        std::to_string(t.n) + ")");
}

std::uint64_t shard_count(std::uint64_t total) {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  return std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, 64ull * static_cast<std::uint64_t>(threads)));
}

std::uint64_t shard_begin(std::uint64_t total, std::uint64_t shards, std::uint64_t s) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * s) / shards);
}

}  // namespace

std::uint64_t arrangement_count(const Topology& t) {
  if (t.is_cycle()) return factorial(t.n - 1) / 2;
  return t.n < 2 ? 1 : factorial(t.n) / 2;
}

std::uint64_t multinomial(const std::vector<std::size_t>& sizes) {
  // Product of binomials, each computed incrementally and exactly.
  unsigned __int128 result = 1;
  std::size_t placed = 0;
  for (std::size_t s : sizes) {
    unsigned __int128 binom = 1;
    for (std::size_t i = 1; i <= s; ++i) {
      binom = binom * (placed + i) / i;
      if (binom > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    placed += s;
    result *= binom;
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t for_each_arrangement(const Topology& t, const std::function<bool(std::span<const int>)>& f) {
  PermSpace space(t);
  return space.scan(0, space.total, f).first;
}

std::uint64_t for_each_class_sequence(const ClassStructure& c, const Topology& t,
                                      const std::function<bool(std::span<const int>)>& f) {
  c.validate();
  const std::size_t n = c.n();
  if (n != t.n) throw std::invalid_argument("class sizes and topology disagree");
  std::vector<int> seq;
  for (std::size_t a = 0; a < c.k(); ++a) seq.insert(seq.end(), c.sizes[a], static_cast<int>(a));
  std::uint64_t visited = 0;
  if (t.is_cycle()) {
    // seq is sorted, so seq[0] == 0 is the smallest class; keep it at seat 0.
    do {
      if (seq[1] > seq[n - 1]) continue;
      ++visited;
      if (f(seq)) return visited;
    } while (std::next_permutation(seq.begin() + 1, seq.end()));
  } else {
    std::vector<int> rev(n);
    do {
      std::reverse_copy(seq.begin(), seq.end(), rev.begin());
      if (rev < seq) continue;
      ++visited;
      if (f(seq)) return visited;
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
  return visited;
}

SolveResult find_arrangement_serial(const Profile& p, const Topology& t, Criterion c, const ExactOptions& opts) {
  check_agent_limit(p, t, opts);
  const detail::ProfileVal val{&p};
  const bool ef = c == Criterion::EnvyFree;
  SolveResult out;
  out.enumerated = for_each_arrangement(t, [&](std::span<const int> seats) {
    if (!detail::satisfies(val, seats, t, ef)) return false;
    out.arrangement = Arrangement(std::vector<Agent>(seats.begin(), seats.end()));
    return true;
  });
  return out;
}

SolveResult find_arrangement(const Profile& p, const Topology& t, Criterion c, const ExactOptions& opts) {
  check_agent_limit(p, t, opts);
  const PermSpace space(t);
  const detail::ProfileVal val{&p};
  const bool ef = c == Criterion::EnvyFree;
  const std::uint64_t shards = shard_count(space.total);
  std::vector<std::optional<std::vector<int>>> hit(shards);
  std::vector<std::uint64_t> visited(shards, 0);
  std::atomic<std::uint64_t> best{shards};

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(shards); ++si) {
    const auto s = static_cast<std::uint64_t>(si);
    if (s > best.load(std::memory_order_relaxed)) continue;
    auto [count, stopped] = space.scan(shard_begin(space.total, shards, s), shard_begin(space.total, shards, s + 1),
                                       [&](std::span<const int> seats) {
                                         if (s > best.load(std::memory_order_relaxed)) return true;
                                         if (!detail::satisfies(val, seats, t, ef)) return false;
                                         hit[s] = std::vector<int>(seats.begin(), seats.end());
                                         return true;
                                       });
    visited[s] = count;
    if (hit[s]) {
      std::uint64_t cur = best.load();
      while (s < cur && !best.compare_exchange_weak(cur, s)) {
      }
    }
  }

  SolveResult out;
  const std::uint64_t winner = best.load();
  if (winner < shards) {
    out.arrangement = Arrangement(*hit[winner]);
    // Report the serial-equivalent count: everything up to the hit.
    for (std::uint64_t s = 0; s <= winner; ++s) out.enumerated += visited[s];
  } else {
    out.enumerated = std::accumulate(visited.begin(), visited.end(), std::uint64_t{0});
  }
  return out;
}

ClassSolveResult find_class_arrangement(const ClassStructure& c, const Topology& t, Criterion crit,
                                        const ExactOptions& opts) {
  c.validate();
  if (multinomial(c.sizes) > opts.sequence_limit)
    throw LimitExceeded("class-sequence count " + std::to_string(multinomial(c.sizes)) + " exceeds limit " +
                        std::to_string(opts.sequence_limit));
  const detail::ClassVal val(c);
  const bool ef = crit == Criterion::EnvyFree;
  ClassSolveResult out;
  out.enumerated = for_each_class_sequence(c, t, [&](std::span<const int> seq) {
    if (!detail::satisfies(val, seq, t, ef)) return false;
    out.sequence = std::vector<int>(seq.begin(), seq.end());
    return true;
  });
  if (out.sequence) out.arrangement = arrangement_from_classes(c, *out.sequence);
  return out;
}

std::uint64_t count_stable_serial(const Profile& p, const Topology& t, const ExactOptions& opts) {
  check_agent_limit(p, t, opts);
  const detail::ProfileVal val{&p};
  std::uint64_t count = 0;
  for_each_arrangement(t, [&](std::span<const int> seats) {
    count += detail::satisfies(val, seats, t, false) ? 1 : 0;
    return false;
  });
  return count;
}

std::uint64_t count_stable(const Profile& p, const Topology& t, const ExactOptions& opts) {
  check_agent_limit(p, t, opts);
  const PermSpace space(t);
  const detail::ProfileVal val{&p};
  const std::uint64_t shards = shard_count(space.total);
  std::uint64_t count = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : count)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(shards); ++si) {
    const auto s = static_cast<std::uint64_t>(si);
    space.scan(shard_begin(space.total, shards, s), shard_begin(space.total, shards, s + 1),
               [&](std::span<const int> seats) {
                 count += detail::satisfies(val, seats, t, false) ? 1 : 0;
                 return false;
               });
  }
  return count;
}

std::uint64_t count_class_sequences(const ClassStructure& c, const Topology& t, Criterion crit,
                                    const ExactOptions& opts) {
  if (multinomial(c.sizes) > opts.sequence_limit) throw LimitExceeded("class-sequence count exceeds limit");
  const detail::ClassVal val(c);
  const bool ef = crit == Criterion::EnvyFree;
  std::uint64_t count = 0;
  for_each_class_sequence(c, t, [&](std::span<const int> seq) {
    count += detail::satisfies(val, seq, t, ef) ? 1 : 0;
    return false;
  });
  return count;
}

bool has_hamiltonian_cycle(const Digraph& g) {
  const std::size_t n = g.vertices;
  if (n == 0) return false;
  if (n == 1) return true;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = g.has_edge(order[i], order[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

bool has_hamiltonian_path(const Digraph& g) {
  const std::size_t n = g.vertices;
  if (n <= 1) return n == 1;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) ok = g.has_edge(order[i], order[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

EfHamiltonicity ef_equiv_hamiltonicity_cycle(const Digraph& g) {
  if (g.vertices > 4) throw LimitExceeded("cycle reduction check supports at most 4 vertices");
  const Profile gadget = hamiltonian_cycle_profile(g);
  ExactOptions opts;
  opts.agent_limit = 12;
  EfHamiltonicity r;
  r.ef_exists = find_arrangement(gadget, Topology::cycle(gadget.size()), Criterion::EnvyFree, opts).arrangement.has_value();
  r.ham_exists = has_hamiltonian_cycle(g);
  return r;
}

EfHamiltonicity ef_equiv_hamiltonicity_path(const Digraph& g, std::size_t sink) {
  if (g.vertices > 4) throw LimitExceeded("path reduction check supports at most 4 vertices");
  const Profile gadget = hamiltonian_path_profile(g, sink);
  ExactOptions opts;
  opts.agent_limit = 12;
  EfHamiltonicity r;
  r.ef_exists = find_arrangement(gadget, Topology::path(gadget.size()), Criterion::EnvyFree, opts).arrangement.has_value();
  r.ham_exists = has_hamiltonian_path(g);
  return r;
}

}  // namespace seating
