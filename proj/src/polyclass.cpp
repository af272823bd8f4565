#include "seating/polyclass.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace seating {

TripleTable::TripleTable(const ClassStructure& c, Criterion crit) : m_(c.k() + 1) {
  c.validate();
  if (c.k() > kPolyMaxClasses)
    throw LimitExceeded("polyclass tables support at most " + std::to_string(kPolyMaxClasses) + " classes");
  pref_.assign(m_ * m_, 0);
  for (std::size_t a = 0; a < c.k(); ++a)
    for (std::size_t b = 0; b < c.k(); ++b) pref_[(a + 1) * m_ + b + 1] = c.matrix[a][b];

  const bool ef = crit == Criterion::EnvyFree;
  const int m = static_cast<int>(m_);
  short_.assign(m_ * m_ * m_ * m_, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int cc = 0; cc < m; ++cc)
        for (int d = 0; d < m; ++d) {
          const bool left = pref(b, a) >= pref(b, d);
          const bool right = pref(cc, d) >= pref(cc, a);
          short_[((a * m_ + b) * m_ + cc) * m_ + d] = ef ? (left && right) : (left || right);
        }

  const std::size_t t = m_ * m_ * m_;
  long_.assign(t * t, 0);
  for (std::size_t t1 = 0; t1 < t; ++t1) {
    const int a = static_cast<int>(t1 / (m_ * m_)), b = static_cast<int>(t1 / m_ % m_), cc = static_cast<int>(t1 % m_);
    for (std::size_t t2 = 0; t2 < t; ++t2) {
      const int d = static_cast<int>(t2 / (m_ * m_)), e = static_cast<int>(t2 / m_ % m_), f = static_cast<int>(t2 % m_);
      const bool first = pref(b, a) + pref(b, cc) >= pref(b, d) + pref(b, f);
      const bool second = pref(e, d) + pref(e, f) >= pref(e, a) + pref(e, cc);
      long_[t1 * t + t2] = ef ? (first && second) : (first || second);
    }
  }
}

Value TripleTable::pref(int observer, int other) const noexcept { return pref_[observer * m_ + other]; }

namespace {

// State layout (bytes): [s0, s1, s2, w0, w1, w2, usage..., memory...]
// w* are the last three placed symbols (oldest first); 0xff marks "none".
// The memory holds the triples centred at positions 1..i-3 after placing
// s_i (2..i-3 on cycles, where the first triple is rebuilt from s0 s1 s2).
constexpr std::uint8_t kNone = 0xff;

struct Node {
  std::uint32_t parent;
  std::uint8_t symbol;
};

struct Search {
  const TripleTable& tab;
  const bool cycle;
  const PolyOptions& opts;
  const std::size_t n;
  const std::size_t k;
  const std::size_t ntrip;  // (k+1)^3
  const std::uint8_t cap;
  std::vector<std::string> forbids;  // per triple: bitset of long-incompatible triples

  Search(const TripleTable& t, bool cyc, const PolyOptions& o, std::size_t n_, std::size_t k_)
      : tab(t), cycle(cyc), opts(o), n(n_), k(k_), ntrip(t.symbols() * t.symbols() * t.symbols()),
        cap(static_cast<std::uint8_t>(o.cap_counters ? 4 : 250)) {
    if (opts.memory == TripleMemory::ForbiddenSet) {
      forbids.assign(ntrip, std::string(memory_bytes(), '\0'));
      for (std::size_t a = 0; a < ntrip; ++a)
        for (std::size_t b = 0; b < ntrip; ++b)
          if (!tab.long_ok(a, b)) forbids[a][b / 8] = static_cast<char>(forbids[a][b / 8] | (1 << (b % 8)));
    }
  }

  static constexpr std::size_t usage_at() { return 6; }
  std::size_t memory_at() const { return 6 + k; }
  std::size_t memory_bytes() const { return opts.memory == TripleMemory::ForbiddenSet ? (ntrip + 7) / 8 : ntrip; }
  std::size_t state_bytes() const { return memory_at() + memory_bytes(); }

  bool conflicts(const std::string& st, std::size_t tr) const {
    const std::size_t base = memory_at();
    if (opts.memory == TripleMemory::ForbiddenSet) return st[base + tr / 8] >> (tr % 8) & 1;
    for (std::size_t t = 0; t < ntrip; ++t)
      if (st[base + t] != 0 && !tab.long_ok(t, tr)) return true;
    return false;
  }

  void remember(std::string& st, std::size_t tr) const {
    const std::size_t base = memory_at();
    if (opts.memory == TripleMemory::ForbiddenSet) {
      for (std::size_t b = 0; b < memory_bytes(); ++b) st[base + b] = static_cast<char>(st[base + b] | forbids[tr][b]);
      return;
    }
    auto& v = reinterpret_cast<std::uint8_t&>(st[base + tr]);
    if (v < cap) ++v;
  }

  /// Places `sym` at position i (1-based). Returns false if the triple it
  /// completes is incompatible with an earlier one.
  bool advance(std::string& st, std::size_t i, int sym) const {
    auto w = [&](int q) { return static_cast<std::uint8_t>(st[3 + q]); };
    const int s0 = static_cast<std::uint8_t>(st[0]);
    // Triple centred at i-1 is now complete: (s_{i-2}, s_{i-1}, s_i).
    if (i >= 3) {
      const std::size_t tr = tab.triple(w(1), w(2), sym);
      const int left = i == 3 ? s0 : w(0);
      if (!tab.short_ok(left, w(1), w(2), sym)) return false;
      if (i >= 4) {
        if (conflicts(st, tr)) return false;
        if (cycle && !tab.long_ok(tab.triple(s0, static_cast<std::uint8_t>(st[1]), static_cast<std::uint8_t>(st[2])), tr)) return false;
      }
      if (!(cycle && i == 3)) remember(st, tab.triple(left, w(1), w(2)));
    }
    st[3] = st[4];
    st[4] = st[5];
    st[5] = static_cast<char>(sym);
    if (cycle && i == 1) st[1] = static_cast<char>(sym);
    if (cycle && i == 2) st[2] = static_cast<char>(sym);
    return true;
  }

  /// Path: closing step with the right dummy. Cycle: the wrap checks.
  bool close(const std::string& st) const {
    if (!cycle) {
      std::string tmp = st;
      return advance(tmp, n + 1, 0);
    }
    auto w = [&](int q) { return static_cast<std::uint8_t>(st[3 + q]); };
    const int s1 = static_cast<std::uint8_t>(st[1]), s2 = static_cast<std::uint8_t>(st[2]);
    // w = (s_{n-2}, s_{n-1}, s_n); the ring continues with s_1, s_2.
    if (!tab.short_ok(w(0), w(1), w(2), s1)) return false;
    if (!tab.short_ok(w(1), w(2), s1, s2)) return false;
    return !conflicts(st, tab.triple(w(1), w(2), s1));
  }
};

PolyResult trivial(const ClassStructure& c) {
  PolyResult r;
  std::vector<int> seq;
  for (std::size_t j = 0; j < c.k(); ++j) seq.insert(seq.end(), c.sizes[j], static_cast<int>(j));
  r.arrangement = arrangement_from_classes(c, seq);
  r.sequence = std::move(seq);
  return r;
}

PolyResult run_search(const TripleTable& tab, const ClassStructure& c, Criterion crit, bool cycle,
                      const PolyOptions& opts) {
  c.validate();
  const std::size_t n = c.n();
  if (!cycle && n <= 2) return trivial(c);
  if (cycle && n < 3) throw std::invalid_argument("cycle needs at least 3 seats");
  if (n > 250) throw LimitExceeded("polyclass state encoding supports n <= 250");
  if (tab.symbols() != c.k() + 1) throw std::invalid_argument("triple table built for a different class count");

  const std::size_t k = c.k(), m = k + 1;
  const Search s(tab, cycle, opts, n, k);

  std::vector<Node> nodes;
  std::unordered_map<std::string, std::uint32_t> seen;
  std::vector<std::pair<std::string, std::uint32_t>> frontier, next;
  PolyResult result;

  // Roots: one per guessed s_0 (cycles) or the dummy (paths).
  for (std::size_t g = cycle ? 1 : 0; g < (cycle ? m : 1); ++g) {
    std::string st(s.state_bytes(), '\0');
    st[0] = static_cast<char>(g);
    st[1] = st[2] = static_cast<char>(kNone);
    st[3] = st[4] = static_cast<char>(kNone);
    st[5] = static_cast<char>(g);
    nodes.push_back({UINT32_MAX, static_cast<std::uint8_t>(g)});
    frontier.emplace_back(st, static_cast<std::uint32_t>(nodes.size() - 1));
  }

  for (std::size_t i = 1; i <= n; ++i) {
    next.clear();
    seen.clear();
    for (const auto& [st, id] : frontier) {
      const int guess = static_cast<std::uint8_t>(st[0]);
      for (int sym = 1; sym < static_cast<int>(m); ++sym) {
        auto used = static_cast<std::uint8_t>(st[s.usage_at() + sym - 1]);
        if (used >= c.sizes[sym - 1]) continue;
        if (cycle && i == n && sym != guess) continue;
        std::string nst = st;
        if (!s.advance(nst, i, sym)) continue;
        nst[s.usage_at() + sym - 1] = static_cast<char>(used + 1);
        auto [it, fresh] = seen.emplace(nst, 0);
        if (!fresh) continue;
        nodes.push_back({id, static_cast<std::uint8_t>(sym)});
        it->second = static_cast<std::uint32_t>(nodes.size() - 1);
        next.emplace_back(std::move(nst), it->second);
        if (nodes.size() > opts.max_states)
          throw LimitExceeded("polyclass search exceeded " + std::to_string(opts.max_states) + " states");
      }
    }
    result.visited += next.size();
    result.frontier_peak = std::max<std::uint64_t>(result.frontier_peak, next.size());
    frontier.swap(next);
    if (frontier.empty()) return result;
  }

  for (const auto& [st, id] : frontier) {
    if (!s.close(st)) continue;
    std::vector<int> seq;
    for (std::uint32_t v = id; nodes[v].parent != UINT32_MAX; v = nodes[v].parent) seq.push_back(nodes[v].symbol - 1);
    std::reverse(seq.begin(), seq.end());
    Arrangement a = arrangement_from_classes(c, seq);
    const Topology t = cycle ? Topology::cycle(n) : Topology::path(n);
    if (!check(expand_classes(c), t, a, crit).ok)
      throw std::logic_error("polyclass: reconstructed arrangement fails the judge");
    result.sequence = std::move(seq);
    result.arrangement = std::move(a);
    return result;
  }
  return result;
}

}  // namespace

PolyResult decide_path(const ClassStructure& c, Criterion crit, const PolyOptions& opts) {
  if (c.n() <= 2) return trivial(c);
  return run_search(TripleTable(c, crit), c, crit, false, opts);
}

PolyResult decide_cycle(const ClassStructure& c, Criterion crit, const PolyOptions& opts) {
  return run_search(TripleTable(c, crit), c, crit, true, opts);
}

PolyResult decide(const TripleTable& tab, const ClassStructure& c, const Topology& t, Criterion crit,
                  const PolyOptions& opts) {
  if (c.n() != t.n) throw std::invalid_argument("class sizes and topology disagree");
  return run_search(tab, c, crit, t.is_cycle(), opts);
}

PolyResult decide(const ClassStructure& c, const Topology& t, Criterion crit, const PolyOptions& opts) {
  if (c.n() != t.n) throw std::invalid_argument("class sizes and topology disagree");
  return t.is_cycle() ? decide_cycle(c, crit, opts) : decide_path(c, crit, opts);
}

CompatResult check_compatible(const ClassStructure& c, const Topology& t, std::span<const int> sequence,
                              Criterion crit) {
  c.validate();
  const std::size_t n = sequence.size();
  if (n != c.n() || n != t.n) throw std::invalid_argument("sequence length does not match class sizes");
  std::vector<std::size_t> count(c.k(), 0);
  for (int x : sequence) {
    if (x < 0 || static_cast<std::size_t>(x) >= c.k()) throw std::invalid_argument("class id out of range");
    ++count[x];
  }
  if (count != c.sizes) throw std::invalid_argument("sequence does not match class sizes");

  const TripleTable tab(c, crit);
  const bool cyc = t.is_cycle();
  // Padded symbol at 1-based position q (shifted classes; dummy 0 on paths).
  auto at = [&](long q) -> int {
    if (cyc) return sequence[static_cast<std::size_t>(((q - 1) % static_cast<long>(n) + static_cast<long>(n)) %
                                                      static_cast<long>(n))] + 1;
    if (q < 1 || q > static_cast<long>(n)) return 0;
    return sequence[static_cast<std::size_t>(q - 1)] + 1;
  };
  auto trip = [&](long q) { return tab.triple(at(q - 1), at(q), at(q + 1)); };

  for (long i = 1; i <= static_cast<long>(n); ++i)
    for (long j = i + 1; j <= static_cast<long>(n); ++j) {
      const long gap = j - i;
      bool ok;
      if (gap == 1) {
        ok = tab.short_ok(at(i - 1), at(i), at(j), at(j + 1));
      } else if (cyc && gap == static_cast<long>(n) - 1) {
        ok = tab.short_ok(at(j - 1), at(j), at(i), at(i + 1));
      } else {
        ok = tab.long_ok(trip(i), trip(j));
      }
      if (!ok) return {false, std::make_pair(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))};
    }
  return {};
}

}  // namespace seating
