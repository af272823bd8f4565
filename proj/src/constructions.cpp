#include "seating/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "seating/detail/kernels.hpp"
#include "seating/judge.hpp"

namespace seating {

// ---- digraphs and reductions -------------------------------------------

Digraph::Digraph(std::size_t n, std::vector<std::pair<int, int>> e) : vertices(n), edges(std::move(e)) {
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("digraph self-loops are not allowed");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw std::invalid_argument("digraph edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Digraph::has_edge(int u, int v) const noexcept {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::size_t Digraph::out_degree(int v) const noexcept {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [v](auto e) { return e.first == v; }));
}

Digraph Digraph::from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> e;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (mask >> bit & 1u) e.emplace_back(static_cast<int>(u), static_cast<int>(v));
      ++bit;
    }
  return Digraph(n, std::move(e));
}

Digraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> e;
  std::size_t n = 0;
  bool explicit_n = false;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string first;
    if (!(row >> first) || first[0] == '#') continue;
    if (first == "n") {
      row >> n;
      explicit_n = true;
      continue;
    }
    int u = std::stoi(first), v = 0;
    if (!(row >> v)) throw std::invalid_argument("edge list line needs two vertex ids: " + line);
    e.emplace_back(u, v);
    if (!explicit_n) n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  return Digraph(n, std::move(e));
}

namespace {

Profile gadget_profile(const Digraph& g) {
  Profile p(3 * g.vertices);
  for (int v = 0; v < static_cast<int>(g.vertices); ++v) {
    p.set(gadget_x(v), gadget_y(v), 1);
    p.set(gadget_y(v), gadget_z(v), 1);
  }
  for (auto [v, u] : g.edges) p.set(gadget_z(v), gadget_x(u), 1);
  return p;
}

}  // namespace

Profile hamiltonian_cycle_profile(const Digraph& g) {
  if (g.vertices == 0) throw std::invalid_argument("reduction needs at least one vertex");
  for (int v = 0; v < static_cast<int>(g.vertices); ++v) {
    if (g.out_degree(v) == 0) return g.vertices == 1 ? Profile(3) : abf_cycle(4);
  }
  return gadget_profile(g);
}

Profile hamiltonian_path_profile(const Digraph& g, std::size_t sink) {
  if (sink >= g.vertices) throw std::invalid_argument("sink vertex out of range");
  if (g.out_degree(static_cast<int>(sink)) != 0) throw std::invalid_argument("designated sink has outgoing edges");
  for (int v = 0; v < static_cast<int>(g.vertices); ++v)
    if (static_cast<std::size_t>(v) != sink && g.out_degree(v) == 0) return pm1_path(3);
  return gadget_profile(g);
}

// ---- named families -----------------------------------------------------

Profile abf_cycle(std::size_t n) {
  if (n < 4) throw std::invalid_argument("abf_cycle needs n >= 4");
  Profile p(n);
  for (std::size_t f = 2; f < n; ++f) {
    p.set(0, f, 1);
    p.set(f, 1, 2);
    for (std::size_t g = 2; g < n; ++g)
      if (g != f) p.set(f, g, 1);
  }
  p.set(1, 0, 1);
  return p;
}

Profile abf_path(std::size_t n) {
  if (n < 12) throw std::invalid_argument("abf_path needs n >= 12");
  Profile p(n);
  for (std::size_t f = 4; f < n; ++f) {
    p.set(0, f, 1);
    for (std::size_t b = 1; b <= 3; ++b) p.set(f, b, 3);
    for (std::size_t g = 4; g < n; ++g)
      if (g != f) p.set(f, g, 1);
  }
  for (std::size_t b = 1; b <= 3; ++b) p.set(b, 0, 1);
  return p;
}

Profile four_class_cycle(std::size_t n) {
  if (n < 7) throw std::invalid_argument("four_class_cycle needs n >= 7");
  Profile p(n);
  const std::size_t a = 0, b1 = 1, b2 = 2, c = 3;
  p.set(a, c, 1);
  for (std::size_t b : {b1, b2}) {
    p.set(b, a, 1);
    p.set(b, c, 1);
  }
  for (std::size_t d = 4; d < n; ++d) {
    p.set(c, d, 1);
    p.set(d, b1, 1);
    p.set(d, b2, 1);
    for (std::size_t e = 4; e < n; ++e)
      if (e != d) p.set(d, e, 1);
  }
  return p;
}

Profile pm1_path(std::size_t n) {
  if (n < 3) throw std::invalid_argument("pm1_path needs n >= 3");
  Profile p(n);
  p.set(1, 0, 1);
  p.set(0, 1, -1);
  for (std::size_t f = 2; f < n; ++f) {
    p.set(0, f, 1);
    p.set(1, f, -1);
    p.set(f, 1, 1);
    p.set(f, 0, -1);
    for (std::size_t g = 2; g < n; ++g)
      if (g != f) p.set(f, g, 1);
  }
  return p;
}

Profile p4_loop() {
  Profile p(4);
  for (std::size_t i = 0; i < 4; ++i) p.set(i, (i + 1) % 4, 1);
  return p;
}

NonmonotoneTriple nonmonotone_pair(std::size_t n) {
  if (n < 7) throw std::invalid_argument("nonmonotone_pair needs n >= 7");
  NonmonotoneTriple out;
  out.unstable = four_class_cycle(n);

  std::vector<Agent> keep(n - 1);
  std::iota(keep.begin(), keep.end(), 1);
  out.minus_a = out.unstable.restricted(keep);
  // Relabelled: b1 = 0, b2 = 1, c = 2, D = 3..n-2.
  std::vector<Agent> seats{0, 2, 1};
  for (Agent d = 3; d < static_cast<Agent>(n - 1); ++d) seats.push_back(d);
  out.minus_a_stable = Arrangement(seats);

  out.plus_b3 = Profile(n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.plus_b3.set(i, j, out.unstable(i, j));
  const std::size_t b3 = n;
  out.plus_b3.set(b3, 0, 1);
  out.plus_b3.set(b3, 3, 1);
  for (std::size_t d = 4; d < n; ++d) out.plus_b3.set(d, b3, 1);
  seats = {1, 3, 2, 0, static_cast<Agent>(b3)};
  for (Agent d = 4; d < static_cast<Agent>(n); ++d) seats.push_back(d);
  out.plus_b3_stable = Arrangement(seats);
  return out;
}

// ---- blockwise-diagonal Euler construction ------------------------------

std::vector<int> complete_graph_euler_tour(std::size_t k) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("complete graph Euler tour needs odd k >= 3");
  std::vector<std::set<int>> adj(k);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v)
      if (u != v) adj[u].insert(static_cast<int>(v));
  std::vector<int> stack{0}, circuit;
  while (!stack.empty()) {
    const int v = stack.back();
    if (!adj[v].empty()) {
      const int u = *adj[v].begin();
      adj[v].erase(u);
      adj[u].erase(v);
      stack.push_back(u);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  circuit.pop_back();  // closed tour: last vertex repeats the first
  return circuit;
}

BlockwiseEuler blockwise_euler(const Profile& base) {
  const std::size_t l = base.size();
  if (l < 2) throw std::invalid_argument("blockwise_euler needs a base profile with at least 2 agents");
  const std::size_t k = 2 * l + 1;
  BlockwiseEuler out;
  out.profile = Profile(k * l);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j)
        if (i != j) out.profile.set(c * l + i, c * l + j, base(i, j));
  out.tour = complete_graph_euler_tour(k);
  std::vector<std::size_t> used(k, 0);
  std::vector<Agent> seats;
  for (int c : out.tour) seats.push_back(static_cast<Agent>(static_cast<std::size_t>(c) * l + used[c]++));
  out.arrangement = Arrangement(std::move(seats));
  return out;
}

bool zero_utility_lemma_holds(const Profile& p, const Arrangement& a) {
  const std::size_t n = a.size();
  if (n < 3 || p.size() != n) return false;
  const auto comp = components(p);
  std::map<std::pair<int, int>, int> adjacent;
  for (std::size_t s = 0; s < n; ++s) {
    const int here = comp[a[s]];
    const int next = comp[a[(s + 1) % n]];
    if (here == next) return false;  // then some agent has a same-component neighbour
    if (++adjacent[{std::min(here, next), std::max(here, next)}] > 1) return false;
  }
  return true;
}

// ---- constructive stable arrangements ------------------------------------

namespace {

using Seq = std::vector<int>;

void append(Seq& s, int cls, std::size_t count) { s.insert(s.end(), count, cls); }

bool seq_stable(const ClassStructure& c, const Topology& t, const Seq& s) {
  return detail::satisfies(detail::ClassVal(c), s, t, false);
}

int sign(Value v) { return (v > 0) - (v < 0); }

Arrangement verified(const ClassStructure& c, const Topology& t, const Seq& s, const char* who) {
  Arrangement a = arrangement_from_classes(c, s);
  if (!is_stable(expand_classes(c), t, a))
    throw std::logic_error(std::string(who) + ": constructed arrangement is not stable");
  return a;
}

/// Alternates x and y starting with x until one runs out, then appends the
/// remainder of the other.
Seq alternate(int x, std::size_t nx, int y, std::size_t ny) {
  Seq s;
  while (nx > 0 || ny > 0) {
    if (nx > 0) {
      s.push_back(x);
      --nx;
    }
    if (ny > 0) {
      s.push_back(y);
      --ny;
    }
  }
  return s;
}

/// Two-class path layouts in the order the case analysis suggests them.
std::vector<Seq> two_class_path_candidates(const ClassStructure& c) {
  const std::size_t nb = c.sizes[0], nr = c.sizes[1];
  const auto& m = c.matrix;
  std::vector<Seq> out;

  // A singleton class gets its best seat: every blocking pair would have to
  // include it.
  for (int s = 0; s < 2; ++s) {
    if (c.sizes[s] != 1) continue;
    const int o = 1 - s;
    Seq q;
    if (m[s][o] > 0) {
      q.push_back(o);
      q.push_back(s);
      append(q, o, c.sizes[o] - 1);
    } else {
      q.push_back(s);
      append(q, o, c.sizes[o]);
    }
    out.push_back(q);
  }

  // A class valuing everybody equally: interior if positive, endpoints if
  // negative; it then never envies.
  for (int x = 0; x < 2; ++x) {
    const int y = 1 - x;
    if (m[x][x] != m[x][y]) continue;
    Seq q;
    if (m[x][x] >= 0) {
      q.push_back(y);
      append(q, x, c.sizes[x]);
      append(q, y, c.sizes[y] - 1);
    } else {
      q.push_back(x);
      append(q, y, c.sizes[y]);
      append(q, x, c.sizes[x] - 1);
    }
    out.push_back(q);
  }

  const int pb = sign(m[0][0] - m[0][1]);  // > 0: blue prefers blue
  const int pr = sign(m[1][1] - m[1][0]);  // > 0: red prefers red

  if (pb > 0 && pr < 0) {
    // Both prefer blue: blues together, away from the endpoints.
    Seq q{1};
    append(q, 0, nb);
    append(q, 1, nr - 1);
    out.push_back(q);
  }
  if (pb < 0 && pr > 0) {
    Seq q{0};
    append(q, 1, nr);
    append(q, 0, nb - 1);
    out.push_back(q);
  }
  if (pb < 0 && pr < 0) {
    // Both prefer the opposite class: alternate from the larger class.
    const int big = nb >= nr ? 0 : 1;
    Seq q = alternate(big, c.sizes[big], 1 - big, c.sizes[1 - big]);
    out.push_back(q);
    // Exchange the extremal agent of the smaller class with a non-extremal
    // agent of the larger one.
    for (std::size_t i = 1; i + 1 < q.size(); ++i) {
      if (q[i] != big) continue;
      for (std::size_t e : {std::size_t{0}, q.size() - 1}) {
        if (q[e] == big) continue;
        Seq r = q;
        std::swap(r[i], r[e]);
        out.push_back(r);
      }
    }
  }
  if (pb > 0 && pr > 0) {
    // Both prefer their own class: two blocks, optionally exchanging the
    // extremal red with the inner blue.
    Seq q;
    append(q, 0, nb);
    append(q, 1, nr);
    out.push_back(q);
    Seq r = q;
    std::swap(r[nb - 1], r[r.size() - 1]);
    out.push_back(r);
    Seq r2 = q;
    std::swap(r2[0], r2[nb]);
    out.push_back(r2);
  }

  // Negative values make endpoints attractive in ways the sign analysis above
  // does not track: also try every choice of endpoint classes around a
  // block or alternating middle.
  for (int left = -1; left < 2; ++left)
    for (int right = -1; right < 2; ++right) {
      std::array<std::size_t, 2> rest{nb, nr};
      if (left >= 0 && rest[left]-- == 0) continue;
      if (right >= 0 && rest[right]-- == 0) continue;
      for (int shape = 0; shape < 4; ++shape) {
        const int x = shape % 2, y = 1 - x;
        Seq mid;
        if (shape < 2) {
          append(mid, x, rest[x]);
          append(mid, y, rest[y]);
        } else {
          mid = alternate(x, rest[x], y, rest[y]);
        }
        Seq q;
        if (left >= 0) q.push_back(left);
        q.insert(q.end(), mid.begin(), mid.end());
        if (right >= 0) q.push_back(right);
        out.push_back(q);
      }
    }
  return out;
}

}  // namespace

Arrangement two_class_stable(const ClassStructure& c, const Topology& t) {
  c.validate();
  if (c.k() > 2) throw std::invalid_argument("two_class_stable needs at most two classes");
  if (c.n() != t.n) throw std::invalid_argument("class sizes and topology disagree");
  if (c.k() == 1) return verified(c, t, Seq(c.n(), 0), "two_class_stable");

  const std::size_t nb = c.sizes[0], nr = c.sizes[1];
  if (t.is_cycle()) {
    // On a cycle only the comparison inside each class row matters.
    const int pb = sign(c.matrix[0][0] - c.matrix[0][1]);
    const int pr = sign(c.matrix[1][1] - c.matrix[1][0]);
    Seq s;
    if (pb == 0 || pr == 0 || pb > 0 || pr > 0) {
      // Some class is indifferent or likes its own kind: seat classes as blocks.
      append(s, 0, nb);
      append(s, 1, nr);
    } else {
      const int big = nb >= nr ? 0 : 1;
      s = alternate(big, c.sizes[big], 1 - big, c.sizes[1 - big]);
    }
    return verified(c, t, s, "two_class_stable");
  }

  if (t.n <= 2) {
    Seq s;
    append(s, 0, nb);
    append(s, 1, nr);
    return verified(c, t, s, "two_class_stable");
  }
  for (const Seq& s : two_class_path_candidates(c))
    if (seq_stable(c, t, s)) return verified(c, t, s, "two_class_stable");
  throw std::logic_error("two_class_stable: no candidate layout is stable");
}

namespace {

/// Rows normalized to 0/1 (cycle semantics) for a three-class structure.
using Likes = std::array<std::array<int, 3>, 3>;

Likes binary_likes(const ClassStructure& c) {
  Likes l{};
  for (int a = 0; a < 3; ++a) {
    Value lo = std::min({c.matrix[a][0], c.matrix[a][1], c.matrix[a][2]});
    Value hi = std::max({c.matrix[a][0], c.matrix[a][1], c.matrix[a][2]});
    for (int b = 0; b < 3; ++b) {
      if (c.matrix[a][b] != lo && c.matrix[a][b] != hi)
        throw std::invalid_argument("three_class_two_valued_cycle_stable needs two-valued class rows");
      l[a][b] = (hi != lo && c.matrix[a][b] == hi) ? 1 : 0;
    }
  }
  return l;
}

/// Layouts built in terms of roles (R, G, B) bound to concrete classes.
struct Roles {
  int r, g, b;
};

std::vector<Seq> three_class_candidates(const ClassStructure& c, const Likes& L) {
  const auto& n = c.sizes;
  std::vector<Seq> out;
  std::vector<int> self;
  for (int a = 0; a < 3; ++a)
    if (L[a][a]) self.push_back(a);

  auto others = [](int x) {
    std::array<int, 2> o{};
    int k = 0;
    for (int a = 0; a < 3; ++a)
      if (a != x) o[k++] = a;
    return o;
  };

  if (self.size() >= 2) {
    // Two self-liking classes R and B seated as blocks, G after them; if
    // greens would swap with an extremal red or blue, one green separates
    // the two blocks.
    for (std::size_t i = 0; i < self.size(); ++i)
      for (std::size_t j = 0; j < self.size(); ++j) {
        if (i == j) continue;
        const int r = self[i], b = self[j], g = 3 - r - b;
        Seq s;
        append(s, r, n[r]);
        append(s, b, n[b]);
        append(s, g, n[g]);
        out.push_back(s);
        Seq t2;
        append(t2, r, n[r]);
        t2.push_back(g);
        append(t2, b, n[b]);
        append(t2, g, n[g] - 1);
        out.push_back(t2);
      }
    return out;
  }

  if (self.size() == 1) {
    const int r = self[0];
    const auto o = others(r);
    if (L[r][o[0]] || L[r][o[1]]) {
      // R likes itself and some B.
      for (int pick = 0; pick < 2; ++pick) {
        const int b = o[pick], g = o[1 - pick];
        if (!L[r][b]) continue;
        Seq s;
        append(s, r, n[r]);
        if (n[g] < n[b]) {
          Seq tail = alternate(b, n[b], g, n[g]);
          s.insert(s.end(), tail.begin(), tail.end());
        } else if (L[g][b]) {
          Seq tail = alternate(g, n[g], b, n[b]);
          s.insert(s.end(), tail.begin(), tail.end());
        } else {
          std::size_t left_b = n[b], left_g = n[g];
          s.push_back(g);
          --left_g;
          if (left_b == 1) {
            s.push_back(b);
            left_b = 0;
          }
          while (left_b > 0) {
            const std::size_t tb = std::min<std::size_t>(2, left_b);
            append(s, b, tb);
            left_b -= tb;
            const std::size_t tg = std::min<std::size_t>(2, left_g);
            append(s, g, tg);
            left_g -= tg;
          }
          append(s, g, left_g);
        }
        out.push_back(s);
        if (n[r] == 1) {
          // A lone red has no red neighbour to fall back on; give it a blue.
          Seq lone{r};
          Seq tail = alternate(b, n[b], g, n[g]);
          lone.insert(lone.end(), tail.begin(), tail.end());
          out.push_back(lone);
        }
      }
    } else {
      // R likes only itself: R block, then the other two alternate from the
      // more numerous one.
      const int b = n[o[0]] >= n[o[1]] ? o[0] : o[1];
      const int g = b == o[0] ? o[1] : o[0];
      Seq s;
      append(s, r, n[r]);
      Seq tail = alternate(b, n[b], g, n[g]);
      s.insert(s.end(), tail.begin(), tail.end());
      out.push_back(s);
    }
    return out;
  }

  // Nobody likes their own class.
  for (int r = 0; r < 3; ++r) {
    const auto o = others(r);
    if (!L[o[0]][r] && !L[o[1]][r]) {
      // R is disliked by both: R block, then alternate from the larger class.
      const int b = n[o[0]] >= n[o[1]] ? o[0] : o[1];
      const int g = b == o[0] ? o[1] : o[0];
      Seq s;
      append(s, r, n[r]);
      Seq tail = alternate(b, n[b], g, n[g]);
      s.insert(s.end(), tail.begin(), tail.end());
      out.push_back(s);
    }
  }
  for (int r = 0; r < 3; ++r) {
    const auto o = others(r);
    if (!(L[r][o[0]] && L[r][o[1]])) continue;
    // R likes both others; B is one that likes R back.
    for (int pick = 0; pick < 2; ++pick) {
      const int b = o[pick], g = o[1 - pick];
      if (!L[b][r]) continue;
      Seq s;
      if (n[r] > n[b]) {
        Seq head = alternate(r, n[b], b, n[b]);
        s = head;
        Seq tail = alternate(r, n[r] - n[b], g, n[g]);
        s.insert(s.end(), tail.begin(), tail.end());
      } else if (n[r] < n[b]) {
        Seq head = alternate(b, n[r], r, n[r]);
        s = head;
        Seq tail = alternate(b, n[b] - n[r], g, n[g]);
        s.insert(s.end(), tail.begin(), tail.end());
      } else {
        s = alternate(r, n[r], b, n[b]);
        append(s, g, n[g]);
      }
      out.push_back(s);
    }
  }
  if (!out.empty()) return out;

  // Cyclic likes: any welfare-maximizing arrangement, i.e. one with the
  // fewest same-class neighbours.
  out.push_back(min_monochromatic_cycle_sequence(c.sizes));
  return out;
}

/// Round-robin layouts x^(nx-m) (x y z)^m followed by the leftover y and z
/// alternated, m = min size, over every role order.
std::vector<Seq> round_robin_candidates(const ClassStructure& c) {
  std::vector<Seq> out;
  std::array<int, 3> roles{0, 1, 2};
  do {
    const auto [x, y, z] = roles;
    const std::size_t m = std::min({c.sizes[0], c.sizes[1], c.sizes[2]});
    Seq s;
    append(s, x, c.sizes[x] - m);
    for (std::size_t i = 0; i < m; ++i) s.insert(s.end(), {x, y, z});
    Seq tail = alternate(y, c.sizes[y] - m, z, c.sizes[z] - m);
    s.insert(s.end(), tail.begin(), tail.end());
    out.push_back(s);
  } while (std::next_permutation(roles.begin(), roles.end()));
  return out;
}

}  // namespace

Arrangement three_class_two_valued_cycle_stable(const ClassStructure& c) {
  c.validate();
  if (c.k() != 3) throw std::invalid_argument("three_class_two_valued_cycle_stable needs exactly three classes");
  const Topology t = Topology::cycle(c.n());
  const Likes L = binary_likes(c);
  for (const Seq& s : three_class_candidates(c, L))
    if (seq_stable(c, t, s)) return verified(c, t, s, "three_class_two_valued_cycle_stable");
  for (const Seq& s : round_robin_candidates(c))
    if (seq_stable(c, t, s)) return verified(c, t, s, "three_class_two_valued_cycle_stable");
  throw std::logic_error("three_class_two_valued_cycle_stable: no candidate layout is stable");
}

std::vector<int> min_monochromatic_cycle_sequence(const std::vector<std::size_t>& sizes) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<int> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return sizes[x] > sizes[y]; });
  const std::size_t big = sizes[order[0]];
  std::vector<int> seq;
  if (2 * big > n) {
    // The largest class cannot be fully separated: isolate everybody else.
    std::vector<int> rest;
    for (std::size_t i = 1; i < order.size(); ++i) rest.insert(rest.end(), sizes[order[i]], order[i]);
    for (int x : rest) {
      seq.push_back(order[0]);
      seq.push_back(x);
    }
    seq.insert(seq.end(), big - rest.size(), order[0]);
    return seq;
  }
  // Fill even seats, then odd seats, with classes in decreasing size.
  std::vector<std::size_t> slots;
  for (std::size_t s = 0; s < n; s += 2) slots.push_back(s);
  for (std::size_t s = 1; s < n; s += 2) slots.push_back(s);
  seq.assign(n, 0);
  std::size_t next = 0;
  for (int cls : order)
    for (std::size_t i = 0; i < sizes[cls]; ++i) seq[slots[next++]] = cls;
  return seq;
}

std::size_t monochromatic_adjacencies(std::span<const int> sequence, bool cycle) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) count += sequence[i] == sequence[i + 1];
  if (cycle && sequence.size() > 2) count += sequence.front() == sequence.back();
  return count;
}

std::vector<std::string> family_names() { return {"abf_cycle", "abf_path", "four_class_cycle", "pm1_path", "p4_loop"}; }

Profile construct_family(const std::string& name, std::size_t n) {
  if (name == "abf_cycle") return abf_cycle(n);
  if (name == "abf_path") return abf_path(n);
  if (name == "four_class_cycle") return four_class_cycle(n);
  if (name == "pm1_path") return pm1_path(n);
  if (name == "p4_loop") return p4_loop();
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace seating
