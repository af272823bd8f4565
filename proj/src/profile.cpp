#include "seating/profile.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace seating {

Profile Profile::from_rows(const std::vector<std::vector<Value>>& rows) {
  Profile p(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw std::invalid_argument("preference matrix is not square (row " + std::to_string(i) + ")");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i == j) {
        if (rows[i][j] != 0)
          throw std::invalid_argument("nonzero diagonal entry at agent " + std::to_string(i));
        continue;
      }
      p.values_[i * p.n_ + j] = rows[i][j];
    }
  }
  return p;
}

void Profile::set(std::size_t i, std::size_t j, Value v) {
  if (i >= n_ || j >= n_) throw std::out_of_range("agent index out of range");
  if (i == j) {
    if (v != 0) throw std::invalid_argument("diagonal entries are fixed at 0");
    return;
  }
  values_[i * n_ + j] = v;
}

std::vector<std::vector<Value>> Profile::rows() const {
  std::vector<std::vector<Value>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

Profile Profile::restricted(std::span<const Agent> order) const {
  Profile q(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      if (i != j) q.values_[i * q.n_ + j] = (*this)(order[i], order[j]);
  return q;
}

bool Profile::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Topology Topology::path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("a path table needs at least one seat");
  return {TopologyKind::Path, n};
}

Topology Topology::cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle table needs at least three seats");
  return {TopologyKind::Cycle, n};
}

std::string to_string(TopologyKind kind) { return kind == TopologyKind::Path ? "path" : "cycle"; }

TopologyKind parse_topology_kind(const std::string& text) {
  if (text == "path") return TopologyKind::Path;
  if (text == "cycle") return TopologyKind::Cycle;
  throw std::invalid_argument("unknown topology '" + text + "'");
}

Arrangement::Arrangement(std::vector<Agent> seats) : seats_(std::move(seats)) {
  std::vector<char> seen(seats_.size(), 0);
  for (Agent a : seats_) {
    if (a < 0 || static_cast<std::size_t>(a) >= seats_.size() || seen[a])
      throw std::invalid_argument("arrangement is not a permutation of 0..n-1");
    seen[a] = 1;
  }
}

Arrangement Arrangement::identity(std::size_t n) {
  std::vector<Agent> s(n);
  std::iota(s.begin(), s.end(), 0);
  return Arrangement(std::move(s));
}

std::vector<std::size_t> Arrangement::positions() const {
  std::vector<std::size_t> pos(seats_.size());
  for (std::size_t s = 0; s < seats_.size(); ++s) pos[seats_[s]] = s;
  return pos;
}

Arrangement Arrangement::swapped_seats(std::size_t a, std::size_t b) const {
  Arrangement out = *this;
  std::swap(out.seats_[a], out.seats_[b]);
  return out;
}

Arrangement canonical_arrangement(const Arrangement& a, const Topology& t) {
  const std::size_t n = a.size();
  std::vector<Agent> fwd(a.seats().begin(), a.seats().end());
  if (t.kind == TopologyKind::Path || n < 3) {
    std::vector<Agent> rev(fwd.rbegin(), fwd.rend());
    return Arrangement(std::min(fwd, rev));
  }
  // Agent 0 at seat 0, then orient so seat 1 holds the smaller neighbour.
  const auto zero = static_cast<std::size_t>(std::find(fwd.begin(), fwd.end(), 0) - fwd.begin());
  std::vector<Agent> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = fwd[(zero + i) % n];
  if (out[1] > out[n - 1]) std::reverse(out.begin() + 1, out.end());
  return Arrangement(std::move(out));
}

std::size_t ClassStructure::n() const noexcept {
  return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
}

void ClassStructure::validate() const {
  if (matrix.size() != sizes.size()) throw std::invalid_argument("class matrix must be k x k");
  for (const auto& r : matrix)
    if (r.size() != sizes.size()) throw std::invalid_argument("class matrix must be k x k");
  for (std::size_t s : sizes)
    if (s == 0) throw std::invalid_argument("class sizes must be at least 1");
}

namespace {

bool same_class(const Profile& p, std::size_t i, std::size_t j) {
  if (p(i, j) != p(j, i)) return false;
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (m == i || m == j) continue;
    if (p(i, m) != p(j, m) || p(m, i) != p(m, j)) return false;
  }
  return true;
}

}  // namespace

ClassDecomposition detect_classes(const Profile& p) {
  ClassDecomposition out;
  std::vector<std::size_t> reps;
  out.label.assign(p.size(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (same_class(p, reps[c], i)) {
        out.label[i] = static_cast<int>(c);
        break;
      }
    }
    if (out.label[i] < 0) {
      out.label[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  const std::size_t k = reps.size();
  out.classes.sizes.assign(k, 0);
  out.classes.matrix.assign(k, std::vector<Value>(k, 0));
  std::vector<std::size_t> second(k, p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto c = static_cast<std::size_t>(out.label[i]);
    if (out.classes.sizes[c]++ == 1) second[c] = i;
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b) {
        out.classes.matrix[a][b] = p(reps[a], reps[b]);
      } else if (second[a] < p.size()) {
        out.classes.matrix[a][a] = p(reps[a], second[a]);
      }
    }
  }
  return out;
}

std::vector<std::vector<Agent>> class_members(const ClassStructure& c) {
  std::vector<std::vector<Agent>> members(c.k());
  Agent next = 0;
  for (std::size_t a = 0; a < c.k(); ++a)
    for (std::size_t i = 0; i < c.sizes[a]; ++i) members[a].push_back(next++);
  return members;
}

Profile expand_classes(const ClassStructure& c) {
  c.validate();
  std::vector<int> label;
  for (std::size_t a = 0; a < c.k(); ++a) label.insert(label.end(), c.sizes[a], static_cast<int>(a));
  Profile p(label.size());
  for (std::size_t i = 0; i < label.size(); ++i)
    for (std::size_t j = 0; j < label.size(); ++j)
      if (i != j) p.set(i, j, c.matrix[label[i]][label[j]]);
  return p;
}

Arrangement arrangement_from_classes(const ClassStructure& c, std::span<const int> sequence) {
  auto members = class_members(c);
  std::vector<std::size_t> used(c.k(), 0);
  std::vector<Agent> seats;
  seats.reserve(sequence.size());
  for (int cls : sequence) {
    if (cls < 0 || static_cast<std::size_t>(cls) >= c.k() || used[cls] >= c.sizes[cls])
      throw std::invalid_argument("class sequence does not match class sizes");
    seats.push_back(members[cls][used[cls]++]);
  }
  if (seats.size() != c.n()) throw std::invalid_argument("class sequence does not match class sizes");
  return Arrangement(std::move(seats));
}

ValueProfileMeta value_meta(const Profile& p) {
  ValueProfileMeta m;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j) m.value_set.push_back(p(i, j));
  std::sort(m.value_set.begin(), m.value_set.end());
  m.value_set.erase(std::unique(m.value_set.begin(), m.value_set.end()), m.value_set.end());
  m.k_valued = m.value_set.size();
  m.is_binary = std::all_of(m.value_set.begin(), m.value_set.end(), [](Value v) { return v == 0 || v == 1; });
  m.is_nonnegative = m.value_set.empty() || m.value_set.front() >= 0;
  return m;
}

Profile normalize_for_cycle(const Profile& p) {
  const std::size_t n = p.size();
  Profile q(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (n < 2) break;
    Value lo = 0;
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (first || p(i, j) < lo) lo = p(i, j);
      first = false;
    }
    Value g = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) g = std::gcd(g, p(i, j) - lo);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) q.set(i, j, g == 0 ? 0 : (p(i, j) - lo) / g);
  }
  return q;
}

Profile canonical_profile(const Profile& p) {
  const std::size_t n = p.size();
  if (n > kCanonicalLimit)
    throw LimitExceeded("canonical_profile scans n! relabelings; n=" + std::to_string(n) +
                        " exceeds the limit of " + std::to_string(kCanonicalLimit));
  std::vector<Agent> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Agent> best = perm;
  do {
    // Compare p[perm] with p[best] in row-major order, stopping at the first difference.
    int cmp = 0;
    for (std::size_t i = 0; i < n && cmp == 0; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Value a = p(perm[i], perm[j]);
        Value b = p(best[i], best[j]);
        if (a != b) {
          cmp = a < b ? -1 : 1;
          break;
        }
      }
    }
    if (cmp < 0) best = perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p.restricted(best);
}

std::vector<int> components(const Profile& p) {
  const std::size_t n = p.size();
  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < n; ++b) {
        if (label[b] < 0 && a != b && (p(a, b) != 0 || p(b, a) != 0)) {
          label[b] = next;
          stack.push_back(b);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace seating
