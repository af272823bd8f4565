#include "seating/search.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "seating/constructions.hpp"
#include "seating/detail/kernels.hpp"
#include "seating/dynamics.hpp"
#include "seating/exact.hpp"
#include "seating/polyclass.hpp"

namespace seating {

SearchMode SearchMode::sharded(std::uint64_t a, std::uint64_t b) {
  if (b == 0 || a >= b) throw std::invalid_argument("shard must be a/b with 0 <= a < b");
  SearchMode m;
  m.kind = Kind::Sharded;
  m.shard = a;
  m.shards = b;
  return m;
}

SearchMode SearchMode::sampled(std::uint64_t trials, std::uint64_t seed) {
  SearchMode m;
  m.kind = Kind::Sampled;
  m.trials = trials;
  m.seed = seed;
  return m;
}

std::string to_string(const SearchMode& m) {
  switch (m.kind) {
    case SearchMode::Kind::Full: return "full";
    case SearchMode::Kind::Sharded: return "sharded " + std::to_string(m.shard) + "/" + std::to_string(m.shards);
    case SearchMode::Kind::Sampled: return "sampled " + std::to_string(m.trials) + " seed " + std::to_string(m.seed);
  }
  return "?";
}

std::optional<std::uint64_t> profile_space_size(std::size_t n, std::size_t value_count) {
  std::uint64_t total = 1;
  const std::size_t cells = n * (n == 0 ? 0 : n - 1);
  for (std::size_t c = 0; c < cells; ++c) {
    if (value_count != 0 && total > UINT64_MAX / value_count) return std::nullopt;
    total *= value_count;
  }
  return total;
}

Profile decode_profile(std::size_t n, const std::vector<Value>& values, std::uint64_t index) {
  const std::uint64_t g = values.size();
  Profile p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      p.set(i, j, values[index % g]);
      index /= g;
    }
  return p;
}

namespace {

bool rows_sorted(const Profile& p) {
  Value prev = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Value s = 0;
    for (std::size_t j = 0; j < p.size(); ++j) s += p(i, j);
    if (i > 0 && s < prev) return false;
    prev = s;
  }
  return true;
}

bool has_stable(const Profile& p, const Topology& t) {
  const auto d = detect_classes(p);
  if (d.classes.k() < p.size()) return bool(find_class_arrangement(d.classes, t, Criterion::Stable));
  return bool(find_arrangement_serial(p, t, Criterion::Stable));
}

struct Partial {
  std::uint64_t scanned = 0, tested = 0, unstable = 0;
  std::set<Profile> families;

  void absorb(Partial&& o) {
    scanned += o.scanned;
    tested += o.tested;
    unstable += o.unstable;
    families.merge(o.families);
  }
};

void test_profile(const Profile& p, const Topology& t, Partial& out) {
  ++out.tested;
  if (has_stable(p, t)) return;
  ++out.unstable;
  out.families.insert(canonical_profile(p));
}

void scan_index(std::size_t n, const std::vector<Value>& values, const Topology& t, std::uint64_t idx, Partial& out) {
  ++out.scanned;
  Profile p = decode_profile(n, values, idx);
  if (rows_sorted(p)) test_profile(p, t, out);
}

void sample_trial(std::size_t n, const std::vector<Value>& values, const Topology& t, std::uint64_t seed,
                  std::uint64_t trial, Partial& out) {
  std::mt19937_64 rng(derive_seed(seed, trial));
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  Profile p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) p.set(i, j, values[pick(rng)]);
  ++out.scanned;
  test_profile(p, t, out);
}

struct Range {
  std::uint64_t lo = 0, hi = 0;
};

Range plan(std::size_t n, const std::vector<Value>& values, const Topology& t, const SearchMode& mode,
           const SearchOptions& opts) {
  if (values.empty()) throw std::invalid_argument("value set is empty");
  if (n != t.n) throw std::invalid_argument("topology size does not match n");
  if (n > kCanonicalLimit) throw LimitExceeded("exhaust canonicalizes profiles; n is limited to " +
                                               std::to_string(kCanonicalLimit));
  if (mode.kind == SearchMode::Kind::Sampled) return {0, mode.trials};
  const auto total = profile_space_size(n, values.size());
  if (!total) throw LimitExceeded("profile space does not fit in 64 bits");
  if (mode.kind == SearchMode::Kind::Full) {
    if (*total > opts.budget)
      throw LimitExceeded("full scan of " + std::to_string(*total) + " profiles exceeds the budget of " +
                          std::to_string(opts.budget) + "; use a sharded or sampled mode");
    return {0, *total};
  }
  auto bound = [&](std::uint64_t a) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(*total) * a / mode.shards);
  };
  return {bound(mode.shard), bound(mode.shard + 1)};
}

SearchReport finish(std::size_t n, const std::vector<Value>& values, const Topology& t, const SearchMode& mode,
                    Partial&& part) {
  SearchReport r;
  r.n = n;
  r.values = values;
  r.topology = t.kind;
  r.mode = mode;
  r.scanned = part.scanned;
  r.tested = part.tested;
  r.unstable = part.unstable;
  r.families.assign(part.families.begin(), part.families.end());
  return r;
}

void visit(std::size_t n, const std::vector<Value>& values, const Topology& t, const SearchMode& mode,
           std::uint64_t i, Partial& out) {
  if (mode.kind == SearchMode::Kind::Sampled)
    sample_trial(n, values, t, mode.seed, i, out);
  else
    scan_index(n, values, t, i, out);
}

}  // namespace

SearchReport exhaust_serial(std::size_t n, const std::vector<Value>& values, const Topology& t,
                            const SearchMode& mode, const SearchOptions& opts) {
  const Range r = plan(n, values, t, mode, opts);
  Partial part;
  for (std::uint64_t i = r.lo; i < r.hi; ++i) visit(n, values, t, mode, i, part);
  return finish(n, values, t, mode, std::move(part));
}

SearchReport exhaust(std::size_t n, const std::vector<Value>& values, const Topology& t, const SearchMode& mode,
                     const SearchOptions& opts) {
  const Range r = plan(n, values, t, mode, opts);
  const std::uint64_t chunk = 4096;
  const std::uint64_t chunks = (r.hi - r.lo + chunk - 1) / chunk;
  std::vector<Partial> parts(chunks);
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < static_cast<long>(chunks); ++c) {
    const std::uint64_t lo = r.lo + static_cast<std::uint64_t>(c) * chunk;
    const std::uint64_t hi = std::min(r.hi, lo + chunk);
    for (std::uint64_t i = lo; i < hi; ++i) visit(n, values, t, mode, i, parts[c]);
  }
  Partial all;
  for (auto& p : parts) all.absorb(std::move(p));
  return finish(n, values, t, mode, std::move(all));
}

SearchReport merge_reports(const std::vector<SearchReport>& parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to merge");
  Partial all;
  std::set<std::uint64_t> shards;
  bool all_sharded = true;
  for (const auto& p : parts) {
    if (p.n != parts[0].n || p.values != parts[0].values || p.topology != parts[0].topology)
      throw std::invalid_argument("cannot merge reports of different scans");
    all.scanned += p.scanned;
    all.tested += p.tested;
    all.unstable += p.unstable;
    all.families.insert(p.families.begin(), p.families.end());
    all_sharded = all_sharded && p.mode.kind == SearchMode::Kind::Sharded && p.mode.shards == parts[0].mode.shards;
    shards.insert(p.mode.shard);
  }
  SearchMode mode = parts[0].mode;
  if (all_sharded && shards.size() == parts[0].mode.shards) mode = SearchMode::full();
  const Topology t = parts[0].topology == TopologyKind::Cycle ? Topology::cycle(parts[0].n) : Topology::path(parts[0].n);
  return finish(parts[0].n, parts[0].values, t, mode, std::move(all));
}

std::optional<std::string> family_label(const Profile& canonical) {
  if (!value_meta(canonical).is_binary) return std::nullopt;
  if (canonical.size() == 5) return "P5";
  if (canonical.size() == 7)
    return canonical == canonical_profile(four_class_cycle(7)) ? "P7(2)" : "P7(1)";
  return std::nullopt;
}

Profile recover_family(const SearchReport& report, std::size_t index) {
  if (index >= report.families.size())
    throw std::out_of_range("family index " + std::to_string(index) + " out of range (" +
                            std::to_string(report.families.size()) + " families)");
  return report.families[index];
}

Profile recover_family(std::size_t n, const std::vector<Value>& values, const Topology& t, std::size_t index,
                       const SearchOptions& opts) {
  return recover_family(exhaust(n, values, t, SearchMode::full(), opts), index);
}

// ---- k-class sweep -------------------------------------------------------

namespace {

struct SweepPlan {
  std::size_t k, maxc, g;
  std::vector<std::vector<std::size_t>> perms;
  std::uint64_t matrices = 1, tuples = 1;

  SweepPlan(std::size_t k_, std::size_t maxc_, std::size_t g_) : k(k_), maxc(maxc_), g(g_) {
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (std::size_t i = 0; i < k * k; ++i) matrices *= g;
    for (std::size_t i = 0; i < k; ++i) tuples *= maxc;
  }

  std::vector<std::size_t> digits(std::uint64_t idx, std::size_t len, std::size_t base) const {
    std::vector<std::size_t> d(len);
    for (auto& x : d) {
      x = idx % base;
      idx /= base;
    }
    return d;
  }

  /// Row-major matrix digits after relabeling class a as perm[a].
  std::vector<std::size_t> permuted(const std::vector<std::size_t>& m, const std::vector<std::size_t>& perm) const {
    std::vector<std::size_t> out(k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) out[perm[a] * k + perm[b]] = m[a * k + b];
    return out;
  }
};

using Key = std::vector<std::size_t>;

/// Reverse-lexicographic order matches the index order (last digit most significant).
bool smaller(const Key& x, const Key& y) { return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend()); }

bool probe(const ClassStructure& c, const Topology& t, std::uint64_t limit) {
  const detail::ClassVal val(c);
  bool found = false;
  std::uint64_t tried = 0;
  for_each_class_sequence(c, t, [&](std::span<const int> seq) {
    found = detail::satisfies(val, seq, t, false);
    return found || ++tried >= limit;
  });
  return found;
}

struct SweepPartial {
  std::uint64_t instances = 0, cross_checked = 0, witnessed = 0;
  std::vector<ClassStructure> unstable;
};

void sweep_matrix(const SweepPlan& plan, const std::vector<Value>& values, TopologyKind tk, const SweepOptions& opts,
                  std::uint64_t midx, SweepPartial& out) {
  const Key m = plan.digits(midx, plan.k * plan.k, plan.g);
  std::vector<const std::vector<std::size_t>*> stabilizer;
  for (const auto& perm : plan.perms) {
    const Key pm = plan.permuted(m, perm);
    if (smaller(pm, m)) return;  // a relabeling with a smaller index is swept instead
    if (pm == m) stabilizer.push_back(&perm);
  }
  std::vector<std::vector<Value>> matrix(plan.k, std::vector<Value>(plan.k));
  for (std::size_t a = 0; a < plan.k; ++a)
    for (std::size_t b = 0; b < plan.k; ++b) matrix[a][b] = values[m[a * plan.k + b]];
  const TripleTable tab(ClassStructure{std::vector<std::size_t>(plan.k, 1), matrix}, Criterion::Stable);

  for (std::uint64_t sidx = 0; sidx < plan.tuples; ++sidx) {
    Key s = plan.digits(sidx, plan.k, plan.maxc);
    bool minimal = true;
    for (const auto* perm : stabilizer) {
      Key ps(plan.k);
      for (std::size_t a = 0; a < plan.k; ++a) ps[(*perm)[a]] = s[a];
      if (smaller(ps, s)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    ClassStructure c{{}, matrix};
    for (auto x : s) c.sizes.push_back(x + 1);
    const std::size_t n = c.n();
    if (tk == TopologyKind::Cycle && n < 3) continue;
    const Topology t = tk == TopologyKind::Cycle ? Topology::cycle(n) : Topology::path(n);
    ++out.instances;
    bool stable;
    if (multinomial(c.sizes) <= opts.cross_check_limit) {
      ++out.cross_checked;
      stable = bool(decide(tab, c, t, Criterion::Stable));
      if (bool(find_class_arrangement(c, t, Criterion::Stable)) != stable)
        throw std::logic_error("kclass_sweep: polyclass and exact search disagree");
    } else if (probe(c, t, opts.probe_limit)) {
      ++out.witnessed;
      stable = true;
    } else {
      stable = bool(decide(tab, c, t, Criterion::Stable));
    }
    if (!stable) out.unstable.push_back(std::move(c));
  }
}

SweepReport sweep_report(std::size_t k, std::size_t maxc, const std::vector<Value>& values, TopologyKind tk,
                         const SweepPlan& plan, SweepPartial&& all) {
  SweepReport r;
  r.k = k;
  r.max_per_class = maxc;
  r.values = values;
  r.topology = tk;
  r.instances = all.instances;
  r.cross_checked = all.cross_checked;
  r.witnessed = all.witnessed;
  r.skipped = plan.matrices * plan.tuples - all.instances;
  r.unstable = std::move(all.unstable);
  std::sort(r.unstable.begin(), r.unstable.end(), [](const ClassStructure& x, const ClassStructure& y) {
    return std::tie(x.matrix, x.sizes) < std::tie(y.matrix, y.sizes);
  });
  return r;
}

void check_sweep_args(std::size_t k, std::size_t maxc, const std::vector<Value>& values) {
  if (k == 0 || maxc == 0 || values.empty()) throw std::invalid_argument("kclass_sweep needs k, max_per_class and values");
  if (k > 5) throw LimitExceeded("kclass_sweep supports k <= 5");
  const auto mats = profile_space_size(k + 1, values.size());  // |values|^((k+1)k) >= |values|^(k^2)
  if (!mats) throw LimitExceeded("class-matrix space too large");
}

}  // namespace

SweepReport kclass_sweep_serial(std::size_t k, std::size_t max_per_class, const std::vector<Value>& values,
                                TopologyKind t, const SweepOptions& opts) {
  check_sweep_args(k, max_per_class, values);
  const SweepPlan plan(k, max_per_class, values.size());
  SweepPartial all;
  for (std::uint64_t m = 0; m < plan.matrices; ++m) sweep_matrix(plan, values, t, opts, m, all);
  return sweep_report(k, max_per_class, values, t, plan, std::move(all));
}

SweepReport kclass_sweep(std::size_t k, std::size_t max_per_class, const std::vector<Value>& values, TopologyKind t,
                         const SweepOptions& opts) {
  check_sweep_args(k, max_per_class, values);
  const SweepPlan plan(k, max_per_class, values.size());
  std::vector<SweepPartial> parts(plan.matrices);
#pragma omp parallel for schedule(dynamic)
  for (long m = 0; m < static_cast<long>(plan.matrices); ++m)
    sweep_matrix(plan, values, t, opts, static_cast<std::uint64_t>(m), parts[m]);
  SweepPartial all;
  for (auto& p : parts) {
    all.instances += p.instances;
    all.cross_checked += p.cross_checked;
    all.witnessed += p.witnessed;
    for (auto& c : p.unstable) all.unstable.push_back(std::move(c));
  }
  return sweep_report(k, max_per_class, values, t, plan, std::move(all));
}

std::vector<std::string> write_family_fixtures(const SearchReport& report, const std::string& dir,
                                               const std::string& prefix) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  for (std::size_t i = 0; i < report.families.size(); ++i) {
    const auto path = (std::filesystem::path(dir) / (prefix + std::to_string(i) + ".json")).string();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << emit_profile_json(report.families[i]);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace seating
