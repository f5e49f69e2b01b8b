#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <thread>

#include "io.hpp"
#include "pattern_plans.hpp"

namespace tightpath {

std::string to_string(SymmetryGroup group) {
  switch (group) {
    case SymmetryGroup::cyclic: return "cyclic";
    case SymmetryGroup::dihedral: return "dihedral";
    case SymmetryGroup::symmetric: return "symmetric";
  }
  return "unknown";
}

std::string to_string(Certificate c) {
  return c == Certificate::exhaustive ? "exhaustive" : "bounded";
}

std::vector<std::vector<Vertex>> group_elements(SymmetryGroup group, int n) {
  require(n >= 1, ErrorKind::domain, "group needs n >= 1");
  std::vector<std::vector<Vertex>> out;
  if (group == SymmetryGroup::symmetric) {
    require(n <= 10, ErrorKind::domain, "symmetric group enumeration limited to n <= 10");
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }
  for (int t = 0; t < n; ++t) {
    std::vector<Vertex> p(n);
    for (int v = 0; v < n; ++v) p[v] = (v + t) % n;
    out.push_back(std::move(p));
  }
  if (group == SymmetryGroup::dihedral && n > 2) {
    for (int t = 0; t < n; ++t) {
      std::vector<Vertex> p(n);
      for (int v = 0; v < n; ++v) p[v] = ((t - v) % n + n) % n;
      out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

VertexMask relabel(VertexMask mask, const std::vector<Vertex>& perm) {
  VertexMask out = 0;
  for (; mask; mask &= mask - 1) out |= vertex_bit(perm[std::countr_zero(mask)]);
  return out;
}

}  // namespace

Hypergraph canonical_form(const Hypergraph& h, SymmetryGroup group) {
  require(!(group == SymmetryGroup::symmetric && h.geometric()), ErrorKind::domain,
          "the symmetric group does not preserve a convex geometric hypergraph");
  std::optional<std::vector<Edge>> best;
  for (const auto& perm : group_elements(group, h.n())) {
    std::vector<Edge> image;
    image.reserve(h.size());
    for (const Edge& e : h.edges()) image.emplace_back(relabel(e.mask(), perm));
    std::sort(image.begin(), image.end());
    if (!best || std::lexicographical_compare(image.begin(), image.end(), best->begin(),
                                              best->end())) {
      best = std::move(image);
    }
  }
  return Hypergraph(h.n(), h.r(), h.geometric(), std::move(*best));
}

namespace {

constexpr int kMaxSearchVertices = 16;
constexpr int kMaxCandidates = 64;

using Family = std::uint64_t;

struct Problem {
  int n = 0;
  int r = 0;
  int k = 0;
  PatternKind pattern = PatternKind::tight_path;
  int m = 0;
  std::vector<VertexMask> edge_vertices;
  std::vector<std::int16_t> index_of;
  std::vector<std::vector<std::uint8_t>> perm_edges;
  int check_interval = 1;
  int pattern_length = 0;
  std::vector<int> windows;
  std::vector<detail::FillPlan> seed_plans;  // one per window slot
  std::vector<std::vector<int>> seed_groups;  // cyclic groups to test on the seed
  std::vector<std::vector<int>> orderings;   // permutations of 0..r-1

  Family bit(int e) const { return Family{1} << (m - 1 - e); }
  int edge_of_bit(int b) const { return m - 1 - b; }
  Family all() const { return m == 64 ? ~Family{0} : (Family{1} << m) - 1; }
  // Bits of edges 0..decided-1.
  Family prefix(int decided) const {
    return decided == 0 ? 0 : all() & ~((Family{1} << (m - decided)) - 1);
  }
};

struct FamilyHost {
  const Problem& p;
  Family family;

  bool is_edge(VertexMask vm) const {
    const int e = p.index_of[vm];
    return e >= 0 && (family & p.bit(e));
  }
  bool within_edge(VertexMask vm) const {
    if (vm == 0) return true;
    for (Family f = family; f; f &= f - 1) {
      if ((p.edge_vertices[p.edge_of_bit(std::countr_zero(f))] & vm) == vm) return true;
    }
    return false;
  }
};

Problem build_problem(int n, int r, int k, PatternKind pattern, SymmetryGroup group, const SearchOptions& options) {
  Problem p;
  p.n = n;
  p.r = r;
  p.k = k;
  p.pattern = pattern;
  p.edge_vertices = k_subsets(n, r);
  p.m = static_cast<int>(p.edge_vertices.size());
  require(p.m <= kMaxCandidates, ErrorKind::domain,
          "search supports at most 64 candidate edges, C(n, r) = " + std::to_string(p.m));
  p.index_of.assign(std::size_t{1} << n, -1);
  for (int e = 0; e < p.m; ++e) p.index_of[p.edge_vertices[e]] = static_cast<std::int16_t>(e);

  std::vector<std::vector<Vertex>> perms;
  if (group == SymmetryGroup::symmetric && n > 8) {
    // Any subset of the group keeps leader cuts sound; use rotations,
    // reflections and transpositions instead of all n! elements.
    perms = group_elements(SymmetryGroup::dihedral, n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        std::vector<Vertex> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[a], t[b]);
        perms.push_back(std::move(t));
      }
    }
  } else {
    perms = group_elements(group, n);
  }
  for (const auto& perm : perms) {
    bool identity = true;
    for (int v = 0; v < n; ++v) identity = identity && perm[v] == v;
    if (identity) continue;
    std::vector<std::uint8_t> image(p.m);
    for (int e = 0; e < p.m; ++e) {
      image[e] = static_cast<std::uint8_t>(p.index_of[relabel(p.edge_vertices[e], perm)]);
    }
    p.perm_edges.push_back(std::move(image));
  }
  p.check_interval = options.orbit_check_interval > 0
                         ? options.orbit_check_interval
                         : (group == SymmetryGroup::symmetric ? 1 : 3);

  const auto base = detail::pattern_plan(pattern, k, r);
  p.pattern_length = base.length;
  p.windows = base.windows;
  for (int start : base.windows) {
    detail::FillPlan plan = base;
    plan.order.clear();
    std::vector<bool> prefilled(base.length, false);
    for (int q = start; q < start + r; ++q) prefilled[q] = true;
    if (pattern == PatternKind::stack) {
      for (int q = 0; q < base.length; ++q) {
        if (!prefilled[q]) plan.order.push_back(q);
      }
    } else {
      // Grow right from the seeded window, then left.
      for (int q = start + r; q < base.length; ++q) plan.order.push_back(q);
      for (int q = start - 1; q >= 0; --q) plan.order.push_back(q);
    }
    plan.prepare(prefilled);
    p.seed_plans.push_back(std::move(plan));
  }
  std::vector<int> ord(r);
  std::iota(ord.begin(), ord.end(), 0);
  do {
    p.orderings.push_back(ord);
  } while (std::next_permutation(ord.begin(), ord.end()));
  return p;
}

// Does `family` (which contains edge e) hold a copy of the pattern through e?
bool creates_pattern(const Problem& p, Family family, int e) {
  if (p.pattern_length > p.n) return false;
  const FamilyHost host{p, family};
  const auto verts = mask_vertices(p.edge_vertices[e]);
  auto stop = [](const std::vector<Vertex>&) { return true; };
  std::vector<Vertex> seq(p.pattern_length, -1);
  std::vector<Vertex> scratch(p.pattern_length);
  for (std::size_t slot = 0; slot < p.windows.size(); ++slot) {
    const auto& plan = p.seed_plans[slot];
    const int start = p.windows[slot];
    for (const auto& ord : p.orderings) {
      std::fill(seq.begin(), seq.end(), -1);
      for (int t = 0; t < p.r; ++t) seq[start + t] = verts[ord[t]];
      bool seed_ok = true;
      for (const auto& group : plan.cyclic_groups) {
        int count = 0;
        for (int q : group) {
          if (seq[q] >= 0) scratch[count++] = seq[q];
        }
        seed_ok = seed_ok && detail::cyclically_monotone(scratch.data(), count);
      }
      if (!seed_ok) continue;
      detail::SequenceFiller<FamilyHost, decltype(stop)> filler(plan, host, p.n, stop);
      if (filler.run(seq)) return true;
    }
  }
  return false;
}

// False when some group element maps the decided prefix of `family` to a
// lexicographically larger prefix, so `family` cannot lead its orbit.
bool may_lead(const Problem& p, Family family, int decided) {
  const Family mask = p.prefix(decided);
  for (const auto& image : p.perm_edges) {
    Family mapped = 0;
    for (Family f = family; f; f &= f - 1) {
      mapped |= p.bit(image[p.edge_of_bit(std::countr_zero(f))]);
    }
    if ((mapped & mask) > family) return false;
  }
  return true;
}

struct Shared {
  std::atomic<int> best{-1};
  std::atomic<long long> nodes{0};
  std::atomic<bool> abort{false};
  long long budget = 0;

  void raise(int value) {
    int cur = best.load();
    while (value > cur && !best.compare_exchange_weak(cur, value)) {
    }
  }
  bool tick() {
    const long long seen = nodes.fetch_add(1) + 1;
    if (budget > 0 && seen > budget) abort = true;
    return !abort;
  }
};

struct Task {
  int next = 0;
  Family family = 0;
  int count = 0;
};

bool include_ok(const Problem& p, Family with, int e, int count_after) {
  if (creates_pattern(p, with, e)) return false;
  if (count_after % p.check_interval != 0) return true;
  return may_lead(p, with, e + 1);
}

class Worker {
 public:
  Worker(const Problem& p, Shared& shared) : p_(p), shared_(shared) {}

  void run(const Task& t) { dfs(t.next, t.family, t.count); }

  int best() const { return best_; }
  Family best_family() const { return best_family_; }

 private:
  void dfs(int i, Family family, int count) {
    if (!shared_.tick()) return;
    if (count > best_) {
      best_ = count;
      best_family_ = family;
      shared_.raise(count);
    }
    if (i == p_.m) return;
    const int ceiling = count + (p_.m - i);
    // Ties with another subtree's best are kept so the reported witness does
    // not depend on thread timing.
    if (ceiling <= best_ || ceiling < shared_.best.load()) return;
    const Family with = family | p_.bit(i);
    if (include_ok(p_, with, i, count + 1)) dfs(i + 1, with, count + 1);
    dfs(i + 1, family, count);
  }

  const Problem& p_;
  Shared& shared_;
  int best_ = -1;
  Family best_family_ = 0;
};

void split(const Problem& p, Shared& shared, const Task& t, int depth, std::vector<Task>& out) {
  if (depth == 0 || t.next == p.m) {
    out.push_back(t);
    return;
  }
  shared.nodes.fetch_add(1);
  const Family with = t.family | p.bit(t.next);
  if (include_ok(p, with, t.next, t.count + 1)) {
    split(p, shared, {t.next + 1, with, t.count + 1}, depth - 1, out);
  }
  split(p, shared, {t.next + 1, t.family, t.count}, depth - 1, out);
}

}  // namespace

SearchResult exact_extremal(int n, int r, int k, PatternKind pattern, bool geometric,
                            const SearchOptions& options) {
  require(n >= 1 && n <= kMaxSearchVertices, ErrorKind::domain,
          "search supports 1 <= n <= 16, got n=" + std::to_string(n));
  require(r >= 1 && r <= n, ErrorKind::domain, "search needs 1 <= r <= n");
  require(k >= 1, ErrorKind::domain, "pattern length k must be positive");
  require(options.threads >= 1, ErrorKind::domain, "threads must be positive");
  require(options.budget >= 0, ErrorKind::domain, "budget must be non-negative");
  // Validates the kind/geometry/parity combination.
  check_pattern_support(Hypergraph(n, r, geometric), pattern);

  const auto started = std::chrono::steady_clock::now();
  const SymmetryGroup group = geometric ? SymmetryGroup::cyclic : SymmetryGroup::symmetric;
  const Problem p = build_problem(n, r, k, pattern, group, options);

  Shared shared;
  shared.budget = options.budget;

  int depth = 0;
  if (options.threads > 1) {
    depth = std::min(p.m, 4 + 2 * static_cast<int>(std::bit_width(static_cast<unsigned>(options.threads))));
  }
  std::vector<Task> tasks;
  split(p, shared, Task{}, depth, tasks);

  std::vector<int> task_best(tasks.size(), -1);
  std::vector<Family> task_family(tasks.size(), 0);
  std::atomic<std::size_t> next_task{0};
  auto drain = [&] {
    for (std::size_t t = next_task++; t < tasks.size(); t = next_task++) {
      Worker w(p, shared);
      w.run(tasks[t]);
      task_best[t] = w.best();
      task_family[t] = w.best_family();
    }
  };
  const int workers = std::min<int>(options.threads, static_cast<int>(tasks.size()));
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(drain);
  }

  // Highest value; ties go to the earliest task in DFS order.
  std::size_t chosen = 0;
  for (std::size_t t = 1; t < tasks.size(); ++t) {
    if (task_best[t] > task_best[chosen]) chosen = t;
  }

  SearchResult out;
  out.n = n;
  out.r = r;
  out.k = k;
  out.pattern = pattern;
  out.group = group;
  out.value = std::max(0, task_best[chosen]);
  std::vector<Edge> edges;
  for (Family f = task_family[chosen]; f; f &= f - 1) {
    edges.emplace_back(p.edge_vertices[p.edge_of_bit(std::countr_zero(f))]);
  }
  out.witness = Hypergraph(n, r, geometric, std::move(edges));
  out.certificate = shared.abort ? Certificate::bounded : Certificate::exhaustive;
  out.nodes_explored = shared.nodes.load();
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return out;
}

namespace {

struct Reference {
  long long value;
  std::string source;
};

std::optional<Reference> known_value(const SearchResult& res) {
  if (res.k == 1) return Reference{0, "a single edge is already the pattern"};
  if (res.pattern == PatternKind::tight_path && res.r == 3 && res.k == 4 && res.n >= 5) {
    return Reference{binomial(res.n, 2), "published value C(n,2) for tight 4-paths in 3-graphs"};
  }
  if (res.pattern == PatternKind::zigzag && res.r == 2 && res.n % res.k == 0) {
    return Reference{static_cast<long long>(res.k - 1) * res.n / 2,
                     "convex geometric graph bound (k-1)n/2, attained by disjoint k-cliques"};
  }
  return std::nullopt;
}

}  // namespace

nlohmann::json to_json(const SearchResult& result) {
  nlohmann::json out{{"n", result.n},
                     {"r", result.r},
                     {"k", result.k},
                     {"pattern", to_string(result.pattern)},
                     {"geometry", result.witness.geometric() ? "cgh" : "abstract"},
                     {"value", result.value},
                     {"certificate", to_string(result.certificate)},
                     {"nodes_explored", result.nodes_explored},
                     {"wall_time", result.wall_seconds},
                     {"group", to_string(result.group)},
                     {"witness", to_json(result.witness)}};
  if (auto ref = known_value(result)) {
    out["reference"] = {{"value", ref->value},
                        {"source", ref->source},
                        {"matches", ref->value == result.value}};
  } else {
    out["reference"] = nullptr;
    out["note"] = "no published exact value for these parameters; computed here";
  }
  return out;
}

FamilyCertificate verify_family(const Hypergraph& h, PatternKind pattern, int k) {
  FamilyCertificate out;
  out.edge_count = h.size();
  out.witness = find_pattern(h, pattern, k);
  out.free = !out.witness.has_value();
  return out;
}

nlohmann::json to_json(const FamilyCertificate& cert) {
  nlohmann::json out{{"free", cert.free}, {"edge_count", cert.edge_count}};
  if (cert.witness) out["witness"] = to_json(*cert.witness);
  return out;
}

}  // namespace tightpath
