#include "unssp/solvers.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>
#include <string>

#include "unssp/errors.hpp"

namespace unssp {

namespace {

constexpr Cost kExcluded = -1;

struct LexKey {
  Value dist;
  std::int32_t hops;
  auto operator<=>(const LexKey&) const = default;
};

struct LexTree {
  std::vector<std::optional<LexKey>> key;  // per vertex, distance to target
};

// Dijkstra on the reverse graph from `to`, keyed by (weight, hops). Arcs with
// weight kExcluded or masked out are skipped. Weights are indexed by arc id.
LexTree reverse_lex_dijkstra(const Graph& g, const ArcMask& mask, Vertex to,
                             const std::vector<Cost>& weight, SolveStats& stats) {
  LexTree tree;
  tree.key.assign(static_cast<std::size_t>(g.num_vertices()) + 1, std::nullopt);
  using Item = std::pair<LexKey, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  tree.key[static_cast<std::size_t>(to)] = LexKey{0, 0};
  pq.emplace(LexKey{0, 0}, to);
  while (!pq.empty()) {
    auto [k, v] = pq.top();
    pq.pop();
    if (k != *tree.key[static_cast<std::size_t>(v)]) continue;
    for (ArcId id : g.in_arcs(v)) {
      const Cost w = weight[static_cast<std::size_t>(id)];
      if (w == kExcluded || mask.removed(id)) continue;
      ++stats.relaxations;
      const Vertex u = g.arc(id).tail;
      const LexKey cand{checked_add(k.dist, w), k.hops + 1};
      auto& slot = tree.key[static_cast<std::size_t>(u)];
      if (!slot || cand < *slot) {
        slot = cand;
        pq.emplace(cand, u);
      }
    }
  }
  return tree;
}

// Lexicographically smallest (weight, hops, arc ids) from-to path. Such a
// minimizer never repeats a vertex: cutting a cycle cannot raise the weight
// and strictly lowers the hop count.
std::optional<Path> lex_shortest_path(const Graph& g, const ArcMask& mask, Vertex from,
                                      Vertex to, const std::vector<Cost>& weight,
                                      SolveStats& stats) {
  const LexTree tree = reverse_lex_dijkstra(g, mask, to, weight, stats);
  if (!tree.key[static_cast<std::size_t>(from)]) return std::nullopt;
  Path p{from, {}};
  Vertex u = from;
  while (u != to) {
    const LexKey here = *tree.key[static_cast<std::size_t>(u)];
    ArcId chosen = 0;
    for (ArcId id : g.out_arcs(u)) {
      const Cost w = weight[static_cast<std::size_t>(id)];
      if (w == kExcluded || mask.removed(id)) continue;
      const auto& there = tree.key[static_cast<std::size_t>(g.arc(id).head)];
      if (there && there->dist + w == here.dist && there->hops + 1 == here.hops) {
        chosen = id;
        break;
      }
    }
    if (chosen == 0) throw ContractError("shortest path tree is inconsistent");
    p.arcs.push_back(chosen);
    u = g.arc(chosen).head;
  }
  return remove_loops(g, p);
}

std::vector<Cost> distinct_active_costs(const Graph& g, const ArcMask& mask, bool with_zero) {
  std::vector<Cost> costs;
  if (with_zero) costs.push_back(0);
  for (ArcId id = 1; id <= g.num_arcs(); ++id) {
    if (mask.active(id)) costs.push_back(g.arc(id).cost);
  }
  std::sort(costs.begin(), costs.end());
  costs.erase(std::unique(costs.begin(), costs.end()), costs.end());
  return costs;
}

SolveOutcome empty_path_outcome(Vertex v) {
  SolveOutcome out;
  out.path = Path{v, {}};
  out.value = 0;
  return out;
}

void check_endpoints(const Graph& g, Vertex from, Vertex to) {
  if (from < 1 || from > g.num_vertices() || to < 1 || to > g.num_vertices()) {
    throw ValidationError("query endpoint out of range");
  }
}

// Smallest index in `thresholds` whose probe succeeds; probes are monotone.
template <typename Probe>
std::optional<std::size_t> bisect(std::size_t count, Probe&& probe) {
  if (count == 0 || !probe(count - 1)) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = count - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (probe(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

SizeGate SizeGate::from_env() {
  SizeGate gate;
  if (const char* env = std::getenv("UNSSP_SIZE_GATE")) {
    const std::string v(env);
    if (v == "off") {
      gate.unlimited = true;
    } else if (!v.empty()) {
      char* end = nullptr;
      const long n = std::strtol(v.c_str(), &end, 10);
      if (end && *end == '\0' && n > 0) gate.max_vertices = static_cast<int>(n);
    }
  }
  return gate;
}

DistanceTable distances_to(const Graph& g, const ArcMask& mask, Vertex target) {
  check_endpoints(g, target, target);
  std::vector<Cost> weight(static_cast<std::size_t>(g.num_arcs()) + 1, kExcluded);
  for (ArcId id = 1; id <= g.num_arcs(); ++id) weight[static_cast<std::size_t>(id)] = g.arc(id).cost;
  SolveStats stats;
  const LexTree tree = reverse_lex_dijkstra(g, mask, target, weight, stats);

  DistanceTable table;
  table.target = target;
  table.dist.assign(tree.key.size(), std::nullopt);
  table.next_arc.assign(tree.key.size(), 0);
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    const auto& k = tree.key[static_cast<std::size_t>(v)];
    if (!k) continue;
    table.dist[static_cast<std::size_t>(v)] = k->dist;
    if (v == target) continue;
    for (ArcId id : g.out_arcs(v)) {
      if (mask.removed(id)) continue;
      const auto& there = tree.key[static_cast<std::size_t>(g.arc(id).head)];
      if (there && there->dist + g.arc(id).cost == k->dist && there->hops + 1 == k->hops) {
        table.next_arc[static_cast<std::size_t>(v)] = id;
        break;
      }
    }
  }
  return table;
}

DistanceTable all_distances_to_sink(const Graph& g, const ArcMask& mask) {
  return distances_to(g, mask, g.sink());
}

std::uint64_t estimate_path_count(const Graph& g, const ArcMask& mask, Vertex from, Vertex to,
                                  std::uint64_t cap) {
  if (from == to) return 1;
  const auto n = static_cast<std::size_t>(g.num_vertices());
  // walks[v] = number of from-v walks with exactly `len` arcs (saturating).
  std::vector<std::uint64_t> walks(n + 1, 0);
  std::vector<std::uint64_t> next(n + 1, 0);
  walks[static_cast<std::size_t>(from)] = 1;
  std::uint64_t total = 0;
  for (std::size_t len = 1; len + 1 <= n; ++len) {
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (ArcId id = 1; id <= g.num_arcs(); ++id) {
      if (mask.removed(id)) continue;
      const auto t = static_cast<std::size_t>(g.arc(id).tail);
      if (walks[t] == 0 || g.arc(id).tail == to) continue;
      auto& h = next[static_cast<std::size_t>(g.arc(id).head)];
      h = std::min(cap, h + walks[t]);
      any = true;
    }
    total = std::min(cap, total + next[static_cast<std::size_t>(to)]);
    if (total >= cap || !any) break;
    walks.swap(next);
  }
  return total;
}

void check_size_gate(const Graph& g, const ArcMask& mask, Vertex from, Vertex to,
                     const SizeGate& gate) {
  if (gate.unlimited || g.num_vertices() <= gate.max_vertices) return;
  const auto est = estimate_path_count(g, mask, from, to, gate.max_estimated_paths + 1);
  if (est > gate.max_estimated_paths) {
    throw SizeGateError("instance too large for exhaustive search (n=" +
                        std::to_string(g.num_vertices()) + " > " +
                        std::to_string(gate.max_vertices) + " and more than " +
                        std::to_string(gate.max_estimated_paths) + " candidate walks)");
  }
}

SolveOutcome solve_sum(const Graph& g, const ArcMask& mask, Vertex from, Vertex to) {
  check_endpoints(g, from, to);
  if (from == to) return empty_path_outcome(from);
  std::vector<Cost> weight(static_cast<std::size_t>(g.num_arcs()) + 1, kExcluded);
  for (ArcId id = 1; id <= g.num_arcs(); ++id) weight[static_cast<std::size_t>(id)] = g.arc(id).cost;
  SolveOutcome out;
  out.path = lex_shortest_path(g, mask, from, to, weight, out.stats);
  if (out.path) out.value = universal_value(g, *out.path, Lambda::sum(g.num_vertices()));
  return out;
}

SolveOutcome solve_bottleneck(const Graph& g, const ArcMask& mask, Vertex from, Vertex to) {
  check_endpoints(g, from, to);
  if (from == to) return empty_path_outcome(from);
  SolveOutcome out;
  const auto thresholds = distinct_active_costs(g, mask, false);
  std::vector<Cost> weight(static_cast<std::size_t>(g.num_arcs()) + 1);
  auto set_threshold = [&](Cost tau) {
    for (ArcId id = 1; id <= g.num_arcs(); ++id) {
      weight[static_cast<std::size_t>(id)] = g.arc(id).cost <= tau ? 0 : kExcluded;
    }
  };
  const auto best = bisect(thresholds.size(), [&](std::size_t i) {
    ++out.stats.threshold_probes;
    set_threshold(thresholds[i]);
    SolveStats probe;
    const auto tree = reverse_lex_dijkstra(g, mask, to, weight, probe);
    out.stats += probe;
    return tree.key[static_cast<std::size_t>(from)].has_value();
  });
  if (!best) return out;
  set_threshold(thresholds[*best]);
  out.path = lex_shortest_path(g, mask, from, to, weight, out.stats);
  out.value = universal_value(g, *out.path, Lambda::bottleneck(g.num_vertices()));
  return out;
}

SolveOutcome solve_kmax(const Graph& g, const ArcMask& mask, Vertex from, Vertex to, int k) {
  check_endpoints(g, from, to);
  if (k < 1 || k > g.num_vertices() - 1) throw ValidationError("k out of range for kmax");
  if (from == to) return empty_path_outcome(from);
  SolveOutcome out;
  const auto thresholds = distinct_active_costs(g, mask, true);
  std::vector<Cost> weight(static_cast<std::size_t>(g.num_arcs()) + 1);
  auto set_threshold = [&](Cost tau) {
    for (ArcId id = 1; id <= g.num_arcs(); ++id) {
      weight[static_cast<std::size_t>(id)] = g.arc(id).cost > tau ? 1 : 0;
    }
  };
  const auto best = bisect(thresholds.size(), [&](std::size_t i) {
    ++out.stats.threshold_probes;
    set_threshold(thresholds[i]);
    SolveStats probe;
    const auto tree = reverse_lex_dijkstra(g, mask, to, weight, probe);
    out.stats += probe;
    const auto& key = tree.key[static_cast<std::size_t>(from)];
    return key && key->dist <= k - 1;
  });
  if (!best) return out;
  set_threshold(thresholds[*best]);
  out.path = lex_shortest_path(g, mask, from, to, weight, out.stats);
  out.value = universal_value(g, *out.path, Lambda::kmax(g.num_vertices(), k));
  return out;
}

SolveOutcome solve_ksum(const Graph& g, const ArcMask& mask, Vertex from, Vertex to, int k) {
  check_endpoints(g, from, to);
  if (k < 1 || k > g.num_vertices() - 1) throw ValidationError("k out of range for ksum");
  if (from == to) return empty_path_outcome(from);
  const Lambda lam = Lambda::ksum(g.num_vertices(), k);
  SolveOutcome out;
  std::vector<Cost> weight(static_cast<std::size_t>(g.num_arcs()) + 1);
  for (Cost tau : distinct_active_costs(g, mask, true)) {
    ++out.stats.threshold_probes;
    for (ArcId id = 1; id <= g.num_arcs(); ++id) {
      weight[static_cast<std::size_t>(id)] = std::max<Cost>(g.arc(id).cost - tau, 0);
    }
    auto p = lex_shortest_path(g, mask, from, to, weight, out.stats);
    if (!p) return out;  // unreachable at every threshold
    const Value v = universal_value(g, *p, lam);
    if (!out.value || v < *out.value) {
      out.value = v;
      out.path = std::move(p);
    }
  }
  return out;
}

SolveOutcome solve_brute(const Graph& g, const ArcMask& mask, Vertex from, Vertex to,
                         const Lambda& lam, const SizeGate& gate) {
  check_endpoints(g, from, to);
  if (lam.size() != static_cast<std::size_t>(g.num_vertices() - 1)) {
    throw ValidationError("lambda length does not match the graph");
  }
  if (from == to) return empty_path_outcome(from);
  check_size_gate(g, mask, from, to, gate);

  const bool monotone = lam.nonnegative();
  SolveOutcome out;
  std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  std::vector<Cost> costs;
  Path cur{from, {}};
  // Each frame remembers the vertex and the next out-arc position to try.
  std::vector<std::pair<Vertex, std::size_t>> stack{{from, 0}};
  on_path[static_cast<std::size_t>(from)] = 1;

  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    const auto outs = g.out_arcs(u);
    if (next == outs.size()) {
      on_path[static_cast<std::size_t>(u)] = 0;
      stack.pop_back();
      if (!cur.arcs.empty()) {
        cur.arcs.pop_back();
        costs.pop_back();
      }
      continue;
    }
    const ArcId id = outs[next++];
    if (mask.removed(id)) continue;
    ++out.stats.relaxations;
    const Vertex v = g.arc(id).head;
    if (on_path[static_cast<std::size_t>(v)]) continue;
    costs.push_back(g.arc(id).cost);
    if (v == to) {
      const Value val = universal_value(costs, lam);
      if (!out.value || val < *out.value) {
        cur.arcs.push_back(id);
        out.value = val;
        out.path = cur;
        cur.arcs.pop_back();
      }
      costs.pop_back();
      continue;
    }
    // With lambda >= 0 extending a path never lowers its value, and an equal
    // value found later loses the lexicographic tie-break.
    if (monotone && out.value && universal_value(costs, lam) >= *out.value) {
      costs.pop_back();
      continue;
    }
    cur.arcs.push_back(id);
    on_path[static_cast<std::size_t>(v)] = 1;
    stack.emplace_back(v, 0);
  }
  return out;
}

SolveOutcome solve(const Graph& g, const ArcMask& mask, Vertex from, Vertex to,
                   const Lambda& lam, const SizeGate& gate) {
  if (lam.size() != static_cast<std::size_t>(g.num_vertices() - 1)) {
    throw ValidationError("lambda length does not match the graph");
  }
  switch (lam.family()) {
    case Lambda::Family::Sum: return solve_sum(g, mask, from, to);
    case Lambda::Family::Bottleneck: return solve_bottleneck(g, mask, from, to);
    case Lambda::Family::KSum: return solve_ksum(g, mask, from, to, lam.k());
    case Lambda::Family::KMax: return solve_kmax(g, mask, from, to, lam.k());
    case Lambda::Family::Explicit: return solve_brute(g, mask, from, to, lam, gate);
  }
  return {};
}

}  // namespace unssp
