#include "unssp/enumeration.hpp"

#include <algorithm>
#include <limits>

#include "unssp/errors.hpp"

namespace unssp {

namespace {

void validate(const Graph& g, const Lambda& lam, bool allow_negative) {
  if (lam.size() != static_cast<std::size_t>(g.num_vertices() - 1)) {
    throw ValidationError("lambda length does not match the graph");
  }
  if (!allow_negative && !lam.nonnegative()) {
    throw ValidationError(
        "near-shortest enumeration requires a non-negative lambda: with a negative "
        "weight and epsilon > 0 no path lies within the bound");
  }
}

// Emits with the value recomputed from scratch; false when the sink is full.
bool emit(const Graph& g, const Lambda& lam, const Bound& bound, const Path& p, PathSink& sink,
          RunStats& stats) {
  const Value v = universal_value(g, p, lam);
  if (!bound.admits(v)) throw ContractError("emitted path exceeds the near-shortest bound");
  if (!sink.offer(p, v)) {
    stats.truncated = true;
    return false;
  }
  ++stats.paths;
  return true;
}

std::vector<ArcId> others_of(const Graph& g, Vertex u, ArcId keep) {
  std::vector<ArcId> out;
  for (ArcId id : g.out_arcs(u)) {
    if (id != keep) out.push_back(id);
  }
  return out;
}

// Makes the active out-arcs of u exactly those accepted by `keep`.
template <typename Keep>
void set_out_arcs(const Graph& g, ArcMask& mask, Vertex u, Keep&& keep) {
  for (ArcId id : g.out_arcs(u)) {
    const bool want = keep(id);
    if (want && mask.removed(id)) mask.pop(id);
    if (!want && mask.active(id)) mask.push(id);
  }
}

bool contains(const std::vector<ArcId>& set, ArcId id) {
  return std::find(set.begin(), set.end(), id) != set.end();
}

}  // namespace

RunStats enumerate_alg1(const Graph& g, const Lambda& lam, Rational eps, PathSink& sink,
                        const EnumerationOptions& opt) {
  validate(g, lam, false);
  const bool fast = opt.sum_fast_path && lam.family() == Lambda::Family::Sum;
  RunStats stats;
  ArcMask mask(g);
  const Vertex s = g.source();
  const Vertex t = g.sink();

  const SolveOutcome opt0 = solve(g, mask, s, t, lam, opt.gate);
  ++stats.uspp_solves;
  stats.solver += opt0.stats;
  if (!opt0.found()) {
    ++stats.failed_solves;
    return stats;
  }
  stats.f_star = *opt0.value;
  const Bound bound{*opt0.value, eps};

  struct Frame {
    Vertex u;
    std::size_t next = 0;
    std::vector<ArcId> pinned;  // out-arcs of u removed while the prefix runs through u
    std::optional<DistanceTable> completion;  // fast path only
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{s, 0, {}, std::nullopt});
  std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  on_path[static_cast<std::size_t>(s)] = 1;
  Path prefix{s, {}};
  Value prefix_sum = 0;

  auto backtrack = [&] {
    on_path[static_cast<std::size_t>(stack.back().u)] = 0;
    stack.pop_back();
    if (stack.empty()) return;
    Frame& parent = stack.back();
    mask.pop(parent.pinned);
    parent.pinned.clear();
    prefix_sum -= g.arc(prefix.arcs.back()).cost;
    prefix.arcs.pop_back();
    ++stats.backtracks;
  };

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.u == t) {
      if (!emit(g, lam, bound, prefix, sink, stats)) return stats;
      backtrack();
      continue;
    }
    const auto outs = g.out_arcs(f.u);
    if (f.next == outs.size()) {
      backtrack();
      continue;
    }
    const ArcId a = outs[f.next++];
    ++stats.arcs_scanned;
    const Vertex v = g.arc(a).head;
    if (on_path[static_cast<std::size_t>(v)]) continue;

    bool extend = false;
    if (fast) {
      if (!f.completion) {
        // Block u entirely: from any v the table then measures completions
        // that avoid every prefix vertex.
        const auto all = std::vector<ArcId>(outs.begin(), outs.end());
        mask.push(all);
        f.completion = all_distances_to_sink(g, mask);
        mask.pop(all);
        ++stats.uspp_solves;
      }
      const auto d = f.completion->at(v);
      extend = d && bound.admits(checked_add(checked_add(prefix_sum, g.arc(a).cost), *d));
    } else {
      auto others = others_of(g, f.u, a);
      mask.push(others);
      const SolveOutcome r = solve(g, mask, s, t, lam, opt.gate);
      ++stats.uspp_solves;
      stats.solver += r.stats;
      if (!r.found()) ++stats.failed_solves;
      extend = r.found() && bound.admits(*r.value);
      mask.pop(others);
    }
    if (!extend) continue;

    f.pinned = others_of(g, f.u, a);
    mask.push(f.pinned);
    prefix.arcs.push_back(a);
    prefix_sum += g.arc(a).cost;
    on_path[static_cast<std::size_t>(v)] = 1;
    stack.push_back(Frame{v, 0, {}, std::nullopt});
  }
  return stats;
}

RunStats enumerate_alg2(const Graph& g, const Lambda& lam, Rational eps, PathSink& sink,
                        const EnumerationOptions& opt) {
  validate(g, lam, false);
  RunStats stats;
  ArcMask mask(g);
  const Vertex s = g.source();
  const Vertex t = g.sink();
  std::vector<std::vector<ArcId>> consumed(static_cast<std::size_t>(g.num_vertices()) + 1);
  auto C = [&](Vertex v) -> std::vector<ArcId>& { return consumed[static_cast<std::size_t>(v)]; };

  auto record = [&](const SolveOutcome* r, bool emitted, std::optional<Vertex> v) {
    if (!opt.trace) return;
    TraceStep step;
    if (r && r->found()) {
      step.found = r->path;
      step.value = r->value;
    }
    step.emitted = emitted;
    step.vertex = v;
    for (Vertex w = 1; w <= g.num_vertices(); ++w) {
      if (!C(w).empty()) {
        auto ids = C(w);
        std::sort(ids.begin(), ids.end());
        step.consumed.emplace(w, std::move(ids));
      }
    }
    opt.trace->push_back(std::move(step));
  };

  // Forbid every deviation before the last vertex of p and the last arc
  // itself, so the next solve must follow p up to its last vertex before t
  // and leave it by an arc not yet consumed there.
  auto forbid_along = [&](const Path& p) {
    for (std::size_t i = 0; i + 1 < p.arcs.size(); ++i) {
      const ArcId keep = p.arcs[i];
      for (ArcId id : g.out_arcs(g.arc(keep).tail)) {
        if (id != keep && mask.active(id)) mask.push(id);
      }
    }
    if (mask.active(p.arcs.back())) mask.push(p.arcs.back());
  };

  SolveOutcome init = solve(g, mask, s, t, lam, opt.gate);
  ++stats.uspp_solves;
  stats.solver += init.stats;
  if (!init.found()) {
    ++stats.failed_solves;
    record(&init, false, std::nullopt);
    return stats;
  }
  stats.f_star = *init.value;
  const Bound bound{*init.value, eps};

  Path path = *init.path;
  if (!emit(g, lam, bound, path, sink, stats)) return stats;
  forbid_along(path);
  std::optional<Vertex> v = g.arc(path.arcs.back()).tail;
  C(*v).push_back(path.arcs.back());
  record(&init, true, v);

  while (v) {
    const SolveOutcome r = solve(g, mask, s, t, lam, opt.gate);
    ++stats.uspp_solves;
    stats.solver += r.stats;
    if (!r.found()) ++stats.failed_solves;

    if (!r.found() || !bound.admits(*r.value)) {
      // Step back: v's deviations are exhausted, the path arc into v becomes
      // consumed at its predecessor, and both out-stars are reopened minus
      // whatever the predecessor has consumed.
      ++stats.backtracks;
      C(*v).clear();
      set_out_arcs(g, mask, *v, [](ArcId) { return true; });
      std::optional<Vertex> pred;
      for (ArcId id : path.arcs) {
        if (g.arc(id).head == *v) {
          pred = g.arc(id).tail;
          C(*pred).push_back(id);
          break;
        }
      }
      if (pred) {
        const auto& cp = C(*pred);
        set_out_arcs(g, mask, *pred, [&](ArcId id) { return !contains(cp, id); });
      }
      v = pred;
      record(&r, false, v);
      continue;
    }

    path = *r.path;
    if (!emit(g, lam, bound, path, sink, stats)) return stats;
    const ArcId last = path.arcs.back();
    v = g.arc(last).tail;
    C(*v).push_back(last);
    forbid_along(path);
    record(&r, true, v);
  }
  return stats;
}

RunStats enumerate_brute(const Graph& g, const Lambda& lam, Rational eps, PathSink& sink,
                         const EnumerationOptions& opt) {
  validate(g, lam, true);
  RunStats stats;
  ArcMask mask(g);
  const Vertex s = g.source();
  const Vertex t = g.sink();

  const SolveOutcome best = solve_brute(g, mask, s, t, lam, opt.gate);
  ++stats.uspp_solves;
  stats.solver += best.stats;
  if (!best.found()) {
    ++stats.failed_solves;
    return stats;
  }
  stats.f_star = *best.value;
  const Bound bound{*best.value, eps};
  const bool strict = opt.bound_mode == BoundMode::Strict;
  auto keep = [&](Value val) { return strict ? bound.strictly_admits(val) : bound.admits(val); };
  const bool monotone = lam.nonnegative();

  std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  std::vector<Cost> costs;
  Path cur{s, {}};
  std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
  on_path[static_cast<std::size_t>(s)] = 1;

  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    const auto outs = g.out_arcs(u);
    if (next == outs.size()) {
      on_path[static_cast<std::size_t>(u)] = 0;
      stack.pop_back();
      if (!cur.arcs.empty()) {
        cur.arcs.pop_back();
        costs.pop_back();
        ++stats.backtracks;
      }
      continue;
    }
    const ArcId id = outs[next++];
    ++stats.arcs_scanned;
    const Vertex v = g.arc(id).head;
    if (on_path[static_cast<std::size_t>(v)]) continue;
    costs.push_back(g.arc(id).cost);
    cur.arcs.push_back(id);
    if (v == t) {
      if (keep(universal_value(costs, lam))) {
        // Strict mode may reject values emit() would accept; emit checks <= B.
        if (!emit(g, lam, bound, cur, sink, stats)) return stats;
      }
      cur.arcs.pop_back();
      costs.pop_back();
      continue;
    }
    if (monotone && !bound.admits(universal_value(costs, lam))) {
      cur.arcs.pop_back();
      costs.pop_back();
      continue;
    }
    on_path[static_cast<std::size_t>(v)] = 1;
    stack.emplace_back(v, 0);
  }
  return stats;
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "alg1") return Algorithm::Alg1;
  if (name == "alg2") return Algorithm::Alg2;
  if (name == "brute") return Algorithm::Brute;
  throw ValidationError("unknown algorithm '" + name + "' (expected alg1, alg2, brute)");
}

RunStats enumerate(Algorithm algo, const Graph& g, const Lambda& lam, Rational eps,
                   PathSink& sink, const EnumerationOptions& opt) {
  switch (algo) {
    case Algorithm::Alg1: return enumerate_alg1(g, lam, eps, sink, opt);
    case Algorithm::Alg2: return enumerate_alg2(g, lam, eps, sink, opt);
    case Algorithm::Brute: return enumerate_brute(g, lam, eps, sink, opt);
  }
  return {};
}

std::vector<EmittedPath> collect_paths(Algorithm algo, const Graph& g, const Lambda& lam,
                                       Rational eps, RunStats* stats,
                                       const EnumerationOptions& opt) {
  std::vector<EmittedPath> out;
  PathSink sink([&](const Path& p, Value v) { out.push_back({p, v}); },
                std::numeric_limits<std::uint64_t>::max());
  const RunStats st = enumerate(algo, g, lam, eps, sink, opt);
  if (stats) *stats = st;
  return out;
}

std::vector<ArcId> arc_key(const Path& p) { return p.arcs; }

std::vector<std::int64_t> vertex_cost_key(const Graph& g, const Path& p) {
  std::vector<std::int64_t> key;
  for (Vertex v : path_vertices(g, p)) key.push_back(v);
  key.push_back(-1);
  auto costs = path_costs(g, p);
  std::sort(costs.begin(), costs.end());
  key.insert(key.end(), costs.begin(), costs.end());
  return key;
}

}  // namespace unssp
