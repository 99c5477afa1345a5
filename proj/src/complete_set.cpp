#include "unssp/complete_set.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "unssp/errors.hpp"

namespace unssp {

namespace {

// Depth-first walk over simple s-t paths in ascending arc-id order. `prune`
// sees the cost list of a proper prefix after each extension; `visit` sees
// complete paths and returns false to stop.
template <typename Prune, typename Visit>
void for_each_simple_path(const Graph& g, Prune&& prune, Visit&& visit) {
  const Vertex s = g.source();
  const Vertex t = g.sink();
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
      }
      continue;
    }
    const ArcId id = outs[next++];
    const Vertex v = g.arc(id).head;
    if (on_path[static_cast<std::size_t>(v)]) continue;
    costs.push_back(g.arc(id).cost);
    cur.arcs.push_back(id);
    if (v == t) {
      const bool go_on = visit(cur, std::as_const(costs));
      cur.arcs.pop_back();
      costs.pop_back();
      if (!go_on) return;
      continue;
    }
    if (prune(std::as_const(costs))) {
      cur.arcs.pop_back();
      costs.pop_back();
      continue;
    }
    on_path[static_cast<std::size_t>(v)] = 1;
    stack.emplace_back(v, 0);
  }
}

void check_lambda(const Graph& g, const Lambda& lam) {
  if (lam.size() != static_cast<std::size_t>(g.num_vertices() - 1)) {
    throw ValidationError("lambda length does not match the graph");
  }
}

// Simple s-t path using every arc of `order` in that order and otherwise only
// arcs flagged in `free_arc`. Exhaustive, so the answer is exact.
std::optional<Path> thread_in_order(const Graph& g, const std::vector<ArcId>& order,
                                    const std::vector<char>& free_arc) {
  const Vertex s = g.source();
  const Vertex t = g.sink();
  struct Frame {
    Vertex u;
    std::size_t next;
    std::size_t used;  // arcs of `order` consumed on the way to u
  };
  std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  Path cur{s, {}};
  std::vector<Frame> stack{{s, 0, 0}};
  on_path[static_cast<std::size_t>(s)] = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.u == t) {
      if (f.used == order.size()) return cur;
    } else if (f.next < g.out_arcs(f.u).size()) {
      const ArcId id = g.out_arcs(f.u)[f.next++];
      const Vertex v = g.arc(id).head;
      if (on_path[static_cast<std::size_t>(v)]) continue;
      std::size_t used = f.used;
      if (used < order.size() && id == order[used]) {
        ++used;
      } else if (!free_arc[static_cast<std::size_t>(id)]) {
        continue;
      }
      cur.arcs.push_back(id);
      on_path[static_cast<std::size_t>(v)] = 1;
      stack.push_back({v, 0, used});
      continue;
    }
    on_path[static_cast<std::size_t>(f.u)] = 0;
    stack.pop_back();
    if (!cur.arcs.empty()) cur.arcs.pop_back();
  }
  return std::nullopt;
}

}  // namespace

BigRational to_big(Rational r) { return BigRational(r.num, r.den); }

std::optional<EmittedPath> next_usp(const Graph& g, const NextUspQuery& q, const SizeGate& gate) {
  check_lambda(g, q.lam);
  ArcMask none(g);
  check_size_gate(g, none, g.source(), g.sink(), gate);
  const bool monotone = q.lam.nonnegative();
  std::optional<EmittedPath> best;
  for_each_simple_path(
      g,
      [&](const std::vector<Cost>& costs) {
        if (!monotone) return false;
        const Value v = universal_value(costs, q.lam);
        // Completions cost at least v; an equal value found later loses the tie.
        return (q.psi && v > *q.psi) || (best && v >= best->value);
      },
      [&](const Path& p, const std::vector<Cost>& costs) {
        const Value v = universal_value(costs, q.lam);
        if (v >= q.xi && (!q.psi || v <= *q.psi) && (!best || v < best->value)) {
          best = EmittedPath{p, v};
        }
        return true;
      });
  return best;
}

SubsetDecision next_usp_theorem5(const Graph& g, int k, Value mu, Value psi,
                                 const SubsetGate& gate) {
  if (k < 1 || k > gate.max_k) {
    throw SizeGateError("subset procedure needs 1 <= k <= " + std::to_string(gate.max_k));
  }
  if (g.num_arcs() > gate.max_arcs) {
    throw SizeGateError("subset procedure needs m <= " + std::to_string(gate.max_arcs));
  }
  SubsetDecision out;
  const int m = g.num_arcs();
  std::vector<ArcId> by_cost(static_cast<std::size_t>(m));
  for (ArcId id = 1; id <= m; ++id) by_cost[static_cast<std::size_t>(id - 1)] = id;
  std::stable_sort(by_cost.begin(), by_cost.end(),
                   [&](ArcId a, ArcId b) { return g.arc(a).cost < g.arc(b).cost; });
  auto cost_at = [&](int idx) { return g.arc(by_cost[static_cast<std::size_t>(idx)]).cost; };

  // Subsets are ascending index vectors into by_cost; bumping one index to the
  // next free position never lowers the sum, so a min-heap seeded with the
  // cheapest subset of each size yields all subsets in ascending sum.
  using State = std::pair<Value, std::vector<int>>;
  std::priority_queue<State, std::vector<State>, std::greater<>> frontier;
  std::set<std::vector<int>> seen;
  auto offer = [&](std::vector<int> idx) {
    if (!seen.insert(idx).second) return;
    Value sum = 0;
    for (int i : idx) sum = checked_add(sum, cost_at(i));
    frontier.emplace(sum, std::move(idx));
  };
  for (int r = 1; r <= std::min(k, m); ++r) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    offer(std::move(idx));
  }

  while (!frontier.empty()) {
    auto [sum, idx] = frontier.top();
    frontier.pop();
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const int bumped = idx[j] + 1;
      const int limit = j + 1 < idx.size() ? idx[j + 1] : m;
      if (bumped < limit) {
        auto next = idx;
        next[j] = bumped;
        offer(std::move(next));
      }
    }
    if (sum <= mu) continue;
    if (sum > psi) break;
    ++out.subsets_examined;

    std::vector<ArcId> r;
    for (int i : idx) r.push_back(by_cost[static_cast<std::size_t>(i)]);
    std::vector<char> free_arc(static_cast<std::size_t>(m) + 1, 0);
    if (static_cast<int>(r.size()) == k) {
      Cost floor_cost = g.arc(r.front()).cost;
      for (ArcId a : r) floor_cost = std::min(floor_cost, g.arc(a).cost);
      for (ArcId id = 1; id <= m; ++id) {
        if (g.arc(id).cost <= floor_cost) free_arc[static_cast<std::size_t>(id)] = 1;
      }
      for (ArcId a : r) free_arc[static_cast<std::size_t>(a)] = 0;
    }
    std::sort(r.begin(), r.end());
    do {
      if (auto p = thread_in_order(g, r, free_arc)) {
        out.accepted = true;
        out.witness = EmittedPath{*p, universal_value(g, *p, Lambda::ksum(g.num_vertices(),
                                                                          std::min(k, g.num_vertices() - 1)))};
        return out;
      }
    } while (std::next_permutation(r.begin(), r.end()));
  }
  return out;
}

MinimalCompleteSet minimal_complete_set(const Graph& g, const Lambda& lam, Rational eps,
                                        const SizeGate& gate) {
  if (!lam.nonnegative()) throw ValidationError("minimal complete set requires lambda >= 0");
  EnumerationOptions opt;
  opt.gate = gate;
  std::map<Value, Path> first_by_value;
  PathSink sink([&](const Path& p, Value v) { first_by_value.emplace(v, p); },
                std::numeric_limits<std::uint64_t>::max());
  const RunStats stats = enumerate_brute(g, lam, eps, sink, opt);
  MinimalCompleteSet out;
  if (!stats.f_star) return out;

  const Value last = Bound{*stats.f_star, eps}.floor();
  Value xi = *stats.f_star;
  while (xi != last + 1) {
    const auto it = first_by_value.lower_bound(xi);
    if (it == first_by_value.end() || it->first > last) break;
    out.entries.push_back({it->second, it->first});
    xi = it->first + 1;
  }
  return out;
}

std::optional<std::size_t> IntervalPartition::index_of(const BigRational& x) const {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].contains(x)) return i;
  }
  return std::nullopt;
}

IntervalPartition interval_partition(Value u, Rational eps, Rational delta,
                                     std::size_t max_intervals) {
  if (u <= 0) {
    throw ValidationError(
        "interval partition needs U > 0; with f* = 0 every admissible value is 0, use a "
        "single interval");
  }
  if (delta.num <= 0) throw ValidationError("interval partition needs delta > 0");
  IntervalPartition part;
  part.u = u;
  part.eps = to_big(eps);
  part.delta = to_big(delta);
  part.bound = (1 + part.eps) * u;

  const BigRational ratio = 1 + part.delta;
  BigRational lo = u;
  BigRational hi = lo * ratio;
  while (hi < part.bound) {
    if (part.intervals.size() + 1 >= max_intervals) {
      throw ValidationError("interval partition exceeds " + std::to_string(max_intervals) +
                            " intervals");
    }
    part.intervals.push_back({lo, hi, false});
    lo = hi;
    hi = lo * ratio;
  }
  part.intervals.push_back({lo, part.bound, true});
  return part;
}

Representatives representatives(const Graph& g, const Lambda& lam, Rational eps, Rational delta,
                                const SizeGate& gate) {
  check_lambda(g, lam);
  ArcMask none(g);
  const SolveOutcome best = solve_brute(g, none, g.source(), g.sink(), lam, gate);
  if (!best.found()) throw ValidationError("no s-t path");
  Representatives out;
  out.partition = interval_partition(*best.value, eps, delta);
  out.witnesses.resize(out.partition.intervals.size());
  const Bound bound{*best.value, eps};
  const bool monotone = lam.nonnegative();
  for_each_simple_path(
      g,
      [&](const std::vector<Cost>& costs) {
        return monotone && !bound.admits(universal_value(costs, lam));
      },
      [&](const Path& p, const std::vector<Cost>& costs) {
        const Value v = universal_value(costs, lam);
        if (const auto i = out.partition.index_of(BigRational(v))) {
          auto& slot = out.witnesses[*i];
          if (!slot || v < slot->value) slot = EmittedPath{p, v};
        }
        return true;
      });
  return out;
}

}  // namespace unssp
