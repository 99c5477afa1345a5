#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unssp/graph.hpp"
#include "unssp/objective.hpp"

namespace unssp {

struct SolveStats {
  std::uint64_t relaxations = 0;
  std::uint64_t threshold_probes = 0;

  SolveStats& operator+=(const SolveStats& o) {
    relaxations += o.relaxations;
    threshold_probes += o.threshold_probes;
    return *this;
  }
};

/// Result of a universal shortest path query. `path` and `value` are either
/// both present or both absent; absence means `to` is unreachable.
struct SolveOutcome {
  std::optional<Path> path;
  std::optional<Value> value;
  SolveStats stats;

  bool found() const noexcept { return path.has_value(); }
};

/// Sum-distances from every vertex to a target under the mask.
struct DistanceTable {
  Vertex target = 0;
  std::vector<std::optional<Value>> dist;  // indexed by vertex, [0] unused
  std::vector<ArcId> next_arc;             // first arc of a shortest v-target path, 0 if none

  std::optional<Value> at(Vertex v) const { return dist[static_cast<std::size_t>(v)]; }
};

/// Dijkstra on the inverse of the masked graph, rooted at the sink.
DistanceTable all_distances_to_sink(const Graph& g, const ArcMask& mask);
DistanceTable distances_to(const Graph& g, const ArcMask& mask, Vertex target);

/// Limits for the exhaustive routines. An instance passes when it has at most
/// `max_vertices` vertices or when the number of from-to walks of length at
/// most n-1 (an upper bound on simple paths) is at most `max_estimated_paths`.
struct SizeGate {
  int max_vertices = 14;
  std::uint64_t max_estimated_paths = 1'000'000;
  bool unlimited = false;

  /// Defaults, overridden by UNSSP_SIZE_GATE: an integer replaces
  /// max_vertices, `off` disables the gate. Intended for tests.
  static SizeGate from_env();
};

/// Number of from-to walks with at most n-1 arcs in the masked graph,
/// saturating at `cap`.
std::uint64_t estimate_path_count(const Graph& g, const ArcMask& mask, Vertex from, Vertex to,
                                  std::uint64_t cap);

/// Throws SizeGateError if the gate refuses the instance.
void check_size_gate(const Graph& g, const ArcMask& mask, Vertex from, Vertex to,
                     const SizeGate& gate);

// Exact solvers per objective family. All returned paths are simple and use
// only unmasked arcs; ties go to fewer hops, then the lexicographically
// smaller arc-id sequence (within the threshold chosen, for the threshold
// methods). from == to yields the empty path with value 0.

SolveOutcome solve_sum(const Graph& g, const ArcMask& mask, Vertex from, Vertex to);

/// Minimizes the largest arc cost: binary search over distinct costs with
/// reachability probes on arcs of cost <= threshold.
SolveOutcome solve_bottleneck(const Graph& g, const ArcMask& mask, Vertex from, Vertex to);

/// Minimizes the k-th largest arc cost (0 for paths shorter than k). A
/// threshold t is feasible iff some path uses at most k-1 arcs costlier than t;
/// feasibility is monotone in t, so the optimum is found by bisection over
/// {0} and the distinct costs.
SolveOutcome solve_kmax(const Graph& g, const ArcMask& mask, Vertex from, Vertex to, int k);

/// Minimizes the sum of the k largest arc costs using
///   min_P sum_k(P) = min_t [ k*t + min_P sum_{a in P} max(c(a) - t, 0) ]
/// over t in {0} and the distinct costs.
SolveOutcome solve_ksum(const Graph& g, const ArcMask& mask, Vertex from, Vertex to, int k);

/// Exhaustive DFS over all simple from-to paths; any sign of lambda.
SolveOutcome solve_brute(const Graph& g, const ArcMask& mask, Vertex from, Vertex to,
                         const Lambda& lam, const SizeGate& gate = SizeGate::from_env());

/// Dispatches families to their specialized solver, Explicit to solve_brute.
SolveOutcome solve(const Graph& g, const ArcMask& mask, Vertex from, Vertex to,
                   const Lambda& lam, const SizeGate& gate = SizeGate::from_env());

}  // namespace unssp
