#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unssp/graph.hpp"
#include "unssp/objective.hpp"
#include "unssp/solvers.hpp"

namespace unssp {

inline constexpr std::uint64_t kDefaultMaxPaths = 1'000'000;

/// Receives emitted paths in the algorithm's emission order. Accepts at most
/// `max_paths`; the enumeration stops cleanly (and reports truncation) when it
/// finds one more.
class PathSink {
 public:
  using Callback = std::function<void(const Path&, Value)>;

  explicit PathSink(Callback cb, std::uint64_t max_paths = kDefaultMaxPaths)
      : cb_(std::move(cb)), max_paths_(max_paths) {}

  /// Forwards to the callback; false once the cutoff is reached.
  bool offer(const Path& p, Value v) {
    if (received_ >= max_paths_) return false;
    ++received_;
    if (cb_) cb_(p, v);
    return true;
  }

  std::uint64_t received() const noexcept { return received_; }
  std::uint64_t max_paths() const noexcept { return max_paths_; }

 private:
  Callback cb_;
  std::uint64_t max_paths_;
  std::uint64_t received_ = 0;
};

struct RunStats {
  std::uint64_t paths = 0;
  std::uint64_t uspp_solves = 0;
  std::uint64_t failed_solves = 0;  // solves that found no path
  std::uint64_t arcs_scanned = 0;
  std::uint64_t backtracks = 0;
  bool truncated = false;
  std::optional<Value> f_star;  // absent when s cannot reach t
  SolveStats solver;
};

/// One call of the deviation-based algorithm, as in its golden trace: the path
/// the USPP solve returned (if any), whether it was emitted, and the deviation
/// vertex and consumed-arc sets after the step. `vertex` is absent once the
/// search has backed out past the source.
struct TraceStep {
  std::optional<Path> found;
  std::optional<Value> value;
  bool emitted = false;
  std::optional<Vertex> vertex;
  std::map<Vertex, std::vector<ArcId>> consumed;  // only non-empty sets
};

enum class BoundMode { Inclusive, Strict };

struct EnumerationOptions {
  SizeGate gate = SizeGate::from_env();
  /// Prefix-extension check for lambda = Sum via one distance table per
  /// prefix instead of one masked solve per arc.
  bool sum_fast_path = false;
  /// Receives the step trace of enumerate_alg2 when non-null.
  std::vector<TraceStep>* trace = nullptr;
  /// Brute enumerator only: `Strict` keeps paths with value < B.
  BoundMode bound_mode = BoundMode::Inclusive;
};

/// Depth-first prefix extension. An arc a = (u, v) extends the current prefix
/// P iff v is not on P and the best s-t completion of P + a, found by a USPP
/// solve on the graph where every prefix vertex keeps only its path arc, is
/// within B. Requires lambda >= 0. Emits in ascending arc-id DFS order.
RunStats enumerate_alg1(const Graph& g, const Lambda& lam, Rational eps, PathSink& sink,
                        const EnumerationOptions& opt = {});

/// Deviation search driven by forbidden arcs and per-vertex consumed-arc
/// sets; walks back along the current path one vertex per failed solve.
/// Same emitted set as enumerate_alg1. Requires lambda >= 0.
RunStats enumerate_alg2(const Graph& g, const Lambda& lam, Rational eps, PathSink& sink,
                        const EnumerationOptions& opt = {});

/// Exhaustive DFS over simple s-t paths in ascending arc-id order, emitting
/// those within B. Accepts any sign of lambda; subject to the size gate.
RunStats enumerate_brute(const Graph& g, const Lambda& lam, Rational eps, PathSink& sink,
                         const EnumerationOptions& opt = {});

enum class Algorithm { Alg1, Alg2, Brute };
Algorithm parse_algorithm(const std::string& name);
RunStats enumerate(Algorithm algo, const Graph& g, const Lambda& lam, Rational eps,
                   PathSink& sink, const EnumerationOptions& opt = {});

struct EmittedPath {
  Path path;
  Value value = 0;
};

/// Runs an enumeration and buffers its output.
std::vector<EmittedPath> collect_paths(Algorithm algo, const Graph& g, const Lambda& lam,
                                       Rational eps, RunStats* stats = nullptr,
                                       const EnumerationOptions& opt = {});

/// Identity used for emission: the arc-id sequence.
std::vector<ArcId> arc_key(const Path& p);

/// Identity for comparing outputs across algorithms when parallel arcs of
/// equal cost make arc sequences ambiguous: vertex trace followed by the
/// sorted cost multiset.
std::vector<std::int64_t> vertex_cost_key(const Graph& g, const Path& p);

}  // namespace unssp
