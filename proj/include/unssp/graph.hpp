#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unssp {

// Vertices are numbered 1..n and arcs 1..m, exactly as in the graph file.
using Vertex = std::int32_t;
using ArcId = std::int32_t;
using Cost = std::int64_t;
using Value = std::int64_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  Cost cost = 0;

  bool operator==(const Arc&) const = default;
};

/// Immutable directed multigraph with non-negative integer arc costs and a
/// designated source/sink pair. Parallel arcs are allowed; self-loops are
/// accepted but can never lie on a simple path.
class Graph {
 public:
  /// Builds the graph; arcs[i] receives id i+1. Throws ValidationError when an
  /// endpoint is out of range, a cost is negative, or source == sink.
  Graph(Vertex num_vertices, std::vector<Arc> arcs, Vertex source, Vertex sink);

  Vertex num_vertices() const noexcept { return n_; }
  ArcId num_arcs() const noexcept { return static_cast<ArcId>(arcs_.size()); }
  Vertex source() const noexcept { return source_; }
  Vertex sink() const noexcept { return sink_; }

  const Arc& arc(ArcId id) const { return arcs_[static_cast<std::size_t>(id - 1)]; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  /// Outgoing / incoming arc ids of v in ascending id order.
  std::span<const ArcId> out_arcs(Vertex v) const;
  std::span<const ArcId> in_arcs(Vertex v) const;

  bool operator==(const Graph& other) const;

 private:
  Vertex n_;
  Vertex source_;
  Vertex sink_;
  std::vector<Arc> arcs_;
  // CSR layout, offsets indexed by vertex (offset[0] unused).
  std::vector<std::size_t> out_offset_;
  std::vector<ArcId> out_ids_;
  std::vector<std::size_t> in_offset_;
  std::vector<ArcId> in_ids_;
};

/// Parses the line-oriented graph format:
///   p unssp <n> <m>   (first non-comment line)
///   s <v> / t <v>     (once each)
///   a <u> <v> <cost>  (exactly m times)
/// `#` starts a comment. Throws ParseError naming the line.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Inverse of parse_graph: canonical text with arcs in id order.
std::string serialize_graph(const Graph& g);

/// Reverses every arc and swaps source/sink. Arc ids are preserved.
Graph inverse(const Graph& g);

/// Reversible removal of arcs from a base graph. The base graph is never
/// touched; removal is tracked per arc id with a generation stamp so clear()
/// is O(1).
class ArcMask {
 public:
  explicit ArcMask(const Graph& g);

  /// Removes every id in `ids`. Each id must currently be present.
  void push(std::span<const ArcId> ids);
  /// Restores every id in `ids`. Each id must currently be removed.
  void pop(std::span<const ArcId> ids);
  void push(ArcId id);
  void pop(ArcId id);

  bool removed(ArcId id) const {
    return stamp_[static_cast<std::size_t>(id)] == generation_;
  }
  bool active(ArcId id) const { return !removed(id); }
  std::size_t removed_count() const noexcept { return removed_count_; }

  /// Restores every arc.
  void clear();

  std::vector<ArcId> masked_out_arcs(Vertex v) const;
  std::size_t masked_out_degree(Vertex v) const;

  const Graph& graph() const noexcept { return *graph_; }

 private:
  const Graph* graph_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 1;
  std::size_t removed_count_ = 0;
};

/// A path given by its arc sequence. `origin` pins the start vertex so that the
/// empty path still has a well-defined vertex trace.
struct Path {
  Vertex origin = 0;
  std::vector<ArcId> arcs;

  std::size_t hops() const noexcept { return arcs.size(); }
  bool empty() const noexcept { return arcs.empty(); }

  bool operator==(const Path&) const = default;
};

/// Vertex trace (origin, head of arc 1, ..., head of last arc).
std::vector<Vertex> path_vertices(const Graph& g, const Path& p);

/// Last vertex of the path (origin for the empty path).
Vertex path_end(const Graph& g, const Path& p);

/// True iff consecutive arcs are adjacent and start at p.origin.
bool is_walk(const Graph& g, const Path& p);

/// Walk with no repeated vertex.
bool is_simple(const Graph& g, const Path& p);

/// Predecessor of v on p, or nullopt for the origin or a vertex not on p.
std::optional<Vertex> path_pred(const Graph& g, const Path& p, Vertex v);

/// Arc costs along the path, in path order.
std::vector<Cost> path_costs(const Graph& g, const Path& p);

/// Cuts every cycle out of a walk. The result is a simple path with the same
/// endpoints whose arcs are a subsequence of the walk's arcs.
Path remove_loops(const Graph& g, const Path& walk);

}  // namespace unssp
