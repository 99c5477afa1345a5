#include "unssp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "unssp/errors.hpp"

namespace unssp {

namespace {

void build_csr(Vertex n, const std::vector<Arc>& arcs, bool by_tail,
               std::vector<std::size_t>& offset, std::vector<ArcId>& ids) {
  offset.assign(static_cast<std::size_t>(n) + 2, 0);
  for (const Arc& a : arcs) {
    ++offset[static_cast<std::size_t>(by_tail ? a.tail : a.head) + 1];
  }
  for (std::size_t v = 1; v < offset.size(); ++v) offset[v] += offset[v - 1];
  ids.assign(arcs.size(), 0);
  std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
  // Ascending id order falls out of the single forward pass.
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Vertex v = by_tail ? arcs[i].tail : arcs[i].head;
    ids[cursor[static_cast<std::size_t>(v)]++] = static_cast<ArcId>(i + 1);
  }
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Graph::Graph(Vertex num_vertices, std::vector<Arc> arcs, Vertex source, Vertex sink)
    : n_(num_vertices), source_(source), sink_(sink), arcs_(std::move(arcs)) {
  if (n_ < 2) throw ValidationError("graph needs at least 2 vertices");
  auto in_range = [this](Vertex v) { return v >= 1 && v <= n_; };
  if (!in_range(source_) || !in_range(sink_)) {
    throw ValidationError("source/sink out of range");
  }
  if (source_ == sink_) throw ValidationError("source equals sink");
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (!in_range(a.tail) || !in_range(a.head)) {
      throw ValidationError("arc " + std::to_string(i + 1) + " has an endpoint out of range");
    }
    if (a.cost < 0) {
      throw ValidationError("arc " + std::to_string(i + 1) + " has negative cost");
    }
  }
  build_csr(n_, arcs_, true, out_offset_, out_ids_);
  build_csr(n_, arcs_, false, in_offset_, in_ids_);
}

std::span<const ArcId> Graph::out_arcs(Vertex v) const {
  const auto i = static_cast<std::size_t>(v);
  return std::span<const ArcId>(out_ids_).subspan(out_offset_[i],
                                                  out_offset_[i + 1] - out_offset_[i]);
}

std::span<const ArcId> Graph::in_arcs(Vertex v) const {
  const auto i = static_cast<std::size_t>(v);
  return std::span<const ArcId>(in_ids_).subspan(in_offset_[i],
                                                 in_offset_[i + 1] - in_offset_[i]);
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && source_ == other.source_ && sink_ == other.sink_ &&
         arcs_ == other.arcs_;
}

Graph parse_graph(std::string_view text) {
  std::optional<std::pair<std::int64_t, std::int64_t>> header;
  std::optional<Vertex> source;
  std::optional<Vertex> sink;
  std::vector<Arc> arcs;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  auto vertex = [&](std::string_view tok, std::size_t line) {
    const auto v = parse_int(tok, line, "vertex id");
    if (v < 1 || v > header->first) {
      throw ParseError(line, "vertex id " + std::to_string(v) + " out of range 1.." +
                                 std::to_string(header->first));
    }
    return static_cast<Vertex>(v);
  };

  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (tok[0] == "p") {
      if (header) throw ParseError(line_no, "duplicate header");
      if (tok.size() != 4 || tok[1] != "unssp") {
        throw ParseError(line_no, "malformed header, expected 'p unssp <n> <m>'");
      }
      const auto n = parse_int(tok[2], line_no, "vertex count");
      const auto m = parse_int(tok[3], line_no, "arc count");
      if (n < 2 || n > (1 << 30)) throw ParseError(line_no, "vertex count must be >= 2");
      if (m < 0 || m > (1 << 30)) throw ParseError(line_no, "arc count must be >= 0");
      header.emplace(n, m);
      arcs.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (!header) throw ParseError(line_no, "header 'p unssp <n> <m>' must come first");

    if (tok[0] == "s" || tok[0] == "t") {
      if (tok.size() != 2) throw ParseError(line_no, "malformed '" + std::string(tok[0]) + "' line");
      auto& slot = tok[0] == "s" ? source : sink;
      if (slot) throw ParseError(line_no, "duplicate '" + std::string(tok[0]) + "' line");
      slot = vertex(tok[1], line_no);
    } else if (tok[0] == "a") {
      if (tok.size() != 4) throw ParseError(line_no, "malformed arc line");
      Arc a;
      a.tail = vertex(tok[1], line_no);
      a.head = vertex(tok[2], line_no);
      a.cost = parse_int(tok[3], line_no, "cost");
      if (a.cost < 0) throw ParseError(line_no, "negative cost");
      if (static_cast<std::int64_t>(arcs.size()) == header->second) {
        throw ParseError(line_no, "arc count mismatch: more than " +
                                      std::to_string(header->second) + " arcs");
      }
      arcs.push_back(a);
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }

  if (!header) throw ParseError(0, "missing header 'p unssp <n> <m>'");
  if (static_cast<std::int64_t>(arcs.size()) != header->second) {
    throw ParseError(line_no, "arc count mismatch: header declares " +
                                  std::to_string(header->second) + ", found " +
                                  std::to_string(arcs.size()));
  }
  if (!source) throw ParseError(0, "missing source line 's <v>'");
  if (!sink) throw ParseError(0, "missing sink line 't <v>'");
  if (*source == *sink) throw ParseError(0, "source equals sink");
  return Graph(static_cast<Vertex>(header->first), std::move(arcs), *source, *sink);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const Graph& g) {
  std::string out;
  out += "p unssp " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_arcs()) + "\n";
  out += "s " + std::to_string(g.source()) + "\n";
  out += "t " + std::to_string(g.sink()) + "\n";
  for (const Arc& a : g.arcs()) {
    out += "a " + std::to_string(a.tail) + " " + std::to_string(a.head) + " " +
           std::to_string(a.cost) + "\n";
  }
  return out;
}

Graph inverse(const Graph& g) {
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  for (Arc& a : arcs) std::swap(a.tail, a.head);
  return Graph(g.num_vertices(), std::move(arcs), g.sink(), g.source());
}

ArcMask::ArcMask(const Graph& g)
    : graph_(&g), stamp_(static_cast<std::size_t>(g.num_arcs()) + 1, 0) {}

void ArcMask::push(ArcId id) {
  if (id < 1 || id > graph_->num_arcs()) throw ContractError("arc id out of range");
  if (removed(id)) throw ContractError("arc " + std::to_string(id) + " already removed");
  stamp_[static_cast<std::size_t>(id)] = generation_;
  ++removed_count_;
}

void ArcMask::pop(ArcId id) {
  if (id < 1 || id > graph_->num_arcs()) throw ContractError("arc id out of range");
  if (!removed(id)) throw ContractError("arc " + std::to_string(id) + " is not removed");
  stamp_[static_cast<std::size_t>(id)] = 0;
  --removed_count_;
}

void ArcMask::push(std::span<const ArcId> ids) {
  for (ArcId id : ids) push(id);
}

void ArcMask::pop(std::span<const ArcId> ids) {
  for (ArcId id : ids) pop(id);
}

void ArcMask::clear() {
  ++generation_;
  if (generation_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    generation_ = 1;
  }
  removed_count_ = 0;
}

std::vector<ArcId> ArcMask::masked_out_arcs(Vertex v) const {
  std::vector<ArcId> out;
  for (ArcId id : graph_->out_arcs(v)) {
    if (active(id)) out.push_back(id);
  }
  return out;
}

std::size_t ArcMask::masked_out_degree(Vertex v) const {
  std::size_t d = 0;
  for (ArcId id : graph_->out_arcs(v)) d += active(id) ? 1 : 0;
  return d;
}

std::vector<Vertex> path_vertices(const Graph& g, const Path& p) {
  std::vector<Vertex> out;
  out.reserve(p.arcs.size() + 1);
  out.push_back(p.origin);
  for (ArcId id : p.arcs) out.push_back(g.arc(id).head);
  return out;
}

Vertex path_end(const Graph& g, const Path& p) {
  return p.arcs.empty() ? p.origin : g.arc(p.arcs.back()).head;
}

bool is_walk(const Graph& g, const Path& p) {
  if (p.origin < 1 || p.origin > g.num_vertices()) return false;
  Vertex at = p.origin;
  for (ArcId id : p.arcs) {
    if (id < 1 || id > g.num_arcs()) return false;
    if (g.arc(id).tail != at) return false;
    at = g.arc(id).head;
  }
  return true;
}

bool is_simple(const Graph& g, const Path& p) {
  if (!is_walk(g, p)) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  for (Vertex v : path_vertices(g, p)) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

std::optional<Vertex> path_pred(const Graph& g, const Path& p, Vertex v) {
  for (ArcId id : p.arcs) {
    if (g.arc(id).head == v) return g.arc(id).tail;
  }
  return std::nullopt;
}

std::vector<Cost> path_costs(const Graph& g, const Path& p) {
  std::vector<Cost> out;
  out.reserve(p.arcs.size());
  for (ArcId id : p.arcs) out.push_back(g.arc(id).cost);
  return out;
}

Path remove_loops(const Graph& g, const Path& walk) {
  // Stack of arcs with the position at which each vertex was entered; on a
  // revisit, unwind back to the earlier occurrence.
  std::vector<std::ptrdiff_t> at(static_cast<std::size_t>(g.num_vertices()) + 1, -1);
  Path out{walk.origin, {}};
  at[static_cast<std::size_t>(walk.origin)] = 0;
  for (ArcId id : walk.arcs) {
    const Vertex h = g.arc(id).head;
    const auto hi = static_cast<std::size_t>(h);
    if (at[hi] >= 0) {
      const auto keep = static_cast<std::size_t>(at[hi]);
      while (out.arcs.size() > keep) {
        at[static_cast<std::size_t>(g.arc(out.arcs.back()).head)] = -1;
        out.arcs.pop_back();
      }
      at[hi] = static_cast<std::ptrdiff_t>(keep);
    } else {
      out.arcs.push_back(id);
      at[hi] = static_cast<std::ptrdiff_t>(out.arcs.size());
    }
  }
  return out;
}

}  // namespace unssp
