#include "unssp/lp_export.hpp"

#include <sstream>

#include "unssp/errors.hpp"

namespace unssp {

namespace {

constexpr std::size_t kWrapColumn = 200;

const char* relation_text(LpRelation r) {
  switch (r) {
    case LpRelation::Le: return "<=";
    case LpRelation::Ge: return ">=";
    case LpRelation::Eq: return "=";
  }
  return "=";
}

// Writes " a x + b y - c z", breaking lines before they get long.
void write_expression(std::ostringstream& out, std::size_t& column,
                      const std::vector<LpTerm>& terms) {
  bool first = true;
  auto put = [&](const std::string& piece) {
    if (column + piece.size() > kWrapColumn) {
      out << "\n ";
      column = 1;
    }
    out << piece;
    column += piece.size();
  };
  for (const LpTerm& t : terms) {
    if (t.coef == 0) continue;
    std::string piece;
    if (first) {
      piece = t.coef < 0 ? " -" : " ";
    } else {
      piece = t.coef < 0 ? " - " : " + ";
    }
    const auto mag = t.coef < 0 ? -static_cast<unsigned long long>(t.coef)
                                : static_cast<unsigned long long>(t.coef);
    if (mag != 1) piece += std::to_string(mag) + " ";
    piece += t.var;
    put(piece);
    first = false;
  }
  if (first) put(" 0");
}

}  // namespace

std::string to_lp_text(const LpModel& model) {
  std::ostringstream out;
  for (const auto& c : model.comments) out << "\\ " << c << "\n";
  out << (model.maximize ? "Maximize\n" : "Minimize\n");
  std::size_t column = 5;
  out << " obj:";
  write_expression(out, column, model.objective);
  out << "\nSubject To\n";
  for (const auto& c : model.constraints) {
    out << " " << c.name << ":";
    column = c.name.size() + 2;
    write_expression(out, column, c.terms);
    out << " " << relation_text(c.rel) << " " << c.rhs << "\n";
  }
  if (!model.binaries.empty()) {
    out << "Binary\n";
    column = 0;
    for (const auto& v : model.binaries) {
      if (column + v.size() + 1 > kWrapColumn) {
        out << "\n";
        column = 0;
      }
      out << " " << v;
      column += v.size() + 1;
    }
    out << "\n";
  }
  out << "End\n";
  return out.str();
}

std::string arc_var(const Graph& g, char prefix, ArcId id, int position) {
  const Arc& a = g.arc(id);
  std::string name(1, prefix);
  if (position > 0) name += "_" + std::to_string(position);
  name += "_" + std::to_string(a.tail) + "_" + std::to_string(a.head) + "_" + std::to_string(id);
  return name;
}

namespace {

void add_flow(const Graph& g, LpModel& model) {
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    LpConstraint c;
    c.name = "flow_" + std::to_string(v);
    for (ArcId id : g.out_arcs(v)) c.terms.push_back({1, arc_var(g, 'x', id)});
    for (ArcId id : g.in_arcs(v)) c.terms.push_back({-1, arc_var(g, 'x', id)});
    c.rel = LpRelation::Eq;
    c.rhs = v == g.source() ? 1 : (v == g.sink() ? -1 : 0);
    model.constraints.push_back(std::move(c));
  }
}

}  // namespace

LpModel build_nspip(const Graph& g, Value xi) {
  LpModel model;
  model.maximize = false;
  model.comments.push_back("near-shortest path program: min c.x, flow conservation, c.x >= " +
                           std::to_string(xi) + ", x binary");
  model.comments.push_back("n=" + std::to_string(g.num_vertices()) +
                           " m=" + std::to_string(g.num_arcs()) + " s=" +
                           std::to_string(g.source()) + " t=" + std::to_string(g.sink()));
  for (ArcId id = 1; id <= g.num_arcs(); ++id) {
    model.objective.push_back({g.arc(id).cost, arc_var(g, 'x', id)});
    model.binaries.push_back(arc_var(g, 'x', id));
  }
  add_flow(g, model);
  LpConstraint bound;
  bound.name = "bound_lower";
  bound.terms = model.objective;
  bound.rel = LpRelation::Ge;
  bound.rhs = xi;
  model.constraints.push_back(std::move(bound));
  return model;
}

LpModel build_unspip(const Graph& g, const Lambda& lam, Value xi, const LpGate& gate,
                     const SizeGate& solve_gate) {
  const Vertex n = g.num_vertices();
  const ArcId m = g.num_arcs();
  if (n > gate.max_vertices) {
    throw SizeGateError("universal program enumerates all vertex subsets; needs n <= " +
                        std::to_string(gate.max_vertices));
  }
  if (lam.size() != static_cast<std::size_t>(n - 1)) {
    throw ValidationError("lambda length does not match the graph");
  }
  ArcMask none(g);
  const SolveOutcome opt = solve(g, none, g.source(), g.sink(), lam, solve_gate);
  if (!opt.found()) throw ValidationError("no s-t path, so f* is undefined");
  const Value cap = checked_add(*opt.value, xi);
  const int positions = n - 1;

  LpModel model;
  model.maximize = true;
  model.comments.push_back("universal near-shortest path program, lambda=" + lam.to_string() +
                           ", f*=" + std::to_string(*opt.value) + ", xi=" + std::to_string(xi));
  model.comments.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) + " s=" +
                           std::to_string(g.source()) + " t=" + std::to_string(g.sink()));
  model.comments.push_back(
      "objective is a maximization as formulated; the bound row caps it at f* + xi");
  if (m != positions) {
    // Summing assign_arc_ over arcs gives m, summing assign_pos_ gives n-1.
    model.comments.push_back("warning: m != n-1; the assign_arc_ and assign_pos_ rows "
                             "together force m = n-1, so this model is infeasible");
  }

  for (ArcId id = 1; id <= m; ++id) model.binaries.push_back(arc_var(g, 'x', id));
  for (int i = 1; i <= positions; ++i) {
    for (ArcId id = 1; id <= m; ++id) model.binaries.push_back(arc_var(g, 's', id, i));
  }
  for (int i = 1; i <= positions; ++i) {
    for (ArcId id = 1; id <= m; ++id) model.binaries.push_back(arc_var(g, 'y', id, i));
  }

  std::vector<LpTerm> weighted;
  for (int i = 1; i <= positions; ++i) {
    const auto w = lam.weight(static_cast<std::size_t>(i));
    for (ArcId id = 1; id <= m; ++id) {
      weighted.push_back({checked_mul(w, g.arc(id).cost), arc_var(g, 'y', id, i)});
    }
  }
  model.objective = weighted;

  add_flow(g, model);

  for (std::uint32_t set = 1; set < (1u << n); ++set) {
    const int size = __builtin_popcount(set);
    if (size < 2) continue;
    LpConstraint c;
    c.name = "subtour_" + std::to_string(set);
    for (ArcId id = 1; id <= m; ++id) {
      const Arc& a = g.arc(id);
      if ((set >> (a.tail - 1) & 1u) && (set >> (a.head - 1) & 1u)) {
        c.terms.push_back({1, arc_var(g, 'x', id)});
      }
    }
    c.rel = LpRelation::Le;
    c.rhs = size - 1;
    model.constraints.push_back(std::move(c));
  }

  for (ArcId id = 1; id <= m; ++id) {
    LpConstraint c;
    c.name = "assign_arc_" + std::to_string(id);
    for (int i = 1; i <= positions; ++i) c.terms.push_back({1, arc_var(g, 's', id, i)});
    c.rel = LpRelation::Eq;
    c.rhs = 1;
    model.constraints.push_back(std::move(c));
  }
  for (int i = 1; i <= positions; ++i) {
    LpConstraint c;
    c.name = "assign_pos_" + std::to_string(i);
    for (ArcId id = 1; id <= m; ++id) c.terms.push_back({1, arc_var(g, 's', id, i)});
    c.rel = LpRelation::Eq;
    c.rhs = 1;
    model.constraints.push_back(std::move(c));
  }

  for (int i = 1; i + 1 <= positions; ++i) {
    LpConstraint c;
    c.name = "sort_" + std::to_string(i);
    for (ArcId id = 1; id <= m; ++id) c.terms.push_back({g.arc(id).cost, arc_var(g, 'y', id, i)});
    for (ArcId id = 1; id <= m; ++id) {
      c.terms.push_back({-g.arc(id).cost, arc_var(g, 'y', id, i + 1)});
    }
    c.rel = LpRelation::Ge;
    c.rhs = 0;
    model.constraints.push_back(std::move(c));
  }

  auto suffix = [&](int i, ArcId id) {
    return std::to_string(i) + "_" + std::to_string(id);
  };
  for (int i = 1; i <= positions; ++i) {
    for (ArcId id = 1; id <= m; ++id) {
      model.constraints.push_back({"lin_le_s_" + suffix(i, id),
                                   {{1, arc_var(g, 'y', id, i)}, {-1, arc_var(g, 's', id, i)}},
                                   LpRelation::Le,
                                   0});
    }
  }
  for (int i = 1; i <= positions; ++i) {
    for (ArcId id = 1; id <= m; ++id) {
      model.constraints.push_back({"lin_le_x_" + suffix(i, id),
                                   {{1, arc_var(g, 'y', id, i)}, {-1, arc_var(g, 'x', id)}},
                                   LpRelation::Le,
                                   0});
    }
  }
  for (int i = 1; i <= positions; ++i) {
    for (ArcId id = 1; id <= m; ++id) {
      model.constraints.push_back({"lin_ge_" + suffix(i, id),
                                   {{1, arc_var(g, 's', id, i)},
                                    {1, arc_var(g, 'x', id)},
                                    {-1, arc_var(g, 'y', id, i)}},
                                   LpRelation::Le,
                                   1});
    }
  }
  model.constraints.push_back({"bound_upper", weighted, LpRelation::Le, cap});
  return model;
}

std::string emit_nspip(const Graph& g, Value xi) { return to_lp_text(build_nspip(g, xi)); }

std::string emit_unspip(const Graph& g, const Lambda& lam, Value xi, const LpGate& gate) {
  return to_lp_text(build_unspip(g, lam, xi, gate));
}

}  // namespace unssp
