#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unssp/graph.hpp"
#include "unssp/objective.hpp"
#include "unssp/solvers.hpp"

namespace unssp {

struct LpTerm {
  std::int64_t coef = 0;
  std::string var;
};

enum class LpRelation { Le, Ge, Eq };

struct LpConstraint {
  std::string name;
  std::vector<LpTerm> terms;
  LpRelation rel = LpRelation::Eq;
  std::int64_t rhs = 0;
};

struct LpModel {
  bool maximize = false;
  std::vector<std::string> comments;
  std::vector<LpTerm> objective;
  std::vector<LpConstraint> constraints;
  std::vector<std::string> binaries;  // every variable, in registration order
};

/// Renders LP format: optional `\` comment header, objective, Subject To,
/// Binary, End. Zero coefficients are dropped; an empty side is written as 0.
std::string to_lp_text(const LpModel& model);

std::string arc_var(const Graph& g, char prefix, ArcId id, int position = 0);

/// min sum c x subject to flow conservation (+1 at s, -1 at t), sum c x >= xi,
/// x binary.
LpModel build_nspip(const Graph& g, Value xi);

struct LpGate {
  int max_vertices = 12;
};

/// Linearized universal program: maximize sum_i lambda_i sum_a c_a y_ia with
/// flow, subtour elimination over every vertex subset of size >= 2, position
/// assignment, sorting, the product linearization y = s x, and the bound
/// sum_i lambda_i sum_a c_a y_ia <= f* + xi.
LpModel build_unspip(const Graph& g, const Lambda& lam, Value xi,
                     const LpGate& gate = {}, const SizeGate& solve_gate = SizeGate::from_env());

std::string emit_nspip(const Graph& g, Value xi);
std::string emit_unspip(const Graph& g, const Lambda& lam, Value xi, const LpGate& gate = {});

}  // namespace unssp
