#pragma once

// Test-only helpers: fixture graphs and a naive oracle that shares no code
// with the library's solvers or enumerators.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "unssp/graph.hpp"
#include "unssp/instances.hpp"
#include "unssp/objective.hpp"

namespace testing_support {

using namespace unssp;

#ifndef UNSSP_TEST_DATA
#define UNSSP_TEST_DATA "tests/data"
#endif

inline std::string data_path(const std::string& name) {
  return std::string(UNSSP_TEST_DATA) + "/" + name;
}

// s=1 a=2 b=3 c=4 t=5; ids 1:s-a 2:a-b 3:a-c 4:c-b 5:b-t 6:c-t
inline Graph fig1() {
  return Graph(5, {{1, 2, 1}, {2, 3, 6}, {2, 4, 4}, {4, 3, 3}, {3, 5, 2}, {4, 5, 5}}, 1, 5);
}

inline const std::vector<ArcId> kSABT{1, 2, 5};
inline const std::vector<ArcId> kSACBT{1, 3, 4, 5};
inline const std::vector<ArcId> kSACT{1, 3, 6};

struct OraclePath {
  std::vector<ArcId> arcs;
  std::int64_t value;
};

// Plain dot product of the padded, descending cost vector with lambda.
inline std::int64_t oracle_value(const Graph& g, const std::vector<ArcId>& arcs,
                                 const std::vector<std::int64_t>& lambda) {
  std::vector<std::int64_t> c;
  for (ArcId id : arcs) c.push_back(g.arc(id).cost);
  std::sort(c.begin(), c.end(), [](auto a, auto b) { return a > b; });
  c.resize(lambda.size(), 0);
  std::int64_t v = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) v += lambda[i] * c[i];
  return v;
}

// Every simple s-t path, recursively, in ascending arc-id order.
inline std::vector<OraclePath> oracle_paths(const Graph& g, const std::vector<std::int64_t>& lambda) {
  std::vector<OraclePath> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()) + 1, false);
  std::vector<ArcId> cur;
  std::function<void(Vertex)> go = [&](Vertex u) {
    if (u == g.sink()) {
      out.push_back({cur, oracle_value(g, cur, lambda)});
      return;
    }
    seen[static_cast<std::size_t>(u)] = true;
    for (ArcId id = 1; id <= g.num_arcs(); ++id) {
      const Arc& a = g.arc(id);
      if (a.tail != u || seen[static_cast<std::size_t>(a.head)]) continue;
      cur.push_back(id);
      go(a.head);
      cur.pop_back();
    }
    seen[static_cast<std::size_t>(u)] = false;
  };
  go(g.source());
  return out;
}

inline std::optional<std::int64_t> oracle_optimum(const std::vector<OraclePath>& paths) {
  std::optional<std::int64_t> best;
  for (const auto& p : paths) {
    if (!best || p.value < *best) best = p.value;
  }
  return best;
}

// Paths with value * den <= (den + num) * f*.
inline std::set<std::vector<ArcId>> oracle_near_shortest(const Graph& g,
                                                         const std::vector<std::int64_t>& lambda,
                                                         std::int64_t num, std::int64_t den) {
  const auto paths = oracle_paths(g, lambda);
  std::set<std::vector<ArcId>> out;
  const auto best = oracle_optimum(paths);
  if (!best) return out;
  for (const auto& p : paths) {
    if (static_cast<__int128>(p.value) * den <= static_cast<__int128>(den + num) * *best) {
      out.insert(p.arcs);
    }
  }
  return out;
}

struct SuiteInstance {
  Graph graph;
  std::uint64_t seed;
};

// Seeded random instances with 3 <= n <= 10 and n-1 <= m <= 25.
inline Graph suite_graph(std::uint64_t seed) {
  std::uint64_t x = seed * 0x9E3779B97F4A7C15ULL + 12345;
  auto next = [&] {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
  };
  const int n = 3 + static_cast<int>(next() % 8);
  const int m = (n - 1) + static_cast<int>(next() % static_cast<std::uint64_t>(26 - (n - 1)));
  const Cost cmax = 1 + static_cast<Cost>(next() % 9);
  return gen_random(RandomSpec{n, m, cmax, seed});
}

inline std::vector<std::int64_t> family_lambda(const std::string& family, Vertex n) {
  // Materialized independently of Lambda::weights().
  std::vector<std::int64_t> w(static_cast<std::size_t>(n - 1), 0);
  if (family == "sum") std::fill(w.begin(), w.end(), 1);
  if (family == "bottleneck") w[0] = 1;
  if (family == "ksum:2") {
    w[0] = 1;
    if (w.size() > 1) w[1] = 1;
  }
  if (family == "kmax:2" && w.size() > 1) w[1] = 1;
  return w;
}

}  // namespace testing_support
