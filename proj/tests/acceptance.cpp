// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lp_parser.hpp"
#include "support.hpp"
#include "unssp/complete_set.hpp"
#include "unssp/enumeration.hpp"
#include "unssp/lp_export.hpp"
#include "unssp/solvers.hpp"

using namespace unssp;
using namespace testing_support;

namespace {

// Pinned limits.
constexpr double kFig1Ms = 10.0;
constexpr double kTripletSeconds = 1.0;
constexpr double kDoublingSeconds = 5.0;
constexpr double kSuiteSeconds = 60.0;
constexpr int kSuiteSize = 500;
constexpr int kSubsetInstances = 300;
constexpr int kPartitionTriples = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

using Keys = std::set<std::vector<ArcId>>;

Keys keys(const std::vector<EmittedPath>& ps) {
  Keys out;
  for (const auto& p : ps) out.insert(p.path.arcs);
  return out;
}

const std::vector<std::string> kFamilies{"sum", "bottleneck", "ksum:2", "kmax:2"};
const std::vector<Rational> kEpsilons{{0, 1}, {1, 4}, {1, 1}, {3, 1}};

std::string criterion1(Check& c) {
  const Graph g = fig1();
  const Lambda lam = Lambda::kmax(5, 2);
  const Rational eps{1, 2};
  const std::map<std::vector<ArcId>, Value> want{{kSABT, 2}, {kSACBT, 3}};

  std::vector<TraceStep> trace;
  EnumerationOptions opt;
  opt.trace = &trace;
  const auto t0 = Clock::now();
  const auto a1 = collect_paths(Algorithm::Alg1, g, lam, eps);
  const auto a2 = collect_paths(Algorithm::Alg2, g, lam, eps, nullptr, opt);
  const double ms = seconds_since(t0) * 1000.0;

  for (const auto* run : {&a1, &a2}) {
    std::map<std::vector<ArcId>, Value> got;
    for (const auto& p : *run) got[p.path.arcs] = p.value;
    c.require(got == want, "emitted set differs; ");
    c.require(!got.count(kSACT), "(s,a,c,t) emitted; ");
  }

  using C = std::map<Vertex, std::vector<ArcId>>;
  struct Row {
    std::optional<std::vector<ArcId>> path;
    std::optional<Value> value;
    C consumed;
  };
  // Table 2 with s=1 a=2 b=3 c=4 and arc ids 1:sa 2:ab 3:ac 4:cb 5:bt 6:ct.
  const std::vector<Row> table{{kSABT, 2, {{3, {5}}}},
                               {std::nullopt, std::nullopt, {{2, {2}}}},
                               {kSACBT, 3, {{2, {2}}, {3, {5}}}},
                               {std::nullopt, std::nullopt, {{2, {2}}, {4, {4}}}},
                               {kSACT, 4, {{2, {2, 3}}}},
                               {std::nullopt, std::nullopt, {{1, {1}}}}};
  c.require(trace.size() >= table.size(), "trace too short; ");
  for (std::size_t i = 0; c.ok && i < table.size(); ++i) {
    const auto& step = trace[i];
    const auto got_path = step.found ? std::optional(step.found->arcs) : std::nullopt;
    c.require(got_path == table[i].path, "trace step " + std::to_string(i) + " path; ");
    c.require(step.value == table[i].value, "trace step " + std::to_string(i) + " value; ");
    c.require(step.consumed == table[i].consumed, "trace step " + std::to_string(i) + " C; ");
  }
  c.require(ms < kFig1Ms, "took " + std::to_string(ms) + " ms; ");
  std::ostringstream d;
  d << "alg1/alg2 emit {2,3}, trace Init..5 matches, " << ms << " ms";
  return d.str();
}

std::string criterion2(Check& c) {
  double last = 0;
  for (int b = 1; b <= 5; ++b) {
    const Graph g = gen_triplet_chain(b);
    const Vertex n = g.num_vertices();
    const auto t0 = Clock::now();
    for (Algorithm algo : {Algorithm::Alg1, Algorithm::Alg2}) {
      const auto out = collect_paths(algo, g, Lambda::sum(n), Rational{0, 1});
      c.require(out.size() == (std::size_t{1} << b), "b=" + std::to_string(b) + " count; ");
      for (const auto& p : out) {
        c.require(static_cast<int>(p.path.hops()) == (2 * n - 2) / 3, "length; ");
        c.require(p.value == (2 * n - 2) / 3, "value; ");
      }
    }
    last = seconds_since(t0);
  }
  c.require(last < kTripletSeconds, "b=5 too slow; ");
  std::ostringstream d;
  d << "2^b paths for b=1..5, b=5 in " << last << " s";
  return d.str();
}

std::string criterion3(Check& c) {
  double last = 0;
  for (int n = 3; n <= 10; ++n) {
    const Graph g = gen_binary_doubling(n);
    const Rational eps{(std::int64_t{1} << (n - 2)) - 1, 1};
    const auto t0 = Clock::now();
    const auto all = collect_paths(Algorithm::Brute, g, Lambda::sum(n), eps);
    const auto mcs = minimal_complete_set(g, Lambda::sum(n), eps);
    last = seconds_since(t0);
    c.require(all.size() == (std::size_t{1} << (n - 1)), "n=" + std::to_string(n) + " brute; ");
    c.require(mcs.entries.size() == (std::size_t{1} << (n - 2)), "n=" + std::to_string(n) + " mcs; ");
    for (std::size_t i = 0; i < mcs.entries.size(); ++i) {
      c.require(mcs.entries[i].value == static_cast<Value>(i + 1), "mcs values; ");
    }
  }
  c.require(last < kDoublingSeconds, "n=10 too slow; ");
  std::ostringstream d;
  d << "2^(n-1) paths and 2^(n-2) values for n=3..10, n=10 in " << last << " s";
  return d.str();
}

struct SuiteResult {
  int mismatches = 0;
  int oracle_mismatches = 0;
  int solver_mismatches = 0;
  int identity_failures = 0;
  int work_violations = 0;
  double seconds = 0;
};

SuiteResult run_suite() {
  SuiteResult r;
  const auto t0 = Clock::now();
  for (int seed = 1; seed <= kSuiteSize; ++seed) {
    const Graph g = suite_graph(static_cast<std::uint64_t>(seed));
    const Vertex n = g.num_vertices();
    const auto m = static_cast<std::uint64_t>(g.num_arcs());
    ArcMask none(g);
    for (const auto& fam : kFamilies) {
      const Lambda lam = parse_lambda(fam, n);
      for (Rational eps : kEpsilons) {
        RunStats s1, s2;
        const Keys k1 = keys(collect_paths(Algorithm::Alg1, g, lam, eps, &s1));
        const Keys k2 = keys(collect_paths(Algorithm::Alg2, g, lam, eps, &s2));
        const Keys kb = keys(collect_paths(Algorithm::Brute, g, lam, eps));
        if (k1 != k2 || k1 != kb) ++r.mismatches;
        if (kb != oracle_near_shortest(g, family_lambda(fam, n), eps.num, eps.den)) {
          ++r.oracle_mismatches;
        }
        if (s1.uspp_solves > 2 * m * (s1.paths + 1)) ++r.work_violations;
        if (s2.uspp_solves > 2 * static_cast<std::uint64_t>(n) * (s2.paths + 1)) {
          ++r.work_violations;
        }
      }
      const auto want = solve_brute(g, none, g.source(), g.sink(), lam).value;
      if (solve(g, none, g.source(), g.sink(), lam).value != want) ++r.solver_mismatches;
    }
    if (solve_bottleneck(g, none, g.source(), g.sink()).value !=
        solve_kmax(g, none, g.source(), g.sink(), 1).value) {
      ++r.identity_failures;
    }
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::string criterion7(Check& c) {
  std::mt19937_64 rng(2024);
  int agree = 0, tested = 0, accepted = 0;
  for (int i = 1; tested < kSubsetInstances; ++i) {
    const Graph g = suite_graph(static_cast<std::uint64_t>(10'000 + i));
    const Vertex n = g.num_vertices();
    const int k = 1 + (i % 2);
    if (k > n - 1) continue;
    ++tested;
    const Value mu = static_cast<Value>(rng() % 20);
    const Value psi = mu + 1 + static_cast<Value>(rng() % 12);
    const auto values = oracle_paths(g, family_lambda(k == 1 ? "bottleneck" : "ksum:2", n));
    bool brute_accept = false;
    for (const auto& p : values) brute_accept = brute_accept || (p.value > mu && p.value <= psi);
    const auto d = next_usp_theorem5(g, k, mu, psi);
    accepted += d.accepted;
    if (d.accepted == brute_accept) ++agree;

    // next_usp against min of the value set intersected with [xi, inf).
    const Value xi = mu + 1;
    std::optional<Value> want;
    for (const auto& p : values) {
      if (p.value >= xi && (!want || p.value < *want)) want = p.value;
    }
    const auto got = next_usp(g, {Lambda::ksum(n, k), xi, std::nullopt});
    c.require(got.has_value() == want.has_value() && (!got || got->value == *want),
              "next_usp mismatch at instance " + std::to_string(i) + "; ");
  }
  c.require(agree == tested, std::to_string(tested - agree) + " decision disagreements; ");
  std::ostringstream d;
  d << agree << "/" << tested << " decisions agree (" << accepted << " accepts)";
  return d.str();
}

std::string criterion8(Check& c) {
  int semantic = 0;
  for (int seed = 1; seed <= kSuiteSize; ++seed) {
    const Graph g = suite_graph(static_cast<std::uint64_t>(seed));
    if (g.num_arcs() > 12) continue;
    const Value xi = seed % 9;
    const auto model = lp_test::parse(emit_nspip(g, xi));
    std::vector<ArcId> ids;
    for (const auto& v : model.binaries) ids.push_back(std::stoi(v.substr(v.rfind('_') + 1)));
    std::set<std::set<ArcId>> feasible;
    for (std::uint32_t mask = 0; mask < (1u << ids.size()); ++mask) {
      std::map<std::string, std::int64_t> x;
      std::set<ArcId> chosen;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        x[model.binaries[i]] = mask >> i & 1u;
        if (mask >> i & 1u) chosen.insert(ids[i]);
      }
      bool ok = true;
      for (const auto& row : model.rows) ok = ok && lp_test::satisfied(row, x);
      if (!ok) continue;
      // Path-shaped: following the unique chosen out-arc from s reaches t
      // and uses every chosen arc.
      Vertex u = g.source();
      std::set<ArcId> used;
      std::set<Vertex> seen{u};
      bool shaped = true;
      while (shaped && u != g.sink()) {
        std::vector<ArcId> outs;
        for (ArcId id : chosen) {
          if (g.arc(id).tail == u) outs.push_back(id);
        }
        shaped = outs.size() == 1 && seen.insert(g.arc(outs[0]).head).second;
        if (shaped) {
          used.insert(outs[0]);
          u = g.arc(outs[0]).head;
        }
      }
      if (shaped && used == chosen) feasible.insert(chosen);
    }
    std::set<std::set<ArcId>> want;
    for (const auto& p : oracle_paths(g, family_lambda("sum", g.num_vertices()))) {
      if (p.value >= xi) want.insert(std::set<ArcId>(p.arcs.begin(), p.arcs.end()));
    }
    c.require(feasible == want, "NSPIP semantics differ at seed " + std::to_string(seed) + "; ");
    ++semantic;
  }

  const auto u = lp_test::parse(emit_unspip(fig1(), Lambda::kmax(5, 2), 1));
  std::map<char, int> vars;
  for (const auto& v : u.binaries) ++vars[v[0]];
  std::map<std::string, int> rows;
  for (const auto& r : u.rows) {
    for (const char* p : {"flow_", "subtour_", "assign_arc_", "assign_pos_", "sort_", "lin_le_s_",
                          "lin_le_x_", "lin_ge_", "bound_"}) {
      if (r.name.rfind(p, 0) == 0) ++rows[p];
    }
  }
  c.require(vars['x'] == 6 && vars['s'] == 24 && vars['y'] == 24, "UNSPIP variable counts; ");
  c.require(rows["flow_"] == 5 && rows["subtour_"] == 26 && rows["assign_arc_"] == 6 &&
                rows["assign_pos_"] == 4 && rows["sort_"] == 3 &&
                rows["lin_le_s_"] + rows["lin_le_x_"] + rows["lin_ge_"] + rows["bound_"] == 73,
            "UNSPIP row counts; ");
  c.require(u.rows.size() == 117, "UNSPIP total rows; ");

  // Grammar: a spread of models must parse.
  for (int seed = 1; seed <= 50; ++seed) {
    const Graph g = suite_graph(static_cast<std::uint64_t>(seed));
    try {
      lp_test::parse(emit_nspip(g, seed));
      if (g.num_vertices() <= 8) lp_test::parse(emit_unspip(g, Lambda::ksum(g.num_vertices(), 2), 1));
    } catch (const std::exception& e) {
      c.require(false, std::string("parse failure: ") + e.what() + "; ");
    }
  }
  std::ostringstream d;
  d << semantic << " NSPIP instances checked exhaustively, Fig. 1 UNSPIP tallies 6/24/24 vars, "
    << u.rows.size() << " rows";
  return d.str();
}

std::string criterion9(Check& c) {
  int two = 0;
  for (int n = 4; n <= 30; ++n) {
    for (Value u = 1; u <= n - 2; ++u) {
      const auto part = interval_partition(u, Rational{n - 1 - u, u}, Rational{2 * n - 3 - 2 * u, 2 * u});
      c.require(part.intervals.size() == 2, "FindPath parameterization n=" + std::to_string(n) + "; ");
      two += part.intervals.size() == 2;
    }
  }
  std::mt19937_64 rng(77);
  for (int i = 0; i < kPartitionTriples; ++i) {
    const Value u = 1 + static_cast<Value>(rng() % 200);
    const Rational eps{1 + static_cast<std::int64_t>(rng() % 40), 1 + static_cast<std::int64_t>(rng() % 8)};
    const Rational delta{1 + static_cast<std::int64_t>(rng() % 10), 1 + static_cast<std::int64_t>(rng() % 40)};
    const auto part = interval_partition(u, eps, delta);
    const auto& iv = part.intervals;
    bool tiles = !iv.empty() && iv.front().lo == BigRational(u) && iv.back().hi == part.bound &&
                 iv.back().closed;
    for (std::size_t j = 0; tiles && j < iv.size(); ++j) {
      tiles = iv[j].lo < iv[j].hi || (iv.size() == 1 && iv[j].lo == iv[j].hi);
      if (j + 1 < iv.size()) tiles = tiles && !iv[j].closed && iv[j].hi == iv[j + 1].lo;
    }
    // Every boundary point and midpoint lies in exactly one interval.
    for (std::size_t j = 0; tiles && j < iv.size(); ++j) {
      for (const BigRational& x : std::vector<BigRational>{iv[j].lo, (iv[j].lo + iv[j].hi) / 2, iv[j].hi}) {
        int hits = 0;
        for (const auto& other : iv) hits += other.contains(x);
        tiles = tiles && hits == 1;
      }
    }
    c.require(tiles, "triple " + std::to_string(i) + " does not tile; ");
  }
  std::ostringstream d;
  d << two << " parameterizations give 2 intervals; " << kPartitionTriples << " random triples tile [U,B]";
  return d.str();
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::function<std::string(Check&)>& body) {
    Check c;
    std::string detail;
    try {
      detail = body(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << "exception: " << e.what();
    }
    std::cout << "criterion " << id << ": " << (c.ok ? "PASS" : "FAIL") << "  " << detail;
    if (!c.ok) std::cout << "  [" << c.why.str() << "]";
    std::cout << std::endl;
    failures += !c.ok;
  };

  report(1, criterion1);
  report(2, criterion2);
  report(3, criterion3);

  SuiteResult suite;
  try {
    suite = run_suite();
  } catch (const std::exception& e) {
    suite.mismatches = -1;
    std::cout << "suite aborted: " << e.what() << std::endl;
  }
  report(4, [&](Check& c) {
    c.require(suite.mismatches == 0, std::to_string(suite.mismatches) + " alg mismatches; ");
    c.require(suite.oracle_mismatches == 0,
              std::to_string(suite.oracle_mismatches) + " brute vs oracle mismatches; ");
    c.require(suite.seconds < kSuiteSeconds, "suite too slow; ");
    std::ostringstream d;
    d << kSuiteSize << " instances x 4 lambdas x 4 eps, 0 mismatches required, " << suite.seconds
      << " s";
    return d.str();
  });
  report(5, [&](Check& c) {
    c.require(suite.solver_mismatches == 0,
              std::to_string(suite.solver_mismatches) + " solver mismatches; ");
    c.require(suite.identity_failures == 0, "bottleneck != kmax(1); ");
    return std::string("family optima equal exhaustive optima; bottleneck = kmax(1)");
  });
  report(6, [&](Check& c) {
    c.require(suite.work_violations == 0, std::to_string(suite.work_violations) + " violations; ");
    return std::string("alg1 solves <= 2m(K+1), alg2 solves <= 2n(K+1) on every run");
  });
  report(7, criterion7);
  report(8, criterion8);
  report(9, criterion9);

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
