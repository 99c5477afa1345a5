#include <gtest/gtest.h>

#include "support.hpp"
#include "unssp/enumeration.hpp"
#include "unssp/errors.hpp"

using namespace unssp;
using namespace testing_support;

namespace {

std::set<std::vector<ArcId>> keys(const std::vector<EmittedPath>& ps) {
  std::set<std::vector<ArcId>> out;
  for (const auto& p : ps) out.insert(p.path.arcs);
  return out;
}

const Rational kHalf{1, 2};

}  // namespace

TEST(Alg1, Fig1KMax) {
  const Graph g = fig1();
  RunStats st;
  const auto out = collect_paths(Algorithm::Alg1, g, Lambda::kmax(5, 2), kHalf, &st);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].path.arcs, kSABT);
  EXPECT_EQ(out[0].value, 2);
  EXPECT_EQ(out[1].path.arcs, kSACBT);
  EXPECT_EQ(out[1].value, 3);
  EXPECT_EQ(st.paths, 2u);
  EXPECT_EQ(st.f_star, 2);
}

TEST(Alg1, UniqueShortestWithZeroEps) {
  const Graph g = fig1();
  const auto out = collect_paths(Algorithm::Alg1, g, Lambda::sum(5), Rational{0, 1});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].path.arcs, kSABT);
}

TEST(Alg1, TripletChain) {
  const Graph g = gen_triplet_chain(3);
  const auto out = collect_paths(Algorithm::Alg1, g, Lambda::sum(10), Rational{0, 1});
  EXPECT_EQ(out.size(), 8u);
  for (const auto& p : out) EXPECT_EQ(p.value, 6);
}

TEST(Alg1, SumFastPathMatchesLiteral) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Graph g = suite_graph(seed);
    EnumerationOptions fast;
    fast.sum_fast_path = true;
    for (Rational eps : {Rational{0, 1}, Rational{1, 2}, Rational{2, 1}}) {
      const Lambda lam = Lambda::sum(g.num_vertices());
      const auto a = collect_paths(Algorithm::Alg1, g, lam, eps);
      const auto b = collect_paths(Algorithm::Alg1, g, lam, eps, nullptr, fast);
      ASSERT_EQ(a.size(), b.size()) << seed;
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].path, b[i].path);
    }
  }
}

TEST(Alg2, Fig1KMaxAndTrace) {
  const Graph g = fig1();
  std::vector<TraceStep> trace;
  EnumerationOptions opt;
  opt.trace = &trace;
  RunStats st;
  const auto out = collect_paths(Algorithm::Alg2, g, Lambda::kmax(5, 2), kHalf, &st, opt);
  EXPECT_EQ(keys(out), (std::set<std::vector<ArcId>>{kSABT, kSACBT}));
  ASSERT_EQ(trace.size(), 7u);

  using C = std::map<Vertex, std::vector<ArcId>>;
  const Vertex a = 2, b = 3, c = 4, s = 1;
  // Init: (s,a,b,t)/2
  EXPECT_EQ(trace[0].found->arcs, kSABT);
  EXPECT_EQ(trace[0].value, 2);
  EXPECT_EQ(trace[0].vertex, b);
  EXPECT_EQ(trace[0].consumed, (C{{b, {5}}}));
  // 1: none
  EXPECT_FALSE(trace[1].found);
  EXPECT_EQ(trace[1].vertex, a);
  EXPECT_EQ(trace[1].consumed, (C{{a, {2}}}));
  // 2: (s,a,c,b,t)/3
  EXPECT_EQ(trace[2].found->arcs, kSACBT);
  EXPECT_EQ(trace[2].value, 3);
  EXPECT_TRUE(trace[2].emitted);
  EXPECT_EQ(trace[2].consumed, (C{{a, {2}}, {b, {5}}}));
  // 3: none
  EXPECT_FALSE(trace[3].found);
  EXPECT_EQ(trace[3].vertex, c);
  EXPECT_EQ(trace[3].consumed, (C{{a, {2}}, {c, {4}}}));
  // 4: (s,a,c,t)/4 found but above B
  EXPECT_EQ(trace[4].found->arcs, kSACT);
  EXPECT_EQ(trace[4].value, 4);
  EXPECT_FALSE(trace[4].emitted);
  EXPECT_EQ(trace[4].vertex, a);
  EXPECT_EQ(trace[4].consumed, (C{{a, {2, 3}}}));
  // 5: none
  EXPECT_FALSE(trace[5].found);
  EXPECT_EQ(trace[5].vertex, s);
  EXPECT_EQ(trace[5].consumed, (C{{s, {1}}}));
  // termination
  EXPECT_FALSE(trace[6].found);
  EXPECT_FALSE(trace[6].vertex);
  EXPECT_EQ(st.uspp_solves, 7u);
}

TEST(Alg2, NoPath) {
  const Graph g(3, {{1, 2, 1}}, 1, 3);
  RunStats st;
  const auto out = collect_paths(Algorithm::Alg2, g, Lambda::sum(3), kHalf, &st);
  EXPECT_TRUE(out.empty());
  EXPECT_EQ(st.failed_solves, 1u);
  EXPECT_EQ(st.uspp_solves, 1u);
  EXPECT_FALSE(st.f_star);
}

TEST(Brute, Fig1) {
  const Graph g = fig1();
  EXPECT_EQ(keys(collect_paths(Algorithm::Brute, g, Lambda::kmax(5, 2), kHalf)),
            (std::set<std::vector<ArcId>>{kSABT, kSACBT}));
  EXPECT_EQ(collect_paths(Algorithm::Brute, g, Lambda::sum(5), Rational{1000, 1}).size(), 3u);
}

TEST(Brute, DoublingFamily) {
  const Graph g = gen_binary_doubling(6);
  EXPECT_EQ(collect_paths(Algorithm::Brute, g, Lambda::sum(6), Rational{15, 1}).size(), 32u);
}

TEST(Brute, NegativeLambdaStrictBoundEmitsNothing) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Graph g = suite_graph(seed);
    std::vector<std::int64_t> w(static_cast<std::size_t>(g.num_vertices() - 1), -1);
    EnumerationOptions opt;
    opt.bound_mode = BoundMode::Strict;
    RunStats st;
    const auto out = collect_paths(Algorithm::Brute, g, Lambda::explicit_weights(w), Rational{1, 4},
                                   &st, opt);
    if (st.f_star && *st.f_star < 0) EXPECT_TRUE(out.empty()) << seed;
  }
}

TEST(Enumeration, RejectsNegativeLambda) {
  const Graph g = fig1();
  const Lambda neg = Lambda::explicit_weights({1, -1, 0, 0});
  EXPECT_THROW(collect_paths(Algorithm::Alg1, g, neg, kHalf), ValidationError);
  EXPECT_THROW(collect_paths(Algorithm::Alg2, g, neg, kHalf), ValidationError);
  EXPECT_THROW(collect_paths(Algorithm::Alg1, g, Lambda::sum(4), kHalf), ValidationError);
}

TEST(Enumeration, SinkCutoffTruncates) {
  const Graph g = gen_triplet_chain(4);
  for (Algorithm algo : {Algorithm::Alg1, Algorithm::Alg2, Algorithm::Brute}) {
    std::vector<Path> got;
    PathSink sink([&](const Path& p, Value) { got.push_back(p); }, 5);
    const RunStats st = enumerate(algo, g, Lambda::sum(13), Rational{0, 1}, sink);
    EXPECT_EQ(got.size(), 5u);
    EXPECT_EQ(st.paths, 5u);
    EXPECT_TRUE(st.truncated);
  }
  std::vector<Path> all;
  PathSink exact([&](const Path& p, Value) { all.push_back(p); }, 16);
  EXPECT_FALSE(enumerate(Algorithm::Alg2, g, Lambda::sum(13), Rational{0, 1}, exact).truncated);
  EXPECT_EQ(all.size(), 16u);
}

TEST(Enumeration, ParseAlgorithm) {
  EXPECT_EQ(parse_algorithm("alg1"), Algorithm::Alg1);
  EXPECT_EQ(parse_algorithm("brute"), Algorithm::Brute);
  EXPECT_THROW(parse_algorithm("yen"), ValidationError);
}

TEST(Enumeration, ParallelArcsAreDistinctPaths) {
  const Graph g(3, {{1, 2, 1}, {1, 2, 1}, {2, 3, 0}}, 1, 3);
  for (Algorithm algo : {Algorithm::Alg1, Algorithm::Alg2, Algorithm::Brute}) {
    const auto out = collect_paths(algo, g, Lambda::sum(3), Rational{0, 1});
    EXPECT_EQ(keys(out), (std::set<std::vector<ArcId>>{{1, 3}, {2, 3}}));
    std::set<std::vector<std::int64_t>> vc;
    for (const auto& p : out) vc.insert(vertex_cost_key(g, p.path));
    EXPECT_EQ(vc.size(), 1u);
  }
}

TEST(Enumeration, ZeroCostCycles) {
  // 1->2->3->2 zero cycle plus exits; all three algorithms must still agree.
  const Graph g(4, {{1, 2, 0}, {2, 3, 0}, {3, 2, 0}, {3, 4, 1}, {2, 4, 1}}, 1, 4);
  for (Rational eps : {Rational{0, 1}, Rational{1, 1}}) {
    const auto a = keys(collect_paths(Algorithm::Alg1, g, Lambda::sum(4), eps));
    EXPECT_EQ(a, keys(collect_paths(Algorithm::Alg2, g, Lambda::sum(4), eps)));
    EXPECT_EQ(a, keys(collect_paths(Algorithm::Brute, g, Lambda::sum(4), eps)));
    EXPECT_EQ(a, oracle_near_shortest(g, {1, 1, 1}, eps.num, eps.den));
  }
}
