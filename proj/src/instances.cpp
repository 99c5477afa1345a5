#include "unssp/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "unssp/errors.hpp"

namespace unssp {

Graph gen_triplet_chain(int b) {
  if (b < 1) throw ValidationError("triplet chain needs b >= 1");
  if (b > 100000) throw ValidationError("triplet chain block count too large");
  const Vertex n = 3 * b + 1;
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(4 * b));
  for (int i = 0; i < b; ++i) {
    const Vertex v = 3 * i + 1;
    arcs.push_back({v, v + 1, 1});
    arcs.push_back({v, v + 2, 1});
    arcs.push_back({v + 1, v + 3, 1});
    arcs.push_back({v + 2, v + 3, 1});
  }
  return Graph(n, std::move(arcs), 1, n);
}

Graph gen_binary_doubling(int n) {
  if (n < 3) throw ValidationError("binary doubling needs n >= 3");
  if (n > 64) throw ValidationError("binary doubling needs n <= 64 for 64-bit costs");
  std::vector<Arc> arcs;
  arcs.push_back({1, 2, 1});
  arcs.push_back({1, 2, 1});
  for (Vertex i = 2; i < n; ++i) {
    arcs.push_back({i, i + 1, 0});
    arcs.push_back({i, i + 1, Cost{1} << (i - 2)});
  }
  return Graph(n, std::move(arcs), 1, n);
}

Graph gen_random(const RandomSpec& spec) {
  if (spec.n < 2) throw ValidationError("random graph needs n >= 2");
  if (spec.m < 1) throw ValidationError("random graph needs m >= 1");
  if (spec.cost_max < 0) throw ValidationError("random graph needs cost_max >= 0");
  std::mt19937_64 rng(spec.seed);
  auto below = [&](std::uint64_t bound) { return rng() % bound; };
  auto cost = [&] { return static_cast<Cost>(below(static_cast<std::uint64_t>(spec.cost_max) + 1)); };

  std::vector<Vertex> middle(static_cast<std::size_t>(spec.n - 2));
  std::iota(middle.begin(), middle.end(), 2);
  std::shuffle(middle.begin(), middle.end(), rng);
  const auto max_inner = std::min<std::uint64_t>(middle.size(), static_cast<std::uint64_t>(spec.m - 1));
  middle.resize(below(max_inner + 1));

  std::vector<Arc> arcs;
  Vertex prev = 1;
  for (Vertex v : middle) {
    arcs.push_back({prev, v, cost()});
    prev = v;
  }
  arcs.push_back({prev, spec.n, cost()});

  while (static_cast<int>(arcs.size()) < spec.m) {
    const auto u = static_cast<Vertex>(below(static_cast<std::uint64_t>(spec.n)) + 1);
    const auto v = static_cast<Vertex>(below(static_cast<std::uint64_t>(spec.n)) + 1);
    if (u == v) continue;
    arcs.push_back({u, v, cost()});
  }
  // Spread the spine over the id range so ascending-id search order is not
  // biased towards it.
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return Graph(spec.n, std::move(arcs), 1, spec.n);
}

}  // namespace unssp
