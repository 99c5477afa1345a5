#pragma once

#include <cstdint>

#include "unssp/graph.hpp"

namespace unssp {

/// Chain of b diamonds: block i starts at v = 3i+1 with arcs (v,v+1),
/// (v,v+2), (v+1,v+3), (v+2,v+3), all of cost 1. n = 3b+1, 2^b s-t paths,
/// each with 2b arcs.
Graph gen_triplet_chain(int b);

/// Chain v1..vn with two parallel arcs per link: both of cost 1 on the first
/// link, costs 0 and 2^(i-2) on link (v_i, v_i+1) for i >= 2. Every value in
/// 1..2^(n-2) is the sum of exactly two s-t paths.
Graph gen_binary_doubling(int n);

struct RandomSpec {
  int n = 8;
  int m = 16;
  Cost cost_max = 9;
  std::uint64_t seed = 1;
};

/// Random digraph on vertices 1..n with s = 1, t = n. A random spine through
/// distinct intermediate vertices guarantees an s-t path; the remaining arcs
/// join uniform random distinct endpoints (parallel arcs allowed). Costs are
/// uniform in [0, cost_max].
Graph gen_random(const RandomSpec& spec);

}  // namespace unssp
