#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unssp/enumeration.hpp"
#include "unssp/graph.hpp"
#include "unssp/objective.hpp"
#include "unssp/solvers.hpp"

namespace unssp {

using BigRational = boost::multiprecision::cpp_rational;

struct NextUspQuery {
  Lambda lam;
  Value xi = 0;               // lower target: value >= xi
  std::optional<Value> psi;   // optional upper cap: value <= psi
};

/// Minimum-value simple s-t path with value >= xi (and <= psi when given);
/// ties go to the lexicographically smallest arc-id sequence. Exhaustive.
std::optional<EmittedPath> next_usp(const Graph& g, const NextUspQuery& q,
                                    const SizeGate& gate = SizeGate::from_env());

struct SubsetGate {
  int max_k = 3;
  int max_arcs = 25;
};

struct SubsetDecision {
  bool accepted = false;
  std::optional<EmittedPath> witness;
  std::uint64_t subsets_examined = 0;
};

/// Decides whether some simple s-t path has k-sum value in (mu, psi] by
/// walking arc subsets R in ascending cost sum. A subset of size k is matched
/// by paths whose k largest arcs are R; a smaller subset by paths consisting
/// of exactly R. On acceptance the witness has the smallest such value.
SubsetDecision next_usp_theorem5(const Graph& g, int k, Value mu, Value psi,
                                 const SubsetGate& gate = {});

struct MinimalCompleteSet {
  std::vector<EmittedPath> entries;  // strictly ascending values
};

/// One representative per distinct value in [f*, B], found by the
/// xi <- value + 1 loop over a memo of every achievable value.
MinimalCompleteSet minimal_complete_set(const Graph& g, const Lambda& lam, Rational eps,
                                        const SizeGate& gate = SizeGate::from_env());

struct Interval {
  BigRational lo;
  BigRational hi;
  bool closed = false;  // true only for the last interval, which ends at B

  bool contains(const BigRational& x) const { return lo <= x && (closed ? x <= hi : x < hi); }
};

struct IntervalPartition {
  Value u = 0;
  BigRational eps;
  BigRational delta;
  BigRational bound;  // B = (1 + eps) * U
  std::vector<Interval> intervals;

  /// Index of the interval holding x, or nullopt outside [U, B].
  std::optional<std::size_t> index_of(const BigRational& x) const;
};

/// Geometric partition of [U, B] at the points (1+delta)^i * U. With J the
/// least integer such that (1+delta)^J >= 1+eps (at least 1) there are J
/// intervals, the last one closed at B.
IntervalPartition interval_partition(Value u, Rational eps, Rational delta,
                                     std::size_t max_intervals = 1'000'000);

struct Representatives {
  IntervalPartition partition;
  std::vector<std::optional<EmittedPath>> witnesses;  // one slot per interval
};

/// Minimum-value path (lexicographic tie-break) in every interval of the
/// partition of [f*, (1+eps) f*]. Throws when s cannot reach t or f* = 0.
Representatives representatives(const Graph& g, const Lambda& lam, Rational eps,
                                Rational delta, const SizeGate& gate = SizeGate::from_env());

BigRational to_big(Rational r);

}  // namespace unssp
