#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unssp/graph.hpp"

namespace unssp {

/// Universal weight vector of length n-1, kept as a family tag so the common
/// objectives never materialize the vector.
class Lambda {
 public:
  enum class Family { Sum, Bottleneck, KSum, KMax, Explicit };

  static Lambda sum(Vertex n);
  static Lambda bottleneck(Vertex n);
  static Lambda ksum(Vertex n, int k);
  static Lambda kmax(Vertex n, int k);
  static Lambda explicit_weights(std::vector<std::int64_t> weights);

  Family family() const noexcept { return family_; }
  int k() const noexcept { return k_; }
  /// Length n-1 of the implied vector.
  std::size_t size() const noexcept { return size_; }

  /// Entry i of the implied vector, 1-based as in the sorted cost vector.
  std::int64_t weight(std::size_t i) const;
  std::vector<std::int64_t> weights() const;

  bool nonnegative() const;

  /// Canonical spec string (`sum`, `kmax:2`, `vec:1,0,...`).
  std::string to_string() const;

  bool operator==(const Lambda&) const = default;

 private:
  Lambda(Family f, std::size_t size, int k, std::vector<std::int64_t> w)
      : family_(f), size_(size), k_(k), explicit_(std::move(w)) {}

  Family family_;
  std::size_t size_;
  int k_;
  std::vector<std::int64_t> explicit_;
};

/// Parses `sum`, `bottleneck`, `ksum:<k>`, `kmax:<k>` or `vec:<w1,...,w_{n-1}>`.
Lambda parse_lambda(std::string_view spec, Vertex n);

/// Non-negative rational num/den, den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool operator==(const Rational&) const = default;
  std::string to_string() const;
};

/// Accepts `a/b` or a plain integer. Negative values and zero denominators
/// are rejected.
Rational parse_rational(std::string_view text);

/// Near-shortest bound B = (1 + eps) * f_star, held exactly.
struct Bound {
  Value f_star = 0;
  Rational eps;

  /// value <= B, via exact cross multiplication.
  bool admits(Value value) const;
  /// value < B.
  bool strictly_admits(Value value) const;
  /// floor(B).
  Value floor() const;
  /// B as a double, for display only.
  double approx() const;
};

bool within_bound(Value value, const Bound& b);

/// Costs sorted non-increasingly and zero padded to n-1 entries.
std::vector<Cost> sorted_cost_vector(const Graph& g, const Path& p);

/// f_lambda of an arbitrary cost multiset (order irrelevant). Family forms are
/// evaluated without building the padded vector. Throws OverflowError.
Value universal_value(std::span<const Cost> costs, const Lambda& lam);
Value universal_value(const Graph& g, const Path& p, const Lambda& lam);

// Checked 64-bit arithmetic; throws OverflowError.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace unssp
