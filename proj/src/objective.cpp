#include "unssp/objective.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>

#include "unssp/errors.hpp"

namespace unssp {

namespace {

__extension__ using i128 = __int128;

std::size_t length_for(Vertex n) {
  if (n < 2) throw ValidationError("lambda needs n >= 2");
  return static_cast<std::size_t>(n - 1);
}

void check_k(Vertex n, int k) {
  if (k < 1 || k > n - 1) {
    throw ValidationError("k must lie in 1.." + std::to_string(n - 1) + ", got " +
                          std::to_string(k));
  }
}

std::int64_t parse_i64(std::string_view tok, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ValidationError(std::string("malformed ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Lambda Lambda::sum(Vertex n) { return Lambda(Family::Sum, length_for(n), 0, {}); }

Lambda Lambda::bottleneck(Vertex n) {
  return Lambda(Family::Bottleneck, length_for(n), 1, {});
}

Lambda Lambda::ksum(Vertex n, int k) {
  const auto len = length_for(n);
  check_k(n, k);
  return Lambda(Family::KSum, len, k, {});
}

Lambda Lambda::kmax(Vertex n, int k) {
  const auto len = length_for(n);
  check_k(n, k);
  return Lambda(Family::KMax, len, k, {});
}

Lambda Lambda::explicit_weights(std::vector<std::int64_t> weights) {
  if (weights.empty()) throw ValidationError("explicit lambda must have at least one entry");
  const auto len = weights.size();
  return Lambda(Family::Explicit, len, 0, std::move(weights));
}

std::int64_t Lambda::weight(std::size_t i) const {
  if (i < 1 || i > size_) throw ContractError("lambda index out of range");
  switch (family_) {
    case Family::Sum: return 1;
    case Family::Bottleneck: return i == 1 ? 1 : 0;
    case Family::KSum: return i <= static_cast<std::size_t>(k_) ? 1 : 0;
    case Family::KMax: return i == static_cast<std::size_t>(k_) ? 1 : 0;
    case Family::Explicit: return explicit_[i - 1];
  }
  return 0;
}

std::vector<std::int64_t> Lambda::weights() const {
  std::vector<std::int64_t> w(size_);
  for (std::size_t i = 1; i <= size_; ++i) w[i - 1] = weight(i);
  return w;
}

bool Lambda::nonnegative() const {
  if (family_ != Family::Explicit) return true;
  return std::all_of(explicit_.begin(), explicit_.end(), [](auto w) { return w >= 0; });
}

std::string Lambda::to_string() const {
  switch (family_) {
    case Family::Sum: return "sum";
    case Family::Bottleneck: return "bottleneck";
    case Family::KSum: return "ksum:" + std::to_string(k_);
    case Family::KMax: return "kmax:" + std::to_string(k_);
    case Family::Explicit: {
      std::string s = "vec:";
      for (std::size_t i = 0; i < explicit_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(explicit_[i]);
      }
      return s;
    }
  }
  return {};
}

Lambda parse_lambda(std::string_view spec, Vertex n) {
  const auto colon = spec.find(':');
  const std::string_view family = spec.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;

  if (family == "sum" && !has_arg) return Lambda::sum(n);
  if (family == "bottleneck" && !has_arg) return Lambda::bottleneck(n);
  if ((family == "ksum" || family == "kmax") && has_arg) {
    const auto k = parse_i64(arg, "k");
    if (k < 1 || k > n - 1) {
      throw ValidationError("k must lie in 1.." + std::to_string(n - 1) + ", got " +
                            std::to_string(k));
    }
    return family == "ksum" ? Lambda::ksum(n, static_cast<int>(k))
                            : Lambda::kmax(n, static_cast<int>(k));
  }
  if (family == "vec" && has_arg) {
    std::vector<std::int64_t> w;
    std::size_t pos = 0;
    while (true) {
      const auto comma = arg.find(',', pos);
      w.push_back(parse_i64(arg.substr(pos, comma - pos), "weight"));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (w.size() != length_for(n)) {
      throw ValidationError("vec lambda needs exactly " + std::to_string(n - 1) +
                            " entries, got " + std::to_string(w.size()));
    }
    return Lambda::explicit_weights(std::move(w));
  }
  throw ValidationError("unknown lambda spec '" + std::string(spec) +
                        "' (expected sum, bottleneck, ksum:<k>, kmax:<k>, vec:<w,...>)");
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  Rational r;
  r.num = parse_i64(text.substr(0, slash), "rational numerator");
  r.den = slash == std::string_view::npos ? 1 : parse_i64(text.substr(slash + 1), "rational denominator");
  if (r.den <= 0) throw ValidationError("rational denominator must be positive");
  if (r.num < 0) throw ValidationError("rational must be non-negative");
  const auto g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

bool Bound::admits(Value value) const {
  return static_cast<i128>(value) * eps.den <=
         (static_cast<i128>(eps.den) + eps.num) * static_cast<i128>(f_star);
}

bool Bound::strictly_admits(Value value) const {
  return static_cast<i128>(value) * eps.den <
         (static_cast<i128>(eps.den) + eps.num) * static_cast<i128>(f_star);
}

Value Bound::floor() const {
  const i128 top = (static_cast<i128>(eps.den) + eps.num) * static_cast<i128>(f_star);
  i128 q = top / eps.den;
  if (top % eps.den != 0 && top < 0) --q;
  if (q > INT64_MAX || q < INT64_MIN) throw OverflowError("bound does not fit in 64 bits");
  return static_cast<Value>(q);
}

double Bound::approx() const {
  return (1.0 + static_cast<double>(eps.num) / static_cast<double>(eps.den)) *
         static_cast<double>(f_star);
}

bool within_bound(Value value, const Bound& b) { return b.admits(value); }

std::vector<Cost> sorted_cost_vector(const Graph& g, const Path& p) {
  std::vector<Cost> v = path_costs(g, p);
  std::sort(v.begin(), v.end(), std::greater<>());
  v.resize(static_cast<std::size_t>(g.num_vertices() - 1), 0);
  return v;
}

Value universal_value(std::span<const Cost> costs, const Lambda& lam) {
  switch (lam.family()) {
    case Lambda::Family::Sum: {
      Value total = 0;
      for (Cost c : costs) total = checked_add(total, c);
      return total;
    }
    case Lambda::Family::Bottleneck: {
      Value best = 0;
      for (Cost c : costs) best = std::max(best, c);
      return best;
    }
    case Lambda::Family::KSum:
    case Lambda::Family::KMax: {
      const auto k = static_cast<std::size_t>(lam.k());
      if (lam.family() == Lambda::Family::KMax && costs.size() < k) return 0;
      std::vector<Cost> v(costs.begin(), costs.end());
      const auto take = std::min(k, v.size());
      std::partial_sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(take), v.end(),
                        std::greater<>());
      if (lam.family() == Lambda::Family::KMax) return v[k - 1];
      Value total = 0;
      for (std::size_t i = 0; i < take; ++i) total = checked_add(total, v[i]);
      return total;
    }
    case Lambda::Family::Explicit: {
      std::vector<Cost> v(costs.begin(), costs.end());
      std::sort(v.begin(), v.end(), std::greater<>());
      const auto len = std::min(v.size(), lam.size());
      Value total = 0;
      for (std::size_t i = 0; i < len; ++i) {
        total = checked_add(total, checked_mul(lam.weight(i + 1), v[i]));
      }
      return total;
    }
  }
  return 0;
}

Value universal_value(const Graph& g, const Path& p, const Lambda& lam) {
  const auto costs = path_costs(g, p);
  return universal_value(costs, lam);
}

}  // namespace unssp
