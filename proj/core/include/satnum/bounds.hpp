#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satnum/graph.hpp"
#include "satnum/rational.hpp"
#include "satnum/weights.hpp"

namespace satnum {

enum class BoundKind { lower, upper, exact };

const char* to_string(BoundKind kind) noexcept;

/// A closed-form bound  value(n) = slope * n/2 - constant  (lower, exact)
/// or  slope * n/2 + constant  (upper). `slope` is the average-degree rate.
///
/// The constant is absent only for the Cameron-Puleo bound, whose constant
/// is existential; that report carries value = slope * n/2 and is flagged
/// asymptotic_only. Inapplicable reports carry no value.
struct BoundReport {
  std::string name;
  BoundKind kind{BoundKind::lower};
  Rational slope;
  std::optional<Rational> constant;
  std::optional<Rational> value;
  bool applicable{false};
  bool asymptotic_only{false};
  std::string reason;

  /// Usable integer bound: ceil(value) for lower/exact, floor(value) for upper.
  std::optional<std::int64_t> integer_value() const;
};

/// Thrown for parameters outside a theorem's hypotheses (s >= t, n below
/// threshold, ...). Inapplicability of a pattern-driven bound is data, not
/// an error.
class BoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BoundReport cp_lower_bound(const WeightSummary& summary, std::size_t n);

/// Cases "general-a" .. "general-d"; every case is reported, inapplicable
/// ones with a reason.
std::vector<BoundReport> general_lower_bound(const WeightSummary& summary, std::size_t n);

/// "triangle-free-part1", "triangle-free-part2", "triangle-free-corollary".
std::vector<BoundReport> triangle_free_lower_bound(const WeightSummary& summary,
                                                   bool triangle_free, std::size_t n);

/// Lower, upper and corollary reports for S_{s,t}, 1 <= s < t.
std::vector<BoundReport> double_star_bounds(unsigned s, unsigned t, std::size_t n);

/// Lower and upper reports for the caterpillar P_5^{s-1}, s >= 1.
std::vector<BoundReport> shorty_bounds(unsigned s, std::size_t n);

/// Smallest admissible order for the double-star and caterpillar theorems.
std::size_t double_star_threshold(unsigned s, unsigned t);
std::size_t shorty_threshold(unsigned s);

/// delta + (k - delta)/(k + 1), or delta + (k - delta)/k when strengthened.
Rational warmup_min_avg_degree(unsigned delta, unsigned k, bool strengthened);

/// C(t-1, 2) + (t-1)(n-t+1), the size of the minimum K_{t+1}-saturated graph.
std::size_t ehm_saturation_number(unsigned t, std::size_t n);

/// Largest applicable explicit-constant lower bound among the general and
/// triangle-free families. Ties keep the earlier family member.
BoundReport best_lower_bound(const Graph& h, std::size_t n);

}  // namespace satnum
