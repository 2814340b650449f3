#include "satnum/bounds.hpp"

#include <algorithm>

namespace satnum {
namespace {

Rational R(std::int64_t v) { return Rational(v); }
Rational R(std::int64_t p, std::int64_t q) { return Rational(p, q); }

BoundReport applicable_report(std::string name, BoundKind kind, Rational slope, Rational constant,
                              std::size_t n, std::string reason = {}) {
  BoundReport r;
  r.name = std::move(name);
  r.kind = kind;
  r.slope = slope;
  r.constant = constant;
  const Rational half_n(static_cast<std::int64_t>(n), 2);
  r.value = kind == BoundKind::upper ? slope * half_n + constant : slope * half_n - constant;
  r.applicable = true;
  r.reason = std::move(reason);
  return r;
}

BoundReport inapplicable_report(std::string name, std::string reason) {
  BoundReport r;
  r.name = std::move(name);
  r.applicable = false;
  r.reason = std::move(reason);
  return r;
}

Rational clique_slack(unsigned k0) {
  const auto a = static_cast<std::int64_t>(k0) + 1;
  return R(a * a, 8);
}

std::int64_t i64(unsigned v) { return static_cast<std::int64_t>(v); }

}  // namespace

const char* to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::exact: return "exact";
  }
  return "lower";
}

std::optional<std::int64_t> BoundReport::integer_value() const {
  if (!value) return std::nullopt;
  return kind == BoundKind::upper ? value->floor() : value->ceil();
}

BoundReport cp_lower_bound(const WeightSummary& summary, std::size_t n) {
  BoundReport r;
  r.name = "cp";
  r.kind = BoundKind::lower;
  r.slope = R(summary.min_wt_cp);
  r.value = r.slope * R(static_cast<std::int64_t>(n), 2);
  r.applicable = true;
  r.asymptotic_only = true;
  r.reason = "additive constant is existential (UNKNOWN); value omits it";
  return r;
}

std::vector<BoundReport> general_lower_bound(const WeightSummary& s, std::size_t n) {
  const auto k0 = i64(s.k0), k1 = i64(s.k1), k0p = i64(s.k0p), k1p = i64(s.k1p);
  std::vector<BoundReport> out;

  if (k1p <= k0) {
    out.push_back(applicable_report("general-a", BoundKind::lower, R(k0), clique_slack(s.k0), n,
                                    "k1' <= k0"));
  } else {
    out.push_back(inapplicable_report("general-a", "k1' > k0"));
  }

  if (k1p > k0) {
    const Rational slope = R(k0) + R(k1p - k0, k1p + 1);
    const Rational c1 = R((k0 + 1) * (k1p - k0), 2 * k1p + 2) + clique_slack(s.k0);
    out.push_back(applicable_report("general-b", BoundKind::lower, slope, c1, n, "k1' > k0"));
  } else {
    out.push_back(inapplicable_report("general-b", "k1' <= k0"));
  }

  if (k1p > k0 && k1 > k0) {
    const Rational slope = R(k0) + R(k1p - k0, k1p);
    const Rational c2 = R((k0 + 2) * (k1p - k0), 2 * k1p) + clique_slack(s.k0);
    out.push_back(
        applicable_report("general-c", BoundKind::lower, slope, c2, n, "k1' > k0 and k1 > k0"));
  } else {
    out.push_back(inapplicable_report("general-c", k1p <= k0 ? "k1' <= k0" : "k1 <= k0"));
  }

  if (k0 == k1 && k1 < k1p && k1p < k0p) {
    // Branch selection: k0' - k1' <= (k0' - k0)/(k0 + 1).
    if (R(k0p - k1p) <= R(k0p - k0, k0 + 1)) {
      const Rational slope = R(k0) + R(k0p - k0, k0p + 1);
      const Rational c1 = R((k0 + 1) * (k0p - k0), 2 * k0p + 2) + clique_slack(s.k0);
      out.push_back(applicable_report("general-d", BoundKind::lower, slope, c1, n,
                                      "k0 = k1 < k1' < k0', k0' - k1' <= (k0' - k0)/(k0 + 1)"));
    } else {
      const Rational slope = R(k0) + R(k1p - k0, k1p);
      const Rational c2 = R((k0 + 2) * (k1p - k0), 2 * k1p) + clique_slack(s.k0);
      out.push_back(applicable_report("general-d", BoundKind::lower, slope, c2, n,
                                      "k0 = k1 < k1' < k0', k0' - k1' > (k0' - k0)/(k0 + 1)"));
    }
  } else {
    out.push_back(inapplicable_report("general-d", "requires k0 = k1 < k1' < k0'"));
  }
  return out;
}

std::vector<BoundReport> triangle_free_lower_bound(const WeightSummary& s, bool triangle_free,
                                                   std::size_t n) {
  const auto k0 = i64(s.k0), k1 = i64(s.k1), k1p = i64(s.k1p);
  std::vector<BoundReport> out;
  if (!triangle_free) {
    for (const char* name :
         {"triangle-free-part1", "triangle-free-part2", "triangle-free-corollary"}) {
      out.push_back(inapplicable_report(name, "pattern contains a triangle"));
    }
    return out;
  }

  const bool gap_two = k1p >= k0 + 2;
  const std::string gap_reason = k1p <= k0 ? "k1' <= k0" : "k1' < k0 + 2";

  if (gap_two) {
    const Rational slope = R(k0) + R(k1p + 1 - k0, k1p + 2);
    const Rational c = R((k0 + 1) * (k1p + 1 - k0), 2 * k1p + 4) + clique_slack(s.k0);
    out.push_back(
        applicable_report("triangle-free-part1", BoundKind::lower, slope, c, n, "k1' >= k0 + 2"));
  } else {
    out.push_back(inapplicable_report("triangle-free-part1", gap_reason));
  }

  if (gap_two && k1 > k0) {
    const Rational slope = R(k0) + R(k1p + 1 - k0, k1p + 1);
    const Rational c = R((k0 + 2) * (k1p + 1 - k0), 2 * k1p + 2) + clique_slack(s.k0);
    out.push_back(applicable_report("triangle-free-part2", BoundKind::lower, slope, c, n,
                                    "k1' >= k0 + 2 and k1 > k0"));
  } else {
    out.push_back(inapplicable_report("triangle-free-part2", gap_two ? "k1 <= k0" : gap_reason));
  }

  if (k1p == k1 && k1 == k0 + 1) {
    const Rational slope = R(k0) + R(2, k0 + 3);
    const Rational c = R(2 * k0 + 3, 2 * k0 + 6) + clique_slack(s.k0);
    out.push_back(applicable_report("triangle-free-corollary", BoundKind::lower, slope, c, n,
                                    "k1' = k1 = k0 + 1"));
  } else {
    out.push_back(inapplicable_report("triangle-free-corollary", "requires k1' = k1 = k0 + 1"));
  }
  return out;
}

std::size_t double_star_threshold(unsigned s, unsigned t) {
  const auto q = std::max<std::int64_t>(1, static_cast<std::int64_t>(s / 2) - 1);
  return static_cast<std::size_t>(q) * (2 * t + 4) + s;
}

std::size_t shorty_threshold(unsigned s) {
  const auto q = std::max<std::size_t>(2, (s - 1) / 2);
  return q * (2 * s + 4) + s + 1;
}

std::vector<BoundReport> double_star_bounds(unsigned s, unsigned t, std::size_t n) {
  if (s < 1) throw BoundError("double star requires s >= 1");
  if (s >= t) throw BoundError("s >= t: the balanced case is outside this theorem");
  const auto threshold = double_star_threshold(s, t);
  if (n < threshold) {
    throw BoundError("n = " + std::to_string(n) + " is below the threshold " +
                     std::to_string(threshold));
  }
  const auto si = i64(s), ti = i64(t);
  const Rational slope = R(si * (ti + 1), ti + 2);
  const Rational c1 = R(si * (ti - si + 2), 2 * ti + 4) + R(si * si, 8);
  const Rational c2 = R(si * (si - 1), 2 * ti + 4) + R((si + 1) / 2);

  std::vector<BoundReport> out;
  out.push_back(applicable_report("double-star-lower", BoundKind::lower, slope, c1, n));
  out.push_back(applicable_report("double-star-upper", BoundKind::upper, slope, c2, n));

  const bool tight = n % (2 * t + 4) == s % (2 * t + 4);
  auto cor = applicable_report("double-star-corollary", tight ? BoundKind::exact : BoundKind::lower,
                               slope, R(si * (ti - si + 2), 2 * ti + 4), n,
                               tight ? "asymptotic-only equality: n = s (mod 2t+4)"
                                     : "asymptotic lower bound; tight only when n = s (mod 2t+4)");
  cor.asymptotic_only = true;
  out.push_back(cor);
  return out;
}

std::vector<BoundReport> shorty_bounds(unsigned s, std::size_t n) {
  if (s < 1) throw BoundError("caterpillar bound requires s >= 1");
  const auto threshold = shorty_threshold(s);
  if (n < threshold) {
    throw BoundError("n = " + std::to_string(n) + " is below the threshold " +
                     std::to_string(threshold));
  }
  const auto si = i64(s);
  std::vector<BoundReport> out;
  out.push_back(applicable_report("shorty-lower", BoundKind::lower, R(si) + R(2, si + 3),
                                  R(2 * si + 3, 2 * si + 6) + R((si + 1) * (si + 1), 8), n));
  out.push_back(applicable_report("shorty-upper", BoundKind::upper, R(si) + R(2, si + 2),
                                  R(si * (si + 1), si + 2), n));
  return out;
}

Rational warmup_min_avg_degree(unsigned delta, unsigned k, bool strengthened) {
  if (delta == 0) throw BoundError("delta must be positive");
  if (delta >= k) throw BoundError("delta must be smaller than k");
  const auto d = i64(delta), kk = i64(k);
  return strengthened ? R(d) + R(kk - d, kk) : R(d) + R(kk - d, kk + 1);
}

std::size_t ehm_saturation_number(unsigned t, std::size_t n) {
  if (t < 2) throw BoundError("clique pattern K_{t+1} requires t >= 2");
  if (n < t + 1) throw BoundError("n must be at least t + 1");
  const std::size_t a = t - 1;
  return a * (a - 1) / 2 + a * (n - t + 1);
}

BoundReport best_lower_bound(const Graph& h, std::size_t n) {
  if (n < h.order()) throw BoundError("n is smaller than the pattern order");
  const auto summary = weight_summary(h);
  auto reports = general_lower_bound(summary, n);
  auto tf = triangle_free_lower_bound(summary, is_triangle_free(h), n);
  reports.insert(reports.end(), tf.begin(), tf.end());

  std::optional<BoundReport> best;
  for (auto& r : reports) {
    if (!r.applicable) continue;
    if (!best || *r.value > *best->value) best = r;
  }
  // general-a or general-b is applicable for every valid pattern.
  return *best;
}

}  // namespace satnum
