#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hyperlines/exact.hpp"
#include "hyperlines/lines.hpp"

// Mechanical checkers for structural properties of alpha, beta and spans.
// Each checker returns the first violation it finds rather than a bare bool,
// since a violation on a valid input means a bug somewhere in the pipeline.
namespace hyperlines {

inline void require_no_universal_line(const LineStructure& ls) {
  if (ls.has_universal_line()) throw Error(ErrorKind::precondition, "hypergraph has a universal line");
  if (ls.vertex_count() < 2) throw Error(ErrorKind::precondition, "need n >= 2");
}

struct AntichainReport {
  bool holds = true;
  /// f(first) is a subset of f(second) (covers both non-injectivity and comparability).
  std::optional<std::pair<VertexId, VertexId>> violation;
};

/// For any f with beta(x) <= f(x) <= alpha(x): f is one-to-one and its image
/// is an antichain. Both follow from f(x) not being a subset of f(y) for x != y.
inline AntichainReport check_sandwich_antichain(const LineStructure& ls, std::span<const LineIndexSet> f) {
  require_no_universal_line(ls);
  const std::size_t n = ls.vertex_count();
  if (f.size() != n)
    throw Error(ErrorKind::invalid_f, "map has " + std::to_string(f.size()) + " entries for n=" + std::to_string(n));
  for (VertexId x = 0; x < n; ++x)
    if (!ls.beta(x).is_subset_of(f[x]) || !f[x].is_subset_of(ls.alpha(x)))
      throw Error(ErrorKind::invalid_f, "beta(x) <= f(x) <= alpha(x) fails at x=" + std::to_string(x));

  AntichainReport report;
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = 0; y < n; ++y) {
      if (x != y && f[x].is_subset_of(f[y])) {
        report.holds = false;
        report.violation = {x, y};
        return report;
      }
    }
  }
  return report;
}

inline std::vector<LineIndexSet> alpha_map(const LineStructure& ls) {
  std::vector<LineIndexSet> out;
  for (VertexId x = 0; x < ls.vertex_count(); ++x) out.push_back(ls.alpha(x));
  return out;
}

inline std::vector<LineIndexSet> beta_map(const LineStructure& ls) {
  std::vector<LineIndexSet> out;
  for (VertexId x = 0; x < ls.vertex_count(); ++x) out.push_back(ls.beta(x));
  return out;
}

/// f(x) = beta(x) plus a uniformly random subset of alpha(x) - beta(x).
template <class Rng>
std::vector<LineIndexSet> random_sandwich(const LineStructure& ls, Rng& rng) {
  std::vector<LineIndexSet> out;
  for (VertexId x = 0; x < ls.vertex_count(); ++x) {
    LineIndexSet f = ls.beta(x);
    (ls.alpha(x) - ls.beta(x)).for_each([&](std::size_t id) {
      if (rng() & 1u) f.insert(id);
    });
    out.push_back(std::move(f));
  }
  return out;
}

struct TraceReport {
  bool holds = true;
  /// (x, y, z) with line(x,y) = line(x,z) but alpha(y)&beta(x) != alpha(z)&beta(x).
  std::optional<std::array<VertexId, 3>> violation;
};

/// Whenever line(x,y) = line(x,z), alpha(y) and alpha(z) agree on beta(x).
/// Exhaustive over ordered triples; universal lines are allowed.
inline TraceReport check_trace_equality(const LineStructure& ls) {
  const std::size_t n = ls.vertex_count();
  TraceReport report;
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = 0; y < n; ++y) {
      if (y == x) continue;
      for (VertexId z = 0; z < n; ++z) {
        if (z == x || z == y || ls.line_id(x, y) != ls.line_id(x, z)) continue;
        if ((ls.alpha(y) & ls.beta(x)) != (ls.alpha(z) & ls.beta(x))) {
          report.holds = false;
          report.violation = std::array<VertexId, 3>{x, y, z};
          return report;
        }
      }
    }
  }
  return report;
}

struct SpanInequality {
  bool holds = false;
  std::size_t n = 0, m = 0, s = 0, t = 0;
  /// m - t
  std::int64_t lhs = 0;
  /// lg(n - s) - s lg t, for display only; undefined when s = n.
  double rhs_approx = 0.0;
  /// 2^(m-t) * t^s and n - s: the exact multiplicative form that decides `holds`.
  BigInt scaled_lhs, scaled_rhs;
};

/// m - t >= lg(n - s) - s lg t for a nonempty vertex set of size s whose span
/// has t lines. Decided as n - s <= 2^(m-t) * t^s; s = n holds vacuously.
inline SpanInequality check_span_inequality(const LineStructure& ls, const VertexSet& s) {
  require_no_universal_line(ls);
  if (s.empty()) throw Error(ErrorKind::invalid_argument, "span inequality needs a nonempty vertex set");
  s.for_each([&](std::size_t x) { (void)ls.beta(x); });

  SpanInequality out;
  out.n = ls.vertex_count();
  out.m = ls.line_count();
  out.s = s.size();
  out.t = ls.span(s).size();
  out.lhs = static_cast<std::int64_t>(out.m) - static_cast<std::int64_t>(out.t);
  out.scaled_lhs = pow2(out.m - out.t) * ipow(BigInt(out.t), out.s);
  out.scaled_rhs = BigInt(out.n - out.s);
  if (out.s == out.n) {
    out.holds = true;
    out.rhs_approx = -INFINITY;
  } else {
    out.holds = out.scaled_rhs <= out.scaled_lhs;
    out.rhs_approx = std::log2(static_cast<double>(out.n - out.s)) -
                     static_cast<double>(out.s) * std::log2(static_cast<double>(out.t));
  }
  return out;
}

/// Classes of V - S under v -> (line(x_1,v), ..., line(x_s,v)), each class
/// ascending, classes ordered by their smallest member.
inline std::vector<std::vector<VertexId>> psi_partition(const LineStructure& ls, std::span<const VertexId> s) {
  if (s.empty()) throw Error(ErrorKind::invalid_argument, "psi needs a nonempty vertex list");
  VertexSet chosen;
  for (auto x : s) {
    (void)ls.beta(x);
    if (chosen.contains(x)) throw Error(ErrorKind::invalid_argument, "psi needs distinct vertices");
    chosen.insert(x);
  }
  std::map<std::vector<std::size_t>, std::vector<VertexId>> classes;
  for (VertexId v = 0; v < ls.vertex_count(); ++v) {
    if (chosen.contains(v)) continue;
    std::vector<std::size_t> key;
    key.reserve(s.size());
    for (auto x : s) key.push_back(ls.line_id(x, v));
    classes[key].push_back(v);
  }
  std::vector<std::vector<VertexId>> out;
  for (auto& [key, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

struct LgBoundCheck {
  bool holds = false;
  std::size_t n = 0, m = 0;
};

/// m >= lg n, decided as 2^m >= n.
inline LgBoundCheck check_lg_bound(const LineStructure& ls) {
  require_no_universal_line(ls);
  LgBoundCheck out;
  out.n = ls.vertex_count();
  out.m = ls.line_count();
  out.holds = pow2(out.m) >= out.n;
  return out;
}

}  // namespace hyperlines
