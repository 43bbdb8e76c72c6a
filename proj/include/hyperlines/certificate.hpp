#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "hyperlines/proofkit.hpp"
#include "hyperlines/tail_bound.hpp"

// Bound certificates: the vertex set S of largest size whose span T is
// "dense" (t >= (delta/2) lg n * s), the largest class R of vertices sharing
// the same trace beta(y) & T, and every inequality of the chain that turns
// those into a lower bound on m, each stored with exact operands.
namespace hyperlines {

/// constant + lg_coeff * lg(n), where n is the certificate's vertex count.
struct LogLinear {
  Rational constant = 0;
  Rational lg_coeff = 0;

  friend bool operator==(const LogLinear&, const LogLinear&) = default;
};

inline LogLinear constant(const Rational& c) { return {c, 0}; }
inline LogLinear lg_multiple(const Rational& b) { return {0, b}; }

/// Exact sign of a - b.
inline int compare(const LogLinear& a, const LogLinear& b, std::size_t n) {
  Rational c = a.constant - b.constant;
  Rational k = a.lg_coeff - b.lg_coeff;
  if (k == 0) return c < 0 ? -1 : (c > 0 ? 1 : 0);
  // sign(c + k lg n) = sign(k) * sign(lg n - (-c/k)) = -sign(k) * sign(r - lg n)
  int s = compare_with_lg(-c / k, Rational(n));
  return k > 0 ? -s : s;
}

inline double approx(const LogLinear& q, std::size_t n) {
  return to_double(q.constant) + to_double(q.lg_coeff) * std::log2(static_cast<double>(n));
}

enum class Relation { lt, le, ge, gt };

constexpr std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::lt: return "<";
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
  }
  return "?";
}

struct Inequality {
  std::string name;
  LogLinear lhs;
  Relation relation = Relation::le;
  LogLinear rhs;
  bool holds = false;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

inline bool evaluate(const LogLinear& lhs, Relation rel, const LogLinear& rhs, std::size_t n) {
  int s = compare(lhs, rhs, n);
  switch (rel) {
    case Relation::lt: return s < 0;
    case Relation::le: return s <= 0;
    case Relation::ge: return s >= 0;
    case Relation::gt: return s > 0;
  }
  return false;
}

enum class CertificateBranch { t_large, mt_large, final_chain };

constexpr std::string_view to_string(CertificateBranch b) {
  switch (b) {
    case CertificateBranch::t_large: return "t_large";
    case CertificateBranch::mt_large: return "mt_large";
    case CertificateBranch::final_chain: return "final_chain";
  }
  return "?";
}

enum class SpanSearch { exhaustive, greedy };

constexpr std::string_view to_string(SpanSearch s) { return s == SpanSearch::exhaustive ? "exhaustive" : "greedy"; }

/// The numbers every recorded inequality is built from. Extraction and
/// validation both derive these from the hypergraph and feed them through
/// the same chain builder, so the recorded list can be compared verbatim.
struct CertificateFacts {
  std::size_t n = 0, m = 0, s = 0, t = 0, r = 0;
  Rational epsilon, delta;
  /// max |beta(y) - T| over y in R, and how many distinct sets beta(y) - T occur.
  std::size_t max_outside = 0;
  std::size_t distinct_outside = 0;
};

struct BoundCertificate {
  Rational epsilon;
  Rational delta;
  SpanSearch mode = SpanSearch::exhaustive;
  Hypergraph3 hypergraph;
  std::size_t n = 0;
  std::size_t m = 0;
  VertexSet S;
  std::size_t s = 0;
  std::vector<Line> T;
  std::size_t t = 0;
  VertexSet R;
  std::size_t r = 0;
  CertificateBranch branch = CertificateBranch::t_large;
  /// 0.5 lg n < m - t; only consulted on the final chain.
  bool side_condition = false;
  /// Whether the tail-sum part of the final chain could be evaluated at this n.
  bool chain_applicable = false;
  std::vector<Inequality> inequalities;

  /// Greedy S is only guaranteed to be non-extendable, not largest.
  bool heuristic() const { return mode == SpanSearch::greedy; }
};

namespace detail {

/// Largest integer i >= 0 with i < (delta/2) lg n, or -1 if none.
inline std::int64_t last_index_below_tau(const Rational& delta, std::size_t n) {
  auto below = [&](std::int64_t i) { return compare_with_lg(Rational(2 * i) / delta, Rational(n)) < 0; };
  double guess = to_double(delta) / 2 * std::log2(static_cast<double>(n));
  std::int64_t i = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(guess)) - 1);
  while (i >= 0 && !below(i)) --i;
  while (below(i + 1)) ++i;
  return i;
}

/// Smallest integer t with t >= (delta/2) lg n * s.
inline std::size_t min_dense_span(const Rational& delta, std::size_t n, std::size_t s) {
  if (s == 0) return 0;
  auto dense = [&](std::int64_t t) { return compare_with_lg(Rational(2 * t) / (delta * s), Rational(n)) >= 0; };
  double guess = to_double(delta) / 2 * std::log2(static_cast<double>(n)) * static_cast<double>(s);
  std::int64_t t = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(guess)));
  while (!dense(t)) ++t;
  while (t > 0 && dense(t - 1)) --t;
  return static_cast<std::size_t>(t);
}

inline BigInt capped_tail(std::size_t big_n, std::int64_t k) {
  if (k < 0) return 0;
  return binomial_tail(static_cast<std::int64_t>(big_n), std::min<std::int64_t>(k, static_cast<std::int64_t>(big_n)));
}

}  // namespace detail

inline CertificateBranch branch_for(const CertificateFacts& f) {
  if (compare(constant(f.t), lg_multiple(2), f.n) >= 0) return CertificateBranch::t_large;
  if (Rational(f.t) > Rational(f.m, 2)) return CertificateBranch::mt_large;
  return CertificateBranch::final_chain;
}

inline bool side_condition_for(const CertificateFacts& f) {
  return compare(lg_multiple(Rational(1, 2)), constant(f.m - f.t), f.n) < 0;
}

/// Builds the inequality chain for the branch the facts select.
inline std::vector<Inequality> build_inequalities(const CertificateFacts& f) {
  std::vector<Inequality> out;
  auto add = [&](std::string name, LogLinear lhs, Relation rel, LogLinear rhs) {
    bool holds = evaluate(lhs, rel, rhs, f.n);
    out.push_back({std::move(name), std::move(lhs), rel, std::move(rhs), holds});
  };
  const Rational half_delta = f.delta / 2;
  // eps = eps_num / b
  const BigInt eps_num = boost::multiprecision::numerator(f.epsilon);
  const std::uint64_t b = boost::multiprecision::denominator(f.epsilon).convert_to<std::uint64_t>();

  add("span_dense", constant(f.t), Relation::ge, lg_multiple(half_delta * f.s));

  const CertificateBranch branch = branch_for(f);
  if (branch == CertificateBranch::t_large) {
    add("t_at_least_2lgn", constant(f.t), Relation::ge, lg_multiple(2));
    add("m_at_least_t", constant(f.m), Relation::ge, constant(f.t));
    add("m_at_least_2lgn", constant(f.m), Relation::ge, lg_multiple(2));
    return out;
  }

  add("t_below_2lgn", constant(f.t), Relation::lt, lg_multiple(2));
  add("s_below_4_over_delta", constant(f.s), Relation::lt, constant(Rational(4) / f.delta));
  if (f.t > 0) {
    // m - t >= lg(n - s) - s lg t, multiplied out.
    add("span_inequality", constant(f.n - f.s), Relation::le,
        constant(pow2(f.m - f.t) * ipow(BigInt(f.t), f.s)));
  } else {
    add("m_at_least_lgn", constant(f.m), Relation::ge, lg_multiple(1));
  }

  if (branch == CertificateBranch::mt_large) {
    add("t_above_half_m", constant(f.t), Relation::gt, constant(Rational(f.m, 2)));
    add("half_m_above_m_minus_t", constant(Rational(f.m, 2)), Relation::gt, constant(f.m - f.t));
    return out;
  }

  add("t_at_most_half_m", constant(f.t), Relation::le, constant(Rational(f.m, 2)));
  add("r_pigeonhole", constant(f.n), Relation::le, constant(pow2(f.t) * f.r));
  add("outside_traces_distinct", constant(f.distinct_outside), Relation::ge, constant(f.r));
  add("outside_traces_small", constant(f.max_outside), Relation::lt, lg_multiple(half_delta));

  const std::size_t free_lines = f.m - f.t;
  const BigInt tau_tail = detail::capped_tail(free_lines, detail::last_index_below_tau(f.delta, f.n));
  add("r_at_most_tau_tail", constant(f.r), Relation::le, constant(tau_tail));

  if (!side_condition_for(f)) return out;
  add("half_lgn_below_m_minus_t", lg_multiple(Rational(1, 2)), Relation::lt, constant(free_lines));

  const BigInt delta_tail =
      detail::capped_tail(free_lines, (ceil_of(f.delta * free_lines) - 1).convert_to<std::int64_t>());
  add("tau_tail_at_most_delta_tail", constant(tau_tail), Relation::le, constant(delta_tail));
  // tail <= 2^(eps (m-t))  <=>  tail^b <= 2^(a (m-t)) with eps = a/b
  add("delta_tail_at_most_2_eps_free", constant(ipow(delta_tail, b)), Relation::le,
      constant(pow2((eps_num * free_lines).convert_to<std::uint64_t>())));
  add("eps_free_at_most_eps_m", constant(f.epsilon * free_lines), Relation::le, constant(f.epsilon * f.m));
  // n <= 2^(t + eps m)  <=>  n^b <= 2^(b t + a m)
  add("n_at_most_2_t_eps_m", constant(ipow(BigInt(f.n), b)), Relation::le,
      constant(pow2((BigInt(b) * f.t + eps_num * f.m).convert_to<std::uint64_t>())));
  add("t_eps_m_at_most_half_eps_m", constant(f.t + f.epsilon * f.m), Relation::le,
      constant((Rational(1, 2) + f.epsilon) * f.m));
  if (f.epsilon < Rational(1, 2))
    add("m_at_least_2_minus_4eps_lgn", constant(f.m), Relation::ge, lg_multiple(2 - 4 * f.epsilon));
  return out;
}

namespace detail {

struct SpanChoice {
  VertexSet S;
  LineIndexSet T;
};

/// Largest S with |span(S)| >= (delta/2) lg n |S|; ties go to the
/// lexicographically smallest ascending vertex list.
inline SpanChoice largest_dense_set(const LineStructure& ls, const Rational& delta) {
  const std::size_t n = ls.vertex_count();
  if (n > 20) throw Error(ErrorKind::unsupported_size, "exhaustive span search supports n <= 20");
  const std::size_t words = (ls.line_count() + 63) / 64;
  std::vector<std::size_t> need(n + 1);
  for (std::size_t s = 0; s <= n; ++s) need[s] = min_dense_span(delta, n, s);

  std::vector<std::uint64_t> beta_words(n * words);
  for (VertexId x = 0; x < n; ++x)
    for (std::size_t w = 0; w < words; ++w) beta_words[x * words + w] = ls.beta(x).word(w);

  const std::uint32_t full = (std::uint32_t{1} << n);
  std::vector<std::uint64_t> spans(static_cast<std::size_t>(full) * words, 0);
  std::uint32_t best = 0;
  std::size_t best_size = 0;
  auto lex_smaller = [](std::uint32_t a, std::uint32_t b) {
    std::uint32_t diff = a ^ b;
    std::uint32_t low = diff & (~diff + 1);
    return (a & low) != 0;  // equal sizes: the set owning the smallest difference wins
  };
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::uint32_t rest = mask & (mask - 1);
    std::size_t x = static_cast<std::size_t>(std::countr_zero(mask));
    std::size_t t = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t v = spans[rest * words + w] | beta_words[x * words + w];
      spans[mask * words + w] = v;
      t += static_cast<std::size_t>(std::popcount(v));
    }
    std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size < best_size || t < need[size]) continue;
    if (size > best_size || lex_smaller(mask, best)) {
      best = mask;
      best_size = size;
    }
  }
  SpanChoice out;
  for (std::size_t x = 0; x < n; ++x)
    if ((best >> x) & 1u) out.S.insert(x);
  out.T = ls.span(out.S);
  return out;
}

/// Adds the smallest vertex that keeps the span dense until none does.
inline SpanChoice greedy_dense_set(const LineStructure& ls, const Rational& delta) {
  const std::size_t n = ls.vertex_count();
  SpanChoice out;
  for (bool grew = true; grew;) {
    grew = false;
    std::size_t need = min_dense_span(delta, n, out.S.size() + 1);
    for (VertexId y = 0; y < n; ++y) {
      if (out.S.contains(y)) continue;
      LineIndexSet candidate = out.T | ls.beta(y);
      if (candidate.size() >= need) {
        out.S.insert(y);
        out.T = std::move(candidate);
        grew = true;
        break;
      }
    }
  }
  return out;
}

/// Largest class of vertices sharing beta(y) & T; ties go to the class with
/// the smallest member.
inline VertexSet largest_trace_class(const LineStructure& ls, const LineIndexSet& T) {
  std::map<LineIndexSet, VertexSet> classes;
  for (VertexId y = 0; y < ls.vertex_count(); ++y) classes[ls.beta(y) & T].insert(y);
  const VertexSet* best = nullptr;
  for (const auto& [trace, members] : classes) {
    if (best == nullptr || members.size() > best->size() ||
        (members.size() == best->size() && members.members().front() < best->members().front()))
      best = &members;
  }
  return best ? *best : VertexSet{};
}

inline CertificateFacts facts_for(const LineStructure& ls, const Rational& epsilon, const Rational& delta,
                                  const VertexSet& S, const LineIndexSet& T, const VertexSet& R) {
  CertificateFacts f;
  f.n = ls.vertex_count();
  f.m = ls.line_count();
  f.s = S.size();
  f.t = T.size();
  f.r = R.size();
  f.epsilon = epsilon;
  f.delta = delta;
  std::vector<LineIndexSet> outside;
  R.for_each([&](std::size_t y) {
    LineIndexSet o = ls.beta(y) - T;
    f.max_outside = std::max(f.max_outside, o.size());
    outside.push_back(std::move(o));
  });
  std::sort(outside.begin(), outside.end());
  f.distinct_outside = static_cast<std::size_t>(std::unique(outside.begin(), outside.end()) - outside.begin());
  return f;
}

}  // namespace detail

inline BoundCertificate extract_certificate(const Hypergraph3& h, const Rational& epsilon, SpanSearch mode) {
  if (epsilon <= 0) throw Error(ErrorKind::invalid_epsilon, "epsilon must be positive, got " + to_string(epsilon));
  if (h.vertex_count() < 3) throw Error(ErrorKind::invalid_size, "certificates need n >= 3");
  LineStructure ls(h);
  require_no_universal_line(ls);

  BoundCertificate c;
  c.epsilon = epsilon;
  c.delta = delta_for_epsilon(epsilon);
  c.mode = mode;
  c.hypergraph = h;
  c.n = ls.vertex_count();
  c.m = ls.line_count();

  auto choice = mode == SpanSearch::exhaustive ? detail::largest_dense_set(ls, c.delta)
                                               : detail::greedy_dense_set(ls, c.delta);
  c.S = choice.S;
  c.s = c.S.size();
  c.T = ls.to_lines(choice.T);
  c.t = choice.T.size();

  CertificateFacts f = detail::facts_for(ls, epsilon, c.delta, c.S, choice.T, VertexSet{});
  c.branch = branch_for(f);
  if (c.branch == CertificateBranch::final_chain) {
    c.R = detail::largest_trace_class(ls, choice.T);
    c.r = c.R.size();
    f = detail::facts_for(ls, epsilon, c.delta, c.S, choice.T, c.R);
    c.side_condition = side_condition_for(f);
    c.chain_applicable = c.side_condition;
  }
  c.inequalities = build_inequalities(f);
  return c;
}

struct CertificateValidation {
  bool valid = true;
  std::vector<std::string> failures;

  void fail(std::string why) {
    valid = false;
    failures.push_back(std::move(why));
  }
};

/// Recomputes everything the certificate claims from its hypergraph alone.
inline CertificateValidation validate_certificate(const BoundCertificate& c) {
  CertificateValidation v;
  const Hypergraph3& h = c.hypergraph;
  LineStructure ls(h);
  if (ls.has_universal_line()) v.fail("hypergraph has a universal line");
  if (c.n != ls.vertex_count() || c.n < 3) v.fail("vertex count mismatch");
  if (c.m != ls.line_count()) v.fail("line count mismatch");
  if (!v.valid) return v;

  if (c.epsilon <= 0) v.fail("epsilon not positive");
  if (c.delta <= 0 || c.delta > Rational(1, 2)) v.fail("delta outside (0, 1/2]");
  if (!v.valid) return v;
  if (!delta_criterion_holds(c.delta, c.epsilon)) v.fail("delta does not satisfy the tail-bound criterion");

  bool in_range = true;
  c.S.for_each([&](std::size_t x) { in_range = in_range && x < c.n; });
  c.R.for_each([&](std::size_t x) { in_range = in_range && x < c.n; });
  if (!in_range) {
    v.fail("vertex out of range in S or R");
    return v;
  }

  const LineIndexSet T = ls.span(c.S);
  if (ls.to_lines(T) != c.T) v.fail("T is not the span of S");
  if (c.s != c.S.size() || c.t != T.size()) v.fail("recorded s or t disagrees with S and T");

  // S must be dense and admit no single-vertex extension.
  if (T.size() < detail::min_dense_span(c.delta, c.n, c.S.size())) v.fail("span of S is not dense");
  const std::size_t need_next = detail::min_dense_span(c.delta, c.n, c.S.size() + 1);
  for (VertexId y = 0; y < c.n; ++y)
    if (!c.S.contains(y) && (T | ls.beta(y)).size() >= need_next)
      v.fail("S extends by vertex " + std::to_string(y));

  CertificateFacts f = detail::facts_for(ls, c.epsilon, c.delta, c.S, T, c.R);
  if (c.branch != branch_for(f)) v.fail("recorded branch does not match t, m and n");
  if (c.branch == CertificateBranch::final_chain) {
    if (c.R.empty()) v.fail("R is empty");
    std::optional<LineIndexSet> trace;
    c.R.for_each([&](std::size_t y) {
      LineIndexSet mine = ls.beta(y) & T;
      if (!trace) trace = mine;
      else if (*trace != mine) v.fail("R members disagree on beta & T at vertex " + std::to_string(y));
    });
    if (c.r != c.R.size()) v.fail("recorded r disagrees with R");
    if (c.R.size() != detail::largest_trace_class(ls, T).size()) v.fail("R is not a largest trace class");
    if (BigInt(c.n) > pow2(c.t) * c.R.size()) v.fail("|R| < n / 2^t");
    if (c.side_condition != side_condition_for(f)) v.fail("side condition flag is wrong");
    if (c.chain_applicable != c.side_condition) v.fail("chain applicability flag is wrong");
  } else if (!c.R.empty() || c.r != 0) {
    v.fail("R recorded outside the final chain");
  }

  const auto expected = build_inequalities(f);
  if (expected.size() != c.inequalities.size()) {
    v.fail("inequality list has " + std::to_string(c.inequalities.size()) + " entries, expected " +
           std::to_string(expected.size()));
  } else {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const auto& got = c.inequalities[i];
      if (got.name != expected[i].name || got.lhs != expected[i].lhs || got.rhs != expected[i].rhs ||
          got.relation != expected[i].relation)
        v.fail("inequality " + got.name + " does not match recomputation");
    }
  }
  for (const auto& q : c.inequalities) {
    bool holds = evaluate(q.lhs, q.relation, q.rhs, c.n);
    if (!holds) v.fail("inequality " + q.name + " does not hold");
    if (holds != q.holds) v.fail("inequality " + q.name + " has a wrong holds flag");
  }
  return v;
}

}  // namespace hyperlines
