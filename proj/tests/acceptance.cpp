// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "hyperlines/cli.hpp"
#include "support/oracles.hpp"

using namespace hyperlines;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 means no runtime bound
  std::function<Outcome()> run;
};

/// Counts violations and remembers the first one.
struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (violations++ == 0) first = what();
  }

  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ", " << checked << " checks, " << violations << " violations";
    if (violations) os << " (first: " << first << ")";
    return {violations == 0, os.str()};
  }
};

/// Draws until the instance has no universal line.
Hypergraph3 draw_no_universal(Rng& rng, std::size_t lo, std::size_t hi) {
  for (;;) {
    auto h = random_hypergraph(lo + rng.below(hi - lo + 1), rng);
    if (!summarize_lines(h).universal) return h;
  }
}

std::string hg(const Hypergraph3& h) {
  std::string text = to_text(h);
  for (auto& c : text)
    if (c == '\n') c = ';';
  return text;
}

// 1 -------------------------------------------------------------------------
Outcome lg_bound_exhaustive() {
  Tally tally;
  std::uint64_t qualifying = 0;
  for (std::size_t n : {4u, 5u})
    enumerate_hypergraphs(n, Shard{}, [&](HedgeMask, const Hypergraph3& h) {
      LineStructure ls(h);
      if (ls.has_universal_line()) return;
      ++qualifying;
      auto r = check_lg_bound(ls);
      // ceil(lg n) <= m  <=>  2^m >= n
      tally.expect(r.holds, [&] { return hg(h) + " m=" + std::to_string(r.m); });
    });
  return tally.outcome("16 + 1024 hypergraphs, " + std::to_string(qualifying) + " without a universal line");
}

// 2, 3 ----------------------------------------------------------------------
/// Exhaustive n <= 5 plus 10^4 random instances n <= 12.
template <class F>
void population_of(std::uint64_t seed, bool require_no_universal, F&& f) {
  for (std::size_t n = 3; n <= 5; ++n)
    enumerate_hypergraphs(n, Shard{}, [&](HedgeMask, const Hypergraph3& h) {
      LineStructure ls(h);
      if (!require_no_universal || !ls.has_universal_line()) f(h, ls);
    });
  Rng rng(seed);
  for (int i = 0; i < 10000; ++i) {
    Hypergraph3 h = require_no_universal ? draw_no_universal(rng, 3, 12) : random_hypergraph(3 + rng.below(10), rng);
    f(h, LineStructure(h));
  }
}

Outcome crit_antichain() {
  Tally tally;
  Rng rng(2);
  population_of(1, true, [&](const Hypergraph3& h, const LineStructure& ls) {
    auto a = alpha_map(ls);
    auto b = beta_map(ls);
    tally.expect(check_sandwich_antichain(ls, a).holds, [&] { return "alpha on " + hg(h); });
    tally.expect(check_sandwich_antichain(ls, b).holds, [&] { return "beta on " + hg(h); });
    for (int i = 0; i < 1000; ++i) {
      auto f = random_sandwich(ls, rng);
      tally.expect(check_sandwich_antichain(ls, f).holds, [&] { return "sandwich on " + hg(h); });
    }
  });
  return tally.outcome("alpha, beta and 1000 sandwich maps per instance");
}

Outcome crit_trace() {
  Tally tally;
  population_of(1, false, [&](const Hypergraph3& h, const LineStructure& ls) {
    tally.expect(check_trace_equality(ls).holds, [&] { return hg(h); });
  });
  return tally.outcome("all ordered triples per instance");
}

// 4 -------------------------------------------------------------------------
Outcome crit_span() {
  Tally tally;
  enumerate_hypergraphs(5, Shard{}, [&](HedgeMask, const Hypergraph3& h) {
    LineStructure ls(h);
    if (ls.has_universal_line()) return;
    for (std::uint64_t mask = 1; mask < 32; ++mask)
      tally.expect(check_span_inequality(ls, VertexSet::from_word(mask)).holds,
                   [&] { return hg(h) + " S=" + std::to_string(mask); });
  });
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    auto h = draw_no_universal(rng, 3, 16);
    LineStructure ls(h);
    const std::size_t n = h.vertex_count();
    for (int j = 0; j < 1000; ++j) {
      std::uint64_t mask = 0;
      while (mask == 0) mask = rng.below(std::uint64_t{1} << n);
      tally.expect(check_span_inequality(ls, VertexSet::from_word(mask)).holds,
                   [&] { return hg(h) + " S=" + std::to_string(mask); });
    }
  }
  return tally.outcome("31 sets on every n=5 instance, 1000 sets on 1000 random instances n<=16");
}

// 5 -------------------------------------------------------------------------
Outcome crit_tail() {
  Tally tally;
  for (std::int64_t big_n = 2; big_n <= 60; ++big_n)
    for (std::int64_t k = 1; 2 * k <= big_n; ++k)
      tally.expect(check_bernstein(big_n, k).holds,
                   [&] { return "N=" + std::to_string(big_n) + " k=" + std::to_string(k); });
  std::string deltas;
  for (const Rational& eps : {Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1)}) {
    Rational delta = delta_for_epsilon(eps);
    deltas += " " + to_string(eps) + "->" + to_string(delta);
    for (std::int64_t big_n = 1; big_n <= 200; ++big_n)
      tally.expect(tail_condition_holds(delta, eps, big_n),
                   [&] { return "eps=" + to_string(eps) + " N=" + std::to_string(big_n); });
  }
  return tally.outcome("Bernstein N<=60, tail sums N<=200, delta:" + deltas);
}

// 6 -------------------------------------------------------------------------
Outcome certificates() {
  Tally tally;
  Rng rng(6);
  std::map<std::string, int> branches;
  for (int i = 0; i < 1000; ++i) {
    auto h = draw_no_universal(rng, 3, 16);
    for (const Rational& eps : {Rational(1, 8), Rational(1, 4)}) {
      auto c = extract_certificate(h, eps, SpanSearch::exhaustive);
      auto v = validate_certificate(c);
      ++branches[std::string(to_string(c.branch))];
      tally.expect(v.valid, [&] { return hg(h) + ": " + v.failures.front(); });
      if (c.branch == CertificateBranch::final_chain)
        tally.expect(BigInt(c.r) * pow2(c.t) >= c.n, [&] { return "|R| < n/2^t on " + hg(h); });
    }
  }
  std::string mix;
  for (auto [name, count] : branches) mix += " " + name + "=" + std::to_string(count);
  return tally.outcome("1000 instances x 2 epsilons, branches:" + mix);
}

// 7 -------------------------------------------------------------------------
bool lines_at_least_n_or_universal(const MetricSpace& ms) {
  auto s = summarize_lines(betweenness_hypergraph(ms));
  return s.universal || s.m >= ms.size();
}

/// Edge-mask graphs over the pairs (u,v), u<v, in row order.
Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1u) g.add_edge(u, v);
  return g;
}

/// Connected and 2-colourable, by BFS over adjacency words.
bool connected_bipartite(std::size_t n, std::uint64_t mask) {
  std::uint64_t adj[8] = {};
  std::size_t bit = 0;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1u) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
      }
  int color[8];
  std::fill(color, color + 8, -1);
  color[0] = 0;
  VertexId queue[8];
  std::size_t head = 0, tail = 0;
  queue[tail++] = 0;
  while (head < tail) {
    VertexId u = queue[head++];
    for (VertexId v = 0; v < n; ++v) {
      if (!((adj[u] >> v) & 1u)) continue;
      if (color[v] < 0) {
        color[v] = 1 - color[u];
        queue[tail++] = v;
      } else if (color[v] == color[u]) {
        return false;
      }
    }
  }
  return tail == n;
}

Outcome survey_families() {
  Tally tally;
  std::uint64_t bipartite = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    const std::uint64_t total = std::uint64_t{1} << choose(n, 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (!connected_bipartite(n, mask)) continue;
      ++bipartite;
      auto ms = graph_metric(graph_from_mask(n, mask));
      tally.expect(summarize_lines(betweenness_hypergraph(ms)).universal,
                   [&] { return "bipartite n=" + std::to_string(n) + " edges=" + std::to_string(mask); });
    }
  }

  std::uint64_t one_two = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const std::size_t pairs = choose(n, 2);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::vector<Rational> d(n * n, 0);
      std::size_t bit = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++bit) d[i * n + j] = d[j * n + i] = ((mask >> bit) & 1u) ? 2 : 1;
      ++one_two;
      tally.expect(lines_at_least_n_or_universal(MetricSpace(n, d)),
                   [&] { return "{1,2}-metric n=" + std::to_string(n) + " mask=" + std::to_string(mask); });
    }
  }
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    auto ms = random_one_two_metric(2 + rng.below(8), rng);
    tally.expect(lines_at_least_n_or_universal(ms), [&] { return "{1,2}-metric\n" + to_text(ms); });
  }

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto g = std::get<Graph>(gen_family(Family::chordal, 2 + seed % 8, seed));
    tally.expect(!oracle::has_induced_long_cycle(g, g.size()), [&] { return "generator made a non-chordal graph"; });
    tally.expect(lines_at_least_n_or_universal(graph_metric(g)), [&] { return "chordal " + to_text(g); });
  }

  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + rng.below(7);
    std::vector<std::int64_t> xs, ys;
    std::set<std::int64_t> seen_x, seen_y;
    while (xs.size() < n) {
      std::int64_t x = static_cast<std::int64_t>(rng.below(41)) - 20;
      if (seen_x.insert(x).second) xs.push_back(x);
    }
    while (ys.size() < n) {
      std::int64_t y = static_cast<std::int64_t>(rng.below(41)) - 20;
      if (seen_y.insert(y).second) ys.push_back(y);
    }
    PointSet pts;
    for (std::size_t k = 0; k < n; ++k) pts.push_back({xs[k], ys[k]});
    auto l1 = l1_metric(pts);
    tally.expect(l1.general_position, [&] { return "points not in general position"; });
    tally.expect(lines_at_least_n_or_universal(l1.metric), [&] { return "L1 " + to_text(pts); });
  }
  return tally.outcome(std::to_string(bipartite) + " connected bipartite graphs n<=7, " + std::to_string(one_two) +
                       " + 10000 {1,2}-metrics, 1000 chordal graphs, 1000 L1 point sets");
}

// 8 -------------------------------------------------------------------------
Outcome dbe_suites() {
  Tally tally;
  std::string sizes;
  for (auto [c, variant] : {std::pair{Constraint::dbe_two_or_three, DbeVariant::two_or_three},
                            std::pair{Constraint::dbe_two, DbeVariant::two}}) {
    std::uint64_t population = 0;
    enumerate_hypergraphs(5, Shard{}, [&](HedgeMask, const Hypergraph3& h) {
      if (!dbe_condition(h, variant)) return;
      auto s = summarize_lines(h);
      if (s.universal) return;
      ++population;
      tally.expect(s.m >= 5, [&] { return std::string(to_string(c)) + " " + hg(h) + " m=" + std::to_string(s.m); });
    });
    auto r = min_lines(5, c);
    tally.expect(r.examined == population, [&] { return "min_lines population mismatch"; });
    sizes += " " + std::string(to_string(c)) + "=" + std::to_string(population) + "(min m " +
             (r.min_m ? std::to_string(*r.min_m) : "-") + ")";
  }
  return tally.outcome("n=5 populations:" + sizes);
}

// 9 -------------------------------------------------------------------------
std::optional<std::size_t> definition_min_lines(std::size_t n) {
  std::optional<std::size_t> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << choose(n, 3)); ++mask) {
    auto lines = oracle::lines_by_definition(Hypergraph3::from_mask(n, mask));
    if (std::any_of(lines.begin(), lines.end(), [&](const auto& l) { return l.size() == n; })) continue;
    if (!best || lines.size() < *best) best = lines.size();
  }
  return best;
}

std::string cli_output(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  cli::run(args, in, out, err);
  return out.str();
}

Outcome min_line_table() {
  Tally tally;
  auto r3 = min_lines(3, Constraint::no_universal);
  auto r4 = min_lines(4, Constraint::no_universal);
  tally.expect(r3.min_m == 3u && definition_min_lines(3) == 3u, [] { return "min_lines(3) != 3"; });
  tally.expect(r4.min_m == 4u && definition_min_lines(4) == 4u, [] { return "min_lines(4) != 4"; });
  auto fast = min_lines(5, Constraint::no_universal, {LineEngine::optimized});
  auto slow = min_lines(5, Constraint::no_universal, {LineEngine::naive});
  tally.expect(fast == slow, [] { return "engines disagree on min_lines(5)"; });
  tally.expect(fast.min_m == definition_min_lines(5), [] { return "min_lines(5) disagrees with the definition"; });
  tally.expect(fast.min_m && pow2(*fast.min_m) >= 5, [] { return "min_lines(5) below ceil(lg 5)"; });
  for (const char* engine : {"optimized", "naive"}) {
    std::vector<std::string> args{"search", "--n", "5", "--engine", engine, "--json"};
    tally.expect(cli_output(args) == cli_output(args), [&] { return std::string("rerun differs, engine ") + engine; });
  }
  return tally.outcome("min_lines: 3, 4, " + (fast.min_m ? std::to_string(*fast.min_m) : std::string("-")) +
                       " for n = 3, 4, 5");
}

// 10 ------------------------------------------------------------------------
Outcome engine_equivalence() {
  Tally tally;
  Rng rng(10);
  for (int i = 0; i < 10000; ++i) {
    auto h = random_hypergraph(2 + rng.below(15), rng);
    tally.expect(oracle::as_set(all_lines(h)) == reference::all_lines(h), [&] { return hg(h); });
  }
  for (std::size_t n = 2; n <= 5; ++n)
    enumerate_hypergraphs(n, Shard{}, [&](HedgeMask, const Hypergraph3& h) {
      tally.expect(oracle::as_set(all_lines(h)) == reference::all_lines(h), [&] { return hg(h); });
    });

  auto sharded_exhaustive = [](std::size_t n, Constraint c, std::uint64_t k) {
    SearchResult merged;
    merged.n = n;
    merged.constraint = c;
    for (std::uint64_t i = 0; i < k; ++i) merged = merge(merged, min_lines(n, c, {LineEngine::optimized, Shard{i, k}}));
    return merged;
  };
  auto sharded_sampled = [](SearchTask task, std::uint64_t k) {
    SearchResult merged;
    merged.n = task.n;
    merged.constraint = task.constraint;
    merged.mode = SearchMode::sampled;
    for (std::uint64_t i = 0; i < k; ++i) {
      task.shard = {i, k};
      merged = merge(merged, sampled_search(task, 2000));
    }
    return merged;
  };
  for (std::size_t n : {5u, 6u}) {
    auto one = sharded_exhaustive(n, Constraint::no_universal, 1);
    for (std::uint64_t k : {4u, 16u})
      tally.expect(sharded_exhaustive(n, Constraint::no_universal, k) == one,
                   [&] { return "exhaustive n=" + std::to_string(n) + " K=" + std::to_string(k); });
  }
  SearchTask task{10, SearchMode::sampled, Constraint::no_universal, 10};
  auto one = sharded_sampled(task, 1);
  for (std::uint64_t k : {4u, 16u})
    tally.expect(sharded_sampled(task, k) == one, [&] { return "sampled n=10 K=" + std::to_string(k); });
  return tally.outcome("10000 random n<=16, all n<=5, shard counts 1/4/16");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "m >= ceil(lg n), exhaustive n=4,5", 5, lg_bound_exhaustive},
      {2, "sandwich maps are injective antichains", 120, crit_antichain},
      {3, "trace equality", 0, crit_trace},
      {4, "span inequality", 300, crit_span},
      {5, "Bernstein bound and delta(epsilon)", 30, crit_tail},
      {6, "bound certificates validate", 300, certificates},
      {7, "bipartite, {1,2}-metric, chordal and L1 families", 600, survey_families},
      {8, "DBE populations have m >= n", 0, dbe_suites},
      {9, "minimum line table", 0, min_line_table},
      {10, "naive and optimized engines agree; shard invariance", 0, engine_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
    bool pass = o.pass && in_time;
    failed += !pass;
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", seconds, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " -- " << o.detail << " ["
              << timing << (in_time ? "" : ", over time") << "]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
