#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperlines/metric.hpp"

namespace hyperlines {

/// mt19937_64 with a portable bounded draw (the standard distributions are
/// not guaranteed to produce the same values across library vendors).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t operator()() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      std::uint64_t v = engine_();
      if (v < limit) return v % bound;
    }
  }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

 private:
  std::mt19937_64 engine_;
};

enum class Family { bipartite, chordal, one_two_metric, random_graph, random_hypergraph };

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::bipartite: return "bipartite";
    case Family::chordal: return "chordal";
    case Family::one_two_metric: return "one_two_metric";
    case Family::random_graph: return "random_graph";
    case Family::random_hypergraph: return "random_hypergraph";
  }
  return "?";
}

inline void require_size(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::invalid_size, "generators need n >= 2, got " + std::to_string(n));
}

namespace detail {

inline std::vector<VertexId> random_labels(std::size_t n, Rng& rng) {
  std::vector<VertexId> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  rng.shuffle(label);
  return label;
}

}  // namespace detail

/// Connected bipartite graph: a random spanning tree alternating sides plus
/// cross edges at a random density.
inline Graph random_bipartite_graph(std::size_t n, Rng& rng) {
  require_size(n);
  std::vector<int> side(n);
  side[0] = 0;
  side[1] = 1;
  for (std::size_t v = 2; v < n; ++v) side[v] = static_cast<int>(rng.below(2));
  Graph g(n);
  for (VertexId v = 1; v < n; ++v) {
    std::vector<VertexId> opposite;
    for (VertexId u = 0; u < v; ++u)
      if (side[u] != side[v]) opposite.push_back(u);
    g.add_edge(opposite[rng.below(opposite.size())], v);
  }
  const std::uint64_t density = rng.below(9);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (side[u] != side[v] && rng.chance(density, 8)) g.add_edge(u, v);
  auto label = detail::random_labels(n, rng);
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(label[u], label[v]);
  return out;
}

/// Connected chordal graph by simplicial attachment: each new vertex joins a
/// random clique containing a random existing vertex, so its neighbourhood
/// is a clique and the reverse insertion order is a perfect elimination order.
inline Graph random_chordal_graph(std::size_t n, Rng& rng) {
  require_size(n);
  Graph g(n);
  for (VertexId v = 1; v < n; ++v) {
    VertexId anchor = rng.below(v);
    std::vector<VertexId> clique{anchor};
    std::vector<VertexId> candidates(g.neighbors(anchor).begin(), g.neighbors(anchor).end());
    rng.shuffle(candidates);
    for (auto w : candidates) {
      bool fits = std::all_of(clique.begin(), clique.end(), [&](VertexId c) { return g.adjacent(c, w); });
      if (fits && rng.chance(1, 2)) clique.push_back(w);
    }
    for (auto c : clique) g.add_edge(c, v);
  }
  auto label = detail::random_labels(n, rng);
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(label[u], label[v]);
  return out;
}

/// Every off-diagonal distance 1 or 2; any such matrix is a metric.
inline MetricSpace random_one_two_metric(std::size_t n, Rng& rng) {
  require_size(n);
  const std::uint64_t density = rng.below(9);
  std::vector<Rational> d(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = rng.chance(density, 8) ? 2 : 1;
  return MetricSpace(n, std::move(d));
}

/// Connected graph: random recursive tree plus extra edges at a random density.
inline Graph random_connected_graph(std::size_t n, Rng& rng) {
  require_size(n);
  Graph g(n);
  for (VertexId v = 1; v < n; ++v) g.add_edge(rng.below(v), v);
  const std::uint64_t density = rng.below(9);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.chance(density, 16)) g.add_edge(u, v);
  auto label = detail::random_labels(n, rng);
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(label[u], label[v]);
  return out;
}

/// Each triple independently, at a density drawn from {1/16, ..., 15/16}.
inline Hypergraph3 random_hypergraph(std::size_t n, Rng& rng) {
  require_size(n);
  const std::uint64_t density = 1 + rng.below(15);
  Hypergraph3 h(n);
  for (const auto& t : colex_triples(n))
    if (rng.chance(density, 16)) h.add_hedge(t.a, t.b, t.c);
  return h;
}

using Generated = std::variant<Graph, MetricSpace, Hypergraph3>;

/// Deterministic in (family, n, seed).
inline Generated gen_family(Family family, std::size_t n, std::uint64_t seed) {
  require_size(n);
  Rng rng(seed);
  switch (family) {
    case Family::bipartite: return random_bipartite_graph(n, rng);
    case Family::chordal: return random_chordal_graph(n, rng);
    case Family::one_two_metric: return random_one_two_metric(n, rng);
    case Family::random_graph: return random_connected_graph(n, rng);
    case Family::random_hypergraph: return random_hypergraph(n, rng);
  }
  throw Error(ErrorKind::invalid_argument, "unknown family");
}

}  // namespace hyperlines
