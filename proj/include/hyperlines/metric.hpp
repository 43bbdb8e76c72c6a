#pragma once

#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperlines/exact.hpp"
#include "hyperlines/lines.hpp"

namespace hyperlines {

/// Finite metric space with exact rational distances. Distances are also kept
/// as integers over a common denominator so betweenness tests are integer
/// additions and comparisons.
class MetricSpace {
 public:
  MetricSpace() = default;

  /// Row-major n x n matrix. Throws invalid-metric naming the first entry
  /// that breaks zero diagonal, symmetry, positivity or the triangle inequality.
  MetricSpace(std::size_t n, std::vector<Rational> dist) : n_(n), dist_(std::move(dist)) {
    if (dist_.size() != n_ * n_)
      throw Error(ErrorKind::invalid_metric, "matrix has " + std::to_string(dist_.size()) + " entries, expected " +
                                                 std::to_string(n_ * n_));
    auto where = [](std::size_t i, std::size_t j) {
      return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    for (std::size_t i = 0; i < n_; ++i) {
      if (at(i, i) != 0) throw Error(ErrorKind::invalid_metric, "nonzero diagonal entry at " + where(i, i));
      for (std::size_t j = 0; j < n_; ++j) {
        if (at(i, j) != at(j, i)) throw Error(ErrorKind::invalid_metric, "asymmetric entry at " + where(i, j));
        if (i != j && at(i, j) <= 0)
          throw Error(ErrorKind::invalid_metric, "nonpositive distance at " + where(i, j));
      }
    }

    BigInt common = 1;
    for (const auto& d : dist_) {
      const BigInt& den = boost::multiprecision::denominator(d);
      common = common / boost::multiprecision::gcd(common, den) * den;
    }
    scaled_.reserve(dist_.size());
    for (const auto& d : dist_)
      scaled_.push_back(boost::multiprecision::numerator(d) * (common / boost::multiprecision::denominator(d)));

    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (scaled(i, k) > scaled(i, j) + scaled(j, k))
            throw Error(ErrorKind::invalid_metric, "triangle inequality fails for " + std::to_string(i) + "," +
                                                       std::to_string(j) + "," + std::to_string(k));
  }

  std::size_t size() const { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  const std::vector<Rational>& matrix() const { return dist_; }

  /// dist(a,b) + dist(b,c) = dist(a,c): b lies between a and c.
  bool between(std::size_t a, std::size_t b, std::size_t c) const {
    return scaled(a, b) + scaled(b, c) == scaled(a, c);
  }

  friend bool operator==(const MetricSpace& a, const MetricSpace& b) { return a.n_ == b.n_ && a.dist_ == b.dist_; }

 private:
  const BigInt& scaled(std::size_t i, std::size_t j) const { return scaled_[i * n_ + j]; }

  std::size_t n_ = 0;
  std::vector<Rational> dist_;
  std::vector<BigInt> scaled_;
};

/// {a,b,c} is a hedge iff one of its three points lies between the other two.
inline Hypergraph3 betweenness_hypergraph(const MetricSpace& ms) {
  Hypergraph3 h(ms.size());
  for (std::size_t c = 2; c < ms.size(); ++c)
    for (std::size_t b = 1; b < c; ++b)
      for (std::size_t a = 0; a < b; ++a)
        if (ms.between(a, b, c) || ms.between(b, a, c) || ms.between(a, c, b)) h.add_hedge(a, b, c);
  return h;
}

/// Line uv straight from the three betweenness clauses, without building
/// the hypergraph.
inline Line metric_line(const MetricSpace& ms, VertexId u, VertexId v) {
  if (u == v || u >= ms.size() || v >= ms.size())
    throw Error(ErrorKind::invalid_pair, "pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  Line line;
  for (VertexId p = 0; p < ms.size(); ++p)
    if (ms.between(p, u, v) || ms.between(u, p, v) || ms.between(u, v, p)) line.insert(p);
  return line;
}

/// Simple undirected graph on [0, n).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n) {}

  Graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  /// Loops and out-of-range endpoints throw; repeated edges collapse.
  void add_edge(VertexId u, VertexId v) {
    if (u >= n_ || v >= n_)
      throw Error(ErrorKind::invalid_vertex, "edge endpoint out of range for n=" + std::to_string(n_));
    if (u == v) throw Error(ErrorKind::invalid_argument, "loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  std::size_t size() const { return n_; }
  bool adjacent(VertexId u, VertexId v) const { return adj_.at(u).contains(v); }
  const std::set<VertexId>& neighbors(VertexId u) const { return adj_.at(u); }

  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < n_; ++u)
      for (auto v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::set<VertexId>> adj_;
};

/// Breadth-first layers from every vertex; unreachable entries stay -1.
inline std::vector<std::int64_t> bfs_distances(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::int64_t> dist(n * n, -1);
  for (VertexId src = 0; src < n; ++src) {
    std::queue<VertexId> frontier;
    dist[src * n + src] = 0;
    frontier.push(src);
    while (!frontier.empty()) {
      VertexId u = frontier.front();
      frontier.pop();
      for (auto w : g.neighbors(u)) {
        if (dist[src * n + w] >= 0) continue;
        dist[src * n + w] = dist[src * n + u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  auto dist = bfs_distances(g);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (dist[v] < 0) return false;
  return true;
}

/// Shortest-path metric of a connected graph.
inline MetricSpace graph_metric(const Graph& g) {
  const std::size_t n = g.size();
  auto dist = bfs_distances(g);
  std::vector<Rational> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i * n + j] < 0)
        throw Error(ErrorKind::not_connected,
                    "no path between vertices " + std::to_string(i) + " and " + std::to_string(j));
      entries[i * n + j] = dist[i * n + j];
    }
  }
  return MetricSpace(n, std::move(entries));
}

struct PointL1 {
  std::int64_t x = 0, y = 0;
  friend auto operator<=>(const PointL1&, const PointL1&) = default;
};

struct L1Metric {
  MetricSpace metric;
  /// No two points share an x- or a y-coordinate.
  bool general_position = false;
};

inline L1Metric l1_metric(const std::vector<PointL1>& points) {
  const std::size_t n = points.size();
  std::vector<Rational> entries(n * n);
  bool general = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = points[i];
      const auto& q = points[j];
      if (i != j && p == q)
        throw Error(ErrorKind::zero_distance,
                    "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      if (i != j && (p.x == q.x || p.y == q.y)) general = false;
      BigInt dx = BigInt(p.x) - q.x, dy = BigInt(p.y) - q.y;
      entries[i * n + j] = Rational(boost::multiprecision::abs(dx) + boost::multiprecision::abs(dy));
    }
  }
  return {MetricSpace(n, std::move(entries)), general};
}

}  // namespace hyperlines
