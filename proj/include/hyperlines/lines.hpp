#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperlines/hypergraph.hpp"

namespace hyperlines {

/// A line is identified by its member set; the pair that generated it is not
/// part of its identity.
using Line = VertexSet;

inline void check_vertex(const Hypergraph3& h, VertexId x) {
  if (x >= h.vertex_count())
    throw Error(ErrorKind::invalid_vertex,
                "vertex " + std::to_string(x) + " out of range for n=" + std::to_string(h.vertex_count()));
}

/// {u,v} together with every p such that {u,v,p} is a hedge.
inline Line line_of_pair(const Hypergraph3& h, VertexId u, VertexId v) {
  if (u == v || u >= h.vertex_count() || v >= h.vertex_count())
    throw Error(ErrorKind::invalid_pair, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                             ") is not a pair of distinct vertices of n=" +
                                             std::to_string(h.vertex_count()));
  Line line = h.third_vertices(u, v);
  line.insert(u);
  line.insert(v);
  return line;
}

/// Distinct lines of a hypergraph in lexicographic order of member lists,
/// together with the index of the line generated by every pair and the
/// per-vertex families alpha(x) (lines through x) and beta(x) (lines xw).
class LineStructure {
 public:
  explicit LineStructure(const Hypergraph3& h) : n_(h.vertex_count()), pair_line_(n_ * n_, kNone) {
    if (n_ < 2) return;

    std::unordered_map<Line, std::size_t, IndexSetHash<VertexTag>> index;
    std::vector<Line> found;
    std::vector<std::size_t> provisional(n_ * n_, kNone);
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v = u + 1; v < n_; ++v) {
        Line line = line_of_pair(h, u, v);
        auto [it, inserted] = index.try_emplace(line, found.size());
        if (inserted) found.push_back(std::move(line));
        provisional[u * n_ + v] = provisional[v * n_ + u] = it->second;
      }
    }

    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
    std::vector<std::size_t> rank(found.size());
    lines_.reserve(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      rank[order[i]] = i;
      lines_.push_back(std::move(found[order[i]]));
    }
    for (std::size_t i = 0; i < pair_line_.size(); ++i)
      if (provisional[i] != kNone) pair_line_[i] = rank[provisional[i]];

    alpha_.resize(n_);
    beta_.resize(n_);
    const Line everything = VertexSet::prefix(n_);
    for (std::size_t id = 0; id < lines_.size(); ++id) {
      lines_[id].for_each([&](std::size_t x) { alpha_[x].insert(id); });
      if (lines_[id] == everything) universal_ = true;
    }
    for (VertexId x = 0; x < n_; ++x)
      for (VertexId w = 0; w < n_; ++w)
        if (w != x) beta_[x].insert(pair_line_[x * n_ + w]);
  }

  std::size_t vertex_count() const { return n_; }
  /// m, the number of distinct lines.
  std::size_t line_count() const { return lines_.size(); }
  const std::vector<Line>& lines() const { return lines_; }
  const Line& line(std::size_t id) const { return lines_.at(id); }
  bool has_universal_line() const { return universal_; }

  std::size_t line_id(VertexId u, VertexId v) const {
    if (u == v || u >= n_ || v >= n_)
      throw Error(ErrorKind::invalid_pair, "pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return pair_line_[u * n_ + v];
  }

  const LineIndexSet& alpha(VertexId x) const { return alpha_.at(check(x)); }
  const LineIndexSet& beta(VertexId x) const { return beta_.at(check(x)); }

  /// Union of beta over s.
  LineIndexSet span(const VertexSet& s) const {
    LineIndexSet out;
    s.for_each([&](std::size_t x) { out |= beta(x); });
    return out;
  }

  std::vector<Line> to_lines(const LineIndexSet& ids) const {
    std::vector<Line> out;
    ids.for_each([&](std::size_t id) { out.push_back(lines_[id]); });
    return out;
  }

  std::optional<std::size_t> find(const Line& line) const {
    auto it = std::lower_bound(lines_.begin(), lines_.end(), line);
    if (it == lines_.end() || *it != line) return std::nullopt;
    return static_cast<std::size_t>(it - lines_.begin());
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  VertexId check(VertexId x) const {
    if (x >= n_)
      throw Error(ErrorKind::invalid_vertex,
                  "vertex " + std::to_string(x) + " out of range for n=" + std::to_string(n_));
    return x;
  }

  std::size_t n_ = 0;
  std::vector<Line> lines_;
  std::vector<std::size_t> pair_line_;
  std::vector<LineIndexSet> alpha_;
  std::vector<LineIndexSet> beta_;
  bool universal_ = false;
};

/// Deduplicated, lexicographically sorted line set. Empty when n < 2.
inline std::vector<Line> all_lines(const Hypergraph3& h) { return LineStructure(h).lines(); }

inline bool has_universal_line(const Hypergraph3& h) { return LineStructure(h).has_universal_line(); }

inline std::vector<Line> alpha(const Hypergraph3& h, VertexId x) {
  check_vertex(h, x);
  LineStructure ls(h);
  return ls.to_lines(ls.alpha(x));
}

inline std::vector<Line> beta(const Hypergraph3& h, VertexId x) {
  check_vertex(h, x);
  LineStructure ls(h);
  return ls.to_lines(ls.beta(x));
}

inline std::vector<Line> span(const Hypergraph3& h, const VertexSet& s) {
  s.for_each([&](std::size_t x) { check_vertex(h, x); });
  LineStructure ls(h);
  return ls.to_lines(ls.span(s));
}

/// Line count and universality without building the alpha/beta tables; the
/// hot path of exhaustive searches. For n <= 64 every line is one word.
struct LineSummary {
  std::size_t m = 0;
  bool universal = false;

  friend bool operator==(const LineSummary&, const LineSummary&) = default;
};

inline LineSummary summarize_lines(const Hypergraph3& h) {
  const std::size_t n = h.vertex_count();
  LineSummary out;
  if (n < 2) return out;
  if (n <= 64) {
    std::vector<std::uint64_t> words;
    words.reserve(n * (n - 1) / 2);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        words.push_back(h.third_vertices(u, v).word(0) | (std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    const std::uint64_t everything = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    out.m = words.size();
    out.universal = std::binary_search(words.begin(), words.end(), everything);
    return out;
  }
  LineStructure ls(h);
  out.m = ls.line_count();
  out.universal = ls.has_universal_line();
  return out;
}

}  // namespace hyperlines
