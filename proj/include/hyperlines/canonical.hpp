#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hyperlines/hypergraph.hpp"

namespace hyperlines {

/// Hedge set as a 128-bit colex mask (enough for n <= 10), minimized over
/// vertex relabelings. Ordered by the high word first.
struct CanonicalForm {
  std::size_t n = 0;
  std::array<std::uint64_t, 2> bits{0, 0};

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.bits[1] <=> b.bits[1]; c != 0) return c;
    return a.bits[0] <=> b.bits[0];
  }
};

namespace detail {

inline void check_canonical_size(std::size_t n) {
  if (n > 10) throw Error(ErrorKind::unsupported_size, "canonical forms support n <= 10");
}

inline CanonicalForm encode(const Hypergraph3& h, const std::vector<VertexId>& label) {
  CanonicalForm f;
  f.n = h.vertex_count();
  for (const auto& t : h.hedges()) {
    std::uint64_t i = colex_index(Triple::sorted(label[t.a], label[t.b], label[t.c]));
    f.bits[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return f;
}

/// Iterated colour refinement: start from vertex degrees, then split by the
/// multiset of colour pairs of the hedges through each vertex. Colours are
/// numbered by sorted signature, so the result is relabeling-invariant.
inline std::vector<std::size_t> refined_colors(const Hypergraph3& h) {
  const std::size_t n = h.vertex_count();
  std::vector<std::size_t> color(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::vector<std::size_t>> signature(n);
    for (VertexId v = 0; v < n; ++v) signature[v].push_back(color[v]);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(n);
    for (const auto& t : h.hedges()) {
      auto add = [&](VertexId v, VertexId p, VertexId q) {
        pairs[v].emplace_back(std::min(color[p], color[q]), std::max(color[p], color[q]));
      };
      add(t.a, t.b, t.c);
      add(t.b, t.a, t.c);
      add(t.c, t.a, t.b);
    }
    for (VertexId v = 0; v < n; ++v) {
      std::sort(pairs[v].begin(), pairs[v].end());
      signature[v].push_back(pairs[v].size());
      for (auto [a, b] : pairs[v]) {
        signature[v].push_back(a);
        signature[v].push_back(b);
      }
    }
    std::vector<std::vector<std::size_t>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::size_t> next(n);
    for (VertexId v = 0; v < n; ++v)
      next[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                                         distinct.begin());
    bool stable = std::set<std::size_t>(next.begin(), next.end()).size() ==
                  std::set<std::size_t>(color.begin(), color.end()).size();
    color = std::move(next);
    if (stable) break;
  }
  return color;
}

}  // namespace detail

/// Minimum encoding over all n! relabelings.
inline CanonicalForm canonical_form_bruteforce(const Hypergraph3& h) {
  const std::size_t n = h.vertex_count();
  detail::check_canonical_size(n);
  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), 0);
  CanonicalForm best = detail::encode(h, label);
  while (std::next_permutation(label.begin(), label.end())) best = std::min(best, detail::encode(h, label));
  return best;
}

/// Minimum encoding over the relabelings that send colour class k (in colour
/// order) onto the k-th block of labels. Exact, because colour classes are
/// preserved by every isomorphism.
inline CanonicalForm canonical_form_refined(const Hypergraph3& h) {
  const std::size_t n = h.vertex_count();
  detail::check_canonical_size(n);
  auto color = detail::refined_colors(h);
  std::map<std::size_t, std::vector<VertexId>> cells;
  for (VertexId v = 0; v < n; ++v) cells[color[v]].push_back(v);

  std::vector<std::vector<VertexId>> blocks;
  for (auto& [c, members] : cells) blocks.push_back(members);

  std::vector<VertexId> label(n);
  CanonicalForm best;
  bool have = false;
  // Odometer over per-block permutations.
  for (;;) {
    VertexId next_label = 0;
    for (const auto& block : blocks)
      for (auto v : block) label[v] = next_label++;
    CanonicalForm f = detail::encode(h, label);
    if (!have || f < best) {
      best = f;
      have = true;
    }
    std::size_t k = 0;
    for (; k < blocks.size(); ++k) {
      if (std::next_permutation(blocks[k].begin(), blocks[k].end())) break;
      // next_permutation wrapped this block back to sorted order; carry.
    }
    if (k == blocks.size()) break;
  }
  return best;
}

/// Equal iff the hypergraphs differ by a vertex relabeling. n <= 10.
inline CanonicalForm canonical_form(const Hypergraph3& h) {
  return h.vertex_count() <= 8 ? canonical_form_bruteforce(h) : canonical_form_refined(h);
}

}  // namespace hyperlines
