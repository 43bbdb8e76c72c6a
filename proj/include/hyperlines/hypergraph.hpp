#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperlines/error.hpp"
#include "hyperlines/index_set.hpp"

namespace hyperlines {

/// Unordered 3-subset of vertices, stored ascending.
struct Triple {
  VertexId a = 0, b = 0, c = 0;

  static Triple sorted(VertexId x, VertexId y, VertexId z) {
    std::array<VertexId, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2]};
  }

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

constexpr std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Position of an ascending triple in colex order: C(c,3) + C(b,2) + C(a,1).
constexpr std::uint64_t colex_index(const Triple& t) {
  return choose(t.c, 3) + choose(t.b, 2) + t.a;
}

/// All triples on [0, n) in colex order.
inline std::vector<Triple> colex_triples(std::size_t n) {
  std::vector<Triple> out;
  out.reserve(choose(n, 3));
  for (VertexId c = 2; c < n; ++c)
    for (VertexId b = 1; b < c; ++b)
      for (VertexId a = 0; a < b; ++a) out.push_back({a, b, c});
  return out;
}

/// Bit i set iff the i-th colex triple is a hedge. Only meaningful for n <= 7.
using HedgeMask = std::uint64_t;

/// 3-uniform hypergraph on [0, n). Hedges are kept sorted and unique, and a
/// pair table maps every pair {u,v} to the set of vertices p with {u,v,p} a
/// hedge, which is all the line calculus ever asks of the structure.
class Hypergraph3 {
 public:
  Hypergraph3() = default;

  explicit Hypergraph3(std::size_t n) : n_(n), third_(n * n) {}

  /// Duplicate hedges collapse; a malformed hedge throws invalid-hedge.
  Hypergraph3(std::size_t n, std::span<const Triple> hedges) : Hypergraph3(n) {
    for (const auto& t : hedges) add_hedge(t.a, t.b, t.c);
  }

  Hypergraph3(std::size_t n, std::initializer_list<std::array<VertexId, 3>> hedges) : Hypergraph3(n) {
    for (const auto& t : hedges) add_hedge(t[0], t[1], t[2]);
  }

  static Hypergraph3 from_mask(std::size_t n, HedgeMask mask) {
    if (choose(n, 3) > 64) throw Error(ErrorKind::unsupported_size, "hedge masks need n <= 7");
    Hypergraph3 h(n);
    std::uint64_t index = 0;
    for (VertexId c = 2; c < n; ++c)
      for (VertexId b = 1; b < c; ++b)
        for (VertexId a = 0; a < b; ++a, ++index)
          if ((mask >> index) & 1u) h.insert_unchecked({a, b, c});
    return h;
  }

  void add_hedge(VertexId x, VertexId y, VertexId z) {
    if (x >= n_ || y >= n_ || z >= n_)
      throw Error(ErrorKind::invalid_hedge, "hedge vertex out of range for n=" + std::to_string(n_));
    if (x == y || y == z || x == z)
      throw Error(ErrorKind::invalid_hedge, "hedge needs three distinct vertices");
    Triple t = Triple::sorted(x, y, z);
    auto it = std::lower_bound(hedges_.begin(), hedges_.end(), t, [](const Triple& l, const Triple& r) {
      return colex_index(l) < colex_index(r);
    });
    if (it != hedges_.end() && *it == t) return;
    hedges_.insert(it, t);
    link(t);
  }

  std::size_t vertex_count() const { return n_; }
  /// Hedges in colex order.
  const std::vector<Triple>& hedges() const { return hedges_; }

  bool has_hedge(VertexId x, VertexId y, VertexId z) const {
    if (x >= n_ || y >= n_ || z >= n_ || x == y) return false;
    return third_[x * n_ + y].contains(z);
  }

  /// {p : {u,v,p} is a hedge}.
  const VertexSet& third_vertices(VertexId u, VertexId v) const { return third_[u * n_ + v]; }

  HedgeMask mask() const {
    if (choose(n_, 3) > 64) throw Error(ErrorKind::unsupported_size, "hedge masks need n <= 7");
    HedgeMask m = 0;
    for (const auto& t : hedges_) m |= HedgeMask{1} << colex_index(t);
    return m;
  }

  friend bool operator==(const Hypergraph3& a, const Hypergraph3& b) {
    return a.n_ == b.n_ && a.hedges_ == b.hedges_;
  }

 private:
  // Caller guarantees colex order and validity.
  void insert_unchecked(const Triple& t) {
    hedges_.push_back(t);
    link(t);
  }

  void link(const Triple& t) {
    auto mark = [&](VertexId u, VertexId v, VertexId p) {
      third_[u * n_ + v].insert(p);
      third_[v * n_ + u].insert(p);
    };
    mark(t.a, t.b, t.c);
    mark(t.a, t.c, t.b);
    mark(t.b, t.c, t.a);
  }

  std::size_t n_ = 0;
  std::vector<Triple> hedges_;
  std::vector<VertexSet> third_;
};

}  // namespace hyperlines
