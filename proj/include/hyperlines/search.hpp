#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hyperlines/canonical.hpp"
#include "hyperlines/exact.hpp"
#include "hyperlines/generators.hpp"
#include "hyperlines/lines.hpp"
#include "hyperlines/reference.hpp"

namespace hyperlines {

enum class Constraint { none, no_universal, dbe_two_or_three, dbe_two };
enum class DbeVariant { two_or_three, two };
enum class SearchMode { exhaustive, sampled };
enum class LineEngine { optimized, naive };

constexpr std::string_view to_string(Constraint c) {
  switch (c) {
    case Constraint::none: return "none";
    case Constraint::no_universal: return "no-universal";
    case Constraint::dbe_two_or_three: return "dbe-two-or-three";
    case Constraint::dbe_two: return "dbe-two";
  }
  return "?";
}

constexpr std::string_view to_string(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "sampled"; }
constexpr std::string_view to_string(LineEngine e) { return e == LineEngine::optimized ? "optimized" : "naive"; }

/// Contiguous slice [index*total/count, (index+1)*total/count) of an index range.
struct Shard {
  std::uint64_t index = 0;
  std::uint64_t count = 1;

  std::pair<std::uint64_t, std::uint64_t> range(std::uint64_t total) const {
    if (count == 0 || index >= count)
      throw Error(ErrorKind::invalid_argument,
                  "shard " + std::to_string(index) + "/" + std::to_string(count) + " is not valid");
    auto at = [&](std::uint64_t i) {
      return static_cast<std::uint64_t>(boost::multiprecision::uint128_t(total) * i / count);
    };
    return {at(index), at(index + 1)};
  }

  friend bool operator==(const Shard&, const Shard&) = default;
};

/// Every 4-subset carries a hedge count outside {2,3} (two_or_three) or
/// different from 2 (two). Vacuous for n < 4.
inline bool dbe_condition(const Hypergraph3& h, DbeVariant variant) {
  const std::size_t n = h.vertex_count();
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c)
        for (VertexId d = c + 1; d < n; ++d) {
          int count = h.has_hedge(a, b, c) + h.has_hedge(a, b, d) + h.has_hedge(a, c, d) + h.has_hedge(b, c, d);
          if (count == 2 || (variant == DbeVariant::two_or_three && count == 3)) return false;
        }
  return true;
}

struct SearchResult {
  std::size_t n = 0;
  Constraint constraint = Constraint::no_universal;
  SearchMode mode = SearchMode::exhaustive;
  /// Instances in the population (those satisfying the constraint).
  std::uint64_t examined = 0;
  /// Sampled mode only: trials that found no qualifying instance.
  std::uint64_t skipped = 0;
  std::optional<std::size_t> min_m;
  /// Enumeration index (exhaustive) or trial number (sampled) of the witness.
  std::optional<std::uint64_t> argmin_index;
  std::optional<Hypergraph3> argmin;
  std::map<std::size_t, std::uint64_t> histogram;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Commutative merge: histograms add, minimum wins, ties go to the smaller index.
inline SearchResult merge(SearchResult a, const SearchResult& b) {
  a.examined += b.examined;
  a.skipped += b.skipped;
  for (auto [m, count] : b.histogram) a.histogram[m] += count;
  if (b.min_m && (!a.min_m || *b.min_m < *a.min_m || (*b.min_m == *a.min_m && *b.argmin_index < *a.argmin_index))) {
    a.min_m = b.min_m;
    a.argmin_index = b.argmin_index;
    a.argmin = b.argmin;
  }
  return a;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

namespace detail {

inline LineSummary summarize(const Hypergraph3& h, LineEngine engine) {
  if (engine == LineEngine::optimized) return summarize_lines(h);
  auto lines = reference::all_lines(h);
  return {lines.size(), reference::has_universal_line(lines, h.vertex_count())};
}

inline bool satisfies(const Hypergraph3& h, Constraint c) {
  switch (c) {
    case Constraint::none:
    case Constraint::no_universal: return true;
    case Constraint::dbe_two_or_three: return dbe_condition(h, DbeVariant::two_or_three);
    case Constraint::dbe_two: return dbe_condition(h, DbeVariant::two);
  }
  return false;
}

/// Folds one instance into `result`; returns false if it is outside the population.
inline bool record(SearchResult& result, const Hypergraph3& h, std::uint64_t index, LineEngine engine) {
  if (!satisfies(h, result.constraint)) return false;
  LineSummary s = summarize(h, engine);
  if (s.universal && result.constraint != Constraint::none) return false;
  // m >= lg n on every instance without a universal line; a miss is a bug.
  if (!s.universal && h.vertex_count() >= 2 && pow2(s.m) < h.vertex_count())
    throw Error(ErrorKind::internal, "m < lg n on an instance without a universal line (index " +
                                         std::to_string(index) + ")");
  ++result.examined;
  ++result.histogram[s.m];
  if (!result.min_m || s.m < *result.min_m) {
    result.min_m = s.m;
    result.argmin_index = index;
    result.argmin = h;
  }
  return true;
}

}  // namespace detail

inline void check_enumeration_size(std::size_t n) {
  if (n < 2 || n > 7)
    throw Error(ErrorKind::unsupported_size, "exhaustive enumeration supports 2 <= n <= 7, got " + std::to_string(n));
}

/// 2^C(n,3).
inline std::uint64_t population_size(std::size_t n) {
  check_enumeration_size(n);
  return std::uint64_t{1} << choose(n, 3);
}

/// Calls f(mask, hypergraph) for every hedge subset in the shard, in
/// increasing mask order.
template <class F>
void enumerate_hypergraphs(std::size_t n, Shard shard, F&& f) {
  auto [begin, end] = shard.range(population_size(n));
  for (std::uint64_t mask = begin; mask < end; ++mask) f(mask, Hypergraph3::from_mask(n, mask));
}

struct ExhaustiveOptions {
  LineEngine engine = LineEngine::optimized;
  Shard shard{};
  /// Count only instances whose mask is the minimum over their isomorphism class.
  bool iso_reject = false;
};

/// Resumable state of an exhaustive run over one shard.
struct Checkpoint {
  std::size_t n = 0;
  Constraint constraint = Constraint::no_universal;
  ExhaustiveOptions options;
  std::uint64_t next_index = 0;
  SearchResult partial;
};

/// Exhaustive run advanced in bounded steps so callers can checkpoint.
class ExhaustiveRun {
 public:
  ExhaustiveRun(std::size_t n, Constraint constraint, ExhaustiveOptions options = {}) {
    auto [begin, end] = options.shard.range(population_size(n));
    state_.n = n;
    state_.constraint = constraint;
    state_.options = options;
    state_.next_index = begin;
    state_.partial.n = n;
    state_.partial.constraint = constraint;
    state_.partial.mode = SearchMode::exhaustive;
    end_ = end;
  }

  explicit ExhaustiveRun(Checkpoint resume) : ExhaustiveRun(resume.n, resume.constraint, resume.options) {
    if (resume.next_index > end_)
      throw Error(ErrorKind::invalid_argument, "checkpoint index beyond the end of its shard");
    state_ = std::move(resume);
  }

  /// Processes up to `budget` instances; returns true once the shard is done.
  bool step(std::uint64_t budget) {
    for (; budget > 0 && state_.next_index < end_; --budget, ++state_.next_index) {
      Hypergraph3 h = Hypergraph3::from_mask(state_.n, state_.next_index);
      if (state_.options.iso_reject && canonical_form(h).bits[0] != state_.next_index) continue;
      detail::record(state_.partial, h, state_.next_index, state_.options.engine);
    }
    return done();
  }

  bool done() const { return state_.next_index >= end_; }
  const Checkpoint& checkpoint() const { return state_; }
  const SearchResult& result() const { return state_.partial; }

 private:
  Checkpoint state_;
  std::uint64_t end_ = 0;
};

/// Minimum line count over all hypergraphs on n vertices in the constrained
/// population (no universal line unless the constraint is `none`).
inline SearchResult min_lines(std::size_t n, Constraint constraint, ExhaustiveOptions options = {}) {
  ExhaustiveRun run(n, constraint, options);
  run.step(~std::uint64_t{0});
  return run.result();
}

struct SearchTask {
  std::size_t n = 0;
  SearchMode mode = SearchMode::sampled;
  Constraint constraint = Constraint::no_universal;
  std::uint64_t seed = 0;
  Shard shard{};
  LineEngine engine = LineEngine::optimized;
};

/// Trial i draws from its own generator seeded by (seed, i) and retries up to
/// `attempts_per_trial` times for an instance in the population, so the
/// union over shards does not depend on the shard count. Never claims
/// global minimality.
inline SearchResult sampled_search(const SearchTask& task, std::uint64_t trials,
                                   std::uint64_t attempts_per_trial = 1000) {
  if (trials < 1) throw Error(ErrorKind::invalid_argument, "sampled search needs trials >= 1");
  require_size(task.n);
  SearchResult result;
  result.n = task.n;
  result.constraint = task.constraint;
  result.mode = SearchMode::sampled;
  auto [begin, end] = task.shard.range(trials);
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    Rng rng(splitmix64(task.seed ^ splitmix64(trial)));
    bool found = false;
    for (std::uint64_t attempt = 0; attempt < attempts_per_trial && !found; ++attempt)
      found = detail::record(result, random_hypergraph(task.n, rng), trial, task.engine);
    if (!found) ++result.skipped;
  }
  return result;
}

}  // namespace hyperlines
