#include <gtest/gtest.h>

#include "hyperlines/hyperlines.hpp"
#include "support/oracles.hpp"

using namespace hyperlines;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

/// Minimum line count straight from the definition, no library line engine.
std::optional<std::size_t> brute_min_lines(std::size_t n) {
  std::optional<std::size_t> best;
  const std::uint64_t total = std::uint64_t{1} << choose(n, 3);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto lines = oracle::lines_by_definition(Hypergraph3::from_mask(n, mask));
    bool universal = std::any_of(lines.begin(), lines.end(), [&](const auto& l) { return l.size() == n; });
    if (universal) continue;
    if (!best || lines.size() < *best) best = lines.size();
  }
  return best;
}

}  // namespace

TEST(Enumerate, PopulationSizes) {
  EXPECT_EQ(population_size(3), 2u);
  EXPECT_EQ(population_size(4), 16u);
  EXPECT_EQ(population_size(5), 1024u);
  EXPECT_EQ(kind_of([] { population_size(8); }), ErrorKind::unsupported_size);
  EXPECT_EQ(kind_of([] { population_size(1); }), ErrorKind::unsupported_size);
}

TEST(Enumerate, ShardsExactlyCover) {
  for (std::uint64_t k : {1u, 3u, 7u, 16u}) {
    std::vector<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < k; ++i)
      enumerate_hypergraphs(5, Shard{i, k}, [&](HedgeMask mask, const Hypergraph3& h) {
        EXPECT_EQ(h.mask(), mask);
        seen.push_back(mask);
      });
    ASSERT_EQ(seen.size(), 1024u);
    for (std::uint64_t j = 0; j < seen.size(); ++j) ASSERT_EQ(seen[j], j);
  }
  EXPECT_EQ(kind_of([] { Shard{2, 2}.range(10); }), ErrorKind::invalid_argument);
}

TEST(Dbe, Examples) {
  Hypergraph3 empty(5);
  EXPECT_TRUE(dbe_condition(empty, DbeVariant::two_or_three));
  EXPECT_TRUE(dbe_condition(empty, DbeVariant::two));
  Hypergraph3 two(4, {{0, 1, 2}, {0, 1, 3}});
  EXPECT_FALSE(dbe_condition(two, DbeVariant::two_or_three));
  EXPECT_FALSE(dbe_condition(two, DbeVariant::two));
  Hypergraph3 three(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  EXPECT_FALSE(dbe_condition(three, DbeVariant::two_or_three));
  EXPECT_TRUE(dbe_condition(three, DbeVariant::two));
  EXPECT_TRUE(dbe_condition(Hypergraph3(3, {{0, 1, 2}}), DbeVariant::two));
}

TEST(MinLines, SmallValuesMatchBruteForce) {
  auto r3 = min_lines(3, Constraint::no_universal);
  auto r4 = min_lines(4, Constraint::no_universal);
  EXPECT_EQ(r3.min_m, 3u);
  EXPECT_EQ(r4.min_m, 4u);
  EXPECT_EQ(r3.min_m, brute_min_lines(3));
  EXPECT_EQ(r4.min_m, brute_min_lines(4));
  EXPECT_EQ(min_lines(5, Constraint::no_universal).min_m, brute_min_lines(5));
}

TEST(MinLines, HistogramAndWitnessConsistent) {
  auto r = min_lines(5, Constraint::no_universal);
  std::uint64_t total = 0;
  for (auto [m, count] : r.histogram) total += count;
  EXPECT_EQ(total, r.examined);
  ASSERT_TRUE(r.argmin.has_value());
  EXPECT_EQ(r.argmin->mask(), *r.argmin_index);
  auto summary = summarize_lines(*r.argmin);
  EXPECT_EQ(summary.m, *r.min_m);
  EXPECT_FALSE(summary.universal);
  EXPECT_GE(*r.min_m, 3u);
}

TEST(MinLines, NoneConstraintIncludesEverything) {
  auto r = min_lines(4, Constraint::none);
  EXPECT_EQ(r.examined, 16u);
  EXPECT_EQ(r.min_m, 1u);
}

TEST(MinLines, EnginesAgree) {
  for (auto c : {Constraint::no_universal, Constraint::dbe_two, Constraint::dbe_two_or_three, Constraint::none}) {
    auto fast = min_lines(5, c, {LineEngine::optimized});
    auto slow = min_lines(5, c, {LineEngine::naive});
    EXPECT_EQ(fast, slow) << to_string(c);
  }
}

TEST(Exhaustive, StepAndResumeGiveSameResult) {
  auto whole = min_lines(5, Constraint::no_universal);
  ExhaustiveRun run(5, Constraint::no_universal);
  int steps = 0;
  while (!run.step(97)) {
    ExhaustiveRun resumed(run.checkpoint());
    run = resumed;
    ++steps;
  }
  EXPECT_GT(steps, 5);
  EXPECT_EQ(run.result(), whole);
}

TEST(Exhaustive, ShardMergeIsIndependentOfCount) {
  auto whole = min_lines(5, Constraint::dbe_two_or_three);
  for (std::uint64_t k : {4u, 16u}) {
    SearchResult merged;
    merged.n = 5;
    merged.constraint = Constraint::dbe_two_or_three;
    for (std::uint64_t i = 0; i < k; ++i)
      merged = merge(merged, min_lines(5, Constraint::dbe_two_or_three, {LineEngine::optimized, Shard{i, k}}));
    EXPECT_EQ(merged, whole);
  }
}

TEST(Exhaustive, IsoRejectKeepsMinimum) {
  auto all = min_lines(5, Constraint::no_universal);
  auto reps = min_lines(5, Constraint::no_universal, {LineEngine::optimized, Shard{}, true});
  EXPECT_LT(reps.examined, all.examined);
  EXPECT_EQ(reps.min_m, all.min_m);
  std::set<std::size_t> ms_all, ms_reps;
  for (auto [m, c] : all.histogram) ms_all.insert(m);
  for (auto [m, c] : reps.histogram) ms_reps.insert(m);
  EXPECT_EQ(ms_all, ms_reps);
}

TEST(Sampled, Deterministic) {
  SearchTask task{10, SearchMode::sampled, Constraint::no_universal, 7};
  auto a = sampled_search(task, 200);
  auto b = sampled_search(task, 200);
  EXPECT_EQ(a, b);
  ASSERT_TRUE(a.min_m.has_value());
  EXPECT_GE(*a.min_m, 4u);  // ceil(lg 10)
}

TEST(Sampled, SingleTrialHistogram) {
  auto r = sampled_search({9, SearchMode::sampled, Constraint::no_universal, 3}, 1);
  std::uint64_t total = 0;
  for (auto [m, c] : r.histogram) total += c;
  EXPECT_EQ(total + r.skipped, 1u);
  EXPECT_LE(r.histogram.size(), 1u);
}

TEST(Sampled, ShardsMergeToSingleRun) {
  SearchTask task{8, SearchMode::sampled, Constraint::no_universal, 99};
  auto whole = sampled_search(task, 160);
  for (std::uint64_t k : {4u, 16u}) {
    SearchResult merged;
    merged.n = 8;
    merged.constraint = Constraint::no_universal;
    merged.mode = SearchMode::sampled;
    for (std::uint64_t i = 0; i < k; ++i) {
      task.shard = {i, k};
      merged = merge(merged, sampled_search(task, 160));
    }
    EXPECT_EQ(merged, whole);
  }
}

TEST(Sampled, NotBelowExhaustiveMinimum) {
  auto exact = min_lines(6, Constraint::no_universal);
  auto sampled = sampled_search({6, SearchMode::sampled, Constraint::no_universal, 1}, 500);
  ASSERT_TRUE(sampled.min_m.has_value());
  EXPECT_GE(*sampled.min_m, *exact.min_m);
}

TEST(Sampled, RejectsZeroTrials) {
  EXPECT_EQ(kind_of([] { sampled_search({6}, 0); }), ErrorKind::invalid_argument);
}

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical_form(Hypergraph3(4, {{0, 1, 2}})), canonical_form(Hypergraph3(4, {{1, 2, 3}})));
  EXPECT_NE(canonical_form(Hypergraph3(4, {{0, 1, 2}})), canonical_form(Hypergraph3(4)));
  EXPECT_EQ(kind_of([] { canonical_form(Hypergraph3(11)); }), ErrorKind::unsupported_size);
}

TEST(Canonical, ClassCountsMatchPairwiseOracle) {
  for (std::size_t n : {4u, 5u}) {
    std::vector<Hypergraph3> population;
    std::set<CanonicalForm> forms;
    enumerate_hypergraphs(n, Shard{}, [&](HedgeMask, Hypergraph3 h) {
      forms.insert(canonical_form(h));
      population.push_back(std::move(h));
    });
    EXPECT_EQ(forms.size(), oracle::count_classes(population)) << "n=" << n;
  }
}

TEST(Canonical, RefinedHandlesNineAndTen) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 9 + rng.below(2);
    auto h = random_hypergraph(n, rng);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    Hypergraph3 g(n);
    for (const auto& t : h.hedges()) g.add_hedge(perm[t.a], perm[t.b], perm[t.c]);
    ASSERT_EQ(canonical_form(h), canonical_form(g));
  }
}
