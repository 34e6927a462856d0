#include <gtest/gtest.h>

#include "../oracle.hpp"
#include "../test_util.hpp"
#include "frz/compress.hpp"
#include "frz/error.hpp"
#include "frz/rng.hpp"
#include "frz/setops.hpp"

using namespace frz;
using testing_util::pt;
using testing_util::set_of;

namespace {

const DenseSet kExample = set_of(5, 2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}});
const DenseSet kExamplePrime = set_of(5, 2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}});

std::vector<Point> as_points(const GroupParams& g, std::initializer_list<std::initializer_list<Residue>> c) {
  std::vector<Point> out;
  for (const auto& v : c) out.push_back(pt(g, v));
  return out;
}

}  // namespace

TEST(InitialSegment, Examples) {
  const GroupParams g(5, 2);
  const Line l = line_of(g, g.zero(), normalize_direction(g, g.unit(0)));
  EXPECT_TRUE(initial_segment(0, l).empty());
  EXPECT_EQ(initial_segment(5, l), l.members);
  EXPECT_EQ(initial_segment(3, l), as_points(g, {{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_THROW(initial_segment(6, l), DomainError);
}

TEST(InitialSegment, PerLineAdditionIdentity) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const GroupParams g(p, 2);
    for (const Direction& d : enumerate_directions(g)) {
      const auto lines = line_partition(g, d);
      for (const Line& lu : lines) {
        for (const Line& lw : lines) {
          for (std::uint32_t c = 1; c <= p; ++c) {
            for (std::uint32_t e = 1; e <= p; ++e) {
              DenseSet su(g), sw(g);
              for (Point x : initial_segment(c, lu)) su.insert(x);
              for (Point x : initial_segment(e, lw)) sw.insert(x);
              const auto got = initial_segment_sum(g, lu, c, lw, e);
              ASSERT_EQ(sumset(su, sw).points(), DenseSet::from_points(g, got).points());
              ASSERT_EQ(got.size(), std::min(c + e - 1, p));
            }
          }
        }
      }
    }
  }
  const GroupParams g(3, 2);
  const Line a = line_of(g, g.zero(), normalize_direction(g, g.unit(0)));
  const Line b = line_of(g, g.zero(), normalize_direction(g, g.unit(1)));
  EXPECT_THROW(initial_segment_sum(g, a, 1, b, 1), ValidationError);
  EXPECT_THROW(initial_segment_sum(g, a, 0, a, 1), DomainError);
}

TEST(Compress, PaperExample) {
  const GroupParams g(5, 2);
  const Direction d = normalize_direction(g, g.sub(g.unit(1), g.unit(0)));
  EXPECT_EQ(d.vector(), pt(g, {4, 1}));
  EXPECT_EQ(compress(kExamplePrime, d), set_of(5, 2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}}));
  EXPECT_FALSE(is_compressed(kExamplePrime, d));
}

TEST(Compress, MatchesOracleAndBasicLaws) {
  for (auto [p, n] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}, {2u, 4u}, {7u, 2u}}) {
    const GroupParams g(p, n);
    const oracle::Space s{int(p), int(n)};
    const LineTableCache cache(g);
    const auto odirs = oracle::directions(s);
    for (std::uint64_t t = 0; t < 20; ++t) {
      const CounterRng rng(17, t);
      const DenseSet a = sample_set(g, rng, rng.uniform(0), 1);
      for (std::size_t i = 0; i < cache.directions().size(); ++i) {
        const DenseSet c = compress(a, cache.table(i));
        ASSERT_EQ(oracle::from_dense(c), oracle::compress(s, oracle::from_dense(a), odirs[i]));
        EXPECT_EQ(c.size(), a.size());
        EXPECT_EQ(compress(c, cache.table(i)), c);
        EXPECT_TRUE(is_compressed(c, cache.table(i)));
        EXPECT_EQ(is_compressed(a, cache.table(i)), c == a);
        if (!(c == a)) EXPECT_LT(potential(c), potential(a));
      }
    }
  }
}

TEST(Compress, UnionOfFullLinesIsFixed) {
  const GroupParams g(5, 2);
  const Direction d = normalize_direction(g, pt(g, {2, 1}));
  DenseSet a(g);
  for (const Line& l : line_partition(g, d)) {
    if (l.base.index % 2 == 0) {
      for (Point x : l.members) a.insert(x);
    }
  }
  EXPECT_TRUE(is_compressed(a, d));
}

TEST(Compress, SumsetLemmaSampled) {
  for (auto [p, n] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 3u}, {7u, 1u}}) {
    const GroupParams g(p, n);
    const LineTableCache cache(g);
    for (std::uint64_t t = 0; t < 200; ++t) {
      const CounterRng rng(23, t);
      const DenseSet a = sample_set(g, rng, rng.uniform(0), 3);
      const DenseSet b = sample_set(g, rng, rng.uniform(1), 3 + g.size());
      const LineTable& table = cache.table(rng.below(2, cache.directions().size()));
      const DenseSet ca = compress(a, table), cb = compress(b, table);
      EXPECT_TRUE(sumset(ca, cb).is_subset_of(compress(sumset(a, b), table)));
      EXPECT_LE(sumset(ca, ca).size(), sumset(a, a).size());
    }
  }
}

TEST(ECompressed, PaperExample) {
  EXPECT_TRUE(is_E_compressed(kExample));
  EXPECT_FALSE(is_E_compressed(kExamplePrime));
  // The example set is fixed by every compression that keeps E.
  const GroupParams g(5, 2);
  const DenseSet e = basis_set(g);
  std::size_t keeping = 0;
  for (const Direction& d : enumerate_directions(g)) {
    const DenseSet c = compress(kExample, d);
    if (e.is_subset_of(c)) {
      ++keeping;
      EXPECT_TRUE(is_compressed(kExample, d));
    }
  }
  EXPECT_EQ(keeping, 5u);
  EXPECT_TRUE(is_E_compressed(basis_set(GroupParams(3, 3))));
  EXPECT_FALSE(is_E_compressed(set_of(3, 2, {{0, 0}, {1, 0}})));
}

TEST(ECompressed, MatchesOracleExhaustively) {
  for (auto [p, n] : {std::pair{3u, 2u}, {2u, 3u}, {3u, 1u}, {5u, 1u}}) {
    const GroupParams g(p, n);
    const oracle::Space s{int(p), int(n)};
    const LineTableCache cache(g);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << g.size()); ++w) {
      const DenseSet a = DenseSet::from_word(g, w);
      ASSERT_EQ(is_E_compressed(a, cache), oracle::is_E_compressed(s, oracle::from_dense(a))) << w;
    }
  }
}

TEST(ECompressed, ImpliesDownSet) {
  const GroupParams g(3, 2);
  for (std::uint64_t w = 0; w < 512; ++w) {
    const DenseSet a = DenseSet::from_word(g, w);
    if (!is_E_compressed(a)) continue;
    a.for_each([&](Point u) {
      for (std::uint32_t i = 0; i < 2; ++i) {
        if (g.coord(u, i) > 0) EXPECT_TRUE(a.contains(g.sub(u, g.unit(i))));
      }
    });
  }
}

TEST(Reduce, RequiresE) { EXPECT_THROW(reduce(set_of(3, 2, {{0, 0}, {1, 0}, {2, 2}})), PreconditionError); }

TEST(Reduce, FixedPointsTakeNoSteps) {
  EXPECT_TRUE(reduce(kExample).trace.steps.empty());
  EXPECT_TRUE(reduce(basis_set(GroupParams(5, 3))).trace.steps.empty());
}

// The sweep visits directions in ascending order, so (2,1) is applied before
// (4,1). C_(4,1)(A') = {0, e1, 2e1, 3e1, e2, e1+e2} is not E-compressed:
// C_(2,1) still moves e1+e2 down to 4e1 with E kept.
TEST(Reduce, ExamplePrimeTrace) {
  const GroupParams g(5, 2);
  const DenseSet after41 = compress(kExamplePrime, normalize_direction(g, pt(g, {4, 1})));
  EXPECT_FALSE(is_E_compressed(after41));
  EXPECT_EQ(compress(after41, normalize_direction(g, pt(g, {2, 1}))),
            set_of(5, 2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {0, 1}}));

  std::vector<DenseSet> seen;
  const ReduceResult r = reduce(kExamplePrime, [&](const DenseSet& s, const CompressionStep&) { seen.push_back(s); });
  ASSERT_EQ(r.trace.steps.size(), 3u);
  EXPECT_EQ(r.trace.steps[0].direction.vector(), pt(g, {2, 1}));
  EXPECT_EQ(r.trace.steps[1].direction.vector(), pt(g, {1, 0}));
  EXPECT_EQ(r.trace.steps[2].direction.vector(), pt(g, {2, 1}));
  EXPECT_EQ(r.set, set_of(5, 2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {0, 1}}));
  EXPECT_TRUE(is_E_compressed(r.set));
  EXPECT_EQ(seen.size(), 3u);
  EXPECT_EQ(seen.back(), r.set);
  EXPECT_EQ(r.trace.initial_potential, 0u + 1 + 2 + 3 + 5 + 10);
  EXPECT_EQ(r.trace.final_potential, 0u + 1 + 2 + 3 + 4 + 5);
  for (const auto& s : r.trace.steps) {
    EXPECT_LT(s.potential_after, s.potential_before);
    EXPECT_EQ(s.moved, 1u);
  }
}

TEST(Reduce, PropertiesOnRandomSets) {
  for (auto [p, n] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}, {2u, 4u}}) {
    const GroupParams g(p, n);
    const DenseSet e = basis_set(g);
    const LineTableCache cache(g);
    for (std::uint64_t t = 0; t < 60; ++t) {
      const CounterRng rng(41, t);
      DenseSet a = sample_set(g, rng, 0.5 * rng.uniform(0), 1);
      a |= e;
      const ReduceResult r = reduce(a, cache);
      EXPECT_TRUE(is_E_compressed(r.set, cache));
      EXPECT_EQ(r.set.size(), a.size());
      EXPECT_LE(sumset(r.set, r.set).size(), sumset(a, a).size());
      EXPECT_EQ(affine_span(r.set).size, g.size());
      EXPECT_LE(r.trace.steps.size(), potential(a));
      std::uint64_t prev = r.trace.initial_potential;
      for (const auto& s : r.trace.steps) {
        EXPECT_EQ(s.potential_before, prev);
        EXPECT_LT(s.potential_after, s.potential_before);
        prev = s.potential_after;
      }
      EXPECT_EQ(prev, r.trace.final_potential);
      EXPECT_EQ(potential(r.set), r.trace.final_potential);
    }
  }
}
