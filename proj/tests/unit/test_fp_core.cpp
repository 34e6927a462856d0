#include <gtest/gtest.h>

#include <set>

#include "../oracle.hpp"
#include "../test_util.hpp"
#include "frz/error.hpp"
#include "frz/group.hpp"
#include "frz/linalg.hpp"

using namespace frz;
using testing_util::pt;

TEST(GroupParams, RejectsCompositeAndOversized) {
  EXPECT_THROW(GroupParams(4, 1), ValidationError);
  EXPECT_THROW(GroupParams(1, 1), ValidationError);
  EXPECT_THROW(GroupParams(3, 21), CapacityError);  // 3^21 > 2^32
  EXPECT_NO_THROW(GroupParams(3, 20));
  EXPECT_EQ(GroupParams(5, 0).size(), 1u);
}

TEST(Encode, SmallExamples) {
  const GroupParams g(3, 2);
  EXPECT_EQ(pt(g, {0, 0}).index, 0u);
  EXPECT_EQ(pt(g, {1, 0}).index, 1u);
  EXPECT_EQ(pt(g, {2, 2}).index, 8u);
  const std::vector<Residue> bad{3, 0};
  EXPECT_THROW(g.encode(bad), ValidationError);
  const std::vector<Residue> short_vec{1};
  EXPECT_THROW(g.encode(short_vec), ValidationError);
}

TEST(Encode, RoundTripsEveryPoint) {
  for (auto [p, n] : {std::pair{3u, 3u}, {5u, 2u}, {7u, 2u}, {2u, 5u}}) {
    const GroupParams g(p, n);
    for (std::uint64_t i = 0; i < g.size(); ++i) {
      const Point u = g.from_index(i);
      EXPECT_EQ(g.encode(g.coords(u)), u);
    }
  }
}

TEST(LexOrder, MatchesOracleAndIsTotal) {
  const GroupParams g(5, 2);
  EXPECT_TRUE(lex_less(g.scale(4, g.unit(0)), g.unit(1)));
  EXPECT_FALSE(lex_less(g.unit(1), g.unit(1)));
  for (std::uint64_t i = 0; i < g.size(); ++i) {
    for (std::uint64_t j = 0; j < g.size(); ++j) {
      const Point u = g.from_index(i), v = g.from_index(j);
      const auto cu = g.coords(u), cv = g.coords(v);
      const bool want = oracle::lex_less(oracle::Vec(cu.begin(), cu.end()), oracle::Vec(cv.begin(), cv.end()));
      EXPECT_EQ(lex_less(u, v), want);
      EXPECT_EQ(int(lex_less(u, v)) + int(lex_less(v, u)) + int(u == v), 1);
    }
  }
}

TEST(Height, Examples) {
  const GroupParams g(3, 2);
  EXPECT_EQ(height(g.zero()), 0u);
  EXPECT_EQ(height(g.unit(1)), 3u);
  EXPECT_EQ(height(pt(g, {2, 2})), 8u);
}

TEST(Arithmetic, GroupLaws) {
  const GroupParams g(7, 2);
  for (std::uint64_t i = 0; i < g.size(); i += 3) {
    for (std::uint64_t j = 0; j < g.size(); j += 5) {
      const Point u = g.from_index(i), v = g.from_index(j);
      EXPECT_EQ(g.add(u, v), g.add(v, u));
      EXPECT_EQ(g.sub(g.add(u, v), v), u);
      EXPECT_EQ(g.add(u, g.neg(u)), g.zero());
    }
  }
  for (Residue a = 1; a < 7; ++a) EXPECT_EQ(a * g.inverse(a) % 7, 1u);
  EXPECT_EQ(g.scale(3, pt(g, {2, 5})), pt(g, {6, 1}));
}

TEST(Direction, Normalization) {
  const GroupParams g(5, 2);
  const Direction d = normalize_direction(g, pt(g, {4, 1}));
  EXPECT_EQ(d.vector(), pt(g, {4, 1}));
  EXPECT_EQ(d.pivot(), 1u);
  EXPECT_EQ(normalize_direction(g, pt(g, {3, 2})).vector(), pt(g, {4, 1}));
  const GroupParams line(3, 1);
  EXPECT_EQ(normalize_direction(line, pt(line, {2})).vector(), pt(line, {1}));
  EXPECT_EQ(normalize_direction(line, pt(line, {2})).pivot(), 0u);
  EXPECT_THROW(normalize_direction(g, g.zero()), DomainError);
}

TEST(Direction, ScalarMultiplesAgree) {
  const GroupParams g(7, 2);
  for (std::uint64_t i = 1; i < g.size(); ++i) {
    const Point v = g.from_index(i);
    for (Residue k = 1; k < 7; ++k) {
      EXPECT_EQ(normalize_direction(g, v), normalize_direction(g, g.scale(k, v)));
    }
  }
}

TEST(Direction, EnumerationCountsAndOrder) {
  EXPECT_EQ(enumerate_directions(GroupParams(3, 1)).size(), 1u);
  EXPECT_EQ(enumerate_directions(GroupParams(3, 2)).size(), 4u);
  EXPECT_EQ(enumerate_directions(GroupParams(5, 3)).size(), 31u);
  for (auto [p, n] : {std::pair{3u, 3u}, {5u, 2u}, {2u, 4u}}) {
    const GroupParams g(p, n);
    const auto dirs = enumerate_directions(g);
    const auto want = oracle::directions({int(p), int(n)});
    ASSERT_EQ(dirs.size(), want.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const auto c = g.coords(dirs[i].vector());
      EXPECT_EQ(oracle::Vec(c.begin(), c.end()), want[i]);
    }
  }
}

TEST(Line, ExampleAndCanonicalBase) {
  const GroupParams g(5, 2);
  const Direction d = normalize_direction(g, pt(g, {4, 1}));
  const Line l = line_of(g, g.unit(0), d);
  const std::set<Point> members(l.members.begin(), l.members.end());
  const std::set<Point> want{pt(g, {1, 0}), pt(g, {0, 1}), pt(g, {4, 2}), pt(g, {3, 3}), pt(g, {2, 4})};
  EXPECT_EQ(members, want);
  EXPECT_EQ(l.base, pt(g, {1, 0}));
  EXPECT_EQ(line_of(g, l.base, d).base, l.base);
  for (Residue k = 0; k < 5; ++k) {
    EXPECT_EQ(line_of(g, g.add(g.unit(0), g.scale(k, d.vector())), d).base, l.base);
  }
  EXPECT_TRUE(std::is_sorted(l.members.begin(), l.members.end()));
  for (std::size_t k = 0; k < l.members.size(); ++k) {
    EXPECT_EQ(l.members[k], g.add(l.base, g.scale(static_cast<Residue>(k), d.vector())));
  }
}

TEST(Line, PartitionsAreExact) {
  for (auto [p, n] : {std::pair{3u, 2u}, {5u, 3u}, {5u, 5u}, {7u, 2u}}) {
    const GroupParams g(p, n);
    std::size_t dir_count = 0;
    for (const Direction& d : enumerate_directions(g)) {
      if (++dir_count > 40) break;  // 5^5 has 781 directions; a prefix suffices
      const auto lines = line_partition(g, d);
      ASSERT_EQ(lines.size(), g.size() / p);
      std::vector<int> seen(g.size(), 0);
      for (const Line& l : lines) {
        ASSERT_EQ(l.members.size(), p);
        EXPECT_EQ(g.coord(l.base, d.pivot()), 0u);
        for (Point u : l.members) ++seen[u.index];
      }
      EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
  }
}

TEST(Linalg, DeterminantInverseAndEchelon) {
  Matrix m(5, 2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 1;
  m.at(1, 0) = 3;
  m.at(1, 1) = 3;
  EXPECT_EQ(m.determinant(), 3u);  // 6 - 3
  const auto inv = m.inverse();
  ASSERT_TRUE(inv.has_value());
  const Vec x{3, 1};
  EXPECT_EQ(inv->apply(m.apply(x)), x);
  Matrix singular(5, 2, 2);
  singular.at(0, 0) = 1;
  singular.at(1, 0) = 2;
  EXPECT_EQ(singular.determinant(), 0u);
  EXPECT_FALSE(singular.inverse().has_value());

  Echelon e(3, 3);
  EXPECT_TRUE(e.insert({1, 2, 0}));
  EXPECT_TRUE(e.insert({0, 1, 1}));
  EXPECT_FALSE(e.insert({1, 0, 1}));  // (1,2,0) + (0,1,1)
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.contains({2, 1, 0}));
  EXPECT_FALSE(e.contains({0, 0, 1}));
}
