#include <gtest/gtest.h>

#include <filesystem>

#include "../test_util.hpp"
#include "frz/io.hpp"
#include "frz/rng.hpp"

using namespace frz;
using testing_util::set_of;

TEST(ParsePoint, TupleAndIndexForms) {
  const GroupParams g(5, 2);
  EXPECT_EQ(parse_point(g, "(3,1)"), testing_util::pt(g, {3, 1}));
  EXPECT_EQ(parse_point(g, " ( 3 , 1 ) "), testing_util::pt(g, {3, 1}));
  EXPECT_EQ(parse_point(g, "8"), testing_util::pt(g, {3, 1}));
  EXPECT_EQ(format_point(g, Point{8}), "(3,1)");
  EXPECT_THROW(parse_point(g, "(5,0)"), ValidationError);
  EXPECT_THROW(parse_point(g, "(1,2,3)"), ValidationError);
  EXPECT_THROW(parse_point(g, "(1,)"), ValidationError);
  EXPECT_THROW(parse_point(g, "(1,2"), ValidationError);
  EXPECT_THROW(parse_point(g, "25"), ValidationError);
  EXPECT_THROW(parse_point(g, "x"), ValidationError);
}

TEST(ParseSet, CommentsBlankLinesAndDuplicates) {
  const DenseSet a = parse_set("# an example\n\n5 2   # header\n(0,0)\n(3,0) # note\n5\n(0,1)\n");
  EXPECT_EQ(a, set_of(5, 2, {{0, 0}, {3, 0}, {0, 1}}));
}

TEST(ParseSet, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_set(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("# c\n5 2\n(0,0)\n(7,0)\n"), 4u);
  EXPECT_EQ(line_of("5\n(0,0)\n"), 1u);
  EXPECT_EQ(line_of("4 2\n"), 1u);
  EXPECT_EQ(line_of("3 2\n(0,0)\n\n(1,1,1)\n"), 4u);
  EXPECT_EQ(line_of("# only a comment\n"), 1u);
  EXPECT_THROW(parse_set("3 2 extra\n"), ValidationError);
}

TEST(FormatSet, CanonicalRoundTrip) {
  const GroupParams g(3, 3);
  for (std::uint64_t t = 0; t < 50; ++t) {
    const CounterRng rng(7, t);
    const DenseSet a = sample_set(g, rng, rng.uniform(0), 1);
    const std::string text = format_set(a);
    EXPECT_EQ(parse_set(text), a);
    EXPECT_EQ(format_set(parse_set(text)), text);
  }
  const std::vector<std::string> comments{"a note"};
  EXPECT_EQ(format_set(set_of(3, 1, {{2}, {0}}), comments), "# a note\n3 1\n(0)\n(2)\n");
}

TEST(SetFile, WriteAndRead) {
  const auto path = std::filesystem::temp_directory_path() / "frz_io_test.set";
  const DenseSet a = set_of(5, 2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}});
  write_set_file(path, a);
  EXPECT_EQ(read_set_file(path), a);
  std::filesystem::remove(path);
  EXPECT_THROW(read_set_file(path), ValidationError);
}
