#include <gtest/gtest.h>

#include <filesystem>

#include "sgh/diagram.hpp"
#include "sgh/errors.hpp"
#include "test_paths.hpp"

using namespace sgh;

namespace {

std::vector<Square> sorted(std::vector<Square> v) {
  std::sort(v.begin(), v.end());
  return v;
}

template <typename Fn>
std::string validation_message(Fn fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Parse, MinimalUnknot) {
  const Diagram d = parse_diagram("grid 2\nx 0 0\nx 1 1\no 0 1\no 1 0\n");
  EXPECT_EQ(d.size(), 2);
  EXPECT_EQ(d.o_count(), 2);
  EXPECT_EQ(d.xs(), (std::vector<Square>{{0, 0}, {1, 1}}));
  EXPECT_EQ(d.o_square(1), (Square{0, 1}));
  EXPECT_EQ(d.o_square(2), (Square{1, 0}));
}

TEST(Parse, LabelsFollowLexicographicOrderNotFileOrder) {
  const Diagram d = parse_diagram("grid 3\no 2 2\nx 2 0\no 2 1\nx 1 1\no 1 0\nx 0 2\no 0 0\n");
  EXPECT_EQ(d.os(), (std::vector<Square>{{0, 0}, {1, 0}, {2, 1}, {2, 2}}));
  EXPECT_EQ(d.o_label({2, 1}), 3);
  EXPECT_FALSE(d.o_label({1, 1}).has_value());
  EXPECT_EQ(d.o_labels_in_row(2), (std::vector<int>{3, 4}));
  EXPECT_EQ(d.o_labels_in_column(0), (std::vector<int>{1, 2}));
}

TEST(Parse, CommentsAndBlankLinesAreIgnored) {
  const Diagram d = parse_diagram("# header\n\ngrid 2   # size\nx 0 0\n  x 1 1\n# note\no 0 1\no 1 0");
  EXPECT_EQ(d, e1());
}

TEST(Parse, TwoXsInAColumn) {
  const auto msg = validation_message([] { parse_diagram("grid 2\nx 0 0\nx 1 0\no 0 1\no 1 1\n"); });
  EXPECT_EQ(msg, "two X's in column 0");
}

TEST(Parse, ValidationMessagesNameTheInvariant) {
  EXPECT_EQ(validation_message([] { parse_diagram("grid 2\nx 0 0\nx 0 1\no 1 0\no 1 1\n"); }), "two X's in row 0");
  EXPECT_EQ(validation_message([] { parse_diagram("grid 2\nx 0 0\no 0 1\no 1 0\n"); }), "row 1 has no X");
  EXPECT_EQ(validation_message([] { parse_diagram("grid 2\nx 0 0\nx 1 1\no 0 1\n"); }), "column 0 has no O");
  EXPECT_EQ(validation_message([] { parse_diagram("grid 2\nx 0 0\nx 1 1\no 0 1\no 1 1\n"); }),
            "X and O share square (1,1)");
}

TEST(Parse, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_diagram("grid 2\nx 0 0\nx 1 one\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 5);
  }
  EXPECT_THROW(parse_diagram("x 0 0\ngrid 2\n"), ParseError);
  EXPECT_THROW(parse_diagram("grid 2\ngrid 2\n"), ParseError);
  EXPECT_THROW(parse_diagram("grid 2\nq 0 0\n"), ParseError);
  EXPECT_THROW(parse_diagram("grid 2\nx 0\n"), ParseError);
  EXPECT_THROW(parse_diagram("grid 2\nx 0 2\n"), ParseError);
  EXPECT_THROW(parse_diagram("grid 1\n"), ParseError);
  EXPECT_THROW(parse_diagram("# nothing\n"), ParseError);
}

TEST(Parse, DuplicateMarkingLineIsAnError) {
  try {
    parse_diagram("grid 2\nx 0 0\nx 1 1\no 0 1\no 1 0\no 0 1\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 6);
    EXPECT_NE(std::string(e.what()).find("duplicate marking"), std::string::npos);
  }
}

TEST(Parse, MissingFileIsAValidationError) {
  EXPECT_THROW(load_diagram("/nonexistent/diagram.grid"), ValidationError);
}

TEST(Serialize, RoundTripsEveryBundledDiagram) {
  for (const auto& entry : std::filesystem::directory_iterator(SGH_DIAGRAM_DIR)) {
    const Diagram d = load_diagram(entry.path().string());
    const std::string text = serialize(d);
    EXPECT_EQ(parse_diagram(text), d) << entry.path();
    EXPECT_EQ(serialize(parse_diagram(text)), text) << entry.path();
  }
}

TEST(Serialize, CanonicalLayout) {
  EXPECT_EQ(serialize(d3()), "grid 3\nx 0 2\nx 1 1\nx 2 0\no 0 0\no 1 0\no 2 1\no 2 2\n");
}

TEST(CyclicShift, TranslatesRows) {
  const Diagram s = cyclic_shift(e1(), Axis::rows, 1);
  EXPECT_EQ(sorted(s.xs()), sorted({{1, 0}, {0, 1}}));
  EXPECT_EQ(sorted(s.os()), sorted({{1, 1}, {0, 0}}));
}

TEST(CyclicShift, PeriodicInTheGridSize) {
  EXPECT_EQ(cyclic_shift(d3(), Axis::columns, 3), d3());
  EXPECT_EQ(cyclic_shift(e1(), Axis::rows, 2), e1());
  EXPECT_EQ(cyclic_shift(d3(), Axis::rows, -1), cyclic_shift(d3(), Axis::rows, 2));
}

TEST(CyclicShift, PreservesMarkingCounts) {
  const Diagram v = v4();
  for (int k = 0; k < v.size(); ++k) {
    for (Axis axis : {Axis::rows, Axis::columns}) {
      const Diagram s = cyclic_shift(v, axis, k);
      EXPECT_EQ(s.size(), v.size());
      EXPECT_EQ(s.o_count(), v.o_count());
    }
  }
}

TEST(Reflect, FixesTheSymmetricUnknot) { EXPECT_EQ(reflect_diagonal(e1()), e1()); }

TEST(Reflect, SwapsCoordinates) {
  const Diagram r = reflect_diagonal(d3());
  EXPECT_EQ(sorted(r.xs()), sorted({{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(r.os(), (std::vector<Square>{{0, 0}, {0, 1}, {1, 2}, {2, 2}}));
}

TEST(Reflect, IsAnInvolution) {
  EXPECT_EQ(reflect_diagonal(reflect_diagonal(d3())), d3());
  EXPECT_EQ(reflect_diagonal(reflect_diagonal(v4())), v4());
}
