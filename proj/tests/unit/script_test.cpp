#include "mcpr/script.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "mcpr/adversary.hpp"
#include "oracles.hpp"

namespace mcpr {
namespace {

TEST(Script, RoundTripsThroughTextFormat) {
  RngStream rng(4);
  for (const auto& original :
       {build_binary(32), build_dary(40, 3), random_order(build_binary(8), rng)}) {
    std::stringstream buffer;
    write_script(buffer, original);
    const auto parsed = read_script(buffer);
    EXPECT_EQ(parsed.family, original.family);
    EXPECT_EQ(parsed.d, original.d);
    EXPECT_EQ(parsed.N, original.N);
    EXPECT_EQ(parsed.n, original.n);
    EXPECT_EQ(parsed.top_row, original.top_row);
    EXPECT_EQ(parsed.edges, original.edges);
  }
}

TEST(Script, WritesFormats) {
  const auto s = build_binary(2);
  std::ostringstream script;
  write_script(script, s);
  EXPECT_EQ(script.str(), "# family=binary d=2 N=2 n=3 top=2\n0 2 -1\n1 2 -1\n");
  std::ostringstream edges;
  write_edge_list(edges, s);
  EXPECT_EQ(edges.str(), "0 2\n1 2\n");
}

TEST(Script, ReadsPlainEdgeList) {
  std::istringstream in("0 3\n\n  2 1\n# comment\n3 0\n");
  const auto s = read_script(in);
  EXPECT_EQ(s.n, 4u);
  EXPECT_EQ(s.family, Family::kCustom);
  ASSERT_EQ(s.m(), 3u);
  EXPECT_EQ(s.edges[1], (ScriptEdge{2, 1, kTopRowLabel}));

  std::istringstream again("0 1\n");
  EXPECT_EQ(read_script(again, 10).n, 10u);
}

TEST(Script, RejectsMalformedLines) {
  std::istringstream bad("0 1\n2 x\n");
  EXPECT_THROW(read_script(bad), std::invalid_argument);
  std::istringstream negative("-1 2\n");
  EXPECT_THROW(read_script(negative), std::invalid_argument);
}

TEST(Script, BuildGraphRejectsDuplicates) {
  std::istringstream in("0 1\n0 1\n");
  const auto s = read_script(in);
  EXPECT_THROW(build_graph(s), GraphError);
}

TEST(Script, RandomScriptsAreSimple) {
  RngStream rng(12);
  for (int i = 0; i < 20; ++i) {
    const auto s = testing::random_script(1 + rng.uniform_index(30), 3, rng);
    EXPECT_NO_THROW(build_graph(s));
  }
}

}  // namespace
}  // namespace mcpr
