#include <doctest.h>

#include <algorithm>

#include "positroid/errors.hpp"
#include "positroid/network.hpp"

using namespace positroid;

namespace {

LeDiagram dstar() { return parse_grid("**\n**\n*"); }

}  // namespace

TEST_CASE("build_graph on the running example") {
  LeGraph g = build_graph(dstar());
  CHECK(g.n == 5);
  CHECK(g.dot_count() == 5);
  CHECK(g.sources == LabelSet::of({1, 2, 4}));
  CHECK_FALSE(g.is_source(3));
  CHECK_FALSE(g.is_source(5));
  // Row 1 chain: boundary 1 -> dot (1,2) -> dot (1,1).
  CHECK(g.out[0] == std::vector<int>{g.dot_id(1, 2)});
  // Column 1 chain ends at boundary 5.
  int bottom = g.dot_id(3, 1);
  CHECK(std::find(g.out[bottom].begin(), g.out[bottom].end(), 4) != g.out[bottom].end());
}

TEST_CASE("build_graph single box") {
  LeGraph g = build_graph(parse_grid("*"));
  CHECK(g.n == 2);
  CHECK(g.dot_count() == 1);
  int dot = g.dot_id(1, 1);
  CHECK(g.out[0] == std::vector<int>{dot});       // 1 -> (1,1)
  CHECK(g.out[dot] == std::vector<int>{1});       // (1,1) -> 2
}

TEST_CASE("vertical chains span dots; columns without lower dots exit directly") {
  // Shape (2,2) with dots at (1,1), (1,2), (2,2): grid column 2 has two
  // chained dots, the dot in column 1 connects straight to its sink.
  LeDiagram d({2, 2}, {{1, 1}, {1, 2}, {2, 2}});
  LeGraph g = build_graph(d);
  BoundaryLabels labels = boundary_labels(d);
  int top = g.dot_id(1, 2), lower = g.dot_id(2, 2), lone = g.dot_id(1, 1);
  CHECK(std::find(g.out[top].begin(), g.out[top].end(), lower) != g.out[top].end());
  CHECK(std::find(g.out[lower].begin(), g.out[lower].end(), labels.col_label(2) - 1) !=
        g.out[lower].end());
  CHECK(std::find(g.out[lone].begin(), g.out[lone].end(), labels.col_label(1) - 1) !=
        g.out[lone].end());
}

TEST_CASE("build_graph rejects invalid diagrams") {
  CHECK_THROWS_AS(build_graph(LeDiagram({2, 2}, {{1, 2}, {2, 1}})), InvalidDiagram);
}

TEST_CASE("check_planarity is clean on valid diagrams") {
  CHECK(check_planarity(build_graph(dstar())).empty());
  CHECK(check_planarity(build_graph(parse_grid("*"))).empty());
}

TEST_CASE("check_planarity finds the crossing of a force-built invalid diagram") {
  LeGraph g = build_graph_unchecked(LeDiagram({2, 2}, {{1, 2}, {2, 1}}));
  auto crossings = check_planarity(g);
  REQUIRE(crossings.size() == 1);
  CHECK(crossings[0].at == Cell{2, 2});
}

TEST_CASE("is_basis agrees with the published basis list") {
  LeGraph g = build_graph(dstar());
  CHECK(is_basis(g, LabelSet::of({2, 3, 5})));
  CHECK_FALSE(is_basis(g, LabelSet::of({1, 2, 3})));
  CHECK(is_basis(g, LabelSet::of({1, 2, 4})));  // the empty family
  CHECK_THROWS_AS(is_basis(g, LabelSet::of({1, 2})), BadCardinality);
  CHECK_THROWS_AS(is_basis(g, LabelSet::of({1, 2, 6})), BadCardinality);
}

TEST_CASE("enumerate_families pairs sources and sinks the same way in every family") {
  LeGraph g = build_graph(dstar());
  auto families = enumerate_families(g, LabelSet::of({2, 3, 5}));
  REQUIRE_FALSE(families.empty());
  std::vector<std::pair<int, int>> expected = {{1, 3}, {4, 5}};
  for (const PathFamily& family : families) {
    CHECK(family.pairing() == expected);
    CHECK(family.represented(g.sources) == LabelSet::of({2, 3, 5}));
  }
}

TEST_CASE("enumerate_families edge cases") {
  LeGraph g = build_graph(dstar());
  auto only_empty = enumerate_families(g, LabelSet::of({1, 2, 4}));
  REQUIRE(only_empty.size() == 1);
  CHECK(only_empty[0].paths.empty());
  CHECK(enumerate_families(g, LabelSet::of({1, 2, 3})).empty());
  CHECK(enumerate_families(g, LabelSet::of({1, 2})).empty());  // wrong cardinality
}

TEST_CASE("flow decision matches backtracking on every subset, small diagrams") {
  for (const char* text : {"*", "**\n**", "**\n**\n*", "***\n*", "*.\n.*"}) {
    LeGraph g = build_graph(parse_grid(text));
    int n = g.n, r = g.sources.size();
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i) pick[i] = i + 1;
    while (true) {
      LabelSet s;
      for (int x : pick) s.insert(x);
      auto families = enumerate_families(g, s);
      CHECK(is_basis(g, s) == !families.empty());
      for (const PathFamily& family : families)
        for (const Path& path : family.paths) CHECK(path.source < path.sink);
      int i = r - 1;
      while (i >= 0 && pick[i] == n - r + i + 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

TEST_CASE("reachable sinks") {
  LeGraph g = build_graph(dstar());
  CHECK(g.reachable_sinks(1) == LabelSet::of({3, 5}));
  CHECK(g.reachable_sinks(4) == LabelSet::of({5}));
}

TEST_CASE("graph DOT dump is well formed") {
  std::string dot = graph_to_dot(build_graph(parse_grid("*")));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("v0 -> v2") != std::string::npos);
  CHECK(dot.find("v2 -> v1") != std::string::npos);
}
