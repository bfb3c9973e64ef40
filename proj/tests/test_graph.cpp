#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "ramseylab/ramseylab.hpp"

using namespace ramseylab;

TEST(Graph, EdgesAreSortedAndIndexed) {
  Graph g(4, {{2, 3}, {1, 0}, {0, 2}});
  ASSERT_EQ(g.size(), 3);
  EXPECT_EQ(g.edge(0), Edge(0, 1));
  EXPECT_EQ(g.edge(1), Edge(0, 2));
  EXPECT_EQ(g.edge(2), Edge(2, 3));
  EXPECT_EQ(g.edge_id(3, 2), 2);
  EXPECT_FALSE(g.edge_index(1, 3).has_value());
  EXPECT_THROW(g.edge_id(1, 3), InvalidArgument);
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 1));
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Graph(-1), InvalidArgument);
}

TEST(Graph, NeighborsAndIncidentEdgesAgree) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = oracle::random_graph(9, 0.4, rng);
    int degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      ASSERT_EQ(g.neighbors(v).size(), g.incident_edges(v).size());
      ASSERT_TRUE(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
      for (std::size_t i = 0; i < g.neighbors(v).size(); ++i)
        EXPECT_EQ(g.edge(g.incident_edges(v)[i]), Edge(v, g.neighbors(v)[i]));
      EXPECT_EQ(static_cast<int>(g.row(v).count()), g.degree(v));
      degree_sum += g.degree(v);
    }
    EXPECT_EQ(degree_sum, 2 * g.size());
  }
}

TEST(Graph, DeletionAndInduced) {
  Graph k4 = complete_graph(4);
  Graph minus = k4.without_edge(k4.edge_id(0, 1));
  EXPECT_EQ(minus.size(), 5);
  EXPECT_FALSE(minus.adjacent(0, 1));
  Graph k3 = k4.without_vertex(2);
  EXPECT_EQ(k3.order(), 3);
  EXPECT_TRUE(is_complete(k3));
  std::vector<Vertex> vs{3, 1};
  Graph pair = path_graph(4).induced(vs);
  EXPECT_EQ(pair.order(), 2);
  EXPECT_EQ(pair.size(), 0);
  std::vector<Vertex> vs2{1, 2};
  EXPECT_EQ(path_graph(4).induced(vs2).size(), 1);
}

TEST(Graph, BuilderCopies) {
  GraphBuilder gb(1);
  auto map = gb.add_rooted_copy(complete_graph(3), 0, 0);
  EXPECT_EQ(map[0], 0);
  gb.add_disjoint_copy(path_graph(2));
  Graph g = gb.build();
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 4);
  EXPECT_EQ(connected_components(g).size(), 2u);
  Graph u = disjoint_union(cycle_graph(3), cycle_graph(4));
  EXPECT_EQ(u.order(), 7);
  EXPECT_TRUE(u.adjacent(3, 6));
}

TEST(Graph, TreesAndDistances) {
  EXPECT_TRUE(is_tree(path_graph(5)));
  EXPECT_TRUE(is_tree(Graph(1)));
  EXPECT_FALSE(is_tree(cycle_graph(5)));
  EXPECT_FALSE(is_tree(Graph(2)));
  auto d = bfs_distances(cycle_graph(6), 0);
  EXPECT_EQ(d, (std::vector<int>{0, 1, 2, 3, 2, 1}));
  auto d2 = bfs_distances(Graph(3, {{0, 1}}), 0);
  EXPECT_EQ(d2[2], -1);
}

TEST(Graph6, MatchesReferenceEncodings) {
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(path_graph(4)), "Ch");
  EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(to_graph6(star_graph(3)), "Cs");
  EXPECT_EQ(to_graph6(complete_graph(6)), "E~~w");
}

TEST(Graph6, LongFormMatchesReference) {
  std::vector<Edge> es;
  for (int i = 0; i < 70; ++i) {
    int j = (i * 7 + 3) % 70;
    if (i != j && std::find(es.begin(), es.end(), Edge(i, j)) == es.end()) es.emplace_back(i, j);
  }
  Graph g(70, es);
  const std::string want =
      "~?@EC??????A_?@????????????_A???????O???A????G????C?O@???????????????????????_????OP?C???C??????_?????A??????"
      "?????????????_A?G?_??????C???????G???????G???????C???????@???_A?G?g????????_???????????????????????A?????????O"
      "???????O@?C?O@????A?????????A?????????@??????????O?????????A???????????C?O@?C?O@C??????????A???????????_??????"
      "????C???????????O???????????_?????_A?G?_a?G?????????O???????????C????????????_";
  EXPECT_EQ(to_graph6(g), want);
  EXPECT_EQ(from_graph6(want), g);
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int n : {0, 1, 2, 5, 6, 7, 12, 62, 63, 64, 100}) {
    Graph g = oracle::random_graph(n, 0.3, rng);
    EXPECT_EQ(from_graph6(to_graph6(g)), g) << n;
  }
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("B"), ParseError);
  EXPECT_THROW(from_graph6("Bww"), ParseError);
  EXPECT_THROW(from_graph6("B!"), ParseError);
}

TEST(Coloring, TextRoundTrip) {
  Graph g = cycle_graph(5);
  EdgeColoring c(g);
  c.set(1, Color::Blue);
  c.toggle(3);
  std::string text = coloring_to_string(g, c);
  EXPECT_EQ(text.substr(0, 4), "5 5\n");
  EXPECT_EQ(coloring_from_string(text, g), c);
  EXPECT_EQ(c.count(Color::Blue), 2);
  EXPECT_EQ(c.swapped().count(Color::Blue), 3);
}

TEST(Coloring, ParsingErrors) {
  Graph g = path_graph(3);
  EXPECT_THROW(coloring_from_string("", g), ParseError);
  EXPECT_THROW(coloring_from_string("3 3\n", g), DomainMismatch);
  EXPECT_THROW(coloring_from_string("3 2\n0 1 R\n", g), ParseError);
  EXPECT_THROW(coloring_from_string("3 2\n0 1 R\n0 2 B\n", g), DomainMismatch);
  EXPECT_THROW(coloring_from_string("3 2\n0 1 R\n0 1 B\n", g), DomainMismatch);
  EXPECT_THROW(coloring_from_string("3 2\n0 1 R\n1 2 G\n", g), ParseError);
  EXPECT_THROW(coloring_from_string("3 2\n1 0 R\n2 1 B\nextra", g), ParseError);
  EXPECT_NO_THROW(coloring_from_string("3 2\n2 1 B\n1 0 R\n", g));
  EXPECT_THROW(EdgeColoring(cycle_graph(4)).require_host(g), DomainMismatch);
}

TEST(Coloring, ColorClass) {
  Graph g = complete_graph(4);
  EdgeColoring c(g, Color::Blue);
  c.set(g.edge_id(0, 1), Color::Red);
  Graph red = color_class(g, c, Color::Red);
  EXPECT_EQ(red.order(), 4);
  EXPECT_EQ(red.size(), 1);
  EXPECT_EQ(color_class(g, c, Color::Blue).size(), 5);
}
