#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "eqlines/graph.hpp"
#include "test_graphs.hpp"

using namespace eqlines;

namespace {

std::vector<Edge> edges_of(const Graph& g) { return g.edges(); }

}  // namespace

TEST(BuildGraph, SingleEdge) {
  const Graph g = build_graph(2, {{0, 1}});
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(BuildGraph, FourCycle) {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(g, cycle_graph(4));
  EXPECT_EQ(g.edges().back(), (Edge{2, 3}));
}

TEST(BuildGraph, CanonicalisesOrientation) {
  const Graph g = build_graph(3, {{2, 0}, {1, 0}});
  EXPECT_EQ(edges_of(g), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_EQ(g.neighbors(0), (std::vector<int>{1, 2}));
}

TEST(BuildGraph, Rejections) {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::BadParams;  // unreachable in these cases
  };
  EXPECT_EQ(kind([] { build_graph(3, {{0, 0}}); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind([] { build_graph(3, {{0, 3}}); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind([] { build_graph(3, {{0, -1}}); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind([] { build_graph(3, {{0, 1}, {1, 0}}); }), ErrorKind::DuplicateEdge);
}

TEST(Family, ThetaTwoTwoThree) {
  const Graph g = family(Family::Theta, {2, 2, 3});
  const auto st = structure_stats(g);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 7);
  EXPECT_EQ(st.cyclomatic, 2);
  EXPECT_EQ(st.girth, 4);
}

TEST(Family, SpiderThreeThreeThree) {
  const Graph g = family(Family::Spider, {3, 3, 3});
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.size(), 9);
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(g.max_degree(), 3);
  EXPECT_EQ(g.degree(0), 3);
}

TEST(Family, TadpoleThreeTwo) {
  const Graph g = family(Family::Tadpole, {3, 2});
  const auto st = structure_stats(g);
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(st.cyclomatic, 1);
  EXPECT_EQ(st.girth, 3);
}

TEST(Family, ClosedFormCounts) {
  for (int p = 2; p <= 6; ++p) {
    for (int q = 2; q <= 6; ++q) {
      for (int l = 1; l <= 5; ++l) {
        const Graph t = theta_graph(p, q, l);
        EXPECT_EQ(t.order(), p + q + l - 1);
        EXPECT_EQ(t.size(), p + q + l);
        EXPECT_EQ(cyclomatic_number(t), 2);
        EXPECT_EQ(spider_graph(p, q, l).order(), p + q + l + 1);
        if (p >= 3 && q >= 3) {
          EXPECT_EQ(dumbbell_graph(p, q).order(), p + q - 1);
          EXPECT_EQ(dumbbell_graph(p, q).size(), p + q);
          EXPECT_EQ(barbell_graph(p, q, l).order(), p + q + l - 1);
          EXPECT_EQ(barbell_graph(p, q, l).size(), p + q + l);
        }
        if (p >= 3) EXPECT_EQ(tadpole_graph(p, q).order(), p + q);
      }
    }
  }
}

TEST(Family, DocumentedLabels) {
  const Graph d = dumbbell_graph(3, 4);
  EXPECT_EQ(d.degree(0), 4);
  EXPECT_TRUE(d.has_edge(0, 3));
  EXPECT_TRUE(d.has_edge(5, 0));
  const Graph b = barbell_graph(3, 3, 2);
  EXPECT_TRUE(b.has_edge(0, 6));
  EXPECT_TRUE(b.has_edge(6, 3));
  const Graph h = tadpole_graph(4, 2);
  EXPECT_TRUE(h.has_edge(0, 4));
  EXPECT_TRUE(h.has_edge(4, 5));
}

TEST(Family, ParameterRanges) {
  EXPECT_THROW(family(Family::Theta, {1, 2, 3}), Error);
  EXPECT_THROW(family(Family::Theta, {2, 2, 0}), Error);
  EXPECT_THROW(family(Family::Dumbbell, {2, 3}), Error);
  EXPECT_THROW(family(Family::Barbell, {3, 3, 0}), Error);
  EXPECT_THROW(family(Family::Spider, {0, 1, 1}), Error);
  EXPECT_THROW(family(Family::Tadpole, {3, 0}), Error);
  EXPECT_THROW(family(Family::Cycle, {3, 4}), Error);
  EXPECT_EQ(family_from_name("Barbell"), Family::Barbell);
  EXPECT_FALSE(family_from_name("petersen"));
}

TEST(DisjointCopies, Examples) {
  const Graph k = disjoint_copies(complete_graph(2), 3);
  EXPECT_EQ(k.order(), 6);
  EXPECT_EQ(k.size(), 3);
  EXPECT_EQ(components(k).size(), 3u);
  const Graph c = disjoint_copies(cycle_graph(3), 2);
  EXPECT_EQ(c.order(), 6);
  EXPECT_EQ(c.size(), 6);
  EXPECT_TRUE(c.has_edge(3, 5));
  try {
    disjoint_copies(complete_graph(2), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParams);
  }
}

TEST(DisjointCopies, CyclomaticScales) {
  for (const Graph& g : {petersen(), theta_graph(2, 3, 4), cycle_graph(5), path_graph(4)})
    for (int t = 1; t <= 4; ++t) EXPECT_EQ(cyclomatic_number(disjoint_copies(g, t)), t * cyclomatic_number(g));
}

TEST(StructureStats, Petersen) {
  const auto st = structure_stats(petersen());
  EXPECT_EQ(st.max_degree, 3);
  EXPECT_EQ(st.cyclomatic, 6);
  EXPECT_EQ(st.girth, 5);
  EXPECT_EQ(st.diameter, 2);
}

TEST(StructureStats, DumbbellThreeThree) {
  const auto st = structure_stats(dumbbell_graph(3, 3));
  EXPECT_EQ(st.max_degree, 4);
  EXPECT_EQ(st.cyclomatic, 2);
  EXPECT_EQ(st.girth, 3);
}

TEST(StructureStats, TreesAndForests) {
  const auto st = structure_stats(spider_graph(1, 2, 3));
  EXPECT_EQ(st.cyclomatic, 0);
  EXPECT_FALSE(st.girth);
  const auto f = structure_stats(Graph(3));
  EXPECT_EQ(f.cyclomatic, 0);
  EXPECT_FALSE(f.diameter);
}

TEST(StructureStats, GirthMatchesShortestCycle) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Graph g = random_graph(9, 0.3, s);
    const auto gi = girth(g);
    const auto cyc = shortest_cycle(g);
    if (!gi) {
      EXPECT_TRUE(cyc.empty());
      continue;
    }
    ASSERT_EQ(static_cast<int>(cyc.size()), *gi) << s;
    for (std::size_t i = 0; i < cyc.size(); ++i) EXPECT_TRUE(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    EXPECT_EQ(std::set<int>(cyc.begin(), cyc.end()).size(), cyc.size());
  }
}

TEST(ShortestCycle, DeterministicChoice) {
  // Two triangles: {0,1,2} and {2,3,4}; the smaller vertex set wins.
  const auto cyc = shortest_cycle(dumbbell_graph(3, 3));
  std::vector<int> key = cyc;
  std::sort(key.begin(), key.end());
  EXPECT_EQ(key, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(shortest_cycle(path_graph(4)).empty());
}

TEST(Ball, Examples) {
  const Graph c6 = cycle_graph(6);
  EXPECT_EQ(ball(c6, {0}, 1), (std::vector<int>{0, 1, 5}));
  EXPECT_EQ(ball(c6, {0}, 3).size(), 6u);
  const Graph p = petersen();
  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  EXPECT_EQ(ball(p, all, 0), all);
  EXPECT_THROW(ball(c6, {6}, 1), Error);
}

TEST(Ball, DiameterCoversEverything) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = random_connected_graph(8, 0.3, s);
    for (int v = 0; v < g.order(); ++v) EXPECT_EQ(static_cast<int>(ball(g, {v}, *diameter(g)).size()), g.order());
  }
}

TEST(InducedSubgraph, Examples) {
  const auto sub = induced_subgraph(cycle_graph(4), {0, 1, 2});
  EXPECT_EQ(sub.graph, path_graph(3));
  EXPECT_EQ(sub.original, (std::vector<int>{0, 1, 2}));
  const Graph p = petersen();
  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  EXPECT_EQ(induced_subgraph(p, all).graph, p);
  EXPECT_EQ(induced_subgraph(p, std::vector<int>{}).graph.order(), 0);
  EXPECT_THROW(induced_subgraph(p, {10}), Error);
}

TEST(Components, Examples) {
  EXPECT_EQ(components(disjoint_copies(complete_graph(2), 2)), (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(components(petersen()).size(), 1u);
  EXPECT_EQ(components(Graph(3)), (std::vector<std::vector<int>>{{0}, {1}, {2}}));
}

TEST(BfsTree, FourCycle) {
  const auto t = bfs_tree(cycle_graph(4), 0);
  EXPECT_EQ(t.parent, (std::vector<int>{0, 0, 1, 0}));
  EXPECT_EQ(t.depth, (std::vector<int>{0, 1, 2, 1}));
  EXPECT_EQ(t.order, (std::vector<int>{0, 1, 3, 2}));
}

TEST(BfsTree, EdgeAndDisconnected) {
  EXPECT_EQ(bfs_tree(complete_graph(2), 0).parent, (std::vector<int>{0, 0}));
  try {
    bfs_tree(disjoint_copies(complete_graph(2), 2), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Disconnected);
  }
}

TEST(BfsTree, DepthIsDistance) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = random_connected_graph(12, 0.2, s);
    const int root = static_cast<int>(s % 12);
    const auto t = bfs_tree(g, root);
    const auto d = distances_from(g, root);
    int tree_edges = 0;
    for (int v = 0; v < g.order(); ++v) {
      EXPECT_EQ(t.depth[v], d[v]);
      if (v == root) continue;
      ++tree_edges;
      EXPECT_TRUE(g.has_edge(v, t.parent[v]));
      EXPECT_EQ(t.depth[v], t.depth[t.parent[v]] + 1);
    }
    EXPECT_EQ(tree_edges, g.order() - 1);
  }
}

TEST(EndPaths, Examples) {
  EXPECT_EQ(end_path_edges(tadpole_graph(3, 2)), (std::vector<Edge>{{0, 3}, {3, 4}}));
  EXPECT_TRUE(end_path_edges(cycle_graph(5)).empty());
  EXPECT_EQ(end_path_edges(path_graph(4)).size(), 3u);
  EXPECT_EQ(end_path_edges(star_graph(3)).size(), 3u);
  // Spider legs are end paths; the center has degree 3 so they stop there.
  EXPECT_EQ(end_path_edges(spider_graph(2, 2, 2)).size(), 6u);
  EXPECT_TRUE(end_path_edges(theta_graph(2, 3, 4)).empty());
}

TEST(Subdivide, Examples) {
  const Graph c4 = subdivide_edge(cycle_graph(3), {0, 1});
  EXPECT_EQ(c4.order(), 4);
  EXPECT_EQ(c4.size(), 4);
  EXPECT_EQ(c4.max_degree(), 2);
  EXPECT_TRUE(is_connected(c4));
  const Graph p3 = subdivide_edge(complete_graph(2), {1, 0});
  EXPECT_EQ(p3, build_graph(3, {{0, 2}, {1, 2}}));
  try {
    subdivide_edge(cycle_graph(4), {0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSuchEdge);
  }
}

TEST(Subdivide, PreservesCyclomatic) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = random_connected_graph(8, 0.35, s);
    for (const Edge& e : g.edges()) {
      const Graph h = subdivide_edge(g, e);
      EXPECT_EQ(h.order(), g.order() + 1);
      EXPECT_EQ(h.size() - h.order(), g.size() - g.order());
      EXPECT_EQ(cyclomatic_number(h), cyclomatic_number(g));
    }
  }
}

TEST(RemoveEdge, Basics) {
  EXPECT_EQ(remove_edge(cycle_graph(4), {3, 0}), path_graph(4));
  EXPECT_THROW(remove_edge(path_graph(4), {0, 2}), Error);
  EXPECT_EQ(remove_vertex(cycle_graph(4), 0), path_graph(3));
}

TEST(RandomGraph, Extremes) {
  EXPECT_EQ(random_graph(5, 0.0, 9).size(), 0);
  EXPECT_EQ(random_graph(5, 1.0, 9), complete_graph(5));
  EXPECT_THROW(random_graph(5, 1.5, 9), Error);
}

// Frozen against an independent Python implementation of mt19937_64.
TEST(RandomGraph, PinnedSamples) {
  EXPECT_EQ(random_graph(6, 0.5, 42), build_graph(6, {{0, 4}, {1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 4}}));
  EXPECT_EQ(random_graph(10, 0.3, 7),
            build_graph(10, {{0, 3}, {0, 5}, {0, 6}, {0, 9}, {2, 5}, {2, 7}, {2, 8}, {2, 9}, {3, 4}, {3, 5}, {4, 6},
                             {4, 7}, {5, 8}, {5, 9}, {6, 8}, {8, 9}}));
}

TEST(RandomGraph, ConnectedCorpusIsDeterministic) {
  const auto a = random_connected_corpus(20, 3, 15, 5);
  const auto b = random_connected_corpus(20, 3, 15, 5);
  ASSERT_EQ(a.size(), 20u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_TRUE(is_connected(a[i]));
    EXPECT_GE(a[i].order(), 3);
    EXPECT_LE(a[i].order(), 15);
  }
}
