#include <gtest/gtest.h>

#include <cmath>

#include "eqlines/graph_io.hpp"
#include "eqlines/nodal.hpp"
#include "eqlines/radius_order.hpp"
#include "test_graphs.hpp"

using namespace eqlines;

namespace {

void expect_vec_near(const std::vector<double>& got, const std::vector<double>& want, double tol = 1e-9) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

}  // namespace

TEST(StrongNodalCount, Examples) {
  EXPECT_EQ(strong_nodal_count(path_graph(3), std::vector<double>{1, -1, 1}), 3);
  EXPECT_EQ(strong_nodal_count(cycle_graph(4), std::vector<double>{1, 0, -1, 0}), 2);
  EXPECT_EQ(strong_nodal_count(complete_graph(3), std::vector<double>{1, 1, -2}), 2);
  EXPECT_EQ(strong_nodal_count(path_graph(3), std::vector<double>{0, 0, 0}), 0);
  try {
    strong_nodal_count(path_graph(3), std::vector<double>{1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParams);
  }
}

TEST(StrongNodalCount, ZeroTolerance) {
  const std::vector<double> f{1.0, 1e-12, 1.0};
  EXPECT_EQ(strong_nodal_count(path_graph(3), f), 2);
  EXPECT_EQ(strong_nodal_count(path_graph(3), f, 0.0), 1);
}

TEST(StrongNodalCount, ScalingAndNegation) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(10, 0.3, rng.bits());
    std::vector<double> f(10);
    for (double& x : f) x = rng.uniform() < 0.2 ? 0.0 : rng.normal();
    const int base = strong_nodal_count(g, f);
    for (double c : {-1.0, 3.5, -0.01}) {
      std::vector<double> h = f;
      for (double& x : h) x *= c;
      EXPECT_EQ(strong_nodal_count(g, h), base);
    }
  }
}

TEST(StrongNodalCount, SpanningTreeBound) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_connected_graph(11, 0.3, rng.bits());
    const Graph t = tree_graph(bfs_tree(g, rng.uniform_int(0, 10)));
    std::vector<double> f(11);
    for (double& x : f) x = rng.normal();
    const int on_tree = strong_nodal_count(t, f);
    const int on_graph = strong_nodal_count(g, f);
    EXPECT_GE(on_tree, on_graph);
    EXPECT_LE(on_tree - on_graph, cyclomatic_number(g));
  }
}

TEST(CoordinateBasis, FourCycle) {
  const Graph g = cycle_graph(4);
  const std::vector<std::vector<double>> basis{{1, 0, -1, 0}, {0, 1, 0, -1}};
  const auto cb = coordinate_basis(g, bfs_tree(g, 0), basis);
  EXPECT_EQ(cb.pivots, (std::vector<int>{0, 1}));
  expect_vec_near(cb.vectors[0], basis[0]);
  expect_vec_near(cb.vectors[1], basis[1]);
}

TEST(CoordinateBasis, StarFromLeaf) {
  const Graph g = star_graph(3);
  const std::vector<std::vector<double>> basis{{0, 1, -1, 0}, {0, 1, 0, -1}};
  const auto cb = coordinate_basis(g, bfs_tree(g, 1), basis);
  EXPECT_EQ(cb.pivots, (std::vector<int>{1, 2}));
  expect_vec_near(cb.vectors[0], {0, 1, 0, -1});
  expect_vec_near(cb.vectors[1], {0, 0, 1, -1});
}

TEST(CoordinateBasis, RankDeficient) {
  const Graph g = cycle_graph(4);
  const std::vector<std::vector<double>> basis{{1, 0, -1, 0}, {1, 0, -1, 0}};
  try {
    coordinate_basis(g, bfs_tree(g, 0), basis);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankDeficient);
  }
}

TEST(CoordinateBasis, PivotAndVanishingProperties) {
  for (std::uint64_t s = 0; s < 80; ++s) {
    const Graph g = random_connected_graph(9, 0.3, s);
    const auto summary = adjacency_eigen(g);
    for (const auto& grp : summary.groups) {
      const auto tree = bfs_tree(g, 0);
      CoordinateBasis cb;
      try {
        cb = coordinate_basis(g, tree, grp.basis);
      } catch (const Error&) {
        continue;  // eigenspace may vanish at the root; nodal_maximizer re-roots
      }
      const auto order = level_order(tree);
      std::vector<int> pos(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
      for (std::size_t i = 0; i < cb.pivots.size(); ++i) {
        for (std::size_t j = 0; j < cb.pivots.size(); ++j) EXPECT_NEAR(cb.vectors[i][cb.pivots[j]], i == j ? 1.0 : 0.0, 1e-12);
        for (int v = 0; v < g.order(); ++v)
          if (pos[v] < pos[cb.pivots[i]]) EXPECT_EQ(cb.vectors[i][v], 0.0);
        EXPECT_LE(eigen_residual(g, cb.vectors[i], grp.value), 1e-6);
      }
    }
  }
}

TEST(NodalMaximizer, FourCycle) {
  const Graph g = cycle_graph(4);
  const auto c = nodal_maximizer(g, adjacency_eigen(g), 2);
  EXPECT_EQ(c.tree.root, 0);
  expect_vec_near(c.g, {1, -1, -1, 1});
  EXPECT_EQ(c.count_tree, 2);
  EXPECT_EQ(c.multiplicity, 2);
  EXPECT_EQ(c.count_graph, 2);
  EXPECT_EQ(c.bound, 3);
  EXPECT_TRUE(c.holds());
}

TEST(NodalMaximizer, StarRootsAtLeaf) {
  const Graph g = star_graph(3);
  const auto c = nodal_maximizer(g, adjacency_eigen(g), 2);
  EXPECT_EQ(c.tree.root, 1);
  EXPECT_EQ(c.pivots, (std::vector<int>{1, 2}));
  expect_vec_near(c.g, {0, 1, 1, -2});
  EXPECT_EQ(c.count_tree, 3);
  EXPECT_TRUE(c.holds());
}

TEST(NodalMaximizer, Petersen) {
  const Graph g = petersen();
  const auto c = nodal_maximizer(g, adjacency_eigen(g), 2);
  EXPECT_EQ(c.multiplicity, 5);
  EXPECT_GE(c.count_tree, 5);
  EXPECT_EQ(c.bound, 9);
  EXPECT_TRUE(c.constructive_ok());
  EXPECT_LE(c.count_graph, 3);
}

TEST(NodalMaximizer, Preconditions) {
  const Graph g = cycle_graph(5);
  const auto s = adjacency_eigen(g);
  try {
    nodal_maximizer(g, s, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParams);
  }
  const Graph d = disjoint_copies(cycle_graph(3), 2);
  try {
    nodal_maximizer(d, adjacency_eigen(d), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Disconnected);
  }
}

// K2 is the one connected graph where the cited nodal upper bound fails:
// the eigenfunction (1,-1) of lambda_2 = -1 has two domains, (k-1) Delta = 1.
TEST(NodalMaximizer, EdgeGraphExceedsUpperBound) {
  const Graph g = complete_graph(2);
  const auto c = nodal_maximizer(g, adjacency_eigen(g), 2);
  EXPECT_TRUE(c.constructive_ok());
  EXPECT_EQ(c.count_graph, 2);
  EXPECT_EQ(c.nodal_upper_bound(), 1);
  EXPECT_FALSE(c.upper_bound_ok());
}

TEST(NodalMaximizer, InvariantsOnSmallGraphs) {
  int checked = 0;
  for (const Graph& g : enumerate_connected_up_to(6)) {
    const auto s = adjacency_eigen(g);
    for (int k = 2; k <= static_cast<int>(s.groups.size()); ++k) {
      const auto c = nodal_maximizer(g, s, k);
      EXPECT_TRUE(c.constructive_ok()) << write_edge_list(g);
      if (g.order() >= 3) EXPECT_TRUE(c.upper_bound_ok());
      ++checked;
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(NodalMaximizer, InvariantsOnRandomGraphs) {
  for (const Graph& g : random_connected_corpus(60, 8, 30, 99)) {
    const auto s = adjacency_eigen(g);
    const auto c = nodal_maximizer(g, s, 2);
    EXPECT_TRUE(c.holds());
    EXPECT_LE(c.residual, 1e-7 * std::max(1.0, std::abs(c.eigenvalue)));
  }
}

TEST(MultiplicityAudit, FourCycle) {
  const auto a = multiplicity_audit(cycle_graph(4));
  ASSERT_EQ(a.groups.size(), 2u);
  EXPECT_EQ(a.groups[0].multiplicity, 2);
  EXPECT_EQ(a.groups[0].bound, 3);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.groups[0].sample_counts.size(), 10u);
}

TEST(MultiplicityAudit, Petersen) {
  const auto a = multiplicity_audit(petersen());
  ASSERT_EQ(a.groups.size(), 2u);
  EXPECT_EQ(a.groups[0].multiplicity, 5);
  EXPECT_EQ(a.groups[0].bound, 9);
  EXPECT_EQ(a.groups[1].multiplicity, 4);
  EXPECT_EQ(a.groups[1].bound, 12);
  EXPECT_TRUE(a.ok());
}

TEST(MultiplicityAudit, EdgeGraph) {
  const auto a = multiplicity_audit(complete_graph(2));
  ASSERT_EQ(a.groups.size(), 1u);
  EXPECT_EQ(a.groups[0].multiplicity, 1);
  EXPECT_EQ(a.groups[0].bound, 1);
  EXPECT_TRUE(a.groups[0].bound_ok);
  EXPECT_TRUE(a.groups[0].certificate_ok);
  EXPECT_FALSE(a.groups[0].nodal_ok());
}

TEST(MultiplicityAudit, SingleVertexAndDisconnected) {
  EXPECT_TRUE(multiplicity_audit(Graph(1)).groups.empty());
  EXPECT_THROW(multiplicity_audit(Graph(2)), Error);
}
