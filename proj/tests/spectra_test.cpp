#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "eqlines/spectra.hpp"
#include "test_graphs.hpp"

using namespace eqlines;

namespace {

double theta(double t) { return (t + std::sqrt(t * t - 4.0)) / 2.0; }

// Closed form of the tripod recursion, real for t > 2.
double closed_form(int ell, double t) {
  const double th = theta(t);
  const double p0 = t, p1 = t * t - 3.0;
  return (th * p1 - p0) / (th * th - 1.0) * std::pow(th, ell) +
         (p0 - p1 / th) / (1.0 - 1.0 / (th * th)) * std::pow(th, -ell);
}

}  // namespace

TEST(AdjacencyEigen, KTwo) {
  const auto s = adjacency_eigen(complete_graph(2));
  ASSERT_EQ(s.values.size(), 2u);
  EXPECT_NEAR(s.values[0], 1.0, 1e-12);
  EXPECT_NEAR(s.values[1], -1.0, 1e-12);
  EXPECT_EQ(s.groups.size(), 2u);
}

TEST(AdjacencyEigen, FourCycle) {
  const auto s = adjacency_eigen(cycle_graph(4));
  const std::vector<double> want{2, 0, 0, -2};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s.values[i], want[i], 1e-12);
  ASSERT_EQ(s.groups.size(), 3u);
  EXPECT_EQ(s.group(2).multiplicity, 2);
  EXPECT_EQ(s.group(2).first_index, 1);
  EXPECT_NEAR(s.group(2).value, 0.0, 1e-12);
  EXPECT_THROW(s.group(4), Error);
  EXPECT_THROW(s.group(0), Error);
}

TEST(AdjacencyEigen, Petersen) {
  const auto s = adjacency_eigen(petersen());
  ASSERT_EQ(s.groups.size(), 3u);
  EXPECT_NEAR(s.group(1).value, 3.0, 1e-10);
  EXPECT_EQ(s.group(2).multiplicity, 5);
  EXPECT_NEAR(s.group(2).value, 1.0, 1e-10);
  EXPECT_EQ(s.group(3).multiplicity, 4);
  EXPECT_NEAR(s.group(3).value, -2.0, 1e-10);
}

TEST(AdjacencyEigen, SummaryInvariants) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = random_graph(3 + static_cast<int>(seed % 14), 0.35, seed);
    const auto s = adjacency_eigen(g);
    const auto a = adjacency_matrix(g);
    ASSERT_EQ(static_cast<int>(s.values.size()), g.order());
    EXPECT_TRUE(std::is_sorted(s.values.rbegin(), s.values.rend()));
    int covered = 0;
    std::vector<Eigen::VectorXd> all;
    for (std::size_t k = 0; k < s.groups.size(); ++k) {
      const auto& grp = s.groups[k];
      EXPECT_EQ(grp.first_index, covered);
      covered += grp.multiplicity;
      EXPECT_LE(s.values[grp.first_index] - s.values[grp.first_index + grp.multiplicity - 1],
                s.tol * grp.multiplicity);
      if (k + 1 < s.groups.size()) EXPECT_GT(s.values[covered - 1] - s.values[covered], s.tol);
      for (const auto& b : grp.basis) {
        const Eigen::Map<const Eigen::VectorXd> v(b.data(), g.order());
        EXPECT_LE((a * v - grp.value * v).cwiseAbs().maxCoeff(), 1e-7 * std::max(1.0, std::abs(grp.value)));
        all.push_back(v);
      }
    }
    EXPECT_EQ(covered, g.order());
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) EXPECT_NEAR(all[i].dot(all[j]), i == j ? 1.0 : 0.0, 1e-8);
  }
}

TEST(AdjacencyEigen, Deterministic) {
  const Graph g = random_graph(12, 0.4, 3);
  const auto a = adjacency_eigen(g);
  const auto b = adjacency_eigen(g);
  EXPECT_EQ(a.values, b.values);
  for (std::size_t k = 0; k < a.groups.size(); ++k) EXPECT_EQ(a.groups[k].basis, b.groups[k].basis);
}

TEST(SpiderPolynomial, Examples) {
  EXPECT_EQ(spider_charpoly_eval(0, 5.0), 5.0);
  EXPECT_EQ(spider_charpoly_eval(1, 2.0), 1.0);
  EXPECT_EQ(spider_charpoly_eval(2, 2.0), 0.0);
  EXPECT_EQ(spider_charpoly_eval(3, 2.0), 2.0 * 0.0 - 1.0);
  EXPECT_THROW(spider_charpoly_eval(-1, 1.0), Error);
}

TEST(SpiderPolynomial, MatchesClosedFormAboveTwo) {
  for (int ell = 0; ell <= 25; ++ell) {
    for (double t : {2.000002, 2.05, 2.1, 2.1213, 2.3, 3.0, 4.5}) {
      const double r = spider_charpoly_eval(ell, t);
      EXPECT_NEAR(r, closed_form(ell, t), 1e-9 * std::max(1.0, std::abs(r))) << ell << " " << t;
    }
  }
}

TEST(SpiderPolynomial, FixedPointAtLimit) {
  const double t = 3.0 / std::sqrt(2.0);
  EXPECT_LT(std::abs(theta(t) * (t * t - 3.0) - t), 1e-12);
}

TEST(SpiderRadius, ClosedForms) {
  EXPECT_NEAR(spider_radius(1), std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(spider_radius(2), 2.0, 1e-12);
  EXPECT_NEAR(spider_radius(3), std::sqrt((5.0 + std::sqrt(13.0)) / 2.0), 1e-12);
  EXPECT_NEAR(spider_radius(4), std::sqrt(3.0 + std::sqrt(2.0)), 1e-12);
  EXPECT_THROW(spider_radius(0), Error);
}

// Frozen from numpy.linalg.eigvalsh on the tripod adjacency matrix.
TEST(SpiderRadius, FrozenEigensolverValues) {
  EXPECT_NEAR(spider_radius(5), 2.1119907362530643, 1e-12);
  EXPECT_NEAR(spider_radius(8), 2.1202612236714895, 1e-12);
  EXPECT_NEAR(spider_radius(12), 2.1212554702258517, 1e-12);
  EXPECT_NEAR(spider_radius(20), 2.1213200906750407, 1e-12);
}

TEST(SpiderRadius, IncreasingBelowLimit) {
  const auto r = spider_radii(40);
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_LT(r[i], kTripodLimit);
    if (i) EXPECT_LT(r[i - 1], r[i]);
    EXPECT_DOUBLE_EQ(r[i], spider_radius(static_cast<int>(i) + 1));
  }
  EXPECT_LT(kTripodLimit - r[29], 1e-6);
}

TEST(SpiderRadius, GapShrinksGeometrically) {
  const auto r = spider_radii(30);
  for (int ell = 1; ell <= 30; ++ell) EXPECT_LE(kTripodLimit - r[ell - 1], 2.0 * std::pow(2.0, -ell)) << ell;
}

TEST(SpiderRadius, AgreesWithEigensolvers) {
  for (int ell = 1; ell <= 20; ++ell) {
    const double r = spider_radius(ell);
    EXPECT_NEAR(r, lambda1(spider_graph(ell, ell, ell)), 1e-8);
    EXPECT_NEAR(r, spider_radius_tridiagonal(ell), 1e-10);
  }
}

TEST(NLambda, Examples) {
  EXPECT_EQ(n_lambda(1.5), 1);
  EXPECT_EQ(n_lambda(2.0), 3);
  EXPECT_EQ(n_lambda(2.1), 4);
  EXPECT_EQ(n_lambda(1.0), 1);
  EXPECT_EQ(n_lambda(std::sqrt(3.0) + 1e-9), 2);
  EXPECT_EQ(n_lambda(2.12), 8);
}

TEST(NLambda, Domain) {
  for (double bad : {0.0, -1.0, kTripodLimit, 2.2}) {
    try {
      n_lambda(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::OutOfDomain);
    }
  }
}

TEST(NLambda, DefiningProperty) {
  const auto r = spider_radii(60);
  for (double lam = 0.05; lam < 2.1213; lam += 0.0137) {
    const int nl = n_lambda(lam);
    EXPECT_GT(r[nl - 1], lam);
    if (nl > 1) EXPECT_LE(r[nl - 2], lam);
  }
}

TEST(SpectralRadius, Examples) {
  for (int n = 3; n <= 9; ++n) EXPECT_NEAR(spectral_radius(cycle_graph(n)).value, 2.0, 1e-12);
  EXPECT_NEAR(spectral_radius(star_graph(3)).value, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(spectral_radius(spider_graph(2, 2, 2)).value, 2.0, 1e-12);
  EXPECT_THROW(spectral_radius(Graph(2)), Error);
}

TEST(SpectralRadius, PerronVector) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph g = random_connected_graph(10, 0.25, s);
    const auto p = spectral_radius(g);
    EXPECT_NEAR(p.value, lambda1(g), 1e-9);
    double norm = 0.0;
    for (double x : p.perron) {
      EXPECT_GT(x, 0.0);
      norm += x * x;
    }
    EXPECT_NEAR(norm, 1.0, 1e-12);
  }
}

TEST(Interlacing, Examples) {
  const std::vector<double> c4{2, 0, 0, -2};
  const std::vector<double> p3{std::sqrt(2.0), 0, -std::sqrt(2.0)};
  EXPECT_TRUE(interlacing_check(c4, p3));
  EXPECT_TRUE(interlacing_check(c4, c4));
  EXPECT_FALSE(interlacing_check(std::vector<double>{1, -1}, std::vector<double>{5}));
  EXPECT_THROW(interlacing_check(p3, c4), Error);
}

TEST(Interlacing, RandomPrincipalSubmatrices) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(rng.uniform_int(2, 14), 0.4, rng.bits());
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
      if (rng.uniform() < 0.6) keep.push_back(v);
    if (keep.empty()) continue;
    EXPECT_TRUE(interlacing_check(adjacency_eigenvalues(g), adjacency_eigenvalues(induced_subgraph(g, keep).graph)));
  }
}

TEST(Monotonicity, DeletionNeverRaisesRadius) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Graph g = random_graph(8, 0.4, s);
    const double l = lambda1(g);
    for (int v = 0; v < g.order(); ++v) EXPECT_LE(lambda1(remove_vertex(g, v)), l + 1e-9);
    for (const Edge& e : g.edges()) EXPECT_LE(lambda1(remove_edge(g, e)), l + 1e-9);
  }
}
