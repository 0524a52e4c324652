#pragma once

// Strong nodal domains and the constructive multiplicity bound
//   m(lambda_k) <= (k-1) * Delta + cyclomatic.
//
// The construction takes an eigenspace of dimension m and builds one
// eigenfunction with at least m strong nodal domains on a spanning tree T:
//
//  1. Root T at the first vertex (BFS order from 0) where the eigenspace
//     does not vanish; T is the BFS tree from that root.
//  2. Reduce the eigenspace basis to coordinate form: pivots v_1..v_m with
//     f_i(v_j) = delta_ij, and f_i vanishing at every vertex processed
//     before v_i (vertices are processed by depth, then label).
//  3. g := f_1. For each pivot v_j (j >= 2), in processing order, add
//     +f_j if g(parent(v_j)) <= 0 and -f_j otherwise.
//
// f_j vanishes at everything processed before v_j, including parent(v_j) and
// every same-level vertex's parent, so g(parent(v_j)) is final when it is
// read and g(v_j) = +-1 has the opposite sign. Each pivot is then the
// topmost vertex of its own tree domain, so S_T(g) >= m; dropping the
// cyclomatic-number many non-tree edges merges at most that many domains.
//
// Worked example, C4 (edges 01 12 23 30), lambda = 0, m = 2:
//   root 0, processing order 0,1,3,2, basis (1,0,-1,0), (0,1,0,-1),
//   pivots (0,1). g = (1,0,-1,0); parent(1) = 0 has g = 1 > 0, so
//   g -= f_2 giving (1,-1,-1,1): two domains on T and on C4.
// Worked example, K_{1,3} (center 0), lambda = 0, m = 2:
//   the eigenspace vanishes at 0, so the root is leaf 1; order 1,0,2,3;
//   coordinate basis (0,1,0,-1), (0,0,1,-1) with pivots (1,2).
//   g = (0,1,0,-1); parent(2) = 0 has g = 0, so g += f_2 giving (0,1,1,-2):
//   three tree domains.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqlines/error.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/random.hpp"
#include "eqlines/spectra.hpp"

namespace eqlines {

inline constexpr double kPivotThreshold = 1e-8;

inline double sup_norm(std::span<const double> f) {
  double m = 0.0;
  for (double x : f) m = std::max(m, std::abs(x));
  return m;
}

/// Number of connected components of the graph on {x : |f(x)| > zero_tol}
/// with edges {x,y} where f(x) f(y) > 0. Default zero_tol is 1e-9 * |f|_inf.
inline int strong_nodal_count(const Graph& g, std::span<const double> f, std::optional<double> zero_tol = std::nullopt) {
  if (f.size() != static_cast<std::size_t>(g.order())) {
    throw Error(ErrorKind::BadParams, "function length " + std::to_string(f.size()) + " does not match " +
                                          std::to_string(g.order()) + " vertices");
  }
  const double tol = zero_tol.value_or(1e-9 * sup_norm(f));
  auto sign = [&](int v) { return f[v] > tol ? 1 : (f[v] < -tol ? -1 : 0); };
  std::vector<char> seen(f.size(), 0);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s] || sign(s) == 0) continue;
    ++count;
    const int sg = sign(s);
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (!seen[w] && sign(w) == sg) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

inline Graph tree_graph(const SpanningTree& t) {
  std::vector<Edge> e;
  for (int v = 0; v < static_cast<int>(t.parent.size()); ++v)
    if (v != t.root) e.push_back({v, t.parent[v]});
  return build_graph(static_cast<int>(t.parent.size()), e);
}

/// Vertices sorted by (tree depth, label).
inline std::vector<int> level_order(const SpanningTree& t) {
  std::vector<int> order(t.depth.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return t.depth[a] < t.depth[b]; });
  return order;
}

struct CoordinateBasis {
  std::vector<int> pivots;                   // v_1..v_m in processing order
  std::vector<std::vector<double>> vectors;  // vectors[i](pivots[j]) == (i == j)
};

/// Gauss-Jordan reduction of an eigenspace basis with pivots chosen by
/// scanning vertices level by level from the tree root. At each vertex the
/// not-yet-pivoted vector with the largest entry there becomes the pivot;
/// if none exceeds kPivotThreshold (inputs are first scaled to sup-norm 1)
/// those entries are set to exactly zero.
inline CoordinateBasis coordinate_basis(const Graph& g, const SpanningTree& tree,
                                        std::span<const std::vector<double>> basis) {
  const auto n = static_cast<std::size_t>(g.order());
  if (tree.parent.size() != n) throw Error(ErrorKind::BadParams, "tree does not span the graph");
  std::vector<std::vector<double>> vecs(basis.begin(), basis.end());
  for (auto& f : vecs) {
    if (f.size() != n) throw Error(ErrorKind::BadParams, "basis vector length does not match the graph");
    const double s = sup_norm(f);
    if (s == 0.0) throw Error(ErrorKind::RankDeficient, "zero vector in basis");
    for (double& x : f) x /= s;
  }
  const std::size_t m = vecs.size();
  std::vector<int> pivot_of(m, -1);
  CoordinateBasis out;
  std::vector<std::size_t> pivot_order;

  for (int v : level_order(tree)) {
    if (pivot_order.size() == m) break;
    std::size_t best = m;
    double best_abs = kPivotThreshold;
    for (std::size_t i = 0; i < m; ++i) {
      if (pivot_of[i] < 0 && std::abs(vecs[i][v]) > best_abs) {
        best = i;
        best_abs = std::abs(vecs[i][v]);
      }
    }
    if (best == m) {
      for (std::size_t i = 0; i < m; ++i)
        if (pivot_of[i] < 0) vecs[i][v] = 0.0;
      continue;
    }
    auto& p = vecs[best];
    const double scale = p[v];
    for (double& x : p) x /= scale;
    p[v] = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == best || vecs[i][v] == 0.0) continue;
      const double c = vecs[i][v];
      for (std::size_t x = 0; x < n; ++x)
        if (p[x] != 0.0) vecs[i][x] -= c * p[x];
      vecs[i][v] = 0.0;
    }
    pivot_of[best] = v;
    pivot_order.push_back(best);
  }
  if (pivot_order.size() != m) {
    throw Error(ErrorKind::RankDeficient, "basis has numerical rank " + std::to_string(pivot_order.size()) +
                                              " < " + std::to_string(m));
  }
  for (std::size_t i : pivot_order) {
    out.pivots.push_back(pivot_of[i]);
    out.vectors.push_back(std::move(vecs[i]));
  }
  return out;
}

inline double eigen_residual(const Graph& g, std::span<const double> f, double lambda) {
  double r = 0.0;
  for (int v = 0; v < g.order(); ++v) {
    double s = -lambda * f[v];
    for (int w : g.neighbors(v)) s += f[w];
    r = std::max(r, std::abs(s));
  }
  return r;
}

struct NodalCertificate {
  double eigenvalue = 0.0;
  int group_index = 0;    // k, 1-based among distinct eigenvalues
  int eigen_index = 0;    // 1-based position of the group's first eigenvalue
  int multiplicity = 0;
  std::vector<int> pivots;
  SpanningTree tree;
  std::vector<double> g;
  int count_tree = 0;
  int count_graph = 0;
  int max_degree = 0;
  int cyclomatic = 0;
  int bound = 0;          // (k-1) * Delta + cyclomatic
  double residual = 0.0;  // |A g - lambda g|_inf
  double max_pivot_sign_product = 0.0;  // max_j g(v_j) g(parent(v_j)), j >= 2

  /// Upper bound on strong nodal domains of any eigenfunction of this
  /// eigenvalue: (eigen_index - 1) * Delta.
  int nodal_upper_bound() const { return (eigen_index - 1) * max_degree; }

  double residual_tol() const { return 1e-7 * std::max(1.0, std::abs(eigenvalue)); }

  /// Guarantees of the construction itself.
  bool constructive_ok() const {
    return residual <= residual_tol() && max_pivot_sign_product <= 1e-9 && count_tree >= multiplicity &&
           count_graph >= multiplicity - cyclomatic;
  }

  /// The cited nodal-domain upper bound, applied to g. Fails on K_2
  /// (two domains, bound 1); see README.
  bool upper_bound_ok() const { return count_graph <= nodal_upper_bound(); }

  bool holds() const { return constructive_ok() && upper_bound_ok(); }
};

/// Builds an eigenfunction of eigenvalue group k (k >= 2) with at least m
/// strong nodal domains on a BFS spanning tree.
inline NodalCertificate nodal_maximizer(const Graph& g, const SpectralSummary& summary, int k) {
  if (k < 2) throw Error(ErrorKind::BadParams, "nodal_maximizer needs group index k >= 2");
  if (!is_connected(g) || g.order() == 0) throw Error(ErrorKind::Disconnected, "nodal_maximizer needs a connected graph");
  const EigenGroup& grp = summary.group(k);
  const int n = g.order();

  std::vector<std::vector<double>> scaled = grp.basis;
  for (auto& f : scaled) {
    const double s = sup_norm(f);
    for (double& x : f) x /= s;
  }
  int root = -1;
  for (int v : bfs_tree(g, 0).order) {
    for (const auto& f : scaled) {
      if (std::abs(f[v]) > kPivotThreshold) {
        root = v;
        break;
      }
    }
    if (root >= 0) break;
  }
  if (root < 0) throw Error(ErrorKind::RankDeficient, "eigenspace vanishes identically");

  NodalCertificate cert;
  cert.eigenvalue = grp.value;
  cert.group_index = k;
  cert.eigen_index = grp.first_index + 1;
  cert.multiplicity = grp.multiplicity;
  cert.tree = bfs_tree(g, root);
  cert.max_degree = g.max_degree();
  cert.cyclomatic = cyclomatic_number(g);
  cert.bound = (k - 1) * cert.max_degree + cert.cyclomatic;

  CoordinateBasis cb = coordinate_basis(g, cert.tree, grp.basis);
  if (cb.pivots.front() != root) throw std::logic_error("first pivot is not the tree root");
  cert.pivots = cb.pivots;

  const auto& parent = cert.tree.parent;
  const auto& depth = cert.tree.depth;
  // Same-level pivots must not disturb each other's parents; this is what
  // makes the sequential update equal to the level-at-once update.
  for (std::size_t i = 1; i < cb.pivots.size(); ++i)
    for (std::size_t j = 1; j < cb.pivots.size(); ++j)
      if (depth[cb.pivots[i]] == depth[cb.pivots[j]] && cb.vectors[j][parent[cb.pivots[i]]] != 0.0)
        throw std::logic_error("coordinate vector does not vanish at a same-level parent");

  std::vector<double> gv = cb.vectors.front();
  for (std::size_t j = 1; j < cb.pivots.size(); ++j) {
    const double c = gv[parent[cb.pivots[j]]] <= 0.0 ? 1.0 : -1.0;
    for (int x = 0; x < n; ++x) gv[x] += c * cb.vectors[j][x];
  }
  for (std::size_t j = 1; j < cb.pivots.size(); ++j) {
    const int v = cb.pivots[j];
    cert.max_pivot_sign_product = std::max(cert.max_pivot_sign_product, gv[v] * gv[parent[v]]);
  }
  cert.g = std::move(gv);
  cert.count_tree = strong_nodal_count(tree_graph(cert.tree), cert.g);
  cert.count_graph = strong_nodal_count(g, cert.g);
  cert.residual = eigen_residual(g, cert.g, cert.eigenvalue);
  return cert;
}

// ---------------------------------------------------------------------------
// Audit
// ---------------------------------------------------------------------------

struct GroupAudit {
  int k = 0;
  double eigenvalue = 0.0;
  int multiplicity = 0;
  int bound = 0;  // (k-1) * Delta + cyclomatic
  bool bound_ok = false;
  NodalCertificate certificate;
  bool certificate_ok = false;     // constructive guarantees
  int nodal_upper_bound = 0;       // (eigen_index - 1) * Delta
  bool certificate_nodal_ok = false;
  std::vector<int> sample_counts;  // strong nodal counts of random eigenspace vectors
  bool samples_ok = false;

  bool nodal_ok() const { return certificate_nodal_ok && samples_ok; }
  bool ok() const { return bound_ok && certificate_ok && nodal_ok(); }
};

struct MultiplicityAudit {
  Graph graph;
  int max_degree = 0;
  int cyclomatic = 0;
  std::vector<GroupAudit> groups;  // k = 2, 3, ...

  bool ok() const {
    return std::all_of(groups.begin(), groups.end(), [](const GroupAudit& a) { return a.ok(); });
  }
};

/// For every eigenvalue group k >= 2: the multiplicity bound, a constructive
/// nodal certificate, and the nodal upper bound on `samples` random unit
/// vectors of the eigenspace.
inline MultiplicityAudit multiplicity_audit(const Graph& g, std::uint64_t seed = 0, int samples = 10) {
  if (g.order() == 0 || !is_connected(g)) throw Error(ErrorKind::Disconnected, "audit needs a connected graph");
  MultiplicityAudit out{g, g.max_degree(), cyclomatic_number(g), {}};
  const SpectralSummary s = adjacency_eigen(g);
  Rng rng(seed);
  for (int k = 2; k <= static_cast<int>(s.groups.size()); ++k) {
    const EigenGroup& grp = s.group(k);
    GroupAudit a;
    a.k = k;
    a.eigenvalue = grp.value;
    a.multiplicity = grp.multiplicity;
    a.bound = (k - 1) * out.max_degree + out.cyclomatic;
    a.bound_ok = a.multiplicity <= a.bound;
    a.certificate = nodal_maximizer(g, s, k);
    a.certificate_ok = a.certificate.constructive_ok();
    a.nodal_upper_bound = grp.first_index * out.max_degree;
    a.certificate_nodal_ok = a.certificate.upper_bound_ok();
    a.samples_ok = true;
    for (int t = 0; t < samples; ++t) {
      std::vector<double> f(static_cast<std::size_t>(g.order()), 0.0);
      for (const auto& b : grp.basis) {
        const double c = rng.normal();
        for (std::size_t x = 0; x < f.size(); ++x) f[x] += c * b[x];
      }
      double norm = 0.0;
      for (double x : f) norm += x * x;
      norm = std::sqrt(norm);
      for (double& x : f) x /= norm;
      const int cnt = strong_nodal_count(g, f);
      a.sample_counts.push_back(cnt);
      a.samples_ok = a.samples_ok && cnt <= a.nodal_upper_bound;
    }
    out.groups.push_back(std::move(a));
  }
  return out;
}

}  // namespace eqlines
