#pragma once

// Theorem-level checks built on the spectral and nodal machinery:
//  * the closed-form multiplicity bound 2 n_l D^(n_l+3) (1 + D + D^2) for
//    lambda_2 below 3/sqrt(2), and a decomposition witness explaining it;
//  * the edge-disjoint subgraph trichotomy for lambda_2;
//  * lambda_1 >= 3/sqrt(2) over grids of two-cycle graphs;
//  * spectral-radius monotonicity under deletion and subdivision.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqlines/error.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/spectra.hpp"

namespace eqlines {

using BigInt = boost::multiprecision::cpp_int;

/// 2 * n_lambda * delta^(n_lambda + 3) * (1 + delta + delta^2), exactly.
inline BigInt theorem_bound(double lambda, long long delta) {
  if (delta < 1) throw Error(ErrorKind::BadParams, "maximum degree bound must be >= 1");
  const int nl = n_lambda(lambda);
  const BigInt d = delta;
  return 2 * BigInt(nl) * boost::multiprecision::pow(d, static_cast<unsigned>(nl + 3)) * (1 + d + d * d);
}

enum class Verdict { Tree, Thin, Case1, Case2, Small };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Tree: return "Tree";
    case Verdict::Thin: return "Thin";
    case Verdict::Case1: return "Case1";
    case Verdict::Case2: return "Case2";
    case Verdict::Small: return "Small";
  }
  return "?";
}

struct ResidualComponent {
  std::vector<int> vertices;  // host labels
  int cyclomatic = 0;
};

struct DecompositionWitness {
  Verdict verdict = Verdict::Small;
  double lambda = 0.0;
  double lambda2 = 0.0;
  int n_lambda = 0;
  int max_degree = 0;
  int cyclomatic = 0;
  std::optional<int> girth;
  std::vector<int> cycle;  // Case1: the shortest cycle
  int center = -1;         // Case2: tripod center
  std::vector<int> removed;
  std::vector<ResidualComponent> components;
  int effective_bound = 0;  // |removed| + sum(max_degree + cyclomatic_i)
  int actual_multiplicity = 0;
};

namespace detail {

inline std::vector<ResidualComponent> residual_components(const Graph& g, std::span<const int> removed) {
  auto keep = complement_set(g, removed);
  auto sub = induced_subgraph(g, keep);
  std::vector<ResidualComponent> out;
  for (const auto& comp : components(sub.graph)) {
    auto piece = induced_subgraph(sub.graph, comp);
    ResidualComponent rc;
    for (int v : comp) rc.vertices.push_back(sub.original[v]);
    rc.cyclomatic = cyclomatic_number(piece.graph);
    out.push_back(std::move(rc));
  }
  return out;
}

// Lowest-labelled vertex with three BFS branches reaching depth `reach`.
// Distinct branches of a BFS tree are vertex-disjoint, so such a vertex is
// the center of a tripod T(reach, reach, reach) inside its radius-`reach` ball.
inline int tripod_center(const Graph& g, int reach) {
  for (int x = 0; x < g.order(); ++x) {
    if (g.degree(x) < 3) continue;
    SpanningTree t = bfs_tree(g, x);
    std::vector<int> branch(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> deepest(static_cast<std::size_t>(g.order()), 0);
    for (int v : t.order) {
      if (v == x) continue;
      branch[v] = t.parent[v] == x ? v : branch[t.parent[v]];
      deepest[branch[v]] = std::max(deepest[branch[v]], t.depth[v]);
    }
    int long_branches = 0;
    for (int c : g.neighbors(x))
      if (deepest[c] >= reach) ++long_branches;
    if (long_branches >= 3) return x;
  }
  return -1;
}

}  // namespace detail

/// Decomposition behind the lambda_2 multiplicity bound. Requires g
/// connected and lambda_2(g) <= lambda + 1e-9 with lambda < 3/sqrt(2).
///
///   Tree   g is a tree; bound Delta.
///   Case1  girth <= 2 n_l: remove the radius-(n_l + 2) ball around one
///          shortest cycle.
///   Thin   girth > 2 n_l and cyclomatic number 1; bound Delta + 1.
///   Case2  girth > 2 n_l, cyclomatic >= 2: remove the radius-(n_l + 2) ball
///          around a tripod center.
///   Small  no tripod center exists (graph too small for the argument);
///          the whole graph is the single residual piece.
///
/// After a Case1/Case2 removal every residual component has cyclomatic
/// number <= 1; anything else throws TheoremViolation.
inline DecompositionWitness decompose(const Graph& g, double lambda) {
  if (g.order() == 0 || !is_connected(g)) throw Error(ErrorKind::Disconnected, "decompose needs a connected graph");
  DecompositionWitness w;
  w.lambda = lambda;
  w.n_lambda = n_lambda(lambda);
  const SpectralSummary s = adjacency_eigen(g);
  if (g.order() >= 2) {
    w.lambda2 = s.values[1];
    w.actual_multiplicity = s.group(2).multiplicity;
  } else {
    w.lambda2 = -std::numeric_limits<double>::infinity();
  }
  if (w.lambda2 > lambda + 1e-9) {
    throw Error(ErrorKind::PreconditionViolated,
                "lambda_2 = " + std::to_string(w.lambda2) + " exceeds lambda = " + std::to_string(lambda));
  }
  const StructureStats st = structure_stats(g);
  w.max_degree = st.max_degree;
  w.cyclomatic = st.cyclomatic;
  w.girth = st.girth;

  auto whole_graph = [&](Verdict v) {
    w.verdict = v;
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    w.components = {ResidualComponent{std::move(all), w.cyclomatic}};
  };

  const int reach = w.n_lambda;
  if (w.cyclomatic == 0) {
    whole_graph(Verdict::Tree);
  } else if (*w.girth <= 2 * reach) {
    w.verdict = Verdict::Case1;
    w.cycle = shortest_cycle(g);
    w.removed = ball(g, w.cycle, reach + 2);
  } else if (w.cyclomatic <= 1) {
    whole_graph(Verdict::Thin);
  } else if (int x = detail::tripod_center(g, reach); x >= 0) {
    w.verdict = Verdict::Case2;
    w.center = x;
    w.removed = ball(g, {x}, reach + 2);
  } else {
    whole_graph(Verdict::Small);
  }

  if (w.verdict == Verdict::Case1 || w.verdict == Verdict::Case2) {
    w.components = detail::residual_components(g, w.removed);
    for (const auto& c : w.components) {
      if (c.cyclomatic >= 2) {
        throw Error(ErrorKind::TheoremViolation,
                    "residual component with cyclomatic number " + std::to_string(c.cyclomatic) + " after " +
                        std::string(to_string(w.verdict)) + " removal");
      }
    }
  }
  w.effective_bound = static_cast<int>(w.removed.size());
  for (const auto& c : w.components) w.effective_bound += w.max_degree + c.cyclomatic;
  return w;
}

/// For edge-disjoint vertex sets V1, V2 of a connected graph, one of
///   lambda_1(G[V1]) < lambda_2(G),  lambda_1(G[V2]) < lambda_2(G),
///   lambda_1(G[V1]) = lambda_1(G[V2]) = lambda_2(G)
/// holds. Comparisons use `tol`: a < b means a < b - tol, a = b means |a-b| <= tol.
inline bool edge_disjoint_check(const Graph& g, std::span<const int> v1, std::span<const int> v2, double tol = 1e-8) {
  if (g.order() == 0 || !is_connected(g)) throw Error(ErrorKind::Disconnected, "edge_disjoint_check needs a connected graph");
  std::vector<char> side(static_cast<std::size_t>(g.order()), 0);
  for (int v : v1) {
    detail::check_vertex(g, v);
    side[v] |= 1;
  }
  for (int v : v2) {
    detail::check_vertex(g, v);
    if (side[v] & 1) throw Error(ErrorKind::NotEdgeDisjoint, "vertex " + std::to_string(v) + " lies in both sets");
    side[v] |= 2;
  }
  for (const Edge& e : g.edges()) {
    if ((side[e.u] | side[e.v]) == 3 && side[e.u] != side[e.v]) {
      throw Error(ErrorKind::NotEdgeDisjoint,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} joins the two sets");
    }
  }
  const auto vals = adjacency_eigenvalues(g);
  const double l2 = vals.size() >= 2 ? vals[1] : -std::numeric_limits<double>::infinity();
  const double a = lambda1(induced_subgraph(g, v1).graph);
  const double b = lambda1(induced_subgraph(g, v2).graph);
  auto less = [&](double x, double y) { return x < y - tol; };
  auto equal = [&](double x, double y) { return std::abs(x - y) <= tol; };
  return less(a, l2) || less(b, l2) || (equal(a, l2) && equal(b, l2));
}

inline bool edge_disjoint_check(const Graph& g, std::initializer_list<int> v1, std::initializer_list<int> v2,
                                double tol = 1e-8) {
  return edge_disjoint_check(g, std::span<const int>(v1.begin(), v1.size()), std::span<const int>(v2.begin(), v2.size()),
                             tol);
}

// ---------------------------------------------------------------------------
// Two-cycle grid
// ---------------------------------------------------------------------------

struct GridEntry {
  Family family = Family::Theta;
  std::vector<int> params;
  double lambda1 = 0.0;
  bool ok = false;
};

struct GridReport {
  int checked = 0;
  std::vector<GridEntry> minima;    // smallest lambda_1 per family (theta, dumbbell, barbell)
  std::vector<GridEntry> failures;  // lambda_1 < 3/sqrt(2) - 1e-9

  bool ok() const { return failures.empty(); }
};

/// lambda_1 >= 3/sqrt(2) for every theta P(p,q,l), dumbbell D(p,q) and
/// barbell B(p,q,l) with parameters up to the given bounds.
inline GridReport two_cycle_grid_check(int p_max, int q_max, int l_max, int jobs = 1) {
  if (p_max < 3 || q_max < 3 || l_max < 1) {
    throw Error(ErrorKind::BadParams, "grid bounds must allow every family: p_max, q_max >= 3 and l_max >= 1");
  }
  std::vector<GridEntry> todo;
  for (int p = 2; p <= p_max; ++p)
    for (int q = 2; q <= q_max; ++q)
      for (int l = 1; l <= l_max; ++l) todo.push_back({Family::Theta, {p, q, l}});
  for (int p = 3; p <= p_max; ++p)
    for (int q = 3; q <= q_max; ++q) todo.push_back({Family::Dumbbell, {p, q}});
  for (int p = 3; p <= p_max; ++p)
    for (int q = 3; q <= q_max; ++q)
      for (int l = 1; l <= l_max; ++l) todo.push_back({Family::Barbell, {p, q, l}});

  auto eval = [&todo](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      todo[i].lambda1 = lambda1(family(todo[i].family, todo[i].params));
      todo[i].ok = todo[i].lambda1 >= kTripodLimit - 1e-9;
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::future<void>> parts;
  const std::size_t per = (todo.size() + jobs - 1) / jobs;
  for (std::size_t b = 0; b < todo.size(); b += per) parts.push_back(std::async(std::launch::async, eval, b, std::min(todo.size(), b + per)));
  for (auto& f : parts) f.get();

  GridReport r;
  r.checked = static_cast<int>(todo.size());
  for (Family fam : {Family::Theta, Family::Dumbbell, Family::Barbell}) {
    const GridEntry* best = nullptr;
    for (const auto& e : todo)
      if (e.family == fam && (!best || e.lambda1 < best->lambda1)) best = &e;
    if (best) r.minima.push_back(*best);
  }
  for (const auto& e : todo)
    if (!e.ok) r.failures.push_back(e);
  return r;
}

// ---------------------------------------------------------------------------
// Monotonicity
// ---------------------------------------------------------------------------

struct MonotonicityEntry {
  enum class Kind { DeleteVertex, DeleteEdge, Subdivide } kind = Kind::DeleteVertex;
  int vertex = -1;
  Edge edge{};
  double before = 0.0;
  double after = 0.0;
  bool ok = false;
};

inline std::string_view to_string(MonotonicityEntry::Kind k) {
  switch (k) {
    case MonotonicityEntry::Kind::DeleteVertex: return "delete-vertex";
    case MonotonicityEntry::Kind::DeleteEdge: return "delete-edge";
    case MonotonicityEntry::Kind::Subdivide: return "subdivide";
  }
  return "?";
}

struct MonotonicityReport {
  double lambda1 = 0.0;
  bool subdivision_applies = false;  // lambda_1 > 2
  std::vector<MonotonicityEntry> entries;

  bool ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const MonotonicityEntry& e) { return e.ok; });
  }
};

/// (a) deleting a vertex or an edge, when the result stays connected, strictly
///     lowers lambda_1 (by more than 1e-9);
/// (b) if lambda_1 > 2, subdividing any edge not on an end path does not
///     raise lambda_1 (tolerance 1e-9).
inline MonotonicityReport monotonicity_check(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw Error(ErrorKind::Disconnected, "monotonicity_check needs a connected graph");
  constexpr double tol = 1e-9;
  MonotonicityReport r;
  r.lambda1 = lambda1(g);
  using Kind = MonotonicityEntry::Kind;
  for (int v = 0; v < g.order() && g.order() > 1; ++v) {
    Graph h = remove_vertex(g, v);
    if (!is_connected(h)) continue;
    MonotonicityEntry e{Kind::DeleteVertex, v, {}, r.lambda1, lambda1(h)};
    e.ok = r.lambda1 - e.after > tol;
    r.entries.push_back(e);
  }
  for (const Edge& x : g.edges()) {
    Graph h = remove_edge(g, x);
    if (!is_connected(h)) continue;
    MonotonicityEntry e{Kind::DeleteEdge, -1, x, r.lambda1, lambda1(h)};
    e.ok = r.lambda1 - e.after > tol;
    r.entries.push_back(e);
  }
  r.subdivision_applies = r.lambda1 > 2.0 + tol;
  if (r.subdivision_applies) {
    const auto ends = end_path_edges(g);
    for (const Edge& x : g.edges()) {
      if (std::binary_search(ends.begin(), ends.end(), x)) continue;
      MonotonicityEntry e{Kind::Subdivide, -1, x, r.lambda1, lambda1(subdivide_edge(g, x))};
      e.ok = e.after <= r.lambda1 + tol;
      r.entries.push_back(e);
    }
  }
  return r;
}

}  // namespace eqlines
