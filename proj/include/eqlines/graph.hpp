#pragma once

// Simple undirected graphs, the special two-cycle/tripod families, and the
// structural statistics the spectral machinery needs (degree, cyclomatic
// number, girth, diameter, balls, induced subgraphs, BFS trees, end paths).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqlines/error.hpp"
#include "eqlines/random.hpp"

namespace eqlines {

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Edges are stored once with
/// u < v, sorted; neighbor lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw Error(ErrorKind::BadParams, "negative vertex count");
  }

  /// Validating constructor. Pairs may be given in either orientation.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
        throw Error(ErrorKind::OutOfRange, "edge {" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) + "} has an endpoint outside [0," +
                                               std::to_string(n) + ")");
      }
      if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
      g.edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
      throw Error(ErrorKind::DuplicateEdge,
                  "edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "} given twice");
    }
    for (const Edge& e : g.edges_) {
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  int max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

namespace detail {

inline void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorKind::OutOfRange,
                "vertex " + std::to_string(v) + " outside [0," + std::to_string(g.order()) + ")");
  }
}

// Appends the path a=v_0, ..., v_len=b using fresh labels for the interior.
inline void add_path(std::vector<Edge>& edges, int a, int b, int len, int& next_label) {
  int prev = a;
  for (int i = 1; i < len; ++i) {
    edges.push_back({prev, next_label});
    prev = next_label++;
  }
  edges.push_back({prev, b});
}

inline void add_cycle(std::vector<Edge>& edges, int first, int len) {
  for (int i = 0; i < len; ++i) edges.push_back({first + i, first + (i + 1) % len});
}

inline void require(bool ok, std::string_view what) {
  if (!ok) throw Error(ErrorKind::BadParams, std::string(what));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Families. Vertex labels are fixed so that tests can refer to them:
//   path(n)          0-1-...-(n-1)
//   cycle(n)         0-1-...-(n-1)-0
//   complete(n)      K_n
//   star(k)          K_{1,k}; center 0, leaves 1..k
//   theta(p,q,l)     endpoints 0 and 1; then the interiors of the length-p,
//                    length-q and length-l paths, in that order
//   dumbbell(p,q)    first cycle 0..p-1; second cycle 0,p,...,p+q-2
//   barbell(p,q,l)   first cycle 0..p-1; second cycle p..p+q-1; the
//                    interior of the 0 -> p bridge path follows
//   spider(p,q,l)    center 0; legs 1..p, p+1..p+q, p+q+1..p+q+l, each
//                    listed outward from the center
//   tadpole(p,q)     cycle 0..p-1; tail p..p+q-1 hanging off vertex 0
// ---------------------------------------------------------------------------

inline Graph path_graph(int n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return build_graph(n, e);
}

inline Graph cycle_graph(int n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  detail::add_cycle(e, 0, n);
  return build_graph(n, e);
}

inline Graph complete_graph(int n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return build_graph(n, e);
}

inline Graph star_graph(int leaves) {
  detail::require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return build_graph(leaves + 1, e);
}

/// Three internally disjoint paths of lengths p, q, l joining two vertices.
inline Graph theta_graph(int p, int q, int l) {
  detail::require(p >= 2 && q >= 2 && l >= 1, "theta needs p,q >= 2 and l >= 1");
  std::vector<Edge> e;
  int next = 2;
  detail::add_path(e, 0, 1, p, next);
  detail::add_path(e, 0, 1, q, next);
  detail::add_path(e, 0, 1, l, next);
  return build_graph(p + q + l - 1, e);
}

/// Two cycles of lengths p and q sharing exactly one vertex.
inline Graph dumbbell_graph(int p, int q) {
  detail::require(p >= 3 && q >= 3, "dumbbell needs p,q >= 3");
  std::vector<Edge> e;
  detail::add_cycle(e, 0, p);
  int next = p;
  detail::add_path(e, 0, 0, q, next);
  return build_graph(p + q - 1, e);
}

/// Cycles of lengths p and q joined by a path of length l.
inline Graph barbell_graph(int p, int q, int l) {
  detail::require(p >= 3 && q >= 3 && l >= 1, "barbell needs p,q >= 3 and l >= 1");
  std::vector<Edge> e;
  detail::add_cycle(e, 0, p);
  detail::add_cycle(e, p, q);
  int next = p + q;
  detail::add_path(e, 0, p, l, next);
  return build_graph(p + q + l - 1, e);
}

/// Three paths of lengths p, q, l sharing their initial vertex.
inline Graph spider_graph(int p, int q, int l) {
  detail::require(p >= 1 && q >= 1 && l >= 1, "spider needs p,q,l >= 1");
  std::vector<Edge> e;
  int next = 1;
  for (int len : {p, q, l}) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      e.push_back({prev, next});
      prev = next++;
    }
  }
  return build_graph(p + q + l + 1, e);
}

/// Cycle of length p with a pendant path of length q.
inline Graph tadpole_graph(int p, int q) {
  detail::require(p >= 3 && q >= 1, "tadpole needs p >= 3 and q >= 1");
  std::vector<Edge> e;
  detail::add_cycle(e, 0, p);
  int prev = 0;
  for (int i = 0; i < q; ++i) {
    e.push_back({prev, p + i});
    prev = p + i;
  }
  return build_graph(p + q, e);
}

enum class Family { Theta, Dumbbell, Barbell, Spider, Tadpole, Path, Cycle, Complete, Star };

inline std::optional<Family> family_from_name(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "theta") return Family::Theta;
  if (s == "dumbbell") return Family::Dumbbell;
  if (s == "barbell") return Family::Barbell;
  if (s == "spider") return Family::Spider;
  if (s == "tadpole") return Family::Tadpole;
  if (s == "path") return Family::Path;
  if (s == "cycle") return Family::Cycle;
  if (s == "complete") return Family::Complete;
  if (s == "star") return Family::Star;
  return std::nullopt;
}

inline Graph family(Family kind, std::span<const int> params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorKind::BadParams,
                  "expected " + std::to_string(count) + " parameters, got " + std::to_string(params.size()));
    }
  };
  switch (kind) {
    case Family::Theta: want(3); return theta_graph(params[0], params[1], params[2]);
    case Family::Dumbbell: want(2); return dumbbell_graph(params[0], params[1]);
    case Family::Barbell: want(3); return barbell_graph(params[0], params[1], params[2]);
    case Family::Spider: want(3); return spider_graph(params[0], params[1], params[2]);
    case Family::Tadpole: want(2); return tadpole_graph(params[0], params[1]);
    case Family::Path: want(1); return path_graph(params[0]);
    case Family::Cycle: want(1); return cycle_graph(params[0]);
    case Family::Complete: want(1); return complete_graph(params[0]);
    case Family::Star: want(1); return star_graph(params[0]);
  }
  throw Error(ErrorKind::BadParams, "unknown family");
}

inline Graph family(Family kind, std::initializer_list<int> params) {
  return family(kind, std::span<const int>(params.begin(), params.size()));
}

/// t vertex-disjoint copies; copy i occupies labels [i*n, (i+1)*n).
inline Graph disjoint_copies(const Graph& g, int t) {
  detail::require(t >= 1, "need at least one copy");
  const int n = g.order();
  std::vector<Edge> e;
  e.reserve(static_cast<std::size_t>(g.size()) * t);
  for (int c = 0; c < t; ++c)
    for (const Edge& x : g.edges()) e.push_back({x.u + c * n, x.v + c * n});
  return build_graph(n * t, e);
}

// ---------------------------------------------------------------------------
// Traversal
// ---------------------------------------------------------------------------

/// Multi-source BFS distances; -1 marks unreachable vertices.
inline std::vector<int> distances_from(const Graph& g, std::span<const int> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue;
  for (int s : sources) {
    detail::check_vertex(g, s);
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline std::vector<int> distances_from(const Graph& g, int source) {
  return distances_from(g, std::span<const int>(&source, 1));
}

/// Vertices within distance k of the seed set, ascending.
inline std::vector<int> ball(const Graph& g, std::span<const int> seed, int k) {
  detail::require(k >= 0, "ball radius must be non-negative");
  auto dist = distances_from(g, seed);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (dist[v] >= 0 && dist[v] <= k) out.push_back(v);
  return out;
}

inline std::vector<int> ball(const Graph& g, std::initializer_list<int> seed, int k) {
  return ball(g, std::span<const int>(seed.begin(), seed.size()), k);
}

/// Connected components ordered by their smallest label; each sorted.
inline std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (int w : g.neighbors(u)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

/// |E| - |V| + c, which is the usual |E| - |V| + 1 for connected graphs.
inline int cyclomatic_number(const Graph& g) {
  return g.size() - g.order() + static_cast<int>(components(g).size());
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;  // original[i] = label in the host graph of new vertex i
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep) {
  std::vector<int> verts(keep.begin(), keep.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    detail::check_vertex(g, verts[i]);
    relabel[verts[i]] = static_cast<int>(i);
  }
  std::vector<Edge> e;
  for (const Edge& x : g.edges())
    if (relabel[x.u] >= 0 && relabel[x.v] >= 0) e.push_back({relabel[x.u], relabel[x.v]});
  return {build_graph(static_cast<int>(verts.size()), e), std::move(verts)};
}

inline InducedSubgraph induced_subgraph(const Graph& g, std::initializer_list<int> keep) {
  return induced_subgraph(g, std::span<const int>(keep.begin(), keep.size()));
}

/// Complement vertex set V \ removed, ascending.
inline std::vector<int> complement_set(const Graph& g, std::span<const int> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (int v : removed) {
    detail::check_vertex(g, v);
    gone[v] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (!gone[v]) out.push_back(v);
  return out;
}

inline Graph remove_vertex(const Graph& g, int v) {
  detail::check_vertex(g, v);
  return induced_subgraph(g, complement_set(g, std::span<const int>(&v, 1))).graph;
}

inline Graph remove_edge(const Graph& g, Edge e) {
  Edge c{std::min(e.u, e.v), std::max(e.u, e.v)};
  std::vector<Edge> rest;
  bool found = false;
  for (const Edge& x : g.edges()) {
    if (x == c) {
      found = true;
      continue;
    }
    rest.push_back(x);
  }
  if (!found) throw Error(ErrorKind::NoSuchEdge, "no edge {" + std::to_string(c.u) + "," + std::to_string(c.v) + "}");
  return build_graph(g.order(), rest);
}

struct SpanningTree {
  int root = 0;
  std::vector<int> parent;  // parent[root] == root
  std::vector<int> depth;
  std::vector<int> order;   // BFS visitation order
};

/// BFS spanning tree; neighbors are explored in ascending label order.
inline SpanningTree bfs_tree(const Graph& g, int root) {
  detail::check_vertex(g, root);
  const auto n = static_cast<std::size_t>(g.order());
  SpanningTree t{root, std::vector<int>(n, -1), std::vector<int>(n, -1), {}};
  t.parent[root] = root;
  t.depth[root] = 0;
  t.order.push_back(root);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    int u = t.order[head];
    for (int w : g.neighbors(u)) {
      if (t.depth[w] < 0) {
        t.depth[w] = t.depth[u] + 1;
        t.parent[w] = u;
        t.order.push_back(w);
      }
    }
  }
  if (t.order.size() != n) throw Error(ErrorKind::Disconnected, "graph is not connected");
  return t;
}

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

struct StructureStats {
  int max_degree = 0;
  int cyclomatic = 0;
  std::optional<int> girth;     // nullopt: forest (infinite girth)
  std::optional<int> diameter;  // nullopt: disconnected (infinite diameter)
};

inline std::optional<int> girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n), parent(n);
  for (int r = 0; r < g.order(); ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{r};
    dist[r] = 0;
    parent[r] = -1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

inline std::optional<int> diameter(const Graph& g) {
  int diam = 0;
  for (int r = 0; r < g.order(); ++r) {
    auto dist = distances_from(g, r);
    for (int d : dist) {
      if (d < 0) return std::nullopt;
      diam = std::max(diam, d);
    }
  }
  return diam;
}

inline StructureStats structure_stats(const Graph& g) {
  return {g.max_degree(), cyclomatic_number(g), girth(g), diameter(g)};
}

/// One shortest cycle, as vertices in cyclic order; empty for forests.
/// Among shortest cycles the one with the lexicographically smallest sorted
/// vertex set is returned, so the choice is deterministic.
inline std::vector<int> shortest_cycle(const Graph& g) {
  std::vector<int> best_cycle;
  std::vector<int> best_key;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n), parent(n);
  auto path_to_root = [&](int v) {
    std::vector<int> p;
    for (; v != -1; v = parent[v]) p.push_back(v);
    return p;  // v, ..., root
  };
  for (int r = 0; r < g.order(); ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{r};
    dist[r] = 0;
    parent[r] = -1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
          continue;
        }
        if (w == parent[u] || (w < u && dist[w] == dist[u])) continue;
        const std::size_t len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
        if (!best_cycle.empty() && len > best_cycle.size()) continue;
        auto pu = path_to_root(u);
        auto pw = path_to_root(w);
        // The closed walk is a simple cycle iff the two root paths meet only at r.
        std::vector<int> su(pu.begin(), pu.end() - 1), sw(pw.begin(), pw.end() - 1);
        std::sort(su.begin(), su.end());
        std::sort(sw.begin(), sw.end());
        std::vector<int> common;
        std::set_intersection(su.begin(), su.end(), sw.begin(), sw.end(), std::back_inserter(common));
        if (!common.empty()) continue;
        std::vector<int> cycle(pu.rbegin(), pu.rend());  // r ... u
        cycle.insert(cycle.end(), pw.begin(), pw.end() - 1);  // w ... (child of r)
        std::vector<int> key = cycle;
        std::sort(key.begin(), key.end());
        if (best_cycle.empty() || cycle.size() < best_cycle.size() ||
            (cycle.size() == best_cycle.size() && key < best_key)) {
          best_cycle = std::move(cycle);
          best_key = std::move(key);
        }
      }
    }
  }
  return best_cycle;
}

// ---------------------------------------------------------------------------
// End paths and subdivision
// ---------------------------------------------------------------------------

/// Edges lying on some end path, i.e. on a pendant path whose interior
/// vertices have degree 2 and whose last vertex has degree 1.
inline std::vector<Edge> end_path_edges(const Graph& g) {
  std::vector<Edge> out;
  for (int leaf = 0; leaf < g.order(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    int prev = leaf;
    int cur = g.neighbors(leaf).front();
    while (true) {
      out.push_back({std::min(prev, cur), std::max(prev, cur)});
      if (g.degree(cur) != 2) break;
      const auto& nb = g.neighbors(cur);
      int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      if (cur == leaf) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Replaces edge e={x,y} by the path x - n - y through a new vertex n.
inline Graph subdivide_edge(const Graph& g, Edge e) {
  Edge c{std::min(e.u, e.v), std::max(e.u, e.v)};
  if (!g.has_edge(c.u, c.v)) {
    throw Error(ErrorKind::NoSuchEdge, "no edge {" + std::to_string(c.u) + "," + std::to_string(c.v) + "}");
  }
  std::vector<Edge> rest;
  for (const Edge& x : g.edges())
    if (x != c) rest.push_back(x);
  const int fresh = g.order();
  rest.push_back({c.u, fresh});
  rest.push_back({c.v, fresh});
  return build_graph(fresh + 1, rest);
}

// ---------------------------------------------------------------------------
// Random graphs
// ---------------------------------------------------------------------------

/// Erdos-Renyi G(n,p). Pairs (i,j), i<j, are visited in lexicographic order;
/// each draws one 64-bit word from std::mt19937_64(seed) and keeps the edge
/// iff (word >> 11) * 2^-53 < p. mt19937_64 is fully specified by the
/// standard, so a seed names the same graph on every platform.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  detail::require(n >= 0, "vertex count must be non-negative");
  detail::require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) e.push_back({i, j});
    }
  }
  return build_graph(n, e);
}

/// Connected G(n,p) sample: attempt a uses probability min(1, p + a/20) and
/// seed + a * 0x9E3779B97F4A7C15; the first connected draw is returned.
inline Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  detail::require(n >= 1, "vertex count must be positive");
  for (std::uint64_t a = 0;; ++a) {
    const double q = std::min(1.0, p + 0.05 * static_cast<double>(a));
    Graph g = random_graph(n, q, seed + a * 0x9E3779B97F4A7C15ull);
    if (is_connected(g)) return g;
  }
}

/// `count` connected graphs: order uniform on [min_n, max_n], edge
/// probability uniform on [0.05, 0.5), all drawn from one Rng(seed).
inline std::vector<Graph> random_connected_corpus(int count, int min_n, int max_n, std::uint64_t seed) {
  detail::require(count >= 0 && min_n >= 1 && min_n <= max_n, "bad random corpus parameters");
  Rng rng(seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n = rng.uniform_int(min_n, max_n);
    const double p = 0.05 + 0.45 * rng.uniform();
    out.push_back(random_connected_graph(n, p, rng.bits()));
  }
  return out;
}

}  // namespace eqlines
