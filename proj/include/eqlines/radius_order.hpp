#pragma once

// Small connected graphs up to isomorphism and a brute-force search for the
// spectral radius order kappa(lambda): the fewest vertices of a connected
// graph whose largest adjacency eigenvalue equals lambda.
//
// Matches are numerical (|lambda_1 - lambda| <= match_tol); deciding
// lambda_1 = lambda exactly would need algebraic-number arithmetic.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "eqlines/error.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/spectra.hpp"

namespace eqlines {

inline constexpr int kMaxEnumerationOrder = 8;
inline constexpr int kMaxCanonicalOrder = 11;  // n(n-1)/2 <= 64 bits

namespace detail {

inline int pair_offset(int j) { return j * (j - 1) / 2; }

// Isomorphism-invariant vertex colouring by iterated degree refinement.
// Colours are ranks of sorted signatures, so the colour order is invariant.
inline std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (static_cast<int>(uniq.size()) == classes) break;
    classes = static_cast<int>(uniq.size());
  }
  return color;
}

// Branch-and-bound over labelings that respect the colour cells: new label
// L is taken from the cell that owns position L. The code is the upper
// triangle read column by column (pairs (0,1),(0,2),(1,2),(0,3),...), first
// pair in the most significant bit; columns are fixed as labels are placed,
// so partial codes can be compared as prefixes.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), total_bits_(pair_offset(n_)) {
    auto color = refined_colors(g);
    std::vector<int> verts(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) verts[v] = v;
    std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return color[a] < color[b]; });
    cell_of_position_.resize(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) cell_of_position_[p] = color[verts[p]];
    color_ = std::move(color);
    used_.assign(static_cast<std::size_t>(n_), 0);
    label_.assign(static_cast<std::size_t>(n_), -1);
    at_.assign(static_cast<std::size_t>(n_), -1);
  }

  std::uint64_t run() {
    if (n_ <= 1) return 0;
    search(0, 0);
    return best_;
  }

  const std::vector<int>& best_labeling() const { return best_label_; }

 private:
  void search(int pos, std::uint64_t code) {
    if (pos == n_) {
      if (!have_best_ || code < best_) {
        best_ = code;
        best_label_ = label_;
        have_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || color_[v] != cell_of_position_[pos]) continue;
      std::uint64_t next = code;
      for (int i = 0; i < pos; ++i) {
        if (g_.has_edge(at_[i], v)) next |= std::uint64_t{1} << (total_bits_ - 1 - (pair_offset(pos) + i));
      }
      if (have_best_) {
        const int fixed = pair_offset(pos + 1);
        const int shift = total_bits_ - fixed;
        if ((next >> shift) > (best_ >> shift)) continue;
      }
      used_[v] = 1;
      label_[v] = pos;
      at_[pos] = v;
      search(pos + 1, next);
      used_[v] = 0;
      label_[v] = -1;
      at_[pos] = -1;
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_;
  std::vector<int> color_;
  std::vector<int> cell_of_position_;
  std::vector<char> used_;
  std::vector<int> label_;  // vertex -> new label
  std::vector<int> at_;     // new label -> vertex
  std::uint64_t best_ = 0;
  std::vector<int> best_label_;
  bool have_best_ = false;
};

}  // namespace detail

/// Canonical form: the lexicographically smallest adjacency bit string over
/// all relabelings compatible with the refined colour partition. Exact:
/// isomorphic graphs get equal codes and non-isomorphic ones differ.
struct CanonicalForm {
  int n = 0;
  std::uint64_t code = 0;
  std::vector<int> labeling;  // vertex -> canonical label

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.n == b.n && a.code == b.code; }
};

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) throw Error(ErrorKind::BadParams, "canonical form supports at most 11 vertices");
  detail::CanonicalSearch cs(g);
  CanonicalForm cf{g.order(), cs.run(), cs.best_labeling()};
  if (cf.labeling.empty()) cf.labeling.assign(static_cast<std::size_t>(g.order()), 0);
  return cf;
}

inline Graph canonical_graph(const Graph& g) {
  auto cf = canonical_form(g);
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) e.push_back({cf.labeling[x.u], cf.labeling[x.v]});
  return build_graph(g.order(), e);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

namespace detail {

// Every connected graph on n >= 2 vertices has a non-cut vertex, so each one
// arises from a connected graph on n-1 vertices by attaching a new vertex to
// a non-empty neighbour set.
inline std::map<std::uint64_t, Graph> extend_level(std::span<const Graph> parents, int jobs) {
  auto work = [](std::span<const Graph> chunk) {
    std::map<std::uint64_t, Graph> found;
    for (const Graph& p : chunk) {
      const int n = p.order();
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Edge> e = p.edges();
        for (int v = 0; v < n; ++v)
          if (mask & (1u << v)) e.push_back({v, n});
        Graph g = build_graph(n + 1, e);
        auto cf = canonical_form(g);
        if (found.count(cf.code)) continue;
        std::vector<Edge> ce;
        for (const Edge& x : g.edges()) ce.push_back({cf.labeling[x.u], cf.labeling[x.v]});
        found.emplace(cf.code, build_graph(n + 1, ce));
      }
    }
    return found;
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(parents.size())));
  if (jobs == 1) return work(parents);
  std::vector<std::future<std::map<std::uint64_t, Graph>>> parts;
  const std::size_t per = (parents.size() + jobs - 1) / jobs;
  for (std::size_t start = 0; start < parents.size(); start += per) {
    parts.push_back(std::async(std::launch::async, work, parents.subspan(start, std::min(per, parents.size() - start))));
  }
  std::map<std::uint64_t, Graph> merged;
  for (auto& f : parts) merged.merge(f.get());
  return merged;
}

}  // namespace detail

/// Pull-based stream over connected graphs on 1, 2, ..., max_n vertices, one
/// per isomorphism class, ordered by (n, canonical code). A level is built
/// only when the stream reaches it.
class ConnectedGraphStream {
 public:
  explicit ConnectedGraphStream(int max_n, int jobs = 1) : max_n_(max_n), jobs_(jobs) {
    if (max_n < 1 || max_n > kMaxEnumerationOrder) {
      throw Error(ErrorKind::BadParams, "enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
    }
  }

  std::optional<Graph> next() {
    while (index_ >= level_.size()) {
      if (n_ == max_n_) return std::nullopt;
      advance_level();
    }
    return level_[index_++];
  }

  int current_order() const { return n_; }

 private:
  void advance_level() {
    ++n_;
    if (n_ == 1) {
      level_ = {Graph(1)};
    } else {
      auto next = detail::extend_level(level_, jobs_);
      level_.clear();
      for (auto& [code, g] : next) level_.push_back(std::move(g));
    }
    index_ = 0;
  }

  int max_n_;
  int jobs_;
  int n_ = 0;
  std::vector<Graph> level_;
  std::size_t index_ = 0;
};

/// Every connected graph on exactly n vertices, one per isomorphism class.
inline std::vector<Graph> enumerate_connected(int n, int jobs = 1) {
  ConnectedGraphStream s(n, jobs);
  std::vector<Graph> out;
  while (auto g = s.next())
    if (g->order() == n) out.push_back(std::move(*g));
  return out;
}

/// Every connected graph on 1..max_n vertices.
inline std::vector<Graph> enumerate_connected_up_to(int max_n, int jobs = 1) {
  ConnectedGraphStream s(max_n, jobs);
  std::vector<Graph> out;
  while (auto g = s.next()) out.push_back(std::move(*g));
  return out;
}

struct KappaFound {
  int kappa = 0;
  Graph certificate;
  double residual = 0.0;
};

struct KappaResult {
  double lambda = 0.0;
  std::optional<KappaFound> found;  // empty: not found up to `searched_up_to`
  int searched_up_to = 0;
};

inline constexpr double kDefaultMatchTol = 1e-9;

/// Scans connected graphs by increasing order; the first graph whose
/// lambda_1 is within match_tol of lambda wins.
inline KappaResult kappa_search(double lambda, int n_max, double match_tol = kDefaultMatchTol, int jobs = 1) {
  if (!(lambda >= 0.0)) throw Error(ErrorKind::BadParams, "kappa_search needs lambda >= 0");
  if (!(match_tol > 0.0)) throw Error(ErrorKind::BadParams, "match tolerance must be positive");
  ConnectedGraphStream stream(n_max, jobs);
  KappaResult out{lambda, std::nullopt, n_max};
  while (auto g = stream.next()) {
    const double residual = std::abs(lambda1(*g) - lambda);
    if (residual <= match_tol) {
      out.found = KappaFound{g->order(), std::move(*g), residual};
      return out;
    }
  }
  return out;
}

/// Same search over an externally supplied graph list (for instance a
/// graph6 stream from a third-party generator). Disconnected inputs are
/// skipped; among matches the smallest order wins, ties by input position.
inline KappaResult kappa_search(double lambda, std::span<const Graph> graphs, double match_tol = kDefaultMatchTol) {
  if (!(lambda >= 0.0)) throw Error(ErrorKind::BadParams, "kappa_search needs lambda >= 0");
  KappaResult out{lambda, std::nullopt, 0};
  for (const Graph& g : graphs) {
    if (g.order() == 0 || !is_connected(g)) continue;
    out.searched_up_to = std::max(out.searched_up_to, g.order());
    if (out.found && out.found->kappa <= g.order()) continue;
    const double residual = std::abs(lambda1(g) - lambda);
    if (residual <= match_tol) out.found = KappaFound{g.order(), g, residual};
  }
  return out;
}

}  // namespace eqlines
