#pragma once

// Adjacency spectra, tolerance-grouped eigenspaces, the tripod (spider)
// characteristic-polynomial recursion, n_lambda, and interlacing checks.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "eqlines/error.hpp"
#include "eqlines/graph.hpp"

namespace eqlines {

/// sup of the tripod spectral radii; every spider radius lies strictly below.
inline const double kTripodLimit = 3.0 / std::sqrt(2.0);

/// Relative grouping tolerance; the absolute tolerance is this times max(1, lambda_1).
inline constexpr double kDefaultGroupingTol = 1e-7;

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return a;
}

struct EigenGroup {
  double value = 0.0;  // mean of the member eigenvalues
  int multiplicity = 0;
  int first_index = 0;  // 0-based position of the group's first value in `values`
  std::vector<std::vector<double>> basis;  // orthonormal
};

struct SpectralSummary {
  std::vector<double> values;  // descending
  std::vector<EigenGroup> groups;
  double tol = 0.0;

  double lambda1() const { return values.front(); }

  /// 1-based group access, matching the descending-index convention.
  const EigenGroup& group(int k) const {
    if (k < 1 || k > static_cast<int>(groups.size())) {
      throw Error(ErrorKind::BadParams, "eigenvalue group " + std::to_string(k) + " does not exist");
    }
    return groups[static_cast<std::size_t>(k - 1)];
  }
};

namespace detail {

// Eigen's SelfAdjointEigenSolver (Householder tridiagonalization + implicit
// symmetric QR) runs a fixed iteration budget of 30 sweeps per eigenvalue
// and reports NoConvergence past it.
inline Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_symmetric(const Eigen::MatrixXd& m, bool vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::ConvergenceFailure, "symmetric eigensolver did not converge");
  return es;
}

// Fix the sign of an eigenvector: first entry of magnitude > 1e-9 is positive.
inline void normalize_sign(std::vector<double>& v) {
  for (double x : v) {
    if (std::abs(x) > 1e-9) {
      if (x < 0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

}  // namespace detail

/// Eigenvalues (descending) of a symmetric matrix.
inline std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return {};
  auto es = detail::solve_symmetric(m, false);
  std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::reverse(vals.begin(), vals.end());
  return vals;
}

inline std::vector<double> adjacency_eigenvalues(const Graph& g) { return symmetric_eigenvalues(adjacency_matrix(g)); }

/// Full spectral summary. Consecutive descending eigenvalues closer than
/// `tol` share a group; when `tol` is omitted it defaults to
/// 1e-7 * max(1, lambda_1).
inline SpectralSummary adjacency_eigen(const Graph& g, std::optional<double> tol = std::nullopt) {
  const int n = g.order();
  if (n < 1) throw Error(ErrorKind::BadParams, "spectrum of the empty graph");
  auto es = detail::solve_symmetric(adjacency_matrix(g), true);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  const Eigen::MatrixXd& vec = es.eigenvectors();

  SpectralSummary s;
  s.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s.values[i] = ev(n - 1 - i);
  s.tol = tol.value_or(kDefaultGroupingTol * std::max(1.0, s.values.front()));

  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && s.values[j - 1] - s.values[j] <= s.tol) ++j;
    EigenGroup grp;
    grp.first_index = i;
    grp.multiplicity = j - i;
    double sum = 0.0;
    for (int k = i; k < j; ++k) {
      sum += s.values[k];
      const Eigen::VectorXd col = vec.col(n - 1 - k);
      std::vector<double> b(col.data(), col.data() + n);
      if (grp.multiplicity == 1) detail::normalize_sign(b);
      grp.basis.push_back(std::move(b));
    }
    grp.value = sum / grp.multiplicity;
    s.groups.push_back(std::move(grp));
    i = j;
  }
  return s;
}

/// P_0(t) = t, P_1(t) = t^2 - 3, P_l(t) = t P_{l-1}(t) - P_{l-2}(t): the
/// characteristic polynomial of the (l+1)x(l+1) quotient matrix of the
/// tripod T(l,l,l) by distance from its center.
inline double spider_charpoly_eval(int ell, double t) {
  if (ell < 0) throw Error(ErrorKind::BadParams, "spider polynomial index must be non-negative");
  double prev = t;
  if (ell == 0) return prev;
  double cur = t * t - 3.0;
  for (int i = 2; i <= ell; ++i) {
    const double next = t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace detail {

// Largest root of P_ell by bisection on [lo, kTripodLimit + 0.1], where lo is
// the largest root of P_{ell-1}. The quotient matrix is similar to a
// symmetric tridiagonal matrix whose leading principal blocks give
// P_{ell-1}, so the roots of P_{ell-1} and P_ell interlace: P_ell(lo) < 0
// and exactly one root of P_ell lies above lo.
inline double largest_spider_root(int ell, double lo) {
  double hi = kTripodLimit + 0.1;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double p = spider_charpoly_eval(ell, mid);
    if (p == 0.0) return mid;
    (p < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// lambda_1 of the tripod T(l,l,l), to ~1 ulp.
inline double spider_radius(int ell) {
  if (ell < 1) throw Error(ErrorKind::BadParams, "spider_radius needs ell >= 1");
  double r = 0.0;  // largest root of P_0
  for (int k = 1; k <= ell; ++k) r = detail::largest_spider_root(k, r);
  return r;
}

/// All radii r_1..r_max in one pass.
inline std::vector<double> spider_radii(int max_ell) {
  std::vector<double> out;
  double r = 0.0;
  for (int k = 1; k <= max_ell; ++k) {
    r = detail::largest_spider_root(k, r);
    out.push_back(r);
  }
  return out;
}

/// Cross-check route: largest eigenvalue of the symmetrized quotient matrix
/// (tridiagonal, off-diagonals sqrt(3), 1, ..., 1).
inline double spider_radius_tridiagonal(int ell) {
  if (ell < 1) throw Error(ErrorKind::BadParams, "spider_radius needs ell >= 1");
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(ell + 1, ell + 1);
  t(0, 1) = t(1, 0) = std::sqrt(3.0);
  for (int i = 1; i < ell; ++i) t(i, i + 1) = t(i + 1, i) = 1.0;
  return symmetric_eigenvalues(t).front();
}

/// Smallest l with lambda_1(T(l,l,l)) > lambda. Defined for
/// 0 < lambda < 3/sqrt(2).
///
/// The comparison uses the sign of P_l(lambda) rather than the bisected
/// radius, so algebraic-integer inputs such as lambda = 2 (a root of P_2)
/// are decided exactly: r_l > lambda iff lambda < r_{l-1} or P_l(lambda) < 0.
inline int n_lambda(double lambda) {
  if (!(lambda > 0.0) || lambda >= kTripodLimit - 1e-12) {
    throw Error(ErrorKind::OutOfDomain, "n_lambda needs 0 < lambda < 3/sqrt(2)");
  }
  double prev = 0.0;
  for (int ell = 1; ell < 4096; ++ell) {
    if (lambda < prev || spider_charpoly_eval(ell, lambda) < 0.0) return ell;
    prev = detail::largest_spider_root(ell, prev);
  }
  throw Error(ErrorKind::OutOfDomain, "lambda too close to 3/sqrt(2)");
}

/// lambda_1 with a non-negative unit Perron vector.
struct PerronPair {
  double value = 0.0;
  std::vector<double> perron;
};

inline PerronPair spectral_radius(const Graph& g) {
  if (g.order() < 1) throw Error(ErrorKind::BadParams, "spectral radius of the empty graph");
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "spectral_radius needs a connected graph");
  auto es = detail::solve_symmetric(adjacency_matrix(g), true);
  const int n = g.order();
  PerronPair out{es.eigenvalues()(n - 1), {}};
  const Eigen::VectorXd top = es.eigenvectors().col(n - 1);
  // Connected: the top eigenvalue is simple and its eigenvector has constant sign.
  out.perron.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.perron[i] = std::abs(top(i));
  return out;
}

inline double lambda1(const Graph& g) {
  if (g.order() == 0) return -std::numeric_limits<double>::infinity();
  return adjacency_eigenvalues(g).front();
}

/// Cauchy interlacing for an m x m principal submatrix B of an n x n
/// symmetric A (both spectra descending):
///   lambda_k(A) >= lambda_k(B) >= lambda_{k+n-m}(A),  k = 1..m.
inline bool interlacing_check(std::span<const double> parent, std::span<const double> sub, double eps = 1e-9) {
  if (sub.size() > parent.size()) throw Error(ErrorKind::BadParams, "submatrix spectrum longer than parent spectrum");
  const std::size_t shift = parent.size() - sub.size();
  for (std::size_t k = 0; k < sub.size(); ++k) {
    if (sub[k] > parent[k] + eps) return false;
    if (sub[k] < parent[k + shift] - eps) return false;
  }
  return true;
}

}  // namespace eqlines
