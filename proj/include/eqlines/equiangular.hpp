#pragma once

// Graphs and equiangular line systems.
//
// With lambda = (1 - alpha) / (2 alpha), the matrix 2 alpha (lambda I - A + J/2)
// has unit diagonal and off-diagonal entries -alpha on edges, +alpha on
// non-edges. When it is PSD of rank r it is the Gram matrix of unit vectors
// in R^r with pairwise inner products +-alpha, i.e. an equiangular line
// system with angle arccos(alpha).

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "eqlines/certify.hpp"
#include "eqlines/error.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/spectra.hpp"

namespace eqlines {

/// Shared PSD/rank tolerance, relative to max(1, |largest eigenvalue|).
inline constexpr double kRankTol = 1e-8;

inline double lambda_of_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorKind::OutOfDomain, "alpha must lie in (0,1)");
  return (1.0 - alpha) / (2.0 * alpha);
}

inline double alpha_of_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error(ErrorKind::OutOfDomain, "lambda must be positive");
  return 1.0 / (2.0 * lambda + 1.0);
}

/// Largest maximum degree a certificate graph may have: floor(6 / alpha^4),
/// evaluated as 6 (2 lambda + 1)^4 with a 1e-9 guard against round-down.
inline long long degree_limit(double alpha) {
  const double inv = 2.0 * lambda_of_alpha(alpha) + 1.0;
  return static_cast<long long>(std::floor(6.0 * inv * inv * inv * inv + 1e-9));
}

/// lambda I - A + J/2.
inline Eigen::MatrixXd gram_matrix(const Graph& g, double lambda) {
  const int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, 0.5);
  m.diagonal().array() += lambda;
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) -= 1.0;
    m(e.v, e.u) -= 1.0;
  }
  return m;
}

struct PsdRank {
  bool psd = true;
  int rank = 0;
  double min_eigenvalue = 0.0;
  std::vector<double> witness;  // unit eigenvector of min_eigenvalue: witness^T M witness = min_eigenvalue
};

inline PsdRank psd_rank(const Eigen::MatrixXd& m, double tol = kRankTol) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::BadParams, "matrix is not square");
  if (m.rows() == 0) return {};
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw Error(ErrorKind::BadParams, "matrix is not symmetric");
  const auto es = detail::solve_symmetric(m, true);
  const Eigen::VectorXd& vals = es.eigenvalues();  // ascending
  const double cut = tol * std::max(1.0, std::abs(vals(vals.size() - 1)));
  PsdRank r;
  r.min_eigenvalue = vals(0);
  r.psd = r.min_eigenvalue >= -cut;
  r.rank = static_cast<int>((vals.array() > cut).count());
  const Eigen::VectorXd w = es.eigenvectors().col(0);
  r.witness.assign(w.data(), w.data() + w.size());
  detail::normalize_sign(r.witness);
  return r;
}

struct EquiangularCertificate {
  Graph graph;
  double alpha = 0.0;
  double lambda = 0.0;
  int dim = 0;
  bool psd = false;
  int rank = 0;
  double min_eigenvalue = 0.0;
  std::vector<double> witness;  // negative direction when !psd
  int max_degree = 0;
  long long degree_limit = 0;
  bool degree_ok = false;

  bool accepted() const { return psd && rank <= dim && degree_ok; }
};

inline EquiangularCertificate certificate_check(const Graph& g, double alpha, int d) {
  if (d < 1) throw Error(ErrorKind::OutOfDomain, "dimension must be >= 1");
  EquiangularCertificate c;
  c.graph = g;
  c.alpha = alpha;
  c.lambda = lambda_of_alpha(alpha);
  c.dim = d;
  const PsdRank pr = psd_rank(gram_matrix(g, c.lambda));
  c.psd = pr.psd;
  c.rank = pr.rank;
  c.min_eigenvalue = pr.min_eigenvalue;
  if (!pr.psd) c.witness = pr.witness;
  c.max_degree = g.max_degree();
  c.degree_limit = degree_limit(alpha);
  c.degree_ok = c.max_degree <= c.degree_limit;
  return c;
}

struct LineSystem {
  double alpha = 0.0;
  int dim = 0;
  std::vector<std::vector<double>> vectors;
  double max_norm_residual = 0.0;   // max | |v_i| - 1 |
  double max_angle_residual = 0.0;  // max | |<v_i,v_j>| - alpha |
};

inline void update_residuals(LineSystem& s) {
  s.max_norm_residual = 0.0;
  s.max_angle_residual = 0.0;
  for (std::size_t i = 0; i < s.vectors.size(); ++i) {
    const Eigen::Map<const Eigen::VectorXd> vi(s.vectors[i].data(), static_cast<Eigen::Index>(s.vectors[i].size()));
    s.max_norm_residual = std::max(s.max_norm_residual, std::abs(vi.norm() - 1.0));
    for (std::size_t j = 0; j < i; ++j) {
      const Eigen::Map<const Eigen::VectorXd> vj(s.vectors[j].data(), static_cast<Eigen::Index>(s.vectors[j].size()));
      s.max_angle_residual = std::max(s.max_angle_residual, std::abs(std::abs(vi.dot(vj)) - s.alpha));
    }
  }
}

/// Factor 2 alpha (lambda I - A + J/2) = U D U^T and return the rows of
/// U D_+^{1/2} (eigenvalues above the rank tolerance) as unit vectors in R^rank.
inline LineSystem extract_lines(const Graph& g, double alpha) {
  const auto cert = certificate_check(g, alpha, std::max(1, g.order()));
  if (!cert.psd || !cert.degree_ok) {
    throw Error(ErrorKind::NotCertified, "graph does not certify an equiangular line system at this alpha");
  }
  const Eigen::MatrixXd gram = 2.0 * alpha * gram_matrix(g, cert.lambda);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::ConvergenceFailure, "eigensolver did not converge");
  const Eigen::VectorXd& ev = es.eigenvalues();
  const int n = g.order();
  const double cut = kRankTol * std::max(1.0, std::abs(ev(n - 1)));
  std::vector<int> cols;
  for (int i = n - 1; i >= 0; --i)
    if (ev(i) > cut) cols.push_back(i);
  LineSystem s;
  s.alpha = alpha;
  s.dim = static_cast<int>(cols.size());
  s.vectors.assign(static_cast<std::size_t>(n), std::vector<double>(cols.size(), 0.0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const double root = std::sqrt(ev(cols[c]));
    for (int i = 0; i < n; ++i) s.vectors[i][c] = es.eigenvectors()(i, cols[c]) * root;
  }
  update_residuals(s);
  return s;
}

/// Unit norms and pairwise |<v_i, v_j>| = alpha, both within tol.
inline bool verify_lines(const LineSystem& s, double alpha, double tol) {
  if (s.vectors.empty()) throw Error(ErrorKind::BadParams, "empty line system");
  for (const auto& v : s.vectors) {
    if (static_cast<int>(v.size()) != s.dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "vector of length " + std::to_string(v.size()) + " in a system of dimension " + std::to_string(s.dim));
    }
  }
  LineSystem copy = s;
  copy.alpha = alpha;
  update_residuals(copy);
  return copy.max_norm_residual <= tol && copy.max_angle_residual <= tol;
}

/// Inverse direction: each line gets the representative whose first nonzero
/// coordinate is positive, and {i,j} is an edge iff <v_i, v_j> < 0. The
/// result is determined only up to switching by the choice of
/// representatives; with normalize_signs=false the given vectors are used as-is.
inline Graph graph_from_lines(const LineSystem& s, bool normalize_signs = true) {
  std::vector<std::vector<double>> reps = s.vectors;
  if (normalize_signs) {
    for (auto& v : reps) {
      auto it = std::find_if(v.begin(), v.end(), [](double x) { return std::abs(x) > 1e-12; });
      if (it != v.end() && *it < 0)
        for (double& x : v) x = -x;
    }
  }
  std::vector<Edge> e;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < reps[i].size(); ++k) dot += reps[i][k] * reps[j][k];
      if (dot < 0) e.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return build_graph(static_cast<int>(reps.size()), e);
}

struct LowerBoundConstruction {
  Graph graph;  // t disjoint copies of the seed
  int copies = 0;
  int kappa = 0;  // seed order
  EquiangularCertificate certificate;
  LineSystem lines;  // embedded in R^d (zero-padded past the certificate rank)
};

/// t = floor((d-1)/(kappa-1)) disjoint copies of a kappa-vertex seed with
/// lambda_1(seed) = lambda(alpha) give t * kappa equiangular lines in R^d.
inline LowerBoundConstruction lower_bound_construct(double alpha, int d, const Graph& seed) {
  const double lambda = lambda_of_alpha(alpha);
  if (seed.order() < 2 || !is_connected(seed)) throw Error(ErrorKind::SeedMismatch, "seed must be connected with >= 2 vertices");
  const double l1 = lambda1(seed);
  if (std::abs(l1 - lambda) > 1e-8) {
    throw Error(ErrorKind::SeedMismatch,
                "seed has lambda_1 = " + std::to_string(l1) + " but alpha needs " + std::to_string(lambda));
  }
  LowerBoundConstruction out;
  out.kappa = seed.order();
  out.copies = (d - 1) / (out.kappa - 1);
  if (out.copies < 1) throw Error(ErrorKind::BadParams, "dimension too small for a single seed copy");
  out.graph = disjoint_copies(seed, out.copies);
  out.certificate = certificate_check(out.graph, alpha, d);
  if (!out.certificate.accepted()) throw Error(ErrorKind::NotCertified, "disjoint copies failed the certificate check");
  out.lines = extract_lines(out.graph, alpha);
  for (auto& v : out.lines.vectors) v.resize(static_cast<std::size_t>(d), 0.0);
  out.lines.dim = d;
  return out;
}

/// N_alpha(d) for large d: floor((d-1) kappa / (kappa-1)) when kappa is
/// finite; otherwise d + O(1), with the O(1) term at most
/// 1 + theorem_bound(lambda, floor(6/alpha^4)).
struct AsymptoticForm {
  BigInt additive_constant;
};

using MaxLines = std::variant<BigInt, AsymptoticForm>;

inline MaxLines max_lines_formula(double alpha, std::optional<int> kappa, long long d) {
  if (d < 2) throw Error(ErrorKind::BadParams, "dimension must be >= 2");
  if (kappa) {
    if (*kappa < 2) throw Error(ErrorKind::BadParams, "finite kappa must be >= 2");
    lambda_of_alpha(alpha);
    return BigInt((d - 1)) * *kappa / (*kappa - 1);
  }
  return AsymptoticForm{1 + theorem_bound(lambda_of_alpha(alpha), degree_limit(alpha))};
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// One vector per row, comma-separated, 17 significant digits.
inline std::string lines_to_csv(const LineSystem& s) {
  std::string out;
  for (const auto& v : s.vectors) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) out += ',';
      out += format_double(v[k]);
    }
    out += '\n';
  }
  return out;
}

inline LineSystem lines_from_csv(std::string_view text, double alpha) {
  LineSystem s;
  s.alpha = alpha;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      std::vector<double> row;
      std::size_t field = 0;
      while (true) {
        std::size_t comma = line.find(',', field);
        std::string cell(line.substr(field, comma == std::string_view::npos ? std::string_view::npos : comma - field));
        char* stop = nullptr;
        const double x = std::strtod(cell.c_str(), &stop);
        if (cell.empty() || *stop != '\0') throw ParseError(pos + field, "malformed number '" + cell + "'");
        row.push_back(x);
        if (comma == std::string_view::npos) break;
        field = comma + 1;
      }
      if (!s.vectors.empty() && row.size() != s.vectors.front().size()) {
        throw ParseError(pos, "row has " + std::to_string(row.size()) + " columns, expected " +
                                  std::to_string(s.vectors.front().size()));
      }
      s.vectors.push_back(std::move(row));
    }
    pos = end + 1;
  }
  s.dim = s.vectors.empty() ? 0 : static_cast<int>(s.vectors.front().size());
  update_residuals(s);
  return s;
}

/// {"header": {"alpha": a, "dim": d}, "vectors": [[...], ...]}
inline std::string lines_to_json(const LineSystem& s) {
  nlohmann::ordered_json j;
  j["header"]["alpha"] = s.alpha;
  j["header"]["dim"] = s.dim;
  j["vectors"] = s.vectors;
  return j.dump() + "\n";
}

inline LineSystem lines_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  LineSystem s;
  try {
    s.alpha = j.at("header").at("alpha").get<double>();
    s.dim = j.at("header").at("dim").get<int>();
    s.vectors = j.at("vectors").get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad line-system JSON: ") + e.what());
  }
  update_residuals(s);
  return s;
}

}  // namespace eqlines
