#pragma once

// Command-line front end. `run` never touches std::cout/std::cerr directly so
// it can be driven from tests; reports go to `out` (or --out), diagnostics to
// `err`.
//
// Exit codes: 0 all checks passed, 1 a check failed (report still written),
// 2 usage, parse or input-domain error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqlines/certify.hpp"
#include "eqlines/equiangular.hpp"
#include "eqlines/error.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/graph_io.hpp"
#include "eqlines/nodal.hpp"
#include "eqlines/radius_order.hpp"
#include "eqlines/spectra.hpp"

namespace eqlines::cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string output_path;
  std::string input_path;
  std::string format = "g6";
  std::string family_spec;
};

/// Errors that describe the input rather than a failed check.
inline bool is_usage_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::OutOfRange:
    case ErrorKind::SelfLoop:
    case ErrorKind::DuplicateEdge:
    case ErrorKind::BadParams:
    case ErrorKind::ParseError:
    case ErrorKind::OutOfDomain:
    case ErrorKind::DimensionMismatch:
      return true;
    default:
      return false;
  }
}

inline Json graph_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j;
}

struct Check {
  std::string name;
  bool ok = true;
  Json details = Json::object();
};

class Report {
 public:
  Report(std::string command, Json config) : command_(std::move(command)), config_(std::move(config)) {}

  void set_graph(const Graph& g) { graph_ = g; }

  /// Failing checks carry the graph they ran on.
  void add(Check c, const Graph* on = nullptr) {
    if (!c.ok && (on || graph_)) c.details["graph"] = graph_json(on ? *on : *graph_);
    checks_.push_back(std::move(c));
  }

  bool ok() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.ok; });
  }

  Json to_json() const {
    Json j;
    j["command"] = command_;
    j["config"] = config_;
    if (graph_) j["graph"] = graph_json(*graph_);
    Json results = Json::array();
    for (const auto& c : checks_) {
      Json r;
      r["name"] = c.name;
      r["ok"] = c.ok;
      r["details"] = c.details;
      results.push_back(std::move(r));
    }
    j["results"] = std::move(results);
    return j;
  }

 private:
  std::string command_;
  Json config_;
  std::optional<Graph> graph_;
  std::vector<Check> checks_;
};

/// Runs `body`; a library error that is not an input problem becomes a
/// failing check carrying the error kind and message.
inline Check guarded(std::string name, const std::function<Check()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (is_usage_error(e.kind())) throw;
    Check c{std::move(name), false, Json::object()};
    c.details["error"] = std::string(to_string(e.kind()));
    c.details["message"] = e.what();
    return c;
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadParams, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// "kind:a,b,c" or "kind" for parameterless use.
inline Graph parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const auto kind = family_from_name(name);
  if (!kind) throw Error(ErrorKind::BadParams, "unknown family '" + name + "'");
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != tok.size()) throw Error(ErrorKind::BadParams, "bad family parameter '" + tok + "'");
      params.push_back(v);
    }
  }
  return family(*kind, params);
}

inline GraphFormat parse_format(const std::string& f) {
  if (f == "g6") return GraphFormat::Graph6;
  if (f == "edges") return GraphFormat::EdgeList;
  throw Error(ErrorKind::BadParams, "unknown graph format '" + f + "'");
}

inline Graph load_graph(const RunConfig& cfg) {
  if (!cfg.family_spec.empty() && !cfg.input_path.empty()) {
    throw Error(ErrorKind::BadParams, "give either --family or --in, not both");
  }
  if (!cfg.family_spec.empty()) return parse_family(cfg.family_spec);
  if (cfg.input_path.empty()) throw Error(ErrorKind::BadParams, "a graph is required: --family or --in");
  return read_graph(read_file(cfg.input_path), parse_format(cfg.format));
}

inline Json config_json(const RunConfig& cfg) {
  Json j;
  j["tol"] = cfg.tol;
  j["seed"] = cfg.seed;
  j["jobs"] = cfg.jobs;
  if (!cfg.family_spec.empty()) j["family"] = cfg.family_spec;
  if (!cfg.input_path.empty()) {
    j["in"] = cfg.input_path;
    j["format"] = cfg.format;
  }
  return j;
}

/// Maps f over items with up to `jobs` workers; results keep input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int jobs, F f) {
  using R = decltype(f(items.front(), std::size_t{0}));
  std::vector<R> out(items.size());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  const std::size_t per = items.empty() ? 1 : (items.size() + jobs - 1) / jobs;
  std::vector<std::future<void>> parts;
  for (std::size_t b = 0; b < items.size(); b += per) {
    parts.push_back(std::async(std::launch::async, [&, b] {
      for (std::size_t i = b; i < std::min(items.size(), b + per); ++i) out[i] = f(items[i], i);
    }));
  }
  for (auto& p : parts) p.get();
  return out;
}

// ---------------------------------------------------------------------------
// Serializers
// ---------------------------------------------------------------------------

inline Json stats_json(const Graph& g) {
  const auto st = structure_stats(g);
  Json j;
  j["order"] = g.order();
  j["size"] = g.size();
  j["max_degree"] = st.max_degree;
  j["cyclomatic"] = st.cyclomatic;
  j["girth"] = st.girth ? Json(*st.girth) : Json(nullptr);
  j["diameter"] = st.diameter ? Json(*st.diameter) : Json(nullptr);
  j["connected"] = is_connected(g);
  j["lambda1"] = g.order() ? Json(lambda1(g)) : Json(nullptr);
  return j;
}

inline Json certificate_json(const NodalCertificate& c) {
  Json j;
  j["eigenvalue"] = c.eigenvalue;
  j["group_index"] = c.group_index;
  j["eigen_index"] = c.eigen_index;
  j["multiplicity"] = c.multiplicity;
  j["root"] = c.tree.root;
  j["pivots"] = c.pivots;
  j["g"] = c.g;
  j["count_tree"] = c.count_tree;
  j["count_graph"] = c.count_graph;
  j["max_degree"] = c.max_degree;
  j["cyclomatic"] = c.cyclomatic;
  j["bound"] = c.bound;
  j["nodal_upper_bound"] = c.nodal_upper_bound();
  j["residual"] = c.residual;
  j["max_pivot_sign_product"] = c.max_pivot_sign_product;
  j["constructive_ok"] = c.constructive_ok();
  j["upper_bound_ok"] = c.upper_bound_ok();
  return j;
}

inline Json audit_json(const MultiplicityAudit& a) {
  Json j;
  j["g6"] = write_graph6(a.graph);
  j["max_degree"] = a.max_degree;
  j["cyclomatic"] = a.cyclomatic;
  Json groups = Json::array();
  for (const auto& x : a.groups) {
    Json gj;
    gj["k"] = x.k;
    gj["eigenvalue"] = x.eigenvalue;
    gj["multiplicity"] = x.multiplicity;
    gj["bound"] = x.bound;
    gj["bound_ok"] = x.bound_ok;
    gj["certificate_ok"] = x.certificate_ok;
    gj["count_tree"] = x.certificate.count_tree;
    gj["count_graph"] = x.certificate.count_graph;
    gj["residual"] = x.certificate.residual;
    gj["nodal_upper_bound"] = x.nodal_upper_bound;
    gj["sample_counts"] = x.sample_counts;
    gj["nodal_ok"] = x.nodal_ok();
    groups.push_back(std::move(gj));
  }
  j["groups"] = std::move(groups);
  return j;
}

inline Json witness_json(const DecompositionWitness& w) {
  Json j;
  j["verdict"] = std::string(to_string(w.verdict));
  j["lambda"] = w.lambda;
  j["lambda2"] = w.lambda2;
  j["n_lambda"] = w.n_lambda;
  j["max_degree"] = w.max_degree;
  j["cyclomatic"] = w.cyclomatic;
  j["girth"] = w.girth ? Json(*w.girth) : Json(nullptr);
  if (!w.cycle.empty()) j["cycle"] = w.cycle;
  if (w.center >= 0) j["center"] = w.center;
  j["removed"] = w.removed;
  Json comps = Json::array();
  for (const auto& c : w.components) comps.push_back({{"vertices", c.vertices}, {"cyclomatic", c.cyclomatic}});
  j["components"] = std::move(comps);
  j["effective_bound"] = w.effective_bound;
  j["actual_multiplicity"] = w.actual_multiplicity;
  return j;
}

inline std::string family_label(const GridEntry& e) {
  std::string s;
  switch (e.family) {
    case Family::Theta: s = "theta"; break;
    case Family::Dumbbell: s = "dumbbell"; break;
    case Family::Barbell: s = "barbell"; break;
    default: s = "other"; break;
  }
  for (std::size_t i = 0; i < e.params.size(); ++i) s += (i ? "," : ":") + std::to_string(e.params[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// argv-style arguments without the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral graph toolkit: graph families, eigenvalue multiplicity audits, equiangular line systems",
               "eqlines"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "Global tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker count")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--out", cfg.output_path, "Write the report here instead of standard output");

  auto graph_opts = [&cfg](CLI::App* sub) {
    sub->add_option("--in", cfg.input_path, "Input graph file");
    sub->add_option("--format", cfg.format, "Input graph format")->check(CLI::IsMember({"g6", "edges"}))->capture_default_str();
    sub->add_option("--family", cfg.family_spec, "Named family, e.g. theta:3,4,5 or cycle:3");
  };

  // Command-specific options.
  int ell = 0;
  double lambda = 0.0;
  int n_max = 7;
  double match_tol = kDefaultMatchTol;
  int k_group = 2;
  int exhaustive_n = 0;
  int random_count = 0;
  int random_min_n = 8;
  int random_max_n = 40;
  int samples = 10;
  long long delta = 0;
  double alpha = 0.0;
  long long dim = 0;
  std::optional<int> kappa;
  std::string seed_family;
  std::string lines_format = "csv";
  int p_max = 12, q_max = 12, l_max = 12;
  bool raw = false;

  auto* c_family = app.add_subcommand("family", "Build a named graph and print its structure");
  graph_opts(c_family);
  c_family->add_flag("--raw", raw, "Print the graph itself (in --format) instead of a report");

  auto* c_spectrum = app.add_subcommand("spectrum", "Adjacency spectrum with tolerance-grouped eigenvalues");
  graph_opts(c_spectrum);

  auto* c_spider = app.add_subcommand("spider-radius", "Spectral radius of the tripod with three legs of length ell");
  c_spider->add_option("--ell", ell, "Leg length")->required()->check(CLI::PositiveNumber);

  auto* c_nlambda = app.add_subcommand("n-lambda", "Smallest leg length whose tripod radius exceeds lambda");
  c_nlambda->add_option("--lambda", lambda, "Eigenvalue")->required();

  auto* c_kappa = app.add_subcommand("kappa", "Smallest connected graph with spectral radius lambda");
  c_kappa->add_option("--lambda", lambda, "Target spectral radius")->required();
  c_kappa->add_option("--n-max", n_max, "Largest order searched")->capture_default_str();
  c_kappa->add_option("--match-tol", match_tol, "Match tolerance")->capture_default_str();

  auto* c_nodal = app.add_subcommand("nodal", "Constructive nodal certificate for eigenvalue group k");
  graph_opts(c_nodal);
  c_nodal->add_option("--k", k_group, "1-based eigenvalue group index (>= 2)")->capture_default_str();

  auto* c_audit = app.add_subcommand("audit", "Multiplicity and nodal-domain audit");
  graph_opts(c_audit);
  c_audit->add_option("--exhaustive-n", exhaustive_n, "Audit every connected graph on exactly this many vertices");
  c_audit->add_option("--random", random_count, "Audit this many seeded random connected graphs");
  c_audit->add_option("--min-n", random_min_n, "Smallest random order")->capture_default_str();
  c_audit->add_option("--max-n", random_max_n, "Largest random order")->capture_default_str();
  c_audit->add_option("--samples", samples, "Random eigenspace vectors per group")->capture_default_str();

  auto* c_decompose = app.add_subcommand("decompose", "Vertex-removal witness bounding the multiplicity of lambda");
  graph_opts(c_decompose);
  c_decompose->add_option("--lambda", lambda, "Eigenvalue")->required();

  auto* c_bound = app.add_subcommand("bound", "Exact multiplicity bound, or the maximum line count with --alpha");
  c_bound->add_option("--lambda", lambda, "Eigenvalue (0 < lambda < 3/sqrt 2)");
  c_bound->add_option("--delta", delta, "Maximum degree");
  c_bound->add_option("--alpha", alpha, "Angle cosine");
  c_bound->add_option("--dim", dim, "Dimension");
  c_bound->add_option("--kappa", kappa, "Spectral radius order (omit for infinite)");

  auto* c_lines = app.add_subcommand("lines", "Equiangular line systems");
  c_lines->require_subcommand(1);
  auto* c_build = c_lines->add_subcommand("build", "Lower-bound construction from disjoint seed copies");
  c_build->add_option("--alpha", alpha, "Angle cosine")->required();
  c_build->add_option("--dim", dim, "Dimension")->required();
  c_build->add_option("--seed-family", seed_family, "Seed graph, e.g. cycle:3")->required();
  c_build->add_option("--lines-format", lines_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  auto* c_verify = c_lines->add_subcommand("verify", "Check unit norms and pairwise angles");
  c_verify->add_option("--in", cfg.input_path, "Line system file")->required();
  c_verify->add_option("--alpha", alpha, "Angle cosine (required for csv)");
  c_verify->add_option("--lines-format", lines_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  auto* c_grid = app.add_subcommand("grid-check", "Two-cycle families have spectral radius at least 3/sqrt 2");
  c_grid->add_option("--p-max", p_max)->capture_default_str();
  c_grid->add_option("--q-max", q_max)->capture_default_str();
  c_grid->add_option("--l-max", l_max)->capture_default_str();

  auto* c_mono = app.add_subcommand("monotonicity", "Spectral radius under deletion and subdivision");
  graph_opts(c_mono);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const std::string& text) {
    if (cfg.output_path.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.output_path, std::ios::binary);
      if (!f) throw Error(ErrorKind::BadParams, "cannot write '" + cfg.output_path + "'");
      f << text;
    }
  };
  auto finish = [&](const Report& r) {
    emit(r.to_json().dump(2) + "\n");
    return r.ok() ? 0 : 1;
  };

  try {
    Json config = config_json(cfg);

    if (c_family->parsed()) {
      const Graph g = load_graph(cfg);
      if (raw) {
        emit(write_graph(g, parse_format(cfg.format)));
        return 0;
      }
      Report r("family", config);
      r.set_graph(g);
      Json d = stats_json(g);
      d["g6"] = write_graph6(g);
      r.add({"structure", true, d});
      return finish(r);
    }

    if (c_spectrum->parsed()) {
      const Graph g = load_graph(cfg);
      Report r("spectrum", config);
      r.set_graph(g);
      const auto s = adjacency_eigen(g);
      Json groups = Json::array();
      for (const auto& grp : s.groups)
        groups.push_back({{"value", grp.value}, {"multiplicity", grp.multiplicity}, {"first_index", grp.first_index + 1}});
      r.add({"spectrum", true, {{"values", s.values}, {"groups", groups}, {"tol", s.tol}}});
      return finish(r);
    }

    if (c_spider->parsed()) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.15g\n", spider_radius(ell));
      emit(buf);
      return 0;
    }

    if (c_nlambda->parsed()) {
      emit(std::to_string(n_lambda(lambda)) + "\n");
      return 0;
    }

    if (c_kappa->parsed()) {
      config["lambda"] = lambda;
      config["n_max"] = n_max;
      config["match_tol"] = match_tol;
      Report r("kappa", config);
      const auto res = kappa_search(lambda, n_max, match_tol, cfg.jobs);
      Json d;
      d["lambda"] = lambda;
      if (res.found) {
        d["status"] = "found";
        d["kappa"] = res.found->kappa;
        d["certificate"] = graph_json(res.found->certificate);
        d["residual"] = res.found->residual;
      } else {
        d["status"] = "not-found";
        d["searched_up_to"] = res.searched_up_to;
      }
      r.add({"kappa", true, d});
      return finish(r);
    }

    if (c_nodal->parsed()) {
      const Graph g = load_graph(cfg);
      config["k"] = k_group;
      Report r("nodal", config);
      r.set_graph(g);
      r.add(guarded("nodal-certificate", [&] {
        const auto cert = nodal_maximizer(g, adjacency_eigen(g), k_group);
        return Check{"nodal-certificate", cert.holds(), certificate_json(cert)};
      }));
      return finish(r);
    }

    if (c_audit->parsed()) {
      const int modes = (exhaustive_n > 0) + (random_count > 0) + (!cfg.input_path.empty() || !cfg.family_spec.empty());
      if (modes != 1) throw Error(ErrorKind::BadParams, "audit needs exactly one of --exhaustive-n, --random, --in/--family");
      std::vector<Graph> corpus;
      if (exhaustive_n > 0) {
        config["exhaustive_n"] = exhaustive_n;
        corpus = enumerate_connected(exhaustive_n, cfg.jobs);
      } else if (random_count > 0) {
        config["random"] = random_count;
        config["min_n"] = random_min_n;
        config["max_n"] = random_max_n;
        corpus = random_connected_corpus(random_count, random_min_n, random_max_n, cfg.seed);
      } else {
        corpus.push_back(load_graph(cfg));
      }
      config["samples"] = samples;
      Report r("audit", config);
      if (corpus.size() == 1 && exhaustive_n == 0 && random_count == 0) r.set_graph(corpus.front());
      const auto checks = parallel_map(corpus, cfg.jobs, [&](const Graph& g, std::size_t i) {
        return guarded("graph-" + std::to_string(i), [&] {
          const auto a = multiplicity_audit(g, cfg.seed + i, samples);
          return Check{"graph-" + std::to_string(i), a.ok(), audit_json(a)};
        });
      });
      for (std::size_t i = 0; i < checks.size(); ++i) r.add(checks[i], &corpus[i]);
      return finish(r);
    }

    if (c_decompose->parsed()) {
      const Graph g = load_graph(cfg);
      config["lambda"] = lambda;
      Report r("decompose", config);
      r.set_graph(g);
      r.add(guarded("decomposition", [&] {
        const auto w = decompose(g, lambda);
        const BigInt tb = theorem_bound(lambda, std::max(1, w.max_degree));
        Json d = witness_json(w);
        d["theorem_bound"] = tb.str();
        const bool ok = w.actual_multiplicity <= w.effective_bound && BigInt(w.effective_bound) <= tb &&
                        std::all_of(w.components.begin(), w.components.end(),
                                    [](const ResidualComponent& c) { return c.cyclomatic <= 1; });
        return Check{"decomposition", ok, d};
      }));
      return finish(r);
    }

    if (c_bound->parsed()) {
      Report r("bound", config);
      if (alpha > 0.0) {
        if (dim < 2) throw Error(ErrorKind::BadParams, "--alpha needs --dim >= 2");
        const auto f = max_lines_formula(alpha, kappa, dim);
        Json d;
        d["alpha"] = alpha;
        d["lambda"] = lambda_of_alpha(alpha);
        d["dim"] = dim;
        if (const auto* exact = std::get_if<BigInt>(&f)) {
          d["kappa"] = *kappa;
          d["max_lines"] = exact->str();
        } else {
          d["kappa"] = "infinite";
          d["max_lines"] = "d + O(1)";
          d["additive_constant_bound"] = std::get<AsymptoticForm>(f).additive_constant.str();
        }
        r.add({"max-lines", true, d});
      } else {
        if (delta < 1) throw Error(ErrorKind::BadParams, "bound needs --lambda and --delta >= 1, or --alpha and --dim");
        Json d;
        d["lambda"] = lambda;
        d["delta"] = delta;
        d["n_lambda"] = n_lambda(lambda);
        d["bound"] = theorem_bound(lambda, delta).str();
        r.add({"multiplicity-bound", true, d});
      }
      return finish(r);
    }

    if (c_build->parsed()) {
      const auto lb = lower_bound_construct(alpha, static_cast<int>(dim), parse_family(seed_family));
      emit(lines_format == "csv" ? lines_to_csv(lb.lines) : lines_to_json(lb.lines));
      return 0;
    }

    if (c_verify->parsed()) {
      const std::string text = read_file(cfg.input_path);
      LineSystem s;
      if (lines_format == "json") {
        s = lines_from_json(text);
        if (alpha <= 0.0) alpha = s.alpha;
      } else {
        if (alpha <= 0.0) throw Error(ErrorKind::BadParams, "csv input needs --alpha");
        s = lines_from_csv(text, alpha);
      }
      config["alpha"] = alpha;
      Report r("lines verify", config);
      const bool ok = verify_lines(s, alpha, cfg.tol);
      LineSystem measured = s;
      measured.alpha = alpha;
      update_residuals(measured);
      r.add({"lines",
             ok,
             {{"count", s.vectors.size()},
              {"dim", s.dim},
              {"max_norm_residual", measured.max_norm_residual},
              {"max_angle_residual", measured.max_angle_residual}}});
      return finish(r);
    }

    if (c_grid->parsed()) {
      config["p_max"] = p_max;
      config["q_max"] = q_max;
      config["l_max"] = l_max;
      Report r("grid-check", config);
      const auto g = two_cycle_grid_check(p_max, q_max, l_max, cfg.jobs);
      Json minima = Json::array();
      for (const auto& e : g.minima) minima.push_back({{"family", family_label(e)}, {"lambda1", e.lambda1}});
      r.add({"grid", g.ok(), {{"checked", g.checked}, {"limit", kTripodLimit}, {"minima", minima}}});
      for (const auto& e : g.failures) {
        const Graph fg = family(e.family, e.params);
        r.add({family_label(e), false, {{"lambda1", e.lambda1}}}, &fg);
      }
      return finish(r);
    }

    if (c_mono->parsed()) {
      const Graph g = load_graph(cfg);
      Report r("monotonicity", config);
      r.set_graph(g);
      r.add(guarded("monotonicity", [&] {
        const auto m = monotonicity_check(g);
        Json entries = Json::array();
        for (const auto& e : m.entries) {
          if (e.ok) continue;
          Json ej{{"kind", std::string(to_string(e.kind))}, {"before", e.before}, {"after", e.after}};
          if (e.kind == MonotonicityEntry::Kind::DeleteVertex) ej["vertex"] = e.vertex;
          else ej["edge"] = {e.edge.u, e.edge.v};
          entries.push_back(std::move(ej));
        }
        return Check{"monotonicity",
                     m.ok(),
                     {{"lambda1", m.lambda1},
                      {"subdivision_applies", m.subdivision_applies},
                      {"checked", m.entries.size()},
                      {"violations", entries}}};
      }));
      return finish(r);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_error(e.kind()) ? 2 : 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace eqlines::cli
