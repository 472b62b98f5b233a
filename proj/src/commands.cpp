#include "inducibility/commands.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "inducibility/bounds.hpp"
#include "inducibility/cache.hpp"
#include "inducibility/catalog.hpp"
#include "inducibility/dsl.hpp"
#include "inducibility/monte_carlo.hpp"
#include "inducibility/nesting.hpp"
#include "inducibility/quantum_spec.hpp"
#include "inducibility/serialize.hpp"
#include "inducibility/spectral.hpp"

namespace inducibility {

namespace {

struct Globals {
  std::string format = "json";
  std::string cache_dir;
  std::uint64_t budget = kDefaultAssignmentBudget;
  bool approx = false;
  std::string route = "auto";
  int max_vertices = 4096;
};

struct Outcome {
  Report report;
  std::string table;  // replaces the default table rendering when set
  int status = 0;
};

ProfileOptions profile_options(const Globals& g) {
  ProfileOptions o;
  o.eval.approximate = g.approx;
  o.eval.max_vertices = g.max_vertices;
  o.route = g.route == "direct" ? Route::Direct : Route::Auto;
  o.budget = g.budget;
  return o;
}

Report base_report(std::string command, std::optional<int> t, const Globals& g) {
  Report r;
  r.command = std::move(command);
  r.t = t;
  r.meta.budget = g.budget;
  return r;
}

template <typename Scalar>
void add_values(Report& r, const std::vector<std::string>& names, const Vector<Scalar>& values) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    r.basis.push_back(names[i]);
    r.values.push_back(ReportValue::of(names[i], values(static_cast<Eigen::Index>(i))));
  }
}

std::vector<std::string> mask_names(int t) {
  std::vector<std::string> out;
  for (LabeledMask m = 0; m < labeled_count(t); ++m) out.push_back(std::to_string(m));
  return out;
}

template <typename Scalar>
Json typed_values(const std::vector<std::string>& names, const Vector<Scalar>& values) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < names.size(); ++i) {
    arr.push_back(value_json(ReportValue::of(names[i], values(static_cast<Eigen::Index>(i)))));
  }
  return arr;
}

std::string value_text(const Rational& q) { return to_string(q); }
std::string value_text(double x) { return format_double(x); }

// Splits at commas outside parentheses and quotes.
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  bool quoted = false;
  for (char c : text) {
    if (c == '"') quoted = !quoted;
    if (!quoted && c == '(') ++depth;
    if (!quoted && c == ')') --depth;
    if (!quoted && depth == 0 && c == ',') {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

LabeledGraph require_graph(const Expr& e, const Globals& g, const char* why) {
  EvalOptions eo;
  eo.approximate = g.approx;
  eo.max_vertices = g.max_vertices;
  Construction c = evaluate(e, eo);
  if (!is_graph(c)) throw std::invalid_argument(std::string(why) + " needs a graph, but the expression is a step model");
  return std::get<LabeledGraph>(std::move(c));
}

template <typename Scalar>
Outcome profile_outcome(const Expr& e, int t, const std::string& flavor, const Globals& g) {
  Outcome o{base_report("profile", t, g), {}, 0};
  const ProfileOptions opts = profile_options(g);
  const IsoTable& table = iso_table(t);
  if (flavor == "induced") {
    const LabeledGraph graph = require_graph(e, g, "an induced profile");
    const ProfileVector<Rational> p = induced_profile(graph, t, g.budget);
    add_values(o.report, table.names(), p.values);
    o.report.extra["flavor"] = "induced";
    return o;
  }
  LabeledProfile<Scalar> r;
  if constexpr (is_exact_v<Scalar>) {
    r = labeled_profile_exact(e, t, opts);
  } else {
    r = labeled_profile_approx(e, t, opts);
  }
  if (flavor == "repetitive") {
    add_values(o.report, table.names(), to_unlabeled(r).values);
    o.report.extra["flavor"] = "repetitive";
    return o;
  }
  Vector<Scalar> per_mask = r.values;
  Vector<Scalar> per_type(table.size());
  if (flavor == "spectral") {
    const SpectralProfile<Scalar> hat = fourier(r);
    per_mask = hat.values;
    per_type = by_type(hat);
  } else if (flavor == "labeled") {
    for (int i = 0; i < table.size(); ++i) per_type(i) = r.values(table[i].representative);
  } else {
    throw std::invalid_argument("unknown flavor '" + flavor + "'");
  }
  add_values(o.report, mask_names(t), per_mask);
  o.report.extra["flavor"] = flavor;
  o.report.extra["mask_order"] = "bit s is the s-th pair (i,j), i<j, in lexicographic order";
  o.report.extra["by_type"] = typed_values(table.names(), per_type);
  std::vector<std::vector<std::string>> rows{{"type", "value per labeled graph"}};
  for (int i = 0; i < table.size(); ++i) rows.push_back({table[i].name, value_text(per_type(i))});
  o.table = to_table_text(o.report) + "\nby type\n" + align_columns(rows);
  return o;
}

template <typename Scalar>
Outcome density_outcome(const Expr& e, int t, const QuantumGraph& q, const std::string& flavor, const Globals& g) {
  Outcome o{base_report("density", t, g), {}, 0};
  if (flavor == "induced") {
    const LabeledGraph graph = require_graph(e, g, "an induced density");
    const Rational v = quantum_density(q, induced_profile(graph, t, g.budget));
    o.report.basis.push_back(print_quantum(q));
    o.report.values.push_back(ReportValue::of(print_quantum(q), v));
  } else if (flavor == "repetitive") {
    const ProfileOptions opts = profile_options(g);
    Scalar v;
    if constexpr (is_exact_v<Scalar>) {
      v = quantum_density(q, to_unlabeled(labeled_profile_exact(e, t, opts)));
    } else {
      v = quantum_density(q, to_unlabeled(labeled_profile_approx(e, t, opts)));
    }
    o.report.basis.push_back(print_quantum(q));
    o.report.values.push_back(ReportValue::of(print_quantum(q), v));
  } else {
    throw std::invalid_argument("density flavor must be induced or repetitive");
  }
  o.report.extra["flavor"] = flavor;
  return o;
}

std::string matrix_table(const TransitionMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  header.insert(header.end(), m.basis.begin(), m.basis.end());
  rows.push_back(header);
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    std::vector<std::string> row{m.basis[i]};
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) row.push_back(to_string(m.entries(i, j)));
    rows.push_back(std::move(row));
  }
  return align_columns(rows);
}

Outcome nested_outcome(const Expr& e, int t, bool matrix, const Globals& g) {
  Outcome o{base_report("nested-profile", t, g), {}, 0};
  const LabeledGraph base = require_graph(e, g, "nested-profile");
  const NestedProfile nested = stationary_profile(base, t);
  add_values(o.report, iso_table(t).names(), nested.types.values);
  o.report.extra["base"] = nested.base;
  if (matrix) {
    const TransitionMatrix m = transition_matrix(base, t);
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.entries.cols(); ++j) row.push_back(to_string(m.entries(i, j)));
      rows.push_back(std::move(row));
    }
    o.report.extra["matrix"] = std::move(rows);
    o.table = to_table_text(o.report) + "\ntransition matrix (column-stochastic)\n" + matrix_table(m);
  }
  return o;
}

Outcome limit_outcome(int t, const QuantumGraph& q, const std::vector<std::string>& factors,
                      const std::string& nested, const Globals& g) {
  Outcome o{base_report("limit", t, g), {}, 0};
  if (g.approx) throw std::invalid_argument("limit is computed exactly; drop --approx");
  const ProfileOptions opts = profile_options(g);
  std::vector<SpectralProfile<Rational>> hats;
  Json printed = Json::array();
  for (const auto& f : factors) {
    const ExprPtr e = parse_expr(f);
    printed.push_back(print_expr(*e));
    hats.push_back(fourier(labeled_profile_exact(*e, t, opts)));
  }
  if (!nested.empty()) {
    const ExprPtr e = parse_expr(nested);
    hats.push_back(nested_spectral(require_graph(*e, g, "the nested factor"), t));
    o.report.extra["nested"] = print_expr(*e);
  }
  if (hats.empty()) throw std::invalid_argument("limit needs --factors or --nested");
  o.report.extra["factors"] = std::move(printed);
  const Rational v = product_limit_density(q, hats);
  o.report.basis.push_back(print_quantum(q));
  o.report.values.push_back(ReportValue::of(print_quantum(q), v));
  return o;
}

Outcome estimate_outcome(const Expr& e, int t, std::uint64_t samples, std::uint64_t seed, const Globals& g) {
  Outcome o{base_report("estimate", t, g), {}, 0};
  o.report.meta.seed = seed;
  EvalOptions eo;
  eo.approximate = g.approx;
  eo.max_vertices = g.max_vertices;
  const Construction c = evaluate(e, eo);
  if (t > kMaxOrder) {
    const auto* graph = std::get_if<LabeledGraph>(&c);
    if (!graph) throw std::invalid_argument("orders above 5 are estimated on graphs only");
    const MassEstimate m = monte_carlo_clique_anticlique(*graph, t, samples, seed);
    const std::string name = "K" + std::to_string(t) + "+A" + std::to_string(t);
    ReportValue v = ReportValue::of(name, Rational(Integer(m.hits), Integer(m.samples)));
    v.standard_error = m.standard_error;
    o.report.basis.push_back(name);
    o.report.values.push_back(std::move(v));
  } else {
    ProfileEstimate est;
    if (auto* graph = std::get_if<LabeledGraph>(&c)) {
      est = monte_carlo_profile(*graph, t, samples, seed);
    } else if (auto* m = std::get_if<ExactModel>(&c)) {
      est = monte_carlo_profile(*m, t, samples, seed);
    } else {
      est = monte_carlo_profile(std::get<ApproxModel>(c), t, samples, seed);
    }
    const IsoTable& table = iso_table(t);
    for (int i = 0; i < table.size(); ++i) {
      ReportValue v = ReportValue::of(table[i].name, Rational(Integer(est.hits(i)), Integer(samples)));
      v.standard_error = est.standard_error(i);
      o.report.basis.push_back(table[i].name);
      o.report.values.push_back(std::move(v));
    }
  }
  o.report.extra["samples"] = samples;
  return o;
}

Outcome bounds_outcome(int t, const Globals& g) {
  Outcome o{base_report("bounds", t, g), {}, 0};
  const ClosedFormBounds b = closed_form_bounds(t);
  for (const auto& [name, value] : {std::pair<std::string, Rational>{"pippenger_golumbic", b.pippenger_golumbic},
                                    {"exoo", b.exoo},
                                    {"path_upper", b.path_upper}}) {
    o.report.basis.push_back(name);
    o.report.values.push_back(ReportValue::of(name, value));
  }
  return o;
}

Outcome tables_outcome(const std::string& which, const std::string& catalog, const Globals& g) {
  Outcome o{base_report("tables", std::nullopt, g), {}, 0};
  const std::vector<CatalogRow> rows = catalog.empty() ? builtin_catalog() : load_catalog(catalog);
  const std::vector<BoundReport> reports = reproduce_table(which == "all" ? "" : which, rows, g.budget);
  if (reports.empty()) throw std::invalid_argument("no catalogue rows in group '" + which + "'");
  for (const auto& r : reports) {
    o.report.basis.push_back(r.row.id);
    if (r.computed_exact) {
      o.report.values.push_back(ReportValue::of(r.row.id, *r.computed_exact));
    } else {
      o.report.values.push_back(ReportValue::of(r.row.id, r.computed));
    }
  }
  o.report.extra["which"] = which;
  o.report.extra["rows"] = reports_json(reports);
  const bool ok = all_passed(reports);
  o.report.extra["passed"] = ok;
  o.table = reports_table(reports);
  o.status = ok ? 0 : 1;
  return o;
}

Outcome convert_outcome(const std::string& g6, const std::string& encode, const Globals& g) {
  Outcome o{base_report("convert", std::nullopt, g), {}, 0};
  const ExprPtr e = g6.empty() ? parse_expr(encode) : nullptr;
  const LabeledGraph graph = e ? require_graph(*e, g, "convert --encode") : graph6_decode(g6);
  if (e) o.report.extra["expression"] = print_expr(*e);
  const std::string code = graph6_encode(graph);
  Json edges = Json::array();
  for (int u = 0; u < graph.order(); ++u) {
    for (int v = u + 1; v < graph.order(); ++v) {
      if (graph.adjacent(u, v)) edges.push_back(Json::array({u, v}));
    }
  }
  o.report.extra["graph6"] = code;
  o.report.extra["order"] = graph.order();
  o.report.extra["edges"] = edges;
  o.table = "graph6  " + code + "\norder   " + std::to_string(graph.order()) + "\nedges   " + edges.dump() + "\n";
  return o;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and estimated induced-subgraph densities of graph constructions", "induce"};
  app.set_version_flag("--version", std::string(INDUCIBILITY_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cache", g.cache_dir, "Directory of cached results");
  app.add_option("--budget", g.budget, "Maximum assignments or subsets enumerated exactly");
  app.add_flag("--approx", g.approx, "Floating-point evaluation (needed for alpha = 2 + sqrt 3)");
  app.add_option("--route", g.route, "How profiles of products are computed")
      ->check(CLI::IsMember({"auto", "direct"}));
  app.add_option("--max-vertices", g.max_vertices, "Largest graph the evaluator will build");

  int t = 4;
  std::string expr, quantum, flavor, factors, nested, which = "all", catalog, g6, encode;
  std::uint64_t samples = 1000000, seed = 1;
  bool matrix = false;

  auto* profile = app.add_subcommand("profile", "Profile of a construction");
  profile->add_option("--t", t, "Sample order")->required();
  profile->add_option("--flavor", flavor, "induced, repetitive, labeled or spectral")
      ->check(CLI::IsMember({"induced", "repetitive", "labeled", "spectral"}));
  profile->add_option("expr", expr, "Construction expression")->required();

  auto* density = app.add_subcommand("density", "Density of a quantum graph in a construction");
  density->add_option("--t", t, "Sample order")->required();
  density->add_option("--quantum", quantum, "Quantum graph, e.g. K4+A4")->required();
  density->add_option("--flavor", flavor, "induced or repetitive")->check(CLI::IsMember({"induced", "repetitive"}));
  density->add_option("expr", expr, "Construction expression")->required();

  auto* nested_cmd = app.add_subcommand("nested-profile", "Limiting profile of the nested blow-up");
  nested_cmd->add_option("--t", t, "Sample order")->required();
  nested_cmd->add_flag("--matrix", matrix, "Also print the transition matrix");
  nested_cmd->add_option("expr", expr, "Loopless base graph")->required();

  auto* limit = app.add_subcommand("limit", "Density in the limit of a tensor chain");
  limit->add_option("--t", t, "Sample order")->required();
  limit->add_option("--quantum", quantum, "Quantum graph")->required();
  limit->add_option("--factors", factors, "Comma-separated tensor factors");
  limit->add_option("--nested", nested, "Base graph of a nested factor");

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of the repetitive profile");
  estimate->add_option("--t", t, "Sample order (6..8 estimates K_t + A_t only)")->required();
  estimate->add_option("--samples", samples, "Sample count")->check(CLI::PositiveNumber);
  estimate->add_option("--seed", seed, "Generator seed");
  estimate->add_option("expr", expr, "Construction expression")->required();

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds");
  bounds->add_option("--t", t, "Order")->required();

  auto* tables = app.add_subcommand("tables", "Reproduce catalogued results");
  tables->add_option("--which", which, "exoo4, headline, appendix5 or all");
  tables->add_option("--catalog", catalog, "JSON catalogue replacing the built-in rows");

  auto* convert = app.add_subcommand("convert", "graph6 conversion");
  auto* from = convert->add_option("--graph6", g6, "Decode a graph6 string");
  auto* to = convert->add_option("--encode", encode, "Encode a graph expression");
  from->excludes(to);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "convert" && g6.empty() && encode.empty()) throw std::invalid_argument("convert needs --graph6 or --encode");

    // Canonical request text for the cache key.
    std::ostringstream request;
    request << name << "\nformat=" << g.format << "\nbudget=" << g.budget << "\napprox=" << g.approx
            << "\nroute=" << g.route << "\nmax_vertices=" << g.max_vertices << "\nt=" << t;
    ExprPtr parsed;
    if (!expr.empty()) {
      parsed = parse_expr(expr);
      request << "\nexpr=" << print_expr(*parsed);
    }
    std::optional<QuantumGraph> q;
    if (!quantum.empty()) {
      q = parse_quantum(quantum, t);
      request << "\nquantum=" << print_quantum(*q);
    }
    std::vector<std::string> factor_list;
    if (!factors.empty()) {
      for (const auto& f : split_top_level(factors)) factor_list.push_back(print_expr(*parse_expr(f)));
    }
    for (const auto& f : factor_list) request << "\nfactor=" << f;
    if (!nested.empty()) request << "\nnested=" << print_expr(*parse_expr(nested));
    request << "\nflavor=" << flavor << "\nmatrix=" << matrix << "\nsamples=" << samples << "\nseed=" << seed
            << "\nwhich=" << which << "\ngraph6=" << g6 << "\nencode=" << encode;
    if (!catalog.empty()) request << "\ncatalog=" << sha256_hex(catalog) << "\n";

    std::optional<ResultCache> cache;
    std::string key;
    if (!g.cache_dir.empty() && catalog.empty()) {
      cache.emplace(g.cache_dir);
      key = cache->key(request.str());
      if (auto hit = cache->load(key)) {
        const Json entry = Json::parse(*hit, nullptr, false);
        if (entry.is_object() && entry.contains("status") && entry.contains("output")) {
          out << entry["output"].get<std::string>();
          return entry["status"].get<int>();
        }
      }
    }

    Outcome o;
    if (name == "profile") {
      const std::string fl = flavor.empty() ? "repetitive" : flavor;
      o = g.approx ? profile_outcome<double>(*parsed, t, fl, g) : profile_outcome<Rational>(*parsed, t, fl, g);
    } else if (name == "density") {
      const std::string fl = flavor.empty() ? "repetitive" : flavor;
      o = g.approx ? density_outcome<double>(*parsed, t, *q, fl, g) : density_outcome<Rational>(*parsed, t, *q, fl, g);
    } else if (name == "nested-profile") {
      o = nested_outcome(*parsed, t, matrix, g);
    } else if (name == "limit") {
      o = limit_outcome(t, *q, factor_list, nested, g);
    } else if (name == "estimate") {
      o = estimate_outcome(*parsed, t, samples, seed, g);
    } else if (name == "bounds") {
      o = bounds_outcome(t, g);
    } else if (name == "tables") {
      o = tables_outcome(which, catalog, g);
    } else {
      o = convert_outcome(g6, encode, g);
    }

    std::string text;
    if (g.format == "json") {
      text = to_json_text(o.report);
    } else {
      text = o.table.empty() ? to_table_text(o.report) : o.table;
    }
    if (cache) {
      Json entry = Json::object();
      entry["request"] = request.str();
      entry["status"] = o.status;
      entry["output"] = text;
      cache->store(key, entry.dump(2) + "\n");
    }
    out << text;
    return o.status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace inducibility
