#include "inducibility/catalog.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "inducibility/dsl.hpp"
#include "inducibility/monte_carlo.hpp"
#include "inducibility/nesting.hpp"
#include "inducibility/quantum_spec.hpp"
#include "inducibility/spectral.hpp"
#include "parallel.hpp"

namespace inducibility {

namespace detail {
extern const std::string_view kCatalogJson;
}

std::string_view status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Pass:
      return "pass";
    case RowStatus::Fail:
      return "fail";
    case RowStatus::Error:
      return "error";
    case RowStatus::Statistical:
      return "statistical";
  }
  return "error";
}

namespace {

RowKind kind_from(const std::string& s) {
  if (s == "repetitive") return RowKind::Repetitive;
  if (s == "nested") return RowKind::Nested;
  if (s == "limit") return RowKind::Limit;
  if (s == "estimate") return RowKind::Estimate;
  throw std::invalid_argument("unknown catalogue row kind '" + s + "'");
}

CatalogRow row_from(const Json& j) {
  CatalogRow r;
  r.id = j.at("id").get<std::string>();
  r.group = j.value("group", "");
  r.kind = kind_from(j.value("kind", "repetitive"));
  r.construction = j.value("construction", "");
  if (j.contains("factors")) r.factors = j.at("factors").get<std::vector<std::string>>();
  r.quantum = j.at("quantum").get<std::string>();
  r.t = j.at("t").get<int>();
  r.expected = j.at("expected").get<std::string>();
  r.tolerance = j.value("tolerance", 0.0);
  r.approximate = j.value("approximate", false);
  r.samples = j.value("samples", std::uint64_t{0});
  r.seed = j.value("seed", std::uint64_t{0});
  if (r.kind != RowKind::Limit && r.construction.empty()) {
    throw std::invalid_argument("catalogue row " + r.id + " has no construction");
  }
  if (r.kind == RowKind::Estimate && r.samples == 0) {
    throw std::invalid_argument("catalogue row " + r.id + " needs a sample count");
  }
  return r;
}

template <typename Scalar>
Scalar density_of(const CatalogRow& row, const QuantumGraph& q, std::uint64_t budget) {
  ProfileOptions options;
  options.budget = budget;
  switch (row.kind) {
    case RowKind::Repetitive: {
      const ExprPtr e = parse_expr(row.construction);
      if constexpr (is_exact_v<Scalar>) {
        return quantum_density(q, to_unlabeled(labeled_profile_exact(*e, row.t, options)));
      } else {
        return quantum_density(q, to_unlabeled(labeled_profile_approx(*e, row.t, options)));
      }
    }
    case RowKind::Nested:
    case RowKind::Limit:
      break;
    case RowKind::Estimate:
      throw std::logic_error("estimate rows are not exact");
  }
  if constexpr (!is_exact_v<Scalar>) {
    throw std::invalid_argument("nested and limit rows are computed exactly; drop \"approximate\"");
  } else {
    if (row.kind == RowKind::Nested) {
      const Construction c = evaluate(*parse_expr(row.construction));
      if (!is_graph(c)) throw std::invalid_argument("nested rows need a graph construction");
      return quantum_density(q, stationary_profile(std::get<LabeledGraph>(c), row.t).types);
    }
    std::vector<SpectralProfile<Rational>> hats;
    for (const auto& f : row.factors) hats.push_back(fourier(labeled_profile_exact(*parse_expr(f), row.t, options)));
    if (!row.construction.empty()) {
      const Construction c = evaluate(*parse_expr(row.construction));
      if (!is_graph(c)) throw std::invalid_argument("the nested factor must be a graph");
      hats.push_back(nested_spectral(std::get<LabeledGraph>(c), row.t));
    }
    if (hats.empty()) throw std::invalid_argument("limit row " + row.id + " has no factors");
    return product_limit_density(q, hats);
  }
}

double estimate_of(const CatalogRow& row, const QuantumGraph& q) {
  const Construction c = evaluate(*parse_expr(row.construction));
  ProfileEstimate est;
  if (auto* g = std::get_if<LabeledGraph>(&c)) {
    est = monte_carlo_profile(*g, row.t, row.samples, row.seed);
  } else if (auto* m = std::get_if<ExactModel>(&c)) {
    est = monte_carlo_profile(*m, row.t, row.samples, row.seed);
  } else {
    est = monte_carlo_profile(std::get<ApproxModel>(c), row.t, row.samples, row.seed);
  }
  double total = 0;
  for (const auto& [type, coeff] : q.terms) total += to_double(coeff) * est.values(type);
  return total;
}

}  // namespace

const std::vector<CatalogRow>& builtin_catalog() {
  static const std::vector<CatalogRow> rows = parse_catalog(detail::kCatalogJson);
  return rows;
}

std::vector<CatalogRow> parse_catalog(std::string_view json_text) {
  const Json j = Json::parse(json_text);
  if (!j.is_array()) throw std::invalid_argument("catalogue must be a JSON array of rows");
  std::vector<CatalogRow> rows;
  for (const auto& item : j) rows.push_back(row_from(item));
  return rows;
}

std::vector<CatalogRow> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalogue " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::string describe_construction(const CatalogRow& row) {
  switch (row.kind) {
    case RowKind::Nested:
      return "nested(" + row.construction + ")";
    case RowKind::Limit: {
      std::string out;
      for (const auto& f : row.factors) out += (out.empty() ? "" : " x ") + f;
      if (!row.construction.empty()) out += (out.empty() ? "" : " x ") + std::string("nested(") + row.construction + ")";
      return out;
    }
    default:
      return row.construction;
  }
}

BoundReport evaluate_row(const CatalogRow& row, std::uint64_t budget) {
  BoundReport rep;
  rep.row = row;
  try {
    const QuantumGraph q = parse_quantum(row.quantum, row.t);
    const Rational expected = parse_rational(row.expected);
    if (row.kind == RowKind::Estimate) {
      rep.computed = estimate_of(row, q);
      rep.status = RowStatus::Statistical;
      return rep;
    }
    if (row.approximate) {
      rep.computed = density_of<double>(row, q, budget);
      rep.status = std::abs(rep.computed - to_double(expected)) <= row.tolerance ? RowStatus::Pass : RowStatus::Fail;
    } else {
      const Rational value = density_of<Rational>(row, q, budget);
      rep.computed_exact = value;
      rep.computed = to_double(value);
      const Rational diff = value > expected ? Rational(value - expected) : Rational(expected - value);
      const bool ok = row.tolerance == 0 ? value == expected : to_double(diff) <= row.tolerance;
      rep.status = ok ? RowStatus::Pass : RowStatus::Fail;
    }
  } catch (const std::exception& err) {
    rep.status = RowStatus::Error;
    rep.message = err.what();
  }
  return rep;
}

std::vector<BoundReport> reproduce_table(std::string_view group, const std::vector<CatalogRow>& rows,
                                         std::uint64_t budget) {
  std::vector<const CatalogRow*> selected;
  for (const auto& r : rows) {
    if (group.empty() || r.group == group) selected.push_back(&r);
  }
  std::vector<BoundReport> out(selected.size());
  detail::run_shards(static_cast<int>(selected.size()),
                     [&](int i) { out[i] = evaluate_row(*selected[i], budget); });
  return out;
}

std::vector<BoundReport> reproduce_table(std::string_view group) {
  return reproduce_table(group, builtin_catalog(), kDefaultAssignmentBudget);
}

bool all_passed(const std::vector<BoundReport>& reports) {
  for (const auto& r : reports) {
    if (r.status == RowStatus::Fail || r.status == RowStatus::Error) return false;
  }
  return true;
}

Json reports_json(const std::vector<BoundReport>& reports) {
  Json rows = Json::array();
  for (const auto& r : reports) {
    Json j = Json::object();
    j["id"] = r.row.id;
    j["construction"] = describe_construction(r.row);
    j["quantum"] = r.row.quantum;
    j["t"] = r.row.t;
    j["expected"] = r.row.expected;
    j["tolerance"] = r.row.tolerance;
    if (r.computed_exact) {
      j["computed"] = rational_json(*r.computed_exact);
    } else if (r.status != RowStatus::Error) {
      Json c = Json::object();
      c["num"] = nullptr;
      c["den"] = nullptr;
      c["approx"] = r.computed;
      j["computed"] = std::move(c);
    } else {
      j["computed"] = nullptr;
    }
    j["status"] = status_name(r.status);
    if (!r.message.empty()) j["message"] = r.message;
    rows.push_back(std::move(j));
  }
  return rows;
}

std::string reports_table(const std::vector<BoundReport>& reports) {
  std::vector<std::vector<std::string>> rows{{"id", "status", "expected", "computed", "approx", "construction"}};
  for (const auto& r : reports) {
    std::string computed = r.computed_exact ? to_string(*r.computed_exact) : "-";
    std::string approx = r.status == RowStatus::Error ? r.message : format_double(r.computed);
    rows.push_back({r.row.id, std::string(status_name(r.status)), r.row.expected, computed, approx,
                    describe_construction(r.row)});
  }
  return align_columns(rows);
}

}  // namespace inducibility
