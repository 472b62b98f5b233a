#include "inducibility/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace inducibility {

ReportValue ReportValue::of(std::string type, const Rational& q) {
  ReportValue v;
  v.type = std::move(type);
  v.exact = q;
  v.approx = to_double(q);
  return v;
}

ReportValue ReportValue::of(std::string type, double x) {
  ReportValue v;
  v.type = std::move(type);
  v.approx = x;
  return v;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json rational_json(const Rational& q) {
  Json j = Json::object();
  j["num"] = numerator(q).str();
  j["den"] = denominator(q).str();
  j["approx"] = to_double(q);
  return j;
}

Json value_json(const ReportValue& v) {
  Json j = Json::object();
  j["type"] = v.type;
  if (v.exact) {
    j["num"] = numerator(*v.exact).str();
    j["den"] = denominator(*v.exact).str();
  } else {
    j["num"] = nullptr;
    j["den"] = nullptr;
  }
  j["approx"] = v.approx;
  if (v.standard_error) j["stderr"] = *v.standard_error;
  return j;
}

Json report_json(const Report& r) {
  Json j = Json::object();
  j["command"] = r.command;
  j["t"] = r.t ? Json(*r.t) : Json(nullptr);
  j["basis"] = r.basis;
  Json values = Json::array();
  for (const auto& v : r.values) values.push_back(value_json(v));
  j["values"] = std::move(values);
  for (const auto& [key, value] : r.extra.items()) j[key] = value;
  Json meta = Json::object();
  meta["version"] = INDUCIBILITY_VERSION;
  meta["budget"] = r.meta.budget;
  if (r.meta.seed) meta["seed"] = *r.meta.seed;
  j["meta"] = std::move(meta);
  return j;
}

std::string to_json_text(const Report& r) { return report_json(r).dump(2) + "\n"; }

std::string align_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

std::string to_table_text(const Report& r) {
  std::ostringstream os;
  os << r.command;
  if (r.t) os << "  t=" << *r.t;
  os << '\n';
  std::vector<std::vector<std::string>> rows{{"type", "value", "approx"}};
  const bool errors = std::any_of(r.values.begin(), r.values.end(), [](const auto& v) { return v.standard_error.has_value(); });
  if (errors) rows[0].push_back("stderr");
  for (const auto& v : r.values) {
    std::vector<std::string> row{v.type, v.exact ? to_string(*v.exact) : "-", format_double(v.approx)};
    if (errors) row.push_back(v.standard_error ? format_double(*v.standard_error) : "-");
    rows.push_back(std::move(row));
  }
  os << align_columns(rows);
  return os.str();
}

}  // namespace inducibility
