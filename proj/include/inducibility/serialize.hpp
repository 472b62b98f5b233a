#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "inducibility/rational.hpp"

namespace inducibility {

using Json = nlohmann::ordered_json;

/// One reported number. Exact values carry num/den as decimal strings;
/// approximate values have null num/den.
struct ReportValue {
  std::string type;
  std::optional<Rational> exact;
  double approx = 0;
  std::optional<double> standard_error;

  static ReportValue of(std::string type, const Rational& q);
  static ReportValue of(std::string type, double x);
};

struct ReportMeta {
  std::uint64_t budget = 0;
  std::optional<std::uint64_t> seed;
};

/// Command output:
///   { "command", "t", "basis", "values": [{"type","num","den","approx"}...],
///     <extra fields>, "meta": {"version","budget","seed"?} }
struct Report {
  std::string command;
  std::optional<int> t;
  std::vector<std::string> basis;
  std::vector<ReportValue> values;
  Json extra = Json::object();
  ReportMeta meta;
};

Json rational_json(const Rational& q);
Json value_json(const ReportValue& v);
Json report_json(const Report& r);

/// Pretty JSON text ending in a newline; byte-stable for equal reports.
std::string to_json_text(const Report& r);

/// Aligned plain-text rendering.
std::string to_table_text(const Report& r);

/// Right-pads every column of `rows` to a common width.
std::string align_columns(const std::vector<std::vector<std::string>>& rows);

std::string format_double(double x);

}  // namespace inducibility
