#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inducibility/rational.hpp"
#include "inducibility/serialize.hpp"

namespace inducibility {

/// How a catalogue row is computed.
enum class RowKind {
  Repetitive,  // quantum density of the construction's repetitive profile
  Nested,      // quantum density of the construction's stationary nested profile
  Limit,       // product-limit density over spectral factors and a nested factor
  Estimate,    // Monte Carlo estimate; statistical, never fails the run
};

struct CatalogRow {
  std::string id;
  std::string group;               // "exoo4", "headline" or "appendix5"
  RowKind kind = RowKind::Repetitive;
  std::string construction;        // DSL text; for Limit rows the nested base (may be empty)
  std::vector<std::string> factors;  // Limit rows: DSL texts of the tensor factors
  std::string quantum;             // quantum graph text
  int t = 0;
  std::string expected;            // "a/b", integer or decimal
  double tolerance = 0;            // 0 means exact rational equality
  bool approximate = false;        // evaluate in floating point (irrational masses)
  std::uint64_t samples = 0;       // Estimate rows
  std::uint64_t seed = 0;
};

enum class RowStatus { Pass, Fail, Error, Statistical };

std::string_view status_name(RowStatus s);

struct BoundReport {
  CatalogRow row;
  std::optional<Rational> computed_exact;
  double computed = 0;
  RowStatus status = RowStatus::Error;
  std::string message;  // error text, empty otherwise
};

/// Built-in rows, parsed from the bundled catalogue data.
const std::vector<CatalogRow>& builtin_catalog();

std::vector<CatalogRow> parse_catalog(std::string_view json_text);
std::vector<CatalogRow> load_catalog(const std::filesystem::path& path);

/// Display form of the construction, e.g. "tensor(M4, K4) x nested(tensor(K3, K3))".
std::string describe_construction(const CatalogRow& row);

BoundReport evaluate_row(const CatalogRow& row, std::uint64_t budget);

/// Rows of `group` (all rows when empty), evaluated in parallel and returned
/// in catalogue order. Failures are reported per row.
std::vector<BoundReport> reproduce_table(std::string_view group, const std::vector<CatalogRow>& rows,
                                         std::uint64_t budget);
std::vector<BoundReport> reproduce_table(std::string_view group);

/// True when no non-statistical row failed or errored.
bool all_passed(const std::vector<BoundReport>& reports);

Json reports_json(const std::vector<BoundReport>& reports);
std::string reports_table(const std::vector<BoundReport>& reports);

}  // namespace inducibility
