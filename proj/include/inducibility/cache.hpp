#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace inducibility {

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

/// Directory of finished command outputs, one file per request, named by
/// the hash of the canonical request text and the toolkit version.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  std::string key(std::string_view request) const;
  std::optional<std::string> load(const std::string& key) const;
  /// Writes to a temporary file in the same directory, then renames it into
  /// place, so readers never see a partial entry.
  void store(const std::string& key, std::string_view text) const;

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
};

}  // namespace inducibility
