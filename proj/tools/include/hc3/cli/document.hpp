#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hc3/configuration.hpp"

namespace hc3::cli {

/// On-disk form of a configuration:
///   {"d2": K, "period": [[..],[..],[..]] | "window": {"lo": [..], "hi": [..]},
///    "sites": [[x,y,z], ...], "metadata": {"key": "value", ...}}
struct ConfigDocument {
  Int d2 = 0;
  std::optional<std::array<Site, 3>> period;
  std::optional<Window> window;
  std::vector<Site> sites;
  std::map<std::string, std::string> metadata;

  bool operator==(const ConfigDocument&) const = default;
};

nlohmann::json to_json(const ConfigDocument& doc);
/// Throws InvalidArgument on schema errors.
ConfigDocument document_from_json(const nlohmann::json& j);

ConfigDocument to_document(const Configuration& c, std::map<std::string, std::string> metadata = {});
/// Builds the configuration (canonical sites). With `validate`, throws
/// DomainViolation naming the closest violating pair.
Configuration to_configuration(const ConfigDocument& doc, bool validate = true);

ConfigDocument read_document(const std::filesystem::path& path);
void write_document(const ConfigDocument& doc, const std::filesystem::path& path);

Configuration load(const std::filesystem::path& path, bool validate = true);
void save(const Configuration& c, const std::filesystem::path& path, std::map<std::string, std::string> metadata = {});

nlohmann::json site_json(const Site& s);
Site site_from_json(const nlohmann::json& j);

}  // namespace hc3::cli
