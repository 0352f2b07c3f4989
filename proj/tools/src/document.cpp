#include "hc3/cli/document.hpp"

#include <fstream>

#include "hc3/admissibility.hpp"

namespace hc3::cli {

using nlohmann::json;

json site_json(const Site& s) { return json::array({s.x, s.y, s.z}); }

Site site_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidArgument("expected an integer triple, got " + j.dump());
  for (const json& e : j)
    if (!e.is_number_integer()) throw InvalidArgument("expected an integer triple, got " + j.dump());
  return Site{j[0].get<Int>(), j[1].get<Int>(), j[2].get<Int>()};
}

json to_json(const ConfigDocument& doc) {
  json j;
  j["d2"] = doc.d2;
  if (doc.period) {
    j["period"] = json::array();
    for (const Site& g : *doc.period) j["period"].push_back(site_json(g));
  }
  if (doc.window) j["window"] = {{"lo", site_json(doc.window->lo)}, {"hi", site_json(doc.window->hi)}};
  j["sites"] = json::array();
  for (const Site& s : doc.sites) j["sites"].push_back(site_json(s));
  j["metadata"] = doc.metadata;
  return j;
}

ConfigDocument document_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InvalidArgument("document must be a JSON object");
    ConfigDocument doc;
    if (!j.contains("d2") || !j["d2"].is_number_integer()) throw InvalidArgument("missing integer field d2");
    doc.d2 = j["d2"].get<Int>();
    if (j.contains("period") == j.contains("window"))
      throw InvalidArgument("document needs exactly one of period and window");
    if (j.contains("period")) {
      const json& p = j["period"];
      if (!p.is_array() || p.size() != 3) throw InvalidArgument("period must hold three integer triples");
      doc.period = std::array<Site, 3>{site_from_json(p[0]), site_from_json(p[1]), site_from_json(p[2])};
    } else {
      const json& w = j["window"];
      if (!w.is_object() || !w.contains("lo") || !w.contains("hi"))
        throw InvalidArgument("window must have lo and hi");
      doc.window = Window{site_from_json(w["lo"]), site_from_json(w["hi"])};
    }
    if (!j.contains("sites") || !j["sites"].is_array()) throw InvalidArgument("missing array field sites");
    for (const json& s : j["sites"]) doc.sites.push_back(site_from_json(s));
    if (j.contains("metadata")) {
      if (!j["metadata"].is_object()) throw InvalidArgument("metadata must be an object of strings");
      for (const auto& [k, v] : j["metadata"].items()) {
        if (!v.is_string()) throw InvalidArgument("metadata value for " + k + " must be a string");
        doc.metadata[k] = v.get<std::string>();
      }
    }
    return doc;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed document: ") + e.what());
  }
}

ConfigDocument to_document(const Configuration& c, std::map<std::string, std::string> metadata) {
  ConfigDocument doc;
  doc.d2 = c.d2();
  if (c.is_periodic())
    doc.period = c.quotient().period().generators();
  else
    doc.window = c.window();
  doc.sites = c.sites();
  doc.metadata = std::move(metadata);
  return doc;
}

Configuration to_configuration(const ConfigDocument& doc, bool validate) {
  if (doc.d2 < 1) throw InvalidArgument("d2 must be positive");
  std::optional<Configuration> c;
  if (doc.period) {
    c.emplace(Quotient(SublatticeBasis(*doc.period)), doc.d2, doc.sites);
  } else {
    const Window& w = *doc.window;
    if (w.lo.x > w.hi.x || w.lo.y > w.hi.y || w.lo.z > w.hi.z) throw InvalidArgument("window bounds are empty");
    for (const Site& s : doc.sites)
      if (!w.contains(s)) throw InvalidArgument("site " + to_string(s) + " lies outside the window");
    c.emplace(w, doc.d2, doc.sites);
  }
  if (validate) {
    AdmissibilityReport r = is_admissible(*c);
    if (!r.admissible)
      throw DomainViolation("not admissible: " + to_string(r.violation->first) + " " + to_string(r.violation->second) +
                            " at squared distance " + std::to_string(r.violation_sq_distance));
  }
  return *c;
}

ConfigDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InvalidArgument("cannot parse " + path.string() + " as JSON");
  return document_from_json(j);
}

void write_document(const ConfigDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << to_json(doc).dump(2) << '\n';
}

Configuration load(const std::filesystem::path& path, bool validate) {
  return to_configuration(read_document(path), validate);
}

void save(const Configuration& c, const std::filesystem::path& path, std::map<std::string, std::string> metadata) {
  write_document(to_document(c, std::move(metadata)), path);
}

}  // namespace hc3::cli
