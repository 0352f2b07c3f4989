#include "hc3/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "hc3/admissibility.hpp"
#include "hc3/catalog.hpp"
#include "hc3/cli/document.hpp"
#include "hc3/embeddings.hpp"
#include "hc3/packing_solver.hpp"
#include "hc3/perturbations.hpp"
#include "hc3/voronoi.hpp"

namespace hc3::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  bool stats = false;
  bool no_validate = false;
  unsigned threads = 0;
};

Site parse_site(const std::string& text) {
  static const std::regex re(R"(\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidArgument("expected x,y,z, got '" + text + "'");
  try {
    return Site{std::stoll(m[1]), std::stoll(m[2]), std::stoll(m[3])};
  } catch (const std::out_of_range&) {
    throw InvalidArgument("coordinate out of range in '" + text + "'");
  }
}

MeshSelector parse_mesh(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ';');) parts.push_back(p);
  if (parts.size() < 2 || parts.size() > 3) throw InvalidArgument("mesh must be 'anchor;g1' or 'anchor;g1;g2'");
  MeshSelector sel{parse_site(parts[0]), {}};
  for (std::size_t i = 1; i < parts.size(); ++i) sel.generators.push_back(parse_site(parts[i]));
  for (const Site& g : sel.generators)
    if (g == Site{}) throw InvalidArgument("mesh generators must be nonzero");
  if (sel.generators.size() == 2 && cross(sel.generators[0], sel.generators[1]) == Site{})
    throw InvalidArgument("plane mesh generators must be independent");
  return sel;
}

SublatticeBasis parse_period(const std::vector<Int>& v) {
  if (v.size() != 9) throw InvalidArgument("--period takes 9 integers (three generators)");
  return SublatticeBasis(Site{v[0], v[1], v[2]}, Site{v[3], v[4], v[5]}, Site{v[6], v[7], v[8]});
}

std::string basis_string(const SublatticeBasis& b) {
  return to_string(b[0]) + " " + to_string(b[1]) + " " + to_string(b[2]);
}

json basis_json(const SublatticeBasis& b) {
  return json::array({site_json(b[0]), site_json(b[1]), site_json(b[2])});
}

json sites_json(const std::vector<Site>& v) {
  json out = json::array();
  for (const Site& s : v) out.push_back(site_json(s));
  return out;
}

std::string sites_string(const std::vector<Site>& v) {
  std::string out;
  for (const Site& s : v) out += (out.empty() ? "" : " ") + to_string(s);
  return out;
}

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(12) << static_cast<double>(r);
  return os.str();
}

Configuration load_input(const Globals& g, const std::string& path) { return load(path, !g.no_validate); }

SolverOptions solver_options(const Globals& g, std::uint64_t budget) {
  SolverOptions o;
  o.node_budget = budget;
  o.threads = g.threads;
  return o;
}

// ---------------------------------------------------------------- pack

struct PackArgs {
  Int d2 = 0;
  std::optional<Int> diag;
  std::vector<Int> period;
  bool count = false;
  bool mod_translations = false;
  std::uint64_t budget = 0;
  std::string out;
};

int cmd_pack(const Globals& g, const PackArgs& a, std::ostream& out, std::ostream& err) {
  if (a.diag.has_value() == !a.period.empty()) throw InvalidArgument("give exactly one of --diag and --period");
  if (a.diag && *a.diag < 1) throw InvalidArgument("--diag must be positive");
  Quotient q = a.diag ? Quotient::cube(*a.diag) : Quotient(parse_period(a.period));
  SolverOptions opts = solver_options(g, a.budget);
  PackingResult r = a.count ? max_packing_with_count(q, a.d2, a.mod_translations, opts) : max_packing(q, a.d2, opts);
  std::map<std::string, std::string> meta{{"optimum", std::to_string(r.optimum)},
                                          {"density", to_string(density(r.witness))}};
  if (r.count) meta[a.mod_translations ? "count_mod_translations" : "count"] = std::to_string(*r.count);
  if (!a.out.empty()) save(r.witness, a.out, meta);
  if (g.json) {
    out << to_json(to_document(r.witness, meta)).dump(2) << '\n';
  } else {
    out << "optimum " << r.optimum;
    if (r.count) out << ", count " << *r.count << (a.mod_translations ? " (mod translations)" : "");
    out << '\n';
    out << "density " << to_string(density(r.witness)) << '\n';
    out << "witness " << sites_string(r.witness.sites()) << '\n';
    if (!a.out.empty()) out << "written " << a.out << '\n';
  }
  if (g.stats) err << "nodes " << r.stats.nodes << " seconds " << r.stats.seconds << '\n';
  return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Globals& g, const std::string& file, std::ostream& out) {
  Configuration c = load(file, false);
  AdmissibilityReport adm = is_admissible(c);
  std::optional<Int> min_d;
  if (c.size() >= 2) min_d = min_pair_sq_distance(c);
  std::vector<Site> free_sites = insertion_candidates(c);
  if (g.json) {
    json j;
    j["sites"] = c.size();
    j["domain"] = c.domain_size();
    j["d2"] = c.d2();
    j["admissible"] = adm.admissible;
    if (!adm.admissible) {
      j["violation"] = {site_json(adm.violation->first), site_json(adm.violation->second)};
      j["violation_sq_distance"] = adm.violation_sq_distance;
    }
    j["density"] = to_string(density(c));
    j["min_sq_distance"] = min_d ? json(*min_d) : json(nullptr);
    j["saturated"] = free_sites.empty();
    j["insertion_sites"] = sites_json(free_sites);
    out << j.dump(2) << '\n';
  } else {
    out << "sites " << c.size() << " of " << c.domain_size() << '\n';
    out << "d2 " << c.d2() << '\n';
    if (adm.admissible)
      out << "admissible yes\n";
    else
      out << "admissible no: " << to_string(adm.violation->first) << ' ' << to_string(adm.violation->second)
          << " at squared distance " << adm.violation_sq_distance << '\n';
    out << "density " << to_string(density(c)) << '\n';
    out << "min_sq_distance " << (min_d ? std::to_string(*min_d) : std::string("none")) << '\n';
    if (free_sites.empty())
      out << "saturated yes\n";
    else
      out << "saturated no: " << free_sites.size() << " insertion sites, first " << to_string(free_sites.front())
          << '\n';
  }
  return adm.admissible ? kOk : kDomain;
}

// ---------------------------------------------------------------- pc

int cmd_pc(const Globals& g, Int d2, int variant, const std::string& file, std::ostream& out) {
  SublatticeBasis lat = known_sublattice(d2, variant);
  Configuration c = sublattice_configuration(lat, Quotient(lat), d2);
  ShortestVectors sv = shortest_vectors(lat);
  std::map<std::string, std::string> meta{{"variant", std::to_string(variant)},
                                          {"density", to_string(density(c))},
                                          {"min_sq_norm", std::to_string(sv.min_sq_norm)},
                                          {"min_vectors", std::to_string(sv.vectors.size())}};
  if (!file.empty()) save(c, file, meta);
  if (g.json) {
    out << to_json(to_document(c, meta)).dump(2) << '\n';
  } else {
    out << "sublattice " << basis_string(hnf(lat)) << '\n';
    out << "index " << lattice_index(lat) << '\n';
    out << "density " << to_string(density(c)) << '\n';
    out << "min_sq_norm " << sv.min_sq_norm << " (" << sv.vectors.size() << " vectors)\n";
    if (!file.empty()) out << "written " << file << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- layered

struct LayeredArgs {
  Int d2 = 0;
  std::string family;
  std::string word;
  std::vector<Int> period;
  std::string out;
};

int cmd_layered(const Globals& g, const LayeredArgs& a, std::ostream& out) {
  const LayeredFamily& fam = layered_family(a.d2, a.family);
  Configuration c = a.period.empty() ? build_layered(fam, a.word)
                                     : build_layered(fam, a.word, Quotient(parse_period(a.period)));
  if (!g.no_validate) {
    AdmissibilityReport r = is_admissible(c);
    if (!r.admissible)
      throw DomainViolation("stacking is not admissible: " + to_string(r.violation->first) + " " +
                            to_string(r.violation->second));
  }
  std::map<std::string, std::string> meta{
      {"family", fam.name}, {"word", a.word}, {"density", to_string(density(c))}};
  if (!a.out.empty()) save(c, a.out, meta);
  if (g.json) {
    out << to_json(to_document(c, meta)).dump(2) << '\n';
  } else {
    out << "family " << fam.name << " steps " << fam.alphabet() << '\n';
    out << "word " << a.word << '\n';
    out << "period " << basis_string(c.quotient().period()) << '\n';
    out << "sites " << c.size() << " of " << c.domain_size() << '\n';
    out << "density " << to_string(density(c)) << '\n';
    if (!a.out.empty()) out << "written " << a.out << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- voronoi

void write_geometry(const VoronoiCell& cell, const std::string& path) {
  const RationalPolytope& p = cell.polytope;
  std::ofstream obj(path);
  if (!obj) throw InvalidArgument("cannot write " + path);
  obj << "# Voronoi cell of " << to_string(cell.center) << ", volume " << to_string(cell.volume) << '\n';
  for (const RationalPoint& v : p.vertices) obj << "v " << decimal(v[0]) << ' ' << decimal(v[1]) << ' ' << decimal(v[2]) << '\n';
  for (const Facet& f : p.facets) {
    obj << 'f';
    for (std::size_t i : f.vertices) obj << ' ' << i + 1;
    obj << '\n';
  }
  json exact;
  exact["center"] = site_json(cell.center);
  exact["volume"] = to_string(cell.volume);
  exact["vertices"] = json::array();
  for (const RationalPoint& v : p.vertices)
    exact["vertices"].push_back({to_string(v[0]), to_string(v[1]), to_string(v[2])});
  exact["facets"] = json::array();
  for (const Facet& f : p.facets)
    exact["facets"].push_back(
        {{"normal", site_json(f.plane.normal)}, {"offset", to_string(f.plane.offset)}, {"vertices", f.vertices}});
  std::ofstream side(path + ".exact.json");
  if (!side) throw InvalidArgument("cannot write " + path + ".exact.json");
  side << exact.dump(2) << '\n';
}

int cmd_voronoi(const Globals& g, const std::string& file, const std::string& site, const std::string& dump,
                std::ostream& out) {
  Configuration c = load_input(g, file);
  VoronoiCell cell = voronoi_cell(c, parse_site(site));
  if (!dump.empty()) write_geometry(cell, dump);
  const RationalPolytope& p = cell.polytope;
  if (g.json) {
    json j{{"site", site_json(cell.center)},
           {"volume", to_string(cell.volume)},
           {"facets", p.facets.size()},
           {"vertices", p.vertices.size()},
           {"edges", p.edge_count()},
           {"cutoff_sq", cell.cutoff_sq}};
    out << j.dump(2) << '\n';
  } else {
    out << "volume " << to_string(cell.volume) << '\n';
    out << "facets " << p.facets.size() << " vertices " << p.vertices.size() << " edges " << p.edge_count() << '\n';
    out << "cutoff_sq " << cell.cutoff_sq << '\n';
    if (!dump.empty()) out << "written " << dump << " and " << dump << ".exact.json\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- embed

int cmd_embed(const Globals& g, Int ell, bool classes, std::ostream& out) {
  if (ell < 1) throw InvalidArgument("--ell must be positive");
  if (classes) {
    std::vector<EmbeddingClass> cls = embedding_classes(ell);
    if (g.json) {
      json j = json::array();
      for (const EmbeddingClass& c : cls) {
        LayeredCheck lc = admits_layered(c.representative);
        j.push_back({{"representative", basis_json(c.representative)},
                     {"orbit_size", c.orbit_size},
                     {"layered", lc.admits}});
      }
      out << json{{"ell", ell}, {"classes", j}}.dump(2) << '\n';
    } else {
      out << "classes " << cls.size() << '\n';
      for (std::size_t i = 0; i < cls.size(); ++i) {
        LayeredCheck lc = admits_layered(cls[i].representative);
        out << "class " << i + 1 << " size " << cls[i].orbit_size << " representative "
            << basis_string(cls[i].representative) << " layered " << (lc.admits ? "yes" : "no");
        if (lc.shift) out << " step " << to_string(lc.step) << " alternate " << to_string(*lc.shift);
        out << '\n';
      }
    }
    return kOk;
  }
  std::vector<SublatticeBasis> all = enumerate_fcc_embeddings(ell);
  if (g.json) {
    json j = json::array();
    for (const SublatticeBasis& b : all) j.push_back(basis_json(b));
    out << json{{"ell", ell}, {"embeddings", j}}.dump(2) << '\n';
  } else {
    out << "embeddings " << all.size() << '\n';
    for (const SublatticeBasis& b : all) out << basis_string(b) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- excite

struct ExciteArgs {
  std::string file;
  Int max_order = 2;
  Int radius = 3;
  std::size_t max_added = 3;
  std::uint64_t budget = 0;
};

int cmd_excite(const Globals& g, const ExciteArgs& a, std::ostream& out, std::ostream& err) {
  Configuration c = load_input(g, a.file);
  InsertionOrder io = min_insertion_order(c);
  ExcitationOptions o;
  o.max_order = a.max_order;
  o.radius = a.radius;
  o.max_added = a.max_added;
  o.node_budget = a.budget;
  ExcitationTable t = enumerate_excitations(c, o);
  if (g.json) {
    json j;
    j["min_insertion_order"] = io.order;
    j["min_insertion_sites"] = sites_json(io.argmin);
    j["complete"] = t.complete;
    j["shapes"] = json::array();
    for (const ExcitationShape& s : t.shapes)
      j["shapes"].push_back(
          {{"order", s.order}, {"added", s.added}, {"removed", s.removed}, {"multiplicity", s.multiplicity}});
    j["excitations"] = json::array();
    for (const Excitation& e : t.excitations)
      j["excitations"].push_back({{"order", e.order()},
                                  {"shape", e.shape},
                                  {"added", sites_json(e.added)},
                                  {"removed", sites_json(e.removed)}});
    out << j.dump(2) << '\n';
  } else {
    out << "min_insertion_order " << io.order << " at " << io.argmin.size() << " sites\n";
    out << "excitations " << t.excitations.size() << " in " << t.shapes.size() << " shapes, complete "
        << (t.complete ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < t.shapes.size(); ++i) {
      const ExcitationShape& s = t.shapes[i];
      out << "shape " << i << " order " << s.order << " added " << s.added << " removed " << s.removed
          << " per_cell " << s.multiplicity << '\n';
    }
    for (const Excitation& e : t.excitations)
      out << "excitation shape " << e.shape << " added " << sites_string(e.added) << " removed "
          << sites_string(e.removed) << '\n';
  }
  if (g.stats) err << "nodes " << t.nodes << '\n';
  if (!t.complete) {
    err << "budget exhausted after " << t.nodes << " nodes; table is partial\n";
    return kBudget;
  }
  return kOk;
}

// ---------------------------------------------------------------- slide

std::string selector_string(const MeshSelector& s) {
  std::string out = to_string(s.anchor);
  for (const Site& g : s.generators) out += ";" + to_string(g);
  return out;
}

json move_json(const SlidingMove& m) {
  return {{"anchor", site_json(m.selector.anchor)},
          {"generators", sites_json(m.selector.generators)},
          {"shift", site_json(m.shift)},
          {"moved", m.moved},
          {"min_sq_distance", m.min_sq_distance}};
}

int cmd_slide(const Globals& g, const std::string& file, const std::string& mesh, const std::string& shift, bool scan,
              std::ostream& out) {
  Configuration c = load_input(g, file);
  if (scan == (!mesh.empty() || !shift.empty())) throw InvalidArgument("use either --scan or --mesh with --shift");
  if (scan) {
    SlidingFamily fam = standard_sliding_family(c);
    std::vector<SlidingMove> moves = find_sliding(c, fam.selectors, fam.shifts);
    if (g.json) {
      json j = json::array();
      for (const SlidingMove& m : moves) j.push_back(move_json(m));
      out << json{{"selectors", fam.selectors.size()}, {"shifts", fam.shifts.size()}, {"moves", j}}.dump(2) << '\n';
    } else {
      out << "scanned " << fam.selectors.size() << " meshes x " << fam.shifts.size() << " shifts\n";
      out << "moves " << moves.size() << '\n';
      for (const SlidingMove& m : moves)
        out << (m.selector.generators.size() == 1 ? "line " : "plane ") << selector_string(m.selector) << " shift "
            << to_string(m.shift) << " moved " << m.moved << " min_sq_distance " << m.min_sq_distance << '\n';
    }
    return kOk;
  }
  if (mesh.empty() || shift.empty()) throw InvalidArgument("--mesh and --shift go together");
  MeshSelector sel = parse_mesh(mesh);
  Site t = parse_site(shift);
  std::size_t moved = select_sites(c, sel).size();
  if (moved == 0) throw DomainViolation("mesh " + selector_string(sel) + " selects no particle");
  Configuration r = mesh_shift(c, sel, t);
  std::string verdict, reason;
  AdmissibilityReport adm = is_admissible(r);
  if (r == c) {
    reason = "shift leaves the configuration unchanged";
  } else if (r.size() != c.size()) {
    reason = "particle count changes from " + std::to_string(c.size()) + " to " + std::to_string(r.size());
  } else if (!adm.admissible) {
    reason = "pair " + to_string(adm.violation->first) + " " + to_string(adm.violation->second) +
             " at squared distance " + std::to_string(adm.violation_sq_distance);
  }
  Int min_d = r.size() >= 2 ? min_pair_sq_distance(r) : 0;
  if (g.json) {
    json j{{"valid", reason.empty()}, {"moved", moved}, {"min_sq_distance", min_d}};
    if (!reason.empty()) j["reason"] = reason;
    out << j.dump(2) << '\n';
  } else if (reason.empty()) {
    out << "valid moved " << moved << " min_sq_distance " << min_d << '\n';
  } else {
    out << "invalid: " << reason << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- mincell

int cmd_mincell(const Globals& g, Int d2, Int radius, std::uint64_t budget, bool gap, std::ostream& out,
                std::ostream& err) {
  MinCellOptions o;
  o.node_budget = budget;
  o.track_second = gap;
  MinCellResult r = min_cell_search(d2, radius, o);
  if (g.json) {
    json j{{"d2", d2}, {"radius", radius}, {"complete", r.complete}, {"nodes", r.nodes}};
    j["min_volume"] = r.best ? json(to_string(*r.best)) : json(nullptr);
    j["witness"] = sites_json(r.witness);
    if (gap) j["second_volume"] = r.second ? json(to_string(*r.second)) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "min_volume " << (r.best ? to_string(*r.best) : std::string("none")) << '\n';
    if (gap) out << "second_volume " << (r.second ? to_string(*r.second) : std::string("none")) << '\n';
    out << "neighbours " << r.witness.size() << '\n';
    out << "complete " << (r.complete ? "yes" : "no") << '\n';
  }
  if (g.stats) err << "nodes " << r.nodes << '\n';
  if (!r.complete) {
    err << "budget exhausted after " << r.nodes << " nodes\n";
    return kBudget;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hc3: hard-core lattice gas ground states on Z^3"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_flag("--stats", g.stats, "Search statistics on standard error");
  app.add_flag("--no-validate", g.no_validate, "Skip the admissibility check when loading");
  app.add_option("--threads", g.threads, "Solver threads (default: THREADS or hardware)")->check(CLI::NonNegativeNumber);

  PackArgs pack;
  auto* pack_cmd = app.add_subcommand("pack", "Maximum packing on a torus");
  pack_cmd->add_option("--d2", pack.d2, "Squared exclusion distance")->required()->check(CLI::PositiveNumber);
  auto* diag_opt = pack_cmd->add_option("--diag", pack.diag, "Torus Z^3 / L Z^3");
  pack_cmd->add_option("--period", pack.period, "Period generators, 9 integers")->expected(9)->excludes(diag_opt);
  pack_cmd->add_flag("--count", pack.count, "Count optimal configurations");
  pack_cmd->add_flag("--mod-translations", pack.mod_translations, "Count up to torus translations");
  pack_cmd->add_option("--budget", pack.budget, "Node budget (0 = unlimited)");
  pack_cmd->add_option("--out", pack.out, "Write the witness document");

  std::string verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "Admissibility, density and saturation report");
  verify_cmd->add_option("file", verify_file)->required();

  Int pc_d2 = 0;
  int pc_variant = 1;
  std::string pc_out;
  auto* pc_cmd = app.add_subcommand("pc", "Catalog perfect configuration");
  pc_cmd->add_option("--d2", pc_d2)->required();
  pc_cmd->add_option("--variant", pc_variant);
  pc_cmd->add_option("--out", pc_out);

  LayeredArgs lay;
  auto* lay_cmd = app.add_subcommand("layered", "Layered configuration from a stacking word");
  lay_cmd->add_option("--d2", lay.d2)->required();
  lay_cmd->add_option("--family", lay.family);
  lay_cmd->add_option("--word", lay.word)->required();
  lay_cmd->add_option("--period", lay.period, "Torus period, 9 integers")->expected(9);
  lay_cmd->add_option("--out", lay.out);

  std::string vor_file, vor_site = "0,0,0", vor_dump;
  auto* vor_cmd = app.add_subcommand("voronoi", "Exact Voronoi cell of one particle");
  vor_cmd->add_option("file", vor_file)->required();
  vor_cmd->add_option("--site", vor_site);
  vor_cmd->add_option("--dump-geometry", vor_dump, "OBJ file; an exact .exact.json sidecar is written next to it");

  Int ell = 0;
  bool classes = false;
  auto* embed_cmd = app.add_subcommand("embed", "FCC embeddings into Z^3");
  embed_cmd->add_option("--ell", ell)->required();
  embed_cmd->add_flag("--classes", classes, "Group into point-symmetry classes");

  ExciteArgs exc;
  auto* exc_cmd = app.add_subcommand("excite", "Local excitations of a periodic configuration");
  exc_cmd->add_option("file", exc.file)->required();
  exc_cmd->add_option("--max-order", exc.max_order);
  exc_cmd->add_option("--radius", exc.radius);
  exc_cmd->add_option("--max-added", exc.max_added)->check(CLI::PositiveNumber);
  exc_cmd->add_option("--budget", exc.budget);

  std::string slide_file, slide_mesh, slide_shift;
  bool slide_scan = false;
  auto* slide_cmd = app.add_subcommand("slide", "Check or search sliding moves");
  slide_cmd->add_option("file", slide_file)->required();
  slide_cmd->add_option("--mesh", slide_mesh, "anchor;g1[;g2], each x,y,z");
  slide_cmd->add_option("--shift", slide_shift, "x,y,z");
  slide_cmd->add_flag("--scan", slide_scan, "Search the standard line and plane family");

  Int mc_d2 = 0, mc_radius = 0;
  std::uint64_t mc_budget = 0;
  bool mc_gap = false;
  auto* mc_cmd = app.add_subcommand("mincell", "Smallest Voronoi cell over admissible neighbourhoods");
  mc_cmd->add_option("--d2", mc_d2)->required();
  mc_cmd->add_option("--radius", mc_radius)->required();
  mc_cmd->add_option("--budget", mc_budget);
  mc_cmd->add_flag("--gap", mc_gap, "Also find the next distinct volume");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*pack_cmd) return cmd_pack(g, pack, out, err);
    if (*verify_cmd) return cmd_verify(g, verify_file, out);
    if (*pc_cmd) return cmd_pc(g, pc_d2, pc_variant, pc_out, out);
    if (*lay_cmd) return cmd_layered(g, lay, out);
    if (*vor_cmd) return cmd_voronoi(g, vor_file, vor_site, vor_dump, out);
    if (*embed_cmd) return cmd_embed(g, ell, classes, out);
    if (*exc_cmd) return cmd_excite(g, exc, out, err);
    if (*slide_cmd) return cmd_slide(g, slide_file, slide_mesh, slide_shift, slide_scan, out);
    if (*mc_cmd) return cmd_mincell(g, mc_d2, mc_radius, mc_budget, mc_gap, out, err);
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << " (" << e.nodes() << " nodes)\n";
    return kBudget;
  } catch (const DomainViolation& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const ArithmeticOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kBadInput;
}

}  // namespace hc3::cli
