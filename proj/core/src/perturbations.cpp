#include "hc3/perturbations.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <tuple>

#include "hc3/admissibility.hpp"
#include "hc3/shells.hpp"
#include "hc3/symmetry.hpp"

namespace hc3 {

namespace {

std::vector<Site> conflicts_with(const Configuration& c, const Site& x, const std::vector<Site>& offsets) {
  std::vector<Site> out;
  for (const Site& v : offsets)
    if (c.in_domain(x + v) && c.occupied(x + v)) out.push_back(x + v);
  return out;
}

}  // namespace

std::vector<Site> insertion_conflicts(const Configuration& c, const Site& x) {
  if (!c.in_domain(x)) throw InvalidArgument("site " + to_string(x) + " is outside the window");
  if (c.occupied(x)) throw InvalidArgument("site " + to_string(x) + " is occupied");
  return conflicts_with(c, x, open_ball(c.d2()));
}

InsertionOrder min_insertion_order(const Configuration& c, const std::optional<std::vector<Site>>& region) {
  std::vector<Site> sites;
  if (region) {
    sites = *region;
  } else if (c.is_periodic()) {
    sites = c.quotient().representatives();
  } else {
    const Window& w = c.window();
    for (Int x = w.lo.x; x <= w.hi.x; ++x)
      for (Int y = w.lo.y; y <= w.hi.y; ++y)
        for (Int z = w.lo.z; z <= w.hi.z; ++z) sites.push_back({x, y, z});
  }
  std::vector<Site> offsets = open_ball(c.d2());
  std::optional<InsertionOrder> best;
  for (const Site& x : sites) {
    if (!c.in_domain(x) || c.occupied(x)) continue;
    Int order = static_cast<Int>(conflicts_with(c, x, offsets).size()) - 1;
    if (!best || order < best->order) best = InsertionOrder{order, {}};
    if (order == best->order) best->argmin.push_back(x);
  }
  if (!best) throw InvalidArgument("region contains no unoccupied site");
  return *best;
}

std::vector<Site> translation_symmetries(const Configuration& c) {
  if (!c.is_periodic()) throw InvalidArgument("translation symmetries need a periodic configuration");
  const Quotient& q = c.quotient();
  if (c.empty()) return q.representatives();
  std::vector<Site> out;
  const Site& s0 = c.sites().front();
  for (const Site& s : c.sites()) {
    Site t = q.reduce(s - s0);
    bool ok = std::all_of(c.sites().begin(), c.sites().end(), [&](const Site& u) { return c.occupied(u + t); });
    if (ok) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [&](const Site& a, const Site& b) { return q.index_of(a) < q.index_of(b); });
  return out;
}

namespace {

using ShapeKey = std::pair<std::vector<Site>, std::vector<Site>>;

ShapeKey shape_key(const std::vector<Site>& added, const std::vector<Site>& removed) {
  std::optional<ShapeKey> best;
  for (const SymmetryOp& op : symmetry_group()) {
    ShapeKey k;
    for (const Site& s : added) k.first.push_back(op(s));
    for (const Site& s : removed) k.second.push_back(op(s));
    Site m = *std::min_element(k.first.begin(), k.first.end());
    for (Site& s : k.first) s = s - m;
    for (Site& s : k.second) s = s - m;
    std::sort(k.first.begin(), k.first.end());
    std::sort(k.second.begin(), k.second.end());
    if (!best || k < *best) best = std::move(k);
  }
  return *best;
}

struct ExcitationSearch {
  const Configuration& c;
  const Quotient& q;
  ExcitationOptions options;
  std::vector<Site> offsets;
  std::vector<Site> translations;
  SublatticeBasis lattice;  // HNF of the translation lattice of the infinite configuration

  // Per anchor.
  std::vector<Site> vertex;
  std::vector<std::vector<Site>> vertex_conflicts;  // sorted
  std::vector<std::vector<std::size_t>> neighbours;
  std::map<Site, int> removal_count;

  std::set<std::vector<Site>> seen;
  std::vector<std::vector<Site>> found;
  std::uint64_t nodes = 0;
  bool aborted = false;

  ExcitationSearch(const Configuration& c, const ExcitationOptions& o)
      : c(c),
        q(c.quotient()),
        options(o),
        offsets(open_ball(c.d2())),
        translations(translation_symmetries(c)),
        lattice(translation_lattice(c, translations)) {}

  static SublatticeBasis translation_lattice(const Configuration& c, std::vector<Site> gens) {
    for (const Site& g : c.quotient().period().generators()) gens.push_back(g);
    return lattice_span(gens);
  }

  Int order(std::size_t added) const { return static_cast<Int>(removal_count.size()) - static_cast<Int>(added); }

  void add(std::size_t v, int sign) {
    for (const Site& x : vertex_conflicts[v]) {
      if (sign > 0) {
        ++removal_count[x];
      } else if (--removal_count[x] == 0) {
        removal_count.erase(x);
      }
    }
  }

  void record(const std::vector<std::size_t>& set) {
    std::vector<Site> key;
    for (std::size_t e : set) {
      Site shift = reduce_into_box(lattice, vertex[e]) - vertex[e];
      std::vector<Site> k;
      for (std::size_t v : set) k.push_back(vertex[v] + shift);
      std::sort(k.begin(), k.end());
      if (key.empty() || k < key) key = std::move(k);
    }
    if (seen.insert(key).second) found.push_back(std::move(key));
  }

  bool compatible(std::size_t w, const std::vector<std::size_t>& set) const {
    for (std::size_t v : set)
      if (sq_norm(vertex[v] - vertex[w]) < c.d2()) return false;
    return true;
  }

  // Connected-set enumeration: every connected vertex set containing vertex 0
  // is reached exactly once.
  void extend(std::vector<std::size_t>& set, std::vector<std::size_t> ext, std::vector<bool>& closed) {
    if (aborted) return;
    if (options.node_budget != 0 && nodes >= options.node_budget) {
      aborted = true;
      return;
    }
    ++nodes;
    if (order(set.size()) <= options.max_order) record(set);
    if (set.size() >= options.max_added) return;
    if (order(set.size()) - static_cast<Int>(options.max_added - set.size()) > options.max_order) return;
    while (!ext.empty()) {
      std::size_t w = ext.back();
      ext.pop_back();
      if (!compatible(w, set)) continue;
      std::vector<std::size_t> next = ext;
      std::vector<std::size_t> opened;
      for (std::size_t u : neighbours[w])
        if (!closed[u]) {
          closed[u] = true;
          opened.push_back(u);
          next.push_back(u);
        }
      set.push_back(w);
      add(w, +1);
      extend(set, std::move(next), closed);
      add(w, -1);
      set.pop_back();
      for (std::size_t u : opened) closed[u] = false;
      if (aborted) return;
    }
  }

  void run_anchor(const Site& a) {
    Int r2 = checked_mul(options.radius, options.radius);
    vertex.assign(1, a);
    for (const Site& d : closed_ball(r2))
      if (d != Site{} && !c.occupied(a + d)) vertex.push_back(a + d);
    vertex_conflicts.clear();
    for (const Site& y : vertex) {
      vertex_conflicts.push_back(conflicts_with(c, y, offsets));
      std::sort(vertex_conflicts.back().begin(), vertex_conflicts.back().end());
    }
    neighbours.assign(vertex.size(), {});
    for (std::size_t i = 0; i < vertex.size(); ++i)
      for (std::size_t j = i + 1; j < vertex.size(); ++j) {
        const auto& ci = vertex_conflicts[i];
        const auto& cj = vertex_conflicts[j];
        std::vector<Site> shared;
        std::set_intersection(ci.begin(), ci.end(), cj.begin(), cj.end(), std::back_inserter(shared));
        if (!shared.empty()) {
          neighbours[i].push_back(j);
          neighbours[j].push_back(i);
        }
      }
    // Pop order follows the candidate order.
    for (auto& n : neighbours) std::reverse(n.begin(), n.end());
    std::vector<bool> closed(vertex.size(), false);
    closed[0] = true;
    std::vector<std::size_t> ext;
    for (std::size_t u : neighbours[0]) {
      closed[u] = true;
      ext.push_back(u);
    }
    std::vector<std::size_t> set{0};
    add(0, +1);
    extend(set, std::move(ext), closed);
    add(0, -1);
  }
};

}  // namespace

ExcitationTable enumerate_excitations(const Configuration& c, const ExcitationOptions& options) {
  if (!c.is_periodic()) throw InvalidArgument("excitations need a periodic configuration");
  if (options.radius < 0 || options.max_added == 0) throw InvalidArgument("radius must be >= 0 and max_added >= 1");
  AdmissibilityReport adm = is_admissible(c);
  if (!adm.admissible) throw DomainViolation("configuration is not admissible");
  if (!is_saturated(c)) throw DomainViolation("configuration is not saturated");

  ExcitationSearch search(c, options);
  const Quotient& q = c.quotient();
  std::vector<bool> covered(q.size(), false);
  for (std::size_t i = 0; i < q.size() && !search.aborted; ++i) {
    Site a = q.rep(i);
    if (c.occupied(a) || covered[i]) continue;
    for (const Site& t : search.translations) covered[q.index_of(a + t)] = true;
    search.run_anchor(a);
  }

  ExcitationTable table;
  table.complete = !search.aborted;
  table.nodes = search.nodes;
  std::map<ShapeKey, std::size_t> shape_of;
  std::vector<ShapeKey> keys;
  for (const std::vector<Site>& added : search.found) {
    Excitation e;
    e.added = added;
    std::set<Site> hit;
    for (const Site& y : added)
      for (const Site& x : conflicts_with(c, y, search.offsets)) hit.insert(x);
    e.removed.assign(hit.begin(), hit.end());
    ShapeKey k = shape_key(e.added, e.removed);
    auto [it, fresh] = shape_of.emplace(k, keys.size());
    if (fresh) {
      keys.push_back(k);
      table.shapes.push_back({e.added.size(), e.removed.size(), e.order(), 0});
    }
    e.shape = it->second;
    ++table.shapes[e.shape].multiplicity;
    table.excitations.push_back(std::move(e));
  }

  // Renumber shapes by (order, |added|, |removed|, key) for a stable listing.
  std::vector<std::size_t> perm(keys.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  auto rank = [&](std::size_t i) {
    const ExcitationShape& s = table.shapes[i];
    return std::tie(s.order, s.added, s.removed, keys[i]);
  };
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return rank(a) < rank(b); });
  std::vector<std::size_t> new_index(perm.size());
  std::vector<ExcitationShape> shapes;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_index[perm[i]] = i;
    shapes.push_back(table.shapes[perm[i]]);
  }
  table.shapes = std::move(shapes);
  for (Excitation& e : table.excitations) e.shape = new_index[e.shape];
  std::sort(table.excitations.begin(), table.excitations.end(), [](const Excitation& a, const Excitation& b) {
    return std::tie(a.shape, a.added) < std::tie(b.shape, b.added);
  });
  return table;
}

Configuration apply_excitation(const Configuration& c, const Excitation& e) {
  std::set<Site> removed, added;
  for (const Site& s : e.removed) {
    if (!c.occupied(s)) throw InvalidArgument("removed site " + to_string(s) + " is not occupied");
    if (!removed.insert(c.canonical(s)).second)
      throw InvalidArgument("removed sites " + to_string(s) + " coincide on the torus");
  }
  for (const Site& s : e.added) {
    if (!c.in_domain(s) || c.occupied(s)) throw InvalidArgument("added site " + to_string(s) + " is not free");
    if (!added.insert(c.canonical(s)).second)
      throw InvalidArgument("added sites " + to_string(s) + " coincide on the torus");
  }
  std::vector<Site> sites;
  for (const Site& s : c.sites())
    if (!removed.count(s)) sites.push_back(s);
  sites.insert(sites.end(), added.begin(), added.end());
  return c.with_sites(sites);
}

Configuration lift_to_quotient(const Configuration& c, const Quotient& q) {
  if (!c.is_periodic()) throw InvalidArgument("lifting needs a periodic configuration");
  for (const Site& g : q.period().generators())
    for (const Site& s : c.sites())
      if (!c.occupied(s + g))
        throw DomainViolation("period vector " + to_string(g) + " is not a symmetry of the configuration");
  std::vector<Site> sites;
  for (const Site& r : q.representatives())
    if (c.occupied(r)) sites.push_back(r);
  return Configuration(q, c.d2(), sites);
}

std::vector<SlidingMove> find_sliding(const Configuration& c, const std::vector<MeshSelector>& selectors,
                                      const std::vector<Site>& shifts) {
  std::vector<SlidingMove> out;
  for (const MeshSelector& sel : selectors) {
    std::size_t moved = select_sites(c, sel).size();
    if (moved == 0) continue;
    for (const Site& t : shifts) {
      std::optional<Configuration> r;
      try {
        r = mesh_shift(c, sel, t);
      } catch (const InvalidArgument&) {
        continue;
      }
      if (*r == c || r->size() != c.size() || !is_admissible(*r).admissible) continue;
      out.push_back({sel, t, moved, r->size() >= 2 ? min_pair_sq_distance(*r) : 0});
    }
  }
  return out;
}

SlidingFamily standard_sliding_family(const Configuration& c) {
  if (!c.is_periodic()) throw InvalidArgument("the standard sliding family needs a periodic configuration");
  SlidingFamily family;
  for (const Site& t : closed_ball(2))
    if (t != Site{}) family.shifts.push_back(t);
  if (c.empty()) return family;

  std::vector<Site> translations = translation_symmetries(c);
  std::vector<Site> gens = translations;
  for (const Site& g : c.quotient().period().generators()) gens.push_back(g);
  SublatticeBasis lattice = lattice_span(gens);
  Int m = shortest_vectors(lattice).min_sq_norm;

  std::set<Site> lines;
  for (const Site& v : closed_ball(2 * m))
    if (v != Site{} && lattice_contains(lattice, v)) lines.insert(direction(v));
  std::set<Site> normals;
  for (auto i = lines.begin(); i != lines.end(); ++i)
    for (auto j = std::next(i); j != lines.end(); ++j) normals.insert(direction(cross(*i, *j)));

  const Quotient& q = c.quotient();
  std::vector<bool> covered(q.size(), false);
  for (const Site& s : c.sites()) {
    if (covered[q.index_of(s)]) continue;
    for (const Site& t : translations) covered[q.index_of(s + t)] = true;
    for (const Site& d : lines) family.selectors.push_back({s, {d}});
    for (const Site& n : normals) {
      auto [e1, e2] = orthogonal_lattice(n);
      family.selectors.push_back({s, {e1, e2}});
    }
  }
  return family;
}

}  // namespace hc3
