#include "hc3/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hc3 {

namespace {

SublatticeBasis basis(Site a, Site b, Site c) { return SublatticeBasis(a, b, c); }

const Site kMain{1, 1, 1};

}  // namespace

const std::vector<Int>& catalog_d2_values() {
  static const std::vector<Int> values{2, 3, 4, 5, 6, 8, 9, 10, 11, 12};
  return values;
}

std::vector<int> known_variants(Int d2) {
  switch (d2) {
    case 6:
    case 9:
    case 10:
      return {1, 2};
    case 2:
    case 3:
    case 4:
    case 5:
    case 8:
    case 11:
    case 12:
      return {1};
    default:
      return {};
  }
}

SublatticeBasis known_sublattice(Int d2, int variant) {
  std::vector<int> vs = known_variants(d2);
  if (std::find(vs.begin(), vs.end(), variant) == vs.end())
    throw InvalidArgument("no catalog sublattice for d2 = " + std::to_string(d2) + ", variant " +
                          std::to_string(variant));
  switch (d2) {
    case 2:
      return basis({1, 1, 0}, {1, 0, 1}, {0, 1, 1});
    case 3:
      return basis({2, 0, 0}, {0, 2, 0}, {1, 1, 1});
    case 4:
      return SublatticeBasis::diagonal(2, 2, 2);
    case 5:
      // Stacking generator (2,1,0) in place of (1,1,1), which has norm 3 < 5.
      return basis({1, -2, 1}, {-1, -1, 2}, {2, 1, 0});
    case 6:
      if (variant == 1) return basis({1, -2, 1}, {-1, -1, 2}, {2, 1, 1});
      return basis({1, 1, 2}, {1, 1, -2}, {2, -1, 1});
    case 8:
      return basis({2, 2, 0}, {2, 0, 2}, {0, 2, 2});
    case 9:
      if (variant == 1) return basis({0, 3, 1}, {0, -1, 3}, {2, 1, 2});
      return basis({0, 3, -1}, {0, -1, -3}, {2, 1, -2});
    case 10:
      if (variant == 1) return basis({-1, -3, 4}, {3, -4, 1}, {0, 3, -1});
      return basis({-1, 4, -3}, {3, 1, -4}, {0, -1, 3});
    default:  // 11 and 12
      return basis({4, 0, 0}, {0, 4, 0}, {2, 2, 2});
  }
}

MeshSpec known_mesh(const std::string& name, int variant) {
  auto one = [&] {
    if (variant != 1) throw InvalidArgument("mesh " + name + " has only variant 1");
  };
  if (name == "tau2") {
    one();
    return {{Site{1, -1, 0}, Site{1, 0, -1}}, {}, kMain};
  }
  if (name == "zeta4") {
    one();
    return {{Site{2, 0, 0}, Site{0, 2, 0}}, {}, {0, 0, 1}};
  }
  if (name == "tau6") {
    one();
    return {{Site{1, -2, 1}, Site{-1, -1, 2}}, {}, kMain};
  }
  if (name == "zeta10") {
    if (variant == 1) return {{Site{0, 3, 1}, Site{0, -1, 3}}, {}, {1, 0, 0}};
    if (variant == 2) return {{Site{0, 3, -1}, Site{0, -1, -3}}, {}, {1, 0, 0}};
    throw InvalidArgument("mesh zeta10 has variants 1 and 2");
  }
  if (name == "tau26") {
    if (variant == 1) return {{Site{-1, -3, 4}, Site{3, -4, 1}}, {}, kMain};
    if (variant == 2) return {{Site{-1, 4, -3}, Site{3, 1, -4}}, {}, kMain};
    throw InvalidArgument("mesh tau26 has variants 1 and 2");
  }
  if (name == "alpha8_16") {
    one();
    return {{Site{1, 1, 2}, Site{1, 1, -2}}, {}, {1, -1, 0}};
  }
  throw InvalidArgument("unknown mesh: " + name);
}

Configuration sublattice_configuration(const SublatticeBasis& lattice, const Quotient& q, Int d2) {
  for (const Site& g : q.period().generators())
    if (!lattice_contains(lattice, g))
      throw DomainViolation("period vector " + to_string(g) + " is not in the sublattice");
  SublatticeBasis h = hnf(lattice);
  std::vector<Site> sites;
  for (const Site& r : q.representatives())
    if (reduce_into_box(h, r) == Site{}) sites.push_back(r);
  return Configuration(q, d2, sites);
}

const Site& LayeredFamily::step(char letter) const {
  for (const auto& [c, v] : steps)
    if (c == letter) return v;
  throw InvalidArgument(std::string("letter '") + letter + "' is not a step of family " + name +
                        " (alphabet " + alphabet() + ")");
}

std::string LayeredFamily::alphabet() const {
  std::string a;
  for (const auto& s : steps) a += s.first;
  return a;
}

const std::vector<LayeredFamily>& layered_families() {
  static const std::vector<LayeredFamily> families = [] {
    std::vector<LayeredFamily> f;
    f.push_back({2, "1", known_mesh("tau2"), {{'S', {1, 1, 0}}}});
    f.push_back({5, "1", known_mesh("tau6"), {{'S', {2, 1, 0}}, {'T', {0, 1, 2}}}});
    f.push_back({6, "I", known_mesh("tau6"), {{'1', {2, 1, 1}}, {'2', {1, 2, 1}}, {'3', {1, 1, 2}}}});
    f.push_back({6, "II", known_mesh("alpha8_16"), {{'1', {2, -1, 1}}, {'2', {1, -2, 1}}}});
    f.push_back({9, "1", known_mesh("zeta10", 1), {{'S', {2, 1, 2}}}});
    f.push_back({9, "2", known_mesh("zeta10", 2), {{'S', {2, 1, -2}}}});
    f.push_back({10, "1", known_mesh("tau26", 1), {{'S', {0, 3, -1}}}});
    f.push_back({10, "2", known_mesh("tau26", 2), {{'S', {0, -1, 3}}}});
    return f;
  }();
  return families;
}

const LayeredFamily& layered_family(Int d2, const std::string& name) {
  std::string key = name;
  if (d2 == 6 && key == "1") key = "I";
  if (d2 == 6 && key == "2") key = "II";
  for (const LayeredFamily& f : layered_families())
    if (f.d2 == d2 && (key.empty() || f.name == key)) return f;
  throw InvalidArgument("no layered family '" + name + "' for d2 = " + std::to_string(d2));
}

namespace {

std::vector<Site> offsets(const LayeredFamily& family, const StackingWord& word) {
  if (word.empty()) throw InvalidArgument("stacking word must be nonempty");
  std::vector<Site> o{family.mesh.anchor};
  for (char c : word) o.push_back(o.back() + family.step(c));
  return o;  // |word| + 1 entries; the last one closes the period
}

}  // namespace

SublatticeBasis layered_period(const LayeredFamily& family, const StackingWord& word) {
  std::vector<Site> o = offsets(family, word);
  return SublatticeBasis(family.mesh.generators[0], family.mesh.generators[1], o.back() - o.front());
}

Configuration build_layered(const LayeredFamily& family, const StackingWord& word) {
  return build_layered(family, word, Quotient(layered_period(family, word)));
}

Configuration build_layered(const LayeredFamily& family, const StackingWord& word, const Quotient& q) {
  std::vector<Site> o = offsets(family, word);
  o.pop_back();
  Quotient natural(layered_period(family, word));
  std::set<Site> layers;
  for (const Site& s : o) layers.insert(natural.reduce(s));
  auto member = [&](const Site& x) { return layers.count(natural.reduce(x)) != 0; };
  for (const Site& g : q.period().generators())
    for (const Site& s : o)
      if (!member(s + g))
        throw DomainViolation("word does not close: period vector " + to_string(g) +
                              " does not preserve the stacking");
  std::vector<Site> sites;
  for (const Site& r : q.representatives())
    if (member(r)) sites.push_back(r);
  return Configuration(q, family.d2, sites);
}

Configuration build_layered(const LayeredFamily& family, const StackingWord& word, const Window& w) {
  std::vector<Site> o = offsets(family, word);
  const Site& n = family.mesh.normal;
  const auto& [g1, g2] = family.mesh.generators;
  std::vector<Site> sites;
  for (Int x = w.lo.x; x <= w.hi.x; ++x)
    for (Int y = w.lo.y; y <= w.hi.y; ++y)
      for (Int z = w.lo.z; z <= w.hi.z; ++z) {
        Site p{x, y, z};
        Int h = dot(n, p);
        for (const Site& s : o)
          if (dot(n, s) == h && in_plane_lattice(p - s, g1, g2)) {
            sites.push_back(p);
            break;
          }
      }
  return Configuration(w, family.d2, sites);
}

namespace {

// Word of c for one oriented mesh and step set; nullopt if c is not layered that way.
std::optional<StackingWord> classify_with(const Configuration& c, const Site& n, const Site& g1, const Site& g2,
                                          const std::vector<std::pair<char, Site>>& steps) {
  const SublatticeBasis& P = c.quotient().period();
  Int h[3] = {dot(n, P[0]), dot(n, P[1]), dot(n, P[2])};
  Int x = 0, y = 0, u = 0, v = 0;
  Int g12 = ext_gcd(h[0], h[1], x, y);
  Int H = ext_gcd(g12, h[2], u, v);
  if (H == 0) return std::nullopt;
  Site pH = u * (x * P[0] + y * P[1]) + v * P[2];

  // P ∩ n⊥ must lie in the mesh.
  std::array<Site, 2> ker = orthogonal_lattice(Site{h[0], h[1], h[2]});
  Site p0[2];
  for (int i = 0; i < 2; ++i) {
    p0[i] = ker[i].x * P[0] + ker[i].y * P[1] + ker[i].z * P[2];
    if (!in_plane_lattice(p0[i], g1, g2)) return std::nullopt;
  }
  Site cm = cross(g1, g2), cp = cross(p0[0], p0[1]);
  Int per_layer = dot(cp, cm) / dot(cm, cm);
  if (per_layer < 0) per_layer = -per_layer;

  Int hs = dot(n, steps.front().second);
  if (hs <= 0 || H % hs != 0) return std::nullopt;

  std::map<Int, std::vector<Site>> layers;
  for (const Site& s : c.sites()) {
    Site t = s - floor_div(dot(n, s), H) * pH;
    layers[dot(n, t)].push_back(t);
  }
  if (layers.empty() || static_cast<Int>(layers.size()) * hs != H) return std::nullopt;
  std::vector<Site> origin;
  Int expected = layers.begin()->first;
  for (const auto& [height, sites] : layers) {
    if (height != expected || static_cast<Int>(sites.size()) != per_layer) return std::nullopt;
    for (const Site& s : sites)
      if (!in_plane_lattice(s - sites.front(), g1, g2)) return std::nullopt;
    origin.push_back(sites.front());
    expected += hs;
  }
  origin.push_back(origin.front() + pH);

  StackingWord word;
  for (std::size_t k = 0; k + 1 < origin.size(); ++k) {
    Site d = origin[k + 1] - origin[k];
    char letter = 0;
    for (const auto& [l, step] : steps)
      if (in_plane_lattice(d - step, g1, g2)) letter = l;
    if (letter == 0) return std::nullopt;
    word += letter;
  }
  return word;
}

}  // namespace

StackingClassification classify_stacking_full(const Configuration& c, const Site& normal) {
  if (!c.is_periodic()) throw InvalidArgument("stacking classification needs a periodic configuration");
  if (normal == Site{}) throw InvalidArgument("normal must be nonzero");
  Site n = primitive(normal);
  for (const LayeredFamily& f : layered_families()) {
    if (f.d2 != c.d2()) continue;
    Site nf = primitive(f.mesh.normal);
    for (const SymmetryOp& op : symmetry_group()) {
      if (op(nf) != n) continue;
      std::vector<std::pair<char, Site>> steps;
      for (const auto& [l, s] : f.steps) steps.emplace_back(l, op(s));
      auto w = classify_with(c, n, op(f.mesh.generators[0]), op(f.mesh.generators[1]), steps);
      if (w) return {&f, op, *w};
    }
  }
  throw DomainViolation("configuration is not layered with normal " + to_string(normal) + " at d2 = " +
                        std::to_string(c.d2()));
}

StackingWord classify_stacking(const Configuration& c, const Site& normal) {
  return classify_stacking_full(c, normal).word;
}

std::vector<Site> select_sites(const Configuration& c, const MeshSelector& sel) {
  if (sel.generators.empty() || sel.generators.size() > 2)
    throw InvalidArgument("a mesh selector needs one or two generators");
  std::vector<Site> out;
  if (c.is_periodic()) {
    const Quotient& q = c.quotient();
    std::vector<bool> seen(q.size(), false);
    std::vector<Site> stack{q.reduce(sel.anchor)};
    seen[q.index_of(sel.anchor)] = true;
    while (!stack.empty()) {
      Site s = stack.back();
      stack.pop_back();
      for (const Site& g : sel.generators) {
        Site t = q.reduce(s + g);
        if (!seen[q.index_of(t)]) {
          seen[q.index_of(t)] = true;
          stack.push_back(t);
        }
      }
    }
    for (const Site& s : c.sites())
      if (seen[q.index_of(s)]) out.push_back(s);
  } else {
    for (const Site& s : c.sites()) {
      Site d = s - sel.anchor;
      bool in;
      if (sel.generators.size() == 2) {
        in = in_plane_lattice(d, sel.generators[0], sel.generators[1]);
      } else {
        const Site& g = sel.generators[0];
        if (g == Site{}) throw InvalidArgument("line generator must be nonzero");
        Int k = dot(d, g) / sq_norm(g);
        in = k * g == d;
      }
      if (in) out.push_back(s);
    }
  }
  return out;
}

Configuration mesh_shift(const Configuration& c, const MeshSelector& sel, const Site& t) {
  std::vector<Site> chosen = select_sites(c, sel);
  if (chosen.empty()) throw DomainViolation("mesh selector matches no occupied site");
  std::set<Site> moved(chosen.begin(), chosen.end());
  std::vector<Site> sites;
  for (const Site& s : c.sites())
    if (!moved.count(s)) sites.push_back(s);
  for (const Site& s : chosen) {
    Site u = s + t;
    if (!c.in_domain(u)) throw InvalidArgument("shifted site " + to_string(u) + " leaves the window");
    sites.push_back(u);
  }
  return c.with_sites(sites);
}

}  // namespace hc3
