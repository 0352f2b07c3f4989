#include "hc3/voronoi.hpp"

#include <algorithm>
#include <iterator>

#include "hc3/shells.hpp"

namespace hc3 {

namespace {

constexpr Int kMaxCutoff = 32;

Int det3i(const std::array<Int, 3>& a, const std::array<Int, 3>& b, const std::array<Int, 3>& c) {
  return det3(Site{a[0], a[1], a[2]}, Site{b[0], b[1], b[2]}, Site{c[0], c[1], c[2]});
}

BigInt big_det(const std::array<Int, 4>& a, const std::array<Int, 4>& b, const std::array<Int, 4>& c) {
  BigInt a0 = a[0], a1 = a[1], a2 = a[2], b0 = b[0], b1 = b[1], b2 = b[2], c0 = c[0], c1 = c[1], c2 = c[2];
  return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

BigInt big_sq(const std::array<Int, 4>& h) {
  BigInt x = h[0], y = h[1], z = h[2];
  return x * x + y * y + z * z;
}

}  // namespace

std::size_t RationalPolytope::edge_count() const { return vertices.size() + facets.size() - 2; }

CellClipper::CellClipper(Int b) {
  if (b <= 0) throw InvalidArgument("clipping box must have positive half-width");
  planes_ = {{{1, 0, 0}, b}, {{-1, 0, 0}, b}, {{0, 1, 0}, b}, {{0, -1, 0}, b}, {{0, 0, 1}, b}, {{0, 0, -1}, b}};
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy)
      for (int sz = 0; sz < 2; ++sz)
        vertices_.push_back({{sx ? -b : b, sy ? -b : b, sz ? -b : b, 1}, {sx, 2 + sy, 4 + sz}});
}

Int CellClipper::side(const Vertex& v, const Plane& p) const {
  Int s = checked_add(checked_add(checked_mul(p.a.x, v.h[0]), checked_mul(p.a.y, v.h[1])),
                      checked_mul(p.a.z, v.h[2]));
  return checked_sub(s, checked_mul(p.b, v.h[3]));
}

CellClipper::Vertex CellClipper::intersect(int p, int q, int r) const {
  const Plane* pl[3] = {&planes_[p], &planes_[q], &planes_[r]};
  std::array<std::array<Int, 3>, 3> rows;
  std::array<Int, 3> rhs;
  for (int i = 0; i < 3; ++i) {
    rows[i] = {pl[i]->a.x, pl[i]->a.y, pl[i]->a.z};
    rhs[i] = pl[i]->b;
  }
  auto col = [&](int c) {
    std::array<std::array<Int, 3>, 3> m = rows;
    for (int i = 0; i < 3; ++i) m[i][c] = rhs[i];
    return det3i(m[0], m[1], m[2]);
  };
  Int d = det3i(rows[0], rows[1], rows[2]);
  if (d == 0) throw Error("internal error: degenerate vertex in cell clipping");
  std::array<Int, 4> h{col(0), col(1), col(2), d};
  if (d < 0)
    for (Int& e : h) e = -e;
  Int g = gcd(gcd(h[0], h[1]), gcd(h[2], h[3]));
  for (Int& e : h) e /= g;
  return Vertex{h, {}};
}

bool CellClipper::cut(const Site& a, Int b) {
  Plane np{a, b};
  std::vector<Int> s(vertices_.size());
  bool outside = false, touching = false;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    s[i] = side(vertices_[i], np);
    outside |= s[i] > 0;
    touching |= s[i] == 0;
  }
  if (!outside && !touching) return false;
  int p = static_cast<int>(planes_.size());
  planes_.push_back(np);
  std::vector<Vertex> next;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (s[i] > 0) continue;
    next.push_back(vertices_[i]);
    if (s[i] == 0) next.back().planes.push_back(p);
  }
  if (!outside) {
    vertices_ = std::move(next);
    return false;
  }
  std::vector<int> shared;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (s[i] >= 0) continue;
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
      if (s[j] <= 0) continue;
      shared.clear();
      std::set_intersection(vertices_[i].planes.begin(), vertices_[i].planes.end(), vertices_[j].planes.begin(),
                            vertices_[j].planes.end(), std::back_inserter(shared));
      if (shared.size() < 2) continue;
      Vertex v = intersect(shared[0], shared[1], p);
      v.planes = shared;
      v.planes.push_back(p);
      next.push_back(std::move(v));
    }
  }
  vertices_ = std::move(next);
  return true;
}

bool CellClipper::touches_box() const {
  for (const Vertex& v : vertices_)
    if (v.planes.front() < 6) return true;
  return false;
}

Rational CellClipper::max_sq_radius() const {
  Rational best = 0;
  for (const Vertex& v : vertices_) {
    BigInt w = v.h[3];
    Rational r(big_sq(v.h), w * w);
    if (r > best) best = r;
  }
  return best;
}

bool CellClipper::inside_half_radius(Int r2) const {
  for (const Vertex& v : vertices_) {
    BigInt w = v.h[3];
    if (4 * big_sq(v.h) >= BigInt(r2) * w * w) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> CellClipper::facet_cycles(std::vector<int>* plane_ids) const {
  std::vector<std::vector<std::size_t>> cycles;
  for (int p = 0; p < static_cast<int>(planes_.size()); ++p) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (std::binary_search(vertices_[i].planes.begin(), vertices_[i].planes.end(), p)) on.push_back(i);
    if (on.size() < 3) continue;
    // Two facet vertices are adjacent iff they share a second plane.
    auto adjacent = [&](std::size_t i, std::size_t j) {
      for (int q : vertices_[i].planes)
        if (q != p && std::binary_search(vertices_[j].planes.begin(), vertices_[j].planes.end(), q)) return true;
      return false;
    };
    std::vector<std::size_t> cycle{on.front()};
    std::vector<bool> used(on.size(), false);
    used[0] = true;
    while (cycle.size() < on.size()) {
      bool advanced = false;
      for (std::size_t k = 0; k < on.size() && !advanced; ++k)
        if (!used[k] && adjacent(cycle.back(), on[k])) {
          used[k] = true;
          cycle.push_back(on[k]);
          advanced = true;
        }
      if (!advanced) throw Error("internal error: facet boundary is not a cycle");
    }
    cycles.push_back(std::move(cycle));
    if (plane_ids) plane_ids->push_back(p);
  }
  return cycles;
}

Rational CellClipper::volume() const {
  Rational total = 0;
  for (const auto& cyc : facet_cycles(nullptr)) {
    const auto& h0 = vertices_[cyc[0]].h;
    for (std::size_t i = 1; i + 1 < cyc.size(); ++i) {
      const auto& h1 = vertices_[cyc[i]].h;
      const auto& h2 = vertices_[cyc[i + 1]].h;
      BigInt d = big_det(h0, h1, h2);
      if (d < 0) d = -d;
      total += Rational(d, BigInt(h0[3]) * h1[3] * h2[3]);
    }
  }
  return total / 6;
}

RationalPolytope CellClipper::polytope(const Site& shift) const {
  RationalPolytope out;
  for (const Vertex& v : vertices_) {
    RationalPoint pt;
    for (int i = 0; i < 3; ++i) pt[i] = Rational(BigInt(v.h[i]), BigInt(v.h[3])) + shift[i];
    out.vertices.push_back(pt);
  }
  std::vector<int> ids;
  auto cycles = facet_cycles(&ids);
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    const Plane& p = planes_[ids[k]];
    out.facets.push_back({{p.a, Rational(p.b) + dot(p.a, shift)}, cycles[k]});
  }
  return out;
}

Rational cell_volume(const RationalPolytope& p) {
  if (p.facets.size() < 4) throw InvalidArgument("degenerate polytope");
  // Cone decomposition from vertex 0: facets not containing it contribute
  // the fan tetrahedra over their boundary cycle.
  const RationalPoint& o = p.vertices.front();
  Rational total = 0;
  for (const Facet& f : p.facets) {
    if (std::find(f.vertices.begin(), f.vertices.end(), 0) != f.vertices.end()) continue;
    auto rel = [&](std::size_t i) {
      const RationalPoint& v = p.vertices[i];
      return RationalPoint{v[0] - o[0], v[1] - o[1], v[2] - o[2]};
    };
    RationalPoint a = rel(f.vertices[0]);
    for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i) {
      RationalPoint b = rel(f.vertices[i]), c = rel(f.vertices[i + 1]);
      Rational d = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                   a[2] * (b[0] * c[1] - b[1] * c[0]);
      total += d < 0 ? Rational(-d) : d;
    }
  }
  return total / 6;
}

namespace {

// Cuts with the given offsets in order, skipping the rest once they are too far
// to reach the current cell. Offsets must be sorted by norm.
void clip_all(CellClipper& cell, const std::vector<Site>& offsets) {
  Rational reach = 4 * cell.max_sq_radius();
  for (const Site& d : offsets) {
    if (Rational(sq_norm(d)) > reach) break;
    if (cell.cut_bisector(d)) reach = 4 * cell.max_sq_radius();
  }
}

}  // namespace

VoronoiCell voronoi_cell(const Configuration& c, const Site& x) {
  return voronoi_cell(c, x, 2 * isqrt_ceil(c.d2()));
}

VoronoiCell voronoi_cell(const Configuration& c, const Site& x, Int start_radius) {
  if (!c.is_periodic()) throw InvalidArgument("Voronoi cells need a periodic configuration");
  if (!c.occupied(x)) throw InvalidArgument("site " + to_string(x) + " is not occupied");
  for (Int r = std::max<Int>(start_radius, 1); r <= kMaxCutoff; r *= 2) {
    std::vector<Site> offsets;
    for (const Site& d : closed_ball(r * r))
      if (d != Site{} && c.occupied(x + d)) offsets.push_back(d);
    CellClipper cell(r);
    clip_all(cell, offsets);
    if (cell.inside_half_radius(r * r)) {
      Rational vol = cell.volume();
      return VoronoiCell{x, cell.polytope(x), vol, r * r};
    }
  }
  throw DomainViolation("Voronoi cell of " + to_string(x) + " is not certified within cutoff radius " +
                        std::to_string(kMaxCutoff));
}

TessellationReport tessellation_report(const Configuration& c) {
  TessellationReport r;
  r.domain_volume = c.domain_size();
  r.total_volume = 0;
  for (const Site& s : c.sites()) {
    r.cell_volumes.push_back(voronoi_cell(c, s).volume);
    r.total_volume += r.cell_volumes.back();
  }
  r.ok = r.total_volume == Rational(r.domain_volume);
  return r;
}

bool tessellation_check(const Configuration& c) { return tessellation_report(c).ok; }

namespace {

struct MinCellSearch {
  Int d2;
  Int box;
  MinCellOptions options;
  std::vector<Site> cand;
  std::vector<std::vector<bool>> compatible;
  MinCellResult result;
  bool aborted = false;

  void record(const Rational& v, const std::vector<std::size_t>& chosen) {
    if (!result.best || v < *result.best) {
      if (result.best) result.second = result.best;
      result.best = v;
      result.witness.clear();
      for (std::size_t i : chosen) result.witness.push_back(cand[i]);
    } else if (v != *result.best && (!result.second || v < *result.second)) {
      result.second = v;
    }
  }

  void dfs(std::size_t idx, std::vector<std::size_t>& chosen, const std::vector<bool>& allowed) {
    if (aborted) return;
    if (options.node_budget != 0 && result.nodes >= options.node_budget) {
      aborted = true;
      return;
    }
    ++result.nodes;
    std::vector<Site> planes;
    std::size_t ci = 0;
    for (std::size_t j = 0; j < cand.size(); ++j) {
      bool in = ci < chosen.size() && chosen[ci] == j;
      if (in) ++ci;
      if (in || (j >= idx && allowed[j])) planes.push_back(cand[j]);
    }
    CellClipper cell(box);
    clip_all(cell, planes);
    if (cell.touches_box()) return;
    Rational lb = cell.volume();
    const std::optional<Rational>& bound = options.track_second ? result.second : result.best;
    if (bound && lb >= *bound) return;
    std::size_t j = idx;
    while (j < cand.size() && !allowed[j]) ++j;
    if (j == cand.size()) {
      record(lb, chosen);
      return;
    }
    std::vector<bool> with(allowed.size());
    for (std::size_t k = 0; k < allowed.size(); ++k) with[k] = allowed[k] && compatible[j][k];
    chosen.push_back(j);
    dfs(j + 1, chosen, with);
    chosen.pop_back();
    dfs(j + 1, chosen, allowed);
  }
};

}  // namespace

MinCellResult min_cell_search(Int d2, Int radius, const MinCellOptions& options) {
  if (d2 < 1) throw InvalidArgument("d2 must be positive");
  if (radius < isqrt_ceil(d2)) throw InvalidArgument("radius must be at least ceil(sqrt(d2))");
  MinCellSearch s{d2, 4 * radius, options, {}, {}, {}, false};
  for (const Site& v : closed_ball(radius * radius))
    if (sq_norm(v) >= d2) s.cand.push_back(v);
  std::size_t n = s.cand.size();
  s.compatible.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.compatible[i][j] = i != j && sq_norm(s.cand[i] - s.cand[j]) >= d2;
  std::vector<std::size_t> chosen;
  s.dfs(0, chosen, std::vector<bool>(n, true));
  s.result.complete = !s.aborted;
  return s.result;
}

}  // namespace hc3
