#include "hc3/admissibility.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "hc3/shells.hpp"

namespace hc3 {

ExclusionTable::ExclusionTable(const Quotient& q, Int d2) : d2_(d2) {
  if (d2 < 1) throw InvalidArgument("d2 must be positive");
  if (q.min_period_norm() < d2)
    throw PeriodTooShort("period lattice has a vector of squared norm " +
                         std::to_string(q.min_period_norm()) + " < d2 = " + std::to_string(d2));
  std::vector<bool> seen(q.size(), false);
  for (const Site& v : open_ball(d2)) {
    std::size_t k = q.index_of(v);
    if (seen[k]) continue;
    seen[k] = true;
    offsets_.push_back(v);
  }
}

namespace {

// Visits every unordered violating pair (a, b) with a < b in domain order until f
// returns false. Distances are computed exactly by the caller if needed.
template <class F>
void for_each_conflict(const Configuration& c, F&& f) {
  if (c.is_periodic()) {
    const Quotient& q = c.quotient();
    ExclusionTable table(q, c.d2());
    for (const Site& a : c.sites()) {
      std::size_t ia = q.index_of(a);
      for (const Site& v : table.offsets()) {
        Site b = q.reduce(a + v);
        if (q.index_of(b) > ia && c.occupied(b))
          if (!f(a, b)) return;
      }
    }
  } else {
    std::vector<Site> ball = open_ball(c.d2());
    for (const Site& a : c.sites())
      for (const Site& v : ball) {
        Site b = a + v;
        if (a < b && c.occupied(b))
          if (!f(a, b)) return;
      }
  }
}

}  // namespace

AdmissibilityReport is_admissible(const Configuration& c) {
  AdmissibilityReport r;
  for_each_conflict(c, [&](const Site& a, const Site& b) {
    Int d = c.sq_distance(a, b);
    if (!r.violation || d < r.violation_sq_distance ||
        (d == r.violation_sq_distance && std::pair(a, b) < *r.violation)) {
      r.admissible = false;
      r.violation = std::pair(a, b);
      r.violation_sq_distance = d;
    }
    return true;
  });
  return r;
}

Rational density(const Configuration& c) { return make_rational(static_cast<Int>(c.size()), c.domain_size()); }

Int min_pair_sq_distance(const Configuration& c) {
  if (c.size() < 2) throw InvalidArgument("need at least two particles for a pair distance");
  Int best = std::numeric_limits<Int>::max();
  if (c.is_periodic()) {
    const Quotient& q = c.quotient();
    best = q.min_period_norm();
    std::set<Site> diffs;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) diffs.insert(q.reduce(c.sites()[j] - c.sites()[i]));
    for (const Site& d : diffs) best = std::min(best, q.min_image_sq_distance(d, Site{}));
  } else {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        best = std::min(best, sq_norm(c.sites()[j] - c.sites()[i]));
  }
  return best;
}

std::vector<Site> insertion_candidates(const Configuration& c) {
  std::vector<Site> out;
  auto blocked = [&](const Site& x, const std::vector<Site>& offsets) {
    for (const Site& v : offsets)
      if (c.in_domain(x + v) && c.occupied(x + v)) return true;
    return false;
  };
  if (c.is_periodic()) {
    const Quotient& q = c.quotient();
    ExclusionTable table(q, c.d2());
    for (std::size_t i = 0; i < q.size(); ++i) {
      Site x = q.rep(i);
      if (!c.occupied(x) && !blocked(x, table.offsets())) out.push_back(x);
    }
  } else {
    const Window& w = c.window();
    std::vector<Site> ball = open_ball(c.d2());
    for (Int x = w.lo.x; x <= w.hi.x; ++x)
      for (Int y = w.lo.y; y <= w.hi.y; ++y)
        for (Int z = w.lo.z; z <= w.hi.z; ++z) {
          Site s{x, y, z};
          if (!c.occupied(s) && !blocked(s, ball)) out.push_back(s);
        }
  }
  return out;
}

bool ExclusionGraph::adjacent(std::size_t a, std::size_t b) const {
  return std::binary_search(adj[a].begin(), adj[a].end(), static_cast<std::uint32_t>(b));
}

std::size_t ExclusionGraph::edge_count() const {
  std::size_t s = 0;
  for (const auto& l : adj) s += l.size();
  return s / 2;
}

ExclusionGraph build_exclusion_graph(const Quotient& q, Int d2) {
  if (q.size() > std::numeric_limits<std::uint32_t>::max())
    throw InvalidArgument("quotient too large for an exclusion graph");
  ExclusionTable table(q, d2);
  ExclusionGraph g;
  g.n = q.size();
  g.adj.resize(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    Site x = q.rep(i);
    auto& l = g.adj[i];
    for (const Site& v : table.offsets()) l.push_back(static_cast<std::uint32_t>(q.index_of(x + v)));
    std::sort(l.begin(), l.end());
  }
  return g;
}

}  // namespace hc3
