#include "hc3/sublattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace hc3 {

SublatticeBasis::SublatticeBasis(const Site& g1, const Site& g2, const Site& g3) : g_{g1, g2, g3} {
  if (det3(g1, g2, g3) == 0) throw InvalidArgument("sublattice basis is singular");
}

SublatticeBasis SublatticeBasis::diagonal(Int a, Int b, Int c) {
  return SublatticeBasis(Site{a, 0, 0}, Site{0, b, 0}, Site{0, 0, c});
}

SublatticeBasis SublatticeBasis::scaled(Int k) const {
  return SublatticeBasis(k * g_[0], k * g_[1], k * g_[2]);
}

namespace {

void sub_multiple(Site& target, Int q, const Site& col) {
  if (q != 0) target -= q * col;
}

}  // namespace

SublatticeBasis lattice_span(const std::vector<Site>& generators) {
  std::vector<Site> c = generators;
  if (c.size() < 3) throw InvalidArgument("a rank-3 lattice needs at least three generators");
  for (std::size_t row = 0; row < 3; ++row) {
    // Euclid on row `row` across the remaining columns until only column `row` is nonzero.
    for (;;) {
      std::size_t pivot = c.size();
      for (std::size_t j = row; j < c.size(); ++j)
        if (c[j][row] != 0 && (pivot == c.size() || std::llabs(c[j][row]) < std::llabs(c[pivot][row])))
          pivot = j;
      if (pivot == c.size()) throw InvalidArgument("generators do not span a rank-3 lattice");
      std::swap(c[row], c[pivot]);
      bool done = true;
      for (std::size_t j = row + 1; j < c.size(); ++j) {
        if (c[j][row] == 0) continue;
        sub_multiple(c[j], floor_div(c[j][row], c[row][row]), c[row]);
        if (c[j][row] != 0) done = false;
      }
      if (done) break;
    }
    if (c[row][row] < 0) c[row] = -c[row];
  }
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t j = 0; j < i; ++j) sub_multiple(c[j], floor_div(c[j][i], c[i][i]), c[i]);
  return SublatticeBasis(c[0], c[1], c[2]);
}

SublatticeBasis hnf(const SublatticeBasis& basis) {
  const auto& g = basis.generators();
  return lattice_span({g[0], g[1], g[2]});
}

bool same_lattice(const SublatticeBasis& a, const SublatticeBasis& b) { return hnf(a) == hnf(b); }

Int lattice_index(const SublatticeBasis& basis) {
  Int d = basis.det();
  return d < 0 ? checked_sub(0, d) : d;
}

Site reduce_into_box(const SublatticeBasis& h, const Site& v) {
  Site r = v;
  for (std::size_t i = 0; i < 3; ++i) sub_multiple(r, floor_div(r[i], h[i][i]), h[i]);
  return r;
}

bool lattice_contains(const SublatticeBasis& basis, const Site& v) {
  return reduce_into_box(hnf(basis), v) == Site{};
}

SublatticeBasis transform(const SymmetryOp& op, const SublatticeBasis& basis) {
  return SublatticeBasis(op(basis[0]), op(basis[1]), op(basis[2]));
}

std::array<Int, 9> flat_key(const SublatticeBasis& basis) {
  std::array<Int, 9> k{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) k[3 * i + j] = basis[i][j];
  return k;
}

SublatticeBasis canonical_class_rep(const SublatticeBasis& basis) {
  std::optional<SublatticeBasis> best;
  for (const SymmetryOp& op : symmetry_group()) {
    SublatticeBasis h = hnf(transform(op, basis));
    if (!best || flat_key(h) < flat_key(*best)) best = h;
  }
  return *best;
}

std::vector<Site> pair_reduce(std::vector<Site> b) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (i == j) continue;
        Int q = round_div(dot(b[i], b[j]), sq_norm(b[j]));
        if (q != 0) {
          b[i] -= q * b[j];
          changed = true;
        }
      }
  }
  std::stable_sort(b.begin(), b.end(),
                   [](const Site& a, const Site& c) { return sq_norm(a) < sq_norm(c); });
  return b;
}

namespace {

// Diagonal of the inverse Gram matrix as (cofactor_ii, det G).
struct GramBounds {
  std::vector<Int> cof;
  Int det = 0;
};

GramBounds gram_bounds(const std::vector<Site>& b) {
  GramBounds g;
  if (b.size() == 2) {
    Int g00 = sq_norm(b[0]), g11 = sq_norm(b[1]), g01 = dot(b[0], b[1]);
    g.det = checked_sub(checked_mul(g00, g11), checked_mul(g01, g01));
    g.cof = {g11, g00};
  } else {
    // For three vectors, det G = det(B)^2 and cof_ii = |b_j x b_k|^2.
    Int d = det3(b[0], b[1], b[2]);
    g.det = checked_mul(d, d);
    g.cof = {sq_norm(cross(b[1], b[2])), sq_norm(cross(b[0], b[2])), sq_norm(cross(b[0], b[1]))};
  }
  if (g.det == 0) throw InvalidArgument("lattice generators are linearly dependent");
  return g;
}

// Largest c with c^2 <= w * cof / det.
Int coefficient_bound(Int w, Int cof, Int det) { return isqrt(checked_mul(w, cof) / det); }

template <class F>
void for_each_coefficient(const std::vector<Int>& bound, F&& f) {
  std::vector<Int> c(bound.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -bound[i];
  for (;;) {
    f(c);
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound[i]) {
      c[i] = -bound[i];
      ++i;
    }
    if (i == c.size()) return;
    ++c[i];
  }
}

Site combine(const Site& base, const std::vector<Site>& b, const std::vector<Int>& c) {
  Site w = base;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (c[i] != 0) w += c[i] * b[i];
  return w;
}

}  // namespace

ShortestVectors shortest_vectors(const SublatticeBasis& basis) {
  std::vector<Site> b = pair_reduce({basis[0], basis[1], basis[2]});
  GramBounds gb = gram_bounds(b);
  Int w = sq_norm(b[0]);
  std::vector<Int> bound(3);
  for (std::size_t i = 0; i < 3; ++i) bound[i] = coefficient_bound(w, gb.cof[i], gb.det);
  ShortestVectors out;
  out.min_sq_norm = w;
  for_each_coefficient(bound, [&](const std::vector<Int>& c) {
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) return;
    Site v = combine(Site{}, b, c);
    Int n = sq_norm(v);
    if (n < out.min_sq_norm) {
      out.min_sq_norm = n;
      out.vectors.clear();
    }
    if (n == out.min_sq_norm) out.vectors.push_back(v);
  });
  std::sort(out.vectors.begin(), out.vectors.end());
  return out;
}

CosetMinimum min_norm_in_coset(std::span<const Site> basis, const Site& target) {
  if (basis.size() != 2 && basis.size() != 3)
    throw InvalidArgument("coset minimum needs a rank-2 or rank-3 basis");
  std::vector<Site> b = pair_reduce(std::vector<Site>(basis.begin(), basis.end()));
  GramBounds gb = gram_bounds(b);
  // Size-reduce the target; every step strictly lowers its norm.
  Site t = target;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Site& g : b) {
      Int q = round_div(dot(t, g), sq_norm(g));
      if (q != 0) {
        t -= q * g;
        changed = true;
      }
    }
  }
  // Any better point t + p has |p| <= 2|t|.
  Int w = checked_mul(4, sq_norm(t));
  std::vector<Int> bound(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) bound[i] = coefficient_bound(w, gb.cof[i], gb.det);
  CosetMinimum best{sq_norm(t), t};
  for_each_coefficient(bound, [&](const std::vector<Int>& c) {
    Site v = combine(t, b, c);
    Int n = sq_norm(v);
    if (n < best.sq_norm || (n == best.sq_norm && v < best.vector)) best = {n, v};
  });
  return best;
}

bool in_plane_lattice(const Site& u, const Site& g1, const Site& g2) {
  Site n = cross(g1, g2);
  if (dot(u, n) != 0) return false;
  // Solve u = a g1 + b g2 by Cramer's rule on the cross products.
  Int nn = sq_norm(n);
  Int a = dot(cross(u, g2), n);
  Int b = dot(cross(g1, u), n);
  return a % nn == 0 && b % nn == 0;
}

std::array<Site, 2> orthogonal_lattice(const Site& normal) {
  if (normal == Site{}) throw InvalidArgument("normal vector must be nonzero");
  Site n = primitive(normal);
  // Unimodular column operations on the row vector n reduce it to (g, 0, 0);
  // the last two columns of the accumulated transform span the kernel.
  std::array<Int, 3> row{n.x, n.y, n.z};
  std::array<Site, 3> u{Site{1, 0, 0}, Site{0, 1, 0}, Site{0, 0, 1}};
  for (;;) {
    std::size_t pivot = 3;
    for (std::size_t j = 0; j < 3; ++j)
      if (row[j] != 0 && (pivot == 3 || std::llabs(row[j]) < std::llabs(row[pivot]))) pivot = j;
    std::swap(row[0], row[pivot]);
    std::swap(u[0], u[pivot]);
    bool done = true;
    for (std::size_t j = 1; j < 3; ++j) {
      if (row[j] == 0) continue;
      Int q = floor_div(row[j], row[0]);
      row[j] = checked_sub(row[j], checked_mul(q, row[0]));
      u[j] -= q * u[0];
      if (row[j] != 0) done = false;
    }
    if (done) break;
  }
  std::vector<Site> k = pair_reduce({u[1], u[2]});
  return {k[0], k[1]};
}

}  // namespace hc3
