#include "hc3/embeddings.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hc3 {

std::vector<SublatticeBasis> enumerate_fcc_embeddings(Int ell) {
  if (ell < 1) throw InvalidArgument("l must be positive");
  Int l2 = checked_mul(ell, ell);
  std::vector<Site> shell = vectors_of_norm(2 * l2);
  std::map<std::array<Int, 9>, SublatticeBasis> found;
  for (const Site& v1 : shell) {
    std::vector<Site> next;
    for (const Site& v : shell)
      if (dot(v1, v) == l2) next.push_back(v);
    for (const Site& v2 : next)
      for (const Site& v3 : next) {
        if (dot(v2, v3) != l2) continue;
        SublatticeBasis h = hnf(SublatticeBasis(v1, v2, v3));
        found.emplace(flat_key(h), h);
      }
  }
  std::vector<SublatticeBasis> out;
  for (auto& [k, b] : found) out.push_back(b);
  return out;
}

std::vector<EmbeddingClass> embedding_classes(Int ell) {
  std::map<std::array<Int, 9>, EmbeddingClass> classes;
  for (const SublatticeBasis& e : enumerate_fcc_embeddings(ell)) {
    SublatticeBasis rep = canonical_class_rep(e);
    auto it = classes.find(flat_key(rep));
    if (it == classes.end()) it = classes.emplace(flat_key(rep), EmbeddingClass{rep, 0, {}}).first;
    it->second.members.push_back(e);
  }
  std::vector<EmbeddingClass> out;
  for (auto& [k, c] : classes) {
    c.orbit_size = c.members.size();
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<Int> fcc_embedding_scale(const SublatticeBasis& basis) {
  ShortestVectors sv = shortest_vectors(basis);
  if (sv.min_sq_norm % 2 != 0 || sv.vectors.size() != 12) return std::nullopt;
  Int ell = isqrt(sv.min_sq_norm / 2);
  if (2 * ell * ell != sv.min_sq_norm) return std::nullopt;
  if (lattice_index(basis) != 2 * ell * ell * ell) return std::nullopt;
  return ell;
}

namespace {

// Coordinates of v (in the plane of e1, e2) with respect to e1, e2.
std::pair<Int, Int> plane_coords(const Site& v, const Site& e1, const Site& e2) {
  Site n = cross(e1, e2);
  Int nn = sq_norm(n);
  return {dot(cross(v, e2), n) / nn, dot(cross(e1, v), n) / nn};
}

}  // namespace

LayeredCheck admits_layered(const SublatticeBasis& embedding) {
  std::optional<Int> ell = fcc_embedding_scale(embedding);
  if (!ell) throw InvalidArgument("basis does not span an FCC embedding");
  LayeredCheck out;
  out.ell = *ell;
  Int l2 = *ell * *ell, d2 = 2 * l2;
  std::vector<Site> minimal = shortest_vectors(embedding).vectors;

  std::map<Site, std::array<Site, 2>> families;  // normal -> close-packed mesh basis
  for (const Site& a : minimal)
    for (const Site& b : minimal)
      if (dot(a, b) == l2) families.emplace(direction(cross(a, b)), std::array<Site, 2>{a, b});

  for (const auto& [n, mesh] : families) {
    std::vector<Site> m{mesh[0], mesh[1]};
    Site s;
    Int h = 0;
    for (const Site& v : minimal) {
      Int hv = dot(n, v);
      if (hv > 0 && (h == 0 || hv < h)) {
        h = hv;
        s = v;
      }
    }
    out.normal = n;
    out.mesh = mesh;
    out.step = s;
    out.shift.reset();

    // Coset representatives of (Z^3 ∩ n⊥) / M from the 2-D HNF of M.
    auto [e1, e2] = orthogonal_lattice(n);
    auto [p1, q1] = plane_coords(mesh[0], e1, e2);
    auto [p2, q2] = plane_coords(mesh[1], e1, e2);
    std::array<Int, 2> c0{p1, q1}, c1{p2, q2};
    while (c1[0] != 0) {
      if (c0[0] == 0 || std::llabs(c1[0]) < std::llabs(c0[0])) std::swap(c0, c1);
      Int k = floor_div(c1[0], c0[0]);
      c1 = {c1[0] - k * c0[0], c1[1] - k * c0[1]};
    }
    Int d1 = std::llabs(c0[0]), dd2 = std::llabs(c1[1]);

    auto clear = [&](const Site& offset) { return min_norm_in_coset(m, offset).sq_norm >= d2; };
    for (Int i = 0; i < d1 && !out.shift; ++i)
      for (Int j = 0; j < dd2 && !out.shift; ++j) {
        if (i == 0 && j == 0) continue;
        Site t = s + (i * e1 + j * e2);
        if (clear(t) && clear(s + s) && clear(s + t) && clear(t + t)) out.shift = t;
      }
    if (out.shift) {
      out.admits = true;
      return out;
    }
  }
  return out;
}

}  // namespace hc3
