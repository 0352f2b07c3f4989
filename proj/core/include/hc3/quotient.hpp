#pragma once

#include <cstddef>
#include <vector>

#include "hc3/site.hpp"
#include "hc3/sublattice.hpp"

namespace hc3 {

/// The torus Z^3 / P for a full-rank period lattice P. Cosets are numbered
/// 0..N-1 in lexicographic order of their representatives in the HNF box
/// [0,d1) x [0,d2) x [0,d3), so index = (x * d2 + y) * d3 + z.
class Quotient {
 public:
  explicit Quotient(const SublatticeBasis& period);

  static Quotient diagonal(Int a, Int b, Int c) { return Quotient(SublatticeBasis::diagonal(a, b, c)); }
  static Quotient cube(Int l) { return diagonal(l, l, l); }

  const SublatticeBasis& period() const { return period_; }
  const SublatticeBasis& hnf_basis() const { return hnf_; }

  /// N = |det P|.
  std::size_t size() const { return size_; }

  Site reduce(const Site& v) const { return reduce_into_box(hnf_, v); }
  std::size_t index_of(const Site& v) const;
  Site rep(std::size_t i) const;
  std::vector<Site> representatives() const;

  bool same_coset(const Site& a, const Site& b) const { return reduce(a - b) == Site{}; }

  /// Minimum nonzero squared norm of the period lattice.
  Int min_period_norm() const { return min_norm_; }

  /// min over p in P of |a - b + p|^2, exact.
  Int min_image_sq_distance(const Site& a, const Site& b) const;

  bool operator==(const Quotient& o) const { return hnf_ == o.hnf_; }

 private:
  SublatticeBasis period_;
  SublatticeBasis hnf_;
  Int d1_, d2_, d3_;
  std::size_t size_;
  Int min_norm_;
};

inline Quotient quotient(const SublatticeBasis& p) { return Quotient(p); }

inline Int min_image_sq_distance(const Quotient& q, const Site& a, const Site& b) {
  return q.min_image_sq_distance(a, b);
}

}  // namespace hc3
