#include "hc3/quotient.hpp"

#include <limits>

namespace hc3 {

Quotient::Quotient(const SublatticeBasis& period)
    : period_(period),
      hnf_(hnf(period)),
      d1_(hnf_[0].x),
      d2_(hnf_[1].y),
      d3_(hnf_[2].z),
      size_(static_cast<std::size_t>(lattice_index(period))),
      min_norm_(shortest_vectors(period).min_sq_norm) {}

std::size_t Quotient::index_of(const Site& v) const {
  Site r = reduce(v);
  return static_cast<std::size_t>((r.x * d2_ + r.y) * d3_ + r.z);
}

Site Quotient::rep(std::size_t i) const {
  if (i >= size_) throw InvalidArgument("coset index out of range");
  Int k = static_cast<Int>(i);
  return Site{k / (d2_ * d3_), (k / d3_) % d2_, k % d3_};
}

std::vector<Site> Quotient::representatives() const {
  std::vector<Site> reps;
  reps.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) reps.push_back(rep(i));
  return reps;
}

Int Quotient::min_image_sq_distance(const Site& a, const Site& b) const {
  Site d = reduce(a - b);
  if (d == Site{}) return 0;
  return min_norm_in_coset(hnf_.generators(), d).sq_norm;
}

}  // namespace hc3
