#include "hc3/configuration.hpp"

#include <algorithm>

namespace hc3 {

Int Window::volume() const {
  Int v = 1;
  for (std::size_t i = 0; i < 3; ++i) v = checked_mul(v, checked_add(checked_sub(hi[i], lo[i]), 1));
  return v;
}

Configuration::Configuration(const Quotient& q, Int d2, const std::vector<Site>& sites)
    : domain_(q), d2_(d2) {
  if (d2 < 1) throw InvalidArgument("d2 must be positive");
  if (q.min_period_norm() < d2)
    throw PeriodTooShort("period lattice has a vector of squared norm " +
                         std::to_string(q.min_period_norm()) + " < d2 = " + std::to_string(d2));
  occupancy_.assign(q.size(), false);
  for (const Site& s : sites) occupancy_[q.index_of(s)] = true;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (occupancy_[i]) sites_.push_back(q.rep(i));
}

Configuration::Configuration(const Window& w, Int d2, const std::vector<Site>& sites)
    : domain_(w), d2_(d2), sites_(sites) {
  if (d2 < 1) throw InvalidArgument("d2 must be positive");
  for (std::size_t i = 0; i < 3; ++i)
    if (w.lo[i] > w.hi[i]) throw InvalidArgument("window has an empty extent");
  for (const Site& s : sites_)
    if (!w.contains(s)) throw InvalidArgument("site " + to_string(s) + " lies outside the window");
  std::sort(sites_.begin(), sites_.end());
  sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
}

const Quotient& Configuration::quotient() const {
  if (!is_periodic()) throw InvalidArgument("configuration is not periodic");
  return std::get<Quotient>(domain_);
}

const Window& Configuration::window() const {
  if (is_periodic()) throw InvalidArgument("configuration is periodic, not a window");
  return std::get<Window>(domain_);
}

Int Configuration::domain_size() const {
  return is_periodic() ? static_cast<Int>(quotient().size()) : window().volume();
}

Site Configuration::canonical(const Site& v) const { return is_periodic() ? quotient().reduce(v) : v; }

bool Configuration::in_domain(const Site& v) const { return is_periodic() || window().contains(v); }

bool Configuration::occupied(const Site& v) const {
  if (is_periodic()) return occupancy_[quotient().index_of(v)];
  return std::binary_search(sites_.begin(), sites_.end(), v);
}

Int Configuration::sq_distance(const Site& a, const Site& b) const {
  return is_periodic() ? quotient().min_image_sq_distance(a, b) : sq_norm(a - b);
}

Configuration Configuration::with_sites(const std::vector<Site>& sites) const {
  if (is_periodic()) return Configuration(quotient(), d2_, sites);
  return Configuration(window(), d2_, sites);
}

Configuration Configuration::with_d2(Int d2) const {
  if (is_periodic()) return Configuration(quotient(), d2, sites_);
  return Configuration(window(), d2, sites_);
}

}  // namespace hc3
