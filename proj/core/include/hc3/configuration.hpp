#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hc3/quotient.hpp"
#include "hc3/rational.hpp"
#include "hc3/site.hpp"

namespace hc3 {

/// A finite box [lo, hi] (inclusive) with free boundary: no periodic images.
struct Window {
  Site lo;
  Site hi;

  bool contains(const Site& v) const {
    return lo.x <= v.x && v.x <= hi.x && lo.y <= v.y && v.y <= hi.y && lo.z <= v.z && v.z <= hi.z;
  }
  Int volume() const;
  bool operator==(const Window&) const = default;
};

/// Occupied sites on a torus (or in a window) together with the squared
/// exclusion distance d2. Values are immutable; edits return new objects.
///
/// On a quotient the stored sites are coset representatives in coset order.
/// Construction fails with PeriodTooShort when a nonzero period vector is
/// shorter than sqrt(d2). Pairwise admissibility is not checked here.
class Configuration {
 public:
  Configuration(const Quotient& q, Int d2, const std::vector<Site>& sites);
  Configuration(const Window& w, Int d2, const std::vector<Site>& sites);

  bool is_periodic() const { return std::holds_alternative<Quotient>(domain_); }
  const Quotient& quotient() const;
  const Window& window() const;

  Int d2() const { return d2_; }
  const std::vector<Site>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }

  /// Number of sites in the domain: the quotient index or the window volume.
  Int domain_size() const;

  /// Canonical form of v in the domain (the coset representative, or v itself
  /// for windows).
  Site canonical(const Site& v) const;
  bool in_domain(const Site& v) const;
  bool occupied(const Site& v) const;

  /// Squared distance between two sites: minimum image on a torus, plain
  /// Euclidean in a window.
  Int sq_distance(const Site& a, const Site& b) const;

  Configuration with_sites(const std::vector<Site>& sites) const;
  Configuration with_d2(Int d2) const;

  bool operator==(const Configuration& o) const {
    return d2_ == o.d2_ && domain_ == o.domain_ && sites_ == o.sites_;
  }

 private:
  std::variant<Quotient, Window> domain_;
  Int d2_;
  std::vector<Site> sites_;
  std::vector<bool> occupancy_;  // per coset index, periodic case only
};

}  // namespace hc3
