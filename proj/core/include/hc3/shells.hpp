#pragma once

#include <vector>

#include "hc3/site.hpp"

namespace hc3 {

/// All integer triples with x^2 + y^2 + z^2 = n, in lexicographic order.
std::vector<Site> vectors_of_norm(Int n);

/// All nonzero v with |v|^2 < bound, sorted by squared norm, then lexicographically.
std::vector<Site> open_ball(Int bound);

/// All v (including 0) with |v|^2 <= bound, sorted by squared norm, then lexicographically.
std::vector<Site> closed_ball(Int bound);

/// Sorting predicate: squared norm first, then lexicographic.
inline bool norm_then_lex(const Site& a, const Site& b) {
  Int na = sq_norm(a), nb = sq_norm(b);
  return na != nb ? na < nb : a < b;
}

}  // namespace hc3
