#include "hc3/shells.hpp"

#include <algorithm>

namespace hc3 {

std::vector<Site> vectors_of_norm(Int n) {
  std::vector<Site> out;
  if (n < 0) return out;
  Int r = isqrt(n);
  for (Int x = -r; x <= r; ++x) {
    Int rx = n - x * x;
    Int ry = isqrt(rx);
    for (Int y = -ry; y <= ry; ++y) {
      Int rz = rx - y * y;
      Int z = isqrt(rz);
      if (z * z != rz) continue;
      if (z == 0) {
        out.push_back({x, y, 0});
      } else {
        out.push_back({x, y, -z});
        out.push_back({x, y, z});
      }
    }
  }
  return out;
}

std::vector<Site> closed_ball(Int bound) {
  std::vector<Site> out;
  if (bound < 0) return out;
  Int r = isqrt(bound);
  for (Int x = -r; x <= r; ++x)
    for (Int y = -r; y <= r; ++y)
      for (Int z = -r; z <= r; ++z)
        if (x * x + y * y + z * z <= bound) out.push_back({x, y, z});
  std::sort(out.begin(), out.end(), norm_then_lex);
  return out;
}

std::vector<Site> open_ball(Int bound) {
  std::vector<Site> out = closed_ball(bound - 1);
  if (!out.empty()) out.erase(out.begin());
  return out;
}

}  // namespace hc3
