#include "hc3/site.hpp"

namespace hc3 {

std::string to_string(const Site& s) {
  return "(" + std::to_string(s.x) + "," + std::to_string(s.y) + "," + std::to_string(s.z) + ")";
}

std::ostream& operator<<(std::ostream& os, const Site& s) { return os << to_string(s); }

}  // namespace hc3
