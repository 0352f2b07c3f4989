#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>

#include "hc3/integer.hpp"

namespace hc3 {

/// A point of the cubic lattice Z^3. Ordering is lexicographic in (x, y, z).
struct Site {
  Int x = 0;
  Int y = 0;
  Int z = 0;

  constexpr Int operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr Int& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

  auto operator<=>(const Site&) const = default;
  bool operator==(const Site&) const = default;

  Site& operator+=(const Site& o) {
    x = checked_add(x, o.x);
    y = checked_add(y, o.y);
    z = checked_add(z, o.z);
    return *this;
  }
  Site& operator-=(const Site& o) {
    x = checked_sub(x, o.x);
    y = checked_sub(y, o.y);
    z = checked_sub(z, o.z);
    return *this;
  }
};

inline Site operator+(Site a, const Site& b) { return a += b; }
inline Site operator-(Site a, const Site& b) { return a -= b; }
inline Site operator-(const Site& a) { return Site{-a.x, -a.y, -a.z}; }
inline Site operator*(Int k, const Site& a) {
  return Site{checked_mul(k, a.x), checked_mul(k, a.y), checked_mul(k, a.z)};
}

inline Int dot(const Site& a, const Site& b) {
  return checked_add(checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y)),
                     checked_mul(a.z, b.z));
}

/// Squared Euclidean norm x^2 + y^2 + z^2.
inline Int sq_norm(const Site& v) { return dot(v, v); }

inline Site cross(const Site& a, const Site& b) {
  return Site{checked_sub(checked_mul(a.y, b.z), checked_mul(a.z, b.y)),
              checked_sub(checked_mul(a.z, b.x), checked_mul(a.x, b.z)),
              checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x))};
}

inline Int det3(const Site& a, const Site& b, const Site& c) { return dot(a, cross(b, c)); }

/// Divides out the gcd of the coordinates; the zero vector is returned as is.
inline Site primitive(const Site& v) {
  Int g = gcd(gcd(v.x, v.y), v.z);
  if (g == 0) return v;
  return Site{v.x / g, v.y / g, v.z / g};
}

/// Primitive representative of the line through v with first nonzero coordinate positive.
inline Site direction(const Site& v) {
  Site p = primitive(v);
  if (p.x < 0 || (p.x == 0 && (p.y < 0 || (p.y == 0 && p.z < 0)))) return -p;
  return p;
}

std::string to_string(const Site& s);
std::ostream& operator<<(std::ostream& os, const Site& s);

struct SiteHash {
  std::size_t operator()(const Site& s) const noexcept {
    std::size_t h = std::hash<Int>{}(s.x);
    h ^= std::hash<Int>{}(s.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<Int>{}(s.z) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace hc3
