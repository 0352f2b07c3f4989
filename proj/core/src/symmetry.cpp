#include "hc3/symmetry.hpp"

#include <algorithm>

namespace hc3 {

SymmetryOp::SymmetryOp() : perm_{0, 1, 2}, sign_{1, 1, 1} {}

SymmetryOp::SymmetryOp(std::array<int, 3> perm, std::array<int, 3> sign)
    : perm_(perm), sign_(sign) {
  std::array<int, 3> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) throw InvalidArgument("symmetry: not a permutation");
  for (int s : sign)
    if (s != 1 && s != -1) throw InvalidArgument("symmetry: signs must be +1 or -1");
}

SymmetryOp operator*(const SymmetryOp& a, const SymmetryOp& b) {
  // (a(b(v)))[i] = a.sign[i] * b.sign[a.perm[i]] * v[b.perm[a.perm[i]]]
  std::array<int, 3> perm{}, sign{};
  for (int i = 0; i < 3; ++i) {
    perm[i] = b.perm_[a.perm_[i]];
    sign[i] = a.sign_[i] * b.sign_[a.perm_[i]];
  }
  return SymmetryOp(perm, sign);
}

SymmetryOp SymmetryOp::inverse() const {
  std::array<int, 3> perm{}, sign{};
  for (int i = 0; i < 3; ++i) {
    perm[perm_[i]] = i;
    sign[perm_[i]] = sign_[i];
  }
  return SymmetryOp(perm, sign);
}

int SymmetryOp::determinant() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (perm_[i] > perm_[j]) ++inversions;
  int d = (inversions % 2 == 0) ? 1 : -1;
  return d * sign_[0] * sign_[1] * sign_[2];
}

bool SymmetryOp::is_identity() const { return *this == SymmetryOp(); }

std::array<std::array<int, 3>, 3> SymmetryOp::matrix() const {
  std::array<std::array<int, 3>, 3> m{};
  for (int i = 0; i < 3; ++i) m[i][perm_[i]] = sign_[i];
  return m;
}

const std::vector<SymmetryOp>& symmetry_group() {
  static const std::vector<SymmetryOp> group = [] {
    std::vector<SymmetryOp> ops;
    ops.reserve(48);
    std::array<int, 3> perm{0, 1, 2};
    do {
      for (int mask = 0; mask < 8; ++mask) {
        std::array<int, 3> sign{(mask & 4) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 1) ? -1 : 1};
        ops.emplace_back(perm, sign);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return ops;
  }();
  return group;
}

}  // namespace hc3
