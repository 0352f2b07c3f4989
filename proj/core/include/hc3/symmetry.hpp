#pragma once

#include <array>
#include <compare>
#include <vector>

#include "hc3/site.hpp"

namespace hc3 {

/// A signed permutation of the coordinate axes: (op * v)[i] = sign[i] * v[perm[i]].
/// These are exactly the 48 point symmetries of Z^3 fixing the origin.
class SymmetryOp {
 public:
  /// The identity.
  SymmetryOp();
  /// Throws InvalidArgument unless `perm` is a permutation of {0,1,2} and every
  /// sign is +1 or -1.
  SymmetryOp(std::array<int, 3> perm, std::array<int, 3> sign);

  Site apply(const Site& v) const {
    return Site{sign_[0] * v[perm_[0]], sign_[1] * v[perm_[1]], sign_[2] * v[perm_[2]]};
  }
  Site operator()(const Site& v) const { return apply(v); }

  /// (a * b)(v) = a(b(v)).
  friend SymmetryOp operator*(const SymmetryOp& a, const SymmetryOp& b);

  SymmetryOp inverse() const;
  int determinant() const;
  bool is_identity() const;

  /// Row-major 3x3 matrix with entries in {-1, 0, 1}.
  std::array<std::array<int, 3>, 3> matrix() const;

  const std::array<int, 3>& perm() const { return perm_; }
  const std::array<int, 3>& sign() const { return sign_; }

  auto operator<=>(const SymmetryOp&) const = default;
  bool operator==(const SymmetryOp&) const = default;

 private:
  std::array<int, 3> perm_;
  std::array<int, 3> sign_;
};

inline Site apply_symmetry(const SymmetryOp& op, const Site& v) { return op.apply(v); }

/// All 48 signed permutation matrices. Order is deterministic: permutations in
/// lexicographic order, then sign patterns with +1 before -1 per axis; the
/// identity comes first.
const std::vector<SymmetryOp>& symmetry_group();

}  // namespace hc3
