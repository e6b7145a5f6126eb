#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ifsembed/rational.hpp"

namespace ifsembed {

/// Orthogonal matrix with exactly one +-1 entry per row and column.
///
/// Row i of the matrix has entry signs[i] in column perm[i], so
/// (M x)_i = signs[i] * x[perm[i]].
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Throws PreconditionError unless `perm` is a bijection of {0..d-1} and
  /// every sign is +1 or -1.
  SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs);

  static SignedPermutation identity(std::size_t dim);
  /// Planar rotation by quarter_turns * pi/2 (counterclockwise).
  static SignedPermutation rotation(int quarter_turns);
  /// x -> -x in any dimension.
  static SignedPermutation negation(std::size_t dim);

  std::size_t dimension() const { return perm_.size(); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  RationalVector apply(const RationalVector& x) const;
  /// Matrix product (*this) * rhs.
  SignedPermutation compose(const SignedPermutation& rhs) const;
  /// Transpose, which is the inverse for orthogonal matrices.
  SignedPermutation inverse() const;
  SignedPermutation power(unsigned long k) const;
  bool is_identity() const;
  /// Smallest k >= 1 with M^k = I.
  unsigned long order() const;
  /// Entry of the matrix at (row, col).
  int entry(std::size_t row, std::size_t col) const {
    return perm_[row] == col ? signs_[row] : 0;
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

  std::string str() const;

 private:
  std::vector<std::size_t> perm_;
  std::vector<int> signs_;
};

}  // namespace ifsembed
