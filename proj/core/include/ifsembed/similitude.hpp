#pragma once

#include <string>

#include "ifsembed/box.hpp"
#include "ifsembed/rational.hpp"
#include "ifsembed/signed_permutation.hpp"

namespace ifsembed {

/// The map x -> ratio * orth(x) + trans with ratio > 0.
class Similitude {
 public:
  Similitude() = default;
  /// Throws PreconditionError when ratio <= 0 and DimensionMismatch when the
  /// orthogonal part and translation disagree in dimension.
  Similitude(Rational ratio, SignedPermutation orth, RationalVector trans);

  static Similitude identity(std::size_t dim);
  /// x -> ratio * x + trans.
  static Similitude scaling(Rational ratio, RationalVector trans);

  const Rational& ratio() const { return ratio_; }
  const SignedPermutation& orth() const { return orth_; }
  const RationalVector& trans() const { return trans_; }
  std::size_t dimension() const { return trans_.dimension(); }

  bool is_contracting() const { return ratio_ < Rational(1); }
  bool is_isometry() const { return ratio_ == Rational(1); }
  bool is_identity() const;

  RationalVector apply(const RationalVector& p) const;
  RationalVector operator()(const RationalVector& p) const { return apply(p); }
  /// Exact image of an axis-aligned box (signed permutations keep boxes axis-aligned).
  Box apply_box(const Box& b) const;
  /// Unique fixed point; throws PreconditionError unless ratio < 1.
  RationalVector fixed_point() const;
  Similitude power(unsigned long k) const;
  Similitude inverse() const;

  friend bool operator==(const Similitude&, const Similitude&) = default;
  friend auto operator<=>(const Similitude&, const Similitude&) = default;

  std::string str() const;

 private:
  Rational ratio_{1};
  SignedPermutation orth_;
  RationalVector trans_;
};

/// x -> outer(inner(x)).
Similitude compose(const Similitude& outer, const Similitude& inner);

/// Solves A x = b exactly for a square non-singular A; throws PreconditionError
/// if A is singular.
RationalVector solve_linear(std::vector<std::vector<Rational>> a, RationalVector b);

}  // namespace ifsembed
