#pragma once

#include <string>

#include "ifsembed/rational.hpp"

namespace ifsembed {

/// Closed axis-aligned box [lower_0, upper_0] x ... x [lower_{d-1}, upper_{d-1}].
class Box {
 public:
  Box() = default;
  /// Throws PreconditionError if any lower[j] > upper[j].
  Box(RationalVector lower, RationalVector upper);

  const RationalVector& lower() const { return lower_; }
  const RationalVector& upper() const { return upper_; }
  std::size_t dimension() const { return lower_.dimension(); }

  bool contains(const RationalVector& p) const;
  bool contains(const Box& inner) const;
  /// Squared length of the main diagonal.
  Rational squared_diameter() const;
  RationalVector center() const;

  friend bool operator==(const Box&, const Box&) = default;
  std::string str() const;

 private:
  RationalVector lower_;
  RationalVector upper_;
};

/// Smallest box containing every point in `points` (which must be non-empty).
Box bounding_box(const std::vector<RationalVector>& points);

/// Exact squared Euclidean distance between two boxes (zero if they meet).
Rational squared_distance(const Box& a, const Box& b);
/// Exact squared distance between the farthest pair of points of two boxes.
Rational max_squared_distance(const Box& a, const Box& b);
Rational squared_distance(const RationalVector& p, const Box& b);

}  // namespace ifsembed
