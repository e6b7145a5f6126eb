#pragma once

#include <optional>
#include <vector>

#include "ifsembed/box.hpp"
#include "ifsembed/similitude.hpp"
#include "ifsembed/word.hpp"

namespace ifsembed {

/// Ordered list of m >= 2 contracting similitudes on R^d.
///
/// The attractor K is never materialised. Two boxes are available:
/// `hull()` is the exact axis-aligned bounding box of K, and `base_box()` is
/// the initial invariant box used for covers (the declared box when one was
/// supplied, the hull otherwise).
class Ifs {
 public:
  /// Throws PreconditionError for fewer than two maps, a non-contracting map,
  /// or a declared box that is not mapped into itself by every map.
  explicit Ifs(std::vector<Similitude> maps, std::optional<Box> declared_box = std::nullopt);

  std::size_t size() const { return maps_.size(); }
  std::size_t dimension() const { return maps_.front().dimension(); }
  const std::vector<Similitude>& maps() const { return maps_; }
  const Similitude& map(Letter i) const { return maps_.at(i); }

  bool is_homogeneous() const;
  /// Shared contraction ratio; throws PreconditionError if not homogeneous.
  const Rational& common_ratio() const;
  bool has_common_orth() const;

  /// phi_{w_1} o ... o phi_{w_n}; identity for the empty word.
  Similitude cylinder(const Word& w) const;
  /// Fixed point of each map, in map order. Every one lies in K.
  const std::vector<RationalVector>& fixed_points() const { return fixed_points_; }
  const Box& hull() const { return hull_; }
  const Box& base_box() const { return declared_box_ ? *declared_box_ : hull_; }
  const std::optional<Box>& declared_box() const { return declared_box_; }

  /// The system {phi_w : w in Lambda^p} in lexicographic word order. It has
  /// the same attractor; the base box carries over.
  Ifs power(std::size_t p) const;

 private:
  std::vector<Similitude> maps_;
  std::optional<Box> declared_box_;
  std::vector<RationalVector> fixed_points_;
  Box hull_;
};

/// True iff apply_box(phi_i, box) is contained in box for every map.
bool is_invariant_box(const Ifs& ifs, const Box& box);

/// Exact bounding box of the attractor of `maps`.
///
/// The support values h(+-e_j) satisfy a max-plus fixed-point system whose
/// transitions are given by the signed permutations; it is solved exactly by
/// policy iteration.
Box attractor_hull(const std::vector<Similitude>& maps);

/// The box used as the initial invariant set (see Ifs::base_box).
inline const Box& invariant_box(const Ifs& ifs) { return ifs.base_box(); }

}  // namespace ifsembed
