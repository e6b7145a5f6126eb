#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ifsembed/box.hpp"
#include "ifsembed/ifs.hpp"
#include "ifsembed/rational.hpp"
#include "ifsembed/word.hpp"

namespace ifsembed {

/// Caps shared by the cover enumerations and the branch-and-bound searches.
struct SearchLimits {
  std::size_t max_cover_entries = std::size_t{1} << 22;
  std::size_t max_search_nodes = 4'000'000;
};

struct CoverEntry {
  Word word;
  Box box;
};

/// Depth-n cylinder cover {(w, phi_w(B)) : w in Lambda^n}, B the base box.
/// Throws ResourceLimit when m^n exceeds the cap.
std::vector<CoverEntry> cover(const Ifs& ifs, std::size_t depth, const SearchLimits& limits = {});

/// An exact point of K: cylinder(word) applied to the fixed point of map
/// `fixed_index`.
struct AttractorPoint {
  Word word;
  Letter fixed_index = 0;
  RationalVector point;
};

/// All m^(n+1) points phi_w(x_i) for |w| = depth, ordered by (w, i).
std::vector<AttractorPoint> attractor_points(const Ifs& ifs, std::size_t depth,
                                             const SearchLimits& limits = {});

/// Certified interval for a squared distance between two subsets of K.
struct GapBounds {
  Rational lower;
  Rational upper;
  std::size_t depth = 0;
};

/// Certified interval for the squared diameter of K.
struct DiameterBounds {
  Rational lower;
  Rational upper;
  std::size_t depth = 0;
};

/// Squared-distance bounds for dist(phi_u(K), phi_v(K)). The lower bound is
/// the least box distance over the depth-n sub-covers of the two cells, the
/// upper bound the least distance between exact attractor points found.
GapBounds cell_dist_bounds(const Ifs& ifs, const Word& u, const Word& v, std::size_t depth,
                           const SearchLimits& limits = {});

/// Bounds for delta^2 = min_{i != j} dist(phi_i(K), phi_j(K))^2.
GapBounds min_gap(const Ifs& ifs, std::size_t depth, const SearchLimits& limits = {});

/// Squared-diameter bounds: upper from depth-n cover boxes, lower from exact
/// attractor points.
DiameterBounds diameter_bounds(const Ifs& ifs, std::size_t depth, const SearchLimits& limits = {});

/// Two cylinder images of fixed points that coincide exactly:
/// phi_{word_a}(x_{fixed_a}) == phi_{word_b}(x_{fixed_b}) == point, with the
/// words starting in different letters.
struct SscWitness {
  Word word_a;
  Letter fixed_a = 0;
  Word word_b;
  Letter fixed_b = 0;
  RationalVector point;
};

struct SscCertified {
  GapBounds gap;
};
struct SscViolated {
  SscWitness witness;
};
struct SscUnknown {
  GapBounds last;
};
using SscResult = std::variant<SscCertified, SscViolated, SscUnknown>;

/// Tri-state strong separation check. Certified and Violated are sound;
/// Unknown means the depth budget ran out.
SscResult check_ssc(const Ifs& ifs, std::size_t max_depth, const SearchLimits& limits = {});

/// True iff `witness` is a genuine coincidence in `ifs`.
bool verify_ssc_witness(const Ifs& ifs, const SscWitness& witness);

/// Similarity dimension log m / log(1/r) of a homogeneous IFS, kept as the
/// exact pair (m, r); `approx` is for display only.
struct SymbolicDimension {
  std::size_t maps = 0;
  Rational ratio;
  double approx = 0.0;
};

/// Throws PreconditionError for a non-homogeneous IFS.
SymbolicDimension dimension(const Ifs& ifs);

/// Finds the unique w in Lambda^level with p in phi_w(K), for a point p known
/// to lie in K. Returns nullopt when the depth budget cannot separate the
/// candidate cells. Throws PreconditionError when every candidate is excluded,
/// which proves p is not in K.
std::optional<Word> locate_point(const Ifs& ifs, const RationalVector& p, std::size_t level,
                                 std::size_t depth, const SearchLimits& limits = {});

}  // namespace ifsembed
