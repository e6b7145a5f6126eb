#pragma once

// Branch-and-bound over pairs of cylinder boxes. Every node is an exact
// cylinder phi_w together with the image of the base box, so any bound found
// is a certified statement about the attractor.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ifsembed/bounds.hpp"
#include "ifsembed/ifs.hpp"

namespace ifsembed::detail {

struct CellNode {
  Word word;
  Similitude map;
  Box box;
};

CellNode make_node(const Ifs& ifs, const Word& w);
CellNode child_node(const Ifs& ifs, const CellNode& parent, Letter a);

struct PointRef {
  Word word;
  Letter fixed = 0;
  RationalVector point;
};

struct ClosestSearchResult {
  Rational lower;
  Rational upper;
  PointRef best_a;
  PointRef best_b;
  bool coincident = false;    // an exact common point was found
  bool stopped_early = false; // lower exceeded the stop threshold
  bool truncated = false;     // node cap reached
  std::size_t popped = 0;
};

/// Best-first search for the least box distance among descendant pairs
/// `depth` levels below the roots. Pairs are popped in order of
/// (distance, level, words), which makes the popped sets nest as depth grows.
ClosestSearchResult closest_pair_search(const Ifs& ifs,
                                        std::vector<std::pair<CellNode, CellNode>> roots,
                                        std::size_t depth,
                                        const std::optional<Rational>& stop_above,
                                        const SearchLimits& limits);

struct FarthestSearchResult {
  Rational lower;
  Rational upper;
  bool truncated = false;
};

FarthestSearchResult farthest_pair_search(const Ifs& ifs, std::size_t depth,
                                          const SearchLimits& limits);

enum class PointCellVerdict { kSeparated, kContains, kUndecided };

struct PointCellResult {
  PointCellVerdict verdict = PointCellVerdict::kUndecided;
  Rational lower;
};

/// Decides whether p is at positive distance from the cell (kSeparated), is an
/// exact attractor point of it (kContains), or neither within the budget.
PointCellResult point_cell_search(const Ifs& ifs, const RationalVector& p, const CellNode& cell,
                                  std::size_t depth, const SearchLimits& limits);

}  // namespace ifsembed::detail
