#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ifsembed/bounds.hpp"
#include "ifsembed/ifs.hpp"

namespace ifsembed {

/// Distance evidence for one unordered pair of level-(n-1) words.
struct PairCertificate {
  Word a;
  Word b;
  Rational lower;  // squared-distance lower bound
  Rational upper;  // squared-distance upper bound
  bool separated = false;  // lower > threshold
};

/// Partition of Lambda^(n-1) into threshold-connected chains.
///
/// Two words are adjacent unless their cells are certified to be more than
/// r^(n-1) * |K| apart, with |K| replaced by its certified upper bound. Pairs
/// whose upper bound exceeds the threshold but which could not be certified
/// separated are still treated as adjacent and listed in `flags`.
struct ChainStructure {
  std::size_t n = 0;
  std::size_t level = 0;  // n - 1, the word length
  Rational threshold;     // r^(2(n-1)) * diam^2 upper
  DiameterBounds diameter;
  std::vector<std::vector<Word>> chains;  // each sorted; ordered by least word
  std::vector<PairCertificate> certificates;
  std::vector<std::pair<Word, Word>> flags;

  /// Index of the chain holding `w`; throws PreconditionError if absent.
  std::size_t chain_of(const Word& w) const;
};

/// Smallest n >= 1 with r^(2n) * diam^2_upper < delta^2_lower, using bounds
/// computed at `depth`. Returns nullopt when the gap lower bound is still zero.
/// Throws PreconditionError for a non-homogeneous IFS.
std::optional<std::size_t> chain_level(const Ifs& ifs, std::size_t depth,
                                       const SearchLimits& limits = {});

/// Chains of level-(n-1) words, n >= 1.
ChainStructure chain_decomposition(const Ifs& ifs, std::size_t n, std::size_t depth,
                                   const SearchLimits& limits = {});

/// Re-checks the separation property from the stored certificates alone:
/// every cross-chain pair has a stored lower bound above the threshold.
bool verify_chain_separation(const ChainStructure& cs);

struct OrderedChain {
  std::size_t index = 0;  // into ChainStructure::chains
  Rational left;
  Rational right;
};

/// 1D chains sorted left to right by their exact hull intervals. Throws
/// PreconditionError for d != 1 and Error if two chain hulls overlap.
std::vector<OrderedChain> chains_ordered_1d(const ChainStructure& cs, const Ifs& ifs);

}  // namespace ifsembed
