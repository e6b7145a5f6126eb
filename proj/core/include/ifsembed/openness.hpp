#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ifsembed/chains.hpp"
#include "ifsembed/commensurability.hpp"
#include "ifsembed/embedding.hpp"

namespace ifsembed {

/// f^k(K) written as a union of level-`level` cells of the powered system
/// Psi = {phi_w : |w| = power}. `words` are spelled over the base alphabet,
/// so each has level * power letters.
struct CellUnion {
  std::size_t level = 0;
  std::size_t power = 1;
  std::vector<Word> words;  // sorted, pairwise distinct
  std::string source;
};

/// One step of a chain orbit: F(E_step) lies in psi_letter(E_{step+1}).
struct OrbitStep {
  std::size_t chain = 0;
  Letter letter = 0;  // Psi letter
  std::size_t next_chain = 0;
};

/// Iterates the chain map from `start` until a chain repeats: E_s == E_t
/// with 1 <= s < t.
struct ChainOrbit {
  std::size_t start = 0;
  std::vector<std::size_t> chains;  // E_0, E_1, ..., E_t
  std::size_t s = 0;
  std::size_t t = 0;
};

/// How F o psi_w was matched with the cell psi_{L_w}.
struct CellCheck {
  Word w;       // Psi word of length n - 1
  Word target;  // Psi word L_w of length n
  bool exact = true;  // F o psi_w == psi_{L_w}; otherwise certified via an isometry
};

struct OpennessCertificate {
  PowerRelation ratio_relation;  // minimal r_f^k0 = r^p0
  PowerRelation relation;        // also O_f^k = O^p
  std::size_t psi_maps = 0;
  ChainStructure chains;
  std::vector<OrbitStep> steps;  // one per chain
  std::vector<ChainOrbit> orbits;
  std::vector<CellCheck> checks;
  CellUnion cells;
};

enum class OpennessFailure {
  kNotHomogeneousOrthogonal,
  kNotSeparated,
  kInvalidEvidence,
  kInconsistent,
  kUnknown,
};

std::string to_string(OpennessFailure kind);

struct OpennessError {
  OpennessFailure kind = OpennessFailure::kUnknown;
  std::string detail;
};

using OpennessOutcome = std::variant<OpennessCertificate, OpennessError>;

struct OpennessOptions {
  std::size_t depth = 6;
  EmbeddingBudget budget;
  SearchLimits limits;
};

/// Decides relative openness of f(K) for a homogeneous IFS whose orthogonal
/// part is common to the level-1 cells meeting f(K). `evidence` must be a
/// valid certificate having f among its generators.
OpennessOutcome openness_decision(const Similitude& f, const Ifs& ifs,
                                  const EmbeddingCertificate& evidence,
                                  const OpennessOptions& options = {});

}  // namespace ifsembed
