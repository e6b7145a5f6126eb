#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "ifsembed/ifs.hpp"
#include "ifsembed/similitude.hpp"
#include "ifsembed/word.hpp"

namespace ifsembed {

/// f^k o phi_i == phi_j, checked as an exact identity.
struct RelationMatch {
  std::size_t k = 1;
  Word i;
  Word j;
};

/// Searches k = 1..max_power and words i of length 1..max_word_length (in
/// that order, lexicographically within a length) for an exact identity
/// f^k o phi_i = phi_j. Candidate words j are found by descending the cell
/// tree along hull containments, up to |i| + max_word_length letters.
std::optional<RelationMatch> relation_search(const Similitude& f, const Ifs& ifs,
                                             std::size_t max_power, std::size_t max_word_length);

/// What the right-hand map g' of a relation refers to.
struct RelationTarget {
  enum class Kind { kIdentity, kGenerator, kTrusted };
  Kind kind = Kind::kIdentity;
  std::size_t index = 0;
  friend bool operator==(const RelationTarget&, const RelationTarget&) = default;
};

/// generators[generator] o phi_letter == phi_u o target.
struct Relation {
  std::size_t generator = 0;
  Letter letter = 0;
  Word u;
  RelationTarget target;
};

/// A complete system of exact relations. Every generator g satisfies
/// g(K) subset K provided each trusted map does.
struct EmbeddingCertificate {
  std::vector<Similitude> generators;
  std::vector<Similitude> trusted;
  std::vector<Relation> relations;  // ordered by (generator, letter)
};

struct EmbeddingBudget {
  std::size_t max_generators = 16;
  std::size_t max_word_length = 8;
};

/// Builds a certificate whose first generators are `targets` (in order).
/// Returns nullopt when the budget is exhausted or a target visibly fails
/// to map the hull of K into itself. Never returns an unsound certificate.
std::optional<EmbeddingCertificate> certify_embeddings(const std::vector<Similitude>& targets,
                                                       const Ifs& ifs,
                                                       const std::vector<Similitude>& trusted,
                                                       const EmbeddingBudget& budget);

std::optional<EmbeddingCertificate> certify_embedding(const Similitude& f, const Ifs& ifs,
                                                      const std::vector<Similitude>& trusted,
                                                      const EmbeddingBudget& budget);

/// Completeness and exactness of every relation against `ifs`.
bool verify_certificate(const EmbeddingCertificate& cert, const Ifs& ifs);

/// Index of `g` among the generators, if present.
std::optional<std::size_t> find_generator(const EmbeddingCertificate& cert, const Similitude& g);

/// Level-1 letters whose cells meet generators[generator](K), derived from
/// the relations. Trusted targets count as meeting every cell.
std::set<Letter> touched_letters(const EmbeddingCertificate& cert, const Ifs& ifs,
                                 std::size_t generator);

/// Unrolls the relations of `generator` until every term is a cell of word
/// length >= level or an identity/trusted term. Each resulting prefix names a
/// set of words (all words extending it) that together cover g(K); prefixes
/// are truncated to `level` letters.
std::vector<Word> unroll_prefixes(const EmbeddingCertificate& cert, const Ifs& ifs,
                                  std::size_t generator, std::size_t level,
                                  std::size_t max_terms = std::size_t{1} << 20);

/// True iff no prefix is comparable with `cell`, so that under SSC the cell
/// is disjoint from the unrolled set.
bool prefixes_avoid(const std::vector<Word>& prefixes, const Word& cell);

}  // namespace ifsembed
