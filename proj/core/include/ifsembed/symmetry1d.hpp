#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ifsembed/embedding.hpp"
#include "ifsembed/ifs.hpp"

namespace ifsembed {

/// Two 1D homogeneous systems with the same ratio r: phi_i(x) = r x + a_i and
/// psi_j(x) = -r x + b_j.
struct SymmetryProblem {
  Ifs phi;
  Ifs psi;
};

/// Throws PreconditionError unless both systems are 1D, share one ratio, and
/// phi preserves orientation while psi reverses it.
void validate(const SymmetryProblem& problem);

struct NormalizedHull {
  Rational left;   // A
  Rational right;  // B
  Ifs normalized;  // conjugated by x -> (x - A) / (B - A)
};

/// Exact convex hull [A, B] of a 1D attractor by case analysis over which
/// maps realise the minimum and maximum, plus the conjugated system whose
/// hull is [0, 1]. Throws PreconditionError for d != 1 or A == B.
NormalizedHull normalize_hull(const Ifs& ifs);

enum class SameAttractor { kCertified, kRefuted, kUnknown };

struct SameAttractorResult {
  SameAttractor status = SameAttractor::kUnknown;
  std::optional<EmbeddingCertificate> certificate;  // psi maps into K_phi
  std::string detail;
};

/// Certifies psi_j(K_phi) subset K_phi for every j at once. With m' == m and
/// equal ratios this forces the two attractors to coincide.
SameAttractorResult same_attractor_check(const SymmetryProblem& problem,
                                         const EmbeddingBudget& budget);

struct EndpointRow {
  Rational a;        // left end of phi_i([0,1]) after normalisation
  Rational a_prime;  // b_i - r
};

struct SymmetryResult {
  Rational c;  // -S = S + c
  Rational hull_left;
  Rational hull_right;
  std::vector<EndpointRow> endpoints;
  EmbeddingCertificate same_attractor;
  /// For each phi index i, the psi index j with g o phi_i == psi_j, where
  /// g(x) = -x + (A + B).
  std::vector<std::pair<Letter, Letter>> reflection_pairs;
  Similitude reflection;
  EmbeddingCertificate reflection_certificate;
};

/// A failed check under hypotheses that were themselves verified.
struct CounterevidenceReport {
  std::string failed_check;
  std::vector<std::string> passed_checks;
  std::string detail;
};

struct SymmetryUnknown {
  std::string detail;
};

using SymmetryOutcome = std::variant<SymmetryResult, CounterevidenceReport, SymmetryUnknown>;

SymmetryOutcome symmetry_decision(const SymmetryProblem& problem, const EmbeddingBudget& budget,
                                  std::size_t ssc_depth = 6);

}  // namespace ifsembed
