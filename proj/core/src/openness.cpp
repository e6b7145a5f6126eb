#include "ifsembed/openness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ifsembed/error.hpp"

namespace ifsembed {

std::string to_string(OpennessFailure kind) {
  switch (kind) {
    case OpennessFailure::kNotHomogeneousOrthogonal:
      return "not-homogeneous-orthogonal";
    case OpennessFailure::kNotSeparated:
      return "not-separated";
    case OpennessFailure::kInvalidEvidence:
      return "invalid-evidence";
    case OpennessFailure::kInconsistent:
      return "inconsistent";
    case OpennessFailure::kUnknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

struct Failure {
  OpennessError error;
};

[[noreturn]] void fail(OpennessFailure kind, std::string detail) {
  throw Failure{OpennessError{kind, std::move(detail)}};
}

std::string letter_name(Letter a) { return std::to_string(a + 1); }

// The Psi word of length `level` whose cell holds F(q); q is an exact point of K.
Word locate_image(const Ifs& psi, const RationalVector& image, std::size_t level,
                  std::size_t depth, const OpennessOptions& options) {
  std::optional<Word> w;
  try {
    w = locate_point(psi, image, level, depth, options.limits);
  } catch (const PreconditionError&) {
    fail(OpennessFailure::kInconsistent,
         "image point " + image.str() + " is not in K although the evidence says f(K) is");
  }
  if (!w) fail(OpennessFailure::kUnknown, "could not locate " + image.str() + " at this depth");
  return *w;
}

std::vector<ChainOrbit> chain_orbits(const std::vector<OrbitStep>& steps) {
  std::vector<ChainOrbit> orbits;
  for (std::size_t c = 0; c < steps.size(); ++c) {
    ChainOrbit orbit;
    orbit.start = c;
    orbit.chains.push_back(c);
    while (true) {
      const std::size_t next = steps[orbit.chains.back()].next_chain;
      const auto it = std::find(orbit.chains.begin() + 1, orbit.chains.end(), next);
      const bool repeated = it != orbit.chains.end();
      const auto s = static_cast<std::size_t>(it - orbit.chains.begin());
      orbit.chains.push_back(next);
      if (repeated) {
        orbit.s = s;
        orbit.t = orbit.chains.size() - 1;
        break;
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

OpennessCertificate decide(const Similitude& f, const Ifs& ifs,
                           const EmbeddingCertificate& evidence, const OpennessOptions& options) {
  if (f.dimension() != ifs.dimension()) throw DimensionMismatch("openness_decision");
  if (!verify_certificate(evidence, ifs)) {
    fail(OpennessFailure::kInvalidEvidence, "the embedding certificate does not verify");
  }
  const auto generator = find_generator(evidence, f);
  if (!generator) fail(OpennessFailure::kInvalidEvidence, "f is not a generator of the certificate");
  if (!f.is_contracting()) fail(OpennessFailure::kInvalidEvidence, "f must be contracting");
  if (!ifs.is_homogeneous()) {
    fail(OpennessFailure::kNotHomogeneousOrthogonal, "the contraction ratios differ");
  }

  const std::set<Letter> touched = touched_letters(evidence, ifs, *generator);
  if (touched.empty()) fail(OpennessFailure::kInvalidEvidence, "f(K) meets no level-1 cell");
  const Letter first = *touched.begin();
  const SignedPermutation& orth = ifs.map(first).orth();
  for (Letter a : touched) {
    if (!(ifs.map(a).orth() == orth)) {
      fail(OpennessFailure::kNotHomogeneousOrthogonal,
           "f(K) meets cells " + letter_name(first) + " and " + letter_name(a) +
               " whose orthogonal parts differ (" + orth.str() + " vs " + ifs.map(a).orth().str() +
               "); relative openness can fail in this situation");
    }
  }

  const SscResult ssc = check_ssc(ifs, options.depth, options.limits);
  if (std::holds_alternative<SscViolated>(ssc)) {
    fail(OpennessFailure::kNotSeparated, "the IFS violates strong separation");
  }
  if (std::holds_alternative<SscUnknown>(ssc)) {
    fail(OpennessFailure::kUnknown, "strong separation not certified at this depth");
  }

  OpennessCertificate cert;
  const Rational& r = ifs.common_ratio();
  const auto rel0 = log_commensurability(r, f.ratio());
  if (!rel0) {
    fail(OpennessFailure::kInconsistent,
         "log r_f / log r is irrational, which cannot happen for a self-embedding");
  }
  cert.ratio_relation = *rel0;
  const unsigned long k0 = static_cast<unsigned long>(rel0->k);
  const unsigned long p0 = static_cast<unsigned long>(rel0->p);
  const unsigned long t_max =
      std::lcm(f.orth().power(k0).order(), orth.power(p0).order());
  unsigned long t = 1;
  while (!(f.orth().power(t * k0) == orth.power(t * p0))) ++t;
  if (t > t_max) throw Error("orthogonal alignment overran the group order");
  cert.relation = PowerRelation{static_cast<long>(t * k0), static_cast<long>(t * p0)};

  const std::size_t p = t * p0;
  const Ifs psi = ifs.power(p);
  const Similitude big_f = f.power(t * k0);
  cert.psi_maps = psi.size();
  // One level of Psi is p levels of the base system, so this keeps the
  // geometric resolution of the requested depth.
  const std::size_t psi_depth = (options.depth + p - 1) / p;

  const auto n = chain_level(psi, psi_depth, options.limits);
  if (!n) fail(OpennessFailure::kUnknown, "gap of the powered system not certified");
  cert.chains = chain_decomposition(psi, *n, psi_depth, options.limits);
  const ChainStructure& cs = cert.chains;
  const RationalVector& x0 = psi.fixed_points().front();

  for (std::size_t c = 0; c < cs.chains.size(); ++c) {
    const Word sample_word = cs.chains[c].front();
    const Word located = locate_image(psi, big_f(psi.cylinder(sample_word)(x0)),
                                      *n, psi_depth, options);
    const std::size_t next = cs.chain_of(located.suffix_from(1));
    cert.steps.push_back(OrbitStep{c, located[0], next});
    if (cs.chains[c].size() != cs.chains[next].size()) {
      fail(OpennessFailure::kInconsistent, "chain sizes differ along the orbit");
    }
  }

  for (std::size_t c = 0; c < cs.chains.size(); ++c) {
    const OrbitStep& step = cert.steps[c];
    for (const Word& w : cs.chains[c]) {
      const Similitude image = compose(big_f, psi.cylinder(w));
      const Word target = locate_image(psi, image(x0), *n, psi_depth, options);
      if (target[0] != step.letter || cs.chain_of(target.suffix_from(1)) != step.next_chain) {
        fail(OpennessFailure::kInconsistent,
             "a chain is not mapped into a single cell-chain pair");
      }
      const Similitude cell = psi.cylinder(target);
      CellCheck check{w, target, image == cell};
      if (!check.exact) {
        const Similitude h = compose(cell.inverse(), image);
        if (!h.is_isometry()) fail(OpennessFailure::kInconsistent, "cell scales disagree");
        if (!certify_embedding(h, ifs, {}, options.budget)) {
          fail(OpennessFailure::kUnknown, "could not certify the isometry for cell " +
                                              target.str(psi.size()));
        }
      }
      cert.cells.words.push_back(expand_power_word(target, ifs.size(), p));
      cert.checks.push_back(std::move(check));
    }
  }

  auto& words = cert.cells.words;
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end()) {
    fail(OpennessFailure::kInconsistent, "two cells of K map onto the same cell");
  }
  std::size_t expected = 1;
  for (std::size_t i = 0; i + 1 < *n; ++i) expected *= psi.size();
  if (words.size() != expected) {
    fail(OpennessFailure::kInconsistent, "cell count does not match the measure identity");
  }
  cert.cells.level = *n;
  cert.cells.power = p;
  std::ostringstream source;
  source << "f^" << cert.relation.k << "(K) for f = " << f.str();
  cert.cells.source = source.str();
  cert.orbits = chain_orbits(cert.steps);
  return cert;
}

}  // namespace

OpennessOutcome openness_decision(const Similitude& f, const Ifs& ifs,
                                  const EmbeddingCertificate& evidence,
                                  const OpennessOptions& options) {
  try {
    return decide(f, ifs, evidence, options);
  } catch (const Failure& failure) {
    return failure.error;
  } catch (const ResourceLimit& e) {
    return OpennessError{OpennessFailure::kUnknown, e.what()};
  }
}

}  // namespace ifsembed
