#include "ifsembed/symmetry1d.hpp"

#include <algorithm>

#include "ifsembed/bounds.hpp"
#include "ifsembed/error.hpp"

namespace ifsembed {

namespace {

int orientation(const Similitude& s) { return s.orth().signs()[0]; }

// Lowest and highest point of phi([A, B]).
std::pair<Rational, Rational> image_interval(const Similitude& s, const Rational& a,
                                             const Rational& b) {
  const Rational fa = s.apply(RationalVector{a})[0];
  const Rational fb = s.apply(RationalVector{b})[0];
  return orientation(s) > 0 ? std::pair{fa, fb} : std::pair{fb, fa};
}

std::vector<Rational> sorted_translations(const Ifs& ifs) {
  std::vector<Rational> out;
  for (const auto& s : ifs.maps()) out.push_back(s.trans()[0]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void validate(const SymmetryProblem& problem) {
  if (problem.phi.dimension() != 1 || problem.psi.dimension() != 1) {
    throw PreconditionError("symmetry problems are one-dimensional");
  }
  if (!problem.phi.is_homogeneous() || !problem.psi.is_homogeneous() ||
      !(problem.phi.common_ratio() == problem.psi.common_ratio())) {
    throw PreconditionError("phi and psi must share a single contraction ratio");
  }
  for (const auto& s : problem.phi.maps()) {
    if (orientation(s) != 1) throw PreconditionError("every phi map must preserve orientation");
  }
  for (const auto& s : problem.psi.maps()) {
    if (orientation(s) != -1) throw PreconditionError("every psi map must reverse orientation");
  }
}

NormalizedHull normalize_hull(const Ifs& ifs) {
  if (ifs.dimension() != 1) throw PreconditionError("hull normalisation needs a 1D IFS");
  const auto& maps = ifs.maps();
  std::optional<std::pair<Rational, Rational>> hull;
  // Map i realises the minimum and map j the maximum. An orientation-
  // preserving map sends A to its lowest point, a reversing one sends B there.
  for (std::size_t i = 0; i < maps.size() && !hull; ++i) {
    for (std::size_t j = 0; j < maps.size() && !hull; ++j) {
      const Rational& ri = maps[i].ratio();
      const Rational& rj = maps[j].ratio();
      std::vector<std::vector<Rational>> m(2, std::vector<Rational>(2));
      if (orientation(maps[i]) > 0) {
        m[0] = {Rational(1) - ri, Rational(0)};
      } else {
        m[0] = {Rational(1), ri};
      }
      if (orientation(maps[j]) > 0) {
        m[1] = {Rational(0), Rational(1) - rj};
      } else {
        m[1] = {rj, Rational(1)};
      }
      RationalVector sol;
      try {
        sol = solve_linear(m, RationalVector{maps[i].trans()[0], maps[j].trans()[0]});
      } catch (const PreconditionError&) {
        continue;
      }
      const Rational& a = sol[0];
      const Rational& b = sol[1];
      if (b < a) continue;
      bool consistent = true;
      for (const auto& s : maps) {
        const auto [lo, hi] = image_interval(s, a, b);
        if (lo < a || b < hi) consistent = false;
      }
      if (consistent) hull = std::pair{a, b};
    }
  }
  if (!hull) throw Error("no consistent hull assignment");
  const auto& [a, b] = *hull;
  if (a == b) throw PreconditionError("degenerate hull: the attractor is a single point");
  const Rational width = b - a;
  const Similitude to_unit = Similitude::scaling(Rational(1) / width, RationalVector{-a / width});
  const Similitude from_unit = to_unit.inverse();
  std::vector<Similitude> conjugated;
  for (const auto& s : maps) conjugated.push_back(compose(to_unit, compose(s, from_unit)));
  return NormalizedHull{a, b, Ifs(std::move(conjugated))};
}

SameAttractorResult same_attractor_check(const SymmetryProblem& problem,
                                         const EmbeddingBudget& budget) {
  if (problem.phi.size() != problem.psi.size()) {
    return {SameAttractor::kRefuted, std::nullopt,
            "map counts differ (" + std::to_string(problem.phi.size()) + " vs " +
                std::to_string(problem.psi.size()) + ")"};
  }
  auto cert = certify_embeddings(problem.psi.maps(), problem.phi, {}, budget);
  if (!cert) return {SameAttractor::kUnknown, std::nullopt, "embedding budget exhausted"};
  return {SameAttractor::kCertified, std::move(cert), "every psi map embeds K_phi into itself"};
}

SymmetryOutcome symmetry_decision(const SymmetryProblem& problem, const EmbeddingBudget& budget,
                                  std::size_t ssc_depth) {
  validate(problem);
  std::vector<std::string> passed;
  auto counter = [&](std::string check, std::string detail) -> SymmetryOutcome {
    return CounterevidenceReport{std::move(check), passed, std::move(detail)};
  };

  if (problem.phi.size() != problem.psi.size()) {
    return counter("count", "m = " + std::to_string(problem.phi.size()) +
                                " but m' = " + std::to_string(problem.psi.size()));
  }
  passed.emplace_back("count");

  for (const auto& [name, ifs] : {std::pair<std::string, const Ifs*>{"phi", &problem.phi},
                                  std::pair<std::string, const Ifs*>{"psi", &problem.psi}}) {
    const SscResult ssc = check_ssc(*ifs, ssc_depth);
    if (std::holds_alternative<SscViolated>(ssc)) {
      return counter("ssc-" + name, name + " violates strong separation");
    }
    if (std::holds_alternative<SscUnknown>(ssc)) {
      return SymmetryUnknown{"strong separation of " + name + " not certified"};
    }
    passed.push_back("ssc-" + name);
  }

  const NormalizedHull hull_phi = normalize_hull(problem.phi);
  const NormalizedHull hull_psi = normalize_hull(problem.psi);
  if (!(hull_phi.left == hull_psi.left) || !(hull_phi.right == hull_psi.right)) {
    return counter("hull", "hull of phi is [" + hull_phi.left.str() + ", " +
                               hull_phi.right.str() + "] but hull of psi is [" +
                               hull_psi.left.str() + ", " + hull_psi.right.str() + "]");
  }
  passed.emplace_back("hull");

  SameAttractorResult same = same_attractor_check(problem, budget);
  if (same.status == SameAttractor::kUnknown) return SymmetryUnknown{same.detail};
  if (same.status == SameAttractor::kRefuted) return counter("same-attractor", same.detail);
  passed.emplace_back("same-attractor");

  const Rational& r = problem.phi.common_ratio();
  const std::vector<Rational> a = sorted_translations(hull_phi.normalized);
  const std::vector<Rational> b = sorted_translations(hull_psi.normalized);
  if (!a.front().is_zero()) return counter("a1", "a_1 = " + a.front().str() + " after normalisation");
  if (!(b.front() == r)) return counter("b1", "b_1 = " + b.front().str() + " but r = " + r.str());
  passed.emplace_back("a1-b1");

  SymmetryResult result;
  for (std::size_t i = 0; i < a.size(); ++i) {
    result.endpoints.push_back(EndpointRow{a[i], b[i] - r});
    if (!(b[i] - r == a[i])) {
      return counter("endpoints", "a'_" + std::to_string(i + 1) + " = " + (b[i] - r).str() +
                                      " differs from a_" + std::to_string(i + 1) + " = " +
                                      a[i].str());
    }
  }
  passed.emplace_back("endpoints");

  const Rational sum = hull_phi.left + hull_phi.right;
  result.c = -sum;
  result.hull_left = hull_phi.left;
  result.hull_right = hull_phi.right;
  result.same_attractor = std::move(*same.certificate);
  result.reflection = Similitude(Rational(1), SignedPermutation::negation(1), RationalVector{sum});
  for (Letter i = 0; i < problem.phi.size(); ++i) {
    const Similitude lhs = compose(result.reflection, problem.phi.map(i));
    std::optional<Letter> match;
    for (Letter j = 0; j < problem.psi.size() && !match; ++j) {
      if (lhs == problem.psi.map(j)) match = j;
    }
    if (!match) {
      return counter("reflection", "g o phi_" + std::to_string(i + 1) + " is not a psi map");
    }
    result.reflection_pairs.emplace_back(i, *match);
  }
  auto reflection = certify_embedding(result.reflection, problem.phi, problem.psi.maps(), budget);
  if (!reflection || !verify_certificate(*reflection, problem.phi)) {
    return SymmetryUnknown{"reflection certificate not found within budget"};
  }
  result.reflection_certificate = std::move(*reflection);
  return result;
}

}  // namespace ifsembed
