#include <doctest.h>

#include <algorithm>

#include "ifsembed/bounds.hpp"
#include "ifsembed/error.hpp"
#include "ifsembed/fixtures.hpp"
#include "ifsembed/symmetry1d.hpp"
#include "oracles.hpp"

using namespace ifsembed;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

Similitude pos(Rational r, Rational a) { return Similitude::scaling(r, RationalVector{a}); }
Similitude neg(Rational r, Rational b) {
  return Similitude(r, SignedPermutation::negation(1), RationalVector{b});
}

// x -> s x + t applied as a change of coordinates: h o phi o h^{-1}.
Ifs conjugate(const Ifs& ifs, const Rational& s, const Rational& t) {
  const Similitude h = Similitude::scaling(s, RationalVector{t});
  std::vector<Similitude> maps;
  for (const auto& m : ifs.maps()) maps.push_back(compose(h, compose(m, h.inverse())));
  return Ifs(maps);
}

// A symmetric problem in normalised coordinates: translations 0 = a_1 <
// ... chosen on a grid of step r, mirrored about (1 - r) / 2, with
// psi_j(x) = -r x + a_j + r.
SymmetryProblem random_symmetric(oracle::Gen& gen) {
  const long den = gen.integer(3, 9);
  const Rational r(1, den);
  std::vector<long> slots{0, den - 1};
  for (long s = 2; s < den - 2; s += 2) {
    if (gen.integer(0, 1) == 1 && s <= den - 1 - s - 2) {
      slots.push_back(s);
      if (den - 1 - s != s) slots.push_back(den - 1 - s);
    }
  }
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
  std::vector<Similitude> phi;
  std::vector<Similitude> psi;
  for (long s : slots) {
    phi.push_back(pos(r, Rational(s, den)));
    psi.push_back(neg(r, Rational(s, den) + r));
  }
  return SymmetryProblem{Ifs(phi), Ifs(psi)};
}

bool inside_cover(const Ifs& ifs, const RationalVector& p, std::size_t depth) {
  const auto boxes = cover(ifs, depth);
  return std::any_of(boxes.begin(), boxes.end(),
                     [&](const CoverEntry& e) { return e.box.contains(p); });
}

}  // namespace

TEST_CASE("normalize_hull examples") {
  const auto cantor = normalize_hull(fixtures::cantor());
  CHECK(cantor.left == q(0));
  CHECK(cantor.right == q(1));
  CHECK(cantor.normalized.maps() == fixtures::cantor().maps());

  const auto shifted = normalize_hull(Ifs({pos(q(1, 3), q(1)), pos(q(1, 3), q(5, 3))}));
  CHECK(shifted.left == q(3, 2));
  CHECK(shifted.right == q(5, 2));
  CHECK(shifted.normalized.maps() == fixtures::cantor().maps());

  const auto reflected = normalize_hull(Ifs({neg(q(1, 3), q(1, 3)), neg(q(1, 3), q(1))}));
  CHECK(reflected.left == q(0));
  CHECK(reflected.right == q(1));

  CHECK_THROWS_AS(normalize_hull(fixtures::example25()), PreconditionError);
}

TEST_CASE("property: hull agrees with the fixed-point oracle and normalises to [0,1]") {
  oracle::Gen gen(1111);
  for (int trial = 0; trial < 300; ++trial) {
    const Ifs ifs = gen.ifs(1);
    const auto [lo, hi] = oracle::hull_1d(ifs.maps());
    if (lo == hi) continue;
    const auto h = normalize_hull(ifs);
    CHECK(h.left == lo);
    CHECK(h.right == hi);
    CHECK(ifs.hull() == Box(RationalVector{lo}, RationalVector{hi}));
    const auto again = normalize_hull(h.normalized);
    CHECK(again.left == q(0));
    CHECK(again.right == q(1));

    // Endpoints are approached by exact points within one depth-D cell.
    const std::size_t depth = 3;
    Rational rmax(0);
    for (const auto& m : ifs.maps()) rmax = std::max(rmax, m.ratio());
    const Rational slack = rmax.pow(depth) * (hi - lo);
    Rational min_pt = hi;
    Rational max_pt = lo;
    for (const auto& p : attractor_points(ifs, depth)) {
      min_pt = std::min(min_pt, p.point[0]);
      max_pt = std::max(max_pt, p.point[0]);
    }
    CHECK(lo <= min_pt);
    CHECK(min_pt - lo <= slack);
    CHECK(max_pt <= hi);
    CHECK(hi - max_pt <= slack);
  }
}

TEST_CASE("Cantor pair is symmetric with c = -1") {
  const auto outcome = symmetry_decision(fixtures::cantor_pair(), EmbeddingBudget{});
  REQUIRE(std::holds_alternative<SymmetryResult>(outcome));
  const auto& res = std::get<SymmetryResult>(outcome);
  CHECK(res.c == q(-1));
  REQUIRE(res.endpoints.size() == 2);
  CHECK(res.endpoints[0].a == q(0));
  CHECK(res.endpoints[1].a == q(2, 3));
  for (const auto& row : res.endpoints) CHECK(row.a == row.a_prime);
  CHECK(res.reflection == neg(q(1), q(1)));
  const auto problem = fixtures::cantor_pair();
  for (const auto& [i, j] : res.reflection_pairs) {
    CHECK(compose(res.reflection, problem.phi.map(i)) == problem.psi.map(j));
  }
  CHECK(verify_certificate(res.reflection_certificate, problem.phi));
  CHECK(verify_certificate(res.same_attractor, problem.phi));
  CHECK(res.same_attractor.generators.size() >= 2);
}

TEST_CASE("three-map pair of ratio 1/5") {
  const auto outcome = symmetry_decision(fixtures::fifths_pair(), EmbeddingBudget{});
  REQUIRE(std::holds_alternative<SymmetryResult>(outcome));
  const auto& res = std::get<SymmetryResult>(outcome);
  CHECK(res.c == q(-1));
  std::vector<Rational> primes;
  for (const auto& row : res.endpoints) primes.push_back(row.a_prime);
  CHECK(primes == std::vector<Rational>{q(0), q(2, 5), q(4, 5)});
}

TEST_CASE("broken pair is refuted at the hull check") {
  const auto outcome = symmetry_decision(fixtures::broken_pair(), EmbeddingBudget{});
  REQUIRE(std::holds_alternative<CounterevidenceReport>(outcome));
  const auto& rep = std::get<CounterevidenceReport>(outcome);
  CHECK(rep.failed_check == "hull");
  CHECK(rep.passed_checks == std::vector<std::string>{"count", "ssc-phi", "ssc-psi"});
  const auto psi_hull = normalize_hull(fixtures::broken_pair().psi);
  CHECK(psi_hull.left == q(1, 8));
  CHECK(psi_hull.right == q(5, 8));
}

TEST_CASE("count mismatch, zero budget and invalid problems") {
  const SymmetryProblem three{fixtures::cantor(),
                              Ifs({neg(q(1, 3), q(1, 3)), neg(q(1, 3), q(2, 3)),
                                   neg(q(1, 3), q(1))})};
  CHECK(same_attractor_check(three, EmbeddingBudget{}).status == SameAttractor::kRefuted);
  const auto outcome = symmetry_decision(three, EmbeddingBudget{});
  REQUIRE(std::holds_alternative<CounterevidenceReport>(outcome));
  CHECK(std::get<CounterevidenceReport>(outcome).failed_check == "count");
  CHECK(std::get<CounterevidenceReport>(outcome).passed_checks.empty());

  const auto pair = fixtures::cantor_pair();
  CHECK(same_attractor_check(pair, EmbeddingBudget{0, 8}).status == SameAttractor::kUnknown);
  CHECK(std::holds_alternative<SymmetryUnknown>(symmetry_decision(pair, EmbeddingBudget{0, 8})));
  CHECK(same_attractor_check(pair, EmbeddingBudget{}).status == SameAttractor::kCertified);

  CHECK_THROWS_AS(validate(SymmetryProblem{pair.psi, pair.phi}), PreconditionError);
  CHECK_THROWS_AS(validate(SymmetryProblem{pair.phi, fixtures::fifths_pair().psi}),
                  PreconditionError);
}

TEST_CASE("property: symmetric systems in any affine frame give c = -(A + B)") {
  oracle::Gen gen(1212);
  for (int trial = 0; trial < 40; ++trial) {
    const SymmetryProblem base = random_symmetric(gen);
    const Rational s = gen.ratio(5) * Rational(gen.integer(1, 4));
    const Rational t = gen.rational(9, 4);
    const SymmetryProblem problem{conjugate(base.phi, s, t), conjugate(base.psi, s, t)};
    const auto outcome = symmetry_decision(problem, EmbeddingBudget{});
    REQUIRE(std::holds_alternative<SymmetryResult>(outcome));
    const auto& res = std::get<SymmetryResult>(outcome);
    CHECK(res.hull_left == t);
    CHECK(res.hull_right == s + t);
    CHECK(res.c == -(s + t + t));
    CHECK(verify_certificate(res.reflection_certificate, problem.phi));
    // -x - c lies in every cover of S for sampled x in S.
    for (const auto& p : attractor_points(problem.phi, 2)) {
      CHECK(inside_cover(problem.phi, RationalVector{-p.point[0] - res.c}, 3));
    }
  }
}

TEST_CASE("property: translations are never certified as self-embeddings") {
  oracle::Gen gen(1313);
  for (int trial = 0; trial < 100; ++trial) {
    const Ifs ifs = gen.ifs(1);
    Rational t = gen.rational(5, 6);
    if (t.is_zero()) t = q(1, 7);
    const Similitude shift = Similitude::scaling(q(1), RationalVector{t});
    CHECK_FALSE(certify_embedding(shift, ifs, {}, EmbeddingBudget{4, 4}).has_value());
  }
}
