#include <doctest.h>

#include <algorithm>

#include "ifsembed/bounds.hpp"
#include "ifsembed/commensurability.hpp"
#include "ifsembed/embedding.hpp"
#include "ifsembed/error.hpp"
#include "ifsembed/fixtures.hpp"
#include "ifsembed/openness.hpp"
#include "oracles.hpp"

using namespace ifsembed;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

// Necessary condition for g(K) subset K: images of exact attractor points
// land inside the depth-D cover.
bool sampled_inside(const Similitude& g, const Ifs& ifs, std::size_t depth) {
  const auto boxes = cover(ifs, depth);
  for (const auto& pt : attractor_points(ifs, depth)) {
    const RationalVector image = g(pt.point);
    const bool inside = std::any_of(boxes.begin(), boxes.end(),
                                    [&](const CoverEntry& e) { return e.box.contains(image); });
    if (!inside) return false;
  }
  return true;
}

std::vector<std::string> spelled(const std::vector<Word>& words, std::size_t m) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.str(m));
  return out;
}

OpennessCertificate certificate_of(const OpennessOutcome& outcome) {
  if (const auto* err = std::get_if<OpennessError>(&outcome)) {
    FAIL("openness failed: " << to_string(err->kind) << ": " << err->detail);
  }
  return std::get<OpennessCertificate>(outcome);
}

}  // namespace

TEST_CASE("log commensurability examples") {
  CHECK(log_commensurability(q(1, 9), q(1, 27)) == PowerRelation{2, 3});
  CHECK(log_commensurability(q(2, 7), q(2, 7)) == PowerRelation{1, 1});
  CHECK_FALSE(log_commensurability(q(1, 2), q(1, 3)).has_value());
  CHECK(log_commensurability(q(4, 9), q(8, 27)) == PowerRelation{2, 3});
  CHECK_FALSE(log_commensurability(q(2, 9), q(4, 27)).has_value());
  CHECK_THROWS_AS(log_commensurability(q(1), q(1, 2)), PreconditionError);
  CHECK_THROWS_AS(log_commensurability(q(1, 2), q(0)), PreconditionError);
}

TEST_CASE("property: log commensurability agrees with brute force") {
  oracle::Gen gen(505);
  auto fraction = [&] {
    const long den = gen.integer(2, 100);
    return q(gen.integer(1, den - 1), den);
  };
  std::size_t commensurable = 0;
  for (int trial = 0; trial < 600; ++trial) {
    Rational r;
    Rational rf;
    if (trial % 2 == 0) {
      r = fraction();
      rf = fraction();
    } else {
      // Powers of a common base keep numerators and denominators <= 100.
      const long den = gen.integer(2, 4);
      const Rational base = q(gen.integer(1, den - 1), den);
      r = base.pow(gen.integer(1, 3));
      rf = base.pow(gen.integer(1, 3));
    }
    const auto fast = log_commensurability(r, rf);
    const auto slow = oracle::brute_commensurability(r, rf);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      ++commensurable;
      CHECK(fast->k == slow->first);
      CHECK(fast->p == slow->second);
      CHECK(rf.pow(fast->k) == r.pow(fast->p));
    }
  }
  CHECK(commensurable >= 250);
}

TEST_CASE("relation search") {
  const Ifs ex = fixtures::example25();
  const Similitude f = fixtures::example25_map();
  const auto found = relation_search(f, ex, 1, 1);
  REQUIRE(found.has_value());
  CHECK(found->k == 1);
  CHECK(found->i.str(9) == "2");
  CHECK(found->j.str(9) == "87");
  CHECK(compose(f, ex.map(1)) == ex.cylinder(Word::parse("87", 9)));

  const Ifs cantor = fixtures::cantor();
  const auto cyl = relation_search(cantor.cylinder(Word::parse("21", 2)), cantor, 2, 2);
  REQUIRE(cyl.has_value());
  CHECK(cyl->k == 1);
  CHECK(cyl->i.str(2) == "1");
  CHECK(cyl->j.str(2) == "211");

  CHECK_FALSE(relation_search(f, ex, 0, 4).has_value());
  CHECK_FALSE(relation_search(f, ex, 3, 0).has_value());
}

TEST_CASE("example25 embedding certificate") {
  const Ifs ex = fixtures::example25();
  const Similitude f = fixtures::example25_map();
  const auto cert = certify_embedding(f, ex, {}, EmbeddingBudget{});
  REQUIRE(cert.has_value());
  REQUIRE(cert->generators.size() == 1);
  CHECK(cert->generators[0] == f);
  REQUIRE(cert->relations.size() == 9);
  CHECK(cert->relations[0].u.str(9) == "6");
  CHECK(cert->relations[0].target ==
        RelationTarget{RelationTarget::Kind::kGenerator, 0});
  CHECK(cert->relations[1].u.str(9) == "87");
  for (std::size_t i = 1; i < 9; ++i) {
    CHECK(cert->relations[i].target.kind == RelationTarget::Kind::kIdentity);
  }
  CHECK(verify_certificate(*cert, ex));
  CHECK(sampled_inside(f, ex, 2));
  CHECK(touched_letters(*cert, ex, 0) == std::set<Letter>{5, 7, 8});
  CHECK(find_generator(*cert, f) == std::optional<std::size_t>(0));
  CHECK_FALSE(find_generator(*cert, ex.map(0)).has_value());
}

TEST_CASE("cylinder embeddings and unrolled prefixes") {
  const Ifs cantor = fixtures::cantor();
  const Word w = Word::parse("12", 2);
  const auto cert = certify_embedding(cantor.cylinder(w), cantor, {}, EmbeddingBudget{});
  REQUIRE(cert.has_value());
  REQUIRE(cert->generators.size() == 1);
  REQUIRE(cert->relations.size() == 2);
  for (Letter a = 0; a < 2; ++a) {
    CHECK(cert->relations[a].u == w.append(a));
    CHECK(cert->relations[a].target.kind == RelationTarget::Kind::kIdentity);
  }
  CHECK(spelled(unroll_prefixes(*cert, cantor, 0, 2), 2) == std::vector<std::string>{"12"});
  CHECK(spelled(unroll_prefixes(*cert, cantor, 0, 3), 2) ==
        std::vector<std::string>{"121", "122"});
  const auto prefixes = unroll_prefixes(*cert, cantor, 0, 2);
  CHECK(prefixes_avoid(prefixes, Word::parse("11", 2)));
  CHECK(prefixes_avoid(prefixes, Word::parse("2", 2)));
  CHECK_FALSE(prefixes_avoid(prefixes, Word::parse("1", 2)));
  CHECK_FALSE(prefixes_avoid(prefixes, Word::parse("121", 2)));

  // f o phi_1 = phi_6 o f unrolls into an infinite descent along 6...6
  // that stops at the requested level.
  const Ifs ex = fixtures::example25();
  const auto ex_cert = certify_embedding(fixtures::example25_map(), ex, {}, EmbeddingBudget{});
  REQUIRE(ex_cert.has_value());
  const auto ex_prefixes = unroll_prefixes(*ex_cert, ex, 0, 2);
  for (const auto& p : ex_prefixes) CHECK(p.size() == 2);
  CHECK(std::find(ex_prefixes.begin(), ex_prefixes.end(), Word::parse("66", 9)) !=
        ex_prefixes.end());
  CHECK(prefixes_avoid(ex_prefixes, Word::parse("1", 9)));
}

TEST_CASE("non-embeddings are never certified") {
  const Ifs cantor = fixtures::cantor();
  const Similitude shifted = Similitude::scaling(q(1, 3), RationalVector{q(5)});
  CHECK_FALSE(certify_embedding(shifted, cantor, {}, EmbeddingBudget{}).has_value());
  // Lands inside the hull but in the middle gap.
  const Similitude gap = Similitude::scaling(q(1, 9), RationalVector{q(4, 9)});
  CHECK_FALSE(certify_embedding(gap, cantor, {}, EmbeddingBudget{4, 4}).has_value());
  // A zero generator budget cannot even hold f.
  CHECK_FALSE(
      certify_embedding(fixtures::cantor_map(), cantor, {}, EmbeddingBudget{0, 4}).has_value());
}

TEST_CASE("tampered certificates fail verification") {
  const Ifs ex = fixtures::example25();
  const auto cert = certify_embedding(fixtures::example25_map(), ex, {}, EmbeddingBudget{});
  REQUIRE(cert.has_value());

  auto wrong_word = *cert;
  wrong_word.relations[1].u = Word::parse("86", 9);
  CHECK_FALSE(verify_certificate(wrong_word, ex));

  auto missing = *cert;
  missing.relations.pop_back();
  CHECK_FALSE(verify_certificate(missing, ex));

  auto wrong_target = *cert;
  wrong_target.relations[0].target = RelationTarget{};
  CHECK_FALSE(verify_certificate(wrong_target, ex));

  auto dangling = *cert;
  dangling.relations[0].target = RelationTarget{RelationTarget::Kind::kGenerator, 3};
  CHECK_FALSE(verify_certificate(dangling, ex));

  auto moved = *cert;
  moved.generators[0] = compose(Similitude::scaling(q(1), RationalVector{q(1, 2), q(0)}),
                                moved.generators[0]);
  CHECK_FALSE(verify_certificate(moved, ex));
}

TEST_CASE("property: certificates for random cylinders and composites are sound") {
  oracle::Gen gen(606);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(1, 2));
    const Ifs ifs = gen.separated_common_orth(d);
    std::vector<Letter> letters;
    const long len = gen.integer(1, 3);
    for (long i = 0; i < len; ++i) {
      letters.push_back(static_cast<Letter>(gen.integer(0, static_cast<long>(ifs.size()) - 1)));
    }
    const Similitude f = ifs.cylinder(Word(letters));
    const auto cert = certify_embedding(f, ifs, {}, EmbeddingBudget{});
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(*cert, ifs));
    for (const auto& g : cert->generators) CHECK(sampled_inside(g, ifs, 2));
  }
}

TEST_CASE("openness on the Cantor set") {
  const Ifs cantor = fixtures::cantor();
  const Similitude f = fixtures::cantor_map();
  const auto evidence = certify_embedding(f, cantor, {}, EmbeddingBudget{});
  REQUIRE(evidence.has_value());
  const auto cert = certificate_of(openness_decision(f, cantor, *evidence));
  CHECK(cert.ratio_relation == PowerRelation{1, 2});
  CHECK(cert.relation == PowerRelation{1, 2});
  CHECK(cert.psi_maps == 4);
  CHECK(cert.chains.n == 2);
  REQUIRE(cert.chains.chains.size() == 2);
  CHECK(cert.cells.level == 2);
  CHECK(cert.cells.power == 2);
  CHECK(spelled(cert.cells.words, 2) ==
        std::vector<std::string>{"1211", "1212", "1221", "1222"});
  REQUIRE(cert.steps.size() == 2);
  for (std::size_t c = 0; c < 2; ++c) {
    CHECK(cert.steps[c].chain == c);
    CHECK(cert.steps[c].next_chain == c);
    // Psi letter 12 is index 1 in the powered alphabet 11, 12, 21, 22.
    CHECK(cert.steps[c].letter == 1);
  }
  for (const auto& o : cert.orbits) {
    CHECK(o.s >= 1);
    CHECK(o.s < o.t);
    CHECK(o.chains[o.s] == o.chains[o.t]);
  }
  for (const auto& check : cert.checks) CHECK(check.exact);
}

TEST_CASE("openness of a single cell on random separated systems") {
  oracle::Gen gen(808);
  for (int trial = 0; trial < 25; ++trial) {
    const Ifs ifs = gen.separated_common_orth(static_cast<std::size_t>(gen.integer(1, 2)));
    const Letter i = static_cast<Letter>(gen.integer(0, static_cast<long>(ifs.size()) - 1));
    const Similitude f = ifs.map(i);
    const auto evidence = certify_embedding(f, ifs, {}, EmbeddingBudget{});
    REQUIRE(evidence.has_value());
    const auto cert = certificate_of(openness_decision(f, ifs, *evidence));
    CHECK(cert.relation == PowerRelation{1, 1});
    const std::size_t n = cert.chains.n;
    std::vector<Word> expected;
    for (const Word& w : all_words(ifs.size(), n - 1)) expected.push_back(Word({i}).concat(w));
    std::sort(expected.begin(), expected.end());
    CHECK(cert.cells.words == expected);
  }
}

TEST_CASE("property: output cells are distinct and count m^(p(n-1))") {
  oracle::Gen gen(909);
  for (int trial = 0; trial < 20; ++trial) {
    const Ifs ifs = gen.separated_common_orth(static_cast<std::size_t>(gen.integer(1, 2)));
    std::vector<Letter> letters;
    const long len = gen.integer(1, 2);
    for (long j = 0; j < len; ++j) {
      letters.push_back(static_cast<Letter>(gen.integer(0, static_cast<long>(ifs.size()) - 1)));
    }
    const Word w(letters);
    const Similitude f = ifs.cylinder(w);
    const auto evidence = certify_embedding(f, ifs, {}, EmbeddingBudget{});
    REQUIRE(evidence.has_value());
    const auto cert = certificate_of(openness_decision(f, ifs, *evidence));
    const std::size_t p = static_cast<std::size_t>(cert.relation.p);
    std::size_t expected_count = 1;
    for (std::size_t j = 0; j < p * (cert.chains.n - 1); ++j) expected_count *= ifs.size();
    CHECK(cert.cells.words.size() == expected_count);
    CHECK(std::adjacent_find(cert.cells.words.begin(), cert.cells.words.end()) ==
          cert.cells.words.end());
    // f^k = phi_w^k covers exactly the words extending w^k.
    Word wk;
    for (long j = 0; j < cert.relation.k; ++j) wk = wk.concat(w);
    for (const auto& cell : cert.cells.words) CHECK(cell.starts_with(wk));
  }
}

TEST_CASE("orbit steps do not depend on the sample point") {
  oracle::Gen gen(1010);
  for (int trial = 0; trial < 10; ++trial) {
    const Ifs ifs = gen.separated_common_orth(static_cast<std::size_t>(gen.integer(1, 2)));
    const Similitude f = ifs.cylinder(Word({0, static_cast<Letter>(ifs.size() - 1)}));
    const auto evidence = certify_embedding(f, ifs, {}, EmbeddingBudget{});
    REQUIRE(evidence.has_value());
    const auto cert = certificate_of(openness_decision(f, ifs, *evidence));
    const Ifs psi = ifs.power(static_cast<std::size_t>(cert.relation.p));
    const Similitude big_f = f.power(static_cast<unsigned long>(cert.relation.k));
    const std::size_t n = cert.chains.n;
    for (const auto& step : cert.steps) {
      for (const Word& w : cert.chains.chains[step.chain]) {
        for (const auto& x : psi.fixed_points()) {
          const auto located = locate_point(psi, big_f(psi.cylinder(w)(x)), n, 4);
          REQUIRE(located.has_value());
          CHECK((*located)[0] == step.letter);
          CHECK(cert.chains.chain_of(located->suffix_from(1)) == step.next_chain);
        }
      }
    }
  }
}

TEST_CASE("openness preconditions") {
  const Ifs ex = fixtures::example25();
  const Similitude f = fixtures::example25_map();
  const auto evidence = certify_embedding(f, ex, {}, EmbeddingBudget{});
  REQUIRE(evidence.has_value());
  const auto outcome = openness_decision(f, ex, *evidence);
  REQUIRE(std::holds_alternative<OpennessError>(outcome));
  CHECK(std::get<OpennessError>(outcome).kind == OpennessFailure::kNotHomogeneousOrthogonal);

  // Evidence that does not mention f is rejected.
  const Ifs cantor = fixtures::cantor();
  const auto other = certify_embedding(cantor.map(0), cantor, {}, EmbeddingBudget{});
  REQUIRE(other.has_value());
  const auto bad = openness_decision(fixtures::cantor_map(), cantor, *other);
  REQUIRE(std::holds_alternative<OpennessError>(bad));
  CHECK(std::get<OpennessError>(bad).kind == OpennessFailure::kInvalidEvidence);

  // Overlapping cells are refused before any chain work.
  const Ifs half = fixtures::half_interval();
  const auto half_cert = certify_embedding(half.map(0), half, {}, EmbeddingBudget{});
  REQUIRE(half_cert.has_value());
  const auto overlap = openness_decision(half.map(0), half, *half_cert);
  REQUIRE(std::holds_alternative<OpennessError>(overlap));
  CHECK(std::get<OpennessError>(overlap).kind == OpennessFailure::kNotSeparated);
}
