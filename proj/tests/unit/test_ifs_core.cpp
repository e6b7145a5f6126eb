#include <doctest.h>

#include <algorithm>

#include "ifsembed/bounds.hpp"
#include "ifsembed/error.hpp"
#include "ifsembed/figure.hpp"
#include "ifsembed/fixtures.hpp"
#include "oracles.hpp"

using namespace ifsembed;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }
RationalVector v1(Rational x) { return RationalVector{x}; }
RationalVector v2(Rational x, Rational y) { return RationalVector{x, y}; }
Box b1(Rational lo, Rational hi) { return Box(v1(lo), v1(hi)); }
Box b2(Rational x0, Rational y0, Rational x1, Rational y1) { return Box(v2(x0, y0), v2(x1, y1)); }

}  // namespace

TEST_CASE("IFS construction checks its inputs") {
  const auto half = Similitude::scaling(q(1, 2), v1(q(0)));
  CHECK_THROWS_AS(Ifs({half}), PreconditionError);
  CHECK_THROWS_AS(Ifs({half, Similitude::scaling(q(2), v1(q(0)))}), PreconditionError);
  CHECK_THROWS_AS(Ifs({half, half}, b1(q(1), q(2))), PreconditionError);
  CHECK_THROWS_AS(Ifs({half, Similitude::scaling(q(1, 2), v2(q(0), q(0)))}), DimensionMismatch);
}

TEST_CASE("cylinders") {
  const Ifs cantor = fixtures::cantor();
  CHECK(cantor.cylinder(Word::parse("12", 2)) == Similitude::scaling(q(1, 9), v1(q(2, 9))));
  CHECK(cantor.cylinder(Word::parse("2", 2)) == cantor.map(1));
  CHECK(cantor.cylinder(Word()).is_identity());
  CHECK_THROWS(cantor.cylinder(Word::parse("3", 3)));

  const Ifs ex = fixtures::example25();
  const Similitude c67 = ex.cylinder(Word::parse("67", 9));
  CHECK(c67.ratio() == q(1, 36));
  CHECK(c67.orth() == SignedPermutation::rotation(3));
  CHECK(c67.trans() == v2(q(1, 6) * q(5, 2) + q(5, 4), q(1, 6) * q(-5, 4) - q(5, 4)));
}

TEST_CASE("hull and invariant box") {
  const Ifs cantor = fixtures::cantor();
  CHECK(cantor.hull() == b1(q(0), q(1)));
  CHECK(is_invariant_box(cantor, b1(q(0), q(1))));
  CHECK(invariant_box(cantor) == b1(q(0), q(1)));

  const Ifs ex = fixtures::example25();
  CHECK(invariant_box(ex) == b2(q(-3), q(-3), q(3), q(3)));
  CHECK(is_invariant_box(ex, b2(q(-3), q(-3), q(3), q(3))));
  CHECK(is_invariant_box(ex, ex.hull()));
  CHECK(ex.hull().upper()[1] == q(9, 4));  // top of phi_1's copy
  CHECK(Box(v2(q(-3), q(-3)), v2(q(3), q(3))).contains(ex.hull()));
}

TEST_CASE("property: the exact hull is invariant and tight") {
  oracle::Gen gen(303);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(1, 3));
    const Ifs ifs = gen.ifs(d);
    const Box& h = ifs.hull();
    CHECK(is_invariant_box(ifs, h));
    for (const auto& p : attractor_points(ifs, 2)) CHECK(h.contains(p.point));
    if (d == 1) {
      const auto [lo, hi] = oracle::hull_1d(ifs.maps());
      CHECK(h.lower()[0] == lo);
      CHECK(h.upper()[0] == hi);
    }
  }
}

TEST_CASE("covers") {
  const Ifs cantor = fixtures::cantor();
  const auto c1 = cover(cantor, 1);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].word.str(2) == "1");
  CHECK(c1[0].box == b1(q(0), q(1, 3)));
  CHECK(c1[1].box == b1(q(2, 3), q(1)));
  const auto c0 = cover(cantor, 0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].word.empty());
  CHECK(c0[0].box == cantor.base_box());

  const auto ex = cover(fixtures::example25(), 1);
  REQUIRE(ex.size() == 9);
  CHECK(ex[1].box == b2(q(-3), q(-7, 4), q(-2), q(-3, 4)));
  SearchLimits tiny;
  tiny.max_cover_entries = 10;
  CHECK_THROWS_AS(cover(fixtures::example25(), 2, tiny), ResourceLimit);
}

TEST_CASE("attractor points") {
  const Ifs cantor = fixtures::cantor();
  auto values = [](const std::vector<AttractorPoint>& pts) {
    std::vector<Rational> out;
    for (const auto& p : pts) out.push_back(p.point[0]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  CHECK(values(attractor_points(cantor, 0)) == std::vector<Rational>{q(0), q(1)});
  CHECK(values(attractor_points(cantor, 1)) == std::vector<Rational>{q(0), q(1, 3), q(2, 3), q(1)});
  CHECK(attractor_points(cantor, 6).size() == 128);
  const auto ex = attractor_points(fixtures::example25(), 0);
  CHECK(ex[0].point == v2(q(-9, 4), q(9, 4)));
}

TEST_CASE("property: cover nesting and points inside covers") {
  oracle::Gen gen(404);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(1, 2));
    const Ifs ifs = gen.ifs(d);
    const auto parent = cover(ifs, 2);
    const auto child = cover(ifs, 3);
    for (const auto& c : child) {
      const auto it = std::find_if(parent.begin(), parent.end(),
                                   [&](const CoverEntry& p) { return c.word.starts_with(p.word); });
      REQUIRE(it != parent.end());
      CHECK(it->box.contains(c.box));
    }
    for (const auto& p : attractor_points(ifs, 2)) {
      for (std::size_t depth = 0; depth <= 2; ++depth) {
        CHECK(ifs.cylinder(p.word.prefix(depth)).apply_box(ifs.base_box()).contains(p.point));
      }
    }
  }
}

TEST_CASE("cell distance bounds") {
  const Ifs cantor = fixtures::cantor();
  const auto g = cell_dist_bounds(cantor, Word::parse("1", 2), Word::parse("2", 2), 1);
  CHECK(g.lower == q(1, 9));
  CHECK(g.upper == q(1, 9));
  CHECK(cell_dist_bounds(cantor, Word::parse("1", 2), Word::parse("1", 2), 3).lower == q(0));
  CHECK(cell_dist_bounds(cantor, Word::parse("1", 2), Word::parse("12", 2), 3).lower == q(0));

  const Ifs ex = fixtures::example25();
  const auto g23 = cell_dist_bounds(ex, Word::parse("2", 9), Word::parse("3", 9), 1);
  CHECK(q(1, 16) <= g23.lower);
  CHECK(g23.lower <= g23.upper);
  CHECK(oracle::box_gap2(ex.map(1).apply_box(ex.base_box()), ex.map(2).apply_box(ex.base_box())) ==
        q(1, 16));
}

TEST_CASE("property: gap bounds are monotone in depth and bracket the truth") {
  oracle::Gen gen(505);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(1, 2));
    const Ifs ifs = gen.ifs(d);
    const Word u({0});
    const Word v({1});
    GapBounds prev = cell_dist_bounds(ifs, u, v, 0);
    for (std::size_t depth = 1; depth <= 3; ++depth) {
      const GapBounds next = cell_dist_bounds(ifs, u, v, depth);
      CHECK(prev.lower <= next.lower);
      CHECK(next.upper <= prev.upper);
      CHECK(next.lower <= next.upper);
      prev = next;
    }
    // Any pair of exact points from the two cells is an upper bound.
    const auto pu = ifs.cylinder(u)(ifs.fixed_points()[0]);
    const auto pv = ifs.cylinder(v)(ifs.fixed_points()[1]);
    CHECK(prev.upper <= squared_distance(pu, pv));
  }
}

TEST_CASE("strong separation") {
  const auto ex = check_ssc(fixtures::example25(), 2);
  REQUIRE(std::holds_alternative<SscCertified>(ex));
  CHECK(q(1, 16) <= std::get<SscCertified>(ex).gap.lower);

  const auto cantor = check_ssc(fixtures::cantor(), 1);
  REQUIRE(std::holds_alternative<SscCertified>(cantor));
  CHECK(std::get<SscCertified>(cantor).gap.lower == q(1, 9));
  CHECK(std::get<SscCertified>(cantor).gap.upper == q(1, 9));

  const Ifs half = fixtures::half_interval();
  const auto hv = check_ssc(half, 3);
  REQUIRE(std::holds_alternative<SscViolated>(hv));
  const auto& w = std::get<SscViolated>(hv).witness;
  CHECK(w.point == v1(q(1, 2)));
  CHECK(verify_ssc_witness(half, w));
  SscWitness forged = w;
  forged.point = v1(q(1, 3));
  CHECK_FALSE(verify_ssc_witness(half, forged));

  CHECK(std::holds_alternative<SscUnknown>(check_ssc(fixtures::near_touching(), 1)));
}

TEST_CASE("min gap and diameter") {
  const auto cantor = fixtures::cantor();
  CHECK(min_gap(cantor, 1).lower == q(1, 9));
  const auto dc = diameter_bounds(cantor, 3);
  CHECK(dc.lower == q(1));
  CHECK(dc.upper == q(1));
  const auto de = diameter_bounds(fixtures::example25(), 0);
  CHECK(de.upper <= q(72));
  CHECK(de.lower <= de.upper);
  const auto de4 = diameter_bounds(fixtures::example25(), 4);
  CHECK(de.lower <= de4.lower);
  CHECK(de4.upper <= de.upper);
}

TEST_CASE("symbolic dimension") {
  const auto c = dimension(fixtures::cantor());
  CHECK(c.maps == 2);
  CHECK(c.ratio == q(1, 3));
  CHECK(c.approx == doctest::Approx(0.6309297536));
  CHECK(dimension(fixtures::example25()).approx == doctest::Approx(1.2262943855));
  CHECK(dimension(fixtures::half_interval()).approx == doctest::Approx(1.0));
  const Ifs mixed({Similitude::scaling(q(1, 2), v1(q(0))), Similitude::scaling(q(1, 3), v1(q(1)))});
  CHECK_THROWS_AS(dimension(mixed), PreconditionError);
}

TEST_CASE("point location") {
  const Ifs cantor = fixtures::cantor();
  CHECK(locate_point(cantor, v1(q(2, 3)), 1, 4)->str(2) == "2");
  CHECK(locate_point(cantor, v1(q(1)), 5, 4)->str(2) == "22222");
  CHECK_THROWS_AS(locate_point(cantor, v1(q(1, 2)), 1, 4), PreconditionError);
  const Ifs ex = fixtures::example25();
  CHECK(locate_point(ex, v2(q(3, 2), q(-3, 2)), 1, 4)->str(9) == "6");
}

TEST_CASE("property: locating phi_w(x_i) returns w") {
  oracle::Gen gen(606);
  int checked = 0;
  while (checked < 60) {
    const Ifs ifs = gen.separated_common_orth(static_cast<std::size_t>(gen.integer(1, 2)));
    for (const auto& p : attractor_points(ifs, 2)) {
      CHECK(locate_point(ifs, p.point, 2, 4) == std::optional<Word>(p.word));
    }
    ++checked;
  }
}

TEST_CASE("figures") {
  const Ifs ex = fixtures::example25();
  const std::string svg = export_figure(ex, 1, FigureStyle::kBoxes);
  CHECK(svg == export_figure(ex, 1, FigureStyle::kBoxes));
  auto count = [](const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(count(svg, "<rect data-word") == 9);
  CHECK(count(svg, "stroke-dasharray") == 1);
  CHECK(count(export_figure(ex, 0, FigureStyle::kBoxes), "<rect data-word") == 1);
  CHECK(count(export_figure(fixtures::cantor(), 6, FigureStyle::kPoints), "<circle") == 128);
  const Ifs cube({Similitude::scaling(q(1, 2), RationalVector{q(0), q(0), q(0)}),
                  Similitude::scaling(q(1, 2), RationalVector{q(1), q(0), q(0)})});
  CHECK_THROWS_AS(export_figure(cube, 1, FigureStyle::kBoxes), PreconditionError);
}
