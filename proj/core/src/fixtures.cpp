#include "ifsembed/fixtures.hpp"

#include <algorithm>

#include "ifsembed/error.hpp"
#include "ifsembed/io.hpp"

namespace ifsembed::fixtures {

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

Similitude map1d(const Rational& ratio, int sign, const Rational& trans) {
  return Similitude(ratio, SignedPermutation({0}, {sign}), RationalVector{trans});
}

Similitude planar(int quarter_turns, const Rational& tx, const Rational& ty) {
  return Similitude(q(1, 6), SignedPermutation::rotation(quarter_turns), RationalVector{tx, ty});
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  auto add = [&](std::string name, Kind kind, std::string provenance, const io::json& doc) {
    out.push_back(Fixture{std::move(name), kind, std::move(provenance), doc.dump(2)});
  };
  add("broken-pair", Kind::kProblem,
      "Cantor maps paired with {-x/3+1/3, -x/3+2/3}, whose attractor hull is [1/8, 5/8]",
      io::to_json(broken_pair()));
  add("cantor", Kind::kIfs, "middle-thirds Cantor set", io::to_json(cantor()));
  add("cantor-map", Kind::kMap, "phi_1 o phi_2 for the Cantor IFS", io::to_json(cantor_map()));
  add("cantor-pair", Kind::kProblem, "Cantor maps and their reflections",
      io::to_json(cantor_pair()));
  add("example25", Kind::kIfs,
      "nine maps of ratio 1/6 with rotations by multiples of pi/2, invariant square [-3,3]^2",
      io::to_json(example25()));
  add("example25-map", Kind::kMap, "f(x) = x/6 + (15/8, -15/8), centred on Q",
      io::to_json(example25_map()));
  add("fifths-pair", Kind::kProblem, "{x/5, x/5+2/5, x/5+4/5} and its reflection",
      io::to_json(fifths_pair()));
  add("half-interval", Kind::kIfs, "{x/2, x/2+1/2}, attractor [0,1], no strong separation",
      io::to_json(half_interval()));
  add("near-touching", Kind::kIfs, "two maps of ratio 999/2000 leaving a gap of 1/1000",
      io::to_json(near_touching()));
  std::sort(out.begin(), out.end(),
            [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<Fixture>& all() {
  static const std::vector<Fixture> fixtures = build();
  return fixtures;
}

const Fixture& find(std::string_view name) {
  for (const auto& f : all()) {
    if (f.name == name) return f;
  }
  throw PreconditionError("unknown fixture '" + std::string(name) + "'");
}

Ifs example25() {
  // Quarter turns: R_{pi/2} = 1, R_pi = 2, R_{3pi/2} = 3.
  std::vector<Similitude> maps{
      planar(0, q(-15, 8), q(15, 8)), planar(0, q(-5, 2), q(-5, 4)),
      planar(3, q(-5, 4), q(-5, 4)),  planar(1, q(-5, 2), q(-5, 2)),
      planar(2, q(-5, 4), q(-5, 2)),  planar(0, q(5, 4), q(-5, 4)),
      planar(3, q(5, 2), q(-5, 4)),   planar(1, q(5, 4), q(-5, 2)),
      planar(2, q(5, 2), q(-5, 2)),
  };
  return Ifs(std::move(maps), Box(RationalVector{q(-3), q(-3)}, RationalVector{q(3), q(3)}));
}

Similitude example25_map() { return planar(0, q(15, 8), q(-15, 8)); }

Ifs cantor() { return Ifs({map1d(q(1, 3), 1, q(0)), map1d(q(1, 3), 1, q(2, 3))}); }

Similitude cantor_map() { return map1d(q(1, 9), 1, q(2, 9)); }

Ifs half_interval() { return Ifs({map1d(q(1, 2), 1, q(0)), map1d(q(1, 2), 1, q(1, 2))}); }

Ifs near_touching() {
  // Images [0, r] and [1 - r, 1] with 1 - 2r = 1/1000. The loose declared box
  // keeps shallow covers from seeing the gap.
  const Rational r = q(999, 2000);
  return Ifs({map1d(r, 1, q(0)), map1d(r, 1, q(1) - r)},
             Box(RationalVector{q(-1)}, RationalVector{q(2)}));
}

SymmetryProblem cantor_pair() {
  return SymmetryProblem{cantor(),
                         Ifs({map1d(q(1, 3), -1, q(1, 3)), map1d(q(1, 3), -1, q(1))})};
}

SymmetryProblem fifths_pair() {
  const Rational r = q(1, 5);
  return SymmetryProblem{
      Ifs({map1d(r, 1, q(0)), map1d(r, 1, q(2, 5)), map1d(r, 1, q(4, 5))}),
      Ifs({map1d(r, -1, q(1, 5)), map1d(r, -1, q(3, 5)), map1d(r, -1, q(1))})};
}

SymmetryProblem broken_pair() {
  return SymmetryProblem{cantor(),
                         Ifs({map1d(q(1, 3), -1, q(1, 3)), map1d(q(1, 3), -1, q(2, 3))})};
}

}  // namespace ifsembed::fixtures
