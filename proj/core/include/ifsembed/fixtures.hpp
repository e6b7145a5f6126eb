#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ifsembed/ifs.hpp"
#include "ifsembed/symmetry1d.hpp"

namespace ifsembed::fixtures {

enum class Kind { kIfs, kMap, kProblem };

struct Fixture {
  std::string name;
  Kind kind;
  std::string provenance;
  std::string document;  // JSON text in the file formats of ifsembed::io
};

/// Every bundled fixture, sorted by name.
const std::vector<Fixture>& all();

/// Throws PreconditionError for an unknown name.
const Fixture& find(std::string_view name);

/// The nine-map planar IFS with ratio 1/6 whose self-embedding
/// f(x) = x/6 + (15/8, -15/8) has an image that is not relatively open.
/// Declares the invariant square [-3, 3]^2.
Ifs example25();
Similitude example25_map();

Ifs cantor();                  // {x/3, x/3 + 2/3}
Similitude cantor_map();       // phi_1 o phi_2 = x/9 + 2/9
Ifs half_interval();           // {x/2, x/2 + 1/2}
Ifs near_touching();           // gap exactly 1/1000
SymmetryProblem cantor_pair();
SymmetryProblem fifths_pair();
SymmetryProblem broken_pair();

}  // namespace ifsembed::fixtures
