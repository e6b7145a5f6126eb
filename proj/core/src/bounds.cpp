#include "ifsembed/bounds.hpp"

#include <cmath>

#include "cell_search.hpp"
#include "ifsembed/error.hpp"

namespace ifsembed {

namespace {

std::size_t checked_count(std::size_t m, std::size_t exponent, std::size_t cap, const char* what) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    count *= m;
    if (count > cap) throw ResourceLimit(std::string(what) + " exceeds the configured cap");
  }
  return count;
}

// All cylinders of the given length in lexicographic order.
std::vector<std::pair<Word, Similitude>> cylinders(const Ifs& ifs, std::size_t length) {
  std::vector<std::pair<Word, Similitude>> level{{Word(), Similitude::identity(ifs.dimension())}};
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<std::pair<Word, Similitude>> next;
    next.reserve(level.size() * ifs.size());
    for (const auto& [w, s] : level) {
      for (Letter a = 0; a < ifs.size(); ++a) next.emplace_back(w.append(a), compose(s, ifs.map(a)));
    }
    level = std::move(next);
  }
  return level;
}

double log_of(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

std::vector<CoverEntry> cover(const Ifs& ifs, std::size_t depth, const SearchLimits& limits) {
  checked_count(ifs.size(), depth, limits.max_cover_entries, "cover");
  std::vector<CoverEntry> out;
  for (auto& [w, s] : cylinders(ifs, depth)) out.push_back(CoverEntry{w, s.apply_box(ifs.base_box())});
  return out;
}

std::vector<AttractorPoint> attractor_points(const Ifs& ifs, std::size_t depth,
                                             const SearchLimits& limits) {
  checked_count(ifs.size(), depth + 1, limits.max_cover_entries, "attractor point set");
  std::vector<AttractorPoint> out;
  for (auto& [w, s] : cylinders(ifs, depth)) {
    for (Letter i = 0; i < ifs.size(); ++i) {
      out.push_back(AttractorPoint{w, i, s(ifs.fixed_points()[i])});
    }
  }
  return out;
}

GapBounds cell_dist_bounds(const Ifs& ifs, const Word& u, const Word& v, std::size_t depth,
                           const SearchLimits& limits) {
  for (const Word& w : {u, v}) {
    for (Letter a : w.letters()) {
      if (a >= ifs.size()) throw PreconditionError("letter out of range");
    }
  }
  if (!u.incomparable_with(v)) return GapBounds{Rational(0), Rational(0), depth};
  std::vector<std::pair<detail::CellNode, detail::CellNode>> roots;
  roots.emplace_back(detail::make_node(ifs, u), detail::make_node(ifs, v));
  const auto r = detail::closest_pair_search(ifs, std::move(roots), depth, std::nullopt, limits);
  return GapBounds{r.lower, r.upper, depth};
}

namespace {

detail::ClosestSearchResult level_one_search(const Ifs& ifs, std::size_t depth,
                                             const SearchLimits& limits) {
  std::vector<detail::CellNode> cells;
  for (Letter i = 0; i < ifs.size(); ++i) cells.push_back(detail::make_node(ifs, Word({i})));
  std::vector<std::pair<detail::CellNode, detail::CellNode>> roots;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) roots.emplace_back(cells[i], cells[j]);
  }
  return detail::closest_pair_search(ifs, std::move(roots), depth, std::nullopt, limits);
}

}  // namespace

GapBounds min_gap(const Ifs& ifs, std::size_t depth, const SearchLimits& limits) {
  const auto r = level_one_search(ifs, depth, limits);
  return GapBounds{r.lower, r.upper, depth};
}

DiameterBounds diameter_bounds(const Ifs& ifs, std::size_t depth, const SearchLimits& limits) {
  const auto r = detail::farthest_pair_search(ifs, depth, limits);
  return DiameterBounds{r.lower, r.upper, depth};
}

SscResult check_ssc(const Ifs& ifs, std::size_t max_depth, const SearchLimits& limits) {
  GapBounds last;
  for (std::size_t depth = 0; depth <= max_depth; ++depth) {
    const auto r = level_one_search(ifs, depth, limits);
    if (r.coincident) {
      return SscViolated{SscWitness{r.best_a.word, r.best_a.fixed, r.best_b.word, r.best_b.fixed,
                                    r.best_a.point}};
    }
    last = GapBounds{r.lower, r.upper, depth};
    if (r.lower.sign() > 0) return SscCertified{last};
  }
  return SscUnknown{last};
}

bool verify_ssc_witness(const Ifs& ifs, const SscWitness& w) {
  if (w.word_a.empty() || w.word_b.empty() || w.word_a[0] == w.word_b[0]) return false;
  if (w.fixed_a >= ifs.size() || w.fixed_b >= ifs.size()) return false;
  const RationalVector pa = ifs.cylinder(w.word_a)(ifs.fixed_points()[w.fixed_a]);
  const RationalVector pb = ifs.cylinder(w.word_b)(ifs.fixed_points()[w.fixed_b]);
  return pa == pb && pa == w.point;
}

SymbolicDimension dimension(const Ifs& ifs) {
  const Rational& r = ifs.common_ratio();
  const double log_inv_r = log_of(r.denominator()) - log_of(r.numerator());
  const double approx = std::log(static_cast<double>(ifs.size())) / log_inv_r;
  return SymbolicDimension{ifs.size(), r, approx};
}

std::optional<Word> locate_point(const Ifs& ifs, const RationalVector& p, std::size_t level,
                                 std::size_t depth, const SearchLimits& limits) {
  if (p.dimension() != ifs.dimension()) throw DimensionMismatch("locate_point");
  detail::CellNode node = detail::make_node(ifs, Word());
  for (std::size_t l = 0; l < level; ++l) {
    std::vector<detail::CellNode> candidates;
    for (Letter a = 0; a < ifs.size(); ++a) {
      detail::CellNode c = detail::child_node(ifs, node, a);
      if (c.box.contains(p)) candidates.push_back(std::move(c));
    }
    if (candidates.size() > 1) {
      std::vector<detail::CellNode> surviving;
      for (auto& c : candidates) {
        const auto v = detail::point_cell_search(ifs, p, c, depth, limits);
        if (v.verdict != detail::PointCellVerdict::kSeparated) surviving.push_back(std::move(c));
      }
      candidates = std::move(surviving);
    }
    if (candidates.empty()) {
      throw PreconditionError("point " + p.str() + " is not in the attractor");
    }
    if (candidates.size() > 1) return std::nullopt;
    node = std::move(candidates.front());
  }
  return node.word;
}

}  // namespace ifsembed
