#include "ifsembed/chains.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cell_search.hpp"
#include "ifsembed/error.hpp"

namespace ifsembed {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t ChainStructure::chain_of(const Word& w) const {
  for (std::size_t c = 0; c < chains.size(); ++c) {
    if (std::binary_search(chains[c].begin(), chains[c].end(), w)) return c;
  }
  throw PreconditionError("word is not part of the chain structure");
}

std::optional<std::size_t> chain_level(const Ifs& ifs, std::size_t depth,
                                       const SearchLimits& limits) {
  const Rational r2 = ifs.common_ratio() * ifs.common_ratio();
  const GapBounds gap = min_gap(ifs, depth, limits);
  if (gap.lower.sign() <= 0) return std::nullopt;
  const DiameterBounds diam = diameter_bounds(ifs, depth, limits);
  Rational scaled = diam.upper * r2;
  std::size_t n = 1;
  while (!(scaled < gap.lower)) {
    scaled *= r2;
    ++n;
  }
  return n;
}

ChainStructure chain_decomposition(const Ifs& ifs, std::size_t n, std::size_t depth,
                                   const SearchLimits& limits) {
  if (n == 0) throw PreconditionError("chain level must be at least 1");
  ChainStructure cs;
  cs.n = n;
  cs.level = n - 1;
  cs.diameter = diameter_bounds(ifs, depth, limits);
  const Rational r2 = ifs.common_ratio() * ifs.common_ratio();
  cs.threshold = r2.pow(static_cast<long>(cs.level)) * cs.diameter.upper;

  std::size_t count = 1;
  for (std::size_t l = 0; l < cs.level; ++l) {
    count *= ifs.size();
    if (count > limits.max_cover_entries) throw ResourceLimit("too many chain words");
  }
  const std::vector<Word> words = all_words(ifs.size(), cs.level);
  std::vector<detail::CellNode> nodes;
  nodes.reserve(words.size());
  for (const Word& w : words) nodes.push_back(detail::make_node(ifs, w));

  DisjointSets sets(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      std::vector<std::pair<detail::CellNode, detail::CellNode>> roots{{nodes[i], nodes[j]}};
      const auto r = detail::closest_pair_search(ifs, std::move(roots), depth, cs.threshold, limits);
      PairCertificate cert{words[i], words[j], r.lower, r.upper, cs.threshold < r.lower};
      if (!cert.separated) {
        sets.unite(i, j);
        if (cs.threshold < r.upper) cs.flags.emplace_back(words[i], words[j]);
      }
      cs.certificates.push_back(std::move(cert));
    }
  }

  std::map<std::size_t, std::vector<Word>> groups;
  for (std::size_t i = 0; i < words.size(); ++i) groups[sets.find(i)].push_back(words[i]);
  for (auto& [root, members] : groups) cs.chains.push_back(std::move(members));
  std::sort(cs.chains.begin(), cs.chains.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cs;
}

bool verify_chain_separation(const ChainStructure& cs) {
  for (const auto& cert : cs.certificates) {
    if (cs.chain_of(cert.a) == cs.chain_of(cert.b)) continue;
    if (!(cs.threshold < cert.lower)) return false;
  }
  return true;
}

std::vector<OrderedChain> chains_ordered_1d(const ChainStructure& cs, const Ifs& ifs) {
  if (ifs.dimension() != 1) throw PreconditionError("chain ordering needs a 1D IFS");
  std::vector<OrderedChain> out;
  for (std::size_t c = 0; c < cs.chains.size(); ++c) {
    std::optional<OrderedChain> hull;
    for (const Word& w : cs.chains[c]) {
      const Box b = ifs.cylinder(w).apply_box(ifs.hull());
      if (!hull) {
        hull = OrderedChain{c, b.lower()[0], b.upper()[0]};
      } else {
        hull->left = min(hull->left, b.lower()[0]);
        hull->right = max(hull->right, b.upper()[0]);
      }
    }
    out.push_back(*hull);
  }
  std::sort(out.begin(), out.end(),
            [](const OrderedChain& a, const OrderedChain& b) { return a.left < b.left; });
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (!(out[k - 1].right < out[k].left)) throw Error("chain hulls overlap");
  }
  return out;
}

}  // namespace ifsembed
