#include "cell_search.hpp"

#include <queue>

#include "ifsembed/error.hpp"

namespace ifsembed::detail {

CellNode make_node(const Ifs& ifs, const Word& w) {
  Similitude map = ifs.cylinder(w);
  Box box = map.apply_box(ifs.base_box());
  return CellNode{w, std::move(map), std::move(box)};
}

CellNode child_node(const Ifs& ifs, const CellNode& parent, Letter a) {
  Similitude map = compose(parent.map, ifs.map(a));
  Box box = map.apply_box(ifs.base_box());
  return CellNode{parent.word.append(a), std::move(map), std::move(box)};
}

namespace {

std::vector<RationalVector> representatives(const Ifs& ifs, const CellNode& node) {
  std::vector<RationalVector> out;
  out.reserve(ifs.size());
  for (const auto& x : ifs.fixed_points()) out.push_back(node.map(x));
  return out;
}

// Index of the representative closest to `target`.
std::size_t closest_to(const std::vector<RationalVector>& reps, const Box& target) {
  std::size_t best = 0;
  Rational best_d = squared_distance(reps[0], target);
  for (std::size_t i = 1; i < reps.size(); ++i) {
    Rational d = squared_distance(reps[i], target);
    if (d < best_d) {
      best_d = std::move(d);
      best = i;
    }
  }
  return best;
}

struct PairItem {
  Rational key;
  std::size_t level;
  CellNode a;
  CellNode b;
};

struct ClosestFirst {
  bool operator()(const PairItem& x, const PairItem& y) const {
    if (x.key != y.key) return y.key < x.key;
    if (x.level != y.level) return y.level < x.level;
    if (x.a.word != y.a.word) return y.a.word < x.a.word;
    return y.b.word < x.b.word;
  }
};

struct FarthestFirst {
  bool operator()(const PairItem& x, const PairItem& y) const {
    if (x.key != y.key) return x.key < y.key;
    if (x.level != y.level) return y.level < x.level;
    if (x.a.word != y.a.word) return y.a.word < x.a.word;
    return y.b.word < x.b.word;
  }
};

}  // namespace

ClosestSearchResult closest_pair_search(const Ifs& ifs,
                                        std::vector<std::pair<CellNode, CellNode>> roots,
                                        std::size_t depth,
                                        const std::optional<Rational>& stop_above,
                                        const SearchLimits& limits) {
  if (roots.empty()) throw PreconditionError("closest pair search without roots");
  std::priority_queue<PairItem, std::vector<PairItem>, ClosestFirst> heap;
  for (auto& [a, b] : roots) {
    Rational key = squared_distance(a.box, b.box);
    heap.push(PairItem{std::move(key), 0, std::move(a), std::move(b)});
  }

  ClosestSearchResult result;
  std::optional<Rational> upper;
  while (!heap.empty()) {
    PairItem item = heap.top();
    heap.pop();
    ++result.popped;

    const auto reps_a = representatives(ifs, item.a);
    const auto reps_b = representatives(ifs, item.b);
    const std::size_t ia = closest_to(reps_a, item.b.box);
    const std::size_t ib = closest_to(reps_b, Box(reps_a[ia], reps_a[ia]));
    Rational d = squared_distance(reps_a[ia], reps_b[ib]);
    if (!upper || d < *upper) {
      upper = d;
      result.best_a = PointRef{item.a.word, static_cast<Letter>(ia), reps_a[ia]};
      result.best_b = PointRef{item.b.word, static_cast<Letter>(ib), reps_b[ib]};
    }
    result.upper = *upper;

    if (upper->is_zero()) {
      result.coincident = true;
      result.lower = Rational(0);
      return result;
    }
    // The frontier minimum is a lower bound, so meeting the upper bound makes
    // both exact and further refinement cannot change them.
    if (item.level == depth || item.key == *upper) {
      result.lower = item.key;
      return result;
    }
    if (stop_above && *stop_above < item.key) {
      result.lower = item.key;
      result.stopped_early = true;
      return result;
    }
    if (result.popped >= limits.max_search_nodes) {
      result.lower = item.key;
      result.truncated = true;
      return result;
    }
    std::vector<CellNode> children_b;
    children_b.reserve(ifs.size());
    for (Letter j = 0; j < ifs.size(); ++j) children_b.push_back(child_node(ifs, item.b, j));
    for (Letter i = 0; i < ifs.size(); ++i) {
      CellNode ca = child_node(ifs, item.a, i);
      for (const CellNode& cb : children_b) {
        Rational key = squared_distance(ca.box, cb.box);
        // Pairs farther apart than a realised distance never become the minimum.
        if (*upper < key) continue;
        heap.push(PairItem{std::move(key), item.level + 1, ca, cb});
      }
    }
  }
  throw Error("closest pair search exhausted its queue");
}

FarthestSearchResult farthest_pair_search(const Ifs& ifs, std::size_t depth,
                                          const SearchLimits& limits) {
  std::priority_queue<PairItem, std::vector<PairItem>, FarthestFirst> heap;
  CellNode root = make_node(ifs, Word());
  Rational root_key = max_squared_distance(root.box, root.box);
  heap.push(PairItem{std::move(root_key), 0, root, root});

  FarthestSearchResult result;
  std::optional<Rational> lower;
  std::size_t popped = 0;
  while (!heap.empty()) {
    PairItem item = heap.top();
    heap.pop();
    ++popped;

    const auto reps_a = representatives(ifs, item.a);
    const auto reps_b = representatives(ifs, item.b);
    for (const auto& pa : reps_a) {
      for (const auto& pb : reps_b) {
        Rational d = squared_distance(pa, pb);
        if (!lower || *lower < d) lower = std::move(d);
      }
    }
    result.lower = *lower;

    if (item.level == depth || item.key == *lower || popped >= limits.max_search_nodes) {
      result.upper = item.key;
      result.truncated = item.level != depth && item.key != *lower;
      return result;
    }
    const bool same = item.a.word == item.b.word;
    std::vector<CellNode> children_b;
    children_b.reserve(ifs.size());
    for (Letter j = 0; j < ifs.size(); ++j) children_b.push_back(child_node(ifs, item.b, j));
    for (Letter i = 0; i < ifs.size(); ++i) {
      CellNode ca = child_node(ifs, item.a, i);
      for (Letter j = same ? i : 0; j < ifs.size(); ++j) {
        Rational key = max_squared_distance(ca.box, children_b[j].box);
        if (key < *lower) continue;
        heap.push(PairItem{std::move(key), item.level + 1, ca, children_b[j]});
      }
    }
  }
  throw Error("farthest pair search exhausted its queue");
}

PointCellResult point_cell_search(const Ifs& ifs, const RationalVector& p, const CellNode& cell,
                                  std::size_t depth, const SearchLimits& limits) {
  struct Item {
    Rational key;
    std::size_t level;
    CellNode node;
  };
  struct Cmp {
    bool operator()(const Item& x, const Item& y) const {
      if (x.key != y.key) return y.key < x.key;
      if (x.level != y.level) return y.level < x.level;
      return y.node.word < x.node.word;
    }
  };
  std::priority_queue<Item, std::vector<Item>, Cmp> heap;
  heap.push(Item{squared_distance(p, cell.box), 0, cell});
  std::size_t popped = 0;
  while (!heap.empty()) {
    Item item = heap.top();
    heap.pop();
    ++popped;
    if (item.key.sign() > 0) return PointCellResult{PointCellVerdict::kSeparated, item.key};
    for (const auto& x : ifs.fixed_points()) {
      if (item.node.map(x) == p) return PointCellResult{PointCellVerdict::kContains, Rational(0)};
    }
    if (item.level == depth || popped >= limits.max_search_nodes) break;
    for (Letter a = 0; a < ifs.size(); ++a) {
      CellNode child = child_node(ifs, item.node, a);
      Rational key = squared_distance(p, child.box);
      heap.push(Item{std::move(key), item.level + 1, std::move(child)});
    }
  }
  return PointCellResult{PointCellVerdict::kUndecided, Rational(0)};
}

}  // namespace ifsembed::detail
