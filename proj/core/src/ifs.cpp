#include "ifsembed/ifs.hpp"

#include "ifsembed/error.hpp"

namespace ifsembed {

namespace {

constexpr std::size_t kMaxPoweredMaps = std::size_t{1} << 16;

}  // namespace

Ifs::Ifs(std::vector<Similitude> maps, std::optional<Box> declared_box)
    : maps_(std::move(maps)), declared_box_(std::move(declared_box)) {
  if (maps_.size() < 2) throw PreconditionError("an IFS needs at least two maps");
  for (const auto& s : maps_) {
    if (s.dimension() != maps_.front().dimension()) throw DimensionMismatch("IFS maps differ in dimension");
    if (!s.is_contracting()) throw PreconditionError("IFS map is not contracting: " + s.str());
  }
  fixed_points_.reserve(maps_.size());
  for (const auto& s : maps_) fixed_points_.push_back(s.fixed_point());
  hull_ = attractor_hull(maps_);
  if (declared_box_) {
    if (declared_box_->dimension() != dimension()) throw DimensionMismatch("declared box dimension");
    if (!is_invariant_box(*this, *declared_box_)) {
      throw PreconditionError("declared box " + declared_box_->str() + " is not invariant");
    }
  }
}

bool Ifs::is_homogeneous() const {
  for (const auto& s : maps_) {
    if (s.ratio() != maps_.front().ratio()) return false;
  }
  return true;
}

const Rational& Ifs::common_ratio() const {
  if (!is_homogeneous()) throw PreconditionError("IFS is not homogeneous");
  return maps_.front().ratio();
}

bool Ifs::has_common_orth() const {
  for (const auto& s : maps_) {
    if (s.orth() != maps_.front().orth()) return false;
  }
  return true;
}

Similitude Ifs::cylinder(const Word& w) const {
  Similitude out = Similitude::identity(dimension());
  for (Letter a : w.letters()) {
    if (a >= maps_.size()) throw PreconditionError("letter out of range");
    out = compose(out, maps_[a]);
  }
  return out;
}

Ifs Ifs::power(std::size_t p) const {
  if (p == 0) throw PreconditionError("power of an IFS must be at least 1");
  std::size_t count = 1;
  for (std::size_t i = 0; i < p; ++i) {
    count *= size();
    if (count > kMaxPoweredMaps) throw ResourceLimit("powered IFS would have too many maps");
  }
  std::vector<Similitude> maps;
  maps.reserve(count);
  for (const auto& w : all_words(size(), p)) maps.push_back(cylinder(w));
  return Ifs(std::move(maps), base_box());
}

bool is_invariant_box(const Ifs& ifs, const Box& box) {
  for (const auto& s : ifs.maps()) {
    if (!box.contains(s.apply_box(box))) return false;
  }
  return true;
}

Box attractor_hull(const std::vector<Similitude>& maps) {
  const std::size_t d = maps.front().dimension();
  const std::size_t dirs = 2 * d;
  // Direction 2j is +e_j, 2j+1 is -e_j. For map i, the support value in
  // direction u is <u, a_i> + r_i * h(O_i^T u).
  auto successor = [&](std::size_t i, std::size_t u) {
    const std::size_t j = u / 2;
    const int sigma = (u % 2 == 0) ? 1 : -1;
    const std::size_t col = maps[i].orth().perm()[j];
    const int s = sigma * maps[i].orth().signs()[j];
    return 2 * col + (s > 0 ? 0 : 1);
  };
  auto offset = [&](std::size_t i, std::size_t u) {
    const Rational& a = maps[i].trans()[u / 2];
    return (u % 2 == 0) ? a : -a;
  };

  std::vector<std::size_t> policy(dirs, 0);
  std::vector<Rational> h(dirs);
  for (;;) {
    std::vector<std::vector<Rational>> a(dirs, std::vector<Rational>(dirs));
    RationalVector c(dirs);
    for (std::size_t u = 0; u < dirs; ++u) {
      const std::size_t i = policy[u];
      a[u][u] += Rational(1);
      a[u][successor(i, u)] -= maps[i].ratio();
      c[u] = offset(i, u);
    }
    const RationalVector sol = solve_linear(std::move(a), std::move(c));
    for (std::size_t u = 0; u < dirs; ++u) h[u] = sol[u];

    bool improved = false;
    for (std::size_t u = 0; u < dirs; ++u) {
      Rational best = h[u];
      for (std::size_t i = 0; i < maps.size(); ++i) {
        const Rational value = offset(i, u) + maps[i].ratio() * h[successor(i, u)];
        if (best < value) {
          best = value;
          policy[u] = i;
          improved = true;
        }
      }
    }
    if (!improved) break;
  }

  RationalVector lo(d);
  RationalVector hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    hi[j] = h[2 * j];
    lo[j] = -h[2 * j + 1];
  }
  return Box(std::move(lo), std::move(hi));
}

}  // namespace ifsembed
