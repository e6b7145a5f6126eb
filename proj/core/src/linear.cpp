#include <algorithm>
#include <numeric>

#include "ifsembed/box.hpp"
#include "ifsembed/error.hpp"
#include "ifsembed/signed_permutation.hpp"
#include "ifsembed/similitude.hpp"

namespace ifsembed {

SignedPermutation::SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.empty()) throw PreconditionError("signed permutation of dimension zero");
  if (perm_.size() != signs_.size()) {
    throw DimensionMismatch("signed permutation: perm and signs differ in length");
  }
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] >= perm_.size() || seen[perm_[i]]) {
      throw PreconditionError("signed permutation: perm is not a bijection");
    }
    seen[perm_[i]] = true;
    if (signs_[i] != 1 && signs_[i] != -1) {
      throw PreconditionError("signed permutation: signs must be +1 or -1");
    }
  }
}

SignedPermutation SignedPermutation::identity(std::size_t dim) {
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return SignedPermutation(std::move(perm), std::vector<int>(dim, 1));
}

SignedPermutation SignedPermutation::rotation(int quarter_turns) {
  switch (((quarter_turns % 4) + 4) % 4) {
    case 0: return identity(2);
    case 1: return SignedPermutation({1, 0}, {-1, 1});
    case 2: return SignedPermutation({0, 1}, {-1, -1});
    default: return SignedPermutation({1, 0}, {1, -1});
  }
}

SignedPermutation SignedPermutation::negation(std::size_t dim) {
  auto out = identity(dim);
  std::fill(out.signs_.begin(), out.signs_.end(), -1);
  return out;
}

RationalVector SignedPermutation::apply(const RationalVector& x) const {
  if (x.dimension() != dimension()) throw DimensionMismatch("signed permutation apply");
  RationalVector out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    out[i] = signs_[i] < 0 ? -x[perm_[i]] : x[perm_[i]];
  }
  return out;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& rhs) const {
  if (rhs.dimension() != dimension()) throw DimensionMismatch("signed permutation compose");
  SignedPermutation out = *this;
  for (std::size_t i = 0; i < dimension(); ++i) {
    out.perm_[i] = rhs.perm_[perm_[i]];
    out.signs_[i] = signs_[i] * rhs.signs_[perm_[i]];
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out = *this;
  for (std::size_t i = 0; i < dimension(); ++i) {
    out.perm_[perm_[i]] = i;
    out.signs_[perm_[i]] = signs_[i];
  }
  return out;
}

SignedPermutation SignedPermutation::power(unsigned long k) const {
  SignedPermutation result = identity(dimension());
  SignedPermutation base = *this;
  while (k) {
    if (k & 1UL) result = result.compose(base);
    base = base.compose(base);
    k >>= 1U;
  }
  return result;
}

bool SignedPermutation::is_identity() const {
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (perm_[i] != i || signs_[i] != 1) return false;
  }
  return true;
}

unsigned long SignedPermutation::order() const {
  unsigned long k = 1;
  SignedPermutation acc = *this;
  while (!acc.is_identity()) {
    acc = acc.compose(*this);
    ++k;
  }
  return k;
}

std::string SignedPermutation::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (i) out += ' ';
    out += signs_[i] < 0 ? '-' : '+';
    out += std::to_string(perm_[i]);
  }
  return out + "]";
}

Box::Box(RationalVector lower, RationalVector upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.dimension() != upper_.dimension()) throw DimensionMismatch("box corners");
  for (std::size_t j = 0; j < lower_.dimension(); ++j) {
    if (upper_[j] < lower_[j]) throw PreconditionError("box with lower > upper");
  }
}

bool Box::contains(const RationalVector& p) const {
  if (p.dimension() != dimension()) throw DimensionMismatch("box contains point");
  for (std::size_t j = 0; j < dimension(); ++j) {
    if (p[j] < lower_[j] || upper_[j] < p[j]) return false;
  }
  return true;
}

bool Box::contains(const Box& inner) const {
  if (inner.dimension() != dimension()) throw DimensionMismatch("box contains box");
  for (std::size_t j = 0; j < dimension(); ++j) {
    if (inner.lower_[j] < lower_[j] || upper_[j] < inner.upper_[j]) return false;
  }
  return true;
}

Rational Box::squared_diameter() const { return squared_distance(lower_, upper_); }

RationalVector Box::center() const { return Rational(1, 2) * (lower_ + upper_); }

std::string Box::str() const {
  std::string out;
  for (std::size_t j = 0; j < dimension(); ++j) {
    if (j) out += "x";
    out += "[" + lower_[j].str() + "," + upper_[j].str() + "]";
  }
  return out;
}

Box bounding_box(const std::vector<RationalVector>& points) {
  if (points.empty()) throw PreconditionError("bounding box of no points");
  RationalVector lo = points.front();
  RationalVector hi = points.front();
  for (const auto& p : points) {
    if (p.dimension() != lo.dimension()) throw DimensionMismatch("bounding box");
    for (std::size_t j = 0; j < p.dimension(); ++j) {
      if (p[j] < lo[j]) lo[j] = p[j];
      if (hi[j] < p[j]) hi[j] = p[j];
    }
  }
  return Box(std::move(lo), std::move(hi));
}

Rational squared_distance(const Box& a, const Box& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("box distance");
  Rational sum;
  for (std::size_t j = 0; j < a.dimension(); ++j) {
    if (a.upper()[j] < b.lower()[j]) {
      const Rational gap = b.lower()[j] - a.upper()[j];
      sum += gap * gap;
    } else if (b.upper()[j] < a.lower()[j]) {
      const Rational gap = a.lower()[j] - b.upper()[j];
      sum += gap * gap;
    }
  }
  return sum;
}

Rational max_squared_distance(const Box& a, const Box& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("box distance");
  Rational sum;
  for (std::size_t j = 0; j < a.dimension(); ++j) {
    const Rational span = max(a.upper()[j] - b.lower()[j], b.upper()[j] - a.lower()[j]);
    sum += span * span;
  }
  return sum;
}

Rational squared_distance(const RationalVector& p, const Box& b) {
  if (p.dimension() != b.dimension()) throw DimensionMismatch("point-box distance");
  Rational sum;
  for (std::size_t j = 0; j < p.dimension(); ++j) {
    if (p[j] < b.lower()[j]) {
      const Rational gap = b.lower()[j] - p[j];
      sum += gap * gap;
    } else if (b.upper()[j] < p[j]) {
      const Rational gap = p[j] - b.upper()[j];
      sum += gap * gap;
    }
  }
  return sum;
}

RationalVector solve_linear(std::vector<std::vector<Rational>> a, RationalVector b) {
  const std::size_t n = b.dimension();
  if (a.size() != n) throw DimensionMismatch("linear system");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw PreconditionError("singular linear system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace ifsembed
