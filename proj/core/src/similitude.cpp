#include "ifsembed/similitude.hpp"

#include "ifsembed/error.hpp"

namespace ifsembed {

Similitude::Similitude(Rational ratio, SignedPermutation orth, RationalVector trans)
    : ratio_(std::move(ratio)), orth_(std::move(orth)), trans_(std::move(trans)) {
  if (ratio_.sign() <= 0) throw PreconditionError("similitude ratio must be positive");
  if (orth_.dimension() != trans_.dimension()) {
    throw DimensionMismatch("similitude: orthogonal part and translation differ in dimension");
  }
}

Similitude Similitude::identity(std::size_t dim) {
  return Similitude(Rational(1), SignedPermutation::identity(dim), RationalVector(dim));
}

Similitude Similitude::scaling(Rational ratio, RationalVector trans) {
  const std::size_t dim = trans.dimension();
  return Similitude(std::move(ratio), SignedPermutation::identity(dim), std::move(trans));
}

bool Similitude::is_identity() const {
  return ratio_ == Rational(1) && orth_.is_identity() && trans_.is_zero();
}

RationalVector Similitude::apply(const RationalVector& p) const {
  if (p.dimension() != dimension()) throw DimensionMismatch("similitude apply");
  RationalVector out = orth_.apply(p);
  for (std::size_t i = 0; i < out.dimension(); ++i) {
    out[i] *= ratio_;
    out[i] += trans_[i];
  }
  return out;
}

Box Similitude::apply_box(const Box& b) const {
  if (b.dimension() != dimension()) throw DimensionMismatch("similitude apply_box");
  RationalVector lo(dimension());
  RationalVector hi(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    const std::size_t src = orth_.perm()[i];
    if (orth_.signs()[i] > 0) {
      lo[i] = ratio_ * b.lower()[src] + trans_[i];
      hi[i] = ratio_ * b.upper()[src] + trans_[i];
    } else {
      lo[i] = trans_[i] - ratio_ * b.upper()[src];
      hi[i] = trans_[i] - ratio_ * b.lower()[src];
    }
  }
  return Box(std::move(lo), std::move(hi));
}

RationalVector Similitude::fixed_point() const {
  if (!is_contracting()) throw PreconditionError("fixed point of a non-contracting similitude");
  const std::size_t d = dimension();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a[i][j] = Rational(i == j ? 1 : 0) - ratio_ * Rational(orth_.entry(i, j));
    }
  }
  return solve_linear(std::move(a), trans_);
}

Similitude Similitude::power(unsigned long k) const {
  Similitude result = identity(dimension());
  Similitude base = *this;
  while (k) {
    if (k & 1UL) result = compose(result, base);
    base = compose(base, base);
    k >>= 1U;
  }
  return result;
}

Similitude Similitude::inverse() const {
  const Rational inv_ratio = Rational(1) / ratio_;
  SignedPermutation inv_orth = orth_.inverse();
  RationalVector inv_trans = inv_orth.apply(trans_);
  inv_trans *= -inv_ratio;
  return Similitude(inv_ratio, std::move(inv_orth), std::move(inv_trans));
}

std::string Similitude::str() const {
  return "x -> " + ratio_.str() + "*" + orth_.str() + "x + " + trans_.str();
}

Similitude compose(const Similitude& outer, const Similitude& inner) {
  if (outer.dimension() != inner.dimension()) throw DimensionMismatch("similitude compose");
  RationalVector trans = outer.orth().apply(inner.trans());
  trans *= outer.ratio();
  trans += outer.trans();
  return Similitude(outer.ratio() * inner.ratio(), outer.orth().compose(inner.orth()),
                    std::move(trans));
}

}  // namespace ifsembed
