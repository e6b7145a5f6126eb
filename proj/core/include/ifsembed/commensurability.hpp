#pragma once

#include <optional>

#include "ifsembed/rational.hpp"

namespace ifsembed {

/// Positive exponents with r_f^k = r^p.
struct PowerRelation {
  long k = 1;
  long p = 1;
  friend bool operator==(const PowerRelation&, const PowerRelation&) = default;
};

/// Minimal (k, p) with r_f^k = r^p, or nullopt when log r_f / log r is
/// irrational. Both arguments must lie strictly between 0 and 1.
///
/// The four integers involved are refined into a pairwise coprime base, the
/// rationals are written as exponent vectors over it, and the vectors are
/// tested for positive proportionality.
std::optional<PowerRelation> log_commensurability(const Rational& r, const Rational& r_f);

}  // namespace ifsembed
