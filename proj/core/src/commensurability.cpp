#include "ifsembed/commensurability.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "ifsembed/error.hpp"

namespace ifsembed {

namespace {

// Refines `values` (all > 1) into pairwise coprime factors such that every
// input is a product of powers of them.
std::vector<mpz_class> coprime_base(std::vector<mpz_class> values) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t i = 0; i < values.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < values.size() && !changed; ++j) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), values[i].get_mpz_t(), values[j].get_mpz_t());
        if (g == 1) continue;
        const mpz_class a = values[i] / g;
        const mpz_class b = values[j] / g;
        values.erase(values.begin() + static_cast<std::ptrdiff_t>(j));
        values.erase(values.begin() + static_cast<std::ptrdiff_t>(i));
        for (const mpz_class& v : {a, b, g}) {
          if (v > 1) values.push_back(v);
        }
        changed = true;
      }
    }
  }
  return values;
}

long valuation(mpz_class& n, const mpz_class& base) {
  long e = 0;
  while (mpz_divisible_p(n.get_mpz_t(), base.get_mpz_t()) != 0) {
    n /= base;
    ++e;
  }
  return e;
}

std::vector<long> exponents(const Rational& q, const std::vector<mpz_class>& base) {
  mpz_class num = q.numerator();
  mpz_class den = q.denominator();
  std::vector<long> out;
  out.reserve(base.size());
  for (const mpz_class& b : base) out.push_back(valuation(num, b) - valuation(den, b));
  if (num != 1 || den != 1) throw Error("coprime base does not factor its inputs");
  return out;
}

}  // namespace

std::optional<PowerRelation> log_commensurability(const Rational& r, const Rational& r_f) {
  for (const Rational* q : {&r, &r_f}) {
    if (q->sign() <= 0 || !(*q < Rational(1))) {
      throw PreconditionError("commensurability needs ratios in (0, 1)");
    }
  }
  std::vector<mpz_class> seeds;
  for (const Rational* q : {&r, &r_f}) {
    if (q->numerator() > 1) seeds.push_back(q->numerator());
    if (q->denominator() > 1) seeds.push_back(q->denominator());
  }
  const std::vector<mpz_class> base = coprime_base(std::move(seeds));
  const std::vector<long> e_r = exponents(r, base);
  const std::vector<long> e_f = exponents(r_f, base);

  // Want k * e_f == p * e_r. Both vectors are non-zero since neither ratio is 1.
  std::size_t pivot = 0;
  while (e_r[pivot] == 0) ++pivot;
  if (e_f[pivot] == 0) return std::nullopt;
  long p = e_f[pivot];
  long k = e_r[pivot];
  if (k < 0) {
    k = -k;
    p = -p;
  }
  if (p <= 0) return std::nullopt;
  const long g = std::gcd(k, p);
  k /= g;
  p /= g;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (k * e_f[i] != p * e_r[i]) return std::nullopt;
  }
  return PowerRelation{k, p};
}

}  // namespace ifsembed
