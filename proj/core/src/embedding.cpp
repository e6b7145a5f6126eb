#include "ifsembed/embedding.hpp"

#include <algorithm>
#include <map>

#include "ifsembed/error.hpp"

namespace ifsembed {

namespace {

constexpr std::size_t kMaxDescentNodes = 200'000;

struct DescentNode {
  Word u;
  Similitude rest;  // phi_u^{-1} o h
};

// Level-by-level walk down the cells phi_u(K) that can contain h(K), judged
// by exact hull containment. Because hull(phi_u(K)) = phi_u(hull K), any u
// with h(K) inside phi_u(K) is visited.
class CellDescent {
 public:
  explicit CellDescent(const Ifs& ifs) : ifs_(ifs) {
    for (const auto& phi : ifs.maps()) {
      inverses_.push_back(phi.inverse());
      images_.push_back(phi.apply_box(ifs.hull()));
    }
  }

  std::vector<DescentNode> children(const DescentNode& node) const {
    std::vector<DescentNode> out;
    const Box image = node.rest.apply_box(ifs_.hull());
    for (Letter a = 0; a < ifs_.size(); ++a) {
      if (images_[a].contains(image)) {
        out.push_back(DescentNode{node.u.append(a), compose(inverses_[a], node.rest)});
      }
    }
    return out;
  }

  // Visits levels 0..max_length in order; `visit` returns true to stop.
  // Returns the last non-empty level seen.
  template <typename Visit>
  std::vector<DescentNode> walk(const Similitude& h, std::size_t max_length, Visit&& visit) const {
    std::vector<DescentNode> level{DescentNode{Word(), h}};
    std::size_t total = 1;
    for (std::size_t depth = 0;; ++depth) {
      for (const DescentNode& node : level) {
        if (visit(node)) return {node};
      }
      if (depth == max_length) return level;
      std::vector<DescentNode> next;
      for (const DescentNode& node : level) {
        for (auto& child : children(node)) next.push_back(std::move(child));
      }
      total += next.size();
      if (next.empty() || total > kMaxDescentNodes) return level;
      level = std::move(next);
    }
  }

 private:
  const Ifs& ifs_;
  std::vector<Similitude> inverses_;
  std::vector<Box> images_;
};

std::optional<std::size_t> index_of(const std::vector<Similitude>& list, const Similitude& g) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == g) return i;
  }
  return std::nullopt;
}

const Similitude& target_map(const EmbeddingCertificate& cert, const RelationTarget& t,
                             const Similitude& identity) {
  switch (t.kind) {
    case RelationTarget::Kind::kIdentity:
      return identity;
    case RelationTarget::Kind::kGenerator:
      return cert.generators.at(t.index);
    case RelationTarget::Kind::kTrusted:
      return cert.trusted.at(t.index);
  }
  return identity;
}

std::map<std::pair<std::size_t, Letter>, const Relation*> relation_index(
    const EmbeddingCertificate& cert) {
  std::map<std::pair<std::size_t, Letter>, const Relation*> out;
  for (const Relation& rel : cert.relations) out[{rel.generator, rel.letter}] = &rel;
  return out;
}

}  // namespace

std::optional<RelationMatch> relation_search(const Similitude& f, const Ifs& ifs,
                                             std::size_t max_power, std::size_t max_word_length) {
  const CellDescent descent(ifs);
  Similitude fk = Similitude::identity(ifs.dimension());
  for (std::size_t k = 1; k <= max_power; ++k) {
    fk = compose(f, fk);
    for (std::size_t len = 1; len <= max_word_length; ++len) {
      for (const Word& i : all_words(ifs.size(), len)) {
        const Similitude h = compose(fk, ifs.cylinder(i));
        std::optional<Word> found;
        descent.walk(h, len + max_word_length, [&](const DescentNode& node) {
          if (!node.u.empty() && node.rest.is_identity()) found = node.u;
          return found.has_value();
        });
        if (found) return RelationMatch{k, i, *found};
      }
    }
  }
  return std::nullopt;
}

std::optional<EmbeddingCertificate> certify_embeddings(const std::vector<Similitude>& targets,
                                                       const Ifs& ifs,
                                                       const std::vector<Similitude>& trusted,
                                                       const EmbeddingBudget& budget) {
  if (targets.empty()) throw PreconditionError("no maps to certify");
  EmbeddingCertificate cert;
  cert.trusted = trusted;
  for (const Similitude& g : targets) {
    if (g.dimension() != ifs.dimension()) throw DimensionMismatch("certify_embedding");
    // g(K) in K forces g(hull K) in hull K.
    if (!ifs.hull().contains(g.apply_box(ifs.hull()))) return std::nullopt;
    if (!index_of(cert.generators, g)) cert.generators.push_back(g);
  }
  if (cert.generators.size() > budget.max_generators) return std::nullopt;

  const CellDescent descent(ifs);
  for (std::size_t gi = 0; gi < cert.generators.size(); ++gi) {
    for (Letter a = 0; a < ifs.size(); ++a) {
      const Similitude h = compose(cert.generators[gi], ifs.map(a));
      std::optional<Relation> found;
      const auto deepest = descent.walk(h, budget.max_word_length, [&](const DescentNode& node) {
        RelationTarget target;
        if (node.rest.is_identity()) {
          target = {RelationTarget::Kind::kIdentity, 0};
        } else if (auto g = index_of(cert.generators, node.rest)) {
          target = {RelationTarget::Kind::kGenerator, *g};
        } else if (auto t = index_of(cert.trusted, node.rest)) {
          target = {RelationTarget::Kind::kTrusted, *t};
        } else {
          return false;
        }
        found = Relation{gi, a, node.u, target};
        return true;
      });
      if (!found) {
        if (cert.generators.size() >= budget.max_generators) return std::nullopt;
        const DescentNode& node = deepest.front();
        cert.generators.push_back(node.rest);
        found = Relation{gi, a, node.u,
                         {RelationTarget::Kind::kGenerator, cert.generators.size() - 1}};
      }
      cert.relations.push_back(std::move(*found));
    }
  }
  return cert;
}

std::optional<EmbeddingCertificate> certify_embedding(const Similitude& f, const Ifs& ifs,
                                                      const std::vector<Similitude>& trusted,
                                                      const EmbeddingBudget& budget) {
  return certify_embeddings({f}, ifs, trusted, budget);
}

bool verify_certificate(const EmbeddingCertificate& cert, const Ifs& ifs) {
  if (cert.generators.empty()) return false;
  if (cert.relations.size() != cert.generators.size() * ifs.size()) return false;
  const auto index = relation_index(cert);
  if (index.size() != cert.relations.size()) return false;
  const Similitude identity = Similitude::identity(ifs.dimension());
  for (const Relation& rel : cert.relations) {
    if (rel.generator >= cert.generators.size() || rel.letter >= ifs.size()) return false;
    for (Letter a : rel.u.letters()) {
      if (a >= ifs.size()) return false;
    }
    const auto& t = rel.target;
    if (t.kind == RelationTarget::Kind::kGenerator && t.index >= cert.generators.size()) return false;
    if (t.kind == RelationTarget::Kind::kTrusted && t.index >= cert.trusted.size()) return false;
    const Similitude& g = cert.generators[rel.generator];
    if (g.dimension() != ifs.dimension()) return false;
    const Similitude lhs = compose(g, ifs.map(rel.letter));
    const Similitude rhs = compose(ifs.cylinder(rel.u), target_map(cert, t, identity));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::optional<std::size_t> find_generator(const EmbeddingCertificate& cert, const Similitude& g) {
  return index_of(cert.generators, g);
}

std::set<Letter> touched_letters(const EmbeddingCertificate& cert, const Ifs& ifs,
                                 std::size_t generator) {
  std::vector<std::set<Letter>> touched(cert.generators.size());
  std::set<Letter> all;
  for (Letter a = 0; a < ifs.size(); ++a) all.insert(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Relation& rel : cert.relations) {
      std::set<Letter>& into = touched.at(rel.generator);
      const std::size_t before = into.size();
      if (!rel.u.empty()) {
        into.insert(rel.u[0]);
      } else if (rel.target.kind == RelationTarget::Kind::kGenerator) {
        const std::set<Letter> from = touched[rel.target.index];
        into.insert(from.begin(), from.end());
      } else {
        into.insert(all.begin(), all.end());
      }
      changed = changed || into.size() != before;
    }
  }
  return touched.at(generator);
}

std::vector<Word> unroll_prefixes(const EmbeddingCertificate& cert, const Ifs& ifs,
                                  std::size_t generator, std::size_t level,
                                  std::size_t max_terms) {
  const auto index = relation_index(cert);
  struct Term {
    Word prefix;
    RelationTarget target;
  };
  std::vector<Term> stack{{Word(), {RelationTarget::Kind::kGenerator, generator}}};
  std::vector<Word> out;
  std::size_t processed = 0;
  while (!stack.empty()) {
    Term term = std::move(stack.back());
    stack.pop_back();
    if (++processed > max_terms) throw ResourceLimit("certificate unrolling exceeded its cap");
    if (term.prefix.size() >= level) {
      out.push_back(term.prefix.prefix(level));
      continue;
    }
    if (term.target.kind != RelationTarget::Kind::kGenerator) {
      out.push_back(term.prefix);
      continue;
    }
    for (Letter a = 0; a < ifs.size(); ++a) {
      const auto it = index.find({term.target.index, a});
      if (it == index.end()) throw PreconditionError("incomplete certificate");
      stack.push_back(Term{term.prefix.concat(it->second->u), it->second->target});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool prefixes_avoid(const std::vector<Word>& prefixes, const Word& cell) {
  for (const Word& p : prefixes) {
    if (!p.incomparable_with(cell)) return false;
  }
  return true;
}

}  // namespace ifsembed
