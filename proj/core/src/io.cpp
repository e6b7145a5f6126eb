#include "ifsembed/io.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "ifsembed/error.hpp"

namespace ifsembed::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

const json& array_field(const json& j, const char* name) {
  const json& a = field(j, name);
  if (!a.is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
  return a;
}

std::size_t index_value(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

using WordFormat = std::function<std::string(const Word&)>;

json gap_json(const Rational& lower, const Rational& upper, std::size_t depth) {
  return json{{"lower", to_json(lower)},
              {"upper", to_json(upper)},
              {"lower_approx", lower.to_double()},
              {"upper_approx", upper.to_double()},
              {"depth", depth}};
}

json chains_json(const ChainStructure& cs, const WordFormat& fmt) {
  json chains = json::array();
  for (const auto& chain : cs.chains) {
    json words = json::array();
    for (const Word& w : chain) words.push_back(fmt(w));
    chains.push_back(std::move(words));
  }
  json pairs = json::array();
  for (const auto& cert : cs.certificates) {
    pairs.push_back(json{{"a", fmt(cert.a)},
                         {"b", fmt(cert.b)},
                         {"lower", to_json(cert.lower)},
                         {"upper", to_json(cert.upper)},
                         {"separated", cert.separated}});
  }
  json flags = json::array();
  for (const auto& [a, b] : cs.flags) flags.push_back(json::array({fmt(a), fmt(b)}));
  return json{{"n", cs.n},
              {"level", cs.level},
              {"threshold", to_json(cs.threshold)},
              {"diameter", to_json(cs.diameter)},
              {"chains", std::move(chains)},
              {"pairs", std::move(pairs)},
              {"flags", std::move(flags)},
              {"coarsened", !cs.flags.empty()}};
}

json relation_table(const EmbeddingCertificate& cert, std::size_t alphabet) {
  json relations = json::array();
  for (const Relation& rel : cert.relations) {
    json target;
    switch (rel.target.kind) {
      case RelationTarget::Kind::kIdentity:
        target = json{{"kind", "identity"}};
        break;
      case RelationTarget::Kind::kGenerator:
        target = json{{"kind", "generator"}, {"index", rel.target.index}};
        break;
      case RelationTarget::Kind::kTrusted:
        target = json{{"kind", "trusted"}, {"index", rel.target.index}};
        break;
    }
    relations.push_back(json{{"generator", rel.generator},
                             {"letter", rel.letter + 1},
                             {"u", rel.u.str(alphabet)},
                             {"target", std::move(target)}});
  }
  json generators = json::array();
  for (const auto& g : cert.generators) generators.push_back(to_json(g));
  json trusted = json::array();
  for (const auto& g : cert.trusted) trusted.push_back(to_json(g));
  return json{{"generators", std::move(generators)},
              {"trusted", std::move(trusted)},
              {"relations", std::move(relations)}};
}

}  // namespace

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a \"p/q\" string or an integer");
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& c : v.coords()) out.push_back(to_json(c));
  return out;
}

RationalVector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("vector must be a non-empty array");
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return RationalVector(std::move(coords));
}

json to_json(const Box& b) {
  return json{{"lower", to_json(b.lower())}, {"upper", to_json(b.upper())}};
}

Box box_from_json(const json& j) {
  return guarded([&] {
    const RationalVector lo = vector_from_json(field(j, "lower"));
    const RationalVector hi = vector_from_json(field(j, "upper"));
    if (lo.dimension() != hi.dimension()) throw ParseError("box corners differ in dimension");
    return Box(lo, hi);
  });
}

json to_json(const Similitude& s) {
  const auto& o = s.orth();
  return json{{"ratio", to_json(s.ratio())},
              {"orth", json{{"perm", o.perm()}, {"signs", o.signs()}}},
              {"trans", to_json(s.trans())}};
}

Similitude similitude_from_json(const json& j) {
  return guarded([&] {
    const Rational ratio = rational_from_json(field(j, "ratio"));
    const RationalVector trans = vector_from_json(field(j, "trans"));
    SignedPermutation orth = SignedPermutation::identity(trans.dimension());
    if (j.contains("orth")) {
      const json& o = j.at("orth");
      orth = SignedPermutation(array_field(o, "perm").get<std::vector<std::size_t>>(),
                               array_field(o, "signs").get<std::vector<int>>());
    }
    return Similitude(ratio, orth, trans);
  });
}

json to_json(const Ifs& ifs) {
  json maps = json::array();
  for (const auto& s : ifs.maps()) maps.push_back(to_json(s));
  json out{{"dimension", ifs.dimension()}, {"maps", std::move(maps)}};
  if (ifs.declared_box()) out["invariant_box"] = to_json(*ifs.declared_box());
  return out;
}

Ifs ifs_from_json(const json& j) {
  return guarded([&] {
    const std::size_t d = index_value(field(j, "dimension"), "dimension");
    std::vector<Similitude> maps;
    for (const auto& m : array_field(j, "maps")) {
      maps.push_back(similitude_from_json(m));
      if (maps.back().dimension() != d) throw ParseError("map dimension differs from 'dimension'");
    }
    std::optional<Box> box;
    if (j.contains("invariant_box")) box = box_from_json(j.at("invariant_box"));
    return Ifs(std::move(maps), box);
  });
}

json to_json(const SymmetryProblem& problem) {
  return json{{"phi", to_json(problem.phi)}, {"psi", to_json(problem.psi)}};
}

SymmetryProblem problem_from_json(const json& j) {
  return SymmetryProblem{ifs_from_json(field(j, "phi")), ifs_from_json(field(j, "psi"))};
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest(const json& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(j.dump())));
  return std::string("fnv1a64:") + buf;
}

json to_json(const EmbeddingCertificate& cert, const Ifs& ifs) {
  json table = relation_table(cert, ifs.size());
  json out{{"kind", "embedding-certificate"},
           {"dimension", ifs.dimension()},
           {"alphabet", ifs.size()},
           {"ifs_digest", digest(to_json(ifs))},
           {"digest", digest(table)}};
  out.update(table);
  return out;
}

EmbeddingCertificate certificate_from_json(const json& j, const Ifs& ifs) {
  return guarded([&] {
    if (field(j, "kind") != "embedding-certificate") throw ParseError("not an embedding certificate");
    if (field(j, "ifs_digest") != digest(to_json(ifs))) {
      throw ParseError("certificate was issued for a different IFS");
    }
    EmbeddingCertificate cert;
    for (const auto& g : array_field(j, "generators")) cert.generators.push_back(similitude_from_json(g));
    for (const auto& g : array_field(j, "trusted")) cert.trusted.push_back(similitude_from_json(g));
    for (const auto& r : array_field(j, "relations")) {
      Relation rel;
      rel.generator = index_value(field(r, "generator"), "generator");
      const std::size_t letter = index_value(field(r, "letter"), "letter");
      if (letter < 1 || letter > ifs.size()) throw ParseError("relation letter out of range");
      rel.letter = static_cast<Letter>(letter - 1);
      rel.u = Word::parse(field(r, "u").get<std::string>(), ifs.size());
      const json& t = field(r, "target");
      const std::string kind = field(t, "kind").get<std::string>();
      if (kind == "identity") {
        rel.target = {RelationTarget::Kind::kIdentity, 0};
      } else if (kind == "generator") {
        rel.target = {RelationTarget::Kind::kGenerator, index_value(field(t, "index"), "index")};
      } else if (kind == "trusted") {
        rel.target = {RelationTarget::Kind::kTrusted, index_value(field(t, "index"), "index")};
      } else {
        throw ParseError("unknown relation target '" + kind + "'");
      }
      cert.relations.push_back(std::move(rel));
    }
    if (field(j, "digest") != digest(relation_table(cert, ifs.size()))) {
      throw ParseError("certificate digest mismatch");
    }
    return cert;
  });
}

json to_json(const GapBounds& g) { return gap_json(g.lower, g.upper, g.depth); }

json to_json(const DiameterBounds& d) { return gap_json(d.lower, d.upper, d.depth); }

json to_json(const SscResult& r, std::size_t alphabet) {
  if (const auto* c = std::get_if<SscCertified>(&r)) {
    return json{{"status", "certified"}, {"gap", to_json(c->gap)}};
  }
  if (const auto* v = std::get_if<SscViolated>(&r)) {
    const auto& w = v->witness;
    return json{{"status", "violated"},
                {"witness",
                 json{{"word_a", w.word_a.str(alphabet)},
                      {"fixed_a", w.fixed_a + 1},
                      {"word_b", w.word_b.str(alphabet)},
                      {"fixed_b", w.fixed_b + 1},
                      {"point", to_json(w.point)}}}};
  }
  return json{{"status", "unknown"}, {"gap", to_json(std::get<SscUnknown>(r).last)}};
}

json to_json(const ChainStructure& cs, std::size_t alphabet) {
  return chains_json(cs, [alphabet](const Word& w) { return w.str(alphabet); });
}

json to_json(const OpennessCertificate& cert, std::size_t base_alphabet) {
  const std::size_t p = cert.cells.power;
  const WordFormat fmt = [&](const Word& w) {
    return expand_power_word(w, base_alphabet, p).str(base_alphabet);
  };
  json steps = json::array();
  for (const auto& s : cert.steps) {
    steps.push_back(json{{"chain", s.chain},
                         {"cell", fmt(Word({s.letter}))},
                         {"next_chain", s.next_chain}});
  }
  json orbits = json::array();
  for (const auto& o : cert.orbits) {
    orbits.push_back(json{{"start", o.start}, {"chains", o.chains}, {"s", o.s}, {"t", o.t}});
  }
  json checks = json::array();
  for (const auto& c : cert.checks) {
    checks.push_back(json{{"w", fmt(c.w)},
                          {"target", fmt(c.target)},
                          {"method", c.exact ? "identity" : "isometry-certificate"}});
  }
  json words = json::array();
  for (const auto& w : cert.cells.words) words.push_back(w.str(base_alphabet));
  return json{{"kind", "openness-certificate"},
              {"ratio_relation", json{{"k", cert.ratio_relation.k}, {"p", cert.ratio_relation.p}}},
              {"relation", json{{"k", cert.relation.k}, {"p", cert.relation.p}}},
              {"psi_maps", cert.psi_maps},
              {"chains", chains_json(cert.chains, fmt)},
              {"steps", std::move(steps)},
              {"orbits", std::move(orbits)},
              {"checks", std::move(checks)},
              {"cells",
               json{{"level", cert.cells.level},
                    {"power", cert.cells.power},
                    {"count", cert.cells.words.size()},
                    {"words", std::move(words)},
                    {"source", cert.cells.source}}},
              {"conclusion", "f(K) is relatively open in K"}};
}

json to_json(const SymmetryResult& result) {
  json rows = json::array();
  for (const auto& row : result.endpoints) {
    rows.push_back(json{{"a", to_json(row.a)}, {"a_prime", to_json(row.a_prime)}});
  }
  json pairs = json::array();
  for (const auto& [i, j] : result.reflection_pairs) pairs.push_back(json::array({i + 1, j + 1}));
  return json{{"c", to_json(result.c)},
              {"hull", json::array({to_json(result.hull_left), to_json(result.hull_right)})},
              {"endpoints", std::move(rows)},
              {"reflection", to_json(result.reflection)},
              {"reflection_pairs", std::move(pairs)},
              {"same_attractor_generators", result.same_attractor.generators.size()},
              {"reflection_relations", result.reflection_certificate.relations.size()}};
}

json to_json(const CounterevidenceReport& report) {
  return json{{"failed_check", report.failed_check},
              {"passed_checks", report.passed_checks},
              {"detail", report.detail}};
}

}  // namespace ifsembed::io
