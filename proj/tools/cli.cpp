#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ifsembed/bounds.hpp"
#include "ifsembed/chains.hpp"
#include "ifsembed/commensurability.hpp"
#include "ifsembed/embedding.hpp"
#include "ifsembed/error.hpp"
#include "ifsembed/figure.hpp"
#include "ifsembed/fixtures.hpp"
#include "ifsembed/io.hpp"
#include "ifsembed/openness.hpp"
#include "ifsembed/symmetry1d.hpp"

namespace ifsembed::cli {

namespace {

using io::json;

struct Options {
  std::string format = "text";
  std::string input;
  std::string map;
  std::string evidence;
  std::string out;
  std::string style = "boxes";
  std::string u;
  std::string v;
  std::string r;
  std::string r_f;
  std::size_t depth = 6;
  std::size_t budget = 16;
  std::size_t max_word = 8;
  std::size_t nmax = 8;
  std::size_t n = 0;
};

struct Report {
  std::string command;
  std::string status = "ok";
  int exit_code = kSuccess;
  json inputs = json::object();
  json results = json::object();
  json certificates = json::object();
  std::vector<std::string> lines;

  void line(std::string text) { lines.push_back(std::move(text)); }
  void finish(std::string s, int code) {
    status = std::move(s);
    exit_code = code;
  }
};

json load(const std::string& spec, fixtures::Kind kind, const char* what) {
  if (spec.empty()) throw ParseError(std::string("missing ") + what);
  if (spec.rfind("fixture:", 0) == 0) {
    const fixtures::Fixture* fx = nullptr;
    try {
      fx = &fixtures::find(spec.substr(8));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
    if (fx->kind != kind) throw ParseError("fixture '" + fx->name + "' is not a " + what);
    return io::parse_document(fx->document);
  }
  return io::read_document(spec);
}

Ifs load_ifs(const Options& o, Report& rep) {
  const json doc = load(o.input, fixtures::Kind::kIfs, "IFS");
  rep.inputs["ifs"] = json{{"source", o.input}, {"digest", io::digest(doc)}};
  return io::ifs_from_json(doc);
}

Similitude load_map(const Options& o, Report& rep) {
  const json doc = load(o.map, fixtures::Kind::kMap, "map");
  rep.inputs["map"] = json{{"source", o.map}, {"digest", io::digest(doc)}};
  return io::similitude_from_json(doc);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text;
  if (!out) throw PreconditionError("failed writing '" + path + "'");
}

std::string bounds_line(const char* name, const Rational& lo, const Rational& hi) {
  std::ostringstream approx;
  approx << std::setprecision(6) << " (approx [" << lo.to_double() << ", " << hi.to_double()
         << "])";
  return std::string(name) + " in [" + lo.str() + ", " + hi.str() + "]" + approx.str();
}

std::string chain_list(const ChainStructure& cs, std::size_t alphabet) {
  std::string out;
  for (const auto& chain : cs.chains) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i) out += ',';
      out += chain[i].empty() ? "e" : chain[i].str(alphabet);
    }
    out += '}';
  }
  return out;
}

EmbeddingBudget budget_of(const Options& o) { return EmbeddingBudget{o.budget, o.max_word}; }

void cmd_check_ssc(const Options& o, Report& rep) {
  const Ifs ifs = load_ifs(o, rep);
  const SscResult r = check_ssc(ifs, o.depth);
  rep.results = io::to_json(r, ifs.size());
  if (const auto* c = std::get_if<SscCertified>(&r)) {
    rep.line(bounds_line("delta^2", c->gap.lower, c->gap.upper) + " at depth " +
             std::to_string(c->gap.depth));
    rep.finish("certified", kSuccess);
  } else if (const auto* v = std::get_if<SscViolated>(&r)) {
    const auto& w = v->witness;
    rep.line("witness: phi_" + w.word_a.str(ifs.size()) + "(x_" + std::to_string(w.fixed_a + 1) +
             ") = phi_" + w.word_b.str(ifs.size()) + "(x_" + std::to_string(w.fixed_b + 1) +
             ") = " + w.point.str());
    rep.finish("violated", kRefuted);
  } else {
    const auto& g = std::get<SscUnknown>(r).last;
    rep.line(bounds_line("delta^2", g.lower, g.upper) + " at depth " + std::to_string(g.depth));
    rep.finish("unknown", kUnknown);
  }
}

void cmd_gap(const Options& o, Report& rep) {
  const Ifs ifs = load_ifs(o, rep);
  GapBounds g;
  if (!o.u.empty() || !o.v.empty()) {
    const Word u = Word::parse(o.u, ifs.size());
    const Word v = Word::parse(o.v, ifs.size());
    g = cell_dist_bounds(ifs, u, v, o.depth);
    rep.results["cells"] = json::array({o.u, o.v});
  } else {
    g = min_gap(ifs, o.depth);
  }
  rep.results["gap"] = io::to_json(g);
  rep.line(bounds_line("squared distance", g.lower, g.upper) + " at depth " +
           std::to_string(g.depth));
}

void cmd_chains(const Options& o, Report& rep) {
  const Ifs ifs = load_ifs(o, rep);
  if (!ifs.is_homogeneous()) throw PreconditionError("chains need a homogeneous IFS");
  std::size_t n = o.n;
  if (n == 0) {
    const auto level = chain_level(ifs, o.depth);
    if (!level) {
      rep.line("gap lower bound is still zero; increase --depth");
      rep.finish("unknown", kUnknown);
      return;
    }
    n = *level;
  }
  const ChainStructure cs = chain_decomposition(ifs, n, o.depth);
  rep.results = io::to_json(cs, ifs.size());
  rep.line("n = " + std::to_string(n) + ", words of length " + std::to_string(cs.level));
  rep.line("threshold (squared) = " + cs.threshold.str());
  rep.line("chains: " + chain_list(cs, ifs.size()));
  if (!cs.flags.empty()) {
    rep.line(std::to_string(cs.flags.size()) + " ambiguous pair(s) merged conservatively");
  }
  if (ifs.dimension() == 1) {
    json ordered = json::array();
    for (const auto& oc : chains_ordered_1d(cs, ifs)) {
      ordered.push_back(json{{"chain", oc.index},
                             {"hull", json::array({io::to_json(oc.left), io::to_json(oc.right)})}});
    }
    rep.results["ordered"] = std::move(ordered);
  }
}

void cmd_dimension(const Options& o, Report& rep) {
  const Ifs ifs = load_ifs(o, rep);
  if (!ifs.is_homogeneous()) throw PreconditionError("dimension needs a homogeneous IFS");
  const SymbolicDimension d = dimension(ifs);
  const Rational inv = Rational(1) / d.ratio;
  rep.results = json{{"maps", d.maps},
                     {"ratio", io::to_json(d.ratio)},
                     {"formula", "log " + std::to_string(d.maps) + " / log " + inv.str()},
                     {"approx", d.approx}};
  const SscResult ssc = check_ssc(ifs, o.depth);
  rep.results["ssc"] = io::to_json(ssc, ifs.size());
  rep.line("alpha = log " + std::to_string(d.maps) + " / log " + inv.str() + " ~ " +
           to_decimal(Rational(static_cast<long>(d.approx * 1e6 + 0.5), 1000000), 6));
  if (std::holds_alternative<SscViolated>(ssc)) {
    rep.line("the IFS violates strong separation; alpha is only the similarity dimension");
    rep.finish("precondition-failed", kPrecondition);
  } else if (std::holds_alternative<SscUnknown>(ssc)) {
    rep.line("strong separation not certified at this depth");
    rep.finish("unknown", kUnknown);
  }
}

bool cmd_render(const Options& o, Report& rep, std::ostream& out) {
  const Ifs ifs = load_ifs(o, rep);
  const FigureStyle style = o.style == "points" ? FigureStyle::kPoints : FigureStyle::kBoxes;
  const std::string svg = export_figure(ifs, o.depth, style);
  if (o.out.empty()) {
    out << svg;
    return false;
  }
  write_file(o.out, svg);
  rep.results = json{{"path", o.out}, {"bytes", svg.size()}, {"digest", io::digest(json(svg))}};
  rep.line("wrote " + std::to_string(svg.size()) + " bytes to " + o.out);
  return true;
}

std::string relation_text(const Relation& rel, std::size_t alphabet) {
  std::string target;
  switch (rel.target.kind) {
    case RelationTarget::Kind::kIdentity:
      target = "id";
      break;
    case RelationTarget::Kind::kGenerator:
      target = "g" + std::to_string(rel.target.index + 1);
      break;
    case RelationTarget::Kind::kTrusted:
      target = "t" + std::to_string(rel.target.index + 1);
      break;
  }
  return "g" + std::to_string(rel.generator + 1) + " o phi_" + std::to_string(rel.letter + 1) +
         " = phi_" + (rel.u.empty() ? std::string("e") : rel.u.str(alphabet)) + " o " + target;
}

void cmd_embed(const Options& o, Report& rep) {
  const Ifs ifs = load_ifs(o, rep);
  const Similitude f = load_map(o, rep);
  const auto cert = certify_embedding(f, ifs, {}, budget_of(o));
  if (!cert) {
    rep.line("no certificate within the budget");
    rep.finish("unknown", kUnknown);
    return;
  }
  const json doc = io::to_json(*cert, ifs);
  rep.certificates["embedding"] = doc;
  rep.results = json{{"generators", cert->generators.size()},
                     {"relations", cert->relations.size()},
                     {"verified", verify_certificate(*cert, ifs)}};
  for (std::size_t g = 0; g < cert->generators.size(); ++g) {
    rep.line("g" + std::to_string(g + 1) + ": " + cert->generators[g].str());
  }
  for (const auto& rel : cert->relations) rep.line(relation_text(rel, ifs.size()));
  if (!o.out.empty()) write_file(o.out, doc.dump(2) + "\n");
  rep.finish("certified", kSuccess);
}

void cmd_openness(const Options& o, Report& rep) {
  const Ifs ifs = load_ifs(o, rep);
  const Similitude f = load_map(o, rep);
  std::optional<EmbeddingCertificate> evidence;
  if (!o.evidence.empty()) {
    const json doc = io::read_document(o.evidence);
    rep.inputs["evidence"] = json{{"source", o.evidence}, {"digest", io::digest(doc)}};
    evidence = io::certificate_from_json(doc, ifs);
  } else {
    evidence = certify_embedding(f, ifs, {}, budget_of(o));
    if (!evidence) {
      rep.line("no embedding certificate for f within the budget");
      rep.finish("unknown", kUnknown);
      return;
    }
    rep.line("evidence: embedding certificate with " +
             std::to_string(evidence->generators.size()) + " generator(s) built in place");
  }
  OpennessOptions opts;
  opts.depth = o.depth;
  opts.budget = budget_of(o);
  const OpennessOutcome outcome = openness_decision(f, ifs, *evidence, opts);
  if (const auto* err = std::get_if<OpennessError>(&outcome)) {
    rep.results = json{{"error", to_string(err->kind)}, {"detail", err->detail}};
    rep.line(to_string(err->kind) + ": " + err->detail);
    switch (err->kind) {
      case OpennessFailure::kNotHomogeneousOrthogonal:
        rep.line("the openness theorem needs a common orthogonal part; without it f(K) need not "
                 "be relatively open in K (fixture:example25 is such a case)");
        rep.finish("precondition-failed", kPrecondition);
        break;
      case OpennessFailure::kNotSeparated:
      case OpennessFailure::kInvalidEvidence:
        rep.finish("precondition-failed", kPrecondition);
        break;
      case OpennessFailure::kInconsistent:
        rep.finish("inconsistent", kRefuted);
        break;
      case OpennessFailure::kUnknown:
        rep.finish("unknown", kUnknown);
        break;
    }
    return;
  }
  const auto& cert = std::get<OpennessCertificate>(outcome);
  const json doc = io::to_json(cert, ifs.size());
  rep.certificates["openness"] = doc;
  rep.results = doc["cells"];
  rep.line("(k, p) = (" + std::to_string(cert.relation.k) + ", " + std::to_string(cert.relation.p) +
           "), chain level n = " + std::to_string(cert.cells.level));
  std::string words;
  for (const auto& w : cert.cells.words) words += (words.empty() ? "" : " ") + w.str(ifs.size());
  rep.line("f^k(K) = union of " + std::to_string(cert.cells.words.size()) + " cells: " + words);
  rep.line("f(K) is relatively open in K");
  if (!o.out.empty()) write_file(o.out, doc.dump(2) + "\n");
  rep.finish("certified", kSuccess);
}

void cmd_commensurability(const Options& o, Report& rep) {
  Rational r;
  Rational r_f;
  try {
    r = Rational::parse(o.r);
    r_f = Rational::parse(o.r_f);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  rep.inputs = json{{"r", o.r}, {"r_f", o.r_f}};
  const auto rel = log_commensurability(r, r_f);
  if (!rel) {
    rep.results = json{{"commensurable", false}};
    rep.line("log r_f / log r is irrational");
    rep.finish("none", kRefuted);
    return;
  }
  rep.results = json{{"commensurable", true}, {"k", rel->k}, {"p", rel->p}};
  rep.line("r_f^" + std::to_string(rel->k) + " = r^" + std::to_string(rel->p));
}

void cmd_symmetry(const Options& o, Report& rep) {
  const json doc = load(o.input, fixtures::Kind::kProblem, "symmetry problem");
  rep.inputs["problem"] = json{{"source", o.input}, {"digest", io::digest(doc)}};
  const SymmetryProblem problem = io::problem_from_json(doc);
  const SymmetryOutcome outcome = symmetry_decision(problem, budget_of(o), o.depth);
  if (const auto* res = std::get_if<SymmetryResult>(&outcome)) {
    rep.results = io::to_json(*res);
    rep.certificates["same_attractor"] = io::to_json(res->same_attractor, problem.phi);
    rep.certificates["reflection"] = io::to_json(res->reflection_certificate, problem.phi);
    rep.line("c = " + res->c.str() + "  (-S = S + c)");
    rep.line("hull = [" + res->hull_left.str() + ", " + res->hull_right.str() + "]");
    for (std::size_t i = 0; i < res->endpoints.size(); ++i) {
      rep.line("a_" + std::to_string(i + 1) + " = " + res->endpoints[i].a.str() + ", a'_" +
               std::to_string(i + 1) + " = " + res->endpoints[i].a_prime.str());
    }
    rep.finish("certified", kSuccess);
  } else if (const auto* ce = std::get_if<CounterevidenceReport>(&outcome)) {
    rep.results = io::to_json(*ce);
    rep.line("counterevidence at check '" + ce->failed_check + "': " + ce->detail);
    std::string passed;
    for (const auto& p : ce->passed_checks) passed += (passed.empty() ? "" : ", ") + p;
    rep.line("passed checks: " + (passed.empty() ? std::string("none") : passed));
    rep.finish("counterevidence", kCounterevidence);
  } else {
    rep.results = json{{"detail", std::get<SymmetryUnknown>(outcome).detail}};
    rep.line(std::get<SymmetryUnknown>(outcome).detail);
    rep.finish("unknown", kUnknown);
  }
}

// Steps (a)-(g) of the non-openness argument for the bundled example.
void cmd_example25(const Options& o, Report& rep) {
  const Ifs ifs = fixtures::example25();
  const Similitude f = fixtures::example25_map();
  const auto& phi = ifs.maps();
  rep.inputs = json{{"ifs", io::digest(io::to_json(ifs))}, {"map", io::digest(io::to_json(f))},
                    {"nmax", o.nmax}};
  json steps = json::array();
  bool ok_so_far = true;
  auto step = [&](const std::string& id, const std::string& title, bool ok, json detail) {
    steps.push_back(json{{"step", id}, {"title", title}, {"pass", ok}, {"detail", std::move(detail)}});
    rep.line(std::string(ok ? "PASS" : "FAIL") + " (" + id + ") " + title);
    if (!ok && ok_so_far) {
      ok_so_far = false;
      rep.finish("failed-step-" + id, kRefuted);
    }
    return ok;
  };
  auto done = [&] { rep.results["steps"] = steps; };

  const RationalVector x1 = ifs.fixed_points()[0];
  const RationalVector fx1 = f(x1);
  rep.results["x1"] = io::to_json(x1);
  rep.results["f_x1"] = io::to_json(fx1);
  rep.line("x1 = " + x1.str() + ", f(x1) = " + fx1.str());

  const SscResult ssc = check_ssc(ifs, o.depth);
  const auto* certified = std::get_if<SscCertified>(&ssc);
  if (!step("a", "strong separation with delta^2 >= 1/16",
            certified && Rational(1, 16) <= certified->gap.lower, io::to_json(ssc, ifs.size()))) {
    return done();
  }

  const Similitude lhs1 = compose(f, phi[0]);
  if (!step("b", "f o phi_1 == phi_6 o f", lhs1 == compose(phi[5], f),
            json{{"map", lhs1.str()}})) {
    return done();
  }

  json sigma = json::object();
  bool bijective = true;
  auto match = [&](Letter from, Letter to_lo, Letter outer, const char* key) {
    std::vector<bool> used(9, false);
    for (Letter i = from; i < from + 4; ++i) {
      const Similitude lhs = compose(f, phi[i]);
      bool found = false;
      for (Letter j = to_lo; j < to_lo + 4 && !found; ++j) {
        if (!used[j] && lhs == compose(phi[outer], phi[j])) {
          used[j] = found = true;
          sigma[key][std::to_string(i + 1)] = j + 1;
        }
      }
      bijective = bijective && found;
    }
  };
  match(1, 5, 7, "f o phi_i = phi_8 o phi_sigma(i)");
  match(5, 5, 8, "f o phi_i = phi_9 o phi_sigma'(i)");
  const Similitude spot(Rational(1, 36), SignedPermutation::identity(2),
                        RationalVector{Rational(35, 24), Rational(-50, 24)});
  const bool spot_ok = compose(f, phi[1]) == spot && compose(phi[7], phi[6]) == spot;
  sigma["f o phi_2"] = spot.str();
  if (!step("c", "eight identities for f(E2) = phi_8(E3) and f(E3) = phi_9(E3)",
            bijective && spot_ok, sigma)) {
    return done();
  }

  const auto cert = certify_embedding(f, ifs, {}, budget_of(o));
  const bool cert_ok = cert && cert->generators.size() == 1 && verify_certificate(*cert, ifs);
  json cert_detail = json::object();
  if (cert) {
    cert_detail["generators"] = cert->generators.size();
    json rels = json::array();
    for (const auto& rel : cert->relations) rels.push_back(relation_text(rel, ifs.size()));
    cert_detail["relations"] = rels;
    rep.certificates["embedding"] = io::to_json(*cert, ifs);
  }
  if (!step("d", "embedding certificate with G = {f}", cert_ok, cert_detail)) return done();

  const auto level = chain_level(ifs, o.depth);
  bool chains_ok = false;
  json chain_detail = json::object();
  if (level) {
    const ChainStructure cs = chain_decomposition(ifs, *level, o.depth);
    const std::vector<std::vector<Word>> expected{
        {Word({0})}, {Word({1}), Word({2}), Word({3}), Word({4})},
        {Word({5}), Word({6}), Word({7}), Word({8})}};
    chains_ok = cs.chains == expected;
    chain_detail = json{{"n", *level}, {"chains", io::to_json(cs, ifs.size())["chains"]},
                        {"threshold", io::to_json(cs.threshold)}};
  }
  if (!step("e", "chains {1}, {2,3,4,5}, {6,7,8,9}", chains_ok, chain_detail)) return done();

  const Rational diam2 = diameter_bounds(ifs, 0).upper;
  json rows = json::array();
  bool disjoint_ok = true;
  bool witness_ok = true;
  const Letter six = 5;
  const Letter seven = 6;
  for (std::size_t n = 1; n <= o.nmax; ++n) {
    const Word target = Word::repeat(six, n).append(seven);
    const std::vector<Word> prefixes = unroll_prefixes(*cert, ifs, 0, n + 1);
    bool family = true;
    for (const Word& p : prefixes) {
      std::size_t k = 0;
      while (k < p.size() && p[k] == six) ++k;
      family = family && (k == n + 1 || (k <= n && k < p.size() && (p[k] == 7 || p[k] == 8)));
    }
    const bool avoid = prefixes_avoid(prefixes, target);
    disjoint_ok = disjoint_ok && avoid && family;

    const RationalVector y = ifs.cylinder(Word::repeat(six, n))(ifs.fixed_points()[seven]);
    const bool in_cell = ifs.cylinder(target)(ifs.fixed_points()[seven]) == y;
    const Rational d2 = squared_distance(y, fx1);
    const Rational bound = diam2 / Rational(36).pow(static_cast<long>(n));
    witness_ok = witness_ok && in_cell && d2 <= bound;
    rows.push_back(json{{"n", n},
                        {"cell", target.str(ifs.size())},
                        {"prefixes", prefixes.size()},
                        {"prefixes_avoid_cell", avoid},
                        {"prefix_family", family},
                        {"y", io::to_json(y)},
                        {"distance2", io::to_json(d2)},
                        {"bound", io::to_json(bound)},
                        {"bound_approx", to_decimal(bound, 15)}});
  }
  rep.results["witnesses"] = rows;
  if (o.nmax == 0) {
    rep.line("steps (f) and (g) skipped for --nmax 0");
    return done();
  }
  if (!step("f", "f(K) is disjoint from phi_6^n phi_7(K) for n = 1.." + std::to_string(o.nmax),
            disjoint_ok, json{{"nmax", o.nmax}})) {
    return done();
  }
  if (!step("g", "witnesses y_n with |y_n - f(x1)|^2 <= 72/36^n", witness_ok,
            json{{"diameter2_upper", io::to_json(diam2)}})) {
    return done();
  }
  rep.line("f(x1) = " + fx1.str() + " is not an interior point of f(K) relative to K");
  rep.results["conclusion"] = "f(K) is not relatively open in K";
  done();
}

void print(const Report& rep, const std::string& format, double millis, std::ostream& out) {
  if (format == "structured") {
    const json doc{{"command", rep.command},   {"status", rep.status},
                   {"exit_code", rep.exit_code}, {"inputs", rep.inputs},
                   {"results", rep.results},     {"certificates", rep.certificates},
                   {"timings_ms", json{{"total", millis}}}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << rep.command << ": " << rep.status << '\n';
  for (const auto& l : rep.lines) out << "  " << l << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decision procedures for self-similar sets", "ifsembed"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}));

  std::function<void(Report&)> action;
  std::string command;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&, name] { command = name; });
    return s;
  };
  auto ifs_input = [&](CLI::App* s) {
    s->add_option("ifs", o.input, "IFS file or fixture:NAME")->required();
  };
  auto depth = [&](CLI::App* s) {
    s->add_option("--depth", o.depth, "Refinement depth")->capture_default_str();
  };
  auto budget = [&](CLI::App* s) {
    s->add_option("--budget", o.budget, "Maximum number of certificate generators")
        ->capture_default_str();
    s->add_option("--max-word", o.max_word, "Maximum relation word length")->capture_default_str();
  };

  CLI::App* s = sub("check-ssc", "Certify or refute strong separation");
  ifs_input(s);
  depth(s);
  s = sub("gap", "Bounds for the squared gap between level-1 cells (or two given cells)");
  ifs_input(s);
  depth(s);
  s->add_option("--u", o.u, "First cell word");
  s->add_option("--v", o.v, "Second cell word");
  s = sub("chains", "Chain decomposition");
  ifs_input(s);
  depth(s);
  s->add_option("--n", o.n, "Chain level n (default: smallest sound value)");
  s = sub("dimension", "Similarity dimension of a homogeneous IFS");
  ifs_input(s);
  depth(s);
  s = sub("render", "Write an SVG figure");
  ifs_input(s);
  depth(s);
  s->add_option("--style", o.style)->check(CLI::IsMember({"boxes", "points"}))->capture_default_str();
  s->add_option("--out", o.out, "Output path (default: standard output)");
  s = sub("embed", "Search for an embedding certificate of f");
  ifs_input(s);
  s->add_option("--map", o.map, "Map file or fixture:NAME")->required();
  budget(s);
  s->add_option("--out", o.out, "Write the certificate document here");
  s = sub("openness", "Decide relative openness of f(K)");
  ifs_input(s);
  s->add_option("--map", o.map, "Map file or fixture:NAME")->required();
  s->add_option("--evidence", o.evidence, "Embedding certificate document");
  depth(s);
  budget(s);
  s->add_option("--out", o.out, "Write the openness certificate here");
  s = sub("commensurability", "Find k, p with r_f^k = r^p");
  s->add_option("r", o.r, "Ratio r")->required();
  s->add_option("r_f", o.r_f, "Ratio r_f")->required();
  s = sub("symmetry", "Decide -S = S + c for a 1D problem");
  s->add_option("problem", o.input, "Problem file or fixture:NAME")->required();
  budget(s);
  depth(s);
  s = sub("example25-verify", "Replay the non-openness argument for the bundled example");
  s->add_option("--nmax", o.nmax, "Largest n for steps (f) and (g)")->capture_default_str();
  depth(s);
  budget(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Report rep;
  rep.command = command;
  const auto start = std::chrono::steady_clock::now();
  try {
    bool report = true;
    if (command == "check-ssc") cmd_check_ssc(o, rep);
    else if (command == "gap") cmd_gap(o, rep);
    else if (command == "chains") cmd_chains(o, rep);
    else if (command == "dimension") cmd_dimension(o, rep);
    else if (command == "render") report = cmd_render(o, rep, out);
    else if (command == "embed") cmd_embed(o, rep);
    else if (command == "openness") cmd_openness(o, rep);
    else if (command == "commensurability") cmd_commensurability(o, rep);
    else if (command == "symmetry") cmd_symmetry(o, rep);
    else if (command == "example25-verify") cmd_example25(o, rep);
    if (!report) return kSuccess;
  } catch (const ParseError& e) {
    err << "ifsembed " << command << ": " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "ifsembed " << command << ": resource limit: " << e.what() << '\n';
    return kUnknown;
  } catch (const Error& e) {
    err << "ifsembed " << command << ": " << e.what() << '\n';
    return kPrecondition;
  }
  const double millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  print(rep, o.format, millis, out);
  return rep.exit_code;
}

}  // namespace ifsembed::cli
