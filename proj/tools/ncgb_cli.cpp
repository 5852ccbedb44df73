// Command-line front end: presentation parsing, command dispatch, and
// deterministic reports (text or JSON). Exit codes: 0 verified/true,
// 1 refuted with a witness, 2 inconclusive at the truncation, 64 usage
// error, 65 parse error.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ncgb/obstruct.hpp"

using namespace ncgb;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct Options {
  std::string command;
  std::string file;
  std::string poly;
  std::string word_u, word_v;
  std::string gens_file;
  std::string j_file;
  std::string side = "two";
  std::string scheme;
  std::string corpus_dir = "corpus";
  long long maxdeg = 6;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  bool json = false;
  bool trace = false;
  bool minimal = false;
};

// Ordered key/value report; repeated keys become arrays in the JSON view.
class Report {
 public:
  void set(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
  }
  void set(const std::string& key, const char* value) {
    fields_.emplace_back(key, value);
  }
  void set(const std::string& key, bool v) {
    set(key, v ? std::string("true") : std::string("false"));
  }

  std::string text() const {
    std::string out;
    for (const auto& [k, v] : fields_) out += k + ": " + v + "\n";
    return out;
  }

  std::string json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : fields_) {
      if (!j.contains(k)) {
        j[k] = v;
      } else if (j[k].is_array()) {
        j[k].push_back(v);
      } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        arr.push_back(j[k]);
        arr.push_back(v);
        j[k] = std::move(arr);
      }
    }
    return j.dump(2) + "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Side parse_side(const std::string& s) {
  if (s == "two") return Side::two;
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw std::invalid_argument("side must be two, left, or right");
}

template <ScalarField K>
std::string render_word_list(const std::vector<Word>& ws,
                             const Presentation<K>& pres) {
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += " ";
    out += render_word(w, pres.gens);
  }
  return out.empty() ? "(none)" : out;
}

template <ScalarField K>
std::string tag_line(const Classification<K>& cls) {
  std::string out;
  for (TypeTag t : cls.tags) {
    if (!out.empty()) out += " ";
    out += to_string(t);
  }
  return out;
}

int emit(const Report& rep, const Options& opt, int code) {
  std::cout << (opt.json ? rep.json() : rep.text());
  return code;
}

void header(Report& rep, const Options& opt) {
  rep.set("command", opt.command);
  if (!opt.file.empty()) rep.set("file", opt.file);
  rep.set("max-deg", std::to_string(opt.maxdeg));
}

template <ScalarField K>
int cmd_nf(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  rep.set("side", opt.side);
  Poly<K> f = parse_poly<K>(opt.poly, pres);
  auto res = divide(f, pres.relations, pres.order, parse_side(opt.side));
  rep.set("poly", render_poly(f, pres));
  rep.set("remainder", render_poly(res.remainder, pres));
  if (opt.trace) {
    for (const auto& qt : res.quotients) {
      std::string line = qt.coeff.str();
      line += " * " + render_word(qt.left, pres.gens);
      line += " * g" + std::to_string(qt.divisor + 1);
      line += " * " + render_word(qt.right, pres.gens);
      rep.set("quotient", line);
    }
    rep.set("steps", std::to_string(res.steps));
  }
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_check_gb(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  auto r = check_gb(pres.relations, pres.order, opt.maxdeg);
  rep.set("generators", std::to_string(pres.relations.size()));
  rep.set("overlaps-checked", std::to_string(r.configs_checked));
  rep.set("overlaps-skipped", std::to_string(r.configs_skipped));
  rep.set("complete-beyond-truncation", r.complete_beyond_truncation);
  rep.set("verified", r.verified);
  if (!r.verified) {
    const auto& c = *r.certificate;
    rep.set("certificate-kind",
            c.config.kind == OverlapConfig::Kind::proper ? "proper-overlap"
                                                         : "inclusion");
    rep.set("certificate-pair", "g" + std::to_string(c.config.i + 1) + " g" +
                                    std::to_string(c.config.j + 1));
    rep.set("certificate-element", render_poly(c.element, pres));
    rep.set("certificate-remainder", render_poly(c.remainder, pres));
    rep.set("verdict", "refuted");
    return emit(rep, opt, kExitRefuted);
  }
  if (r.configs_skipped > 0) {
    rep.set("verdict", "verified up to max-deg");
    return emit(rep, opt, kExitInconclusive);
  }
  rep.set("verdict", "verified");
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_complete(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  auto res = complete(pres.relations, pres.order, opt.maxdeg);
  std::vector<Poly<K>> basis = res.basis;
  if (opt.minimal) basis = minimalize(basis, pres.order);
  rep.set("truncated", res.truncated);
  rep.set("size", std::to_string(basis.size()));
  for (const auto& g : basis) rep.set("basis", render_poly(g, pres));
  return emit(rep, opt, res.truncated ? kExitInconclusive : kExitVerified);
}

template <ScalarField K>
int cmd_prop26(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  auto r = prop26_check(pres.relations, pres.order, opt.maxdeg);
  rep.set("is-gb", r.is_gb);
  rep.set("lh-overlaps-verified", r.lh_overlaps.verified);
  rep.set("staircase-match", r.staircase_match);
  if (r.uncovered)
    rep.set("staircase-witness", render_word(*r.uncovered, pres.gens));
  rep.set("lh-is-gb", r.lh_is_gb);
  rep.set("conclusive", r.conclusive());
  if (r.is_gb && r.lh_is_gb)
    return emit(rep, opt,
                   r.conclusive() ? kExitVerified : kExitInconclusive);
  return emit(rep, opt, kExitRefuted);
}

template <ScalarField K>
int cmd_classify(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  auto gbrep = check_gb(pres.relations, pres.order, opt.maxdeg);
  rep.set("verified", gbrep.verified);
  if (!gbrep.verified) {
    rep.set("diagnostic", "the relations are not a Groebner basis");
    return emit(rep, opt, kExitRefuted);
  }
  auto gb = minimalize(pres.relations, pres.order);
  auto cls = classify(pres, gb);
  std::string perm;
  for (auto g : cls.perm) {
    if (!perm.empty()) perm += " ";
    perm += pres.gens[g];
  }
  rep.set("permutation", perm + "  (largest first)");
  rep.set("omega", render_word_list(cls.omega, pres));
  for (const auto& b : cls.binomials) {
    std::string line = "lead=" +
                       render_word(Word({std::vector<std::uint32_t>{
                                       cls.perm[b.j - 1], cls.perm[b.i - 1]}}),
                                   pres.gens);
    line += " lambda=" + b.lambda.str();
    line += " tail=" + render_word(b.tail, pres.gens);
    rep.set("binomial", line);
  }
  rep.set("tags", tag_line(cls));
  if (!cls.usable()) {
    rep.set("diagnostic", cls.diagnostic);
    return emit(rep, opt, kExitRefuted);
  }
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_equiv(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  auto gbrep = check_gb(pres.relations, pres.order, opt.maxdeg);
  if (!gbrep.verified) {
    rep.set("error", "the relations are not a Groebner basis");
    return emit(rep, opt, kExitRefuted);
  }
  auto classes = equiv_classes(pres, pres.relations, opt.maxdeg);
  rep.set("classes", std::to_string(classes.reps.size()));
  for (std::size_t k = 0; k < classes.reps.size(); ++k)
    rep.set("class " + std::to_string(k + 1),
            render_word(classes.reps[k], pres.gens));
  for (const auto& w : enumerate_words(pres.grading, opt.maxdeg)) {
    const auto& e = classes.by_word.at(w);
    std::string line = render_word(w, pres.gens) + " -> ";
    if (e.class_id == 0) {
      line += "0";
    } else {
      line += e.scalar.is_one() ? "" : e.scalar.str() + " * ";
      line += render_word(e.rep, pres.gens);
      line += "  (class " + std::to_string(e.class_id) + ")";
    }
    rep.set("word", line);
  }
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_skewgb_extract(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  auto gbrep = check_gb(pres.relations, pres.order, opt.maxdeg);
  if (!gbrep.verified) {
    rep.set("error", "the relations are not a Groebner basis");
    return emit(rep, opt, kExitRefuted);
  }
  auto out = skew_2nomial_gb(pres, pres.relations);
  rep.set("size", std::to_string(out.size()));
  for (const auto& g : out) rep.set("basis", render_poly(g, pres));
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_obstruct(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  rep.set("side", opt.side);
  auto q = QuotientAlgebra<K>::build_basic(pres, opt.maxdeg);
  auto w = same_lm_obstruction(q, opt.maxdeg, parse_side(opt.side));
  rep.set("witness-found", w.has_value());
  if (w) {
    rep.set("w", render_word(w->w, pres.gens));
    rep.set("u1", render_word(w->u1, pres.gens));
    rep.set("u2", render_word(w->u2, pres.gens));
    rep.set("s", render_word(w->s, pres.gens));
    rep.set("m", render_word(w->m, pres.gens));
    rep.set("c1", w->c1.str());
    rep.set("c2", w->c2.str());
    rep.set("verdict",
            "no " + opt.side + "-sided monomial ordering exists on the "
            "normal words");
    return emit(rep, opt, kExitRefuted);
  }
  rep.set("verdict", "no obstruction found up to max-deg");
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_sat_order(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  rep.set("side", opt.side);
  auto q = QuotientAlgebra<K>::build_basic(pres, opt.maxdeg);
  auto res = ordering_sat(q, opt.maxdeg, parse_side(opt.side));
  rep.set("atoms", std::to_string(res.atoms));
  rep.set("clauses", std::to_string(res.clauses));
  rep.set("result", res.sat ? "sat" : "unsat");
  if (!res.sat) {
    for (const auto& line : res.cycle) rep.set("cycle", line);
    rep.set("verdict",
            "no " + opt.side + "-sided monomial ordering exists on the "
            "normal words");
    return emit(rep, opt, kExitRefuted);
  }
  rep.set("verdict", "sat (inconclusive beyond max-deg)");
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_axioms(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  rep.set("side", opt.side);
  std::optional<Scheme> scheme;
  if (!opt.scheme.empty()) scheme = parse_scheme(opt.scheme);
  auto q = QuotientAlgebra<K>::build(pres, opt.maxdeg, scheme);
  if (q.classification().has(TypeTag::MonomialOnly))
    rep.set("scheme", "restricted ambient ordering");
  else
    rep.set("scheme", to_string(q.scheme()));
  auto r = verify_order_axioms(q, parse_side(opt.side), opt.maxdeg);
  rep.set("checks", std::to_string(r.checks));
  rep.set("pass", r.pass);
  if (!r.pass) {
    const auto& v = *r.violation;
    rep.set("violated-axiom", v.axiom);
    rep.set("violation",
            "left=" + render_word(v.left, pres.gens) +
                " a=" + render_word(v.a, pres.gens) +
                " b=" + render_word(v.b, pres.gens) +
                " right=" + render_word(v.right, pres.gens) +
                " lm1=" + render_word(v.lm1, pres.gens) +
                " lm2=" + render_word(v.lm2, pres.gens));
    return emit(rep, opt, kExitRefuted);
  }
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_almost(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  auto gbrep = check_gb(pres.relations, pres.order, opt.maxdeg);
  if (!gbrep.verified) {
    rep.set("error", "the relations are not a Groebner basis");
    return emit(rep, opt, kExitRefuted);
  }
  auto res = almost_skew_check(pres, pres.relations);
  rep.set("almost-skew-2nomial", res.almost);
  for (const auto& g : res.lh.relations)
    rep.set("lh", render_poly(g, pres));
  return emit(rep, opt, res.almost ? kExitVerified : kExitRefuted);
}

template <ScalarField K>
int cmd_quotient_build(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  std::optional<Scheme> scheme;
  if (!opt.scheme.empty()) scheme = parse_scheme(opt.scheme);
  auto q = QuotientAlgebra<K>::build(pres, opt.maxdeg, scheme);
  const auto& cls = q.classification();
  rep.set("tags", tag_line(cls));
  std::string perm;
  for (auto g : cls.perm) {
    if (!perm.empty()) perm += " ";
    perm += pres.gens[g];
  }
  rep.set("permutation", perm + "  (largest first)");
  if (!cls.has(TypeTag::MonomialOnly))
    rep.set("scheme", to_string(q.scheme()));
  rep.set("truncation", std::to_string(q.truncation()));
  rep.set("normal-words", std::to_string(q.normal_basis().size()));
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_qmul(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  std::optional<Scheme> scheme;
  if (!opt.scheme.empty()) scheme = parse_scheme(opt.scheme);
  auto q = QuotientAlgebra<K>::build(pres, opt.maxdeg, scheme);
  Word u = parse_word(opt.word_u, pres);
  Word v = parse_word(opt.word_v, pres);
  if (!q.is_normal(u) || !q.is_normal(v))
    throw std::invalid_argument("both factors must be normal words");
  rep.set("u", render_word(u, pres.gens));
  rep.set("v", render_word(v, pres.gens));
  auto r = q.quotient_mul(u, v);
  if (!r) {
    rep.set("product", "0");
  } else {
    std::string line = r->first.is_one() ? "" : r->first.str() + " * ";
    rep.set("product", line + render_word(r->second, pres.gens));
  }
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_domain(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  auto q = QuotientAlgebra<K>::build_basic(pres, opt.maxdeg);
  bool dom = is_domain_upto(q, opt.maxdeg);
  rep.set("domain-up-to-max-deg", dom);
  if (!dom) {
    for (const auto& u : q.normal_basis()) {
      if (u.is_one()) continue;
      bool found = false;
      for (const auto& v : q.normal_basis()) {
        if (v.is_one()) continue;
        if (pres.grading.degree(u) + pres.grading.degree(v) > opt.maxdeg)
          continue;
        if (q.pair_product(u, v).is_zero()) {
          rep.set("witness", render_word(u, pres.gens) + " * " +
                                 render_word(v, pres.gens) + " = 0");
          found = true;
          break;
        }
      }
      if (found) break;
    }
    return emit(rep, opt, kExitRefuted);
  }
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_onesided_gb(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  rep.set("side", opt.side);
  auto q = QuotientAlgebra<K>::build(pres, opt.maxdeg);
  std::vector<Poly<K>> gens;
  std::istringstream in(read_file(opt.gens_file));
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(parse_poly<K>(line, pres));
  }
  rep.set("generators", std::to_string(gens.size()));
  auto basis = onesided_gb(q, gens, parse_side(opt.side), opt.maxdeg);
  rep.set("size", std::to_string(basis.elements.size()));
  for (const auto& g : basis.elements) rep.set("basis", render_poly(g, pres));
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_lift_check(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  rep.set("j-file", opt.j_file);
  auto jpres = parse_presentation<K>(read_file(opt.j_file));
  if (jpres.gens != pres.gens)
    throw std::invalid_argument(
        "the enlargement file must use the same generators");
  auto lhres = almost_skew_check(pres, pres.relations);
  auto q = QuotientAlgebra<K>::build_basic(pres, opt.maxdeg);
  auto q_lh = QuotientAlgebra<K>::build(lhres.lh, opt.maxdeg);
  auto r = lift_gb_check(q, q_lh, jpres.relations, opt.maxdeg, opt.samples,
                         opt.seed);
  rep.set("seed", std::to_string(r.seed));
  rep.set("samples", std::to_string(r.samples));
  rep.set("nonzero-samples", std::to_string(r.nonzero_samples));
  rep.set("lifted-members", std::to_string(r.lifted_members));
  rep.set("ok", r.ok);
  if (!r.ok) {
    rep.set("failure", r.failure);
    return emit(rep, opt, kExitRefuted);
  }
  return emit(rep, opt, kExitVerified);
}

template <ScalarField K>
int cmd_decompose(const Presentation<K>& pres, const Options& opt) {
  Report rep;
  header(rep, opt);
  auto q = QuotientAlgebra<K>::build_basic(pres, opt.maxdeg);
  Poly<K> f = parse_poly<K>(opt.poly, pres);
  auto [ideal, normal] = decompose(q, f);
  rep.set("poly", render_poly(f, pres));
  for (const auto& qt : ideal.quotients) {
    std::string line = qt.coeff.str();
    line += " * " + render_word(qt.left, pres.gens);
    line += " * g" + std::to_string(qt.divisor + 1);
    line += " * " + render_word(qt.right, pres.gens);
    rep.set("ideal-part", line);
  }
  if (ideal.quotients.empty()) rep.set("ideal-part", "0");
  rep.set("normal-part", render_poly(normal, pres));
  return emit(rep, opt, kExitVerified);
}

int cmd_corpus(const Options& opt) {
  Report rep;
  rep.set("command", "corpus");
  rep.set("dir", opt.corpus_dir);
  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(opt.corpus_dir))
    if (e.path().extension() == ".alg")
      names.push_back(e.path().filename().string());
  std::sort(names.begin(), names.end());
  for (const auto& n : names) rep.set("fixture", n);
  std::cout << (opt.json ? rep.json() : rep.text());
  return kExitVerified;
}

template <ScalarField K>
int dispatch(const Options& opt) {
  auto pres = parse_presentation<K>(read_file(opt.file));
  if (opt.command == "nf") return cmd_nf(pres, opt);
  if (opt.command == "check-gb") return cmd_check_gb(pres, opt);
  if (opt.command == "complete") return cmd_complete(pres, opt);
  if (opt.command == "prop26") return cmd_prop26(pres, opt);
  if (opt.command == "classify") return cmd_classify(pres, opt);
  if (opt.command == "equiv") return cmd_equiv(pres, opt);
  if (opt.command == "skewgb-extract") return cmd_skewgb_extract(pres, opt);
  if (opt.command == "obstruct") return cmd_obstruct(pres, opt);
  if (opt.command == "sat-order") return cmd_sat_order(pres, opt);
  if (opt.command == "axioms") return cmd_axioms(pres, opt);
  if (opt.command == "almost") return cmd_almost(pres, opt);
  if (opt.command == "quotient-build") return cmd_quotient_build(pres, opt);
  if (opt.command == "qmul") return cmd_qmul(pres, opt);
  if (opt.command == "domain") return cmd_domain(pres, opt);
  if (opt.command == "onesided-gb") return cmd_onesided_gb(pres, opt);
  if (opt.command == "lift-check") return cmd_lift_check(pres, opt);
  if (opt.command == "decompose") return cmd_decompose(pres, opt);
  throw std::logic_error("unhandled command");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases for free algebras and their skew 2-nomial "
               "quotients"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_file = true) {
    if (needs_file)
      sub->add_option("--file", opt.file, "presentation file")->required();
    sub->add_option("--max-deg", opt.maxdeg, "truncation degree");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_flag("--json", opt.json, "machine-readable report");
    return sub;
  };

  auto* nf = add_common(app.add_subcommand("nf", "normal form of a polynomial"));
  nf->add_option("--poly", opt.poly)->required();
  nf->add_option("--side", opt.side);
  nf->add_flag("--trace", opt.trace);

  add_common(app.add_subcommand("check-gb", "verify the Groebner property"));

  auto* comp = add_common(
      app.add_subcommand("complete", "degree-truncated completion"));
  comp->add_flag("--minimal", opt.minimal);

  add_common(app.add_subcommand(
      "prop26", "leading-homogeneous Groebner correspondence"));
  add_common(app.add_subcommand("classify", "binomial shape classification"));
  add_common(app.add_subcommand("equiv", "skew 2-nomial equivalence classes"));
  add_common(app.add_subcommand("skewgb-extract",
                                "monomial / skew 2-nomial basis extraction"));

  auto* obs = add_common(
      app.add_subcommand("obstruct", "same-leading-monomial obstruction"));
  obs->add_option("--side", opt.side);

  auto* sat = add_common(
      app.add_subcommand("sat-order", "order-constraint satisfiability"));
  sat->add_option("--side", opt.side);

  auto* ax = add_common(
      app.add_subcommand("axioms", "monomial-ordering axiom verification"));
  ax->add_option("--side", opt.side);
  ax->add_option("--scheme", opt.scheme);

  add_common(app.add_subcommand("almost", "almost skew 2-nomial detection"));

  auto* quot = app.add_subcommand("quotient", "quotient algebra operations");
  quot->require_subcommand(1);
  auto* qbuild = add_common(
      quot->add_subcommand("build", "assemble the quotient algebra"));
  qbuild->add_option("--scheme", opt.scheme);

  auto* qm = add_common(app.add_subcommand("qmul", "basis product"));
  qm->add_option("--u", opt.word_u)->required();
  qm->add_option("--v", opt.word_v)->required();
  qm->add_option("--scheme", opt.scheme);

  add_common(app.add_subcommand("domain", "zero-divisor scan"));

  auto* os = add_common(
      app.add_subcommand("onesided-gb", "one-sided basis inside the quotient"));
  os->add_option("--gens-file", opt.gens_file)->required();
  os->add_option("--side", opt.side);

  auto* lift = add_common(
      app.add_subcommand("lift-check", "ordering / basis lifting check"));
  lift->add_option("--j-file", opt.j_file)->required();
  lift->add_option("--samples", opt.samples);

  auto* dec = add_common(
      app.add_subcommand("decompose", "fundamental decomposition"));
  dec->add_option("--poly", opt.poly)->required();

  auto* cor = app.add_subcommand("corpus", "list bundled presentations");
  cor->add_option("--dir", opt.corpus_dir);
  cor->add_flag("--json", opt.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  auto* sub = app.get_subcommands().front();
  opt.command = sub->get_name();
  if (opt.command == "quotient") opt.command = "quotient-build";
  if (opt.command == "corpus") return cmd_corpus(opt);

  const auto started = std::chrono::steady_clock::now();
  int code = kExitVerified;
  try {
    if (opt.side != "two" && opt.side != "left" && opt.side != "right") {
      std::cerr << "usage error: --side must be two, left, or right\n";
      return kExitUsage;
    }
    if (!opt.scheme.empty() && opt.scheme != "lex" &&
        opt.scheme != "deglex" && opt.scheme != "degrevlex") {
      std::cerr << "usage error: --scheme must be lex, deglex, or degrevlex\n";
      return kExitUsage;
    }
    // Peek at the field line to pick the scalar type.
    bool prime_field = false;
    {
      std::istringstream in(read_file(opt.file));
      std::string key, value;
      std::string line;
      while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
          line.erase(hash);
        std::istringstream ls(line);
        if (ls >> key >> value && key == "field")
          prime_field = !value.empty() && value[0] == 'F';
      }
    }
    code = prime_field ? dispatch<PrimeField>(opt) : dispatch<Rational>(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitRefuted;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "elapsed: " << elapsed.count() << " ms\n";
  return code;
}
