// Presentation files and the polynomial expression grammar.
//
//   field Q | field F<p>
//   gens <name> <name> ...
//   deg <w1> <w2> ...            (omitted => all 1)
//   order (deglex|degrevlex) <names smallest -> largest>
//   rel <polynomial expression>  (repeatable)
//
// poly   ::= ['-'] term (('+'|'-') term)*
// term   ::= coeff | [coeff '*'] factor ('*' factor)*
// factor ::= name ['^' posint]
// coeff  ::= integer | integer '/' posint
//
// Rendering is canonical: terms descending under the presentation order,
// '*' between factors, exponent runs folded, rationals in lowest terms,
// unit coefficients omitted.
#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncgb/poly.hpp"

namespace ncgb {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <ScalarField K>
struct Presentation {
  FieldDesc field;
  std::vector<std::string> gens;
  GradedSpec grading;
  WordOrder order;
  std::vector<Poly<K>> relations;

  std::size_t generator_count() const { return gens.size(); }

  std::uint32_t generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == name) return static_cast<std::uint32_t>(i);
    throw ParseError("unknown generator name '" + name + "'");
  }
};

namespace detail {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error at position " + std::to_string(pos + 1) +
                     ": " + what);
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits) fail("expected integer");
    return std::stoll(std::string(text.substr(start, pos - start)));
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected generator name");
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace detail

// Parses one polynomial expression against a presentation's generator table.
template <ScalarField K>
Poly<K> parse_poly(const std::string& text, const Presentation<K>& pres) {
  detail::Cursor cur{text};
  Poly<K> out;

  bool negate = cur.accept('-');
  for (;;) {
    // term
    K coeff = K::from_fraction(pres.field, 1, 1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      long long num = cur.integer();
      long long den = 1;
      if (cur.accept('/')) {
        den = cur.integer();
        if (den <= 0) cur.fail("denominator must be a positive integer");
      }
      coeff = K::from_fraction(pres.field, num, den);
      have_coeff = true;
    }
    Word w = Word::one();
    bool have_factor = false;
    if (!have_coeff || cur.accept('*')) {
      for (;;) {
        char c = cur.peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
          if (have_factor) break;
          cur.fail("expected generator name");
        }
        std::string nm = cur.name();
        std::uint32_t g;
        try {
          g = pres.generator_index(nm);
        } catch (const ParseError&) {
          throw ParseError("unknown generator name '" + nm + "' at position " +
                           std::to_string(cur.pos));
        }
        std::size_t e = 1;
        if (cur.accept('^')) {
          long long v = cur.integer();
          if (v <= 0) cur.fail("exponent must be a positive integer");
          e = static_cast<std::size_t>(v);
        }
        w = w * Word::power(g, e);
        have_factor = true;
        if (!cur.accept('*')) break;
      }
    }
    if (negate) coeff = -coeff;
    out.add_term(w, coeff);

    if (cur.eof()) break;
    if (cur.accept('+')) negate = false;
    else if (cur.accept('-')) negate = true;
    else cur.fail("expected '+' or '-'");
    if (cur.eof()) cur.fail("trailing operator");
  }
  return out;
}

inline std::string render_word(const Word& w,
                               const std::vector<std::string>& gens) {
  if (w.is_one()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t run = 1;
    while (i + run < w.length() && w.at(i + run) == w.at(i)) ++run;
    if (!out.empty()) out += "*";
    out += gens[w.at(i)];
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

template <ScalarField K>
std::string render_poly(const Poly<K>& f, const Presentation<K>& pres) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : f.terms_descending(pres.order)) {
    const bool first = out.empty();
    const bool neg = c.is_negative();
    if (!first) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    const std::string mag = c.magnitude_str();
    if (w.is_one()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += render_word(w, pres.gens);
    }
  }
  return out;
}

// Word expressions ("X1*X2^2") are polynomials with a single unit term.
template <ScalarField K>
Word parse_word(const std::string& text, const Presentation<K>& pres) {
  Poly<K> f = parse_poly(text, pres);
  if (f.term_count() != 1 || !f.terms().begin()->second.is_one())
    throw ParseError("expected a plain word expression: '" + text + "'");
  return f.terms().begin()->first;
}

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

// Parses a presentation file's text. Line oriented, '#' starts a comment.
template <ScalarField K>
Presentation<K> parse_presentation(const std::string& text) {
  std::optional<FieldDesc> field;
  std::vector<std::string> gens;
  std::optional<std::vector<long long>> weights;
  std::optional<std::pair<std::string, std::vector<std::string>>> order_line;
  std::vector<std::pair<int, std::string>> rel_lines;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto fields = detail::split_fields(line);
    if (fields.empty()) continue;
    const std::string& key = fields[0];
    if (key == "field") {
      if (fields.size() != 2) fail("expected: field Q | field F<p>");
      if (fields[1] == "Q") {
        field = FieldDesc{0};
      } else if (fields[1].size() > 1 && fields[1][0] == 'F') {
        unsigned long p = 0;
        try {
          p = std::stoul(fields[1].substr(1));
        } catch (...) {
          fail("bad field '" + fields[1] + "'");
        }
        if (!is_prime_u32(static_cast<std::uint32_t>(p)))
          fail("field characteristic must be prime");
        field = FieldDesc{static_cast<std::uint32_t>(p)};
      } else {
        fail("bad field '" + fields[1] + "'");
      }
    } else if (key == "gens") {
      gens.assign(fields.begin() + 1, fields.end());
      if (gens.empty()) fail("at least one generator required");
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
          if (gens[i] == gens[j]) fail("duplicate generator '" + gens[i] + "'");
    } else if (key == "deg") {
      std::vector<long long> w;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        try {
          w.push_back(std::stoll(fields[i]));
        } catch (...) {
          fail("bad weight '" + fields[i] + "'");
        }
      }
      weights = std::move(w);
    } else if (key == "order") {
      if (fields.size() < 2) fail("expected: order <kind> <names...>");
      order_line = {fields[1], std::vector<std::string>(fields.begin() + 2,
                                                        fields.end())};
    } else if (key == "rel") {
      auto pos = line.find("rel");
      rel_lines.emplace_back(lineno, line.substr(pos + 3));
    } else {
      fail("unknown directive '" + key + "'");
    }
  }

  if (!field) throw ParseError("missing 'field' line");
  if (gens.empty()) throw ParseError("missing 'gens' line");
  if (!order_line) throw ParseError("missing 'order' line");

  std::vector<long long> w =
      weights ? *weights : std::vector<long long>(gens.size(), 1);
  if (w.size() != gens.size())
    throw ParseError("deg line must list one weight per generator");
  GradedSpec grading(std::move(w));

  WordOrderKind kind = parse_word_order_kind(order_line->first);
  if (order_line->second.size() != gens.size())
    throw ParseError("order line must list every generator once");

  Presentation<K> pres{*field, gens, grading,
                       WordOrder(kind, {0}, GradedSpec::all_ones(1)),
                       {}};
  // Rebuild the order with the real precedence (needs generator_index).
  std::vector<std::uint32_t> prec;
  for (const auto& nm : order_line->second)
    prec.push_back(pres.generator_index(nm));
  pres.order = WordOrder(kind, prec, pres.grading);

  for (const auto& [ln, expr] : rel_lines) {
    Poly<K> f;
    try {
      f = parse_poly<K>(expr, pres);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(ln) + ": " + e.what());
    }
    if (f.is_zero())
      throw ParseError("line " + std::to_string(ln) +
                       ": relation polynomial is zero");
    pres.relations.push_back(std::move(f));
  }
  return pres;
}

}  // namespace ncgb
