// Skew 2-nomial machinery: syntactic detection, extraction of a basis of
// monomials and skew 2-nomials from a verified Groebner basis, the
// equivalence relation determined by the ideal, classification of binomial
// presentations into the left / right / two-sided shapes, and the induced
// orderings on exponent vectors.
#pragma once

#include <optional>
#include <set>
#include <sstream>

#include "ncgb/groebner.hpp"
#include "ncgb/presentation.hpp"

namespace ncgb {

// lead - coeff*tail with lead the leading monomial.
template <ScalarField K>
struct SkewBinomial {
  Word lead;
  K coeff;
  Word tail;
};

// True iff every generator is a scalar multiple of a word or a skew
// 2-nomial v - lambda*u. Purely syntactic on the given generating set.
template <ScalarField K>
bool is_skew_2nomial(const std::vector<Poly<K>>& gens) {
  for (const auto& g : gens)
    if (g.term_count() > 2) return false;
  return true;
}

// Extraction of a monomial / skew 2-nomial Groebner basis with the same
// leading-monomial set as the input: each member's leading monomial is
// either in the ideal (emitted as a monomial) or congruent to a unique
// scalar multiple of a normal word (emitted as the skew 2-nomial
// difference). Throws if some normal form has two or more terms.
template <ScalarField K>
std::vector<Poly<K>> skew_2nomial_gb(const Presentation<K>& pres,
                                     const std::vector<Poly<K>>& gb) {
  std::vector<Poly<K>> out;
  const K one = K::from_fraction(pres.field, 1, 1);
  for (const auto& g : gb) {
    const Word& m = g.lm(pres.order);
    Poly<K> nf = normal_form(Poly<K>::term(m, one), gb, pres.order);
    if (nf.is_zero()) {
      out.push_back(Poly<K>::term(m, one));
    } else if (nf.term_count() == 1) {
      out.push_back(Poly<K>::term(m, one) - nf);
    } else {
      throw std::runtime_error(
          "ideal is not skew 2-nomial: the normal form of " +
          render_word(m, pres.gens) + " has " +
          std::to_string(nf.term_count()) + " terms (member " +
          render_poly(g, pres) + ")");
    }
  }
  return out;
}

// Truncated table of the skew 2-nomial relation: words congruent to a
// scalar multiple of the same normal word share a class; class 0 collects
// the words lying in the ideal.
template <ScalarField K>
struct EquivClasses {
  struct Entry {
    std::size_t class_id = 0;  // 0 = the zero class
    Word rep;                  // the canonical normal-word representative
    K scalar;                  // word = scalar * rep modulo the ideal
  };
  long long maxdeg = 0;
  std::map<Word, Entry> by_word;
  std::vector<Word> reps;  // class k has representative reps[k-1]
};

template <ScalarField K>
EquivClasses<K> equiv_classes(const Presentation<K>& pres,
                              const std::vector<Poly<K>>& gb,
                              long long maxdeg) {
  EquivClasses<K> out;
  out.maxdeg = maxdeg;
  out.reps = normal_words(gb, pres.order, maxdeg);
  std::map<Word, std::size_t> rep_id;
  for (std::size_t k = 0; k < out.reps.size(); ++k)
    rep_id.emplace(out.reps[k], k + 1);

  const K one = K::from_fraction(pres.field, 1, 1);
  for (const auto& w : enumerate_words(pres.grading, maxdeg)) {
    Poly<K> nf = normal_form(Poly<K>::term(w, one), gb, pres.order);
    typename EquivClasses<K>::Entry e;
    if (nf.is_zero()) {
      e.class_id = 0;
    } else if (nf.term_count() == 1) {
      const auto& [rep, c] = *nf.terms().begin();
      e.class_id = rep_id.at(rep);
      e.rep = rep;
      e.scalar = c;
    } else {
      throw std::runtime_error(
          "ideal is not skew 2-nomial: the normal form of " +
          render_word(w, pres.gens) + " has " +
          std::to_string(nf.term_count()) + " terms");
    }
    out.by_word.emplace(w, std::move(e));
  }
  return out;
}

// One canonical representative per nonzero class: the normal word itself,
// carried with the unit scalar (the canonical scaling).
template <ScalarField K>
std::vector<std::pair<Word, K>> select_basis_reps(
    const Presentation<K>& pres, const std::vector<Poly<K>>& gb,
    long long maxdeg) {
  auto classes = equiv_classes(pres, gb, maxdeg);
  const K one = K::from_fraction(pres.field, 1, 1);
  std::vector<std::pair<Word, K>> out;
  for (const auto& r : classes.reps) out.emplace_back(r, one);
  return out;
}

template <ScalarField K>
struct AlmostSkewResult {
  bool almost = false;     // every LH member is a monomial or skew 2-nomial
  Presentation<K> lh;      // presentation of the leading-homogeneous quotient
};

// Leading-homogeneous shadow of a verified basis: the quotient is almost
// skew 2-nomial exactly when every LH member has at most two terms. The
// emitted presentation keeps the field, generators, weights and ordering
// and swaps in the LH relations.
template <ScalarField K>
AlmostSkewResult<K> almost_skew_check(const Presentation<K>& pres,
                                      const std::vector<Poly<K>>& gb) {
  AlmostSkewResult<K> out{true, pres};
  out.lh.relations.clear();
  for (const auto& g : gb) {
    Poly<K> h = g.lh(pres.grading);
    if (h.term_count() > 2) out.almost = false;
    out.lh.relations.push_back(std::move(h));
  }
  return out;
}

enum class TypeTag { LeftType, RightType, TwoSidedType, MonomialOnly, None };

inline std::string to_string(TypeTag t) {
  switch (t) {
    case TypeTag::LeftType: return "left";
    case TypeTag::RightType: return "right";
    case TypeTag::TwoSidedType: return "two-sided";
    case TypeTag::MonomialOnly: return "monomial-only";
    default: return "none";
  }
}

template <ScalarField K>
struct Classification {
  // perm[k] is the generator at position k; position 0 holds the largest
  // generator of the induced ordering, position n-1 the smallest.
  std::vector<std::uint32_t> perm;
  std::vector<Word> omega;  // monomial members (pair-slot monomials included)
  struct BinomialSlot {
    std::uint32_t j, i;  // 1-based positions into perm, j > i
    K lambda;            // nonzero
    Word tail;
    std::size_t source;  // index into the classified basis
  };
  std::vector<BinomialSlot> binomials;
  std::set<TypeTag> tags;
  std::string diagnostic;

  bool has(TypeTag t) const { return tags.count(t) != 0; }
  bool usable() const { return !has(TypeTag::None); }

  // 1-based position of generator g under perm.
  std::uint32_t position(std::uint32_t g) const {
    for (std::size_t k = 0; k < perm.size(); ++k)
      if (perm[k] == g) return static_cast<std::uint32_t>(k + 1);
    throw std::logic_error("generator missing from permutation");
  }

  // Exponent vector of an ordered word in the permuted alphabet; empty
  // optional when the word is not of the ordered form.
  std::optional<std::vector<long long>> exponents(const Word& w) const {
    std::vector<long long> e(perm.size(), 0);
    std::size_t block = 0;
    for (auto g : w.letters()) {
      std::size_t k = 0;
      while (k < perm.size() && perm[k] != g) ++k;
      if (k < block) return std::nullopt;
      block = k;
      ++e[k];
    }
    return e;
  }

  Word word_of_exponents(std::span<const long long> e) const {
    std::vector<std::uint32_t> seq;
    for (std::size_t k = 0; k < perm.size(); ++k)
      for (long long c = 0; c < e[k]; ++c) seq.push_back(perm[k]);
    return Word(std::move(seq));
  }
};

// Splits a minimal verified Groebner basis into monomials and binomial
// pair slots, recovers the permutation from the tournament "x beats y when
// the word xy is a leading monomial", and assigns every theorem shape whose
// tail pattern matches all nonzero slots.
template <ScalarField K>
Classification<K> classify(const Presentation<K>& pres,
                           const std::vector<Poly<K>>& gb) {
  Classification<K> cls;
  const std::size_t n = pres.generator_count();
  auto fail = [&](const std::string& why) {
    cls.tags = {TypeTag::None};
    cls.diagnostic = why;
    return cls;
  };

  struct RawBinomial {
    Word lead, tail;
    K lambda;
    std::size_t source;
  };
  std::vector<RawBinomial> binomials;
  std::set<Word> monomials;
  for (std::size_t s = 0; s < gb.size(); ++s) {
    const auto& g = gb[s];
    if (g.term_count() == 1) {
      cls.omega.push_back(g.lm(pres.order));
      monomials.insert(cls.omega.back());
      continue;
    }
    if (g.term_count() != 2)
      return fail("non-2-nomial member: " + render_poly(g, pres));
    const Word& lead = g.lm(pres.order);
    const K& lc = g.lc(pres.order);
    for (const auto& [w, c] : g.terms()) {
      if (w == lead) continue;
      binomials.push_back({lead, w, -(c / lc), s});
    }
  }

  if (binomials.empty()) {
    cls.perm.resize(n);
    for (std::size_t k = 0; k < n; ++k)
      cls.perm[k] = static_cast<std::uint32_t>(k);
    cls.tags = {TypeTag::MonomialOnly};
    return cls;
  }

  // Tournament orientation from the binomial leading words.
  std::vector<std::vector<bool>> beats(n, std::vector<bool>(n, false));
  for (const auto& b : binomials) {
    if (b.lead.length() != 2 || b.lead.at(0) == b.lead.at(1))
      return fail("binomial leading monomial " +
                  render_word(b.lead, pres.gens) +
                  " is not a pair of distinct generators");
    beats[b.lead.at(0)][b.lead.at(1)] = true;
  }
  // Pair-slot monomials orient pairs no binomial covers.
  for (const auto& m : cls.omega) {
    if (m.length() != 2 || m.at(0) == m.at(1)) continue;
    std::uint32_t a = m.at(0), b = m.at(1);
    if (beats[a][b] || beats[b][a]) continue;
    if (monomials.count(Word({std::vector<std::uint32_t>{b, a}})))
      continue;  // both orientations present: the pair is unconstrained
    beats[a][b] = true;
  }
  // Transitive closure; a 2-cycle means no consistent permutation.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (beats[a][k] && beats[k][b]) beats[a][b] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && beats[a][b] && beats[b][a])
        return fail("no consistent permutation: the leading words orient " +
                    pres.gens[a] + " and " + pres.gens[b] + " both ways");

  // Sort by wins: position n-1 beats everyone, position 0 nobody.
  std::vector<std::uint32_t> order_by_wins(n);
  for (std::size_t k = 0; k < n; ++k)
    order_by_wins[k] = static_cast<std::uint32_t>(k);
  auto wins = [&](std::uint32_t g) {
    std::size_t w = 0;
    for (std::size_t b = 0; b < n; ++b) w += beats[g][b];
    return w;
  };
  std::stable_sort(order_by_wins.begin(), order_by_wins.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return wins(a) < wins(b);
                   });
  cls.perm = order_by_wins;

  // Every pair slot (j, i), j > i, must be a binomial leading word or a
  // monomial member.
  for (std::size_t jj = 1; jj < n; ++jj)
    for (std::size_t ii = 0; ii < jj; ++ii) {
      Word slot({std::vector<std::uint32_t>{cls.perm[jj], cls.perm[ii]}});
      bool found = monomials.count(slot) != 0;
      for (const auto& b : binomials) found = found || b.lead == slot;
      if (!found)
        return fail("missing pair: no relation with leading word " +
                    render_word(slot, pres.gens));
    }

  for (const auto& b : binomials) {
    typename Classification<K>::BinomialSlot slot;
    slot.j = cls.position(b.lead.at(0));
    slot.i = cls.position(b.lead.at(1));
    if (slot.j <= slot.i)
      return fail("leading word " + render_word(b.lead, pres.gens) +
                  " contradicts the recovered permutation");
    slot.lambda = b.lambda;
    slot.tail = b.tail;
    slot.source = b.source;
    cls.binomials.push_back(std::move(slot));
  }

  bool left = true, right = true, two = true;
  for (const auto& b : cls.binomials) {
    if (b.tail.length() != 2) {
      left = right = two = false;
      break;
    }
    std::uint32_t p1 = cls.position(b.tail.at(0));
    std::uint32_t p2 = cls.position(b.tail.at(1));
    left = left && p1 == b.i && p2 > b.i;    // a_i * a_p, i < p
    right = right && p2 == b.j && p1 < b.j;  // a_p * a_j, p < j
    two = two && p1 == b.i && p2 == b.j;     // a_i * a_j
  }
  if (left) cls.tags.insert(TypeTag::LeftType);
  if (right) cls.tags.insert(TypeTag::RightType);
  if (two) cls.tags.insert(TypeTag::TwoSidedType);
  if (cls.tags.empty())
    return fail("binomial tails match no classification shape");
  return cls;
}

// For every ordered word u of weighted degree <= maxdeg: a nonzero image
// forces u itself to be normal (the hypothesis of the classification
// theorems).
template <ScalarField K>
bool check_hypothesis(const Presentation<K>& pres,
                      const std::vector<Poly<K>>& gb,
                      const Classification<K>& cls, long long maxdeg) {
  const std::size_t n = pres.generator_count();
  const K one = K::from_fraction(pres.field, 1, 1);
  std::vector<long long> expo(n, 0);
  auto rec = [&](auto&& self, std::size_t k, long long deg) -> bool {
    if (k == n) {
      Word u = cls.word_of_exponents(expo);
      Poly<K> nf = normal_form(Poly<K>::term(u, one), gb, pres.order);
      return nf.is_zero() || nf == Poly<K>::term(u, one);
    }
    const long long w = pres.grading.weights[cls.perm[k]];
    for (long long e = 0; deg + e * w <= maxdeg; ++e) {
      expo[k] = e;
      if (!self(self, k + 1, deg + e * w)) return false;
      expo[k] = 0;
    }
    return true;
  };
  return rec(rec, 0, 0);
}

enum class Scheme { lex, deglex, degrevlex };

inline std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::lex: return "lex";
    case Scheme::deglex: return "deglex";
    default: return "degrevlex";
  }
}

inline Scheme parse_scheme(const std::string& s) {
  if (s == "lex") return Scheme::lex;
  if (s == "deglex") return Scheme::deglex;
  if (s == "degrevlex") return Scheme::degrevlex;
  throw std::invalid_argument("unknown scheme '" + s + "'");
}

// Comparator on exponent vectors in the permuted alphabet. Position 0 is
// the largest generator; lex and deglex compare it first, degrevlex breaks
// degree ties at the last differing position, larger exponent there making
// the vector smaller.
class ExpVecOrder {
 public:
  ExpVecOrder(Scheme scheme, std::vector<long long> position_weights)
      : scheme_(scheme), weights_(std::move(position_weights)) {}

  Scheme scheme() const { return scheme_; }

  std::strong_ordering compare(std::span<const long long> a,
                               std::span<const long long> b) const {
    if (scheme_ != Scheme::lex) {
      long long da = 0, db = 0;
      for (std::size_t k = 0; k < weights_.size(); ++k) {
        da += a[k] * weights_[k];
        db += b[k] * weights_[k];
      }
      if (da != db) return da <=> db;
    }
    if (scheme_ == Scheme::degrevlex) {
      for (std::size_t k = weights_.size(); k-- > 0;)
        if (a[k] != b[k]) return b[k] <=> a[k];
      return std::strong_ordering::equal;
    }
    for (std::size_t k = 0; k < weights_.size(); ++k)
      if (a[k] != b[k]) return a[k] <=> b[k];
    return std::strong_ordering::equal;
  }

 private:
  Scheme scheme_;
  std::vector<long long> weights_;
};

// The ordering the classification induces on the quotient basis. The
// scheme must fit the shape: lex/deglex need the left or two-sided shape,
// degrevlex the right or two-sided shape.
template <ScalarField K>
ExpVecOrder induced_order(const Classification<K>& cls, Scheme scheme,
                          const GradedSpec& grading) {
  const bool two = cls.has(TypeTag::TwoSidedType);
  const bool left = cls.has(TypeTag::LeftType) || two;
  const bool right = cls.has(TypeTag::RightType) || two;
  if ((scheme == Scheme::lex || scheme == Scheme::deglex) && !left)
    throw std::invalid_argument(
        "scheme " + to_string(scheme) +
        " requires the left or two-sided shape (left-theory construction)");
  if (scheme == Scheme::degrevlex && !right)
    throw std::invalid_argument(
        "scheme degrevlex requires the right or two-sided shape "
        "(right-theory construction)");
  std::vector<long long> w;
  for (auto g : cls.perm) w.push_back(grading.weights[g]);
  return ExpVecOrder(scheme, std::move(w));
}

}  // namespace ncgb
