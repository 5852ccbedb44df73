// Arithmetic in the quotient algebra on its normal-word basis, one-sided
// Groebner bases inside the quotient via staircase saturation, the
// fundamental decomposition, zero-divisor scanning, and the verification
// of ordering / basis lifting from the leading-homogeneous algebra.
#pragma once

#include <random>

#include "ncgb/skew.hpp"

namespace ncgb {

template <ScalarField K>
class QuotientAlgebra {
 public:
  // Full build: verified basis, classification, induced ordering. Throws
  // with the failed hypothesis by name.
  static QuotientAlgebra build(const Presentation<K>& pres, long long maxdeg,
                               std::optional<Scheme> scheme = {}) {
    QuotientAlgebra q(pres, maxdeg);
    q.verify();
    q.cls_ = classify(pres, q.gb_);
    if (!q.cls_->usable())
      throw std::runtime_error("hypothesis failed: classification: " +
                               q.cls_->diagnostic);
    if (!q.cls_->has(TypeTag::MonomialOnly)) {
      if (!check_hypothesis(pres, q.gb_, *q.cls_, maxdeg))
        throw std::runtime_error(
            "hypothesis failed: some ordered monomial has a nonzero "
            "non-normal image (ordered-word hypothesis)");
      Scheme s = scheme.value_or(default_scheme(*q.cls_));
      q.induced_ = induced_order(*q.cls_, s, pres.grading);
      q.scheme_ = s;
    } else if (scheme) {
      throw std::invalid_argument(
          "monomial-only quotients use the restricted ambient ordering; "
          "no scheme applies");
    }
    q.finish();
    return q;
  }

  // Basic build: verified basis and normal words under the ambient order,
  // no classification. Enough for the obstruction detectors, which reason
  // over every candidate ordering at once.
  static QuotientAlgebra build_basic(const Presentation<K>& pres,
                                     long long maxdeg) {
    QuotientAlgebra q(pres, maxdeg);
    q.verify();
    q.finish();
    return q;
  }

  const Presentation<K>& presentation() const { return pres_; }
  const std::vector<Poly<K>>& gb() const { return gb_; }
  long long truncation() const { return maxdeg_; }
  const std::vector<Word>& normal_basis() const { return normal_; }
  bool is_normal(const Word& w) const { return normal_set_.count(w) != 0; }
  bool classified() const { return cls_.has_value(); }
  const Classification<K>& classification() const {
    if (!cls_) throw std::logic_error("quotient built without classification");
    return *cls_;
  }
  Scheme scheme() const {
    if (!induced_) throw std::logic_error("no induced scheme on this quotient");
    return scheme_;
  }

  // The ordering on normal words: the induced exponent-vector ordering for
  // classified quotients, the restricted ambient ordering otherwise.
  std::strong_ordering compare(const Word& a, const Word& b) const {
    if (induced_) {
      auto ea = cls_->exponents(a), eb = cls_->exponents(b);
      if (!ea || !eb)
        throw std::logic_error("comparing a non-ordered word");
      return induced_->compare(*ea, *eb);
    }
    return pres_.order.compare(a, b);
  }
  bool less(const Word& a, const Word& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  // Leading word of a nonzero polynomial over normal words.
  Word lm_word(const Poly<K>& f) const {
    if (f.is_zero()) throw std::invalid_argument("no leading term");
    const Word* best = nullptr;
    for (const auto& [w, c] : f.terms())
      if (!best || less(*best, w)) best = &w;
    return *best;
  }

  // Image of f on the normal basis; degree must stay within the truncation.
  Poly<K> quotient_nf(const Poly<K>& f) const {
    if (!f.is_zero() && f.degree(pres_.grading) > maxdeg_)
      throw std::invalid_argument("degree overflow: polynomial of degree " +
                                  std::to_string(f.degree(pres_.grading)) +
                                  " above truncation " +
                                  std::to_string(maxdeg_));
    return normal_form(f, gb_, pres_.order);
  }

  // Cached product of two normal words on the normal basis.
  const Poly<K>& pair_product(const Word& u, const Word& v) const {
    auto it = products_.find(std::make_pair(u, v));
    if (it == products_.end())
      throw std::invalid_argument("degree overflow in basis product");
    return it->second;
  }

  // Product of a reduced polynomial by a normal word through the cache.
  Poly<K> product_word(const Poly<K>& f, const Word& v) const {
    Poly<K> out;
    for (const auto& [w, c] : f.terms()) out += c * pair_product(w, v);
    return out;
  }
  Poly<K> word_product(const Word& w, const Poly<K>& f) const {
    Poly<K> out;
    for (const auto& [u, c] : f.terms()) out += c * pair_product(w, u);
    return out;
  }
  Poly<K> triple_product(const Word& w, const Word& u, const Word& s) const {
    return product_word(pair_product(w, u), s);
  }

  // Skew multiplicative product: zero or a scalar times a normal word.
  std::optional<std::pair<K, Word>> quotient_mul(const Word& u,
                                                 const Word& v) const {
    const Poly<K>& p = pair_product(u, v);
    if (p.is_zero()) return std::nullopt;
    if (p.term_count() != 1)
      throw std::logic_error(
          "skew multiplicativity violated: a basis product has " +
          std::to_string(p.term_count()) + " terms");
    const auto& [w, c] = *p.terms().begin();
    return std::make_pair(c, w);
  }

 private:
  QuotientAlgebra(const Presentation<K>& pres, long long maxdeg)
      : pres_(pres), maxdeg_(maxdeg) {}

  // The presented relations must verify before minimalization; a minimal
  // subset of a non-basis can verify vacuously.
  void verify() {
    auto rep = check_gb(pres_.relations, pres_.order, maxdeg_);
    if (!rep.verified)
      throw std::runtime_error(
          "hypothesis failed: the relations are not a Groebner basis "
          "(overlap element with nonzero normal form at degree <= " +
          std::to_string(maxdeg_) + ")");
    gb_ = minimalize(pres_.relations, pres_.order);
  }

  static Scheme default_scheme(const Classification<K>& cls) {
    if (cls.has(TypeTag::TwoSidedType) || cls.has(TypeTag::LeftType))
      return Scheme::deglex;
    return Scheme::degrevlex;
  }

  void finish() {
    normal_ = normal_words(gb_, pres_.order, maxdeg_);
    if (induced_) {
      for (const auto& w : normal_)
        if (!cls_->exponents(w))
          throw std::logic_error(
              "normal word outside the ordered-monomial basis");
    }
    std::sort(normal_.begin(), normal_.end(),
              [&](const Word& a, const Word& b) { return less(a, b); });
    normal_set_.insert(normal_.begin(), normal_.end());
    // Structure constants, written once here and read-only afterwards.
    for (const auto& u : normal_) {
      long long du = pres_.grading.degree(u);
      for (const auto& v : normal_) {
        if (du + pres_.grading.degree(v) > maxdeg_) continue;
        products_.emplace(std::make_pair(u, v),
                          normal_form(Poly<K>::term(u * v, unit()),
                                      gb_, pres_.order));
      }
    }
  }

  K unit() const { return K::from_fraction(pres_.field, 1, 1); }

  Presentation<K> pres_;
  std::vector<Poly<K>> gb_;
  std::optional<Classification<K>> cls_;
  Scheme scheme_ = Scheme::deglex;
  std::optional<ExpVecOrder> induced_;
  long long maxdeg_ = 0;
  std::vector<Word> normal_;
  std::set<Word> normal_set_;
  std::map<std::pair<Word, Word>, Poly<K>> products_;
};

// No zero divisor found among basis products up to the bound. A sound
// refuter: false exhibits a vanishing product, true only speaks up to
// maxdeg.
template <ScalarField K>
bool is_domain_upto(const QuotientAlgebra<K>& q, long long maxdeg) {
  const auto& grading = q.presentation().grading;
  const long long bound = std::min(maxdeg, q.truncation());
  for (const auto& u : q.normal_basis()) {
    if (u.is_one()) continue;
    for (const auto& v : q.normal_basis()) {
      if (v.is_one()) continue;
      if (grading.degree(u) + grading.degree(v) > bound) continue;
      if (q.pair_product(u, v).is_zero()) return false;
    }
  }
  return true;
}

// Side divisibility on the quotient basis: m1 divides m2 when some
// cofactor product has leading word m2.
template <ScalarField K>
bool side_divides(const QuotientAlgebra<K>& q, const Word& m1, const Word& m2,
                  Side side) {
  if (m1 == m2) return true;
  const auto& grading = q.presentation().grading;
  const long long d1 = grading.degree(m1);
  for (const auto& w : q.normal_basis()) {
    if (w.is_one()) continue;
    if (grading.degree(w) + d1 > q.truncation()) continue;
    if (side != Side::right) {
      const Poly<K>& p = q.pair_product(w, m1);
      if (!p.is_zero() && q.lm_word(p) == m2) return true;
    }
    if (side != Side::left) {
      const Poly<K>& p = q.pair_product(m1, w);
      if (!p.is_zero() && q.lm_word(p) == m2) return true;
    }
    if (side == Side::two) {
      for (const auto& s : q.normal_basis()) {
        if (s.is_one()) continue;
        if (grading.degree(w) + d1 + grading.degree(s) > q.truncation())
          continue;
        Poly<K> p = q.triple_product(w, m1, s);
        if (!p.is_zero() && q.lm_word(p) == m2) return true;
      }
    }
  }
  return false;
}

template <ScalarField K>
struct OneSidedBasis {
  Side side = Side::left;
  std::vector<Poly<K>> elements;  // monic, interreduced, ascending
  long long maxdeg = 0;
};

// Truncated one-sided (or two-sided) Groebner basis of the ideal the
// reduced generators span inside the quotient: the linear span of all
// cofactor multiples within degree is triangularized against the quotient
// ordering and the staircase-minimal rows are kept.
template <ScalarField K>
OneSidedBasis<K> onesided_gb(const QuotientAlgebra<K>& q,
                             const std::vector<Poly<K>>& gens, Side side,
                             long long maxdeg) {
  OneSidedBasis<K> out;
  out.side = side;
  out.maxdeg = maxdeg;

  std::map<Word, Poly<K>> pivots;
  auto insert = [&](Poly<K> row) {
    while (!row.is_zero()) {
      Word lm = q.lm_word(row);
      auto it = pivots.find(lm);
      if (it == pivots.end()) {
        const K lc = *row.coefficient(lm);
        row.scale(lc.inverse());
        pivots.emplace(std::move(lm), std::move(row));
        return;
      }
      row -= *row.coefficient(lm) * it->second;
    }
  };

  const auto& grading = q.presentation().grading;
  for (const auto& g0 : gens) {
    Poly<K> g = q.quotient_nf(g0);
    if (g.is_zero()) continue;
    const long long dg = g.degree(grading);
    for (const auto& w : q.normal_basis()) {
      const long long dw = grading.degree(w);
      if (side == Side::two) {
        for (const auto& s : q.normal_basis()) {
          if (dw + dg + grading.degree(s) > maxdeg) continue;
          insert(q.product_word(q.word_product(w, g), s));
        }
      } else if (dw + dg <= maxdeg) {
        insert(side == Side::left ? q.word_product(w, g)
                                  : q.product_word(g, w));
      }
    }
  }

  // Full interreduction of the pivot tails.
  std::vector<Word> words;
  for (const auto& [w, row] : pivots) words.push_back(w);
  for (const auto& w : words) {
    Poly<K>& row = pivots.at(w);
    for (;;) {
      const Word* hit = nullptr;
      for (const auto& [t, c] : row.terms())
        if (!(t == w) && pivots.count(t)) {
          hit = &t;
          break;
        }
      if (!hit) break;
      row -= *row.coefficient(*hit) * pivots.at(*hit);
    }
  }

  // Keep the staircase-minimal leading words for the side.
  std::vector<Word> lead_words = words;
  std::sort(lead_words.begin(), lead_words.end(),
            [&](const Word& a, const Word& b) { return q.less(a, b); });
  std::vector<Word> kept;
  for (const auto& w : lead_words) {
    bool covered = false;
    for (const auto& k : kept)
      if (side_divides(q, k, w, side)) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(w);
  }
  for (const auto& w : kept) out.elements.push_back(pivots.at(w));
  return out;
}

// Division inside the quotient by a one-sided basis. Quotient cofactors
// are normal words; for one-sided division the unused side stays 1.
template <ScalarField K>
DivisionResult<K> onesided_divide(const QuotientAlgebra<K>& q,
                                  const Poly<K>& f,
                                  const OneSidedBasis<K>& basis) {
  const auto& grading = q.presentation().grading;
  DivisionResult<K> res;
  Poly<K> r = q.quotient_nf(f);
  std::vector<Word> lms;
  for (const auto& g : basis.elements) lms.push_back(q.lm_word(g));

  for (;;) {
    // Greatest reducible word under the quotient ordering.
    const Word* target = nullptr;
    std::size_t chosen = 0;
    for (const auto& [w, c] : r.terms()) {
      if (target && !q.less(*target, w)) continue;
      std::optional<std::size_t> best;
      for (std::size_t k = 0; k < basis.elements.size(); ++k) {
        if (!side_divides(q, lms[k], w, basis.side)) continue;
        if (!best || q.less(lms[k], lms[*best])) best = k;
      }
      if (best) {
        target = &w;
        chosen = *best;
      }
    }
    if (!target) break;
    const Word m = *target;

    // The witness cofactors, smallest first for determinism.
    std::optional<std::pair<Word, Word>> witness;
    if (m == lms[chosen]) witness = {Word::one(), Word::one()};
    const long long dlm = grading.degree(lms[chosen]);
    if (!witness) {
      for (const auto& w : q.normal_basis()) {
        if (witness) break;
        if (basis.side == Side::right && !w.is_one()) break;
        if (grading.degree(w) + dlm > q.truncation()) continue;
        for (const auto& s : q.normal_basis()) {
          if (basis.side == Side::left && !s.is_one()) break;
          if (grading.degree(w) + dlm + grading.degree(s) > q.truncation())
            continue;
          Poly<K> p = q.triple_product(w, lms[chosen], s);
          if (!p.is_zero() && q.lm_word(p) == m) {
            witness = {w, s};
            break;
          }
        }
      }
    }
    if (!witness) throw std::logic_error("divisibility witness vanished");

    Poly<K> t = q.product_word(
        q.word_product(witness->first, basis.elements[chosen]),
        witness->second);
    if (q.lm_word(t) != m)
      throw std::logic_error(
          "the quotient ordering is not compatible with this side");
    const K coeff = *r.coefficient(m) / *t.coefficient(m);
    r -= coeff * t;
    res.quotients.push_back({coeff, witness->first, chosen, witness->second});
    ++res.steps;
  }
  res.remainder = std::move(r);
  return res;
}

// Fundamental decomposition f = (ideal part) + (normal part): the two-sided
// division trace by the quotient's basis together with the normal form.
template <ScalarField K>
std::pair<DivisionResult<K>, Poly<K>> decompose(const QuotientAlgebra<K>& q,
                                                const Poly<K>& f) {
  if (!f.is_zero() &&
      f.degree(q.presentation().grading) > q.truncation())
    throw std::invalid_argument("degree overflow");
  auto res = divide(f, q.gb(), q.presentation().order);
  Poly<K> nf = res.remainder;
  return {std::move(res), std::move(nf)};
}

template <ScalarField K>
struct LiftReport {
  bool ok = false;
  std::size_t samples = 0;
  std::size_t nonzero_samples = 0;
  std::size_t lifted_members = 0;
  std::uint64_t seed = 0;
  std::string failure;  // rendered failing sample, empty when ok
};

// Verification of basis lifting at the truncation: a Groebner basis of the
// enlarged ideal is completed in the ambient ring, its leading-homogeneous
// members that survive in the leading-homogeneous quotient are lifted, and
// seeded random ideal elements are tested for leading-word divisibility in
// the lifted ordering (the ordering transported verbatim from the graded
// quotient).
template <ScalarField K>
LiftReport<K> lift_gb_check(const QuotientAlgebra<K>& q,
                            const QuotientAlgebra<K>& q_lh,
                            const std::vector<Poly<K>>& extra_gens,
                            long long maxdeg, std::size_t samples,
                            std::uint64_t seed) {
  if (!is_domain_upto(q_lh, maxdeg))
    throw std::runtime_error(
        "hypothesis failed: the leading-homogeneous quotient has a zero "
        "divisor within the truncation (domain hypothesis)");
  if (q.normal_basis().size() != q_lh.normal_basis().size())
    throw std::runtime_error(
        "normal bases of the quotient and its leading-homogeneous "
        "quotient differ");

  const auto& pres = q.presentation();
  const auto& grading = pres.grading;
  LiftReport<K> rep;
  rep.seed = seed;
  rep.samples = samples;

  // Truncated basis of the enlarged ideal and its lifted members.
  std::vector<Poly<K>> j_gens = pres.relations;
  for (const auto& g : extra_gens) j_gens.push_back(g);
  auto completed = complete(j_gens, pres.order, maxdeg);

  // For each lifted member, the set of leading words its multiples reach.
  std::set<Word> reachable;
  for (const auto& g : completed.basis) {
    Poly<K> lh = g.lh(grading);
    if (q_lh.quotient_nf(lh).is_zero()) continue;
    Poly<K> bar = q.quotient_nf(g);
    if (bar.is_zero()) continue;
    ++rep.lifted_members;
    const Word m = q_lh.lm_word(bar);
    const long long dm = grading.degree(m);
    for (const auto& u : q.normal_basis()) {
      if (grading.degree(u) + dm > maxdeg) continue;
      for (const auto& v : q.normal_basis()) {
        if (grading.degree(u) + dm + grading.degree(v) > maxdeg) continue;
        Poly<K> p = q.quotient_nf(
            Poly<K>::term((u * m) * v, K::from_fraction(pres.field, 1, 1)));
        if (!p.is_zero()) reachable.insert(q_lh.lm_word(p));
      }
    }
  }

  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  };
  auto random_word = [&](long long budget) {
    std::vector<std::uint32_t> w;
    long long d = 0;
    while (rng() % 3 != 0) {
      auto g = static_cast<std::uint32_t>(pick(pres.gens.size()));
      if (d + grading.weights[g] > budget) break;
      d += grading.weights[g];
      w.push_back(g);
    }
    return Word(std::move(w));
  };

  for (std::size_t t = 0; t < samples; ++t) {
    Poly<K> f;
    const std::size_t parts = 1 + pick(3);
    for (std::size_t k = 0; k < parts; ++k) {
      const Poly<K>& g = j_gens[pick(j_gens.size())];
      const long long dg = g.degree(grading);
      if (dg > maxdeg) continue;
      Word u = random_word((maxdeg - dg) / 2);
      Word v = random_word(maxdeg - dg - grading.degree(u));
      long long c = static_cast<long long>(rng() % 5) - 2;
      if (c == 0) c = 1;
      f += K::from_fraction(pres.field, c, 1) * ((u * g) * v);
    }
    if (f.is_zero()) continue;
    Poly<K> bar = q.quotient_nf(f);
    if (bar.is_zero()) continue;  // fell into the base ideal
    ++rep.nonzero_samples;
    if (!reachable.count(q_lh.lm_word(bar))) {
      rep.ok = false;
      rep.failure = "sample " + std::to_string(t) + ": leading word " +
                    render_word(q_lh.lm_word(bar), pres.gens) +
                    " not divisible by any lifted member";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace ncgb
