// Overlap elements, Groebner-basis verification and degree-truncated
// completion, minimal bases, and an independent linear-algebra membership
// oracle over the word basis.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "ncgb/division.hpp"

namespace ncgb {

// Two leading monomials meeting inside one word. Proper overlap:
// u = A*B, v = B*C with B a nonempty proper suffix of u and proper prefix
// of v. Inclusion: v = A*u*C (the trivial coincidence u = v with A = C = 1
// is excluded). The row element sits at index i, the column at j.
struct OverlapConfig {
  enum class Kind { proper, inclusion };
  Kind kind;
  std::size_t i = 0, j = 0;
  Word A, B, C;

  Word overlap_word(const Word& u, const Word& v) const {
    return kind == Kind::proper ? (A * B) * C : v;
  }
};

// Configurations for the ordered pair (u, v); the caller fills in indices.
inline std::vector<OverlapConfig> overlaps(const Word& u, const Word& v) {
  std::vector<OverlapConfig> out;
  // Proper overlaps: nonempty B, proper suffix of u, proper prefix of v.
  for (std::size_t blen = 1; blen < u.length() && blen < v.length(); ++blen) {
    Word b = u.suffix(blen);
    if (!v.has_prefix(b)) continue;
    out.push_back({OverlapConfig::Kind::proper, 0, 0,
                   u.prefix(u.length() - blen), b,
                   v.suffix(v.length() - blen)});
  }
  // Inclusions of u inside v.
  for (auto pos : v.occurrences(u)) {
    Word a = v.prefix(pos);
    Word c = v.suffix(v.length() - pos - u.length());
    if (u == v && a.is_one() && c.is_one()) continue;  // trivial coincidence
    out.push_back({OverlapConfig::Kind::inclusion, 0, 0, a, Word::one(), c});
  }
  return out;
}

// LC-normalized cancellation of the shared overlap word:
// proper:    g1*C / LC(g1) - A*g2 / LC(g2)
// inclusion: g2 / LC(g2) - A*g1*C / LC(g1)
template <ScalarField K>
Poly<K> overlap_element(const Poly<K>& g1, const Poly<K>& g2,
                        const OverlapConfig& cfg, const WordOrder& order) {
  const Word& u = g1.lm(order);
  const Word& v = g2.lm(order);
  if (cfg.kind == OverlapConfig::Kind::proper) {
    if (!(cfg.A * cfg.B == u && cfg.B * cfg.C == v))
      throw std::invalid_argument("stale overlap config: leading monomials changed");
    Poly<K> s = g1 * cfg.C;
    s.scale(g1.lc(order).inverse());
    Poly<K> t = cfg.A * g2;
    t.scale(g2.lc(order).inverse());
    return s - t;
  }
  if (!((cfg.A * u) * cfg.C == v))
    throw std::invalid_argument("stale overlap config: leading monomials changed");
  Poly<K> s = g2;
  s.scale(g2.lc(order).inverse());
  Poly<K> t = (cfg.A * g1) * cfg.C;
  t.scale(g1.lc(order).inverse());
  return s - t;
}

template <ScalarField K>
struct GBCertificate {
  OverlapConfig config;
  Poly<K> element;    // the overlap element itself
  Poly<K> remainder;  // its nonzero normal form
};

template <ScalarField K>
struct GBReport {
  bool verified = false;
  long long maxdeg = 0;
  std::optional<GBCertificate<K>> certificate;
  bool complete_beyond_truncation = false;
  std::size_t configs_checked = 0;
  std::size_t configs_skipped = 0;  // overlap word above the truncation

  bool conclusive() const { return !verified || configs_skipped == 0; }
};

namespace detail {

// All configs for the basis, sorted by overlap-word degree, then the word,
// then kind and position data, so reports are deterministic.
template <ScalarField K>
std::vector<OverlapConfig> all_configs(const std::vector<Poly<K>>& basis,
                                       const WordOrder& order) {
  std::vector<Word> lms;
  for (const auto& g : basis) lms.push_back(g.lm(order));
  std::vector<OverlapConfig> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (auto cfg : overlaps(lms[i], lms[j])) {
        cfg.i = i;
        cfg.j = j;
        out.push_back(std::move(cfg));
      }
  std::stable_sort(out.begin(), out.end(),
                   [&](const OverlapConfig& a, const OverlapConfig& b) {
                     Word wa = a.overlap_word(lms[a.i], lms[a.j]);
                     Word wb = b.overlap_word(lms[b.i], lms[b.j]);
                     long long da = order.degree(wa), db = order.degree(wb);
                     if (da != db) return da < db;
                     if (!(wa == wb)) return wa < wb;
                     if (a.kind != b.kind)
                       return a.kind < b.kind;
                     if (a.i != b.i) return a.i < b.i;
                     if (a.j != b.j) return a.j < b.j;
                     return a.A < b.A;
                   });
  return out;
}

template <ScalarField K>
bool weighted_homogeneous(const std::vector<Poly<K>>& basis,
                          const GradedSpec& grading) {
  for (const auto& g : basis) {
    long long d = -1;
    for (const auto& [w, c] : g.terms()) {
      long long dw = grading.degree(w);
      if (d < 0) d = dw;
      else if (d != dw) return false;
    }
  }
  return true;
}

}  // namespace detail

// Verifies that every overlap element with overlap word of weighted degree
// <= maxdeg reduces to zero. A nonzero remainder refutes with a replayable
// certificate. The completeness flag follows the homogeneous criterion;
// configs_skipped tells whether any configuration exceeded the truncation.
template <ScalarField K>
GBReport<K> check_gb(const std::vector<Poly<K>>& basis, const WordOrder& order,
                     long long maxdeg) {
  GBReport<K> rep;
  rep.maxdeg = maxdeg;
  std::vector<Word> lms;
  long long max_lm_deg = 0;
  for (const auto& g : basis) {
    lms.push_back(g.lm(order));
    max_lm_deg = std::max(max_lm_deg, order.degree(lms.back()));
  }
  rep.complete_beyond_truncation =
      detail::weighted_homogeneous(basis, order.grading()) &&
      maxdeg >= 2 * max_lm_deg;

  for (const auto& cfg : detail::all_configs(basis, order)) {
    Word w = cfg.overlap_word(lms[cfg.i], lms[cfg.j]);
    if (order.degree(w) > maxdeg) {
      ++rep.configs_skipped;
      continue;
    }
    ++rep.configs_checked;
    Poly<K> s = overlap_element(basis[cfg.i], basis[cfg.j], cfg, order);
    Poly<K> r = normal_form(s, basis, order);
    if (!r.is_zero()) {
      rep.verified = false;
      rep.certificate = GBCertificate<K>{cfg, std::move(s), std::move(r)};
      return rep;
    }
  }
  rep.verified = true;
  return rep;
}

// Discards members whose leading monomial is divisible by another member's
// leading monomial (first occurrence wins on equal monomials).
template <ScalarField K>
std::vector<Poly<K>> minimalize(const std::vector<Poly<K>>& basis,
                                const WordOrder& order) {
  std::vector<Word> lms;
  for (const auto& g : basis) lms.push_back(g.lm(order));
  std::vector<Poly<K>> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
      if (i == j) continue;
      if (!side_division(lms[j], lms[i], Side::two)) continue;
      // Mutual divisibility means equal monomials: keep the earliest.
      if (lms[i] == lms[j]) drop = j < i;
      else drop = true;
    }
    if (!drop) out.push_back(basis[i]);
  }
  return out;
}

template <ScalarField K>
struct CompletionResult {
  std::vector<Poly<K>> basis;  // monic, LM-reduced, tails reduced, sorted
  bool truncated = false;      // some overlap word exceeded maxdeg
};

// Degree-truncated completion: processes overlap configurations ascending
// by overlap-word degree (FIFO within a degree), adjoining monic nonzero
// normal forms, then interreduces. Deterministic by construction.
template <ScalarField K>
CompletionResult<K> complete(const std::vector<Poly<K>>& gens,
                             const WordOrder& order, long long maxdeg) {
  CompletionResult<K> res;
  std::vector<Poly<K>> basis;
  std::vector<Word> lms;
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    basis.push_back(g.monic(order));
    lms.push_back(basis.back().lm(order));
    if (order.degree(lms.back()) > maxdeg)
      throw std::invalid_argument("maxdeg below a generator's leading degree");
  }

  struct Pending {
    long long degree;
    std::size_t seq;
    OverlapConfig cfg;
  };
  auto later = [](const Pending& a, const Pending& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.seq > b.seq;
  };
  std::priority_queue<Pending, std::vector<Pending>, decltype(later)> queue(
      later);
  std::size_t seq = 0;
  auto enqueue_pair = [&](std::size_t i, std::size_t j) {
    for (auto cfg : overlaps(lms[i], lms[j])) {
      cfg.i = i;
      cfg.j = j;
      long long d = order.degree(cfg.overlap_word(lms[i], lms[j]));
      if (d > maxdeg) {
        res.truncated = true;
        continue;
      }
      queue.push({d, seq++, std::move(cfg)});
    }
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) enqueue_pair(i, j);

  while (!queue.empty()) {
    OverlapConfig cfg = queue.top().cfg;
    queue.pop();
    Poly<K> s = overlap_element(basis[cfg.i], basis[cfg.j], cfg, order);
    Poly<K> r = normal_form(s, basis, order);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(order));
    lms.push_back(basis.back().lm(order));
    const std::size_t k = basis.size() - 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      enqueue_pair(i, k);
      if (i != k) enqueue_pair(k, i);
    }
  }

  // Interreduce: minimal leading monomials, then fully reduced tails.
  std::vector<Poly<K>> kept = minimalize(basis, order);
  std::vector<Poly<K>> reduced;
  for (const auto& g : kept) {
    Poly<K> tail = g - g.lt(order);
    Poly<K> out = g.lt(order) + normal_form(tail, kept, order);
    reduced.push_back(std::move(out));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly<K>& a, const Poly<K>& b) {
              return order.less(a.lm(order), b.lm(order));
            });
  res.basis = std::move(reduced);
  return res;
}

// Triangularized span of { w*g*s : g in G, all term degrees <= maxdeg },
// pivoted on leading words. Independent of the division path: membership
// is decided by linear algebra over the word basis alone.
template <ScalarField K>
class IdealSpan {
 public:
  IdealSpan(const std::vector<Poly<K>>& gens, const WordOrder& order,
            long long maxdeg)
      : order_(order), maxdeg_(maxdeg) {
    const GradedSpec& grading = order.grading();
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      const long long dg = g.degree(grading);
      if (dg > maxdeg) continue;
      std::vector<Word> mults = enumerate_words(grading, maxdeg - dg);
      for (const auto& w : mults) {
        long long dw = grading.degree(w);
        for (const auto& s : mults) {
          if (dw + grading.degree(s) + dg > maxdeg) continue;
          insert((w * g) * s);
        }
      }
    }
  }

  // Head-reduction against the pivot rows; zero means membership with a
  // witness of degree <= maxdeg.
  bool contains(const Poly<K>& f) const {
    Poly<K> r = f;
    while (!r.is_zero()) {
      auto it = pivots_.find(r.lm(order_));
      if (it == pivots_.end()) return false;
      r -= r.lc(order_) * it->second;
    }
    return true;
  }

  // Leading words of the triangularized span, ascending under the order.
  std::vector<Word> pivot_words() const {
    std::vector<Word> out;
    for (const auto& [w, row] : pivots_) out.push_back(w);
    std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
      return order_.less(a, b);
    });
    return out;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  void insert(Poly<K> row) {
    while (!row.is_zero()) {
      const Word lm = row.lm(order_);
      auto it = pivots_.find(lm);
      if (it == pivots_.end()) {
        pivots_.emplace(lm, row.monic(order_));
        return;
      }
      row -= row.lc(order_) * it->second;
    }
  }

  const WordOrder& order_;
  long long maxdeg_;
  std::map<Word, Poly<K>> pivots_;
};

// True iff f lies in the span of degree-<= maxdeg multiples of G; complete
// for membership witnesses of degree <= maxdeg.
template <ScalarField K>
bool membership_oracle(const Poly<K>& f, const std::vector<Poly<K>>& gens,
                       const WordOrder& order, long long maxdeg) {
  return IdealSpan<K>(gens, order, maxdeg).contains(f);
}

template <ScalarField K>
struct Prop26Report {
  GBReport<K> direct;                  // check_gb on G
  GBReport<K> lh_overlaps;             // check_gb on LH(G)
  bool staircase_match = false;        // LM(G) covers the truncated staircase
  std::optional<Word> uncovered;       // witness when the staircases differ
  bool is_gb = false;
  bool lh_is_gb = false;

  bool conclusive() const {
    return direct.conclusive() && lh_overlaps.conclusive();
  }
};

// Leading-homogeneous correspondence: G is a Groebner basis iff LH(G) is a
// Groebner basis of the leading-homogeneous ideal. The LH verdict combines
// the overlap check on LH(G) with an independent staircase comparison
// against the triangularized span of G (the truncated image of the ideal).
template <ScalarField K>
Prop26Report<K> prop26_check(const std::vector<Poly<K>>& basis,
                             const WordOrder& order, long long maxdeg) {
  Prop26Report<K> rep;
  rep.direct = check_gb(basis, order, maxdeg);
  rep.is_gb = rep.direct.verified;

  std::vector<Poly<K>> lh;
  for (const auto& g : basis) lh.push_back(g.lh(order.grading()));
  rep.lh_overlaps = check_gb(lh, order, maxdeg);

  std::vector<Word> lms;
  for (const auto& g : basis) lms.push_back(g.lm(order));
  rep.staircase_match = true;
  IdealSpan<K> span(basis, order, maxdeg);
  for (const auto& p : span.pivot_words()) {
    if (!is_normal_word(p, lms, Side::two)) continue;
    rep.staircase_match = false;
    rep.uncovered = p;
    break;
  }
  rep.lh_is_gb = rep.lh_overlaps.verified && rep.staircase_match;
  return rep;
}

}  // namespace ncgb
