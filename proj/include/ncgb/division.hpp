// Division in the free algebra by a list of divisors, from both sides or
// one side. Deterministic strategy: always reduce the order-greatest
// reducible word of the running polynomial; among matching divisors take
// the one with smallest leading monomial (ties by list index); among
// occurrences take the leftmost. Remainders are not made monic.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncgb/poly.hpp"

namespace ncgb {

enum class Side { two, left, right };

inline std::string to_string(Side s) {
  switch (s) {
    case Side::two: return "two";
    case Side::left: return "left";
    default: return "right";
  }
}

// One reduction step f -= coeff * left * g[divisor] * right. For one-sided
// division the unused cofactor stays the identity word.
template <ScalarField K>
struct QuotientTerm {
  K coeff;
  Word left;
  std::size_t divisor;
  Word right;
};

template <ScalarField K>
struct DivisionResult {
  std::vector<QuotientTerm<K>> quotients;
  Poly<K> remainder;
  std::size_t steps = 0;

  // Exact reconstruction of the input, for checks and traces.
  Poly<K> reconstruct(const std::vector<Poly<K>>& divisors) const {
    Poly<K> f = remainder;
    for (const auto& q : quotients)
      f += q.coeff * ((q.left * divisors[q.divisor]) * q.right);
    return f;
  }
};

// Division of a word by a leading monomial, honoring the side:
// two-sided: any interior occurrence; left: lm is a suffix (v = w*lm);
// right: lm is a prefix (v = lm*s).
inline std::optional<std::pair<Word, Word>> side_division(const Word& lm,
                                                          const Word& w,
                                                          Side side) {
  switch (side) {
    case Side::two: {
      auto occ = w.occurrences(lm);
      if (occ.empty()) return std::nullopt;
      std::size_t pos = occ.front();
      return std::make_pair(w.prefix(pos),
                            w.suffix(w.length() - pos - lm.length()));
    }
    case Side::left:
      if (!w.has_suffix(lm) ) return std::nullopt;
      return std::make_pair(w.prefix(w.length() - lm.length()), Word::one());
    case Side::right:
      if (!w.has_prefix(lm)) return std::nullopt;
      return std::make_pair(Word::one(), w.suffix(w.length() - lm.length()));
  }
  return std::nullopt;
}

template <ScalarField K>
DivisionResult<K> divide(const Poly<K>& f, const std::vector<Poly<K>>& divisors,
                         const WordOrder& order, Side side = Side::two) {
  std::vector<Word> lms;
  lms.reserve(divisors.size());
  for (const auto& g : divisors) lms.push_back(g.lm(order));

  DivisionResult<K> res;
  Poly<K> r = f;
  for (;;) {
    // Order-greatest reducible word of r, with its chosen divisor.
    const Word* target = nullptr;
    std::size_t chosen = 0;
    std::pair<Word, Word> cof;
    for (const auto& [w, c] : r.terms()) {
      if (target && !order.greater(w, *target)) continue;
      std::optional<std::size_t> best;
      std::pair<Word, Word> best_cof;
      for (std::size_t k = 0; k < divisors.size(); ++k) {
        auto d = side_division(lms[k], w, side);
        if (!d) continue;
        if (!best || order.less(lms[k], lms[*best])) {
          best = k;
          best_cof = *d;
        }
      }
      if (best) {
        target = &w;
        chosen = *best;
        cof = best_cof;
      }
    }
    if (!target) break;

    const K coeff = *r.coefficient(*target) / divisors[chosen].lc(order);
    r -= coeff * ((cof.first * divisors[chosen]) * cof.second);
    res.quotients.push_back({coeff, cof.first, chosen, cof.second});
    ++res.steps;
  }
  res.remainder = std::move(r);
  return res;
}

template <ScalarField K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& divisors,
                    const WordOrder& order, Side side = Side::two) {
  return divide(f, divisors, order, side).remainder;
}

inline bool is_normal_word(const Word& w, const std::vector<Word>& lms,
                           Side side = Side::two) {
  for (const auto& lm : lms)
    if (side_division(lm, w, side)) return false;
  return true;
}

// All normal words of weighted degree <= maxdeg: words divisible by no
// leading monomial, sorted ascending under the order. Subtrees below a
// non-normal word are pruned (every extension stays non-normal).
inline std::vector<Word> normal_words_upto(const std::vector<Word>& lms,
                                           const WordOrder& order,
                                           long long maxdeg) {
  const GradedSpec& grading = order.grading();
  const std::size_t n = grading.size();
  std::vector<Word> out;
  std::vector<std::uint32_t> cur;
  auto ends_with_lm = [&]() {
    Word w{std::vector<std::uint32_t>(cur)};
    for (const auto& lm : lms)
      if (w.has_suffix(lm)) return true;
    return false;
  };
  auto rec = [&](auto&& self, long long deg) -> void {
    out.emplace_back(std::vector<std::uint32_t>(cur));
    for (std::uint32_t g = 0; g < n; ++g) {
      long long d = deg + grading.weights[g];
      if (d > maxdeg) continue;
      cur.push_back(g);
      if (!ends_with_lm()) self(self, d);
      cur.pop_back();
    }
  };
  for (const auto& lm : lms)
    if (lm.is_one()) return {};  // the whole ring: no normal words
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [&](const Word& a, const Word& b) { return order.less(a, b); });
  return out;
}

template <ScalarField K>
std::vector<Word> normal_words(const std::vector<Poly<K>>& gb,
                               const WordOrder& order, long long maxdeg) {
  std::vector<Word> lms;
  for (const auto& g : gb) lms.push_back(g.lm(order));
  return normal_words_upto(lms, order, maxdeg);
}

}  // namespace ncgb
