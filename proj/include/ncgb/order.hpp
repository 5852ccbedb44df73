// Monomial orderings on free-monoid words. Only degree-first orderings are
// admitted: pure lex is not a well-ordering on words (y > xy > x^2y > ...)
// and would break the division algorithm's termination.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncgb/word.hpp"

namespace ncgb {

// Positive weight per generator; guarantees finitely many words per degree.
struct GradedSpec {
  std::vector<long long> weights;

  explicit GradedSpec(std::vector<long long> w) : weights(std::move(w)) {
    for (auto x : weights)
      if (x < 1) throw std::invalid_argument("generator weights must be >= 1");
  }
  static GradedSpec all_ones(std::size_t n) {
    return GradedSpec(std::vector<long long>(n, 1));
  }
  std::size_t size() const { return weights.size(); }
  long long degree(const Word& w) const { return w.degree(weights); }
};

enum class WordOrderKind { deglex, degrevlex };

inline std::string to_string(WordOrderKind k) {
  return k == WordOrderKind::deglex ? "deglex" : "degrevlex";
}

class WordOrder {
 public:
  // precedence lists generator indices smallest to largest.
  WordOrder(WordOrderKind kind, const std::vector<std::uint32_t>& precedence,
            GradedSpec grading)
      : kind_(kind), grading_(std::move(grading)) {
    const std::size_t n = grading_.size();
    if (precedence.size() != n)
      throw std::invalid_argument("precedence must list every generator once");
    rank_.assign(n, n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      std::uint32_t g = precedence[pos];
      if (g >= n || rank_[g] != n)
        throw std::invalid_argument("precedence must be a permutation");
      rank_[g] = static_cast<std::uint32_t>(pos);
    }
  }

  WordOrderKind kind() const { return kind_; }
  const GradedSpec& grading() const { return grading_; }
  std::size_t generator_count() const { return rank_.size(); }
  std::uint32_t rank(std::uint32_t g) const { return rank_[g]; }
  long long degree(const Word& w) const { return grading_.degree(w); }

  std::strong_ordering compare(const Word& a, const Word& b) const {
    const long long da = degree(a), db = degree(b);
    if (da != db) return da <=> db;
    if (kind_ == WordOrderKind::deglex) {
      // First difference left to right; larger generator, larger word.
      const std::size_t m = std::min(a.length(), b.length());
      for (std::size_t k = 0; k < m; ++k)
        if (a.at(k) != b.at(k)) return rank_[a.at(k)] <=> rank_[b.at(k)];
      return a.length() <=> b.length();  // unreachable at equal degree
    }
    // degrevlex: first difference right to left; the word holding the
    // smaller generator there is the larger word. Restricted to ordered
    // words this is the usual commutative degrevlex.
    const std::size_t m = std::min(a.length(), b.length());
    for (std::size_t k = 1; k <= m; ++k) {
      std::uint32_t ga = a.at(a.length() - k), gb = b.at(b.length() - k);
      if (ga != gb) return rank_[gb] <=> rank_[ga];
    }
    return b.length() <=> a.length();  // unreachable at equal degree
  }

  bool less(const Word& a, const Word& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const Word& a, const Word& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

 private:
  WordOrderKind kind_;
  GradedSpec grading_;
  std::vector<std::uint32_t> rank_;  // rank_[g] = position, 0 = smallest
};

inline WordOrderKind parse_word_order_kind(const std::string& s) {
  if (s == "deglex") return WordOrderKind::deglex;
  if (s == "degrevlex") return WordOrderKind::degrevlex;
  if (s == "lex")
    throw std::invalid_argument(
        "pure lex is not a well-ordering on free-monoid words; "
        "use deglex or degrevlex");
  throw std::invalid_argument("unknown ordering '" + s + "'");
}

// Every word of weighted degree <= maxdeg, in canonical key order.
inline std::vector<Word> enumerate_words(const GradedSpec& grading,
                                         long long maxdeg) {
  std::vector<Word> out;
  std::vector<std::uint32_t> cur;
  const std::size_t n = grading.size();
  auto rec = [&](auto&& self, long long deg) -> void {
    out.emplace_back(cur);
    for (std::uint32_t g = 0; g < n; ++g) {
      long long d = deg + grading.weights[g];
      if (d > maxdeg) continue;
      cur.push_back(g);
      self(self, d);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncgb
