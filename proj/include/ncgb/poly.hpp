// Sparse noncommutative polynomials: finite maps Word -> nonzero scalar.
// Addition cancels to absence; the zero polynomial is the empty map.
#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncgb/order.hpp"
#include "ncgb/scalar.hpp"
#include "ncgb/word.hpp"

namespace ncgb {

template <ScalarField K>
class Poly {
 public:
  using TermMap = std::map<Word, K>;

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly term(Word w, K c) {
    Poly f;
    if (!c.is_zero()) f.terms_.emplace(std::move(w), std::move(c));
    return f;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const K* coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(const Word& w, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }

  Poly& scale(const K& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
  }
  friend Poly operator*(const K& c, Poly f) { return f.scale(c); }

  // Noncommutative product; distributes over word concatenation.
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
  }
  friend Poly operator*(const Word& w, Poly f) {
    Poly r;
    for (auto& [u, c] : f.terms_) r.terms_.emplace(w * u, std::move(c));
    return r;
  }
  friend Poly operator*(Poly f, const Word& w) {
    Poly r;
    for (auto& [u, c] : f.terms_) r.terms_.emplace(u * w, std::move(c));
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }

  const Word& lm(const WordOrder& order) const {
    return leading(order)->first;
  }
  const K& lc(const WordOrder& order) const { return leading(order)->second; }
  Poly lt(const WordOrder& order) const {
    auto it = leading(order);
    return term(it->first, it->second);
  }
  Poly monic(const WordOrder& order) const {
    Poly r = *this;
    r.scale(lc(order).inverse());
    return r;
  }

  long long degree(const GradedSpec& grading) const {
    if (is_zero()) throw std::invalid_argument("degree of zero polynomial");
    long long d = 0;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      long long dw = grading.degree(w);
      if (first || dw > d) d = dw;
      first = false;
    }
    return d;
  }

  // Gamma-leading homogeneous part: the terms of maximal weighted degree.
  Poly lh(const GradedSpec& grading) const {
    const long long d = degree(grading);  // throws on zero
    Poly r;
    for (const auto& [w, c] : terms_)
      if (grading.degree(w) == d) r.terms_.emplace(w, c);
    return r;
  }

  // Terms sorted descending under the given order.
  std::vector<std::pair<Word, K>> terms_descending(
      const WordOrder& order) const {
    std::vector<std::pair<Word, K>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
      return order.greater(a.first, b.first);
    });
    return v;
  }

  explicit operator bool() const { return !is_zero(); }

 private:
  typename TermMap::const_iterator leading(const WordOrder& order) const {
    if (terms_.empty())
      throw std::invalid_argument("no leading term: zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.greater(it->first, best->first)) best = it;
    return best;
  }

  TermMap terms_;
};

}  // namespace ncgb
