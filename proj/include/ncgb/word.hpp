// Words of the free monoid on n generators. The empty word is the identity
// monomial 1. Generators are addressed by 0-based index into the owning
// presentation's name table.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace ncgb {

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint32_t> seq) : seq_(std::move(seq)) {}
  static Word one() { return Word(); }
  static Word letter(std::uint32_t g) { return Word({g}); }
  static Word power(std::uint32_t g, std::size_t e) {
    return Word(std::vector<std::uint32_t>(e, g));
  }

  std::size_t length() const { return seq_.size(); }
  bool is_one() const { return seq_.empty(); }
  std::uint32_t at(std::size_t i) const { return seq_[i]; }
  const std::vector<std::uint32_t>& letters() const { return seq_; }

  long long degree(std::span<const long long> weights) const {
    long long d = 0;
    for (auto g : seq_) d += weights[g];
    return d;
  }

  Word operator*(const Word& o) const {
    std::vector<std::uint32_t> s;
    s.reserve(seq_.size() + o.seq_.size());
    s.insert(s.end(), seq_.begin(), seq_.end());
    s.insert(s.end(), o.seq_.begin(), o.seq_.end());
    return Word(std::move(s));
  }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<std::uint32_t>(seq_.begin() + pos,
                                           seq_.begin() + pos + len));
  }
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const {
    return subword(seq_.size() - len, len);
  }

  bool matches_at(const Word& pat, std::size_t pos) const {
    if (pos + pat.length() > length()) return false;
    for (std::size_t k = 0; k < pat.length(); ++k)
      if (seq_[pos + k] != pat.seq_[k]) return false;
    return true;
  }

  // Start positions of every occurrence of pat, leftmost first.
  std::vector<std::size_t> occurrences(const Word& pat) const {
    std::vector<std::size_t> out;
    if (pat.is_one() || pat.length() > length()) return out;
    for (std::size_t pos = 0; pos + pat.length() <= length(); ++pos)
      if (matches_at(pat, pos)) out.push_back(pos);
    return out;
  }

  bool has_suffix(const Word& pat) const {
    return pat.length() <= length() && matches_at(pat, length() - pat.length());
  }
  bool has_prefix(const Word& pat) const { return matches_at(pat, 0); }

  // Canonical key order (length, then letters); used only for container
  // keys, never as the monomial ordering.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.seq_.size() != b.seq_.size())
      return a.seq_.size() <=> b.seq_.size();
    for (std::size_t k = 0; k < a.seq_.size(); ++k)
      if (a.seq_[k] != b.seq_[k]) return a.seq_[k] <=> b.seq_[k];
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Word& a, const Word& b) {
    return a.seq_ == b.seq_;
  }

 private:
  std::vector<std::uint32_t> seq_;
};

// All cofactor pairs (w, s) with v = w*u*s, leftmost occurrence first.
// An empty result means u does not divide v. u = 1 divides everything and
// would yield length(v)+1 trivial splits; callers never ask for that here,
// but it is handled consistently.
inline std::vector<std::pair<Word, Word>> word_divisions(const Word& u,
                                                         const Word& v) {
  std::vector<std::pair<Word, Word>> out;
  if (u.length() > v.length()) return out;
  for (std::size_t pos = 0; pos + u.length() <= v.length(); ++pos)
    if (v.matches_at(u, pos))
      out.emplace_back(v.prefix(pos),
                       v.suffix(v.length() - pos - u.length()));
  return out;
}

}  // namespace ncgb
