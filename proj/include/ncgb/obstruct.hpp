// Ordering diagnostics on a quotient's normal basis: exhaustive checks of
// the one-sided / two-sided monomial-ordering axioms for a concrete
// candidate ordering, the same-leading-monomial obstruction that rules out
// every ordering of a given sidedness at once, and a 2-SAT closure of the
// order constraints whose unsatisfiability is a sound global refutation.
#pragma once

#include <deque>
#include <functional>
#include <unordered_set>

#include "ncgb/quotient.hpp"

namespace ncgb {

using WordComparator =
    std::function<std::strong_ordering(const Word&, const Word&)>;

struct AxiomViolation {
  std::string axiom;  // LMO1, LMO2, RMO1, RMO2, MO1, MO2
  Word left, a, b, right;  // multipliers and the compared pair
  Word lm1, lm2;           // the offending leading words
};

struct AxiomReport {
  bool pass = true;
  std::size_t checks = 0;
  std::optional<AxiomViolation> violation;
};

namespace detail {

// Normal words sorted by the ambient ordering: the fixed deterministic
// enumeration order for all obstruction scans.
template <ScalarField K>
std::vector<Word> ambient_sorted(const QuotientAlgebra<K>& q) {
  std::vector<Word> ws = q.normal_basis();
  const WordOrder& ord = q.presentation().order;
  std::sort(ws.begin(), ws.end(),
            [&](const Word& a, const Word& b) { return ord.less(a, b); });
  return ws;
}

// Leading word of a product image under an arbitrary candidate comparator;
// empty optional for the zero product, the identity word for scalars.
template <ScalarField K>
std::optional<Word> product_lm(const QuotientAlgebra<K>& q, const Word& v,
                               const Word& w, const Word& s,
                               const WordComparator& cmp) {
  Poly<K> p = q.triple_product(v, w, s);
  if (p.is_zero()) return std::nullopt;
  const Word* best = nullptr;
  for (const auto& [t, c] : p.terms())
    if (!best || cmp(*best, t) == std::strong_ordering::less) best = &t;
  return *best;
}

}  // namespace detail

// Exhaustively verifies the compatibility axioms of the given side for one
// candidate ordering over all products within the degree bound, honoring
// the exclusions for products that vanish or land in the scalars. Returns
// the first violating tuple in enumeration order.
template <ScalarField K>
AxiomReport verify_order_axioms(const QuotientAlgebra<K>& q, Side side,
                                long long maxdeg,
                                const WordComparator& custom = {}) {
  WordComparator cmp =
      custom ? custom : [&q](const Word& a, const Word& b) {
        return q.compare(a, b);
      };
  const auto& grading = q.presentation().grading;
  const long long bound = std::min(maxdeg, q.truncation());
  std::vector<Word> words = detail::ambient_sorted(q);
  auto deg = [&](const Word& w) { return grading.degree(w); };

  AxiomReport rep;
  const std::string one_names[3] = {"MO1", "LMO1", "RMO1"};
  const std::string two_names[3] = {"MO2", "LMO2", "RMO2"};
  const std::size_t name_ix =
      side == Side::two ? 0 : (side == Side::left ? 1 : 2);

  // Multiplier configurations (v, s): left keeps s = 1, right keeps v = 1.
  std::vector<std::pair<Word, Word>> mults;
  for (const auto& v : words)
    for (const auto& s : words) {
      if (side == Side::left && !s.is_one()) continue;
      if (side == Side::right && !v.is_one()) continue;
      if (deg(v) + deg(s) > bound) continue;
      mults.emplace_back(v, s);
    }
  std::stable_sort(mults.begin(), mults.end(),
                   [&](const auto& a, const auto& b) {
                     long long da = deg(a.first) + deg(a.second);
                     long long db = deg(b.first) + deg(b.second);
                     return da < db;
                   });

  for (const auto& [v, s] : mults) {
    const long long budget = bound - deg(v) - deg(s);
    // (MO1 family) w < u implies LM(vws) < LM(vus).
    if (!(v.is_one() && s.is_one())) {
      for (const auto& a : words) {
        if (deg(a) > budget) continue;
        for (const auto& b : words) {
          if (deg(b) > budget || b == a) continue;
          if (cmp(a, b) != std::strong_ordering::less) continue;
          auto m1 = detail::product_lm(q, v, a, s, cmp);
          auto m2 = detail::product_lm(q, v, b, s, cmp);
          if (!m1 || !m2 || m1->is_one() || m2->is_one()) continue;
          ++rep.checks;
          if (cmp(*m1, *m2) != std::strong_ordering::less) {
            rep.pass = false;
            rep.violation =
                AxiomViolation{one_names[name_ix], v, a, b, s, *m1, *m2};
            return rep;
          }
        }
      }
      // (MO2 family) u = LM(vws) with a nontrivial cofactor implies w < u.
      for (const auto& w : words) {
        if (deg(w) > budget) continue;
        auto m = detail::product_lm(q, v, w, s, cmp);
        if (!m || m->is_one()) continue;
        ++rep.checks;
        if (cmp(w, *m) != std::strong_ordering::less) {
          rep.pass = false;
          rep.violation =
              AxiomViolation{two_names[name_ix], v, w, *m, s, *m, *m};
          return rep;
        }
      }
    }
  }
  return rep;
}

template <ScalarField K>
struct SameLMWitness {
  Word w, u1, u2, s, m;
  K c1, c2;
};

// Searches for normal words w, s and u1 != u2 (both nontrivial) whose
// products w*u1*s and w*u2*s are nonzero scalar multiples of the same
// basis word m != 1. Such a collision refutes every monomial ordering of
// the given sidedness on this basis: whichever of u1, u2 any candidate
// ordering makes smaller, the compatibility axiom forces m < m.
template <ScalarField K>
std::optional<SameLMWitness<K>> same_lm_obstruction(
    const QuotientAlgebra<K>& q, long long maxdeg, Side side) {
  const auto& grading = q.presentation().grading;
  const long long bound = std::min(maxdeg, q.truncation());
  std::vector<Word> words = detail::ambient_sorted(q);
  auto deg = [&](const Word& w) { return grading.degree(w); };

  // Multiplier blocks ascending by (total degree, right degree, words).
  std::vector<std::pair<Word, Word>> mults;
  for (const auto& w : words)
    for (const auto& s : words) {
      if (side == Side::left && !s.is_one()) continue;
      if (side == Side::right && !w.is_one()) continue;
      if (w.is_one() && s.is_one()) continue;
      if (deg(w) + deg(s) >= bound) continue;
      mults.emplace_back(w, s);
    }
  std::stable_sort(mults.begin(), mults.end(),
                   [&](const auto& a, const auto& b) {
                     long long da = deg(a.first) + deg(a.second);
                     long long db = deg(b.first) + deg(b.second);
                     if (da != db) return da < db;
                     return deg(a.second) < deg(b.second);
                   });

  const WordOrder& ambient = q.presentation().order;
  for (const auto& [w, s] : mults) {
    const long long budget = bound - deg(w) - deg(s);
    // All single-term products of this block, grouped by the product word;
    // u runs ascending, so each group lists its words smallest first.
    std::map<Word, std::vector<std::pair<Word, K>>> groups;
    for (const auto& u : words) {
      if (u.is_one() || deg(u) > budget) continue;
      Poly<K> p = q.triple_product(w, u, s);
      if (p.term_count() != 1) continue;
      const auto& [m, c] = *p.terms().begin();
      if (m.is_one()) continue;
      groups[m].emplace_back(u, c);
    }
    // Report the collision with the smallest product word.
    const Word* best = nullptr;
    for (const auto& [m, us] : groups) {
      if (us.size() < 2) continue;
      if (!best || ambient.less(m, *best)) best = &m;
    }
    if (best) {
      const auto& us = groups.at(*best);
      return SameLMWitness<K>{w,           us[0].first, us[1].first, s,
                              *best,       us[0].second, us[1].second};
    }
  }
  return std::nullopt;
}

struct SatResult {
  bool sat = true;
  std::size_t atoms = 0;
  std::size_t clauses = 0;
  std::vector<std::string> cycle;  // rendered contradiction when unsat
};

namespace detail {

// Iterative Tarjan strongly-connected components.
inline std::vector<int> tarjan_scc(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1), low(n, 0), idx(n, -1), stk;
  std::vector<bool> on(n, false);
  int counter = 0, comps = 0;
  std::vector<std::pair<int, std::size_t>> frame;
  for (int root = 0; root < n; ++root) {
    if (idx[root] != -1) continue;
    frame.emplace_back(root, 0);
    while (!frame.empty()) {
      auto& [v, ei] = frame.back();
      if (ei == 0) {
        idx[v] = low[v] = counter++;
        stk.push_back(v);
        on[v] = true;
      }
      bool descended = false;
      while (ei < adj[v].size()) {
        int u = adj[v][ei++];
        if (idx[u] == -1) {
          frame.emplace_back(u, 0);
          descended = true;
          break;
        }
        if (on[u]) low[v] = std::min(low[v], idx[u]);
      }
      if (descended) continue;
      if (low[v] == idx[v]) {
        for (;;) {
          int u = stk.back();
          stk.pop_back();
          on[u] = false;
          comp[u] = comps;
          if (u == v) break;
        }
        ++comps;
      }
      int child = v;
      frame.pop_back();
      if (!frame.empty())
        low[frame.back().first] =
            std::min(low[frame.back().first], low[child]);
    }
  }
  return comp;
}

}  // namespace detail

// Boolean closure of the order constraints: one atom per unordered pair of
// normal words; every single-term product pair emits the implication
// (u1 < u2  =>  n1 < n2), and every product with a nontrivial cofactor
// emits the unit clause (w < m). Unsatisfiability refutes every monomial
// ordering of the side globally; satisfiability is inconclusive beyond the
// truncation.
template <ScalarField K>
SatResult ordering_sat(const QuotientAlgebra<K>& q, long long maxdeg,
                       Side side) {
  const auto& pres = q.presentation();
  const auto& grading = pres.grading;
  const long long bound = std::min(maxdeg, q.truncation());
  std::vector<Word> words = detail::ambient_sorted(q);
  auto deg = [&](const Word& w) { return grading.degree(w); };

  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k], k);

  SatResult res;
  const std::size_t n = words.size();
  auto atom = [&](std::size_t i, std::size_t j) {
    // Atom for the unordered pair; value true means words[i] < words[j]
    // for i < j.
    return i < j ? i * n + j : j * n + i;
  };
  std::map<std::size_t, int> atom_ids;
  auto literal = [&](std::size_t i, std::size_t j) {
    std::size_t a = atom(i, j);
    auto [it, fresh] = atom_ids.emplace(a, static_cast<int>(atom_ids.size()));
    return 2 * it->second + (i < j ? 0 : 1);
  };

  std::vector<std::pair<int, int>> edges;
  std::unordered_set<std::uint64_t> edge_seen;
  auto add_implication = [&](int from, int to) {
    if (from == to) return;
    std::uint64_t key = (static_cast<std::uint64_t>(from) << 32) |
                        static_cast<std::uint32_t>(to);
    if (!edge_seen.insert(key).second) return;
    edges.emplace_back(from, to);
    edges.emplace_back(to ^ 1, from ^ 1);
    ++res.clauses;
  };

  auto render = [&](int lit) {
    // Decode back to "u < v".
    for (const auto& [a, id] : atom_ids)
      if (id == lit / 2) {
        std::size_t i = a / n, j = a % n;
        if (lit & 1) std::swap(i, j);
        return render_word(words[i], pres.gens) + " < " +
               render_word(words[j], pres.gens);
      }
    return std::string("?");
  };

  // Multiplier configurations for the side.
  std::vector<std::pair<Word, Word>> mults;
  for (const auto& w : words)
    for (const auto& s : words) {
      if (side == Side::left && !s.is_one()) continue;
      if (side == Side::right && !w.is_one()) continue;
      if (deg(w) + deg(s) > bound) continue;
      mults.emplace_back(w, s);
    }

  for (const auto& [w, s] : mults) {
    const long long budget = bound - deg(w) - deg(s);
    const bool nontrivial = !(w.is_one() && s.is_one());
    // Single-term product table for this configuration.
    std::vector<std::pair<std::size_t, Word>> table;  // (u index, m)
    for (std::size_t k = 0; k < n; ++k) {
      if (deg(words[k]) > budget) continue;
      Poly<K> p = q.triple_product(w, words[k], s);
      if (p.term_count() != 1) continue;
      const Word& m = p.terms().begin()->first;
      if (m.is_one()) continue;
      // Unit clause from the MO2 family.
      if (nontrivial) {
        if (m == words[k]) {
          res.sat = false;
          res.cycle = {render_word(words[k], pres.gens) + " < " +
                       render_word(m, pres.gens) +
                       " forced by a product with a nontrivial cofactor"};
          res.atoms = atom_ids.size();
          return res;
        }
        int lit = literal(index.at(words[k]), index.at(m));
        add_implication(lit ^ 1, lit);
      }
      table.emplace_back(k, m);
    }
    // Implications from the MO1 family, in both orientations of the pair.
    for (std::size_t a = 0; a < table.size(); ++a)
      for (std::size_t b = a + 1; b < table.size(); ++b) {
        const auto& [ia, ma] = table[a];
        const auto& [ib, mb] = table[b];
        if (ma == mb) continue;  // same-LM collisions live in obstruct
        int from = literal(ia, ib);
        int to = literal(index.at(ma), index.at(mb));
        add_implication(from, to);
        add_implication(from ^ 1, to ^ 1);
      }
  }

  res.atoms = atom_ids.size();
  // 2-SAT via strongly connected components.
  std::vector<std::vector<int>> adj(2 * atom_ids.size());
  for (const auto& [f, t] : edges) adj[f].push_back(t);
  auto comp = detail::tarjan_scc(adj);
  int bad = -1;
  for (std::size_t v = 0; v + 1 < 2 * atom_ids.size(); v += 2)
    if (comp[v] == comp[v + 1]) {
      bad = static_cast<int>(v);
      break;
    }
  if (bad < 0) return res;

  res.sat = false;
  // Witness: a path bad -> ~bad -> bad through the implication graph.
  auto path = [&](int from, int to) {
    std::vector<int> prev(adj.size(), -1);
    std::deque<int> queue{from};
    prev[from] = from;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (v == to) break;
      for (int u : adj[v])
        if (prev[u] == -1) {
          prev[u] = v;
          queue.push_back(u);
        }
    }
    std::vector<int> out;
    for (int v = to; v != from; v = prev[v]) out.push_back(v);
    out.push_back(from);
    std::reverse(out.begin(), out.end());
    return out;
  };
  for (int lit : path(bad, bad ^ 1)) res.cycle.push_back(render(lit));
  for (int lit : path(bad ^ 1, bad)) res.cycle.push_back(render(lit));
  return res;
}

}  // namespace ncgb
