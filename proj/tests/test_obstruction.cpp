#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "ncgb/obstruct.hpp"

using namespace ncgb;

namespace {

Word wd(std::initializer_list<std::uint32_t> l) {
  return Word(std::vector<std::uint32_t>(l));
}

// A seeded total order on normal words: degree first, random tie-break.
// Orders produced this way are total but typically violate the
// multiplication axioms; they sample the space of candidate orderings.
WordComparator random_total_order(const QuotientAlgebra<Rational>& q,
                                  std::uint64_t seed) {
  auto words = q.normal_basis();
  const auto& grading = q.presentation().grading;
  std::mt19937_64 rng(seed);
  std::stable_sort(words.begin(), words.end(),
                   [&](const Word& a, const Word& b) {
                     return grading.degree(a) < grading.degree(b);
                   });
  for (std::size_t d = 0; d < words.size();) {
    std::size_t e = d;
    while (e < words.size() &&
           grading.degree(words[e]) == grading.degree(words[d]))
      ++e;
    for (std::size_t k = e - 1; k > d; --k)
      std::swap(words[d + rng() % (k - d + 1)], words[k]);
    d = e;
  }
  auto rank = std::make_shared<std::map<Word, std::size_t>>();
  for (std::size_t k = 0; k < words.size(); ++k) rank->emplace(words[k], k);
  return [rank](const Word& a, const Word& b) {
    return rank->at(a) <=> rank->at(b);
  };
}

}  // namespace

TEST_CASE("Example 1 passes the left axioms and fails the others") {
  auto q = QuotientAlgebra<Rational>::build(testing_support::ex1("2", "3", "1"), 5);
  CHECK(verify_order_axioms(q, Side::left, 4).pass);

  auto two = verify_order_axioms(q, Side::two, 4);
  REQUIRE_FALSE(two.pass);
  CHECK(two.violation->axiom == "MO1");

  auto right = verify_order_axioms(q, Side::right, 4);
  CHECK_FALSE(right.pass);
}

TEST_CASE("Example 2 passes the right axioms and fails the others") {
  auto q = QuotientAlgebra<Rational>::build(testing_support::ex2("1", "2", "3"), 5);
  CHECK(q.classification().has(TypeTag::RightType));
  CHECK(q.scheme() == Scheme::degrevlex);
  CHECK(verify_order_axioms(q, Side::right, 4).pass);
  CHECK_FALSE(verify_order_axioms(q, Side::left, 4).pass);
  CHECK_FALSE(verify_order_axioms(q, Side::two, 4).pass);
}

TEST_CASE("two-sided quotients pass every side under all three schemes") {
  for (Scheme s : {Scheme::lex, Scheme::deglex, Scheme::degrevlex}) {
    auto q = QuotientAlgebra<Rational>::build(testing_support::quantum_plane(),
                                              6, s);
    CHECK(verify_order_axioms(q, Side::two, 5).pass);
    CHECK(verify_order_axioms(q, Side::left, 5).pass);
    CHECK(verify_order_axioms(q, Side::right, 5).pass);
  }
  // Left type admits lex as well as deglex.
  auto q1 = QuotientAlgebra<Rational>::build(testing_support::ex1("2", "3", "1"),
                                             4, Scheme::lex);
  CHECK(verify_order_axioms(q1, Side::left, 4).pass);
  CHECK_THROWS(QuotientAlgebra<Rational>::build(
      testing_support::ex1("2", "3", "1"), 4, Scheme::degrevlex));
}

TEST_CASE("monomial-only quotients keep the ambient two-sided ordering") {
  auto pres = testing_support::pres_from(
      "field Q\ngens x y\norder deglex x y\nrel x^2\nrel y*x*y\n");
  auto q = QuotientAlgebra<Rational>::build(pres, 6);
  CHECK(q.classification().has(TypeTag::MonomialOnly));
  CHECK(verify_order_axioms(q, Side::two, 5).pass);
}

TEST_CASE("same-LM witness for Example 5 with mu = 0") {
  auto q = QuotientAlgebra<Rational>::build_basic(
      testing_support::ex5("1", "0", "1"), 5);
  auto w = same_lm_obstruction(q, 4, Side::two);
  REQUIRE(w.has_value());
  CHECK(w->w == wd({2}));        // X3
  CHECK(w->u1 == wd({1}));       // X2
  CHECK(w->u2 == wd({1, 1}));    // X2^2
  CHECK(w->s == Word::one());
  CHECK(w->m == wd({2}));        // X3
  // The witness replays.
  auto p1 = q.triple_product(w->w, w->u1, w->s);
  auto p2 = q.triple_product(w->w, w->u2, w->s);
  CHECK(p1 == Poly<Rational>::term(w->m, w->c1));
  CHECK(p2 == Poly<Rational>::term(w->m, w->c2));
}

TEST_CASE("same-LM witness for Example 6 with lambda = 0") {
  auto q = QuotientAlgebra<Rational>::build_basic(
      testing_support::ex6("0", "1", "1"), 5);
  auto w = same_lm_obstruction(q, 4, Side::two);
  REQUIRE(w.has_value());
  CHECK(w->w == Word::one());
  CHECK(w->u1 == wd({1}));       // X2
  CHECK(w->u2 == wd({1, 1}));    // X2^2
  CHECK(w->s == wd({0}));        // X1
  CHECK(w->m == wd({0}));        // X1
}

TEST_CASE("same-LM witness for Example 7 case (5)") {
  auto q = QuotientAlgebra<Rational>::build_basic(
      testing_support::ex7("0", "1", "1", "X1"), 5);
  auto w = same_lm_obstruction(q, 4, Side::two);
  REQUIRE(w.has_value());
  CHECK(w->w == wd({2}));        // X3
  CHECK(w->u1 == wd({0}));       // X1
  CHECK(w->u2 == wd({0, 0}));    // X1^2
  CHECK(w->s == Word::one());
  CHECK(w->m == wd({2}));        // X3
}

TEST_CASE("the quantum plane has no same-LM obstruction") {
  auto q = QuotientAlgebra<Rational>::build(testing_support::quantum_plane(), 6);
  CHECK_FALSE(same_lm_obstruction(q, 6, Side::two).has_value());
  CHECK_FALSE(same_lm_obstruction(q, 6, Side::left).has_value());
  CHECK_FALSE(same_lm_obstruction(q, 6, Side::right).has_value());
}

TEST_CASE("a same-LM witness defeats every sampled candidate order") {
  auto q = QuotientAlgebra<Rational>::build_basic(
      testing_support::ex5("1", "0", "1"), 4);
  REQUIRE(same_lm_obstruction(q, 4, Side::two).has_value());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto cmp = random_total_order(q, seed);
    auto rep = verify_order_axioms(q, Side::two, 4, cmp);
    CHECK_FALSE(rep.pass);
  }
}

TEST_CASE("order-constraint closure refutes Example 1 two-sided") {
  auto q = QuotientAlgebra<Rational>::build_basic(
      testing_support::ex1("2", "3", "1"), 3);
  auto res = ordering_sat(q, 3, Side::two);
  CHECK_FALSE(res.sat);
  CHECK(!res.cycle.empty());

  // The left side stays consistent, as the left theory demands.
  CHECK(ordering_sat(q, 3, Side::left).sat);
}

TEST_CASE("order-constraint closure refutes Example 2 two-sided") {
  auto q = QuotientAlgebra<Rational>::build_basic(
      testing_support::ex2("1", "2", "3"), 3);
  CHECK_FALSE(ordering_sat(q, 3, Side::two).sat);
  CHECK(ordering_sat(q, 3, Side::right).sat);
}

TEST_CASE("order-constraint closure refutes Example 3") {
  auto ex3 = testing_support::pres_from(
      "field Q\ngens X1 X2 X3 X4\norder deglex X1 X2 X3 X4\n"
      "rel X2*X1 - X1*X2\nrel X3*X1 - X2*X4\nrel X3*X2 - X1*X4\n"
      "rel X4*X1 - X2*X3\nrel X4*X2 - X1*X3\nrel X4*X3 - X3*X4\n");
  auto q = QuotientAlgebra<Rational>::build_basic(ex3, 3);
  auto res = ordering_sat(q, 3, Side::two);
  CHECK_FALSE(res.sat);
}

TEST_CASE("sat outcomes agree with the axiom checker") {
  // Unsat => the axioms fail for every sampled candidate order.
  auto q1 = QuotientAlgebra<Rational>::build_basic(
      testing_support::ex1("2", "3", "1"), 3);
  REQUIRE_FALSE(ordering_sat(q1, 3, Side::two).sat);
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK_FALSE(verify_order_axioms(q1, Side::two, 3,
                                    random_total_order(q1, seed)).pass);

  // Sat on a two-sided quotient whose induced order passes the axioms.
  auto qp = QuotientAlgebra<Rational>::build(testing_support::quantum_plane(), 5);
  CHECK(ordering_sat(qp, 4, Side::two).sat);
  CHECK(verify_order_axioms(qp, Side::two, 4).pass);
}
