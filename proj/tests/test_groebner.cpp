#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "ncgb/groebner.hpp"

using namespace ncgb;
using testing_support::RandomPolys;

namespace {

Word wd(std::initializer_list<std::uint32_t> l) {
  return Word(std::vector<std::uint32_t>(l));
}

std::vector<std::string> random_lambdas(std::size_t count,
                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 9), sign(0, 1);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::string s = sign(rng) ? "" : "-";
    s += std::to_string(num(rng));
    int d = den(rng);
    if (d > 1) s += "/" + std::to_string(d);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("overlap configurations between leading words") {
  // (X2X1, X1X1): the quantum-exterior pattern, one proper overlap.
  auto c1 = overlaps(wd({1, 0}), wd({0, 0}));
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].kind == OverlapConfig::Kind::proper);
  CHECK(c1[0].A == wd({1}));
  CHECK(c1[0].B == wd({0}));
  CHECK(c1[0].C == wd({0}));
  CHECK(c1[0].overlap_word(wd({1, 0}), wd({0, 0})) == wd({1, 0, 0}));

  // (yx, yx): only the trivial coincidence, excluded.
  CHECK(overlaps(wd({1, 0}), wd({1, 0})).empty());

  // (X2X1, X1X2): proper overlap with B = X1.
  auto c2 = overlaps(wd({1, 0}), wd({0, 1}));
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].overlap_word(wd({1, 0}), wd({0, 1})) == wd({1, 0, 1}));

  // yx against xyxy: a proper overlap through the suffix x, and the
  // inclusion of yx at position 1.
  auto c3 = overlaps(wd({1, 0}), wd({0, 1, 0, 1}));
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].kind == OverlapConfig::Kind::proper);
  CHECK(c3[0].B == wd({0}));
  CHECK(c3[1].kind == OverlapConfig::Kind::inclusion);
  CHECK(c3[1].A == wd({0}));
  CHECK(c3[1].C == wd({1}));

  // Self-overlap at an offset: xyx with itself.
  auto c4 = overlaps(wd({0, 1, 0}), wd({0, 1, 0}));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].kind == OverlapConfig::Kind::proper);
  CHECK(c4[0].B == wd({0}));
}

TEST_CASE("overlap elements cancel the shared word") {
  // S_{32,21} = g32*X1 - X3*g21 = l21*X3X1X2 - l32*X2X3X1.
  auto pres = testing_support::pres_from(
      "field Q\ngens X1 X2 X3\norder deglex X1 X2 X3\n"
      "rel X3*X2 - 5*X2*X3\nrel X2*X1 - 7*X1*X2\n");
  const auto& g32 = pres.relations[0];
  const auto& g21 = pres.relations[1];
  auto cfgs = overlaps(g32.lm(pres.order), g21.lm(pres.order));
  REQUIRE(cfgs.size() == 1);
  auto s = overlap_element(g32, g21, cfgs[0], pres.order);
  CHECK(render_poly(s, pres) == "7*X3*X1*X2 - 5*X2*X3*X1");

  // Inclusion element: g2/LC(g2) - A*g1*C/LC(g1).
  auto qp = testing_support::pres_from(
      "field Q\ngens x y\norder deglex x y\n"
      "rel y*x - 2*x*y\nrel 3*x*y*x*y - y^3\n");
  auto cfgs2 = overlaps(qp.relations[0].lm(qp.order),
                        qp.relations[1].lm(qp.order));
  std::optional<OverlapConfig> inc;
  for (const auto& c : cfgs2)
    if (c.kind == OverlapConfig::Kind::inclusion) inc = c;
  REQUIRE(inc.has_value());
  auto e = overlap_element(qp.relations[0], qp.relations[1], *inc, qp.order);
  CHECK(render_poly(e, qp) == "2*x^2*y^2 - 1/3*y^3");

  // A config built from different words is rejected.
  auto stale = overlaps(wd({1, 1}), wd({1, 0}));
  REQUIRE(!stale.empty());
  CHECK_THROWS(overlap_element(qp.relations[0], qp.relations[1], stale[0],
                               qp.order));
}

TEST_CASE("check_gb verifies the Example-1 family") {
  // The five parameter cases: (0,m,g), (l,0,g), (l,0,0), (0,m,0), and
  // l,m,g nonzero with g^2 = 1.
  for (auto [l, m, g] : {std::array<const char*, 3>{"0", "2", "3"},
                         {"2", "0", "3"},
                         {"2", "0", "0"},
                         {"0", "2", "0"},
                         {"2", "3", "1"},
                         {"2", "3", "-1"}}) {
    auto pres = testing_support::ex1(l, m, g);
    auto rep = check_gb(pres.relations, pres.order, 3);
    INFO("case (" << l << "," << m << "," << g << ")");
    CHECK(rep.verified);
    CHECK(rep.configs_skipped == 0);
    CHECK(rep.conclusive());
  }
}

TEST_CASE("check_gb refutes the Example-1 off-case with a certificate") {
  auto pres = testing_support::ex1("1", "1", "2");  // gamma^2 != 1
  auto rep = check_gb(pres.relations, pres.order, 3);
  REQUIRE_FALSE(rep.verified);
  REQUIRE(rep.certificate.has_value());
  // The certificate replays: its remainder is the normal form of its element.
  const auto& cert = *rep.certificate;
  CHECK(normal_form(cert.element, pres.relations, pres.order) ==
        cert.remainder);
  CHECK_FALSE(cert.remainder.is_zero());
}

TEST_CASE("check_gb verifies the Example-2 family") {
  for (auto [l, m, g] : {std::array<const char*, 3>{"0", "0", "3"},
                         {"0", "2", "0"},
                         {"2", "0", "3"},
                         {"2", "3", "0"},
                         {"1", "2", "3"},
                         {"-1", "2", "3"}}) {
    auto pres = testing_support::ex2(l, m, g);
    auto rep = check_gb(pres.relations, pres.order, 3);
    INFO("case (" << l << "," << m << "," << g << ")");
    CHECK(rep.verified);
    CHECK(rep.configs_skipped == 0);
  }
}

TEST_CASE("a single binomial has no overlaps") {
  auto pres = testing_support::quantum_plane();
  auto rep = check_gb(pres.relations, pres.order, 4);
  CHECK(rep.verified);
  CHECK(rep.configs_checked == 0);
  CHECK(rep.complete_beyond_truncation);  // homogeneous, maxdeg >= 2*2
}

TEST_CASE("Example-4 overlap patterns reduce to zero") {
  std::mt19937_64 rng(2024);
  for (int n : {2, 3})
    for (int p : {2, 3}) {
      auto lambdas = random_lambdas(n * (n - 1) / 2, rng);
      auto pres = testing_support::ex4(n, p, lambdas);
      // Overlap words reach degree 2p-1 (self-overlaps of Xi^p).
      auto rep = check_gb(pres.relations, pres.order, 2 * p);
      INFO("n=" << n << " p=" << p);
      CHECK(rep.verified);
      CHECK(rep.configs_skipped == 0);
      CHECK(rep.configs_checked > 0);
      CHECK(rep.complete_beyond_truncation);
    }
}

TEST_CASE("completion collapses a non-Groebner pair") {
  auto pres = testing_support::pres_from(
      "field Q\ngens x y\norder deglex x y\nrel y*x - x\nrel y^2*x\n");
  auto res = complete(pres.relations, pres.order, 3);
  REQUIRE(res.basis.size() == 1);
  CHECK(render_poly(res.basis[0], pres) == "x");
  // Independent oracle: x has a degree-3 membership witness.
  CHECK(membership_oracle(parse_poly<Rational>("x", pres), pres.relations,
                          pres.order, 3));
}

TEST_CASE("completion leaves a Groebner basis unchanged up to scaling") {
  auto pres = testing_support::ex1("2", "3", "1");
  auto res = complete(pres.relations, pres.order, 4);
  CHECK_FALSE(res.truncated);
  REQUIRE(res.basis.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(res.basis[i] == pres.relations[i].monic(pres.order));

  CHECK(complete(std::vector<Poly<Rational>>{}, pres.order, 2).basis.empty());
}

TEST_CASE("completion output verifies and is idempotent") {
  for (const char* text :
       {"field Q\ngens x y\norder deglex x y\nrel y*x - x\nrel y^2*x\n",
        "field Q\ngens x y\norder deglex x y\nrel y*x - 2*x*y + x\n",
        "field Q\ngens x y z\norder deglex x y z\n"
        "rel z*y - y*z\nrel z*x - x*z + y^2\nrel y*x - x*y\n"}) {
    auto pres = testing_support::pres_from(text);
    auto once = complete(pres.relations, pres.order, 5);
    auto rep = check_gb(once.basis, pres.order, 5);
    CHECK(rep.verified);
    auto twice = complete(once.basis, pres.order, 5);
    CHECK(once.basis == twice.basis);
  }
}

TEST_CASE("minimalize drops dominated leading monomials") {
  auto pres = testing_support::pres_from(
      "field Q\ngens x y\norder deglex x y\nrel x\nrel y*x - 2*x*y\n");
  auto out = minimalize(pres.relations, pres.order);
  REQUIRE(out.size() == 1);
  CHECK(render_poly(out[0], pres) == "x");

  auto ex1 = testing_support::ex1("2", "3", "1");
  CHECK(minimalize(ex1.relations, ex1.order) == ex1.relations);
  CHECK(minimalize(std::vector<Poly<Rational>>{}, ex1.order).empty());
}

TEST_CASE("minimalize preserves the leading-monomial ideal") {
  auto pres = testing_support::pres_from(
      "field Q\ngens x y\norder deglex x y\n"
      "rel x^2\nrel x^2*y\nrel y*x^2 - x^2\nrel y*x - 2*x*y\n");
  auto out = minimalize(pres.relations, pres.order);
  std::vector<Word> kept, all;
  for (const auto& g : out) kept.push_back(g.lm(pres.order));
  for (const auto& g : pres.relations) all.push_back(g.lm(pres.order));
  // Mutual divisibility of the leading-monomial sets.
  for (const auto& w : all) CHECK_FALSE(is_normal_word(w, kept, Side::two));
  for (const auto& w : kept) CHECK_FALSE(is_normal_word(w, all, Side::two));
}

TEST_CASE("membership oracle at a truncation degree") {
  auto pres = testing_support::pres_from(
      "field Q\ngens x y\norder deglex x y\nrel y*x - x\nrel y^2*x\n");
  CHECK(membership_oracle(parse_poly<Rational>("x", pres), pres.relations,
                          pres.order, 3));

  auto qp = testing_support::quantum_plane();
  CHECK_FALSE(membership_oracle(parse_poly<Rational>("1", qp), qp.relations,
                                qp.order, 4));
  CHECK(membership_oracle(qp.relations[0], qp.relations, qp.order, 3));
  // Cross-check of the division example: y^2x - 4xy^2 lies in the ideal.
  CHECK(membership_oracle(parse_poly<Rational>("y^2*x - 4*x*y^2", qp),
                          qp.relations, qp.order, 3));
}

TEST_CASE("normal form vanishes exactly on oracle members") {
  std::mt19937_64 seed_rng(77);
  for (const auto& pres :
       {testing_support::quantum_plane(), testing_support::ex1("2", "3", "1"),
        testing_support::ex4(2, 2, {"3"})}) {
    const long long D = 5;
    IdealSpan<Rational> span(pres.relations, pres.order, D);
    RandomPolys gen(pres, 3, seed_rng());
    int members = 0;
    for (int t = 0; t < 50; ++t) {
      auto f = gen.poly(3);
      // Mix in ideal elements so both directions of the equivalence bite.
      if (t % 2 == 0) {
        const auto& g = pres.relations[t % pres.relations.size()];
        if (gen.pres.grading.degree(g.lm(pres.order)) + 2 <= D)
          f += (gen.word() * g) * gen.word();
      }
      if (f.is_zero() || f.degree(pres.grading) > D) continue;
      bool nf_zero = normal_form(f, pres.relations, pres.order).is_zero();
      bool member = span.contains(f);
      CHECK(nf_zero == member);
      members += member;
    }
    CHECK(members > 0);
  }
}

TEST_CASE("leading-homogeneous correspondence on a generic Example 5") {
  auto pres = testing_support::pres_from(
      "field Q\ngens X1 X2 X3\norder deglex X1 X2 X3\n"
      "rel X2*X1 - 2*X1*X3 + X1\n"
      "rel X3*X1\n"
      "rel X3*X2 - 3*X2*X3 + X3\n");
  auto rep = prop26_check(pres.relations, pres.order, 4);
  CHECK(rep.is_gb);
  CHECK(rep.lh_is_gb);
  CHECK(rep.staircase_match);
}

TEST_CASE("leading-homogeneous correspondence on a non-basis") {
  auto pres = testing_support::pres_from(
      "field Q\ngens x y\norder deglex x y\nrel y*x - x\nrel y^2*x\n");
  auto rep = prop26_check(pres.relations, pres.order, 4);
  CHECK_FALSE(rep.is_gb);
  CHECK_FALSE(rep.lh_is_gb);
  CHECK_FALSE(rep.staircase_match);
  REQUIRE(rep.uncovered.has_value());
  CHECK(*rep.uncovered == wd({0}));  // the stray element x
}

TEST_CASE("homogeneous input makes both prop26 checks coincide") {
  auto pres = testing_support::ex1("2", "3", "1");
  auto rep = prop26_check(pres.relations, pres.order, 4);
  CHECK(rep.is_gb == rep.lh_is_gb);
  CHECK(rep.is_gb);
}
