// Shared fixtures and generators for the test suites.
#pragma once

#include <random>
#include <string>

#include "ncgb/presentation.hpp"

namespace testing_support {

using namespace ncgb;

inline Presentation<Rational> pres_from(const std::string& text) {
  return parse_presentation<Rational>(text);
}

// Quantum plane: yx = 2xy.
inline Presentation<Rational> quantum_plane() {
  return pres_from("field Q\ngens x y\norder deglex x y\nrel y*x - 2*x*y\n");
}

// "lhs - c*rhs" with the sign of c folded into the operator; c == "0" drops
// the tail entirely (the monomial case).
inline std::string binomial_rel(const std::string& lhs, std::string c,
                                const std::string& rhs) {
  if (c == "0") return "rel " + lhs + "\n";
  std::string op = " - ";
  if (!c.empty() && c[0] == '-') {
    op = " + ";
    c.erase(0, 1);
  }
  std::string coef = (c == "1") ? "" : c + "*";
  return "rel " + lhs + op + coef + rhs + "\n";
}

// Example-1-shaped algebra with parameters (lambda, mu, gamma).
inline Presentation<Rational> ex1(const std::string& l, const std::string& m,
                                  const std::string& g) {
  std::string t = "field Q\ngens X1 X2 X3\norder deglex X1 X2 X3\n";
  t += binomial_rel("X2*X1", l, "X1*X3");
  t += binomial_rel("X3*X1", m, "X1*X2");
  t += binomial_rel("X3*X2", g, "X2*X3");
  return pres_from(t);
}

// Example-2-shaped algebra with parameters (lambda, mu, gamma).
inline Presentation<Rational> ex2(const std::string& l, const std::string& m,
                                  const std::string& g) {
  std::string t = "field Q\ngens X1 X2 X3\norder deglex X1 X2 X3\n";
  t += binomial_rel("X2*X1", l, "X1*X2");
  t += binomial_rel("X3*X1", m, "X2*X3");
  t += binomial_rel("X3*X2", g, "X1*X3");
  return pres_from(t);
}

// Quantum-exterior-style presentation: Omega = {Xi^p}, g_ji = XjXi - l_ji XiXj.
// lambdas are listed for (j,i) with j = 2..n, i = 1..j-1, "0" dropping the tail.
inline Presentation<Rational> ex4(int n, int p,
                                  const std::vector<std::string>& lambdas) {
  std::string t = "field Q\ngens";
  for (int i = 1; i <= n; ++i) t += " X" + std::to_string(i);
  t += "\norder deglex";
  for (int i = 1; i <= n; ++i) t += " X" + std::to_string(i);
  t += "\n";
  for (int i = 1; i <= n; ++i)
    t += "rel X" + std::to_string(i) + "^" + std::to_string(p) + "\n";
  std::size_t k = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      t += binomial_rel("X" + std::to_string(j) + "*X" + std::to_string(i),
                        lambdas.at(k++),
                        "X" + std::to_string(i) + "*X" + std::to_string(j));
  return pres_from(t);
}

// Example-5-shaped algebra: g21 = X2X1 - l*X1X3 + a*X1, g31 = X3X1,
// g32 = X3X2 - m*X2X3 + a*X3.
inline Presentation<Rational> ex5(const std::string& l, const std::string& m,
                                  const std::string& a) {
  std::string t = "field Q\ngens X1 X2 X3\norder deglex X1 X2 X3\n";
  std::string r1 = binomial_rel("X2*X1", l, "X1*X3");
  std::string r3 = binomial_rel("X3*X2", m, "X2*X3");
  r1.pop_back();
  r3.pop_back();
  if (a != "0") {
    std::string coef = a == "1" ? "" : a + "*";
    r1 += " + " + coef + "X1";
    r3 += " + " + coef + "X3";
  }
  return pres_from(t + r1 + "\nrel X3*X1\n" + r3 + "\n");
}

// Example-6-shaped algebra: g21 = X2X1 - l*X1X2 + a*X1, g31 = X3X1,
// g32 = X3X2 - m*X1X3 + a*X3.
inline Presentation<Rational> ex6(const std::string& l, const std::string& m,
                                  const std::string& a) {
  std::string t = "field Q\ngens X1 X2 X3\norder deglex X1 X2 X3\n";
  std::string r1 = binomial_rel("X2*X1", l, "X1*X2");
  std::string r3 = binomial_rel("X3*X2", m, "X1*X3");
  r1.pop_back();
  r3.pop_back();
  if (a != "0") {
    std::string coef = a == "1" ? "" : a + "*";
    r1 += " + " + coef + "X1";
    r3 += " + " + coef + "X3";
  }
  return pres_from(t + r1 + "\nrel X3*X1\n" + r3 + "\n");
}

// Example-7-shaped algebra over deglex X2 < X1 < X3: g31 = X3X1 - l*X1X3 +
// c*X3, g12 = X1X2 - l*X2X1 + c*X2, g32 = X3X2 - w*X2X3 + f, with f an
// expression in X1 and the weights chosen by the caller.
inline Presentation<Rational> ex7(const std::string& l, const std::string& c,
                                  const std::string& w, const std::string& f,
                                  const std::string& weights = "") {
  std::string t = "field Q\ngens X1 X2 X3\n";
  if (!weights.empty()) t += "deg " + weights + "\n";
  t += "order deglex X2 X1 X3\n";
  std::string r1 = binomial_rel("X3*X1", l, "X1*X3");
  std::string r2 = binomial_rel("X1*X2", l, "X2*X1");
  std::string r3 = binomial_rel("X3*X2", w, "X2*X3");
  r1.pop_back();
  r2.pop_back();
  r3.pop_back();
  if (c != "0") {
    std::string coef = c == "1" ? "" : c + "*";
    r1 += " + " + coef + "X3";
    r2 += " + " + coef + "X2";
  }
  if (f != "0") r3 += " + " + f;
  return pres_from(t + r1 + "\n" + r2 + "\n" + r3 + "\n");
}

// Quadratic four-generator algebra whose leading-homogeneous part is a
// left-type quadratic domain. Parameters: l21 = l43 = l32 = t, l31 = l42 =
// 1/t, l41 = 1, b = t*a, c = a (here t = 2, a = 3); every overlap element
// then reduces to zero, and the classical side conditions t*a = b,
// (1/t)*b = c, 1*c = a, l43*l42 = 1, l43 = l32 all hold.
inline Presentation<Rational> ex8() {
  return pres_from(
      "field Q\ngens X1 X2 X3 X4\norder deglex X1 X2 X3 X4\n"
      "rel X4*X3 - 2*X3*X4 - 3*X2\n"
      "rel X4*X2 - 1/2*X2*X4 + 6*X3\n"
      "rel X4*X1 - X1*X2\n"
      "rel X3*X2 - 2*X2*X3 - 3*X4\n"
      "rel X3*X1 - 1/2*X1*X4\n"
      "rel X2*X1 - 2*X1*X3\n");
}

struct RandomPolys {
  std::mt19937_64 rng;
  const Presentation<Rational>& pres;
  long long maxdeg;

  RandomPolys(const Presentation<Rational>& p, long long d,
              std::uint64_t seed)
      : rng(seed), pres(p), maxdeg(d) {}

  Word word() {
    std::uniform_int_distribution<std::uint32_t> letter(
        0, static_cast<std::uint32_t>(pres.generator_count() - 1));
    std::vector<std::uint32_t> w;
    long long deg = 0;
    std::uniform_int_distribution<int> more(0, 3);
    while (more(rng) != 0) {
      std::uint32_t g = letter(rng);
      if (deg + pres.grading.weights[g] > maxdeg) break;
      deg += pres.grading.weights[g];
      w.push_back(g);
    }
    return Word(std::move(w));
  }

  Poly<Rational> poly(int max_terms = 4) {
    Poly<Rational> f;
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    int t = terms(rng);
    for (int k = 0; k < t; ++k)
      f.add_term(word(), Rational::from_fraction(pres.field, num(rng),
                                                 den(rng)));
    return f;
  }
};

}  // namespace testing_support
