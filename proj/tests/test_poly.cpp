#include <doctest.h>

#include <linea/polynomial.hpp>

using namespace linea;

namespace {
const MonomialOrder grevlex = MonomialOrder::grevlex();

Polynomial P(const std::string& s, int nv) {
  return Polynomial::parse(s, nv, grevlex);
}
}  // namespace

TEST_CASE("monomial counts match binomials") {
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= 8; ++d) {
      auto mons = monomials_of_degree(n + 1, d, grevlex);
      CHECK(Int(long(mons.size())) == binomial(n + d, d));
    }
  CHECK(monomials_of_degree(2, 2, grevlex).size() == 3);
  CHECK(monomials_of_degree(5, 1, grevlex).size() == 5);
  CHECK(monomials_of_degree(7, 2, grevlex).size() == 28);
}

TEST_CASE("grevlex convention") {
  // Degree ties break toward the monomial less divisible by the last
  // variables: x1^2 beats x0*x2 (matching Macaulay2/Singular).
  Polynomial f = P("x0*x2 + x1^2", 3);
  CHECK(f.leading_term().mon.to_string() == "x1^2");
  // On variables the order is x0 > x1 > ... > xn.
  Polynomial g = P("x0 - x1", 3);
  CHECK(g.leading_term().mon.to_string() == "x0");
  Polynomial h = P("x2 + x1", 3);
  CHECK(h.leading_term().mon.to_string() == "x1");
}

TEST_CASE("difference of squares") {
  Polynomial prod = P("x0+x1", 2).times(P("x0-x1", 2), grevlex);
  CHECK(prod.equals(P("x0^2-x1^2", 2)));
}

TEST_CASE("parse/print round trip") {
  const char* text = "1/2*x0^2*x3 - x1*x2";
  Polynomial f = P(text, 4);
  CHECK(f.to_string() == text);
  CHECK(P(f.to_string(), 4).equals(f));
  CHECK(P("0", 2).is_zero());
  CHECK(P("3", 2).to_string() == "3");
  CHECK(P("-x0", 2).to_string() == "-x0");
}

TEST_CASE("multiplication is associative, commutative, distributive") {
  SplitMix64 rng(11);
  auto random_poly = [&](int nv) {
    std::vector<Term> terms;
    int k = 1 + int(rng.next() % 4);
    for (int t = 0; t < k; ++t) {
      Monomial m = Monomial::one(nv);
      for (int v = 0; v < nv; ++v) {
        int e = int(rng.next() % 3);
        m.e[v] = std::uint16_t(e);
        m.deg += e;
      }
      terms.push_back({m, make_rat(rng.next_in(-5, 5), 1 + rng.next_in(0, 3))});
    }
    return Polynomial::from_terms(nv, std::move(terms), grevlex);
  };
  for (int trial = 0; trial < 1000; ++trial) {
    int nv = 3;
    Polynomial a = random_poly(nv), b = random_poly(nv), c = random_poly(nv);
    CHECK(a.times(b, grevlex).equals(b.times(a, grevlex)));
    CHECK(a.times(b.times(c, grevlex), grevlex)
              .equals(a.times(b, grevlex).times(c, grevlex)));
    CHECK(a.times(b.plus(c, grevlex), grevlex)
              .equals(a.times(b, grevlex).plus(a.times(c, grevlex), grevlex)));
  }
}

TEST_CASE("lex order eliminates") {
  MonomialOrder lex = MonomialOrder::lex();
  Polynomial f = Polynomial::parse("x1^3 + x0", 2, lex);
  CHECK(f.leading_term().mon.to_string() == "x0");
}

TEST_CASE("substitution") {
  Polynomial f = P("x0^2 + x1", 3);
  Polynomial repl = P("x1 + x2", 3);
  std::vector<const Polynomial*> image(3, nullptr);
  image[0] = &repl;
  Polynomial g = f.substituted(image, grevlex);
  CHECK(g.equals(P("x1^2 + 2*x1*x2 + x2^2 + x1", 3)));
}

TEST_CASE("parse errors carry the offending token") {
  CHECK_THROWS_AS(P("x9", 3), input_error);
  CHECK_THROWS_AS(P("x0 & x1", 3), input_error);
  CHECK_THROWS_AS(P("1/0*x0", 3), input_error);
}
