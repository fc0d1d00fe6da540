#include <doctest.h>

#include <algorithm>
#include <linea/groebner.hpp>
#include <linea/hilbert.hpp>

using namespace linea;

namespace {
const MonomialOrder grevlex = MonomialOrder::grevlex();

Polynomial P(const std::string& s, int nv) {
  return Polynomial::parse(s, nv, grevlex);
}

Ideal I(int nv, const std::vector<std::string>& gens) {
  return Ideal::from_strings(nv, gens, grevlex);
}

// Prop-style three-line configuration in P^4.
Ideal three_p4_ideal() {
  Ideal L1 = I(5, {"x0", "x1", "x3"});
  Ideal L2 = I(5, {"x0", "x2", "x4"});
  Ideal L3 = I(5, {"x1", "x2", "x3+x4"});
  return intersect(intersect(L1, L2, grevlex), L3, grevlex);
}

}  // namespace

TEST_CASE("monomial ideal is its own basis") {
  GroebnerBasis G = buchberger(I(2, {"x0", "x1"}), grevlex);
  REQUIRE(G.elements().size() == 2);
  CHECK(G.elements()[0].to_string() == "x1");
  CHECK(G.elements()[1].to_string() == "x0");
}

TEST_CASE("linear elimination under lex") {
  MonomialOrder lex = MonomialOrder::lex();
  Ideal ideal(3, {Polynomial::parse("x0-x1", 3, lex),
                  Polynomial::parse("x1-x2", 3, lex)});
  GroebnerBasis G = buchberger(ideal, lex);
  REQUIRE(G.elements().size() == 2);
  CHECK(G.elements()[0].to_string() == "x1 - x2");
  CHECK(G.elements()[1].to_string() == "x0 - x2");
}

TEST_CASE("normal forms") {
  Ideal ideal = I(3, {"x0^2 - x1^2", "x0*x1"});
  GroebnerBasis G = buchberger(ideal, grevlex);
  for (const auto& g : ideal.gens) CHECK(normal_form(g, G).is_zero());
  CHECK(normal_form(P("1", 3), G).to_string() == "1");
  // Cubic not reducible by the generating quadrics of the three-line
  // configuration: x3*x4*(x3+x4) against the six quadrics.
  Ideal quadrics = I(5, {"x0*x1", "x0*x2", "x1*x2", "x1*x4", "x2*x3",
                         "x0*x3+x0*x4"});
  GroebnerBasis GQ = buchberger(quadrics, grevlex);
  Polynomial probe = P("x3^2*x4 + x3*x4^2", 5);
  CHECK(!normal_form(probe, GQ).is_zero());
}

TEST_CASE("reduced basis is unique under generator shuffles") {
  SplitMix64 rng(21);
  auto random_poly = [&](int nv) {
    std::vector<Term> terms;
    int k = 1 + int(rng.next() % 3);
    for (int t = 0; t < k; ++t) {
      Monomial m = Monomial::one(nv);
      for (int v = 0; v < nv; ++v) {
        int e = int(rng.next() % 3);
        m.e[v] = std::uint16_t(e);
        m.deg += e;
      }
      terms.push_back({m, make_rat(rng.next_in(-4, 4), 1)});
    }
    return Polynomial::from_terms(nv, std::move(terms), grevlex);
  };
  for (int trial = 0; trial < 100; ++trial) {
    int nv = 3;
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) {
      Polynomial p = random_poly(nv);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    GroebnerBasis a = buchberger(Ideal(nv, gens), grevlex);
    for (std::size_t i = gens.size(); i > 1; --i)
      std::swap(gens[i - 1], gens[rng.next() % i]);
    std::reverse(gens.begin(), gens.end());
    GroebnerBasis b = buchberger(Ideal(nv, gens), grevlex);
    CHECK(a == b);
  }
}

TEST_CASE("intersection of disjoint monomial ideals") {
  Ideal meet = intersect(I(4, {"x0", "x1"}), I(4, {"x2", "x3"}), grevlex);
  Ideal expect = I(4, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
  CHECK(ideal_equal(meet, expect, grevlex));
  // Every generator lies in both factors.
  GroebnerBasis a = buchberger(I(4, {"x0", "x1"}), grevlex);
  GroebnerBasis b = buchberger(I(4, {"x2", "x3"}), grevlex);
  for (const auto& g : meet.gens) {
    CHECK(is_member(g, a));
    CHECK(is_member(g, b));
  }
}

TEST_CASE("pairwise intersection of two three-space lines in P^4") {
  Ideal meet = intersect(I(5, {"x0", "x1", "x3"}), I(5, {"x0", "x2", "x4"}),
                         grevlex);
  Ideal expect = I(5, {"x0", "x1*x2", "x1*x4", "x3*x2", "x3*x4"});
  CHECK(ideal_equal(meet, expect, grevlex));
}

TEST_CASE("three-line configuration has six quadrics and a cubic") {
  Ideal J = three_p4_ideal();
  GroebnerBasis G = buchberger(J, grevlex);
  int deg2 = 0, deg3 = 0;
  for (const auto& e : G.elements()) {
    if (e.degree() == 2) ++deg2;
    if (e.degree() == 3) ++deg3;
  }
  CHECK(deg2 == 6);
  CHECK(deg3 >= 1);

  auto mingens = minimal_generators_up_to(J, 3, grevlex);
  CHECK(mingens[2] == 6);
  CHECK(mingens[3] >= 1);
}

TEST_CASE("colon basics") {
  CHECK(ideal_equal(colon(I(2, {"x0*x1"}), P("x0", 2), grevlex),
                    I(2, {"x1"}), grevlex));
  Ideal ideal = I(3, {"x0^2", "x1*x2"});
  CHECK(ideal_equal(colon(ideal, P("1", 3), grevlex), ideal, grevlex));
  CHECK_THROWS_AS(colon(ideal, Polynomial::zero(3), grevlex), input_error);
}

TEST_CASE("colon round trip: f * (I : f) lies in I") {
  Ideal ideal = I(3, {"x0^2 - x1^2", "x1*x2"});
  Polynomial f = P("x0 + x2", 3);
  Ideal q = colon(ideal, f, grevlex);
  GroebnerBasis G = buchberger(ideal, grevlex);
  for (const auto& g : q.gens)
    CHECK(is_member(g.times(f, grevlex), G));
}

TEST_CASE("colon by an ideal") {
  // (x0) : (x0, x1) = (x0) : x1 since x0 already divides in.
  Ideal q = colon_ideal(I(3, {"x0*x1"}), I(3, {"x0*x1", "x1"}), grevlex);
  CHECK(ideal_equal(q, I(3, {"x0"}), grevlex));
  // J contained in I gives the unit ideal.
  Ideal unit = colon_ideal(I(3, {"x0", "x1"}), I(3, {"x0"}), grevlex);
  GroebnerBasis G = buchberger(unit, grevlex);
  CHECK(G.is_unit_ideal());
}

TEST_CASE("initial ideal and standard monomials") {
  GroebnerBasis G = buchberger(I(2, {"x0-x1"}), grevlex);
  Ideal in = initial_ideal(G);
  REQUIRE(in.gens.size() == 1);
  CHECK(in.gens[0].to_string() == "x0");
  Ideal mono = I(3, {"x0*x1", "x2^2"});
  GroebnerBasis GM = buchberger(mono, grevlex);
  CHECK(ideal_equal(initial_ideal(GM), mono, grevlex));
}

TEST_CASE("minimal generators of a linear ideal") {
  auto mg = minimal_generators_up_to(I(3, {"x0", "x1"}), 3, grevlex);
  REQUIRE(mg.size() == 1);
  CHECK(mg[1] == 2);
  CHECK_THROWS_AS(minimal_generators_up_to(I(2, {"x0 + x1^2"}), 2, grevlex),
                  input_error);
}

TEST_CASE("modular law on linear ideals") {
  SplitMix64 rng(31);
  const int nv = 5;
  auto random_form = [&]() {
    std::vector<Term> terms;
    for (int v = 0; v < nv; ++v) {
      long c = rng.next_in(-6, 6);
      if (c) terms.push_back({Monomial::var(v, nv), Rat(c)});
    }
    return Polynomial::from_terms(nv, std::move(terms), grevlex);
  };
  for (int trial = 0; trial < 6; ++trial) {
    Polynomial f = random_form(), g = random_form(), h = random_form();
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    Ideal B(nv, {f});
    Ideal A(nv, {f, g});  // B inside A
    Ideal C(nv, {h});
    Ideal lhs = intersect(A, ideal_sum(B, C), grevlex);
    Ideal rhs = ideal_sum(B, intersect(A, C, grevlex));
    CHECK(ideal_equal(lhs, rhs, grevlex));
  }
}

TEST_CASE("standard monomial counts agree with the rank oracle") {
  std::vector<Ideal> corpus = {
      I(3, {"x0*x1", "x2^2"}),
      I(4, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"}),
      three_p4_ideal(),
  };
  for (const auto& J : corpus) {
    GroebnerBasis G = buchberger(J, grevlex);
    for (int d = 0; d <= 8; ++d)
      CHECK(standard_monomial_count(G, J.nvars, d) == hilbert_linalg(J, d));
  }
}

TEST_CASE("four special lines in P^3 give the degenerate series") {
  Ideal L1 = I(4, {"x0", "x1"});
  Ideal L2 = I(4, {"x2", "x3"});
  Ideal L3 = I(4, {"x0+x2", "x1-x3"});
  Ideal L4 = I(4, {"x0-x2", "x1+x3"});
  Ideal J = intersect(intersect(L1, L2, grevlex),
                      intersect(L3, L4, grevlex), grevlex);
  // Values of (-3t^4+2t^3+2t^2+2t+1)/(1-t)^2.
  RationalSeries expect({Int(1), Int(2), Int(2), Int(2), Int(-3)}, 2);
  CoeffSeq want = expect.expand(6);
  GroebnerBasis G = buchberger(J, grevlex);
  for (int d = 0; d <= 6; ++d) {
    CHECK(Int(standard_monomial_count(G, 4, d)) == want[d]);
    CHECK(Int(hilbert_linalg(J, d)) == want[d]);
  }
  CHECK(standard_monomial_count(G, 4, 2) == 9);
}
