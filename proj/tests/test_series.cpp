#include <doctest.h>

#include <linea/series.hpp>

using namespace linea;

namespace {

// Independent check: multiplying the claimed expansion back by (1-t)^d
// must reproduce the numerator exactly.
bool expansion_matches(const RationalSeries& f, const CoeffSeq& seq) {
  IntPoly p(seq.begin(), seq.end());
  IntPoly one_minus_t{Int(1), Int(-1)};
  for (unsigned i = 0; i < f.denom_pow(); ++i) p = poly_mul(p, one_minus_t);
  p.resize(seq.size(), Int(0));
  IntPoly num = f.numerator();
  num.resize(seq.size(), Int(0));
  for (std::size_t i = 0; i + f.denom_pow() < seq.size(); ++i)
    if (p[i] != num[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("geometric series expansion") {
  RationalSeries f({Int(1)}, 1);  // 1/(1-t)
  CHECK(f.expand(3) == CoeffSeq{1, 1, 1, 1});
}

TEST_CASE("polynomial expansion") {
  auto f = RationalSeries::parse("(1+t)/(1-t)^0");
  CHECK(f.denom_pow() == 0);
  CHECK(f.expand(3) == CoeffSeq{1, 1, 0, 0});
}

TEST_CASE("cubic numerator over (1-t)^2") {
  auto f = RationalSeries::parse("(-3*t^3+2*t^2+5*t+1)/(1-t)^2");
  CHECK(f.expand(3) == CoeffSeq{1, 7, 15, 20});
  CHECK(expansion_matches(f, f.expand(12)));
}

TEST_CASE("expansion round trip on random functions") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly num;
    std::size_t deg = 1 + rng.next() % 6;
    for (std::size_t i = 0; i <= deg; ++i)
      num.push_back(Int(long(rng.next_in(-9, 9))));
    RationalSeries f(num, unsigned(rng.next() % 4));
    CHECK(expansion_matches(f, f.expand(50)));
  }
}

TEST_CASE("normalization strips common (1-t) factors") {
  IntPoly num{Int(2), Int(1)};  // 2 + t
  RationalSeries base(num, 1);
  RationalSeries scaled(poly_mul(num, IntPoly{Int(1), Int(-1)}), 2);
  CHECK(base == scaled);
  CHECK(scaled.denom_pow() == 1);
}

TEST_CASE("series text round trip") {
  for (const char* text :
       {"(-3*t^3+2*t^2+5*t+1)/(1-t)^2", "(2*t^2-t+1)/(1-t)", "1+t", "0",
        "(-t^2+t+1)/(1-t)^2"}) {
    auto f = RationalSeries::parse(text);
    CHECK(RationalSeries::parse(f.to_string()) == f);
  }
  CHECK(RationalSeries::parse("(-3*t^3+2*t^2+5*t+1)/(1-t)^2").to_string() ==
        "(-3*t^3+2*t^2+5*t+1)/(1-t)^2");
}

TEST_CASE("reciprocal of the trivial series") {
  RationalSeries f({Int(1)}, 0);  // H = 1
  CoeffSeq r = reciprocal_series(f, 5);
  CHECK(r == CoeffSeq{1, 0, 0, 0, 0, 0});
}

TEST_CASE("reciprocal series for six lines in P^6") {
  // H = (-5t^3+5t^2+5t+1)/(1-t)^2; 1/H(-t) = (1+t)^2/(1-5t+5t^2+5t^3).
  RationalSeries h({Int(1), Int(5), Int(5), Int(-5)}, 2);
  CoeffSeq r = reciprocal_series(h, 20);
  CHECK(r[0] == 1);
  CHECK(r[1] == 7);
  CHECK(r[2] == 31);
  CHECK(r[3] == 115);
  CHECK(r[4] == 385);

  // Convolving back against H(-t) must give 1, 0, 0, ...
  CoeffSeq ht = h.expand(20);
  for (std::size_t i = 1; i < ht.size(); i += 2) ht[i] = -ht[i];
  for (std::size_t k = 0; k <= 20; ++k) {
    Int acc(0);
    for (std::size_t j = 0; j <= k; ++j) acc += ht[j] * r[k - j];
    CHECK(acc == (k == 0 ? 1 : 0));
  }

  auto neg = first_negative(r);
  REQUIRE(neg.has_value());
  CHECK(*neg == 12);
}

TEST_CASE("reciprocal requires constant term 1") {
  RationalSeries f({Int(2)}, 1);
  CHECK_THROWS_AS(reciprocal_series(f, 4), input_error);
}

TEST_CASE("first_negative basics") {
  CHECK(!first_negative({Int(1), Int(1), Int(1)}).has_value());
  auto idx = first_negative({Int(1), Int(0), Int(-2)});
  REQUIRE(idx.has_value());
  CHECK(*idx == 2);
}
