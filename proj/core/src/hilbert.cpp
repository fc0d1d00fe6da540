#include "linea/hilbert.hpp"

#include <unordered_map>

namespace linea {

Int generic_lines_hilbert(int m, int n, int d) {
  if (m < 1) throw input_error("need at least one line");
  if (n < 3)
    throw input_error(
        "generic-lines Hilbert formula requires n >= 3 (forced coplanar "
        "intersections break it in the plane)");
  if (d < 0) throw input_error("negative degree");
  Int cap = binomial(n + d, d);
  Int lines = Int(m) * (d + 1);
  return cap < lines ? cap : lines;
}

Int points_hilbert(int p, int n, int d) {
  if (p < 1 || n < 1 || d < 0) throw input_error("bad point parameters");
  Int cap = binomial(n + d, d);
  return cap < p ? cap : Int(p);
}

RationalSeries generic_lines_series(int m, int n) {
  int alpha = regularity_alpha(m, n);
  auto h = [&](int d) { return d < 0 ? Int(0) : generic_lines_hilbert(m, n, d); };
  IntPoly num(alpha + 2, Int(0));
  for (int i = 0; i <= alpha + 1; ++i)
    num[i] = h(i) - 2 * h(i - 1) + h(i - 2);
  // Beyond alpha the function is m(d+1); its second difference vanishes.
  for (int i = alpha + 2; i <= alpha + 3; ++i)
    if (h(i) - 2 * h(i - 1) + h(i - 2) != 0)
      throw std::logic_error("series numerator did not terminate");
  return RationalSeries(std::move(num), 2);
}

RationalSeries points_series(int p) {
  if (p < 1) throw input_error("need at least one point");
  return RationalSeries({Int(1), Int(p - 1)}, 1);
}

long hilbert_linalg(const Ideal& I, int d, const RankOptions& ropts) {
  if (!I.is_homogeneous())
    throw input_error("hilbert_linalg needs a homogeneous ideal");
  const int nv = I.nvars;
  MonomialOrder order = MonomialOrder::grevlex();
  auto basis = monomials_of_degree(nv, d, order);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
  QMatrix mat(0, basis.size());
  for (const auto& g : I.gens) {
    int dg = g.degree();
    if (dg > d) continue;
    for (const auto& u : monomials_of_degree(nv, d - dg, order)) {
      std::vector<Rat> row(basis.size(), Rat(0));
      for (const auto& t : g.terms()) row[index[t.mon.times(u)]] = t.coeff;
      mat.add_row(std::move(row));
    }
  }
  return long(basis.size()) - long(mat.rank(ropts).rank);
}

long hilbert_standard_monomials(const GroebnerBasis& G, int nvars, int d) {
  return standard_monomial_count(G, nvars, d);
}

int regularity_alpha(int m, int n) {
  if (m < 1 || n < 3) throw input_error("regularity_alpha needs m>=1, n>=3");
  for (int a = 0;; ++a)
    if (binomial(n + a, a) >= Int(m) * (a + 1)) return a;
}

namespace {

// Floor of the e-th root of v, plus exactness flag.
std::pair<Int, bool> int_root(const Int& v, unsigned e) {
  Int r;
  int exact = mpz_root(r.get_mpz_t(), v.get_mpz_t(), e);
  return {r, exact != 0};
}

}  // namespace

int regularity_bound(int m, int n) {
  if (m < 1 || n < 3) throw input_error("regularity_bound needs m>=1, n>=3");
  const unsigned e = static_cast<unsigned>(n - 1);
  Int a = factorial(n) * m;  // bound = a^{1/e} - b^{1/e}
  Int b = factorial(n);
  if (a == b) return 0;
  auto [ra, ea] = int_root(a, e);
  auto [rb, eb] = int_root(b, e);
  if (ea && eb) {
    Int d = ra - rb;
    return static_cast<int>(d.get_si());
  }
  // The difference is irrational (it is an integer only when a = b or both
  // roots are exact), so shrinking dyadic enclosures decide the ceiling.
  for (unsigned prec = 8;; prec *= 2) {
    Int fa = int_root(a << (e * prec), e).first;
    Int fb = int_root(b << (e * prec), e).first;
    // bound in ((fa - fb - 1)/2^p, (fa - fb + 1)/2^p); the only interior
    // candidate integer is (lo+1)/2^p.
    Int lo = fa - fb - 1, hi = fa - fb + 1;
    Int pow = Int(1) << prec;
    Int cand = lo + 1;
    if (!mpz_divisible_p(cand.get_mpz_t(), pow.get_mpz_t())) {
      Int k;
      mpz_cdiv_q(k.get_mpz_t(), hi.get_mpz_t(), pow.get_mpz_t());
      return static_cast<int>(k.get_si());
    }
    if (prec > 4096) throw std::logic_error("root isolation stalled");
  }
}

}  // namespace linea
