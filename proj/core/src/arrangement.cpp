#include "linea/arrangement.hpp"

#include <algorithm>

#include "linea/hilbert.hpp"

namespace linea {

namespace {

const MonomialOrder kOrder = MonomialOrder::grevlex();

Polynomial form_from_coeffs(const std::vector<Rat>& c, int nvars) {
  std::vector<Term> terms;
  for (int v = 0; v < nvars; ++v)
    if (c[v] != 0) terms.push_back({Monomial::var(v, nvars), c[v]});
  return Polynomial::from_terms(nvars, std::move(terms), kOrder);
}

std::vector<Rat> coeffs_of_form(const Polynomial& f, int nvars) {
  std::vector<Rat> c(nvars, Rat(0));
  for (const auto& t : f.terms()) {
    if (t.mon.deg != 1) throw input_error("expected a linear form");
    for (int v = 0; v < nvars; ++v)
      if (t.mon.e[v]) c[v] = t.coeff;
  }
  return c;
}

// Forms cutting out the line through two points: kernel of the 2 x (n+1)
// point matrix.
std::vector<Polynomial> forms_through(const std::vector<Rat>& p,
                                      const std::vector<Rat>& q, int nvars) {
  QMatrix m(2, nvars);
  for (int v = 0; v < nvars; ++v) {
    m.at(0, v) = p[v];
    m.at(1, v) = q[v];
  }
  std::vector<Polynomial> forms;
  for (const auto& k : m.kernel_basis())
    forms.push_back(form_from_coeffs(k, nvars));
  return forms;
}

// Two points spanning the common zero locus of n-1 independent forms.
std::array<std::vector<Rat>, 2> points_on(const std::vector<Polynomial>& forms,
                                          int nvars) {
  QMatrix m(forms.size(), nvars);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto c = coeffs_of_form(forms[i], nvars);
    for (int v = 0; v < nvars; ++v) m.at(i, v) = c[v];
  }
  auto kernel = m.kernel_basis();
  if (kernel.size() != 2)
    throw input_error("line forms do not cut out a line");
  return {kernel[0], kernel[1]};
}

// Row-reduced span key for deduplicating lines.
std::string span_key(const Line& line, int nvars) {
  QMatrix m(line.forms.size(), nvars);
  for (std::size_t i = 0; i < line.forms.size(); ++i) {
    auto c = coeffs_of_form(line.forms[i], nvars);
    for (int v = 0; v < nvars; ++v) m.at(i, v) = c[v];
  }
  m.rref();
  std::string key;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      key += rat_to_string(m.at(i, j)) + ",";
  return key;
}

std::vector<int> pattern_indices(int i, int n) {
  // All of 0..n except the pair {n-2i+1, n-2i+2}.
  int a = n - 2 * i + 1, b = n - 2 * i + 2;
  if (a < 0) throw input_error("staircase pattern out of range");
  std::vector<int> idx;
  for (int v = 0; v <= n; ++v)
    if (v != a && v != b) idx.push_back(v);
  return idx;
}

}  // namespace

Ideal LineArrangement::line_ideal(std::size_t i) const {
  return Ideal(nvars(), lines.at(i).forms);
}

LineArrangement random_generic(int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 3) throw input_error("random_generic needs m>=1, n>=3");
  const int nv = n + 1;
  LineArrangement A;
  A.n = n;
  A.prov = {Provenance::Kind::generic, seed, "", Rat(0), Rat(0)};
  SplitMix64 rng(seed);
  std::vector<std::string> keys;
  int retries = 0;
  while (int(A.lines.size()) < m) {
    if (++retries > 100 * m) throw input_error("degenerate draws exhausted");
    std::vector<Rat> p(nv), q(nv);
    for (int v = 0; v < nv; ++v) p[v] = Rat(long(rng.next_in(-1000000, 1000000)));
    for (int v = 0; v < nv; ++v) q[v] = Rat(long(rng.next_in(-1000000, 1000000)));
    auto forms = forms_through(p, q, nv);
    if (int(forms.size()) != n - 1) continue;  // proportional points
    Line line{std::move(forms), {{p, q}}};
    std::string key = span_key(line, nv);
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
    keys.push_back(std::move(key));
    A.lines.push_back(std::move(line));
  }
  return A;
}

LineArrangement staircase_monomial(int m, int n) {
  if (m < 1 || n < 3) throw input_error("staircase needs m>=1, n>=3");
  if (2 * m > n + 1)
    throw input_error("monomial staircase needs 2m <= n+1");
  const int nv = n + 1;
  LineArrangement A;
  A.n = n;
  A.prov = {Provenance::Kind::staircase, 0, "", Rat(0), Rat(0)};
  for (int i = 1; i <= m; ++i) {
    Line line;
    for (int v : pattern_indices(i, n))
      line.forms.push_back(Polynomial::variable(v, nv));
    int a = n - 2 * i + 1, b = n - 2 * i + 2;
    std::vector<Rat> p(nv, Rat(0)), q(nv, Rat(0));
    p[a] = 1;
    q[b] = 1;
    line.span_points = {{p, q}};
    A.lines.push_back(std::move(line));
  }
  return A;
}

LineArrangement staircase_mixed(int m, int n, std::uint64_t seed) {
  if (m < 2 || n < 3) throw input_error("mixed staircase needs m>=2, n>=3");
  const int nv = n + 1;
  const int k_mono = (m + 1) / 2, k_gen = m / 2;
  if (n - 2 * k_mono + 1 < 0 || n - 2 * k_gen + 1 < 0)
    throw input_error("mixed staircase pattern out of range");
  for (int attempt = 0; attempt < 32; ++attempt) {
    SplitMix64 rng(seed + 0x51ed2701ULL * attempt);
    std::vector<std::vector<Rat>> l(nv, std::vector<Rat>(nv));
    for (int i = 0; i < nv; ++i)
      for (int v = 0; v < nv; ++v)
        l[i][v] = Rat(long(rng.next_in(-1000000, 1000000)));

    LineArrangement A;
    A.n = n;
    A.prov = {Provenance::Kind::staircase, seed, "", Rat(0), Rat(0)};
    bool ok = true;
    for (int i = 1; i <= k_mono; ++i) {
      Line line;
      for (int v : pattern_indices(i, n))
        line.forms.push_back(Polynomial::variable(v, nv));
      int a = n - 2 * i + 1, b = n - 2 * i + 2;
      std::vector<Rat> p(nv, Rat(0)), q(nv, Rat(0));
      p[a] = 1;
      q[b] = 1;
      line.span_points = {{p, q}};
      A.lines.push_back(std::move(line));
    }
    for (int i = 1; i <= k_gen && ok; ++i) {
      Line line;
      for (int v : pattern_indices(i, n))
        line.forms.push_back(form_from_coeffs(l[v], nv));
      try {
        line.span_points = points_on(line.forms, nv);
      } catch (const input_error&) {
        ok = false;
        break;
      }
      A.lines.push_back(std::move(line));
    }
    if (!ok) continue;
    std::vector<std::string> keys;
    for (const auto& line : A.lines) keys.push_back(span_key(line, nv));
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) continue;
    return A;
  }
  throw input_error("mixed staircase: seeds exhausted");
}

LineArrangement staircase(int m, int n, std::uint64_t seed) {
  if (2 * m <= n + 1) return staircase_monomial(m, n);
  return staircase_mixed(m, n, seed);
}

namespace {

LineArrangement from_form_strings(
    int n, const std::string& id,
    const std::vector<std::vector<std::string>>& lines) {
  const int nv = n + 1;
  LineArrangement A;
  A.n = n;
  A.prov = {Provenance::Kind::named, 0, id, Rat(0), Rat(0)};
  for (const auto& forms : lines) {
    Line line;
    for (const auto& f : forms)
      line.forms.push_back(Polynomial::parse(f, nv, kOrder));
    line.span_points = points_on(line.forms, nv);
    A.lines.push_back(std::move(line));
  }
  return A;
}

}  // namespace

LineArrangement named_three_p4() {
  return from_form_strings(4, "three_p4",
                           {{"x0", "x1", "x3"},
                            {"x0", "x2", "x4"},
                            {"x1", "x2", "x3 + x4"}});
}

LineArrangement named_four_p3_special() {
  return from_form_strings(3, "four_p3_special",
                           {{"x0", "x1"},
                            {"x2", "x3"},
                            {"x0 + x2", "x1 - x3"},
                            {"x0 - x2", "x1 + x3"}});
}

LineArrangement named_five_p6(const Rat& a, const Rat& b) {
  const int nv = 7;
  if (a == 0 || b == 0) throw input_error("five_p6 needs nonzero a, b");
  LineArrangement A;
  A.n = 6;
  A.prov = {Provenance::Kind::named, 0, "five_p6", a, b};
  auto var = [&](int v) { return Polynomial::variable(v, nv); };
  auto mk = [&](std::vector<Polynomial> forms) {
    Line line{std::move(forms), std::nullopt};
    line.span_points = points_on(line.forms, nv);
    A.lines.push_back(std::move(line));
  };
  MonomialOrder ord = kOrder;
  mk({var(0), var(3), var(4), var(5), var(6)});
  mk({var(0), var(1), var(4), var(5),
      var(2).plus(var(3).scaled(a), ord).plus(var(6), ord)});
  mk({var(0), var(1), var(2), var(6),
      var(3).plus(var(4).scaled(b), ord).plus(var(5), ord)});
  mk({var(1), var(2), var(3), var(5),
      var(0).plus(var(4), ord).plus(var(6), ord)});
  mk({var(2), var(3), var(4), var(6),
      var(0).plus(var(1), ord).plus(var(5), ord)});
  return A;
}

LineArrangement named_arrangement(const std::string& id) {
  if (id == "three_p4") return named_three_p4();
  if (id == "four_p3_special") return named_four_p3_special();
  if (id == "five_p6")
    return named_five_p6(make_rat(10007, 9973), make_rat(9967, 9949));
  throw input_error("unknown arrangement id: " + id);
}

Ideal defining_ideal(const LineArrangement& A, const MonomialOrder& order) {
  if (A.lines.empty()) throw input_error("empty arrangement");
  Ideal J = A.line_ideal(0).canonicalized(order);
  for (std::size_t i = 1; i < A.lines.size(); ++i)
    J = intersect(J, A.line_ideal(i), order);
  return J.canonicalized(order);
}

bool general_position_check(const LineArrangement& A) {
  const int nv = A.nvars();
  std::vector<std::array<std::vector<Rat>, 2>> pts;
  for (const auto& line : A.lines) {
    if (!line.span_points) throw input_error("missing span points");
    pts.push_back(*line.span_points);
  }
  const int m = A.m();
  const int smax = std::min(m, (nv + 1) / 2);
  for (int s = 1; s <= smax; ++s) {
    std::vector<int> sel(s);
    for (int i = 0; i < s; ++i) sel[i] = i;
    while (true) {
      QMatrix mat(2 * s, nv);
      for (int i = 0; i < s; ++i)
        for (int r = 0; r < 2; ++r)
          for (int v = 0; v < nv; ++v)
            mat.at(2 * i + r, v) = pts[sel[i]][r][v];
      std::size_t want = std::min(2 * s, nv);
      if (mat.rank_exact() != want) return false;
      int i = s - 1;
      while (i >= 0 && sel[i] == m - s + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
    }
  }
  return true;
}

bool genericity_certificate(const LineArrangement& A, int max_degree,
                            const RankOptions& ropts) {
  Ideal J = defining_ideal(A, kOrder);
  for (int d = 0; d <= max_degree; ++d) {
    if (Int(hilbert_linalg(J, d, ropts)) !=
        generic_lines_hilbert(A.m(), A.n, d))
      return false;
  }
  return true;
}

}  // namespace linea
