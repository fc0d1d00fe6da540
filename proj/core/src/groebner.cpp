#include "linea/groebner.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "linea/qmatrix.hpp"

namespace linea {

bool GroebnerBasis::is_unit_ideal() const {
  return elems_.size() == 1 && elems_[0].leading_monomial().is_one();
}

bool GroebnerBasis::operator==(const GroebnerBasis& other) const {
  if (!(order_ == other.order_) || elems_.size() != other.elems_.size())
    return false;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (!elems_[i].equals(other.elems_[i])) return false;
  return true;
}

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  Polynomial work = f.resorted(order);
  std::vector<Term> out;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    const Polynomial* red = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lt.mon)) {
        red = &g;
        break;
      }
    }
    if (red) {
      work = work.axpy(lt.coeff / red->leading_term().coeff,
                       lt.mon.divide(red->leading_monomial()), *red, order);
    } else {
      out.push_back(lt);
      work = work.without_leading();
    }
  }
  return Polynomial::from_terms(f.nvars(), std::move(out), order);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  return normal_form(f, G.elements(), G.order());
}

bool is_member(const Polynomial& f, const GroebnerBasis& G) {
  return normal_form(f, G).is_zero();
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_monomial(l.divide(f.leading_monomial()))
                     .scaled(Rat(1) / f.leading_term().coeff);
  Polynomial b = g.times_monomial(l.divide(g.leading_monomial()))
                     .scaled(Rat(1) / g.leading_term().coeff);
  return a.minus(b, order);
}

// Minimalize + tail-reduce + monic + ascending sort: the canonical reduced
// form of a basis whose elements already generate with their leading terms.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> gens,
                                     const MonomialOrder& order) {
  std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
  std::sort(gens.begin(), gens.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.greater(b.leading_monomial(), a.leading_monomial());
            });
  std::vector<Polynomial> minimal;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  for (int pass = 0; pass < 2; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = normal_form(minimal[i], others, order).monic();
      if (!r.equals(minimal[i])) changed = true;
      minimal[i] = std::move(r);
    }
    if (!changed) break;
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.greater(b.leading_monomial(), a.leading_monomial());
            });
  return minimal;
}

struct PairEntry {
  Monomial lcm;
  std::size_t i, j;
};

}  // namespace

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order) {
  // Leading-term minimalization is only sound on a completed basis, so
  // inputs get just monic normalization and exact deduplication here.
  std::vector<Polynomial> G;
  for (const auto& g : I.gens) {
    if (g.is_zero()) continue;
    Polynomial p = g.resorted(order).monic();
    bool dup = false;
    for (const auto& kept : G)
      if (kept.equals(p)) {
        dup = true;
        break;
      }
    if (!dup) G.push_back(std::move(p));
  }
  if (G.empty()) return GroebnerBasis(order, {});

  auto pair_less = [&](const PairEntry& a, const PairEntry& b) {
    if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::multiset<PairEntry, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto push_pair = [&](std::size_t i, std::size_t j) {
    const Monomial& a = G[i].leading_monomial();
    const Monomial& b = G[j].leading_monomial();
    if (a.coprime(b)) return;  // S-polynomial reduces to zero
    queue.insert({Monomial::lcm(a, b), i, j});
    pending.insert({i, j});
  };

  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending.count({a, b}) > 0;
  };

  while (!queue.empty()) {
    PairEntry p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    // Chain criterion: a third element whose leading monomial divides the
    // lcm, with both connecting pairs already handled.
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (G[k].leading_monomial().divides(p.lcm) && !is_pending(p.i, k) &&
          !is_pending(p.j, k))
        skip = true;
    }
    if (skip) continue;

    Polynomial s = s_polynomial(G[p.i], G[p.j], order);
    Polynomial r = normal_form(s, G, order);
    if (r.is_zero()) continue;
    G.push_back(r.monic());
    std::size_t t = G.size() - 1;
    for (std::size_t i = 0; i < t; ++i) push_pair(i, t);
  }

  return GroebnerBasis(order, reduce_basis(std::move(G), order));
}

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
  return buchberger(a, order) == buchberger(b, order);
}

namespace {

Polynomial shift_vars_up(const Polynomial& p, const MonomialOrder& order) {
  int nv = p.nvars() + 1;
  if (nv > kMaxVars) throw input_error("too many variables for elimination");
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Monomial m = Monomial::one(nv);
    for (int i = 0; i < p.nvars(); ++i) m.e[i + 1] = t.mon.e[i];
    m.deg = t.mon.deg;
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(nv, std::move(terms), order);
}

Polynomial shift_vars_down(const Polynomial& p, const MonomialOrder& order) {
  int nv = p.nvars() - 1;
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Monomial m = Monomial::one(nv);
    for (int i = 0; i < nv; ++i) m.e[i] = t.mon.e[i + 1];
    m.deg = t.mon.deg;
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(nv, std::move(terms), order);
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
  if (a.nvars != b.nvars) throw input_error("ambient mismatch in intersect");
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.nvars);
  MonomialOrder elim = MonomialOrder::elim(1);
  int nv = a.nvars + 1;
  Polynomial t = Polynomial::variable(0, nv);
  Polynomial one_minus_t =
      Polynomial::constant(nv, Rat(1)).minus(t, elim);
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens)
    gens.push_back(t.times(shift_vars_up(f, elim), elim));
  for (const auto& g : b.gens)
    gens.push_back(one_minus_t.times(shift_vars_up(g, elim), elim));
  GroebnerBasis G = buchberger(Ideal(nv, std::move(gens)), elim);
  std::vector<Polynomial> kept;
  for (const auto& e : G.elements()) {
    bool pure = true;
    for (const auto& term : e.terms())
      if (term.mon.e[0]) {
        pure = false;
        break;
      }
    if (pure) kept.push_back(shift_vars_down(e, order));
  }
  return Ideal(a.nvars, reduce_basis(std::move(kept), order));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  if (g.is_zero()) throw input_error("division by zero polynomial");
  Polynomial work = f.resorted(order);
  Polynomial quot(f.nvars());
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    if (!g.leading_monomial().divides(lt.mon))
      throw input_error("inexact polynomial division");
    Rat c = lt.coeff / g.leading_term().coeff;
    Monomial m = lt.mon.divide(g.leading_monomial());
    quot = quot.plus(Polynomial::constant(f.nvars(), c).times_monomial(m),
                     order);
    work = work.axpy(c, m, g, order);
  }
  return quot;
}

Ideal colon(const Ideal& I, const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw input_error("colon by zero polynomial");
  Ideal fI(I.nvars, {f});
  Ideal meet = intersect(I, fI, order);
  std::vector<Polynomial> gens;
  gens.reserve(meet.gens.size());
  for (const auto& h : meet.gens)
    gens.push_back(divide_exact(h, f, order));
  return Ideal(I.nvars, reduce_basis(std::move(gens), order));
}

Ideal colon_ideal(const Ideal& I, const Ideal& J, const MonomialOrder& order) {
  if (I.nvars != J.nvars) throw input_error("ambient mismatch in colon");
  GroebnerBasis GI = buchberger(I, order);
  std::vector<const Polynomial*> outside;
  for (const auto& g : J.gens)
    if (!is_member(g, GI)) outside.push_back(&g);
  if (outside.empty())
    return Ideal(I.nvars, {Polynomial::constant(I.nvars, Rat(1))});
  Ideal acc = colon(I, *outside[0], order);
  for (std::size_t k = 1; k < outside.size(); ++k)
    acc = intersect(acc, colon(I, *outside[k], order), order);
  return acc;
}

Ideal initial_ideal(const GroebnerBasis& G) {
  std::vector<Polynomial> gens;
  gens.reserve(G.elements().size());
  int nv = G.nvars();
  for (const auto& e : G.elements()) {
    Polynomial m(nv);
    m = Polynomial::constant(nv, Rat(1)).times_monomial(e.leading_monomial());
    gens.push_back(std::move(m));
  }
  return Ideal(nv, std::move(gens));
}

std::map<int, long> minimal_generators_up_to(const Ideal& I, int max_degree,
                                             const MonomialOrder& order,
                                             const RankOptions& ropts) {
  if (!I.is_homogeneous())
    throw input_error("minimal generators need a homogeneous ideal");
  std::map<int, long> counts;
  int nv = I.nvars;
  for (int j = 1; j <= max_degree; ++j) {
    auto basis = monomials_of_degree(nv, j, order);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    QMatrix all(0, 0), shifted(0, 0);
    for (const auto& g : I.gens) {
      int dg = g.degree();
      if (dg > j) continue;
      for (const auto& u : monomials_of_degree(nv, j - dg, order)) {
        std::vector<Rat> row(basis.size(), Rat(0));
        for (const auto& t : g.terms()) row[index[t.mon.times(u)]] = t.coeff;
        if (dg < j) shifted.add_row(row);
        all.add_row(std::move(row));
      }
    }
    long cnt = long(all.rank(ropts).rank) - long(shifted.rank(ropts).rank);
    if (cnt > 0) counts[j] = cnt;
  }
  return counts;
}

long standard_monomial_count(const GroebnerBasis& G, int nvars, int d) {
  if (G.is_unit_ideal()) return 0;
  std::vector<Monomial> lts;
  lts.reserve(G.elements().size());
  for (const auto& e : G.elements()) lts.push_back(e.leading_monomial());
  long count = 0;
  for (const auto& m :
       monomials_of_degree(nvars, d, MonomialOrder::grevlex())) {
    bool divisible = false;
    for (const auto& l : lts)
      if (l.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) ++count;
  }
  return count;
}

}  // namespace linea
