#include "linea/quotient.hpp"

namespace linea {

QuotientRing::QuotientRing(Ideal J, const MonomialOrder& order)
    : nvars_(J.nvars),
      ideal_(std::move(J)),
      order_(order),
      gb_(buchberger(ideal_, order)) {
  if (!ideal_.is_homogeneous())
    throw input_error("quotient ring needs a homogeneous ideal");
}

void QuotientRing::warm_up(int max_degree) { extend(max_degree); }

void QuotientRing::extend(int max_degree) {
  for (int d = int(bases_.size()); d <= max_degree; ++d) {
    std::vector<Monomial> basis;
    std::vector<Monomial> lts;
    for (const auto& e : gb_.elements()) lts.push_back(e.leading_monomial());
    for (const auto& m : monomials_of_degree(nvars_, d, order_)) {
      bool divisible = false;
      for (const auto& l : lts)
        if (l.divides(m)) {
          divisible = true;
          break;
        }
      if (!divisible) basis.push_back(m);
    }
    std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
    for (std::size_t k = 0; k < basis.size(); ++k) idx[basis[k]] = k;
    bases_.push_back(std::move(basis));
    index_.push_back(std::move(idx));
  }
  // Multiplication maps from degrees below max_degree.
  for (int d = int(mult_.size()); d < max_degree; ++d) {
    std::vector<std::vector<SparseCol>> maps(nvars_);
    const auto& from = bases_[d];
    for (int v = 0; v < nvars_; ++v) {
      maps[v].resize(from.size());
      for (std::size_t c = 0; c < from.size(); ++c) {
        Monomial prod = from[c].times(Monomial::var(v, nvars_));
        auto hit = index_[d + 1].find(prod);
        if (hit != index_[d + 1].end()) {
          maps[v][c] = {{hit->second, Rat(1)}};
          continue;
        }
        Polynomial p =
            Polynomial::constant(nvars_, Rat(1)).times_monomial(prod);
        Polynomial nf = normal_form(p, gb_);
        SparseCol col;
        for (const auto& t : nf.terms())
          col.push_back({index_[d + 1].at(t.mon), t.coeff});
        maps[v][c] = std::move(col);
      }
    }
    mult_.push_back(std::move(maps));
  }
}

long QuotientRing::dim(int d) const {
  if (d < 0) return 0;
  return long(bases_.at(d).size());
}

const std::vector<Monomial>& QuotientRing::basis(int d) const {
  return bases_.at(d);
}

std::size_t QuotientRing::basis_index(int d, const Monomial& m) const {
  return index_.at(d).at(m);
}

const QuotientRing::SparseCol& QuotientRing::mult(int var, int d,
                                                  std::size_t col) const {
  return mult_.at(d)[var][col];
}

Polynomial QuotientRing::reduce(const Polynomial& p) const {
  return normal_form(p, gb_);
}

std::vector<Rat> QuotientRing::coords(const Polynomial& reduced, int d) const {
  std::vector<Rat> out(bases_.at(d).size(), Rat(0));
  for (const auto& t : reduced.terms()) out[index_.at(d).at(t.mon)] = t.coeff;
  return out;
}

}  // namespace linea
