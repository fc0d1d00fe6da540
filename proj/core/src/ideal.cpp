#include "linea/ideal.hpp"

#include <algorithm>

namespace linea {

Ideal::Ideal(int nvars_, std::vector<Polynomial> gens_) : nvars(nvars_) {
  for (auto& g : gens_) {
    if (g.is_zero()) continue;
    if (g.nvars() != nvars_) throw input_error("generator/ambient mismatch");
    gens.push_back(std::move(g));
  }
}

Ideal Ideal::from_strings(int nvars, const std::vector<std::string>& texts,
                          const MonomialOrder& order) {
  std::vector<Polynomial> gs;
  gs.reserve(texts.size());
  for (const auto& t : texts) gs.push_back(Polynomial::parse(t, nvars, order));
  return Ideal(nvars, std::move(gs));
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

int Ideal::max_gen_degree() const {
  int d = 0;
  for (const auto& g : gens) d = std::max(d, g.degree());
  return d;
}

Ideal Ideal::canonicalized(const MonomialOrder& order) const {
  std::vector<Polynomial> gs;
  gs.reserve(gens.size());
  for (const auto& g : gens) gs.push_back(g.resorted(order));
  std::sort(gs.begin(), gs.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order.greater(b.leading_monomial(), a.leading_monomial());
  });
  return Ideal(nvars, std::move(gs));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.nvars != b.nvars) throw input_error("ambient mismatch in ideal sum");
  std::vector<Polynomial> gs = a.gens;
  gs.insert(gs.end(), b.gens.begin(), b.gens.end());
  return Ideal(a.nvars, std::move(gs));
}

}  // namespace linea
