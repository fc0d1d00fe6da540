#include "linea/betti.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace linea {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::uint64_t subset_key(const std::vector<int>& s) {
  std::uint64_t k = 0;
  for (int e : s) k |= (1ULL << e);
  return k;
}

using SparseRow = std::vector<std::pair<std::size_t, Rat>>;

// Rows of the degree-j piece of the i-th Koszul differential
// K_i (x) R -> K_{i-1} (x) R, basis pairs (subset, standard monomial).
std::vector<SparseRow> koszul_rows(const QuotientRing& R, int i, int j,
                                   std::size_t* cols_out) {
  const int nv = R.nvars();
  auto dom_subsets = subsets_of_size(nv, i);
  auto cod_subsets = subsets_of_size(nv, i - 1);
  std::unordered_map<std::uint64_t, std::size_t> cod_index;
  for (std::size_t s = 0; s < cod_subsets.size(); ++s)
    cod_index[subset_key(cod_subsets[s])] = s;
  long dom_dim_r = R.dim(j - i);
  long cod_dim_r = R.dim(j - i + 1);
  *cols_out = cod_subsets.size() * std::size_t(cod_dim_r);
  std::vector<SparseRow> rows;
  if (dom_dim_r == 0 || *cols_out == 0) return rows;
  rows.reserve(dom_subsets.size() * dom_dim_r);
  for (const auto& T : dom_subsets) {
    std::uint64_t key = subset_key(T);
    for (long u = 0; u < dom_dim_r; ++u) {
      SparseRow row;
      for (std::size_t s = 0; s < T.size(); ++s) {
        int var = T[s];
        std::size_t block =
            cod_index.at(key & ~(1ULL << var)) * std::size_t(cod_dim_r);
        bool negate = (s % 2) == 1;
        for (const auto& [r, c] : R.mult(var, j - i, std::size_t(u)))
          row.push_back({block + r, negate ? Rat(-c) : c});
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

RankResult sparse_rank(const std::vector<SparseRow>& rows, std::size_t cols,
                       const RankOptions& opts) {
  if (rows.empty() || cols == 0) return {0, false};
  if (!opts.force_exact) {
    auto primes = select_primes(opts.primes + 4, opts.seed);
    std::vector<std::size_t> ranks;
    for (std::uint32_t p : primes) {
      if (int(ranks.size()) == opts.primes) break;
      try {
        ModEchelon ech(p, cols);
        std::size_t r = 0;
        for (const auto& row : rows) {
          std::vector<std::uint32_t> dense(cols, 0);
          for (const auto& [c, v] : row) {
            std::uint64_t add = mod_reduce(v, p);
            dense[c] = std::uint32_t((dense[c] + add) % p);
          }
          r = ech.insert(std::move(dense));
          if (r == cols) break;
        }
        ranks.push_back(r);
      } catch (const bad_prime&) {
        continue;
      }
    }
    if (int(ranks.size()) == opts.primes &&
        std::all_of(ranks.begin(), ranks.end(),
                    [&](std::size_t r) { return r == ranks[0]; }))
      return {ranks[0], false};
  }
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) m.at(i, c) += v;
  return {m.rank_exact(), true};
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  int workers = std::min<std::size_t>(jobs, count);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1))
        fn(k);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

BettiTable graded_betti(const Ideal& J, int imax, int jmax,
                        const RankOptions& ropts, int jobs) {
  const int nv = J.nvars;
  if (imax > nv) imax = nv;  // Koszul complex on nv variables ends there
  QuotientRing R(J.canonicalized(MonomialOrder::grevlex()),
                 MonomialOrder::grevlex());
  R.warm_up(jmax + 1);

  // rank[(i,j)] of the i-th differential in degree j, i = 1..imax+1.
  struct Task {
    int i, j;
  };
  std::vector<Task> tasks;
  for (int i = 1; i <= std::min(imax + 1, nv); ++i)
    for (int j = i; j <= jmax; ++j) tasks.push_back({i, j});

  std::map<std::pair<int, int>, std::size_t> rank;
  std::vector<std::size_t> results(tasks.size(), 0);
  std::atomic<bool> any_exact{false};
  parallel_for(tasks.size(), jobs, [&](std::size_t k) {
    std::size_t cols = 0;
    auto rows = koszul_rows(R, tasks[k].i, tasks[k].j, &cols);
    RankOptions o = ropts;
    o.seed = ropts.seed + 0x9e37 * (tasks[k].i + 13 * tasks[k].j);
    RankResult rr = sparse_rank(rows, cols, o);
    results[k] = rr.rank;
    if (rr.used_exact) any_exact = true;
  });
  for (std::size_t k = 0; k < tasks.size(); ++k)
    rank[{tasks[k].i, tasks[k].j}] = results[k];

  auto rank_at = [&](int i, int j) -> long {
    if (i < 1 || i > nv || j < i) return 0;
    auto it = rank.find({i, j});
    return it == rank.end() ? 0 : long(it->second);
  };

  BettiTable table;
  table.imax = imax;
  table.jmax = jmax;
  table.used_exact = any_exact.load();
  for (int i = 0; i <= imax; ++i) {
    for (int j = i; j <= jmax; ++j) {
      if (j - i < 0) continue;
      long chain = 0;
      Int c = binomial(nv, i);
      chain = c.get_si() * R.dim(j - i);
      long beta = chain - rank_at(i, j) - rank_at(i + 1, j);
      if (beta != 0) table.entries[{i, j}] = beta;
    }
  }
  for (const auto& [key, val] : table.entries) {
    if (val == 0) continue;
    if ((key.first == imax && imax < nv) || key.second == jmax)
      table.truncated = true;
  }
  return table;
}

int pdim_of(const BettiTable& table) {
  if (table.truncated) throw input_error("Betti table truncated; raise bounds");
  int p = 0;
  for (const auto& [key, val] : table.entries)
    if (val != 0) p = std::max(p, key.first);
  return p;
}

int reg_of(const BettiTable& table) {
  if (table.truncated) throw input_error("Betti table truncated; raise bounds");
  int r = 0;
  for (const auto& [key, val] : table.entries)
    if (val != 0) r = std::max(r, key.second - key.first);
  return r;
}

std::string render_betti(const BettiTable& table) {
  int pdim = 0, reg = 0;
  for (const auto& [key, val] : table.entries)
    if (val != 0) {
      pdim = std::max(pdim, key.first);
      reg = std::max(reg, key.second - key.first);
    }
  std::vector<std::size_t> width(pdim + 1, 1);
  for (int i = 0; i <= pdim; ++i)
    for (int r = 0; r <= reg; ++r)
      width[i] = std::max(width[i],
                          std::to_string(table.at(i, i + r)).size());
  std::ostringstream os;
  os << "    ";
  for (int i = 0; i <= pdim; ++i) {
    os << " ";
    std::string h = std::to_string(i);
    os << std::string(width[i] > h.size() ? width[i] - h.size() : 0, ' ') << h;
  }
  os << "\n";
  for (int r = 0; r <= reg; ++r) {
    std::string label = std::to_string(r) + ":";
    os << std::string(4 > label.size() ? 4 - label.size() : 0, ' ') << label;
    for (int i = 0; i <= pdim; ++i) {
      long v = table.at(i, i + r);
      std::string cell = v == 0 ? "-" : std::to_string(v);
      os << " "
         << std::string(width[i] > cell.size() ? width[i] - cell.size() : 0,
                        ' ')
         << cell;
    }
    os << "\n";
  }
  return os.str();
}

bool mantero_inequality_check(const BettiTable& table, long quadric_count) {
  for (int i = 2; i <= quadric_count; ++i) {
    Int bound = binomial(quadric_count, i);
    if (Int(table.at(i, i + 1)) > bound) return false;
  }
  return true;
}

namespace {

// Incremental exact echelon over Q for minimal-generator extraction.
class QEchelon {
 public:
  explicit QEchelon(std::size_t cols) : cols_(cols) {}
  bool insert(std::vector<Rat> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rat& c = v[lead_[k]];
      if (c == 0) continue;
      Rat f = c;
      for (std::size_t j = 0; j < cols_; ++j) v[j] -= f * rows_[k][j];
    }
    std::size_t lead = 0;
    while (lead < cols_ && v[lead] == 0) ++lead;
    if (lead == cols_) return false;
    Rat inv = Rat(1) / v[lead];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    lead_.push_back(lead);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> lead_;
};

struct FreeGen {
  int deg;
  std::vector<Polynomial> comps;  // one per generator of the previous module
};

}  // namespace

bool ResolutionProbe::linear_through(int steps, int cutoff) const {
  for (const auto& [key, val] : betti)
    if (val != 0 && key.first != key.second && key.first <= steps &&
        key.second <= cutoff)
      return false;
  return true;
}

ResolutionProbe residue_field_resolution(const Ideal& J, int steps, int cutoff,
                                         const RankOptions& ropts) {
  (void)ropts;
  if (steps < 1 || cutoff < steps)
    throw input_error("resolution probe needs steps >= 1, cutoff >= steps");
  QuotientRing R(J.canonicalized(MonomialOrder::grevlex()),
                 MonomialOrder::grevlex());
  R.warm_up(cutoff + 1);
  const int nv = R.nvars();
  const MonomialOrder& ord = R.order();

  ResolutionProbe probe;
  probe.betti[{0, 0}] = 1;
  probe.betti[{1, 1}] = nv;

  // F_1 -> F_0 = R, columns the variables.
  std::vector<FreeGen> cur;
  std::vector<int> prev_degs{0};
  for (int v = 0; v < nv; ++v)
    cur.push_back({1, {Polynomial::variable(v, nv)}});

  for (int i = 1; i < steps; ++i) {
    // Degree-j coordinates of the domain: pairs (gen g, monomial u).
    auto dom_offsets = [&](int j) {
      std::vector<std::size_t> off(cur.size() + 1, 0);
      for (std::size_t g = 0; g < cur.size(); ++g)
        off[g + 1] = off[g] + std::size_t(std::max(0L, R.dim(j - cur[g].deg)));
      return off;
    };
    auto cod_offsets = [&](int j) {
      std::vector<std::size_t> off(prev_degs.size() + 1, 0);
      for (std::size_t r = 0; r < prev_degs.size(); ++r)
        off[r + 1] = off[r] + std::size_t(std::max(0L, R.dim(j - prev_degs[r])));
      return off;
    };

    std::vector<FreeGen> next;
    std::vector<std::vector<std::vector<Rat>>> kernels(cutoff + 1);
    for (int j = 0; j <= cutoff; ++j) {
      auto doff = dom_offsets(j);
      auto coff = cod_offsets(j);
      std::size_t dom_dim = doff.back(), cod_dim = coff.back();
      if (dom_dim == 0) continue;
      QMatrix M(cod_dim, dom_dim);
      for (std::size_t g = 0; g < cur.size(); ++g) {
        int du = j - cur[g].deg;
        if (du < 0) continue;
        const auto& ubasis = R.basis(du);
        for (std::size_t u = 0; u < ubasis.size(); ++u) {
          std::size_t col = doff[g] + u;
          for (std::size_t r = 0; r < prev_degs.size(); ++r) {
            const Polynomial& comp = cur[g].comps[r];
            if (comp.is_zero()) continue;
            int dv = j - prev_degs[r];
            if (dv < 0) continue;
            Polynomial prod = R.reduce(comp.times_monomial(ubasis[u]));
            for (const auto& t : prod.terms())
              M.at(coff[r] + R.basis_index(dv, t.mon), col) = t.coeff;
          }
        }
      }
      kernels[j] = M.kernel_basis();

      // Minimal generators: kernel elements outside R_1 * (lower kernels).
      QEchelon ech(dom_dim);
      if (j > 0 && !kernels[j - 1].empty()) {
        auto doff_prev = dom_offsets(j - 1);
        for (const auto& w : kernels[j - 1]) {
          for (int v = 0; v < nv; ++v) {
            std::vector<Rat> img(dom_dim, Rat(0));
            for (std::size_t g = 0; g < cur.size(); ++g) {
              int du = j - 1 - cur[g].deg;
              if (du < 0) continue;
              for (long u = 0; u < R.dim(du); ++u) {
                const Rat& c = w[doff_prev[g] + u];
                if (c == 0) continue;
                for (const auto& [row, mc] : R.mult(v, du, std::size_t(u)))
                  img[doff[g] + row] += c * mc;
              }
            }
            ech.insert(std::move(img));
          }
        }
      }
      long fresh = 0;
      for (const auto& w : kernels[j]) {
        if (!ech.insert(w)) continue;
        ++fresh;
        FreeGen gen;
        gen.deg = j;
        gen.comps.resize(cur.size(), Polynomial(nv));
        for (std::size_t g = 0; g < cur.size(); ++g) {
          int du = j - cur[g].deg;
          if (du < 0) continue;
          std::vector<Term> terms;
          const auto& ubasis = R.basis(du);
          auto doff2 = dom_offsets(j);
          for (std::size_t u = 0; u < ubasis.size(); ++u) {
            const Rat& c = w[doff2[g] + u];
            if (c != 0) terms.push_back({ubasis[u], c});
          }
          gen.comps[g] = Polynomial::from_terms(nv, std::move(terms), ord);
        }
        next.push_back(std::move(gen));
      }
      if (fresh > 0) {
        probe.betti[{i + 1, j}] = fresh;
        if (j == cutoff) probe.cutoff_hit = true;
      }
    }

    prev_degs.clear();
    for (const auto& g : cur) prev_degs.push_back(g.deg);
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return probe;
}

bool derksen_sidman_check(const std::vector<Ideal>& linear_ideals,
                          const RankOptions& ropts) {
  if (linear_ideals.empty()) throw input_error("empty ideal list");
  const int nv = linear_ideals[0].nvars;
  for (const auto& I : linear_ideals)
    for (const auto& g : I.gens)
      if (g.degree() != 1)
        throw input_error("derksen_sidman_check needs linear generators");
  MonomialOrder ord = MonomialOrder::grevlex();
  Ideal meet = linear_ideals[0];
  for (std::size_t k = 1; k < linear_ideals.size(); ++k)
    meet = intersect(meet, linear_ideals[k], ord);
  int bound = int(linear_ideals.size());
  BettiTable t = graded_betti(meet, nv, nv + bound + 1, ropts);
  return reg_of(t) <= bound;
}

}  // namespace linea
