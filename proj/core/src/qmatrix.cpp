#include "linea/qmatrix.hpp"

#include <algorithm>

namespace linea {

namespace {

constexpr std::uint32_t kPrimePool[] = {
    2147483647u, 2147483629u, 2147483587u, 2147483579u,
    2147483563u, 2147483549u, 2147483543u, 2147483497u,
    2147483489u, 2147483477u, 2147483423u, 2147483399u,
};
constexpr int kPoolSize = int(sizeof(kPrimePool) / sizeof(kPrimePool[0]));

}  // namespace

std::vector<std::uint32_t> select_primes(int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::uint32_t> out;
  std::vector<int> idx(kPoolSize);
  for (int i = 0; i < kPoolSize; ++i) idx[i] = i;
  for (int i = 0; i < count && !idx.empty(); ++i) {
    std::size_t k = rng.next() % idx.size();
    out.push_back(kPrimePool[idx[k]]);
    idx.erase(idx.begin() + k);
  }
  return out;
}

std::uint32_t mod_reduce(const Int& z, std::uint32_t p) {
  unsigned long r = mpz_fdiv_ui(z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid; a != 0 mod p.
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t mod_reduce(const Rat& q, std::uint32_t p) {
  std::uint32_t den = mod_reduce(q.get_den(), p);
  if (den == 0) throw bad_prime{};
  std::uint32_t num = mod_reduce(q.get_num(), p);
  return static_cast<std::uint32_t>(
      (std::uint64_t(num) * mod_inv(den, p)) % p);
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i][i] = 1;
  return m;
}

void QMatrix::add_row(std::vector<Rat> row) {
  if (cols_ == 0) cols_ = row.size();
  data_.push_back(std::move(row));
  rows_ = data_.size();
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j][i] = data_[i][j];
  return t;
}

std::size_t QMatrix::rank_exact() const {
  // Clear denominators per row; row scaling preserves rank.
  std::vector<std::vector<Int>> m(rows_, std::vector<Int>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    Int l(1);
    for (std::size_t j = 0; j < cols_; ++j)
      l = lcm(l, data_[i][j].get_den());
    for (std::size_t j = 0; j < cols_; ++j) {
      Rat v = data_[i][j] * l;
      m[i][j] = v.get_num();
    }
  }
  std::size_t rank = 0;
  Int prev(1);
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && m[piv][col] == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      for (std::size_t j = col + 1; j < cols_; ++j) {
        Int num = m[i][j] * m[rank][col] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

ModEchelon::ModEchelon(std::uint32_t p, std::size_t cols)
    : p_(p), cols_(cols) {}

std::size_t ModEchelon::insert(std::vector<std::uint32_t> row) {
  const std::uint64_t p = p_;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    std::uint32_t c = row[pivot_col_[k]];
    if (!c) continue;
    const auto& pr = pivots_[k];
    std::uint64_t mul = p - c;  // row += (p - c) * pivot (pivot entry is 1)
    for (std::size_t j = pivot_col_[k]; j < cols_; ++j) {
      if (pr[j])
        row[j] = static_cast<std::uint32_t>((row[j] + mul * pr[j]) % p);
    }
  }
  std::size_t lead = 0;
  while (lead < cols_ && row[lead] == 0) ++lead;
  if (lead == cols_) return pivots_.size();
  std::uint64_t inv = mod_inv(row[lead], p_);
  for (std::size_t j = lead; j < cols_; ++j)
    row[j] = static_cast<std::uint32_t>((row[j] * inv) % p);
  // Keep pivots sorted by column for cache-friendly reduction.
  std::size_t pos = 0;
  while (pos < pivot_col_.size() && pivot_col_[pos] < lead) ++pos;
  pivot_col_.insert(pivot_col_.begin() + pos, lead);
  pivots_.insert(pivots_.begin() + pos, std::move(row));
  return pivots_.size();
}

std::vector<std::size_t> QMatrix::ranks_mod_primes(int count,
                                                   std::uint64_t seed) const {
  std::vector<std::size_t> out;
  auto primes = select_primes(count + 4, seed);
  std::size_t taken = 0;
  for (std::uint32_t p : primes) {
    if (taken == std::size_t(count)) break;
    try {
      ModEchelon ech(p, cols_);
      std::size_t r = 0;
      for (std::size_t i = 0; i < rows_; ++i) {
        std::vector<std::uint32_t> row(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
          row[j] = mod_reduce(data_[i][j], p);
        r = ech.insert(std::move(row));
        if (r == cols_) break;
      }
      out.push_back(r);
      ++taken;
    } catch (const bad_prime&) {
      continue;
    }
  }
  return out;
}

RankResult QMatrix::rank(const RankOptions& opts) const {
  if (rows_ == 0 || cols_ == 0) return {0, false};
  if (!opts.force_exact) {
    auto ranks = ranks_mod_primes(opts.primes, opts.seed);
    if (int(ranks.size()) == opts.primes &&
        std::all_of(ranks.begin(), ranks.end(),
                    [&](std::size_t r) { return r == ranks[0]; }))
      return {ranks[0], false};
  }
  return {rank_exact(), true};
}

std::size_t QMatrix::rref() {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && data_[piv][col] == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(data_[piv], data_[rank]);
    Rat inv = Rat(1) / data_[rank][col];
    for (std::size_t j = col; j < cols_; ++j) data_[rank][j] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank || data_[i][col] == 0) continue;
      Rat f = data_[i][col];
      for (std::size_t j = col; j < cols_; ++j)
        data_[i][j] -= f * data_[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rat>> QMatrix::kernel_basis() const {
  QMatrix r = *this;
  std::size_t rank = r.rref();
  std::vector<std::int64_t> pivot_of_col(cols_, -1);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t col = 0;
    while (col < cols_ && r.data_[i][col] == 0) ++col;
    pivot_of_col[col] = static_cast<std::int64_t>(i);
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[f] = 1;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -r.data_[pivot_of_col[c]][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace linea
