#include <doctest.h>

#include <linea/qmatrix.hpp>

using namespace linea;

namespace {

QMatrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  SplitMix64 rng(seed);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = make_rat(rng.next_in(-20, 20), 1 + rng.next_in(0, 6));
  return m;
}

// Product of r x k and k x c factors has rank exactly k for random data;
// verified below against the exact path.
QMatrix known_rank(std::size_t r, std::size_t c, std::size_t k,
                   std::uint64_t seed) {
  QMatrix a = random_matrix(r, k, seed), b = random_matrix(k, c, seed + 1);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Rat acc(0);
      for (std::size_t t = 0; t < k; ++t) acc += a.at(i, t) * b.at(t, j);
      m.at(i, j) = acc;
    }
  return m;
}

}  // namespace

TEST_CASE("identity and zero ranks") {
  CHECK(QMatrix::identity(3).rank().rank == 3);
  QMatrix z(2, 5);
  CHECK(z.rank().rank == 0);
  CHECK(z.kernel_basis().size() == 5);
}

TEST_CASE("modular fast path agrees with exact elimination") {
  QMatrix m = random_matrix(20, 30, 99);
  auto mod_ranks = m.ranks_mod_primes(3, 5);
  REQUIRE(mod_ranks.size() == 3);
  std::size_t exact = m.rank_exact();
  for (auto r : mod_ranks) CHECK(r == exact);
  RankResult fast = m.rank();
  CHECK(fast.rank == exact);
  CHECK(!fast.used_exact);
  RankResult forced = m.rank({.force_exact = true});
  CHECK(forced.rank == exact);
  CHECK(forced.used_exact);
}

TEST_CASE("rank of structured products") {
  for (std::size_t k : {1u, 3u, 7u}) {
    QMatrix m = known_rank(12, 15, k, 1000 + k);
    CHECK(m.rank_exact() == k);
    CHECK(m.rank().rank == k);
  }
}

TEST_CASE("rank is transpose- and shuffle-invariant") {
  QMatrix m = known_rank(10, 14, 5, 77);
  CHECK(m.rank_exact() == m.transposed().rank_exact());
  QMatrix shuffled(0, 0);
  SplitMix64 rng(3);
  std::vector<std::size_t> perm(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) perm[i] = i;
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.next() % i]);
  for (std::size_t i : perm) {
    std::vector<Rat> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    shuffled.add_row(std::move(row));
  }
  CHECK(shuffled.rank_exact() == 5);
}

TEST_CASE("kernel vectors annihilate the matrix") {
  QMatrix m = known_rank(9, 12, 4, 42);
  auto kernel = m.kernel_basis();
  CHECK(kernel.size() == m.cols() - 4);
  for (const auto& v : kernel)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rat acc(0);
      for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
      CHECK(acc == 0);
    }
}

TEST_CASE("rref rank matches bareiss rank on random rectangles") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    QMatrix m = random_matrix(8, 11, 500 + s);
    QMatrix copy = m;
    CHECK(copy.rref() == m.rank_exact());
  }
}
