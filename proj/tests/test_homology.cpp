#include <doctest.h>

#include "oracles.hpp"
#include "quiverpic/errors.hpp"
#include "quiverpic/homology.hpp"

using namespace quiverpic;

namespace {
std::vector<std::int64_t> as_int64(const SnfResult& r) {
  std::vector<std::int64_t> out;
  for (const BigInt& d : r.diagonal) out.push_back(d.convert_to<std::int64_t>());
  return out;
}

SparseMatrix to_sparse(const std::vector<std::vector<std::int64_t>>& m) {
  SparseMatrix s;
  s.rows = static_cast<int>(m.size());
  s.cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < s.cols; ++c)
    for (int r = 0; r < s.rows; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0)
        s.entries.push_back({r, c, m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]});
  return s;
}
}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(as_int64(smith_normal_form(std::vector<std::vector<std::int64_t>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) ==
        std::vector<std::int64_t>{1, 1, 1});
  CHECK(as_int64(smith_normal_form(std::vector<std::vector<std::int64_t>>{{2, 0}, {0, 3}})) == std::vector<std::int64_t>{1, 6});
  const auto z = smith_normal_form(std::vector<std::vector<std::int64_t>>{{0, 0}, {0, 0}});
  CHECK(z.diagonal.empty());
  CHECK(z.rank == 0);
  CHECK(as_int64(smith_normal_form(std::vector<std::vector<std::int64_t>>{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) ==
        std::vector<std::int64_t>{2, 6, 12});
}

TEST_CASE("property: smith normal form matches a dense gcd reduction on random matrices") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int rows = rng.uniform(1, 7), cols = rng.uniform(1, 7);
    const int density = rng.uniform(1, 4);
    std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(rows), std::vector<std::int64_t>(static_cast<std::size_t>(cols), 0));
    for (auto& row : m)
      for (auto& x : row)
        if (rng.uniform(0, 3) < density) x = rng.uniform(-6, 6);
    const auto want = oracle::snf_dense(m);
    const auto dense = smith_normal_form(m);
    const auto sparse = smith_normal_form(to_sparse(m));
    REQUIRE(as_int64(dense) == want);
    REQUIRE(as_int64(sparse) == want);
    REQUIRE(dense.rank == want.size());
    for (std::size_t t = 0; t + 1 < dense.diagonal.size(); ++t) REQUIRE(dense.diagonal[t + 1] % dense.diagonal[t] == 0);
  }
}

TEST_CASE("homology examples") {
  const auto h2 = homology_of(build_complex(SignVector::parse("+")));
  CHECK(h2.betti == std::vector<std::int64_t>{1, 2, 0});
  CHECK(h2.torsion_free());
  for (const auto& eps : SignVector::all(3)) CHECK(homology_of(build_complex(eps)).betti == std::vector<std::int64_t>{1, 3, 2, 0});
  for (const auto& eps : SignVector::all(5)) {
    const auto h = homology_of(build_complex(eps));
    CHECK(h.betti == std::vector<std::int64_t>{1, 5, 9, 5, 0, 0});
    CHECK(h.torsion_free());
  }
}

TEST_CASE("homology rejects a non-complex") {
  GradedComplex bad;
  bad.n = 1;
  bad.cells = {{Cell{}}, {Cell{{{0, 1}}}}, {Cell{{{0, 1}}}}};
  bad.d = {SparseMatrix{0, 1, {}}, SparseMatrix{1, 1, {{0, 0, 1}}}, SparseMatrix{1, 1, {{0, 0, 1}}}, SparseMatrix{1, 0, {}}};
  CHECK_THROWS_AS(homology_of(bad), InvalidComplexError);
}

TEST_CASE("fast betti numbers") {
  CHECK(betti_fast(SignVector::straight(9), 4) == 90);
  CHECK(betti_fast(SignVector::straight(7), 4) == 14);
  CHECK(betti_fast(SignVector::straight(6), 4) == 0);
  for (int j = 1; j <= 6; ++j) CHECK(betti_fast(SignVector::straight(2 * j - 1), j) == catalan(j));
}

TEST_CASE("property: full homology is given by ballot numbers without torsion, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& eps : SignVector::all(n)) {
      const auto h = homology_of(build_complex(eps));
      REQUIRE(h.torsion_free());
      REQUIRE(h.betti.size() == static_cast<std::size_t>(n) + 1);
      for (int k = 0; k <= n; ++k) REQUIRE(h.betti[static_cast<std::size_t>(k)] == ballot(n - k + 1, k));
      REQUIRE(h.betti == betti_fast_all(eps));
    }
}

TEST_CASE("property: associated graded betti numbers equal the full ones, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& eps : SignVector::all(n)) REQUIRE(associated_graded_betti(eps) == betti_fast_all(eps));
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(SignVector::parse("", 1)) == 0);
  CHECK(euler_characteristic(SignVector::parse("+")) == -1);
  for (int n = 1; n <= 7; ++n)
    for (const auto& eps : SignVector::all(n)) {
      std::int64_t cells = 0, betti = 0;
      for (int k = 0; k <= n; ++k) {
        const std::int64_t sign = k % 2 ? -1 : 1;
        cells += sign * static_cast<std::int64_t>(enumerate_cells(eps, k).size());
        betti += sign * ballot(n - k + 1, k);
      }
      REQUIRE(euler_characteristic(eps) == cells);
      REQUIRE(cells == betti);
    }
}
