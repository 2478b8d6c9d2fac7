#include <doctest.h>

#include "oracles.hpp"
#include "quiverpic/errors.hpp"
#include "quiverpic/quiver.hpp"

using namespace quiverpic;

namespace {
DimVector e(int n, int k) {
  DimVector v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(k - 1)] = 1;
  return v;
}
}  // namespace

TEST_CASE("sign vector parsing") {
  CHECK(SignVector::parse("+-+").str() == "+-+");
  CHECK(SignVector::parse("LRL").str() == "+-+");
  CHECK(SignVector::parse("+\xE2\x88\x92").str() == "+-");
  CHECK(SignVector::parse("", 1).n() == 1);
  CHECK(SignVector::parse("++", 3).n() == 3);
  CHECK_THROWS_AS(SignVector::parse("++", 4), DimensionError);
  CHECK_THROWS_AS(SignVector::parse("+x"), ParseError);
  CHECK(SignVector::all(3).size() == 4);
  CHECK(SignVector::all(3).front().str() == "++");
  CHECK(SignVector::all(3).back().str() == "--");
  CHECK(SignVector::straight(4).str() == "+++");
  CHECK(SignVector::parse("+--+").restrict_to(1, 4).str() == "--");
}

TEST_CASE("euler form examples") {
  const auto a1 = SignVector::parse("", 1);
  CHECK(euler_form(a1, e(1, 1), e(1, 1)) == 1);
  const auto a2 = SignVector::parse("+");
  CHECK(euler_form(a2, e(2, 2), e(2, 1)) == -1);
  CHECK(euler_form(a2, DimVector{1, 1}, DimVector{1, 1}) == 1);
  CHECK_THROWS_AS(euler_form(a2, DimVector{1}, DimVector{1, 1}), DimensionError);
}

TEST_CASE("positive roots") {
  CHECK(all_positive_roots(1) == std::vector<Root>{{0, 1}});
  CHECK(all_positive_roots(2) == std::vector<Root>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(all_positive_roots(5).size() == 15);
  CHECK(Root{2, 7}.name() == "x_2_7");
}

TEST_CASE("hom and ext dimensions") {
  const auto a2 = SignVector::parse("+");
  for (const auto& eps : SignVector::all(4))
    for (const Root& b : all_positive_roots(4)) CHECK(hom_dim(eps, b, b) == 1);
  CHECK(ext_dim(a2, {1, 2}, {0, 1}) == 1);
  CHECK(hom_dim(a2, {0, 2}, {0, 1}) == 0);
  CHECK(ext_dim(a2, {0, 2}, {0, 1}) == 0);
}

TEST_CASE("hom and ext agree with explicit linear algebra") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& eps : SignVector::all(n))
      for (const Root& a : all_positive_roots(n))
        for (const Root& b : all_positive_roots(n)) {
          CHECK(hom_dim(eps, a, b) == oracle::hom(eps, a, b));
          CHECK(ext_dim(eps, a, b) == oracle::ext(eps, a, b));
          CHECK(euler_form(eps, a, b) == oracle::euler(eps, oracle::dim(a, n), oracle::dim(b, n)));
        }
}

TEST_CASE("noncrossing examples") {
  const auto eps = SignVector::parse("+--+++");
  CHECK(noncrossing(eps, {0, 5}, {1, 4}));
  CHECK(noncrossing(eps, {0, 5}, {2, 7}));
  CHECK(noncrossing(SignVector::straight(3), {0, 1}, {2, 3}));
  CHECK_THROWS_AS(noncrossing(eps, {0, 2}, {2, 4}), PreconditionError);
}

TEST_CASE("orthogonality with shared endpoints") {
  for (const auto& eps : SignVector::all(3)) {
    CHECK(hom_orthogonal(eps, {0, 1}, {1, 2}));
    CHECK_FALSE(ext_orthogonal(eps, {0, 1}, {1, 2}));
    CHECK_FALSE(hom_orthogonal(eps, {0, 1}, {0, 2}));
    CHECK(ext_orthogonal(eps, {0, 1}, {0, 2}));
    CHECK_FALSE(hom_orthogonal(eps, {0, 2}, {0, 2}));
    CHECK_FALSE(ext_orthogonal(eps, {0, 2}, {0, 2}));
  }
  const auto eps = SignVector::parse("+--+++");
  CHECK(hom_orthogonal(eps, {0, 5}, {1, 4}));
  CHECK(ext_orthogonal(eps, {0, 5}, {1, 4}));
}

TEST_CASE("property: orthogonality predicates agree with the form, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& eps : SignVector::all(n)) {
      const auto roots = all_positive_roots(n);
      for (const Root& a : roots)
        for (const Root& b : roots) {
          REQUIRE(hom_dim(eps, a, b) - ext_dim(eps, a, b) == euler_form(eps, a, b));
          if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) continue;
          const bool nc = noncrossing(eps, a, b);
          const bool form = euler_form(eps, a, b) == 0 && euler_form(eps, b, a) == 0;
          REQUIRE(hom_orthogonal(eps, a, b) == nc);
          REQUIRE(ext_orthogonal(eps, a, b) == nc);
          REQUIRE(nc == form);
        }
    }
}

TEST_CASE("property: shared-endpoint rules match explicit hom and ext, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& eps : SignVector::all(n))
      for (const Root& a : all_positive_roots(n))
        for (const Root& b : all_positive_roots(n)) {
          CHECK(hom_orthogonal(eps, a, b) == oracle::hom_orth(eps, a, b));
          CHECK(ext_orthogonal(eps, a, b) == oracle::ext_orth(eps, a, b));
        }
}

TEST_CASE("property: euler form is bilinear") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.uniform(1, 8);
    const auto all = SignVector::all(n);
    const auto& eps = all[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(all.size()) - 1))];
    DimVector u(static_cast<std::size_t>(n)), v(u.size()), w(u.size()), uv(u.size());
    const int c = rng.uniform(-3, 3);
    for (std::size_t k = 0; k < u.size(); ++k) {
      u[k] = rng.uniform(-5, 5);
      v[k] = rng.uniform(-5, 5);
      w[k] = rng.uniform(-5, 5);
      uv[k] = u[k] + c * v[k];
    }
    REQUIRE(euler_form(eps, uv, w) == euler_form(eps, u, w) + c * euler_form(eps, v, w));
    REQUIRE(euler_form(eps, w, uv) == euler_form(eps, w, u) + c * euler_form(eps, w, v));
  }
}

TEST_CASE("projectives are dual to the simples") {
  CHECK(projective_dim(SignVector::parse("+"), 1) == DimVector{1, 0});
  CHECK(projective_dim(SignVector::parse("+"), 2) == DimVector{1, 1});
  for (int n = 1; n <= 8; ++n)
    for (const auto& eps : SignVector::all(n))
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) REQUIRE(euler_form(eps, projective_dim(eps, i), e(n, j)) == (i == j ? 1 : 0));
}

TEST_CASE("cluster compatibility") {
  using APR = AlmostPositiveRoot;
  CHECK(cluster_compatible(SignVector::straight(2), APR::negative_projective(1), APR::negative_projective(2)));
  for (const auto& eps : SignVector::all(2)) {
    CHECK(cluster_compatible(eps, APR::positive({1, 2}), APR::negative_projective(1)));
    CHECK_FALSE(cluster_compatible(eps, APR::positive({0, 2}), APR::negative_projective(1)));
  }
  const auto eps = SignVector::parse("+");
  std::vector<APR> vs{APR::positive({0, 1}), APR::positive({0, 2}), APR::positive({1, 2}), APR::negative_projective(1),
                      APR::negative_projective(2)};
  int edges = 0;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) edges += cluster_compatible(eps, vs[a], vs[b]);
  CHECK(edges == 5);
}

TEST_CASE("almost positive roots are ordered positives first") {
  using APR = AlmostPositiveRoot;
  CHECK(APR::positive({3, 4}) < APR::negative_projective(1));
  CHECK(APR::negative_projective(1) < APR::negative_projective(2));
  CHECK(APR::negative_projective(2).dim(SignVector::parse("+")) == DimVector{-1, -1});
  CHECK(APR::negative_projective(2).name() == "-p_2");
}
