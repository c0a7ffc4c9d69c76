#include <random>

#include "doctest.h"
#include "rank2/liealg.hpp"

using namespace rank2;

namespace {

VecQ coeffs(std::initializer_list<int> c) {
  VecQ v;
  for (int x : c) v.push_back(Rational(x));
  return v;
}

VecQ random_vec(std::mt19937_64& eng, std::size_t dim) {
  VecQ v(dim);
  for (auto& x : v) x = Rational(static_cast<long>(eng() % 9) - 4, 1 + eng() % 2);
  return v;
}

// Eigen-solve oracle: dimensions of ker(ad(h) - lambda) inside a subspace.
std::size_t eigenspace_dim_in(const LieAlgebraModel& m, const VecQ& h, const Rational& lambda,
                              const Subspace& inside) {
  const MatQ adh = m.ad(h);
  MatQ rows(inside.dim(), m.dim);
  // restrict ad(h) - lambda to the subspace and count the kernel
  MatQ sys(inside.dim(), 0);
  std::vector<VecQ> imgs;
  for (std::size_t i = 0; i < inside.dim(); ++i) {
    VecQ img = adh.apply(inside.basis.row(i));
    for (std::size_t j = 0; j < m.dim; ++j) img[j] -= lambda * inside.basis(i, j);
    imgs.push_back(img);
  }
  MatQ big(inside.dim(), m.dim);
  for (std::size_t i = 0; i < inside.dim(); ++i)
    for (std::size_t j = 0; j < m.dim; ++j) big(i, j) = imgs[i][j];
  return inside.dim() - big.rank();
}

}  // namespace

TEST_CASE("model dimensions") {
  const LieAlgebraModel g2 = build_model(Preset::G2C_G2);
  CHECK(g2.dim == 28);
  CHECK(g2.pBasis.dim() == 14);
  CHECK(g2.kBasis.dim() == 14);
  CHECK(g2.aBasis.dim() == 2);

  const LieAlgebraModel sl3 = build_model(Preset::SL3C_SU3);
  CHECK(sl3.dim == 16);
  CHECK(sl3.pBasis.dim() == 8);

  for (int n : {1, 2, 3}) {
    const LieAlgebraModel so = build_model(Preset::SO_2_NP2, n);
    CHECK(so.dim == static_cast<std::size_t>((n + 4) * (n + 3) / 2));
    CHECK(so.pBasis.dim() == static_cast<std::size_t>(2 * n + 4));
    CHECK(so.aBasis.dim() == 2);
  }
  CHECK_THROWS_AS(build_model(Preset::SO_2_NP2, 0), std::invalid_argument);
}

TEST_CASE("structural identities for every preset") {
  std::vector<LieAlgebraModel> models;
  models.push_back(build_model(Preset::G2C_G2));
  models.push_back(build_model(Preset::SL3C_SU3));
  models.push_back(build_model(Preset::SO_2_NP2, 2));
  for (const auto& m : models) {
    CAPTURE(m.id);
    CHECK(jacobi_holds(m));
    CHECK(theta_is_automorphism(m));
    CHECK(ad_invariance_holds(m));
    // Cartan split: bracket relations between k and p
    const auto& k = m.kBasis;
    const auto& p = m.pBasis;
    for (std::size_t i = 0; i < k.dim(); ++i)
      for (std::size_t j = 0; j < k.dim(); ++j)
        CHECK(span_contains(k, m.bracket(k.basis.row(i), k.basis.row(j))));
    for (std::size_t i = 0; i < k.dim(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j)
        CHECK(span_contains(p, m.bracket(k.basis.row(i), p.basis.row(j))));
    for (std::size_t i = 0; i < p.dim(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j)
        CHECK(span_contains(k, m.bracket(p.basis.row(i), p.basis.row(j))));
    // killing definiteness on k and p
    MatQ kg(k.dim(), k.dim()), pg(p.dim(), p.dim());
    for (std::size_t i = 0; i < k.dim(); ++i)
      for (std::size_t j = 0; j < k.dim(); ++j) {
        Rational s = 0;
        for (std::size_t u = 0; u < m.dim; ++u)
          for (std::size_t v = 0; v < m.dim; ++v)
            if (!k.basis(i, u).is_zero() && !k.basis(j, v).is_zero())
              s += k.basis(i, u) * m.killing(u, v) * k.basis(j, v);
        kg(i, j) = -s;
      }
    for (std::size_t i = 0; i < p.dim(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j) {
        Rational s = 0;
        for (std::size_t u = 0; u < m.dim; ++u)
          for (std::size_t v = 0; v < m.dim; ++v)
            if (!p.basis(i, u).is_zero() && !p.basis(j, v).is_zero())
              s += p.basis(i, u) * m.killing(u, v) * p.basis(j, v);
        pg(i, j) = s;
      }
    CHECK(symmetric_positive_definite(kg));
    CHECK(symmetric_positive_definite(pg));
    CHECK(symmetric_positive_definite(m.ip));
    // a is abelian and inside p
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(span_contains(p, m.aBasis.basis.row(i)));
      for (std::size_t j = 0; j < 2; ++j) {
        const VecQ br = m.bracket(m.aBasis.basis.row(i), m.aBasis.basis.row(j));
        for (const auto& x : br) CHECK(x == 0);
      }
    }
  }
}

TEST_CASE("bracket antisymmetry and dimension mismatch") {
  const LieAlgebraModel m = build_model(Preset::SL3C_SU3);
  std::mt19937_64 eng(5);
  for (int t = 0; t < 10; ++t) {
    const VecQ x = random_vec(eng, m.dim);
    const VecQ br = m.bracket(x, x);
    for (const auto& c : br) CHECK(c == 0);
  }
  CHECK_THROWS_AS(m.bracket(VecQ(3, Rational(0)), VecQ(m.dim, Rational(0))),
                  std::invalid_argument);
}

TEST_CASE("matrix commutator oracle (defining representations)") {
  for (auto [preset, n] : std::vector<std::pair<Preset, int>>{{Preset::SL3C_SU3, 0},
                                                              {Preset::SO_2_NP2, 1},
                                                              {Preset::SO_2_NP2, 3}}) {
    const LieAlgebraModel m = build_model(preset, n);
    REQUIRE(m.repMatrices.has_value());
    const auto& rep = *m.repMatrices;
    REQUIRE(rep.size() == m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t j = 0; j < m.dim; ++j) {
        const MatQ comm = rep[i] * rep[j] - rep[j] * rep[i];
        // expand the abstract bracket in the representation
        MatQ expected(rep[0].rows(), rep[0].cols());
        for (const auto& [k, c] : m.table[i][j]) expected = expected + c * rep[k];
        CHECK(comm == expected);
      }
  }
}

TEST_CASE("restricted root decomposition") {
  SUBCASE("G2C_G2: multiplicity 2 everywhere, dim k0 = 2") {
    const LieAlgebraModel m = build_model(Preset::G2C_G2);
    const RestrictedRootDatum d = restricted_root_decomposition(m);
    for (const auto& r : d.roots) CHECK(r.multiplicity == 2);
    CHECK(d.k0.dim() == 2);
  }
  SUBCASE("SL3C_SU3: multiplicity 2, k0 two-dimensional abelian") {
    const LieAlgebraModel m = build_model(Preset::SL3C_SU3);
    const RestrictedRootDatum d = restricted_root_decomposition(m);
    for (const auto& r : d.roots) CHECK(r.multiplicity == 2);
    CHECK(d.k0.dim() == 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const VecQ br = m.bracket(d.k0.basis.row(i), d.k0.basis.row(j));
        for (const auto& x : br) CHECK(x == 0);
      }
  }
  SUBCASE("SO_2_NP2: long roots multiplicity 1, short multiplicity n") {
    for (int n : {1, 2, 4}) {
      const LieAlgebraModel m = build_model(Preset::SO_2_NP2, n);
      const RestrictedRootDatum d = restricted_root_decomposition(m);
      const RootSystem& rs = m.abstractRoots;
      Rational longest = 0;
      for (const auto& r : rs.allRoots) longest = std::max(longest, rs.inner(r, r));
      for (std::size_t i = 0; i < rs.allRoots.size(); ++i) {
        const bool is_long = rs.inner(rs.allRoots[i], rs.allRoots[i]) == longest;
        CHECK(d.roots[i].multiplicity == (is_long ? 1u : static_cast<unsigned>(n)));
      }
      CHECK(d.k0.dim() == static_cast<std::size_t>(n * (n - 1) / 2));
    }
  }
  SUBCASE("bracket acts by the root functional on root spaces") {
    const LieAlgebraModel m = build_model(Preset::G2C_G2);
    const RestrictedRootDatum d = restricted_root_decomposition(m);
    for (std::size_t u = 0; u < 2; ++u) {
      const VecQ h = m.aBasis.basis.row(u);
      for (const auto& r : d.roots)
        for (std::size_t i = 0; i < r.space.dim(); ++i) {
          const VecQ x = r.space.basis.row(i);
          const VecQ br = m.bracket(h, x);
          for (std::size_t j = 0; j < m.dim; ++j) CHECK(br[j] == r.valuesOnA[u] * x[j]);
        }
    }
  }
  SUBCASE("duality relations for H_alpha and dual vectors") {
    for (auto [preset, n] :
         std::vector<std::pair<Preset, int>>{{Preset::G2C_G2, 0}, {Preset::SO_2_NP2, 2}}) {
      const LieAlgebraModel m = build_model(preset, n);
      const RestrictedRootDatum d = restricted_root_decomposition(m);
      const RootSystem& rs = m.abstractRoots;
      // alpha_k(H^i) = delta_ik
      for (std::size_t i = 0; i < rs.rank; ++i)
        for (std::size_t k = 0; k < rs.rank; ++k) {
          const RestrictedRoot& rk = d.root(rs, rs.simpleRoots[k]);
          // the root functional evaluated on H^i via the bracket
          const VecQ br = m.bracket(d.dualVectors[i], rk.space.basis.row(0));
          VecQ expect = rk.space.basis.row(0);
          for (auto& x : expect) x *= (i == k ? Rational(1) : Rational(0));
          CHECK(br == expect);
        }
      // <H_alpha, H> = alpha(H) for H in the a-basis
      for (const auto& r : d.roots)
        for (std::size_t u = 0; u < 2; ++u)
          CHECK(m.ip_of(r.hAlpha, m.aBasis.basis.row(u)) == r.valuesOnA[u]);
    }
  }
}

TEST_CASE("complex structure commutes with ad and preserves root spaces") {
  for (Preset preset : {Preset::G2C_G2, Preset::SL3C_SU3}) {
    const LieAlgebraModel m = build_model(preset);
    REQUIRE(m.complexJ.has_value());
    const MatQ& j = *m.complexJ;
    // ad(e_i) J = J ad(e_i) exhaustively over the basis
    for (std::size_t i = 0; i < m.dim; ++i) {
      VecQ e(m.dim, Rational(0));
      e[i] = 1;
      const MatQ adi = m.ad(e);
      CHECK(adi * j == j * adi);
    }
    const RestrictedRootDatum d = restricted_root_decomposition(m);
    for (const auto& r : d.roots) CHECK(map_subspace(j, r.space) == r.space);
  }
}

TEST_CASE("coroot normalization and eigenvalues") {
  const LieAlgebraModel m = build_model(Preset::G2C_G2);
  const RestrictedRootDatum d = restricted_root_decomposition(m);
  const RootSystem& rs = m.abstractRoots;
  for (const auto& alpha : rs.allRoots) {
    const VecQ h = coroot(m, d, alpha);
    const RestrictedRoot& r = d.root(rs, alpha);
    // alpha(H'_alpha) = 2: check through the bracket on the root space
    const VecQ x = r.space.basis.row(0);
    const VecQ br = m.bracket(h, x);
    for (std::size_t j = 0; j < m.dim; ++j) CHECK(br[j] == 2 * x[j]);
  }

  // ad(H'_{a1}) on the level-1 space of the j=2 parabolic has eigenvalues
  // {-3,-1,1,3}; on the level-2 space of j=1 it acts with eigenvalue 1,
  // while ad(H^1) acts there with eigenvalue 2 (the gradation level).
  const VecQ h1p = coroot(m, d, coeffs({1, 0}));
  const RestrictedRoot& r2a1 = d.root(rs, coeffs({2, 1}));
  CHECK(eigenspace_dim_in(m, h1p, Rational(1), r2a1.space) == 2);
  CHECK(eigenspace_dim_in(m, d.dualVectors[0], Rational(2), r2a1.space) == 2);

  Subspace n12 = d.root(rs, coeffs({0, 1})).space;
  n12 = span_sum(n12, d.root(rs, coeffs({1, 1})).space);
  n12 = span_sum(n12, d.root(rs, coeffs({2, 1})).space);
  n12 = span_sum(n12, d.root(rs, coeffs({3, 1})).space);
  REQUIRE(n12.dim() == 8);
  std::size_t sum = 0;
  for (int ev : {-3, -1, 1, 3}) {
    const std::size_t dimev = eigenspace_dim_in(m, h1p, Rational(ev), n12);
    CHECK(dimev == 2);
    sum += dimev;
  }
  CHECK(sum == 8);
}

TEST_CASE("torus rotation is an exact automorphism") {
  const LieAlgebraModel m = build_model(Preset::G2C_G2);
  const RestrictedRootDatum d = restricted_root_decomposition(m);
  // i H'_{a1} lies in k0 and has integral ad-spectrum.
  const VecQ h = coroot(m, d, coeffs({1, 0}));
  REQUIRE(m.complexJ.has_value());
  const VecQ ih = m.complexJ->apply(h);
  const MatQ r = torus_rotation(m, ih, Rational(3, 5), Rational(4, 5));
  // automorphism property on basis pairs
  std::mt19937_64 eng(23);
  for (int t = 0; t < 10; ++t) {
    const VecQ x = random_vec(eng, m.dim);
    const VecQ y = random_vec(eng, m.dim);
    CHECK(r.apply(m.bracket(x, y)) == m.bracket(r.apply(x), r.apply(y)));
  }
  // orthogonal w.r.t. the inner product
  const MatQ gram = r.transpose() * m.ip * r;
  CHECK(gram == m.ip);
}

TEST_CASE("killing form is proportional to the representation trace form") {
  for (auto [preset, n] : std::vector<std::pair<Preset, int>>{{Preset::SL3C_SU3, 0},
                                                              {Preset::SO_2_NP2, 3}}) {
    const LieAlgebraModel m = build_model(preset, n);
    REQUIRE(m.repMatrices.has_value());
    const auto& rep = *m.repMatrices;
    auto trace_form = [&](std::size_t i, std::size_t j) {
      const MatQ prod = rep[i] * rep[j];
      Rational t = 0;
      for (std::size_t k = 0; k < prod.rows(); ++k) t += prod(k, k);
      return t;
    };
    // find the proportionality constant on a nonzero diagonal entry
    Rational c = 0;
    for (std::size_t i = 0; i < m.dim && c == 0; ++i)
      if (trace_form(i, i) != 0) c = m.killing(i, i) / trace_form(i, i);
    REQUIRE(c != 0);
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t j = 0; j < m.dim; ++j)
        CHECK(m.killing(i, j) == c * trace_form(i, j));
  }
}
