#include <map>

#include "doctest.h"
#include "rank2/parabolic.hpp"

using namespace rank2;

namespace {

// Oracle: gradation level dimensions by enumerating root coefficients and
// multiplicities, independent of the subspace machinery.
std::map<long, std::size_t> gradation_oracle(const SymmetricSpace& ss, std::size_t j) {
  std::map<long, std::size_t> dims;
  const RootSystem& rs = ss.model.abstractRoots;
  for (std::size_t i = 0; i < rs.positiveRoots.size(); ++i) {
    const auto& alpha = rs.positiveRoots[i];
    const long nu = static_cast<long>(numerator(alpha[j - 1]));
    if (nu == 0) continue;
    dims[nu] += ss.root(alpha).multiplicity;
  }
  return dims;
}

VecQ coeffs(int a, int b) {
  VecQ v(2);
  v[0] = a;
  v[1] = b;
  return v;
}

}  // namespace

TEST_CASE("gradation dimensions against the enumeration oracle") {
  struct Case {
    Preset preset;
    int n;
    std::size_t j;
    std::map<long, std::size_t> expected;
  };
  const std::vector<Case> cases = {
      {Preset::G2C_G2, 0, 1, {{1, 4}, {2, 2}, {3, 4}}},
      {Preset::G2C_G2, 0, 2, {{1, 8}, {2, 2}}},
      {Preset::SL3C_SU3, 0, 1, {{1, 4}}},
      {Preset::SO_2_NP2, 1, 1, {{1, 3}}},
      {Preset::SO_2_NP2, 3, 1, {{1, 5}}},
      {Preset::SO_2_NP2, 3, 2, {{1, 6}, {2, 1}}},
  };
  for (const auto& c : cases) {
    const SymmetricSpace ss = build_space(c.preset, c.n);
    CAPTURE(ss.model.id);
    CAPTURE(c.j);
    CHECK(gradation_oracle(ss, c.j) == c.expected);
    const ParabolicDecomposition pd = parabolic_decomposition(ss, c.j);
    std::map<long, std::size_t> got;
    for (const auto& [nu, piece] : pd.gradation) got[nu] = piece.dim();
    CHECK(got == c.expected);
  }
}

TEST_CASE("parabolic index out of range") {
  const SymmetricSpace ss = build_space(Preset::SL3C_SU3);
  CHECK_THROWS_AS(parabolic_decomposition(ss, 0), std::invalid_argument);
  CHECK_THROWS_AS(parabolic_decomposition(ss, 3), std::invalid_argument);
}

TEST_CASE("decomposition pieces and invariants per preset") {
  for (auto [preset, n] : std::vector<std::pair<Preset, int>>{
           {Preset::G2C_G2, 0}, {Preset::SL3C_SU3, 0}, {Preset::SO_2_NP2, 2}}) {
    const SymmetricSpace ss = build_space(preset, n);
    const LieAlgebraModel& m = ss.model;
    for (std::size_t j = 1; j <= 2; ++j) {
      CAPTURE(m.id);
      CAPTURE(j);
      const ParabolicDecomposition pd = parabolic_decomposition(ss, j);
      CHECK(pd.aj.dim() == 1);
      CHECK(pd.aUpperJ.dim() == 1);
      CHECK(pd.qj.dim() == pd.lj.dim() + pd.nj.dim());
      CHECK(pd.mj.dim() == pd.gj.dim() + pd.zj.dim());
      // k_j = k_0 + sum of k_alpha with dim k_alpha = mult(alpha)
      std::size_t expect_kj = ss.datum.k0.dim();
      for (const auto& alpha : pd.sigmaJPositive) expect_kj += ss.root(alpha).multiplicity;
      CHECK(pd.kj.dim() == expect_kj);
      CHECK(is_subalgebra(m, pd.lj));
      CHECK(is_subalgebra(m, pd.nj));
      CHECK(is_subalgebra(m, pd.mj));
      CHECK(is_subalgebra(m, pd.gj));
      CHECK(is_subalgebra(m, pd.kj));
      CHECK(is_subalgebra(m, pd.qj));
      // b_j = m_j cap p carries the boundary component
      const BoundaryComponentData bc = boundary_component_data(ss, pd);
      CHECK(bc.bj == pd.bj);
      CHECK(bc.gjCapKj.dim() + bc.bj.dim() == pd.gj.dim());
      // gradation bracket identity
      const GradationReport rep = gradation_check(ss, pd);
      CHECK(rep.ok);
      CHECK(rep.levels.size() == pd.gradation.size());
    }
  }
}

TEST_CASE("boundary component dimensions") {
  const SymmetricSpace g2 = build_space(Preset::G2C_G2);
  CHECK(boundary_component_data(g2, parabolic_decomposition(g2, 1)).dimBj == 3);
  CHECK(boundary_component_data(g2, parabolic_decomposition(g2, 2)).dimBj == 3);

  const SymmetricSpace sl3 = build_space(Preset::SL3C_SU3);
  CHECK(boundary_component_data(sl3, parabolic_decomposition(sl3, 1)).dimBj == 3);

  for (int n : {1, 2, 4}) {
    const SymmetricSpace so = build_space(Preset::SO_2_NP2, n);
    CHECK(boundary_component_data(so, parabolic_decomposition(so, 1)).dimBj ==
          static_cast<std::size_t>(n + 1));
    CHECK(boundary_component_data(so, parabolic_decomposition(so, 2)).dimBj == 2);
    // n_1 = n^1_1 of dimension n + 2
    const ParabolicDecomposition pd1 = parabolic_decomposition(so, 1);
    CHECK(pd1.nj.dim() == static_cast<std::size_t>(n + 2));
    CHECK(pd1.nj == pd1.levelOne());
  }
}

TEST_CASE("gradation check reports an offending triple on corruption") {
  const SymmetricSpace ss = build_space(Preset::SL3C_SU3);
  ParabolicDecomposition pd = parabolic_decomposition(ss, 1);
  // corrupt the level-1 piece with a vector that is not an eigenvector
  MatQ rows = pd.gradation.at(1).basis;
  rows.append_row(ss.datum.k0.basis.row(0));
  pd.gradation.at(1) = make_span(ss.model.id, ss.model.dim, std::move(rows));
  const GradationReport rep = gradation_check(ss, pd);
  CHECK_FALSE(rep.ok);
  CHECK(!rep.offending.empty());
}

TEST_CASE("q_{j,l} is the expected parabolic of g_j") {
  const SymmetricSpace g2 = build_space(Preset::G2C_G2);
  const ParabolicDecomposition pd2 = parabolic_decomposition(g2, 2);
  const Subspace q21 = parabolic_in_gj(g2, pd2, 1);
  // complex span of {H'_{a1}, X} inside g_2 = sl_2(C): real dimension 4
  CHECK(q21.dim() == 4);
  CHECK(span_contains(pd2.gj, q21));
  CHECK(is_subalgebra(g2.model, q21));
  // contains the full alpha_1 root space and the coroot line
  CHECK(span_contains(q21, g2.root(coeffs(1, 0)).space));
  const VecQ h = coroot(g2.model, g2.datum, coeffs(1, 0));
  CHECK(span_contains(q21, h));
  CHECK_THROWS_AS(parabolic_in_gj(g2, pd2, 2), std::invalid_argument);
}

TEST_CASE("theta-stability and centralizer relations") {
  const SymmetricSpace so = build_space(Preset::SO_2_NP2, 3);
  const ParabolicDecomposition pd = parabolic_decomposition(so, 1);
  CHECK(map_subspace(so.model.theta, pd.kj) == pd.kj);
  CHECK(map_subspace(so.model.theta, pd.mj) == pd.mj);
  // l_j is the full centralizer-normalizer of a_j (checked through brackets):
  // every basis vector of l_j sends a_j into a_j.
  for (std::size_t i = 0; i < pd.lj.dim(); ++i) {
    const VecQ br = so.model.bracket(pd.lj.basis.row(i), pd.aj.basis.row(0));
    for (const auto& c : br) CHECK(c == 0);
  }
}

TEST_CASE("grassmann frame") {
  for (int n : {1, 2, 3}) {
    const SymmetricSpace so = build_space(Preset::SO_2_NP2, n);
    const GrassmannFrame fr = grassmann_frame(so);
    CHECK(fr.e1f.size() == static_cast<std::size_t>(n));
    CHECK(fr.e2f.size() == static_cast<std::size_t>(n));
    // xi lies in n_1 and is k_1-invariant; [k_0, xi] = 0 in particular
    for (std::size_t r = 0; r < so.datum.k0.dim(); ++r) {
      const VecQ br = so.model.bracket(so.datum.k0.basis.row(r), fr.xi);
      for (const auto& c : br) CHECK(c == 0);
    }
    // T rotates e1f into e2f and e2f back into -c^2 e1f
    const MatQ adT = so.model.ad(fr.T);
    for (int s = 0; s < n; ++s) {
      CHECK(adT.apply(fr.e1f[s]) == fr.e2f[s]);
      const VecQ back = adT.apply(fr.e2f[s]);
      // [T,[T,u]] is a negative multiple of u
      bool proportional = false;
      for (const auto& c : back)
        if (!c.is_zero()) proportional = true;
      CHECK(proportional);
      const Subspace line = make_span(so.model.id, so.model.dim, [&] {
        MatQ rows(0, so.model.dim);
        rows.append_row(fr.e1f[s]);
        return rows;
      }());
      CHECK(span_contains(line, back));
    }
  }
}

TEST_CASE("gradation pieces equal the ad(H^j)-eigenspaces (eigen-solve oracle)") {
  for (auto [preset, n, j] : std::vector<std::tuple<Preset, int, std::size_t>>{
           {Preset::SO_2_NP2, 3, 1}, {Preset::SO_2_NP2, 2, 2}, {Preset::G2C_G2, 0, 2}}) {
    const SymmetricSpace ss = build_space(preset, n);
    const ParabolicDecomposition pd = parabolic_decomposition(ss, j);
    const MatQ adH = ss.model.ad(pd.Hj);
    for (const auto& [nu, piece] : pd.gradation) {
      // kernel of (ad H^j - nu) intersected with n_j, computed from scratch
      MatQ shifted = adH;
      for (std::size_t i = 0; i < ss.model.dim; ++i) shifted(i, i) -= Rational(nu);
      const Subspace eig =
          make_span(ss.model.id, ss.model.dim, shifted.right_kernel());
      CHECK(span_intersect(eig, pd.nj) == piece);
    }
  }
}
