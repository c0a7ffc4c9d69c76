#include "rank2/parabolic.hpp"

#include <algorithm>

namespace rank2 {

namespace {

Subspace bracket_image(const LieAlgebraModel& m, const Subspace& s, const Subspace& t) {
  MatQ rows(0, m.dim);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      rows.append_row(m.bracket(s.basis.row(i), t.basis.row(j)));
  return make_span(m.id, m.dim, std::move(rows));
}

void require(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace

SymmetricSpace build_space(Preset preset, int n) {
  SymmetricSpace ss{build_model(preset, n), {}};
  ss.datum = restricted_root_decomposition(ss.model);
  return ss;
}

ParabolicDecomposition parabolic_decomposition(const SymmetricSpace& ss, std::size_t j) {
  const LieAlgebraModel& m = ss.model;
  const RootSystem& rs = m.abstractRoots;
  if (j < 1 || j > rs.rank) throw std::invalid_argument("parabolic index out of range");

  ParabolicDecomposition pd;
  pd.j = j;
  for (std::size_t i = 0; i < rs.rank; ++i)
    if (i != j - 1) pd.phi.push_back(rs.simpleRoots[i]);

  // Sigma_j: roots supported away from alpha_j.
  std::vector<VecQ> sigmaJ;
  for (const auto& alpha : rs.allRoots)
    if (alpha[j - 1].is_zero()) sigmaJ.push_back(alpha);
  for (const auto& alpha : sigmaJ) {
    bool pos = true;
    for (const auto& c : alpha) pos = pos && c >= 0;
    if (pos) pd.sigmaJPositive.push_back(alpha);
  }

  MatQ ljRows = ss.datum.g0.basis;
  for (const auto& alpha : sigmaJ)
    for (std::size_t r = 0; r < ss.root(alpha).space.dim(); ++r)
      ljRows.append_row(ss.root(alpha).space.basis.row(r));
  pd.lj = make_span(m.id, m.dim, std::move(ljRows));

  MatQ njRows(0, m.dim);
  for (const auto& alpha : rs.positiveRoots) {
    if (alpha[j - 1].is_zero()) continue;
    const Subspace& sp = ss.root(alpha).space;
    for (std::size_t r = 0; r < sp.dim(); ++r) njRows.append_row(sp.basis.row(r));
    const long nu = static_cast<long>(numerator(alpha[j - 1]));
    auto it = pd.gradation.find(nu);
    if (it == pd.gradation.end()) {
      pd.gradation.emplace(nu, sp);
    } else {
      it->second = span_sum(it->second, sp);
    }
  }
  pd.nj = make_span(m.id, m.dim, std::move(njRows));

  // a_j = intersection of ker alpha over Phi_j, inside a.
  {
    const std::size_t ra = m.aBasis.dim();
    MatQ constraints(pd.phi.size(), ra);
    for (std::size_t r = 0; r < pd.phi.size(); ++r)
      for (std::size_t u = 0; u < ra; ++u) {
        Rational val = 0;
        for (std::size_t i = 0; i < rs.rank; ++i) val += pd.phi[r][i] * m.realization(i, u);
        constraints(r, u) = val;
      }
    const MatQ ker = constraints.right_kernel();
    MatQ rows(ker.rows(), m.dim);
    for (std::size_t r = 0; r < ker.rows(); ++r)
      for (std::size_t u = 0; u < ra; ++u)
        if (!ker(r, u).is_zero())
          for (std::size_t c = 0; c < m.dim; ++c)
            rows(r, c) += ker(r, u) * m.aBasis.basis(u, c);
    pd.aj = make_span(m.id, m.dim, std::move(rows));
  }
  require(pd.aj.dim() == 1, "a_j is not one-dimensional");
  pd.aUpperJ = span_complement_within(m.aBasis, pd.aj, m.ip);
  require(span_sum(pd.aj, pd.aUpperJ) == m.aBasis, "a does not split as a_j + a^j");

  pd.mj = span_complement_within(pd.lj, pd.aj, m.ip);

  // g_j = [m_j, m_j] iterated to a fixed point.
  Subspace gj = bracket_image(m, pd.mj, pd.mj);
  for (;;) {
    Subspace next = span_sum(gj, bracket_image(m, gj, gj));
    if (next == gj) break;
    gj = next;
  }
  pd.gj = gj;
  pd.zj = span_complement_within(pd.mj, pd.gj, m.ip);

  MatQ kjRows = ss.datum.k0.basis;
  for (const auto& alpha : pd.sigmaJPositive) {
    Subspace pm = span_sum(ss.root(alpha).space, ss.root(rs.negate(alpha)).space);
    Subspace ka = span_intersect(m.kBasis, pm);
    require(ka.dim() == ss.root(alpha).multiplicity, "dim k_alpha != mult(alpha)");
    pd.kAlpha.emplace(rs.label(alpha), ka);
    for (std::size_t r = 0; r < ka.dim(); ++r) kjRows.append_row(ka.basis.row(r));
  }
  pd.kj = make_span(m.id, m.dim, std::move(kjRows));

  pd.bj = span_intersect(pd.mj, m.pBasis);
  pd.qj = span_sum(pd.lj, pd.nj);
  pd.Hj = ss.datum.dualVectors[j - 1];

  // --- invariants ---
  require(spans_direct_sum<Rational>({pd.lj, pd.nj}, pd.qj), "q_j != l_j + n_j");
  Subspace man = span_sum(pd.mj, span_sum(pd.aj, pd.nj));
  require(pd.mj.dim() + 1 + pd.nj.dim() == man.dim() && man == pd.qj,
          "q_j != m_j + a_j + n_j");
  require(span_contains(pd.nj, bracket_image(m, pd.lj, pd.nj)), "[l_j, n_j] not inside n_j");
  require(span_contains(pd.nj, bracket_image(m, pd.kj, pd.nj)), "[k_j, n_j] not inside n_j");
  require(span_contains(ss.datum.k0, pd.zj), "z_j not inside k_0");
  require(bracket_image(m, pd.zj, pd.gj).dim() == 0, "[z_j, g_j] != 0");
  require(map_subspace(m.theta, pd.kj) == pd.kj, "k_j not theta-stable");
  const Subspace gjk = span_intersect(pd.gj, pd.kj);
  require(spans_direct_sum<Rational>({gjk, pd.bj}, pd.gj),
          "g_j != (g_j cap k_j) + b_j Cartan split");
  require(spans_direct_sum<Rational>({pd.gj, pd.zj}, pd.mj), "m_j != g_j + z_j");
  // gradation consistency
  {
    std::size_t total = 0;
    for (const auto& [nu, piece] : pd.gradation) total += piece.dim();
    require(total == pd.nj.dim(), "gradation does not fill n_j");
    for (const auto& [nu1, p1] : pd.gradation)
      for (const auto& [nu2, p2] : pd.gradation) {
        const Subspace img = bracket_image(m, p1, p2);
        auto it = pd.gradation.find(nu1 + nu2);
        if (it == pd.gradation.end())
          require(img.dim() == 0, "bracket escapes the gradation");
        else
          require(span_contains(it->second, img), "[n^mu, n^nu] not inside n^{mu+nu}");
      }
  }
  // n_j nilpotency: iterated brackets vanish at depth <= top level + 1.
  {
    Subspace depth = pd.nj;
    long steps = 0;
    while (depth.dim() > 0 && steps <= pd.topLevel() + 1) {
      depth = bracket_image(m, pd.nj, depth);
      ++steps;
    }
    require(depth.dim() == 0, "n_j not nilpotent at the expected depth");
  }
  // a^j is maximal abelian in b_j: its centralizer in b_j is itself.
  {
    MatQ sys(0, pd.bj.dim());
    for (std::size_t u = 0; u < pd.aUpperJ.dim(); ++u) {
      const MatQ adH = m.ad(pd.aUpperJ.basis.row(u));
      MatQ block(m.dim, pd.bj.dim());
      for (std::size_t c = 0; c < pd.bj.dim(); ++c) {
        const VecQ img = adH.apply(pd.bj.basis.row(c));
        for (std::size_t r = 0; r < m.dim; ++r) block(r, c) = img[r];
      }
      for (std::size_t r = 0; r < m.dim; ++r) sys.append_row(block.row(r));
    }
    const MatQ ker = sys.right_kernel();
    require(ker.rows() == pd.aUpperJ.dim(), "a^j is not maximal abelian in b_j");
  }
  return pd;
}

GradationReport gradation_check(const SymmetricSpace& ss, const ParabolicDecomposition& pd) {
  GradationReport rep;
  const LieAlgebraModel& m = ss.model;
  const VecQ h = pd.aj.basis.row(0);
  // alpha_j(h)
  Rational aj_h = 0;
  {
    const std::size_t ra = m.aBasis.dim();
    // coordinates of h in the a-basis
    const VecQ coords = span_coordinates(m.aBasis, h);
    for (std::size_t u = 0; u < ra; ++u) aj_h += coords[u] * m.realization(pd.j - 1, u);
  }
  for (const auto& [nu, piece] : pd.gradation) {
    for (std::size_t i = 0; i < piece.dim(); ++i) {
      const VecQ x = piece.basis.row(i);
      const VecQ lhs = m.bracket(h, x);
      for (std::size_t c = 0; c < m.dim; ++c) {
        if (lhs[c] != Rational(nu) * aj_h * x[c]) {
          rep.ok = false;
          rep.offending = "level " + std::to_string(nu) + ", basis vector " +
                          std::to_string(i) + ", coordinate " + std::to_string(c);
          return rep;
        }
      }
    }
    rep.levels.emplace_back(nu, piece.dim());
  }
  return rep;
}

BoundaryComponentData boundary_component_data(const SymmetricSpace&,
                                              const ParabolicDecomposition& pd) {
  BoundaryComponentData data;
  data.gjCapKj = span_intersect(pd.gj, pd.kj);
  data.bj = pd.bj;
  data.dimBj = pd.bj.dim();
  if (!spans_direct_sum<Rational>({data.gjCapKj, data.bj}, pd.gj))
    throw InvariantError("boundary component data: Cartan split failed");
  return data;
}

Subspace parabolic_in_gj(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                         std::size_t l) {
  const LieAlgebraModel& m = ss.model;
  const RootSystem& rs = m.abstractRoots;
  if (l == pd.j || l < 1 || l > rs.rank) throw std::invalid_argument("invalid l for q_{j,l}");
  // Parabolic of g for Lambda minus {alpha_j, alpha_l}; in rank two this is
  // the minimal parabolic g_0 + n.
  Subspace par = ss.datum.g0;
  for (const auto& alpha : rs.positiveRoots) par = span_sum(par, ss.root(alpha).space);
  // In higher generality the root spaces of the retained subsystem would be
  // added here; rank two leaves nothing to retain.
  return span_intersect(pd.gj, par);
}

GrassmannFrame grassmann_frame(const SymmetricSpace& ss) {
  const LieAlgebraModel& m = ss.model;
  if (m.preset != Preset::SO_2_NP2)
    throw std::invalid_argument("grassmann_frame requires the SO_2_NP2 preset");
  const RootSystem& rs = m.abstractRoots;
  const int n = m.n;
  GrassmannFrame fr;

  const VecQ a2 = rs.simpleRoots[1];
  VecQ a1pa2(2);
  a1pa2[0] = 1;
  a1pa2[1] = 1;
  const Subspace& g_a2 = ss.root(a2).space;
  const Subspace& g_a12 = ss.root(a1pa2).space;

  // T spans k_{alpha_1}.
  const VecQ a1 = rs.simpleRoots[0];
  Subspace ka1 = span_intersect(
      m.kBasis, span_sum(ss.root(a1).space, ss.root(rs.negate(a1)).space));
  if (ka1.dim() != 1) throw InvariantError("k_{alpha_1} is not a line");
  fr.T = ka1.basis.row(0);

  // e_1 x f_s: the canonical basis of g_{alpha_2}; e_2 x f_s := [T, e_1 x f_s].
  const MatQ adT = m.ad(fr.T);
  for (std::size_t s = 0; s < static_cast<std::size_t>(n); ++s) {
    const VecQ u = g_a2.basis.row(s);
    const VecQ w = adT.apply(u);
    if (!span_contains(g_a12, w)) throw InvariantError("[T, g_a2] escapes g_{a1+a2}");
    bool zero = true;
    for (const auto& c : w) zero = zero && c.is_zero();
    if (zero) throw InvariantError("[T, e1 x f_s] vanished");
    fr.e1f.push_back(u);
    fr.e2f.push_back(w);
  }
  // T maps the second leg back into the first (so(2)-rotation); check the
  // k_0-equivariance of the matching.
  Subspace k0 = ss.datum.k0;
  MatQ e2rows(0, m.dim);
  for (const auto& v : fr.e2f) e2rows.append_row(v);
  if (make_span(m.id, m.dim, std::move(e2rows)).dim() != static_cast<std::size_t>(n))
    throw InvariantError("frame is degenerate");
  for (std::size_t r = 0; r < k0.dim(); ++r) {
    const VecQ S = k0.basis.row(r);
    for (int s = 0; s < n; ++s) {
      // [S, e1 x f_s] matched with [S, e2 x f_s] through the same f-coords.
      const VecQ su = m.bracket(S, fr.e1f[s]);
      const VecQ sw = m.bracket(S, fr.e2f[s]);
      const VecQ tsu = adT.apply(su);
      if (tsu != sw) throw InvariantError("k_0 action does not commute with the frame matching");
    }
  }

  // xi: the k_1-trivial line of n_1, k_1 = k_0 + k_{alpha_2}.
  VecQ a1p2a2(2);
  a1p2a2[0] = 1;
  a1p2a2[1] = 2;
  Subspace n1 = span_sum(ss.root(a1).space, span_sum(g_a12, ss.root(a1p2a2).space));
  Subspace ka2 = span_intersect(
      m.kBasis, span_sum(ss.root(a2).space, ss.root(rs.negate(a2)).space));
  Subspace k1 = span_sum(ss.datum.k0, ka2);
  // {x in n_1 : [k1, x] = 0}
  MatQ sys(0, n1.dim());
  for (std::size_t r = 0; r < k1.dim(); ++r) {
    const MatQ adY = m.ad(k1.basis.row(r));
    MatQ block(m.dim, n1.dim());
    for (std::size_t c = 0; c < n1.dim(); ++c) {
      const VecQ img = adY.apply(n1.basis.row(c));
      for (std::size_t i = 0; i < m.dim; ++i) block(i, c) = img[i];
    }
    for (std::size_t i = 0; i < m.dim; ++i) sys.append_row(block.row(i));
  }
  const MatQ ker = sys.right_kernel();
  if (ker.rows() != 1) throw InvariantError("k_1-trivial part of n_1 is not a line");
  fr.xi = VecQ(m.dim, Rational(0));
  for (std::size_t c = 0; c < n1.dim(); ++c)
    for (std::size_t i = 0; i < m.dim; ++i) fr.xi[i] += ker(0, c) * n1.basis(c, i);
  return fr;
}

}  // namespace rank2
