#include "rank2/liealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace rank2 {

std::string preset_id(Preset p, int n) {
  switch (p) {
    case Preset::G2C_G2: return "g2c-g2";
    case Preset::SL3C_SU3: return "sl3c-su3";
    case Preset::SO_2_NP2: return "so-2-np2(" + std::to_string(n) + ")";
  }
  return "?";
}

VecQ LieAlgebraModel::bracket(const VecQ& x, const VecQ& y) const { return bracket_t(x, y); }

MatQ LieAlgebraModel::ad(const VecQ& x) const {
  MatQ m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j)
      for (const auto& [k, c] : table[i][j]) m(k, j) += x[i] * c;
  }
  return m;
}

Rational LieAlgebraModel::ip_of(const VecQ& x, const VecQ& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j)
      if (!y[j].is_zero()) s += x[i] * ip(i, j) * y[j];
  }
  return s;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
using Table = std::vector<std::vector<SparseRow>>;

VecQ unit_vec(std::size_t dim, std::size_t i) {
  VecQ v(dim, Rational(0));
  v[i] = 1;
  return v;
}

MatQ killing_from_table(const Table& table, std::size_t dim) {
  // B(e_i, e_j) = tr(ad e_i ad e_j); ad e_i column k -> table[i][k].
  std::vector<MatQ> ads(dim, MatQ(dim, dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (const auto& [k, c] : table[i][j]) ads[i](k, j) = c;
  MatQ b(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      Rational t = 0;
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l)
          if (!ads[i](k, l).is_zero() && !ads[j](l, k).is_zero())
            t += ads[i](k, l) * ads[j](l, k);
      b(i, j) = t;
      b(j, i) = t;
    }
  return b;
}

struct ComplexMat {
  MatQ re, im;
};

ComplexMat cmul_i(const ComplexMat& m) { return {Rational(-1) * m.im, m.re}; }

ComplexMat commutator(const ComplexMat& a, const ComplexMat& b) {
  return {a.re * b.re - a.im * b.im - (b.re * a.re - b.im * a.im),
          a.re * b.im + a.im * b.re - (b.re * a.im + b.im * a.re)};
}

MatQ realify(const ComplexMat& m) {
  const std::size_t n = m.re.rows();
  MatQ out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(2 * i, 2 * j) = m.re(i, j);
      out(2 * i + 1, 2 * j + 1) = m.re(i, j);
      out(2 * i, 2 * j + 1) = -m.im(i, j);
      out(2 * i + 1, 2 * j) = m.im(i, j);
    }
  return out;
}

/// Images of the abstract Chevalley basis of sl3 in the defining 3x3
/// representation, generated from the simple root vectors so the
/// commutators reproduce the abstract constants.
std::vector<ComplexMat> sl3_defining_rep(const ChevalleyAlgebra& alg, const ChevalleyConstants& cc) {
  const RootSystem& rs = alg.rs;
  auto elem = [](std::size_t i, std::size_t j) {
    ComplexMat m{MatQ(3, 3), MatQ(3, 3)};
    m.re(i, j) = 1;
    return m;
  };
  auto sub = [](const ComplexMat& a, const ComplexMat& b) {
    return ComplexMat{a.re - b.re, a.im - b.im};
  };
  std::vector<ComplexMat> img(alg.dim, ComplexMat{MatQ(3, 3), MatQ(3, 3)});
  img[0] = sub(elem(0, 0), elem(1, 1));
  img[1] = sub(elem(1, 1), elem(2, 2));
  const VecQ& a1 = rs.simpleRoots[0];
  const VecQ& a2 = rs.simpleRoots[1];
  img[alg.root_basis_index(a1)] = elem(0, 1);
  img[alg.root_basis_index(a2)] = elem(1, 2);
  img[alg.root_basis_index(rs.negate(a1))] = elem(1, 0);
  img[alg.root_basis_index(rs.negate(a2))] = elem(2, 1);
  // The highest root vector is pinned by one bracket relation; the oracle
  // tests then confirm all the others.
  VecQ gamma(2);
  gamma[0] = a1[0] + a2[0];
  gamma[1] = a1[1] + a2[1];
  const Rational n1 = cc.n(rs, a1, a2);
  const Rational n2 = cc.n(rs, rs.negate(a1), rs.negate(a2));
  auto scale = [](const Rational& s, const ComplexMat& m) {
    return ComplexMat{s * m.re, s * m.im};
  };
  img[alg.root_basis_index(gamma)] =
      scale(1 / n1,
            commutator(img[alg.root_basis_index(a1)], img[alg.root_basis_index(a2)]));
  img[alg.root_basis_index(rs.negate(gamma))] =
      scale(1 / n2, commutator(img[alg.root_basis_index(rs.negate(a1))],
                               img[alg.root_basis_index(rs.negate(a2))]));
  return img;
}

LieAlgebraModel build_complex(Preset preset) {
  const RootKind kind = preset == Preset::G2C_G2 ? RootKind::G2 : RootKind::A2;
  const RootSystem rs = build_root_system(kind);
  const ChevalleyConstants cc = chevalley_constants(rs);
  const ChevalleyAlgebra alg = chevalley_algebra(rs, cc);

  LieAlgebraModel m;
  m.preset = preset;
  m.id = preset_id(preset, 0);
  m.abstractRoots = rs;
  m.dim = 2 * alg.dim;
  m.basisNames.resize(m.dim);
  for (std::size_t t = 0; t < alg.dim; ++t) {
    m.basisNames[2 * t] = alg.labels[t];
    m.basisNames[2 * t + 1] = "i*" + alg.labels[t];
  }

  m.table.assign(m.dim, std::vector<SparseRow>(m.dim));
  for (std::size_t a = 0; a < alg.dim; ++a)
    for (std::size_t b = 0; b < alg.dim; ++b)
      for (const auto& [k, c] : alg.table[a][b]) {
        m.table[2 * a][2 * b].push_back({2 * k, c});
        m.table[2 * a][2 * b + 1].push_back({2 * k + 1, c});
        m.table[2 * a + 1][2 * b].push_back({2 * k + 1, c});
        m.table[2 * a + 1][2 * b + 1].push_back({2 * k, -c});
      }

  // theta: h -> -h, ih -> ih, e_a -> -e_{-a}, ie_a -> ie_{-a}.
  m.theta = MatQ(m.dim, m.dim);
  for (std::size_t t = 0; t < rs.rank; ++t) {
    m.theta(2 * t, 2 * t) = -1;
    m.theta(2 * t + 1, 2 * t + 1) = 1;
  }
  for (std::size_t t = rs.rank; t < alg.dim; ++t) {
    const std::size_t opp = alg.root_basis_index(rs.negate(alg.basisRoot[t]));
    m.theta(2 * opp, 2 * t) = -1;
    m.theta(2 * opp + 1, 2 * t + 1) = 1;
  }

  MatQ j(m.dim, m.dim);
  for (std::size_t t = 0; t < alg.dim; ++t) {
    j(2 * t + 1, 2 * t) = 1;
    j(2 * t, 2 * t + 1) = -1;
  }
  m.complexJ = j;

  m.killing = killing_from_table(m.table, m.dim);
  m.ip = Rational(-1) * (m.killing * m.theta);

  MatQ krows(0, m.dim), prows(0, m.dim);
  for (std::size_t t = 0; t < rs.rank; ++t) {
    krows.append_row(unit_vec(m.dim, 2 * t + 1));
    prows.append_row(unit_vec(m.dim, 2 * t));
  }
  for (const auto& a : rs.positiveRoots) {
    const std::size_t ea = alg.root_basis_index(a);
    const std::size_t eneg = alg.root_basis_index(rs.negate(a));
    VecQ r1(m.dim, Rational(0)), r2(m.dim, Rational(0));
    r1[2 * ea] = 1; r1[2 * eneg] = -1;            // e_a - e_{-a}
    r2[2 * ea + 1] = 1; r2[2 * eneg + 1] = 1;     // i(e_a + e_{-a})
    krows.append_row(r1);
    krows.append_row(r2);
    VecQ r3(m.dim, Rational(0)), r4(m.dim, Rational(0));
    r3[2 * ea] = 1; r3[2 * eneg] = 1;             // e_a + e_{-a}
    r4[2 * ea + 1] = 1; r4[2 * eneg + 1] = -1;    // i(e_a - e_{-a})
    prows.append_row(r3);
    prows.append_row(r4);
  }
  m.kBasis = make_span(m.id, m.dim, std::move(krows));
  m.pBasis = make_span(m.id, m.dim, std::move(prows));

  MatQ arows(0, m.dim);
  for (std::size_t t = 0; t < rs.rank; ++t) arows.append_row(unit_vec(m.dim, 2 * t));
  m.aBasis = make_span(m.id, m.dim, std::move(arows));

  // alpha_i(h_u) is the Cartan integer 2<alpha_i, alpha_u>/<alpha_u, alpha_u>.
  m.realization = MatQ(rs.rank, rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (std::size_t u = 0; u < rs.rank; ++u) m.realization(i, u) = rs.cartanMatrix(i, u);

  if (preset == Preset::SL3C_SU3) {
    const std::vector<ComplexMat> img = sl3_defining_rep(alg, cc);
    std::vector<MatQ> reps(m.dim);
    for (std::size_t t = 0; t < alg.dim; ++t) {
      reps[2 * t] = realify(img[t]);
      reps[2 * t + 1] = realify(cmul_i(img[t]));
    }
    m.repMatrices = std::move(reps);
  }
  return m;
}

LieAlgebraModel build_so(int n) {
  if (n < 1) throw std::invalid_argument("SO_2_NP2 requires n >= 1");
  const int msp = n + 2;     // spacelike dimension
  const int nn = n + 4;      // matrix size
  LieAlgebraModel m;
  m.preset = Preset::SO_2_NP2;
  m.n = n;
  m.id = preset_id(Preset::SO_2_NP2, n);
  m.abstractRoots = build_root_system(RootKind::B2);

  std::vector<MatQ> rep;
  auto unit = [&](int i, int j) {
    MatQ e(nn, nn);
    e(i, j) = 1;
    return e;
  };
  // so(2) generator, then the p-block, then so(n+2).
  rep.push_back(unit(0, 1) - unit(1, 0));
  m.basisNames.push_back("u(1,2)");
  for (int i = 0; i < 2; ++i)
    for (int s = 0; s < msp; ++s) {
      rep.push_back(unit(i, 2 + s) + unit(2 + s, i));
      m.basisNames.push_back("b(" + std::to_string(i + 1) + "," + std::to_string(s + 1) + ")");
    }
  for (int s = 0; s < msp; ++s)
    for (int t = s + 1; t < msp; ++t) {
      rep.push_back(unit(2 + s, 2 + t) - unit(2 + t, 2 + s));
      m.basisNames.push_back("d(" + std::to_string(s + 1) + "," + std::to_string(t + 1) + ")");
    }
  m.dim = rep.size();

  auto to_coords = [&](const MatQ& x) {
    VecQ v(m.dim, Rational(0));
    std::size_t idx = 0;
    v[idx++] = x(0, 1);
    for (int i = 0; i < 2; ++i)
      for (int s = 0; s < msp; ++s) v[idx++] = x(i, 2 + s);
    for (int s = 0; s < msp; ++s)
      for (int t = s + 1; t < msp; ++t) v[idx++] = x(2 + s, 2 + t);
    return v;
  };

  m.table.assign(m.dim, std::vector<SparseRow>(m.dim));
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) {
      const MatQ comm = rep[i] * rep[j] - rep[j] * rep[i];
      const VecQ v = to_coords(comm);
      for (std::size_t k = 0; k < m.dim; ++k)
        if (!v[k].is_zero()) m.table[i][j].push_back({k, v[k]});
    }

  // theta(X) = -X^T: +1 on the two skew blocks, -1 on the symmetric block.
  m.theta = MatQ(m.dim, m.dim);
  MatQ krows(0, m.dim), prows(0, m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) {
    const bool symmetric_part = i >= 1 && i < 1 + 2 * static_cast<std::size_t>(msp);
    m.theta(i, i) = symmetric_part ? -1 : 1;
    if (symmetric_part)
      prows.append_row(unit_vec(m.dim, i));
    else
      krows.append_row(unit_vec(m.dim, i));
  }
  m.kBasis = make_span(m.id, m.dim, std::move(krows));
  m.pBasis = make_span(m.id, m.dim, std::move(prows));

  m.killing = killing_from_table(m.table, m.dim);
  m.ip = Rational(-1) * (m.killing * m.theta);

  // a = span{b(1,1), b(2,2)}: two hyperbolic pairs.
  MatQ arows(0, m.dim);
  arows.append_row(unit_vec(m.dim, 1));
  arows.append_row(unit_vec(m.dim, 1 + msp + 1));
  m.aBasis = make_span(m.id, m.dim, std::move(arows));

  // alpha_1 = lambda_1 - lambda_2 (long), alpha_2 = lambda_2 (short).
  m.realization = MatQ{{Rational(1), Rational(-1)}, {Rational(0), Rational(1)}};
  m.repMatrices = std::move(rep);
  return m;
}

}  // namespace

LieAlgebraModel build_model(Preset preset, int n) {
  LieAlgebraModel m = preset == Preset::SO_2_NP2 ? build_so(n) : build_complex(preset);
  return m;
}

const RestrictedRoot& RestrictedRootDatum::root(const RootSystem& rs, const VecQ& coeffs) const {
  for (std::size_t i = 0; i < rs.allRoots.size(); ++i)
    if (rs.allRoots[i] == coeffs) return roots[i];
  throw std::invalid_argument("not a restricted root");
}

RestrictedRootDatum restricted_root_decomposition(const LieAlgebraModel& model) {
  const RootSystem& rs = model.abstractRoots;
  const std::size_t dim = model.dim;
  const std::size_t ra = model.aBasis.dim();
  std::vector<MatQ> adA(ra);
  for (std::size_t u = 0; u < ra; ++u) adA[u] = model.ad(model.aBasis.basis.row(u));

  auto joint_eigenspace = [&](const VecQ& values) {
    MatQ stacked(ra * dim, dim);
    for (std::size_t u = 0; u < ra; ++u)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          Rational v = adA[u](i, j);
          if (i == j) v -= values[u];
          stacked(u * dim + i, j) = v;
        }
    return make_span(model.id, dim, stacked.right_kernel());
  };

  RestrictedRootDatum datum;
  std::size_t total = 0;
  for (const auto& alpha : rs.allRoots) {
    RestrictedRoot r;
    r.coeffs = alpha;
    r.label = rs.label(alpha);
    r.valuesOnA = VecQ(ra, Rational(0));
    for (std::size_t u = 0; u < ra; ++u)
      for (std::size_t i = 0; i < rs.rank; ++i) r.valuesOnA[u] += alpha[i] * model.realization(i, u);
    r.space = joint_eigenspace(r.valuesOnA);
    r.multiplicity = r.space.dim();
    if (r.multiplicity == 0)
      throw InvariantError("restricted root " + r.label + " has empty root space");
    datum.roots.push_back(std::move(r));
    total += datum.roots.back().multiplicity;
  }
  datum.g0 = joint_eigenspace(VecQ(ra, Rational(0)));
  if (total + datum.g0.dim() != dim)
    throw InvariantError("restricted root decomposition does not fill the algebra");
  datum.k0 = span_intersect(datum.g0, model.kBasis);
  if (datum.k0.dim() + ra != datum.g0.dim())
    throw InvariantError("g0 is not k0 + a");

  // H_alpha from the Gram matrix of a.
  MatQ gram(ra, ra);
  for (std::size_t u = 0; u < ra; ++u)
    for (std::size_t v = 0; v < ra; ++v)
      gram(u, v) = model.ip_of(model.aBasis.basis.row(u), model.aBasis.basis.row(v));
  auto solve2 = [&](const MatQ& lhs, const VecQ& rhs) {
    MatQ aug(ra, ra + 1);
    for (std::size_t i = 0; i < ra; ++i) {
      for (std::size_t j = 0; j < ra; ++j) aug(i, j) = lhs(i, j);
      aug(i, ra) = rhs[i];
    }
    if (aug.rref_in_place().size() != ra) throw InvariantError("degenerate a-pairing");
    VecQ h(model.dim, Rational(0));
    for (std::size_t u = 0; u < ra; ++u)
      for (std::size_t j = 0; j < model.dim; ++j) h[j] += aug(u, ra) * model.aBasis.basis(u, j);
    return h;
  };
  for (auto& r : datum.roots) r.hAlpha = solve2(gram, r.valuesOnA);
  for (std::size_t j = 0; j < rs.rank; ++j) {
    VecQ rhs(ra, Rational(0));
    rhs[j] = 1;
    // realization * c = e_j with H^j = sum c_u a_u.
    datum.dualVectors.push_back(solve2(model.realization, rhs));
  }

  // theta g_alpha = g_{-alpha} and matching multiplicities.
  for (const auto& alpha : rs.allRoots) {
    const RestrictedRoot& r = datum.root(rs, alpha);
    const RestrictedRoot& rneg = datum.root(rs, rs.negate(alpha));
    if (r.multiplicity != rneg.multiplicity)
      throw InvariantError("mult(alpha) != mult(-alpha)");
    if (map_subspace(model.theta, r.space) != rneg.space)
      throw InvariantError("theta does not map g_alpha onto g_{-alpha}");
  }
  return datum;
}

VecQ coroot(const LieAlgebraModel& model, const RestrictedRootDatum& datum,
            const VecQ& alphaCoeffs) {
  const RestrictedRoot& r = datum.root(model.abstractRoots, alphaCoeffs);
  const Rational len = model.ip_of(r.hAlpha, r.hAlpha);
  VecQ h = r.hAlpha;
  for (auto& x : h) x = 2 * x / len;
  return h;
}

Subspace map_subspace(const MatQ& m, const Subspace& s) {
  MatQ rows(s.dim(), s.ambient);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const VecQ img = m.apply(s.basis.row(i));
    for (std::size_t j = 0; j < s.ambient; ++j) rows(i, j) = img[j];
  }
  return make_span(s.model, s.ambient, std::move(rows));
}

bool is_subalgebra(const LieAlgebraModel& model, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!span_contains(s, model.bracket(s.basis.row(i), s.basis.row(j)))) return false;
  return true;
}

bool jacobi_holds(const LieAlgebraModel& model) {
  const std::size_t d = model.dim;
  auto bracket_basis_vec = [&](std::size_t i, const VecQ& v) {
    VecQ out(d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
      if (v[j].is_zero()) continue;
      for (const auto& [k, c] : model.table[i][j]) out[k] += v[j] * c;
    }
    return out;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : model.table[i][j])
        if (i == j && !c.is_zero()) return false;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      VecQ bij(d, Rational(0));
      for (const auto& [m2, c] : model.table[i][j]) bij[m2] += c;
      // antisymmetry
      VecQ bji(d, Rational(0));
      for (const auto& [m2, c] : model.table[j][i]) bji[m2] += c;
      for (std::size_t m2 = 0; m2 < d; ++m2)
        if (bij[m2] + bji[m2] != 0) return false;
      for (std::size_t k = j + 1; k < d; ++k) {
        VecQ bjk(d, Rational(0));
        for (const auto& [m2, c] : model.table[j][k]) bjk[m2] += c;
        VecQ bik(d, Rational(0));
        for (const auto& [m2, c] : model.table[i][k]) bik[m2] += c;
        const VecQ u1 = bracket_basis_vec(i, bjk);
        const VecQ u2 = bracket_basis_vec(j, bik);
        const VecQ u3 = bracket_basis_vec(k, bij);
        for (std::size_t m2 = 0; m2 < d; ++m2)
          if (u1[m2] - u2[m2] + u3[m2] != 0) return false;
      }
    }
  return true;
}

bool theta_is_automorphism(const LieAlgebraModel& model) {
  const std::size_t d = model.dim;
  const MatQ ident = model.theta * model.theta;
  if (!(ident == MatQ::identity(d))) return false;
  for (std::size_t i = 0; i < d; ++i) {
    const VecQ ti = model.theta.apply(unit_vec(d, i));
    for (std::size_t j = i + 1; j < d; ++j) {
      const VecQ tj = model.theta.apply(unit_vec(d, j));
      VecQ bij(d, Rational(0));
      for (const auto& [k, c] : model.table[i][j]) bij[k] += c;
      const VecQ lhs = model.theta.apply(bij);
      const VecQ rhs = model.bracket(ti, tj);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool ad_invariance_holds(const LieAlgebraModel& model) {
  const std::size_t d = model.dim;
  // <ad(X)Y, Z> + <Y, ad(theta X)Z> = 0 for basis triples, in matrix form:
  // ad_i^T G + G ad_{theta(i)} = 0 with G the inner product.
  for (std::size_t i = 0; i < d; ++i) {
    const MatQ adi = model.ad(unit_vec(d, i));
    const MatQ adti = model.ad(model.theta.apply(unit_vec(d, i)));
    const MatQ lhs = adi.transpose() * model.ip + model.ip * adti;
    if (!lhs.is_zero_matrix()) return false;
  }
  return true;
}

bool symmetric_positive_definite(const MatQ& g) {
  const std::size_t n = g.rows();
  MatQ m = g;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = m(i, k) / m(k, k);
      if (f.is_zero()) continue;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

MatQ torus_rotation(const LieAlgebraModel& model, const VecQ& x, const Rational& c,
                    const Rational& s) {
  if (c * c + s * s != 1) throw std::invalid_argument("(c, s) must lie on the unit circle");
  const std::size_t d = model.dim;
  const MatQ adx = model.ad(x);
  const MatQ adx2 = adx * adx;

  // Primary decomposition over frequencies 0, 1, 2, ...: V_k = ker(ad^2 + k^2).
  MatQ cols(d, 0);  // eigenbasis as columns
  MatQ imgs(d, 0);
  std::size_t found = 0;
  Rational ck = 1, sk = 0;  // cos(k t), sin(k t)
  for (int k = 0; found < d && k <= 64; ++k) {
    MatQ shifted = adx2;
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) += Rational(k) * Rational(k);
    const MatQ ker = shifted.right_kernel();
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      const VecQ v = ker.row(r);
      VecQ img(d, Rational(0));
      if (k == 0) {
        img = v;
      } else {
        const VecQ mv = adx.apply(v);
        for (std::size_t i = 0; i < d; ++i) img[i] = ck * v[i] + sk * mv[i] / k;
      }
      MatQ ncols(d, cols.cols() + 1), nimgs(d, imgs.cols() + 1);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < cols.cols(); ++j) {
          ncols(i, j) = cols(i, j);
          nimgs(i, j) = imgs(i, j);
        }
        ncols(i, cols.cols()) = v[i];
        nimgs(i, imgs.cols()) = img[i];
      }
      cols = std::move(ncols);
      imgs = std::move(nimgs);
    }
    found += ker.rows();
    const Rational nc = ck * c - sk * s;
    const Rational ns = sk * c + ck * s;
    ck = nc;
    sk = ns;
  }
  if (found != d)
    throw std::invalid_argument("torus_rotation: ad-spectrum is not integral");
  // R * cols = imgs, i.e. cols^T R^T = imgs^T.
  MatQ aug(d, 2 * d);
  const MatQ ct = cols.transpose(), it = imgs.transpose();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      aug(i, j) = ct(i, j);
      aug(i, d + j) = it(i, j);
    }
  if (aug.rref_in_place().size() != d)
    throw InvariantError("torus_rotation: eigenbasis is singular");
  MatQ rt(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rt(i, j) = aug(i, d + j);
  return rt.transpose();
}

}  // namespace rank2
