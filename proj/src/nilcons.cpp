#include "rank2/nilcons.hpp"

#include <type_traits>

#include "rank2/rng.hpp"

namespace rank2 {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Transitive: return "Transitive";
    case Verdict::NotTransitive: return "NotTransitive";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

template <class K>
Span<K> lift_to(const Subspace& s) {
  if constexpr (std::is_same_v<K, Rational>) {
    return s;
  } else {
    return lift_span(s);
  }
}

template <class K>
Matrix<K> lift_mat_to(const MatQ& m) {
  if constexpr (std::is_same_v<K, Rational>) {
    return m;
  } else {
    return lift_matrix(m);
  }
}

template <class K>
Span<K> map_cols(const Matrix<K>& m, const Span<K>& s) {
  Matrix<K> rows(s.dim(), s.ambient);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const std::vector<K> img = m.apply(s.basis.row(i));
    for (std::size_t j = 0; j < s.ambient; ++j) rows(i, j) = img[j];
  }
  return make_span(s.model, s.ambient, std::move(rows));
}

template <class K>
bool is_subalgebra_t(const LieAlgebraModel& model, const Span<K>& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!span_contains(s, model.bracket_t<K>(s.basis.row(i), s.basis.row(j)))) return false;
  return true;
}

/// Reduce u against the RREF basis of v (kills the component inside v).
template <class K>
std::vector<K> reduce_mod(const Span<K>& v, std::vector<K> u) {
  Matrix<K> probe = v.basis;
  const std::vector<std::size_t> piv = probe.rref_in_place();
  for (std::size_t i = 0; i < piv.size(); ++i) {
    const K c = u[piv[i]];
    if (is_zero(c)) continue;
    for (std::size_t j = 0; j < v.ambient; ++j) u[j] -= c * v.basis(i, j);
  }
  return u;
}

template <class K>
Span<K> normalizer_impl(const LieAlgebraModel& model, const Span<K>& s, const Span<K>& v,
                        bool centralize) {
  const std::size_t dim = model.dim;
  Matrix<K> sys(v.dim() * dim, s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const std::vector<K> x = s.basis.row(i);
    for (std::size_t m2 = 0; m2 < v.dim(); ++m2) {
      std::vector<K> img = model.bracket_t<K>(x, v.basis.row(m2));
      if (!centralize) img = reduce_mod(v, std::move(img));
      for (std::size_t c = 0; c < dim; ++c) sys(m2 * dim + c, i) = img[c];
    }
  }
  const Matrix<K> ker = sys.right_kernel();
  Matrix<K> rows(ker.rows(), dim);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (is_zero(ker(r, i))) continue;
      for (std::size_t c = 0; c < dim; ++c) rows(r, c) += ker(r, i) * s.basis(i, c);
    }
  return make_span(s.model, dim, std::move(rows));
}

/// The pieces of a parabolic decomposition lifted into the working field.
template <class K>
struct LiftedContext {
  Matrix<K> ip, theta;
  Span<K> mj, kj, lj, nj, gj, bj, aUpperJ, p, levelOne;

  LiftedContext(const SymmetricSpace& ss, const ParabolicDecomposition& pd)
      : ip(lift_mat_to<K>(ss.model.ip)),
        theta(lift_mat_to<K>(ss.model.theta)),
        mj(lift_to<K>(pd.mj)),
        kj(lift_to<K>(pd.kj)),
        lj(lift_to<K>(pd.lj)),
        nj(lift_to<K>(pd.nj)),
        gj(lift_to<K>(pd.gj)),
        bj(lift_to<K>(pd.bj)),
        aUpperJ(lift_to<K>(pd.aUpperJ)),
        p(lift_to<K>(ss.model.pBasis)),
        levelOne(lift_to<K>(pd.levelOne())) {}
};

template <class K>
TransitivityVerdict boundary_impl(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                                  const LiftedContext<K>& ctx, const Span<K>& s) {
  TransitivityVerdict out;
  const std::size_t dimB = pd.bj.dim();
  const bool theta_stable = map_cols(ctx.theta, s) == s;
  const std::size_t proj = span_projection_dim(ctx.bj, ctx.ip, s);
  if (proj < dimB) {
    out.value = Verdict::NotTransitive;
    // A theta-stable subalgebra is reductive and its orbit through the base
    // point is the proper totally geodesic submanifold tangent to s cap b_j;
    // otherwise the plain tangent count already refutes.
    out.evidence = theta_stable ? "theta-stable-reductive" : "dimension-deficit";
    out.detail = "projection onto b_j has dimension " + std::to_string(proj) + " < " +
                 std::to_string(dimB);
    return out;
  }
  // A theta-stable s with full trace on b_j contains b_j and hence the
  // subalgebra it generates, which carries every root space of g_j; the
  // Iwasawa containment below then certifies transitivity.
  // Iwasawa containment, up to the sign flip realizing the opposite
  // positive subsystem of Sigma_j.
  const RootSystem& rs = ss.model.abstractRoots;
  for (int eps : {+1, -1}) {
    bool ok = span_contains(s, ctx.aUpperJ);
    for (const auto& alpha : pd.sigmaJPositive) {
      if (!ok) break;
      const VecQ signed_alpha = eps > 0 ? alpha : rs.negate(alpha);
      const Subspace part = span_intersect(ss.root(signed_alpha).space, pd.gj);
      ok = ok && span_contains(s, lift_to<K>(part));
    }
    if (ok) {
      out.value = Verdict::Transitive;
      out.evidence = "iwasawa-containment";
      out.detail = std::string("contains a^j and the ") + (eps > 0 ? "positive" : "negative") +
                   " nilpotent part of g_j";
      return out;
    }
  }
  out.value = Verdict::Unknown;
  out.evidence = "inconclusive";
  out.detail = "no sound refutation or containment witness applies";
  return out;
}

template <class K>
TransitivityVerdict sphere_impl(const SymmetricSpace& ss, const Span<K>& v,
                                const Span<K>& normalizerKJ, std::size_t samples,
                                std::uint64_t seed) {
  if (v.dim() < 2) throw std::invalid_argument("sphere transitivity requires dim v >= 2");
  TransitivityVerdict out;
  SeededRng rng(seed);
  std::vector<std::vector<K>> probes;
  for (std::size_t i = 0; i < v.dim(); ++i) probes.push_back(v.basis.row(i));
  for (std::size_t t = 0; t < samples; ++t) {
    const VecQ c = rng.nonzero_vector(v.dim());
    std::vector<K> w(v.ambient, K(0));
    for (std::size_t i = 0; i < v.dim(); ++i)
      for (std::size_t jj = 0; jj < v.ambient; ++jj) w[jj] += K(c[i]) * v.basis(i, jj);
    probes.push_back(std::move(w));
  }
  for (std::size_t pi = 0; pi < probes.size(); ++pi) {
    Matrix<K> orbit(normalizerKJ.dim(), v.ambient);
    for (std::size_t i = 0; i < normalizerKJ.dim(); ++i) {
      const std::vector<K> img = ss.model.bracket_t<K>(normalizerKJ.basis.row(i), probes[pi]);
      for (std::size_t jj = 0; jj < v.ambient; ++jj) orbit(i, jj) = img[jj];
    }
    const std::size_t rank = orbit.rank();
    if (rank + 1 < v.dim()) {
      out.value = Verdict::NotTransitive;
      out.evidence = "dimension-deficit";
      out.detail = "probe " + std::to_string(pi) + " has orbit dimension " +
                   std::to_string(rank) + " < " + std::to_string(v.dim() - 1);
      return out;
    }
  }
  out.value = Verdict::Transitive;
  out.evidence = "sampling";
  out.detail = std::to_string(v.dim()) + " basis probes and " + std::to_string(samples) +
               " seeded probes all reach the sphere dimension";
  return out;
}

template <class K>
K kahler_impl(const SymmetricSpace& ss, const Span<K>& v) {
  if (!ss.model.complexJ.has_value())
    throw std::invalid_argument("kahler_angle: preset has no complex structure");
  if (v.dim() != 2) throw std::invalid_argument("kahler_angle: v must be a 2-plane");
  const Matrix<K> ip = lift_mat_to<K>(ss.model.ip);
  const Matrix<K> j = lift_mat_to<K>(*ss.model.complexJ);
  auto pair = [&](const std::vector<K>& x, const std::vector<K>& y) {
    K s(0);
    const std::vector<K> gy = ip.apply(y);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(x[i])) s += x[i] * gy[i];
    return s;
  };
  const std::vector<K> u1 = v.basis.row(0);
  std::vector<K> u2 = v.basis.row(1);
  const K c = pair(u1, u2) / pair(u1, u1);
  for (std::size_t i = 0; i < u2.size(); ++i) u2[i] -= c * u1[i];
  const K w = pair(j.apply(u1), u2);
  return (w * w) / (pair(u1, u1) * pair(u2, u2));
}

std::string equivalence_hint(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                             const Subspace& v, bool passed) {
  if (!passed) return "";
  const LieAlgebraModel& m = ss.model;
  if (m.complexJ.has_value() && v.dim() == 2 && map_subspace(*m.complexJ, v) == v) {
    // complex line: conjugate to a simple root space, hence to a canonical
    // extension of the geodesic-orbit action on the boundary component
    if (m.preset == Preset::G2C_G2) {
      return pd.j == 1 ? "orbit-equivalent to H^Lambda_{2,1}" : "orbit-equivalent to H^Lambda_{1,1}";
    }
    return "orbit-equivalent to H^Lambda_{1,1}";
  }
  if (m.preset == Preset::SO_2_NP2 && pd.j == 2) {
    // subspaces of the e_1-leg reproduce boundary-component extensions
    VecQ a2(2);
    a2[1] = 1;
    if (span_contains(ss.root(a2).space, v))
      return "orbit-equivalent to a canonical extension H^Lambda_{1,k}";
    if (v.dim() == 2) {
      const GrassmannFrame fr = grassmann_frame(ss);
      for (int s = 0; s < m.n; ++s) {
        MatQ rows(0, m.dim);
        rows.append_row(fr.e1f[s]);
        rows.append_row(fr.e2f[s]);
        if (make_span(m.id, m.dim, std::move(rows)) == v)
          return "orbit-equivalent to the totally geodesic SO(2,n+1) action";
      }
    }
  }
  return "";
}

template <class K>
NilConsReport<K> check_impl(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                            const Span<K>& v, std::size_t samples, std::uint64_t seed) {
  const LiftedContext<K> ctx(ss, pd);
  if (!span_contains(ctx.levelOne, v))
    throw std::invalid_argument("v is not contained in n^1_j");
  if (v.dim() < 2) throw std::invalid_argument("the construction requires dim v >= 2");

  NilConsReport<K> rep;
  rep.j = pd.j;
  rep.v = v;
  rep.seed = seed;
  rep.samples = samples;
  rep.nJV = span_complement_within(ctx.nj, v, ctx.ip);
  if (!is_subalgebra_t(ss.model, rep.nJV))
    throw InvariantError("n_{j,v} is not closed under the bracket");
  rep.normalizerMJ = normalizer_impl(ss.model, ctx.mj, rep.nJV, false);
  rep.normalizerKJ = normalizer_impl(ss.model, ctx.kj, v, false);
  if (rep.normalizerKJ != span_intersect(rep.normalizerMJ, ctx.kj))
    throw InvariantError("N_{k_j}(v) != N_{m_j}(n_{j,v}) cap k_j");

  rep.conditionI = boundary_impl(ss, pd, ctx, rep.normalizerMJ);
  rep.conditionII = sphere_impl(ss, v, rep.normalizerKJ, samples, seed);

  const Span<K> nmv = normalizer_impl(ss.model, ctx.mj, v, false);
  const RootSystem& rs = ss.model.abstractRoots;
  for (std::size_t l = 1; l <= rs.rank; ++l) {
    if (l == pd.j) continue;
    const Subspace target = span_sum(parabolic_in_gj(ss, pd, l), pd.zj);
    rep.vlMembership[l] = span_contains(lift_to<K>(target), nmv);
  }

  const Span<K> nl = normalizer_impl(ss.model, ctx.lj, rep.nJV, false);
  rep.singularOrbitDim = span_projection_dim(ctx.p, ctx.ip, span_sum(nl, rep.nJV));

  if constexpr (std::is_same_v<K, Rational>) {
    rep.hint = equivalence_hint(ss, pd, v, rep.passes());
  }
  return rep;
}

}  // namespace

Subspace normalizer(const SymmetricSpace& ss, const Subspace& s, const Subspace& v) {
  if (!is_subalgebra(ss.model, s))
    throw std::invalid_argument("normalizer: s is not a subalgebra");
  return normalizer_impl(ss.model, s, v, false);
}

Span<QuadExt> normalizer(const SymmetricSpace& ss, const Span<QuadExt>& s,
                         const Span<QuadExt>& v) {
  if (!is_subalgebra_t(ss.model, s))
    throw std::invalid_argument("normalizer: s is not a subalgebra");
  return normalizer_impl(ss.model, s, v, false);
}

Subspace centralizer(const SymmetricSpace& ss, const Subspace& s, const Subspace& v) {
  return normalizer_impl(ss.model, s, v, true);
}

bool theta_duality_check(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                         const Subspace& v) {
  if (!span_contains(pd.levelOne(), v))
    throw std::invalid_argument("theta_duality_check: v not inside n^1_j");
  const Subspace nJV = span_complement_within(pd.nj, v, ss.model.ip);
  const Subspace lhs = normalizer_impl(ss.model, pd.lj, nJV, false);
  const Subspace rhs = normalizer_impl(ss.model, pd.lj, v, false);
  return lhs == map_subspace(ss.model.theta, rhs);
}

TransitivityVerdict sphere_transitivity(const SymmetricSpace& ss,
                                        const ParabolicDecomposition& pd, const Subspace& v,
                                        std::size_t samples, std::uint64_t seed) {
  const Subspace norm = normalizer_impl(ss.model, pd.kj, v, false);
  return sphere_impl(ss, v, norm, samples, seed);
}

TransitivityVerdict boundary_transitivity(const SymmetricSpace& ss,
                                          const ParabolicDecomposition& pd, const Subspace& v) {
  const LiftedContext<Rational> ctx(ss, pd);
  const Subspace nJV = span_complement_within(pd.nj, v, ss.model.ip);
  const Subspace s = normalizer_impl(ss.model, pd.mj, nJV, false);
  return boundary_impl(ss, pd, ctx, s);
}

Rational kahler_angle(const SymmetricSpace& ss, const Subspace& v) {
  return kahler_impl(ss, v);
}
QuadExt kahler_angle(const SymmetricSpace& ss, const Span<QuadExt>& v) {
  return kahler_impl(ss, v);
}

bool vl_membership(const SymmetricSpace& ss, const ParabolicDecomposition& pd, std::size_t l,
                   const Subspace& v) {
  if (l == pd.j) throw std::invalid_argument("vl_membership requires l != j");
  const Subspace nmv = normalizer_impl(ss.model, pd.mj, v, false);
  const Subspace target = span_sum(parabolic_in_gj(ss, pd, l), pd.zj);
  return span_contains(target, nmv);
}

SplittingReport splitting_check(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                                const Subspace& tau) {
  if (!span_contains(pd.mj, tau))
    throw std::invalid_argument("splitting_check: tau not inside m_j");
  if (!is_subalgebra(ss.model, tau))
    throw std::invalid_argument("splitting_check: tau is not a subalgebra");
  SplittingReport rep;
  rep.proj1 = span_projection(pd.gj, ss.model.ip, tau);
  rep.proj2 = span_projection(pd.zj, ss.model.ip, tau);
  const Subspace sum = span_sum(rep.proj1, rep.proj2);
  rep.isDirect = (rep.proj1.dim() + rep.proj2.dim() == tau.dim()) && sum == tau;
  return rep;
}

NilConsReport<Rational> nilpotent_construction_check(const SymmetricSpace& ss,
                                                     const ParabolicDecomposition& pd,
                                                     const Subspace& v, std::size_t samples,
                                                     std::uint64_t seed) {
  return check_impl<Rational>(ss, pd, v, samples, seed);
}

NilConsReport<QuadExt> nilpotent_construction_check(const SymmetricSpace& ss,
                                                    const ParabolicDecomposition& pd,
                                                    const Span<QuadExt>& v, std::size_t samples,
                                                    std::uint64_t seed) {
  return check_impl<QuadExt>(ss, pd, v, samples, seed);
}

KahlerPlane kahler_family_plane(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                                const Rational& cos2) {
  const LieAlgebraModel& m = ss.model;
  if (!m.complexJ.has_value())
    throw std::invalid_argument("kahler_family_plane: preset has no complex structure");
  if (cos2 < 0 || cos2 > 1) throw std::invalid_argument("cos^2 must lie in [0,1]");
  // the level-one module must be C^2: two complex lines
  std::vector<VecQ> levelRoots;
  const RootSystem& rs = m.abstractRoots;
  for (const auto& alpha : rs.positiveRoots)
    if (alpha[pd.j - 1] == 1) levelRoots.push_back(alpha);
  if (pd.levelOne().dim() != 4 || levelRoots.size() != 2)
    throw std::invalid_argument("the Kahler family needs a 4-dimensional level-one module");
  const VecQ e1 = ss.root(levelRoots[0]).space.basis.row(0);
  const VecQ e2 = ss.root(levelRoots[1]).space.basis.row(0);
  const MatQ& j = *m.complexJ;

  KahlerPlane plane;
  plane.cos2 = cos2;
  auto rational_plane = [&](const VecQ& u1, const VecQ& u2) {
    MatQ rows(0, m.dim);
    rows.append_row(u1);
    rows.append_row(u2);
    return make_span(m.id, m.dim, std::move(rows));
  };
  if (cos2 == 1) {
    plane.isRational = true;
    plane.rationalPlane = rational_plane(e1, j.apply(e1));
  } else if (cos2 == 0) {
    plane.isRational = true;
    plane.rationalPlane = rational_plane(e1, j.apply(e2));
  } else {
    const Rational tan2 = (1 - cos2) / cos2;
    Rational t;
    if (exact_sqrt(tan2, t)) {
      VecQ u2 = j.apply(e1);
      const VecQ je2 = j.apply(e2);
      for (std::size_t i = 0; i < m.dim; ++i) u2[i] += t * je2[i];
      plane.isRational = true;
      plane.rationalPlane = rational_plane(e1, u2);
    } else {
      // coordinates in Q(sqrt(tan^2 phi))
      const QuadExt root = QuadExt::sqrt_of(tan2);
      Matrix<QuadExt> rows(2, m.dim);
      const VecQ je1 = j.apply(e1);
      const VecQ je2 = j.apply(e2);
      for (std::size_t i = 0; i < m.dim; ++i) {
        rows(0, i) = QuadExt(e1[i]);
        rows(1, i) = QuadExt(je1[i]) + root * QuadExt(je2[i]);
      }
      plane.quadPlane = make_span(m.id, m.dim, std::move(rows));
    }
  }
  // confirm the construction realizes the requested angle
  if (plane.isRational) {
    if (kahler_angle(ss, plane.rationalPlane) != cos2)
      throw InvariantError("kahler plane does not realize the requested angle");
  } else {
    if (kahler_angle(ss, plane.quadPlane) != QuadExt(cos2))
      throw InvariantError("kahler plane does not realize the requested angle");
  }
  return plane;
}

}  // namespace rank2
