#include "rank2/orbits.hpp"

#include "rank2/rng.hpp"

namespace rank2 {

std::string construction_tag_name(ConstructionTag t) {
  switch (t) {
    case ConstructionTag::FoliationA: return "foliation-a";
    case ConstructionTag::FoliationN: return "foliation-n";
    case ConstructionTag::CanonicalExtension: return "canonical-extension";
    case ConstructionTag::NilpotentConstruction: return "nilpotent-construction";
  }
  return "?";
}

namespace {

std::size_t base_orbit_dim(const SymmetricSpace& ss, const Subspace& h) {
  return span_projection_dim(ss.model.pBasis, ss.model.ip, h);
}

void require_subalgebra(const SymmetricSpace& ss, const Subspace& h, const std::string& who) {
  if (!is_subalgebra(ss.model, h)) throw InvariantError(who + ": h is not a subalgebra");
}

}  // namespace

Subspace positive_nilpotent(const SymmetricSpace& ss) {
  const RootSystem& rs = ss.model.abstractRoots;
  Subspace n = zero_span<Rational>(ss.model.id, ss.model.dim);
  for (const auto& alpha : rs.positiveRoots) n = span_sum(n, ss.root(alpha).space);
  return n;
}

ActionSpec foliation_algebra_a(const SymmetricSpace& ss, const Subspace& ell) {
  if (ell.dim() != 1 || !span_contains(ss.model.aBasis, ell))
    throw std::invalid_argument("foliation_algebra_a: ell must be a line in a");
  ActionSpec spec;
  spec.label = "h_ell";
  spec.tag = ConstructionTag::FoliationA;
  spec.h = span_sum(span_complement_within(ss.model.aBasis, ell, ss.model.ip),
                    positive_nilpotent(ss));
  require_subalgebra(ss, spec.h, "foliation_algebra_a");
  spec.baseOrbitDim = base_orbit_dim(ss, spec.h);
  return spec;
}

ActionSpec foliation_algebra_n(const SymmetricSpace& ss, std::size_t j, const Subspace& ellj) {
  const RootSystem& rs = ss.model.abstractRoots;
  if (j < 1 || j > rs.rank) throw std::invalid_argument("foliation_algebra_n: bad index");
  const Subspace& simple = ss.root(rs.simpleRoots[j - 1]).space;
  if (ellj.dim() != 1 || !span_contains(simple, ellj))
    throw std::invalid_argument(
        "foliation_algebra_n: ell must be a line in the simple root space g_{alpha_j}");
  ActionSpec spec;
  spec.label = "h_" + std::to_string(j);
  spec.tag = ConstructionTag::FoliationN;
  const Subspace n = positive_nilpotent(ss);
  spec.h = span_sum(ss.model.aBasis, span_complement_within(n, ellj, ss.model.ip));
  require_subalgebra(ss, spec.h, "foliation_algebra_n");
  spec.baseOrbitDim = base_orbit_dim(ss, spec.h);
  return spec;
}

ActionSpec canonical_extension(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                               const Subspace& hPhi, const std::string& label) {
  if (!span_contains(pd.mj, hPhi))
    throw std::invalid_argument("canonical_extension: hPhi is not inside m_j");
  if (!is_subalgebra(ss.model, hPhi))
    throw std::invalid_argument("canonical_extension: hPhi is not a subalgebra");
  ActionSpec spec;
  spec.label = label.empty() ? "H^Lambda_" + std::to_string(pd.j) : label;
  spec.tag = ConstructionTag::CanonicalExtension;
  spec.h = span_sum(hPhi, span_sum(pd.aj, pd.nj));
  require_subalgebra(ss, spec.h, "canonical_extension");
  spec.baseOrbitDim = base_orbit_dim(ss, spec.h);
  return spec;
}

ActionSpec grassmannian_extension_family(const SymmetricSpace& ss,
                                         const ParabolicDecomposition& pd, std::size_t k,
                                         const Subspace& w) {
  if (ss.model.preset != Preset::SO_2_NP2 || pd.j != 1)
    throw std::invalid_argument("grassmannian_extension_family needs the SO preset with j = 1");
  const RootSystem& rs = ss.model.abstractRoots;
  const RestrictedRoot& a2 = ss.root(rs.simpleRoots[1]);
  Subspace ambient = a2.space;
  {
    MatQ rows(0, ss.model.dim);
    rows.append_row(a2.hAlpha);
    ambient = span_sum(ambient, make_span(ss.model.id, ss.model.dim, std::move(rows)));
  }
  if (w.dim() != k || !span_contains(ambient, w))
    throw std::invalid_argument(
        "w must be a k-dimensional subspace of R H_{alpha_2} + g_{alpha_2}");
  if (k >= 1 && !span_contains(w, a2.hAlpha))
    throw std::invalid_argument("w must contain H_{alpha_2} when k >= 1");

  ActionSpec spec;
  spec.label = "H^Lambda_{1," + std::to_string(k) + "}";
  spec.tag = ConstructionTag::CanonicalExtension;
  Subspace hAlphaLine = zero_span<Rational>(ss.model.id, ss.model.dim);
  {
    MatQ rows(0, ss.model.dim);
    rows.append_row(a2.hAlpha);
    hAlphaLine = make_span(ss.model.id, ss.model.dim, std::move(rows));
  }
  const Subspace n = positive_nilpotent(ss);
  Subspace h = normalizer(ss, pd.kj, w);
  h = span_sum(h, span_complement_within(ss.model.aBasis, hAlphaLine, ss.model.ip));
  h = span_sum(h, span_complement_within(n, a2.space, ss.model.ip));
  h = span_sum(h, w);
  spec.h = h;
  require_subalgebra(ss, spec.h, "grassmannian_extension_family");
  spec.baseOrbitDim = base_orbit_dim(ss, spec.h);
  return spec;
}

ActionSpec nilpotent_construction_action(const SymmetricSpace& ss,
                                         const ParabolicDecomposition& pd, const Subspace& v,
                                         const std::string& label) {
  if (!span_contains(pd.levelOne(), v))
    throw std::invalid_argument("nilpotent_construction_action: v not inside n^1_j");
  ActionSpec spec;
  spec.label = label.empty() ? "H_{" + std::to_string(pd.j) + ",v}" : label;
  spec.tag = ConstructionTag::NilpotentConstruction;
  const Subspace nJV = span_complement_within(pd.nj, v, ss.model.ip);
  const Subspace nl = normalizer(ss, pd.lj, nJV);
  spec.h = span_sum(nl, nJV);
  require_subalgebra(ss, spec.h, "nilpotent_construction_action");
  spec.baseOrbitDim = base_orbit_dim(ss, spec.h);
  return spec;
}

ActionSpec extension_point_action(const SymmetricSpace& ss, const ParabolicDecomposition& pd) {
  const Subspace hPhi = span_intersect(pd.gj, pd.kj);
  return canonical_extension(ss, pd, hPhi, "H^Lambda_{" + std::to_string(pd.j) + ",0}");
}

ActionSpec extension_geodesic_action(const SymmetricSpace& ss,
                                     const ParabolicDecomposition& pd) {
  if (!ss.model.complexJ.has_value())
    throw std::invalid_argument("extension_geodesic_action needs a complex preset");
  // alpha', the simple root generating Sigma_j, carries the so(2) factor
  // R i H_{alpha'} of the boundary isotropy; hPhi = R i H_{alpha'} + R H_{alpha'}.
  const VecQ hA = ss.root(pd.phi.at(0)).hAlpha;
  MatQ rows(0, ss.model.dim);
  rows.append_row(hA);
  rows.append_row(ss.model.complexJ->apply(hA));
  const Subspace hPhi = make_span(ss.model.id, ss.model.dim, std::move(rows));
  return canonical_extension(ss, pd, hPhi, "H^Lambda_{" + std::to_string(pd.j) + ",1}");
}

ActionSpec grassmann_extension_j2(const SymmetricSpace& ss, const ParabolicDecomposition& pd) {
  if (ss.model.preset != Preset::SO_2_NP2 || pd.j != 2)
    throw std::invalid_argument("grassmann_extension_j2 needs the SO preset with j = 2");
  return canonical_extension(ss, pd, pd.kAlpha.at("a1"), "H^Lambda_2");
}

MatQ nilpotent_exp_neg_ad(const LieAlgebraModel& model, const VecQ& x) {
  const std::size_t d = model.dim;
  const MatQ adx = model.ad(x);
  MatQ term = MatQ::identity(d);
  MatQ sum = term;
  Rational factorial = 1;
  for (std::size_t k = 1; k <= d + 1; ++k) {
    term = term * adx;
    if (term.is_zero_matrix()) return sum;
    factorial *= Rational(static_cast<long>(k));
    const Rational coeff = (k % 2 == 0 ? Rational(1) : Rational(-1)) / factorial;
    sum = sum + coeff * term;
  }
  throw std::invalid_argument("orbit probe is not ad-nilpotent");
}

std::size_t orbit_dimension_at(const SymmetricSpace& ss, const Subspace& h, const VecQ& x) {
  const MatQ g = nilpotent_exp_neg_ad(ss.model, x);
  const Subspace moved = map_subspace(g, h);
  return span_projection_dim(ss.model.pBasis, ss.model.ip, moved);
}

std::vector<VecQ> default_nilpotent_probes(const SymmetricSpace& ss, std::size_t count,
                                           std::uint64_t seed) {
  const Subspace n = positive_nilpotent(ss);
  SeededRng rng(seed);
  std::vector<VecQ> probes;
  for (std::size_t t = 0; t < count; ++t) {
    const VecQ c = rng.nonzero_vector(n.dim());
    VecQ x(ss.model.dim, Rational(0));
    for (std::size_t i = 0; i < n.dim(); ++i)
      for (std::size_t jj = 0; jj < ss.model.dim; ++jj) x[jj] += c[i] * n.basis(i, jj);
    probes.push_back(std::move(x));
  }
  return probes;
}

void sample_orbit_dims(const SymmetricSpace& ss, ActionSpec& spec,
                       const std::vector<VecQ>& probes) {
  spec.sampledOrbitDims.clear();
  spec.sampledOrbitDims.emplace_back("base point", spec.baseOrbitDim);
  for (std::size_t i = 0; i < probes.size(); ++i)
    spec.sampledOrbitDims.emplace_back("probe " + std::to_string(i),
                                       orbit_dimension_at(ss, spec.h, probes[i]));
}

CohomogeneityEstimate cohomogeneity_estimate(const SymmetricSpace& ss, const Subspace& h,
                                             const std::vector<VecQ>& probes) {
  CohomogeneityEstimate est;
  std::size_t best = span_projection_dim(ss.model.pBasis, ss.model.ip, h);
  est.witness = "base point";
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const std::size_t d = orbit_dimension_at(ss, h, probes[i]);
    if (d > best) {
      best = d;
      est.witness = "probe " + std::to_string(i);
    }
  }
  est.value = ss.model.pBasis.dim() - best;
  return est;
}

}  // namespace rank2
