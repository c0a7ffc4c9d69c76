#include "rank2/verify.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "rank2/rng.hpp"

namespace rank2 {

namespace {

constexpr int kStructuralNs[] = {1, 2, 3, 4, 5, 6};
constexpr int kGrassmannNs[] = {1, 2, 3, 6};

struct Workspace {
  const VerifyOptions& opts;
  std::map<std::pair<Preset, int>, std::shared_ptr<const SymmetricSpace>> spaces;
  std::map<std::pair<std::string, std::size_t>, std::shared_ptr<const ParabolicDecomposition>>
      parabolics;

  explicit Workspace(const VerifyOptions& o) : opts(o) {
    if (want(Preset::G2C_G2, 0)) add(Preset::G2C_G2, 0);
    if (want(Preset::SL3C_SU3, 0)) add(Preset::SL3C_SU3, 0);
    for (int n : kStructuralNs)
      if (want(Preset::SO_2_NP2, n)) add(Preset::SO_2_NP2, n);
  }

  bool want(Preset p, int n) const {
    if (!opts.onlyPreset.has_value()) return true;
    if (*opts.onlyPreset != p) return false;
    return p != Preset::SO_2_NP2 || opts.onlyN == n;
  }

  void add(Preset p, int n) {
    auto space = std::make_shared<SymmetricSpace>(build_space(p, n));
    for (std::size_t j = 1; j <= 2; ++j)
      parabolics.emplace(std::make_pair(space->model.id, j),
                         std::make_shared<ParabolicDecomposition>(
                             parabolic_decomposition(*space, j)));
    spaces.emplace(std::make_pair(p, n), std::move(space));
  }

  const SymmetricSpace& space(Preset p, int n = 0) const { return *spaces.at({p, n}); }
  const ParabolicDecomposition& pd(const SymmetricSpace& ss, std::size_t j) const {
    return *parabolics.at({ss.model.id, j});
  }

  std::vector<std::pair<Preset, int>> wanted(std::initializer_list<std::pair<Preset, int>> all)
      const {
    std::vector<std::pair<Preset, int>> out;
    for (const auto& [p, n] : all)
      if (want(p, n)) out.push_back({p, n});
    return out;
  }
};

VecQ coeffs2(int a, int b) {
  VecQ v(2);
  v[0] = a;
  v[1] = b;
  return v;
}

Subspace line_of(const LieAlgebraModel& m, const VecQ& v) {
  MatQ rows(0, m.dim);
  rows.append_row(v);
  return make_span(m.id, m.dim, std::move(rows));
}

struct CaseLog {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << "FAILED: " << what;
    }
  }
  void note(const std::string& what) {
    if (detail.tellp() > 0) detail << "; ";
    detail << what;
  }
};

bool root_space_closure(const SymmetricSpace& ss) {
  const LieAlgebraModel& m = ss.model;
  const RootSystem& rs = m.abstractRoots;
  std::vector<const Subspace*> pieces;
  std::vector<VecQ> labels;
  pieces.push_back(&ss.datum.g0);
  labels.push_back(VecQ(rs.rank, Rational(0)));
  for (const auto& alpha : rs.allRoots) {
    pieces.push_back(&ss.root(alpha).space);
    labels.push_back(alpha);
  }
  auto is_zero_vec = [](const VecQ& v) {
    for (const auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  };
  for (std::size_t a = 0; a < pieces.size(); ++a)
    for (std::size_t b = 0; b < pieces.size(); ++b) {
      VecQ sum(rs.rank);
      for (std::size_t i = 0; i < rs.rank; ++i) sum[i] = labels[a][i] + labels[b][i];
      const Subspace* target = nullptr;
      if (is_zero_vec(sum)) {
        target = &ss.datum.g0;
      } else if (rs.is_root(sum)) {
        target = &ss.root(sum).space;
      }
      for (std::size_t i = 0; i < pieces[a]->dim(); ++i)
        for (std::size_t j = 0; j < pieces[b]->dim(); ++j) {
          const VecQ br = m.bracket(pieces[a]->basis.row(i), pieces[b]->basis.row(j));
          bool zero = true;
          for (const auto& c : br) zero = zero && c.is_zero();
          if (zero) continue;
          if (target == nullptr || !span_contains(*target, br)) return false;
        }
    }
  return true;
}

CriterionResult criterion_structural(const Workspace& ws) {
  CriterionResult res{1, "structural-identities"};
  CaseLog log;
  const std::map<std::string, std::size_t> expectedDims = {{"g2c-g2", 28}, {"sl3c-su3", 16}};
  for (const auto& [key, space] : ws.spaces) {
    const SymmetricSpace& ss = *space;
    auto it = expectedDims.find(ss.model.id);
    if (it != expectedDims.end()) log.expect(ss.model.dim == it->second, ss.model.id + " dim");
    log.expect(jacobi_holds(ss.model), ss.model.id + " Jacobi");
    log.expect(theta_is_automorphism(ss.model), ss.model.id + " theta automorphism");
    log.expect(ad_invariance_holds(ss.model), ss.model.id + " ad-invariance");
    log.expect(root_space_closure(ss), ss.model.id + " root-space closure");
    log.note(ss.model.id + " ok");
  }
  res.applicable = !ws.spaces.empty();
  res.pass = log.pass;
  res.detail = log.detail.str();
  return res;
}

CriterionResult criterion_root_data(const Workspace& ws) {
  CriterionResult res{2, "restricted-root-data"};
  CaseLog log;
  if (ws.want(Preset::G2C_G2, 0)) {
    const SymmetricSpace& ss = ws.space(Preset::G2C_G2);
    log.expect(ss.model.abstractRoots.positiveRoots.size() == 6, "G2 has 6 positive roots");
    const std::set<std::string> expect = {"a1", "a2", "a1+a2", "2a1+a2", "3a1+a2", "3a1+2a2"};
    std::set<std::string> got;
    for (const auto& r : ss.model.abstractRoots.positiveRoots)
      got.insert(ss.model.abstractRoots.label(r));
    log.expect(got == expect, "G2 positive system matches");
    for (const auto& r : ss.datum.roots)
      log.expect(r.multiplicity == 2, "G2 multiplicity 2 at " + r.label);
    log.note("g2c-g2 ok");
  }
  if (ws.want(Preset::SL3C_SU3, 0)) {
    const SymmetricSpace& ss = ws.space(Preset::SL3C_SU3);
    log.expect(ss.model.abstractRoots.positiveRoots.size() == 3, "A2 has 3 positive roots");
    std::set<std::string> got;
    for (const auto& r : ss.model.abstractRoots.positiveRoots)
      got.insert(ss.model.abstractRoots.label(r));
    log.expect(got == std::set<std::string>{"a1", "a2", "a1+a2"}, "A2 positive system matches");
    for (const auto& r : ss.datum.roots)
      log.expect(r.multiplicity == 2, "A2 multiplicity 2 at " + r.label);
    log.note("sl3c-su3 ok");
  }
  for (int n : kStructuralNs) {
    if (!ws.want(Preset::SO_2_NP2, n)) continue;
    const SymmetricSpace& ss = ws.space(Preset::SO_2_NP2, n);
    const RootSystem& rs = ss.model.abstractRoots;
    log.expect(rs.positiveRoots.size() == 4, "B2 has 4 positive roots");
    std::set<std::string> got;
    for (const auto& r : rs.positiveRoots) got.insert(rs.label(r));
    log.expect(got == std::set<std::string>{"a1", "a2", "a1+a2", "a1+2a2"},
               "B2 positive system matches");
    Rational longest = 0;
    for (const auto& r : rs.allRoots) longest = std::max(longest, rs.inner(r, r));
    for (const auto& r : ss.datum.roots) {
      const bool isLong = rs.inner(r.coeffs, r.coeffs) == longest;
      log.expect(r.multiplicity == (isLong ? 1u : static_cast<unsigned>(n)),
                 ss.model.id + " multiplicity at " + r.label);
    }
    log.note(ss.model.id + " ok");
  }
  res.applicable = log.detail.tellp() > 0;
  res.pass = log.pass;
  res.detail = log.detail.str();
  return res;
}

CriterionResult criterion_gradation(const Workspace& ws) {
  CriterionResult res{3, "gradation-identity"};
  CaseLog log;
  for (const auto& [key, space] : ws.spaces) {
    const SymmetricSpace& ss = *space;
    for (std::size_t j = 1; j <= 2; ++j) {
      const GradationReport rep = gradation_check(ss, ws.pd(ss, j));
      log.expect(rep.ok, ss.model.id + " j=" + std::to_string(j) + " (" + rep.offending + ")");
      log.expect(rep.levels.size() == ws.pd(ss, j).gradation.size(),
                 ss.model.id + " level count");
    }
    log.note(ss.model.id + " ok");
  }
  res.applicable = !ws.spaces.empty();
  res.pass = log.pass;
  res.detail = log.detail.str();
  return res;
}

CriterionResult criterion_coroot_spectrum(const Workspace& ws) {
  CriterionResult res{4, "coroot-spectrum"};
  if (!ws.want(Preset::G2C_G2, 0)) {
    res.applicable = false;
    res.pass = true;
    res.detail = "skipped under the preset filter";
    return res;
  }
  CaseLog log;
  const SymmetricSpace& ss = ws.space(Preset::G2C_G2);
  const ParabolicDecomposition& pd2 = ws.pd(ss, 2);
  const Subspace n12 = pd2.levelOne();
  log.expect(n12.dim() == 8, "n^1_2 is 8-dimensional");
  const VecQ h = coroot(ss.model, ss.datum, coeffs2(1, 0));
  const MatQ adh = ss.model.ad(h);
  std::size_t total = 0;
  for (int ev : {-3, -1, 1, 3}) {
    // kernel of (ad h - ev) restricted to n^1_2
    MatQ sys(ss.model.dim, n12.dim());
    for (std::size_t c = 0; c < n12.dim(); ++c) {
      VecQ img = adh.apply(n12.basis.row(c));
      for (std::size_t r = 0; r < ss.model.dim; ++r)
        sys(r, c) = img[r] - Rational(ev) * n12.basis(c, r);
    }
    const std::size_t dim = n12.dim() - sys.rank();
    log.expect(dim == 2, "eigenvalue " + std::to_string(ev) + " has multiplicity 2");
    total += dim;
  }
  log.expect(total == 8, "spectrum is exactly {-3,-1,1,3}");
  log.note("g2c-g2 ok");
  res.pass = log.pass;
  res.detail = log.detail.str();
  return res;
}

CriterionResult criterion_kahler_family(const Workspace& ws) {
  CriterionResult res{5, "kahler-family-normalizers"};
  if (!ws.want(Preset::G2C_G2, 0)) {
    res.applicable = false;
    res.pass = true;
    res.detail = "skipped under the preset filter";
    return res;
  }
  CaseLog log;
  const SymmetricSpace& ss = ws.space(Preset::G2C_G2);
  const ParabolicDecomposition& pd1 = ws.pd(ss, 1);
  for (const Rational q : {Rational(3, 4), Rational(1, 2), Rational(1, 4), Rational(0)}) {
    const KahlerPlane plane = kahler_family_plane(ss, pd1, q);
    const std::string tag = "cos^2 = " + to_string(q);
    if (plane.isRational) {
      const Subspace w =
          span_complement_within(pd1.levelOne(), plane.rationalPlane, ss.model.ip);
      const Subspace norm = normalizer(ss, pd1.gj, w);
      log.expect(norm.dim() == 3, tag + ": dim N_{g_1} = 3");
      log.expect(span_projection_dim(ss.model.pBasis, ss.model.ip, norm) == 2,
                 tag + ": dim of the theta-split projection = 2");
      const auto rep = nilpotent_construction_check(ss, pd1, plane.rationalPlane,
                                                    ws.opts.samples, ws.opts.seed);
      log.expect(rep.conditionI.value == Verdict::NotTransitive,
                 tag + ": condition (i) refuted");
    } else {
      const Span<QuadExt> levelOne = lift_span(pd1.levelOne());
      const Matrix<QuadExt> ip = lift_matrix(ss.model.ip);
      const Span<QuadExt> w = span_complement_within(levelOne, plane.quadPlane, ip);
      const Span<QuadExt> norm = normalizer(ss, lift_span(pd1.gj), w);
      log.expect(norm.dim() == 3, tag + ": dim N_{g_1} = 3");
      log.expect(span_projection_dim(lift_span(ss.model.pBasis), ip, norm) == 2,
                 tag + ": dim of the theta-split projection = 2");
      const auto rep = nilpotent_construction_check(ss, pd1, plane.quadPlane,
                                                    ws.opts.samples, ws.opts.seed);
      log.expect(rep.conditionI.value == Verdict::NotTransitive,
                 tag + ": condition (i) refuted");
    }
    log.note(tag + " ok");
  }
  res.pass = log.pass;
  res.detail = log.detail.str();
  return res;
}

CriterionResult criterion_verdicts(const Workspace& ws) {
  CriterionResult res{6, "nilpotent-construction-verdicts"};
  CaseLog log;
  const std::size_t samples = ws.opts.samples;
  const std::uint64_t seed = ws.opts.seed;
  auto no_unknown = [&](const NilConsReport<Rational>& rep, const std::string& tag) {
    log.expect(rep.conditionI.value != Verdict::Unknown, tag + ": condition (i) decided");
    log.expect(rep.conditionII.value != Verdict::Unknown, tag + ": condition (ii) decided");
  };
  if (ws.want(Preset::G2C_G2, 0)) {
    const SymmetricSpace& ss = ws.space(Preset::G2C_G2);
    const ParabolicDecomposition& pd1 = ws.pd(ss, 1);
    const ParabolicDecomposition& pd2 = ws.pd(ss, 2);
    {
      const auto rep = nilpotent_construction_check(ss, pd1, pd1.levelOne(), samples, seed);
      no_unknown(rep, "G2 j=1 full");
      log.expect(rep.passes(), "G2 j=1 v=n^1_1 passes");
      log.expect(rep.singularOrbitDim == 10, "G2 j=1 full: singular orbit dimension 10");
    }
    {
      const auto rep = nilpotent_construction_check(ss, pd1, ss.root(coeffs2(1, 0)).space,
                                                    samples, seed);
      no_unknown(rep, "G2 j=1 line");
      log.expect(rep.passes(), "G2 j=1 complex line passes");
    }
    {
      const auto rep = nilpotent_construction_check(ss, pd2, ss.root(coeffs2(3, 1)).space,
                                                    samples, seed);
      no_unknown(rep, "G2 j=2 top line");
      log.expect(rep.passes(), "G2 j=2 v=g_{3a1+a2} passes");
    }
    for (auto c : {coeffs2(1, 1), coeffs2(2, 1)}) {
      const auto rep = nilpotent_construction_check(ss, pd2, ss.root(c).space, samples, seed);
      no_unknown(rep, "G2 j=2 middle line");
      log.expect(rep.conditionI.value == Verdict::NotTransitive,
                 "G2 j=2 middle weight line fails condition (i)");
    }
    {
      // the opposite extreme line passes (conjugate to g_{3a1+a2}) but is
      // not a V_1 member
      const auto rep = nilpotent_construction_check(ss, pd2, ss.root(coeffs2(0, 1)).space,
                                                    samples, seed);
      no_unknown(rep, "G2 j=2 bottom line");
      log.expect(rep.passes(), "G2 j=2 v=g_{a2} passes (conjugate case)");
      log.expect(!rep.vlMembership.at(1), "G2 j=2 v=g_{a2} is not a V_1 member");
    }
    log.note("g2c-g2 ok");
  }
  for (int n : kGrassmannNs) {
    if (!ws.want(Preset::SO_2_NP2, n)) continue;
    const SymmetricSpace& ss = ws.space(Preset::SO_2_NP2, n);
    const ParabolicDecomposition& pd1 = ws.pd(ss, 1);
    const ParabolicDecomposition& pd2 = ws.pd(ss, 2);
    const GrassmannFrame fr = grassmann_frame(ss);
    {
      const Subspace xiperp =
          span_complement_within(pd1.levelOne(), line_of(ss.model, fr.xi), ss.model.ip);
      SeededRng rng(seed + 17);
      for (int trial = 0; trial < 3; ++trial) {
        Subspace v;
        do {
          MatQ rows(0, ss.model.dim);
          for (int r = 0; r < 2; ++r) {
            const VecQ c = rng.nonzero_vector(xiperp.dim());
            VecQ row(ss.model.dim, Rational(0));
            for (std::size_t i = 0; i < xiperp.dim(); ++i)
              for (std::size_t jj = 0; jj < ss.model.dim; ++jj)
                row[jj] += c[i] * xiperp.basis(i, jj);
            rows.append_row(row);
          }
          v = make_span(ss.model.id, ss.model.dim, std::move(rows));
        } while (v.dim() != 2);
        const auto rep = nilpotent_construction_check(ss, pd1, v, samples, seed);
        no_unknown(rep, ss.model.id + " j=1 sample");
        log.expect(rep.conditionI.value == Verdict::NotTransitive,
                   ss.model.id + " j=1 plane inside xi-perp fails");
      }
    }
    {
      MatQ rows(0, ss.model.dim);
      rows.append_row(fr.e1f[0]);
      rows.append_row(fr.e2f[0]);
      const Subspace v = make_span(ss.model.id, ss.model.dim, std::move(rows));
      const auto rep = nilpotent_construction_check(ss, pd2, v, samples, seed);
      no_unknown(rep, ss.model.id + " j=2 pair plane");
      log.expect(rep.passes(), ss.model.id + " j=2 pair plane passes");
      log.expect(ss.model.pBasis.dim() - rep.singularOrbitDim == 2,
                 ss.model.id + " j=2 singular orbit has codimension 2");
    }
    log.note(ss.model.id + " ok");
  }
  res.applicable = log.detail.tellp() > 0;
  res.pass = log.pass;
  res.detail = log.detail.str();
  return res;
}

CriterionResult criterion_orbit_dims(const Workspace& ws) {
  CriterionResult res{7, "singular-orbit-dimensions"};
  CaseLog log;
  if (ws.want(Preset::G2C_G2, 0)) {
    const SymmetricSpace& ss = ws.space(Preset::G2C_G2);
    for (std::size_t j : {1u, 2u}) {
      log.expect(extension_point_action(ss, ws.pd(ss, j)).baseOrbitDim == 11,
                 "G2 point extension has an 11-dimensional singular orbit");
      log.expect(extension_geodesic_action(ss, ws.pd(ss, j)).baseOrbitDim == 12,
                 "G2 geodesic extension has a 12-dimensional singular orbit");
    }
    log.expect(
        nilpotent_construction_action(ss, ws.pd(ss, 1), ws.pd(ss, 1).levelOne()).baseOrbitDim ==
            10,
        "G2 nilpotent-construction action has a 10-dimensional singular orbit");
    log.note("g2c-g2 ok");
  }
  if (ws.want(Preset::SL3C_SU3, 0)) {
    const SymmetricSpace& ss = ws.space(Preset::SL3C_SU3);
    log.expect(extension_point_action(ss, ws.pd(ss, 1)).baseOrbitDim == 5,
               "SL3 point extension has a 5-dimensional singular orbit");
    log.expect(extension_geodesic_action(ss, ws.pd(ss, 1)).baseOrbitDim == 6,
               "SL3 geodesic extension has a 6-dimensional singular orbit");
    log.note("sl3c-su3 ok");
  }
  for (int n : kGrassmannNs) {
    if (!ws.want(Preset::SO_2_NP2, n)) continue;
    const SymmetricSpace& ss = ws.space(Preset::SO_2_NP2, n);
    const GrassmannFrame fr = grassmann_frame(ss);
    const VecQ hA2 = ss.root(coeffs2(0, 1)).hAlpha;
    const std::size_t dimM = ss.model.pBasis.dim();
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
      MatQ rows(0, ss.model.dim);
      if (k >= 1) {
        rows.append_row(hA2);
        for (std::size_t i = 0; i + 1 < k; ++i) rows.append_row(fr.e1f[i]);
      }
      const Subspace w = make_span(ss.model.id, ss.model.dim, std::move(rows));
      const ActionSpec spec = grassmannian_extension_family(ss, ws.pd(ss, 1), k, w);
      log.expect(dimM - spec.baseOrbitDim == static_cast<std::size_t>(n) - k + 1,
                 ss.model.id + " family k=" + std::to_string(k) + " has codimension n-k+1");
    }
    log.expect(dimM - grassmann_extension_j2(ss, ws.pd(ss, 2)).baseOrbitDim == 2,
               ss.model.id + " j=2 extension has codimension 2");
    log.note(ss.model.id + " ok");
  }
  res.applicable = log.detail.tellp() > 0;
  res.pass = log.pass;
  res.detail = log.detail.str();
  return res;
}

CriterionResult criterion_cohomogeneity(const Workspace& ws) {
  CriterionResult res{8, "cohomogeneity-one-estimates"};
  CaseLog log;
  auto check_actions = [&](const SymmetricSpace& ss, const std::vector<ActionSpec>& actions) {
    const std::vector<VecQ> probes = default_nilpotent_probes(ss, 16, ws.opts.seed);
    for (const ActionSpec& spec : actions) {
      const CohomogeneityEstimate est = cohomogeneity_estimate(ss, spec.h, probes);
      log.expect(est.value == 1, ss.model.id + " " + spec.label + " has cohomogeneity 1");
    }
    log.note(ss.model.id + " ok (" + std::to_string(actions.size()) + " actions)");
  };
  auto foliations = [&](const SymmetricSpace& ss) {
    std::vector<ActionSpec> specs;
    specs.push_back(foliation_algebra_a(ss, line_of(ss.model, ss.root(coeffs2(1, 0)).hAlpha)));
    const RootSystem& rs = ss.model.abstractRoots;
    for (std::size_t j = 1; j <= rs.rank; ++j)
      specs.push_back(foliation_algebra_n(
          ss, j, line_of(ss.model, ss.root(rs.simpleRoots[j - 1]).space.basis.row(0))));
    return specs;
  };
  if (ws.want(Preset::G2C_G2, 0)) {
    const SymmetricSpace& ss = ws.space(Preset::G2C_G2);
    std::vector<ActionSpec> actions = foliations(ss);
    for (std::size_t j : {1u, 2u}) {
      actions.push_back(extension_point_action(ss, ws.pd(ss, j)));
      actions.push_back(extension_geodesic_action(ss, ws.pd(ss, j)));
    }
    actions.push_back(nilpotent_construction_action(ss, ws.pd(ss, 1), ws.pd(ss, 1).levelOne()));
    check_actions(ss, actions);
  }
  if (ws.want(Preset::SL3C_SU3, 0)) {
    const SymmetricSpace& ss = ws.space(Preset::SL3C_SU3);
    std::vector<ActionSpec> actions = foliations(ss);
    actions.push_back(extension_point_action(ss, ws.pd(ss, 1)));
    actions.push_back(extension_geodesic_action(ss, ws.pd(ss, 1)));
    check_actions(ss, actions);
  }
  for (int n : kGrassmannNs) {
    if (!ws.want(Preset::SO_2_NP2, n)) continue;
    const SymmetricSpace& ss = ws.space(Preset::SO_2_NP2, n);
    std::vector<ActionSpec> actions = foliations(ss);
    const GrassmannFrame fr = grassmann_frame(ss);
    const VecQ hA2 = ss.root(coeffs2(0, 1)).hAlpha;
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
      MatQ rows(0, ss.model.dim);
      if (k >= 1) {
        rows.append_row(hA2);
        for (std::size_t i = 0; i + 1 < k; ++i) rows.append_row(fr.e1f[i]);
      }
      actions.push_back(grassmannian_extension_family(
          ss, ws.pd(ss, 1), k, make_span(ss.model.id, ss.model.dim, std::move(rows))));
    }
    actions.push_back(grassmann_extension_j2(ss, ws.pd(ss, 2)));
    check_actions(ss, actions);
  }
  res.applicable = log.detail.tellp() > 0;
  res.pass = log.pass;
  res.detail = log.detail.str();
  return res;
}

CriterionResult criterion_membership(const Workspace& ws) {
  CriterionResult res{9, "membership-tests"};
  CaseLog log;
  if (ws.want(Preset::G2C_G2, 0)) {
    const SymmetricSpace& ss = ws.space(Preset::G2C_G2);
    log.expect(vl_membership(ss, ws.pd(ss, 2), 1, ss.root(coeffs2(3, 1)).space),
               "g_{3a1+a2} lies in V_1 for G2 j=2");
  }
  for (const auto& [key, space] : ws.spaces) {
    const SymmetricSpace& ss = *space;
    for (std::size_t j : {1u, 2u}) {
      const std::size_t l = 3 - j;
      log.expect(!vl_membership(ss, ws.pd(ss, j), l, ws.pd(ss, j).levelOne()),
                 ss.model.id + " j=" + std::to_string(j) + ": n^1_j is not a V_l member");
    }
    log.note(ss.model.id + " ok");
  }
  res.applicable = !ws.spaces.empty();
  res.pass = log.pass;
  res.detail = log.detail.str();
  return res;
}

CriterionResult criterion_oracle(const Workspace& ws) {
  CriterionResult res{10, "commutator-oracle"};
  CaseLog log;
  for (const auto& [key, space] : ws.spaces) {
    const SymmetricSpace& ss = *space;
    if (!ss.model.repMatrices.has_value()) continue;
    const auto& rep = *ss.model.repMatrices;
    bool ok = true;
    for (std::size_t i = 0; i < ss.model.dim && ok; ++i)
      for (std::size_t j = 0; j < ss.model.dim && ok; ++j) {
        const MatQ comm = rep[i] * rep[j] - rep[j] * rep[i];
        MatQ expected(rep[0].rows(), rep[0].cols());
        for (const auto& [k, c] : ss.model.table[i][j]) expected = expected + c * rep[k];
        ok = comm == expected;
      }
    log.expect(ok, ss.model.id + " bracket tensor equals the matrix commutators");
    log.note(ss.model.id + " ok");
  }
  res.applicable = log.detail.tellp() > 0;
  res.pass = log.pass;
  res.detail = log.detail.str();
  return res;
}

}  // namespace

std::vector<CriterionResult> run_criteria(const VerifyOptions& opts) {
  const Workspace ws(opts);
  std::vector<std::function<CriterionResult()>> tasks = {
      [&] { return criterion_structural(ws); },  [&] { return criterion_root_data(ws); },
      [&] { return criterion_gradation(ws); },   [&] { return criterion_coroot_spectrum(ws); },
      [&] { return criterion_kahler_family(ws); }, [&] { return criterion_verdicts(ws); },
      [&] { return criterion_orbit_dims(ws); },  [&] { return criterion_cohomogeneity(ws); },
      [&] { return criterion_membership(ws); },  [&] { return criterion_oracle(ws); },
  };
  std::vector<CriterionResult> results(tasks.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, tasks.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          results[i] = tasks[i]();
        }
      });
    for (auto& t : pool) t.join();
  }
  return results;
}

CriterionResult determinism_criterion(const VerifyOptions& opts,
                                      const std::vector<CriterionResult>& firstRun) {
  CriterionResult res{11, "deterministic-output"};
  const std::string first = suite_to_json(firstRun, opts).dump(2);
  const std::string second = suite_to_json(run_criteria(opts), opts).dump(2);
  res.pass = first == second;
  res.detail = res.pass ? "two full runs serialize to identical bytes"
                        : "serialized suites differ between runs";
  return res;
}

nlohmann::json suite_to_json(const std::vector<CriterionResult>& results,
                             const VerifyOptions& opts) {
  nlohmann::json out;
  out["schemaVersion"] = 1;
  out["suite"] = "verify-paper";
  out["seed"] = opts.seed;
  out["samples"] = opts.samples;
  if (opts.onlyPreset.has_value())
    out["presetFilter"] = preset_id(*opts.onlyPreset, opts.onlyN);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : results)
    rows.push_back(nlohmann::json{{"id", r.id},
                                  {"name", r.name},
                                  {"applicable", r.applicable},
                                  {"pass", r.pass},
                                  {"detail", r.detail}});
  out["criteria"] = std::move(rows);
  out["allPass"] = suite_passes(results);
  return out;
}

std::string suite_to_text(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << " (" << r.name << ")";
    if (!r.applicable) os << "  [not applicable]";
    os << "\n";
    if (!r.pass) os << "      " << r.detail << "\n";
  }
  os << (suite_passes(results) ? "all criteria passed" : "SUITE FAILED") << "\n";
  return os.str();
}

bool suite_passes(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace rank2
