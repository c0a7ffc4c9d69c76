#ifndef RANK2_ORBITS_HPP
#define RANK2_ORBITS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rank2/nilcons.hpp"

namespace rank2 {

enum class ConstructionTag { FoliationA, FoliationN, CanonicalExtension, NilpotentConstruction };

std::string construction_tag_name(ConstructionTag t);

/// Lie algebra of one of the classified cohomogeneity one actions, with the
/// base-point orbit dimension and any sampled orbit dimensions attached.
struct ActionSpec {
  std::string label;
  ConstructionTag tag = ConstructionTag::FoliationA;
  Subspace h;
  std::size_t baseOrbitDim = 0;
  std::vector<std::pair<std::string, std::size_t>> sampledOrbitDims;
};

/// h_ell = (a minus ell) + n for a line ell in a.
ActionSpec foliation_algebra_a(const SymmetricSpace& ss, const Subspace& ell);

/// h_j = a + (n minus ell_j) for a line ell_j in the simple root space
/// g_{alpha_j}.
ActionSpec foliation_algebra_n(const SymmetricSpace& ss, std::size_t j, const Subspace& ellj);

/// h = hPhi + a_j + n_j for a subalgebra hPhi of m_j (the canonical
/// extension of a boundary-component action).
ActionSpec canonical_extension(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                               const Subspace& hPhi, const std::string& label = "");

/// Grassmannian family: h = N_{k_1}(w) + (a minus R H_{alpha_2}) +
/// (n minus g_{alpha_2}) + w, with w a k-dimensional subspace of
/// R H_{alpha_2} + g_{alpha_2} containing H_{alpha_2} when k >= 1.
ActionSpec grassmannian_extension_family(const SymmetricSpace& ss,
                                         const ParabolicDecomposition& pd, std::size_t k,
                                         const Subspace& w);

/// h = N_{l_j}(n_{j,v}) + n_{j,v}, the group of the nilpotent construction.
ActionSpec nilpotent_construction_action(const SymmetricSpace& ss,
                                         const ParabolicDecomposition& pd, const Subspace& v,
                                         const std::string& label = "");

/// Named boundary-component extensions: the point-stabilizer action
/// (hPhi = g_j cap k_j) and the geodesic action (hPhi = R i H_{alpha'} +
/// R H_{alpha'}), alpha' the simple root generating Sigma_j.
ActionSpec extension_point_action(const SymmetricSpace& ss, const ParabolicDecomposition& pd);
ActionSpec extension_geodesic_action(const SymmetricSpace& ss, const ParabolicDecomposition& pd);

/// B2 family, j = 2: hPhi = k_{alpha_1}.
ActionSpec grassmann_extension_j2(const SymmetricSpace& ss, const ParabolicDecomposition& pd);

/// exp(-ad X) for ad-nilpotent X (exact polynomial); throws on
/// non-nilpotent input.
MatQ nilpotent_exp_neg_ad(const LieAlgebraModel& model, const VecQ& x);

/// dim pi_p(e^{-ad X} h): the orbit dimension of H through exp(X) o.
std::size_t orbit_dimension_at(const SymmetricSpace& ss, const Subspace& h, const VecQ& x);

/// Seeded rational probes inside n (all ad-nilpotent).
std::vector<VecQ> default_nilpotent_probes(const SymmetricSpace& ss, std::size_t count,
                                           std::uint64_t seed);

/// Records orbit dimensions at the given probe points on the spec.
void sample_orbit_dims(const SymmetricSpace& ss, ActionSpec& spec,
                       const std::vector<VecQ>& probes);

struct CohomogeneityEstimate {
  std::size_t value = 0;
  std::string witness;  // description of the probe achieving the maximum
};

/// dim M minus the maximal sampled orbit dimension: an exact upper bound
/// for the cohomogeneity.
CohomogeneityEstimate cohomogeneity_estimate(const SymmetricSpace& ss, const Subspace& h,
                                             const std::vector<VecQ>& probes);

/// The full positive nilpotent subalgebra n.
Subspace positive_nilpotent(const SymmetricSpace& ss);

}  // namespace rank2

#endif
