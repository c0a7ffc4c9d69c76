#ifndef RANK2_PARABOLIC_HPP
#define RANK2_PARABOLIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank2/liealg.hpp"

namespace rank2 {

/// A model bundled with its restricted root datum; the working context for
/// everything downstream of the root space decomposition.
struct SymmetricSpace {
  LieAlgebraModel model;
  RestrictedRootDatum datum;

  const RestrictedRoot& root(const VecQ& coeffs) const {
    return datum.root(model.abstractRoots, coeffs);
  }
};

SymmetricSpace build_space(Preset preset, int n = 0);

/// Everything attached to the maximal proper parabolic subalgebra q_j for
/// Phi_j = Lambda minus {alpha_j}.  All invariants are verified at
/// construction; failures throw InvariantError.
struct ParabolicDecomposition {
  std::size_t j = 0;                 // 1-based simple root index
  std::vector<VecQ> phi;             // simple roots kept
  std::vector<VecQ> sigmaJPositive;  // positive roots of the subsystem
  Subspace lj, nj, aj, aUpperJ, mj, gj, zj, kj, bj, qj;
  std::map<long, Subspace> gradation;  // level nu >= 1 -> n_j^nu
  VecQ Hj;                             // dual vector H^j
  std::map<std::string, Subspace> kAlpha;

  Subspace levelOne() const { return gradation.at(1); }
  long topLevel() const { return gradation.rbegin()->first; }
};

ParabolicDecomposition parabolic_decomposition(const SymmetricSpace& ss, std::size_t j);

struct GradationReport {
  bool ok = true;
  std::vector<std::pair<long, std::size_t>> levels;  // (nu, dimension), verified
  std::string offending;  // description of the first failing triple
};

/// Verifies [H, X] = nu alpha_j(H) X for every a_j-basis H and every basis
/// X of every gradation level.
GradationReport gradation_check(const SymmetricSpace& ss, const ParabolicDecomposition& pd);

struct BoundaryComponentData {
  Subspace gjCapKj;
  Subspace bj;
  std::size_t dimBj = 0;
};

BoundaryComponentData boundary_component_data(const SymmetricSpace& ss,
                                              const ParabolicDecomposition& pd);

/// The parabolic subalgebra q_{j,l} of g_j, realized as the intersection of
/// g_j with the parabolic subalgebra of g attached to Lambda minus
/// {alpha_j, alpha_l}.
Subspace parabolic_in_gj(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                         std::size_t l);

/// Distinguished tensor frame for the Grassmannian preset: bases of
/// g_{alpha_2} and g_{alpha_1+alpha_2} matched as e_1 x f_s and e_2 x f_s
/// through the k_{alpha_1} rotation, the k_0-trivial direction xi of n_1,
/// and the generator T of k_{alpha_1}.
struct GrassmannFrame {
  VecQ xi;
  VecQ T;
  std::vector<VecQ> e1f;
  std::vector<VecQ> e2f;
};

GrassmannFrame grassmann_frame(const SymmetricSpace& ss);

}  // namespace rank2

#endif
