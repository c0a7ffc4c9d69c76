#ifndef RANK2_LIEALG_HPP
#define RANK2_LIEALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "rank2/rootsys.hpp"
#include "rank2/subspace.hpp"

namespace rank2 {

enum class Preset { G2C_G2, SL3C_SU3, SO_2_NP2 };

std::string preset_id(Preset p, int n);

/// Real semisimple Lie algebra on a fixed rational basis: exact bracket
/// tensor, Cartan involution theta, Killing form B and the inner product
/// <X,Y> = -B(X, theta Y).  The complex presets are complex algebras on a
/// Chevalley basis regarded as real (basis {x_b, i x_b}); the Grassmannian
/// preset consists of (n+4)x(n+4) matrices preserving diag(-1,-1,1,...,1).
struct LieAlgebraModel {
  Preset preset;
  int n = 0;  // only meaningful for SO_2_NP2
  std::string id;
  std::size_t dim = 0;
  std::vector<std::string> basisNames;
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> table;
  MatQ theta;
  MatQ killing;
  MatQ ip;
  Subspace kBasis, pBasis, aBasis;
  std::optional<MatQ> complexJ;
  std::optional<std::vector<MatQ>> repMatrices;  // defining representation images
  RootSystem abstractRoots;
  MatQ realization;  // realization(i, u) = alpha_i(a_u)

  VecQ bracket(const VecQ& x, const VecQ& y) const;
  MatQ ad(const VecQ& x) const;
  Rational ip_of(const VecQ& x, const VecQ& y) const;
  VecQ theta_of(const VecQ& x) const { return theta.apply(x); }

  template <class K>
  std::vector<K> bracket_t(const std::vector<K>& x, const std::vector<K>& y) const {
    if (x.size() != dim || y.size() != dim)
      throw std::invalid_argument("bracket: dimension mismatch");
    std::vector<K> out(dim, K(0));
    for (std::size_t i = 0; i < dim; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (is_zero(y[j])) continue;
        for (const auto& [k, c] : table[i][j]) out[k] += x[i] * y[j] * K(c);
      }
    }
    return out;
  }
};

LieAlgebraModel build_model(Preset preset, int n = 0);

struct RestrictedRoot {
  VecQ coeffs;       // coefficients in the simple restricted roots
  std::string label;
  VecQ valuesOnA;    // alpha(a_u) on the stored a-basis
  Subspace space;
  std::size_t multiplicity = 0;
  VecQ hAlpha;       // H_alpha, the ip-dual vector in a
};

struct RestrictedRootDatum {
  std::vector<RestrictedRoot> roots;  // ordered as abstractRoots.allRoots
  Subspace g0;
  Subspace k0;
  std::vector<VecQ> dualVectors;  // H^j (alpha_k(H^j) = delta_{kj})

  const RestrictedRoot& root(const RootSystem& rs, const VecQ& coeffs) const;
};

/// Simultaneous eigenspace decomposition of ad(a); fails loudly when the
/// eigenvalue structure does not match the preset's abstract root system.
RestrictedRootDatum restricted_root_decomposition(const LieAlgebraModel& model);

/// H'_alpha = (2/<alpha,alpha>) H_alpha.
VecQ coroot(const LieAlgebraModel& model, const RestrictedRootDatum& datum, const VecQ& alphaCoeffs);

/// Image of a subspace under a linear map in column convention (v -> M v).
Subspace map_subspace(const MatQ& m, const Subspace& s);

bool is_subalgebra(const LieAlgebraModel& model, const Subspace& s);

/// Exhaustive structural checks over all basis pairs/triples.
bool jacobi_holds(const LieAlgebraModel& model);
bool theta_is_automorphism(const LieAlgebraModel& model);
bool ad_invariance_holds(const LieAlgebraModel& model);  // <ad(X)Y,Z> = -<Y,ad(thetaX)Z>

/// All leading pivots of the symmetric Gaussian elimination positive.
bool symmetric_positive_definite(const MatQ& g);

/// Exact rational rotation exp(t ad X) for X in k whose ad-spectrum is
/// {0, +-i, +-2i, ...} and a rational point (c, s) on the unit circle;
/// the result is a genuine Lie algebra automorphism.
MatQ torus_rotation(const LieAlgebraModel& model, const VecQ& x, const Rational& c,
                    const Rational& s);

}  // namespace rank2

#endif
