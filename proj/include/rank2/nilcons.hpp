#ifndef RANK2_NILCONS_HPP
#define RANK2_NILCONS_HPP

#include <cstdint>
#include <map>
#include <string>

#include "rank2/parabolic.hpp"

namespace rank2 {

enum class Verdict { Transitive, NotTransitive, Unknown };

std::string verdict_name(Verdict v);

/// Three-valued outcome of an infinitesimal transitivity proxy.  Only the
/// dimension-deficit and theta-stable refutations and the Iwasawa
/// containment confirmation are sound at the algebra level; anything else
/// stays Unknown.
struct TransitivityVerdict {
  Verdict value = Verdict::Unknown;
  std::string evidence;  // dimension-deficit | theta-stable-reductive |
                         // iwasawa-containment | sampling | inconclusive
  std::string detail;
};

template <class K>
struct NilConsReport {
  std::size_t j = 0;
  Span<K> v;
  Span<K> nJV;           // n_j minus v
  Span<K> normalizerMJ;  // N_{m_j}(n_{j,v})
  Span<K> normalizerKJ;  // N_{k_j}(v)
  TransitivityVerdict conditionI, conditionII;
  std::map<std::size_t, bool> vlMembership;
  std::size_t singularOrbitDim = 0;
  std::string hint;
  std::uint64_t seed = 0;
  std::size_t samples = 0;

  bool passes() const {
    return conditionI.value == Verdict::Transitive && conditionII.value == Verdict::Transitive;
  }
};

/// {X in s : [X, v] subset v}; s must be closed under the bracket.
Subspace normalizer(const SymmetricSpace& ss, const Subspace& s, const Subspace& v);
Span<QuadExt> normalizer(const SymmetricSpace& ss, const Span<QuadExt>& s,
                         const Span<QuadExt>& v);

/// {X in s : [X, v] = 0}.
Subspace centralizer(const SymmetricSpace& ss, const Subspace& s, const Subspace& v);

/// N_{l_j}(n_{j,v}) = theta N_{l_j}(v), the Lie algebra form of the
/// construction's duality identity.
bool theta_duality_check(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                         const Subspace& v);

TransitivityVerdict sphere_transitivity(const SymmetricSpace& ss,
                                        const ParabolicDecomposition& pd, const Subspace& v,
                                        std::size_t samples, std::uint64_t seed);

TransitivityVerdict boundary_transitivity(const SymmetricSpace& ss,
                                          const ParabolicDecomposition& pd, const Subspace& v);

/// Exact cos^2 of the Kahler angle of a 2-plane in a complex module.
Rational kahler_angle(const SymmetricSpace& ss, const Subspace& v);
QuadExt kahler_angle(const SymmetricSpace& ss, const Span<QuadExt>& v);

/// N_{m_j}(v) contained in q_{j,l} + z_j.
bool vl_membership(const SymmetricSpace& ss, const ParabolicDecomposition& pd, std::size_t l,
                   const Subspace& v);

struct SplittingReport {
  Subspace proj1;  // orthogonal projection into g_j
  Subspace proj2;  // orthogonal projection into z_j
  bool isDirect = false;
};

/// Splitting of a subalgebra tau of m_j through the canonical
/// projections onto g_j and z_j.
SplittingReport splitting_check(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                                const Subspace& tau);

NilConsReport<Rational> nilpotent_construction_check(const SymmetricSpace& ss,
                                                     const ParabolicDecomposition& pd,
                                                     const Subspace& v, std::size_t samples,
                                                     std::uint64_t seed);
NilConsReport<QuadExt> nilpotent_construction_check(const SymmetricSpace& ss,
                                                    const ParabolicDecomposition& pd,
                                                    const Span<QuadExt>& v, std::size_t samples,
                                                    std::uint64_t seed);

/// The parametrized 2-plane span{e_1, i cos(phi) e_1 + i sin(phi) e_2} of
/// the level-one module, keyed by rational cos^2(phi).  The plane has
/// rational coordinates exactly when tan^2(phi) is a rational square;
/// otherwise it lives over Q(sqrt(tan^2 phi)) and the quad member is set.
struct KahlerPlane {
  Rational cos2;
  bool isRational = false;
  Subspace rationalPlane;
  Span<QuadExt> quadPlane;
};

KahlerPlane kahler_family_plane(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                                const Rational& cos2);

}  // namespace rank2

#endif
