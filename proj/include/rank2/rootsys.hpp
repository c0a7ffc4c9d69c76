#ifndef RANK2_ROOTSYS_HPP
#define RANK2_ROOTSYS_HPP

#include <map>
#include <string>
#include <vector>

#include "rank2/matrix.hpp"

namespace rank2 {

enum class RootKind { A1, A2, B2, G2 };

std::string root_kind_name(RootKind k);

/// Reduced root system realized through integer coordinates in the simple
/// root basis, with a rational Gram matrix supplying all inner products.
/// Labeling conventions: G2 has a1 shortest, B2 has a1 longest.
struct RootSystem {
  RootKind kind;
  std::size_t rank;
  MatQ gram;                            // gram(i,j) = <a_i, a_j>
  std::vector<VecQ> simpleRoots;        // coordinate vectors (unit vectors)
  std::vector<VecQ> allRoots;           // closed under negation
  std::vector<VecQ> positiveRoots;      // height then lexicographic order
  Matrix<Rational> cartanMatrix;        // integer entries as rationals

  Rational inner(const VecQ& a, const VecQ& b) const;
  bool is_root(const VecQ& v) const;
  /// Index into positiveRoots, or npos.
  std::size_t positive_index(const VecQ& v) const;
  std::string label(const VecQ& v) const;  // e.g. "3a1+2a2", "-a1"
  VecQ negate(const VecQ& v) const;
  Rational height(const VecQ& v) const;
};

RootSystem build_root_system(RootKind kind);

/// p = max{k : b - k a in Sigma}, q = max{k : b + k a in Sigma}.
/// Rejects a = +-b.
std::pair<int, int> root_string(const RootSystem& rs, const VecQ& a, const VecQ& b);

/// Chevalley structure constants N_{a,b} with the extraspecial pairs
/// assigned positive sign, plus the root-string integers p used by the
/// |N| = p + 1 normalization.
struct ChevalleyConstants {
  // Keyed by (label of a, label of b); present iff a + b is a root.
  std::map<std::pair<std::string, std::string>, Rational> pairs;
  std::map<std::pair<std::string, std::string>, int> rootStrings;

  Rational n(const RootSystem& rs, const VecQ& a, const VecQ& b) const;
};

ChevalleyConstants chevalley_constants(const RootSystem& rs);

/// Abstract complex semisimple Lie algebra on the Chevalley basis
/// {h_1..h_r} + {e_alpha}.  Bracket stored as a dense table of sparse rows.
struct ChevalleyAlgebra {
  RootSystem rs;
  std::size_t dim;                      // rank + |Sigma|
  std::vector<std::string> labels;      // "h1", "h2", "e[a1]", "e[-a1]", ...
  std::vector<VecQ> basisRoot;          // root of basis element, empty for h's
  // bracket[i][j] = list of (k, coeff)
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> table;

  std::size_t root_basis_index(const VecQ& root) const;
};

ChevalleyAlgebra chevalley_algebra(const RootSystem& rs, const ChevalleyConstants& cc);

/// Exhaustive Jacobi check over all basis triples of the abstract table.
bool chevalley_jacobi_holds(const ChevalleyAlgebra& alg);

}  // namespace rank2

#endif
