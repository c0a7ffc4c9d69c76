#ifndef RANK2_SPECPARSE_HPP
#define RANK2_SPECPARSE_HPP

#include "rank2/nilcons.hpp"

namespace rank2 {

/// A parsed candidate subspace.  Kahler-family members with irrational
/// tangent live over a quadratic extension; everything else is rational.
struct ParsedSubspace {
  bool isRational = true;
  Subspace rational;
  Span<QuadExt> quad;
};

/// Mini-language for candidate subspaces of n^1_j:
///   full                    the whole level-one module
///   root:<label>            a root space, e.g. root:3a1+a2
///   kahler:<p/q>            the angle-family plane with cos^2 phi = p/q
///   rows:[[...],[...]]      explicit rational rows in model coordinates
/// Throws std::invalid_argument on malformed input.
ParsedSubspace parse_subspace_spec(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                                   const std::string& spec);

/// Parses a positive-root label such as "a2" or "3a1+2a2".
VecQ parse_root_label(const RootSystem& rs, const std::string& label);

}  // namespace rank2

#endif
