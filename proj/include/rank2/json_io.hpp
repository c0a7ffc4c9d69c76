#ifndef RANK2_JSON_IO_HPP
#define RANK2_JSON_IO_HPP

#include "json.hpp"
#include "rank2/nilcons.hpp"
#include "rank2/orbits.hpp"

namespace rank2 {

/// Versioned model document: preset tag, basis labels, sparse bracket
/// triples (rationals as "p/q" strings), theta matrix.
nlohmann::json model_to_json(const LieAlgebraModel& model);

/// Parses a model document, rebuilds the preset and verifies that basis
/// labels, bracket tensor and theta all match; mismatches throw
/// InvariantError.
LieAlgebraModel model_from_json(const nlohmann::json& doc);

nlohmann::json decomposition_to_json(const SymmetricSpace& ss, const ParabolicDecomposition& pd);

nlohmann::json report_to_json(const NilConsReport<Rational>& rep);
nlohmann::json report_to_json(const NilConsReport<QuadExt>& rep);

nlohmann::json action_to_json(const ActionSpec& spec);

}  // namespace rank2

#endif
