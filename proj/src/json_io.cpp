#include "rank2/json_io.hpp"

namespace rank2 {

using nlohmann::json;

namespace {

json matrix_to_json(const MatQ& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
json span_to_json(const Span<K>& s) {
  json out;
  out["ambient"] = s.ambient;
  out["dim"] = s.dim();
  json rows = json::array();
  for (std::size_t i = 0; i < s.basis.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < s.basis.cols(); ++j) row.push_back(to_string(s.basis(i, j)));
    rows.push_back(std::move(row));
  }
  out["basis"] = std::move(rows);
  return out;
}

json verdict_to_json(const TransitivityVerdict& v) {
  return json{{"value", verdict_name(v.value)}, {"evidence", v.evidence}, {"detail", v.detail}};
}

std::string preset_tag(Preset p) {
  switch (p) {
    case Preset::G2C_G2: return "g2c-g2";
    case Preset::SL3C_SU3: return "sl3c-su3";
    case Preset::SO_2_NP2: return "so-2-np2";
  }
  return "?";
}

template <class K>
json report_to_json_impl(const NilConsReport<K>& rep) {
  json out;
  out["schemaVersion"] = 1;
  out["j"] = rep.j;
  out["v"] = span_to_json(rep.v);
  out["nJV"] = span_to_json(rep.nJV);
  out["normalizerMJ"] = span_to_json(rep.normalizerMJ);
  out["normalizerKJ"] = span_to_json(rep.normalizerKJ);
  out["conditionI"] = verdict_to_json(rep.conditionI);
  out["conditionII"] = verdict_to_json(rep.conditionII);
  json vl = json::object();
  for (const auto& [l, member] : rep.vlMembership) vl[std::to_string(l)] = member;
  out["vlMembership"] = std::move(vl);
  out["singularOrbitDim"] = rep.singularOrbitDim;
  out["hint"] = rep.hint;
  out["seed"] = rep.seed;
  out["samples"] = rep.samples;
  out["passes"] = rep.passes();
  return out;
}

}  // namespace

json model_to_json(const LieAlgebraModel& model) {
  json out;
  out["schemaVersion"] = 1;
  out["preset"] = preset_tag(model.preset);
  if (model.preset == Preset::SO_2_NP2) out["n"] = model.n;
  out["dim"] = model.dim;
  out["basis"] = model.basisNames;
  json bracket = json::array();
  for (std::size_t i = 0; i < model.dim; ++i)
    for (std::size_t j = 0; j < model.dim; ++j)
      for (const auto& [k, c] : model.table[i][j])
        bracket.push_back(json::array({i, j, k, to_string(c)}));
  out["bracket"] = std::move(bracket);
  out["theta"] = matrix_to_json(model.theta);
  return out;
}

LieAlgebraModel model_from_json(const json& doc) {
  if (!doc.contains("schemaVersion") || doc.at("schemaVersion").get<int>() != 1)
    throw std::invalid_argument("unsupported model schema version");
  const std::string tag = doc.at("preset").get<std::string>();
  Preset preset;
  int n = 0;
  if (tag == "g2c-g2") {
    preset = Preset::G2C_G2;
  } else if (tag == "sl3c-su3") {
    preset = Preset::SL3C_SU3;
  } else if (tag == "so-2-np2") {
    preset = Preset::SO_2_NP2;
    n = doc.at("n").get<int>();
  } else {
    throw std::invalid_argument("unknown preset tag: " + tag);
  }
  LieAlgebraModel model = build_model(preset, n);
  if (doc.at("dim").get<std::size_t>() != model.dim)
    throw InvariantError("model document dimension mismatch");
  if (doc.at("basis").get<std::vector<std::string>>() != model.basisNames)
    throw InvariantError("model document basis labels mismatch");
  // verify the bracket triples reproduce the tensor exactly
  std::vector<std::vector<std::map<std::size_t, Rational>>> seen(
      model.dim, std::vector<std::map<std::size_t, Rational>>(model.dim));
  for (const auto& triple : doc.at("bracket")) {
    const std::size_t i = triple.at(0).get<std::size_t>();
    const std::size_t j = triple.at(1).get<std::size_t>();
    const std::size_t k = triple.at(2).get<std::size_t>();
    seen.at(i).at(j)[k] += parse_rational(triple.at(3).get<std::string>());
  }
  for (std::size_t i = 0; i < model.dim; ++i)
    for (std::size_t j = 0; j < model.dim; ++j) {
      std::map<std::size_t, Rational> expect;
      for (const auto& [k, c] : model.table[i][j])
        if (!c.is_zero()) expect[k] = c;
      std::map<std::size_t, Rational> got;
      for (const auto& [k, c] : seen[i][j])
        if (!c.is_zero()) got[k] = c;
      if (expect != got) throw InvariantError("model document bracket tensor mismatch");
    }
  const json theta = matrix_to_json(model.theta);
  if (doc.at("theta") != theta) throw InvariantError("model document theta mismatch");
  return model;
}

json decomposition_to_json(const SymmetricSpace& ss, const ParabolicDecomposition& pd) {
  json out;
  out["schemaVersion"] = 1;
  out["preset"] = preset_tag(ss.model.preset);
  if (ss.model.preset == Preset::SO_2_NP2) out["n"] = ss.model.n;
  out["j"] = pd.j;
  json dims;
  dims["lj"] = pd.lj.dim();
  dims["nj"] = pd.nj.dim();
  dims["aj"] = pd.aj.dim();
  dims["aUpperJ"] = pd.aUpperJ.dim();
  dims["mj"] = pd.mj.dim();
  dims["gj"] = pd.gj.dim();
  dims["zj"] = pd.zj.dim();
  dims["kj"] = pd.kj.dim();
  dims["bj"] = pd.bj.dim();
  dims["qj"] = pd.qj.dim();
  out["dims"] = std::move(dims);
  json grad = json::object();
  for (const auto& [nu, piece] : pd.gradation) grad[std::to_string(nu)] = piece.dim();
  out["gradation"] = std::move(grad);
  json ka = json::object();
  for (const auto& [label, piece] : pd.kAlpha) ka[label] = piece.dim();
  out["kAlpha"] = std::move(ka);
  return out;
}

json report_to_json(const NilConsReport<Rational>& rep) { return report_to_json_impl(rep); }
json report_to_json(const NilConsReport<QuadExt>& rep) { return report_to_json_impl(rep); }

json action_to_json(const ActionSpec& spec) {
  json out;
  out["schemaVersion"] = 1;
  out["label"] = spec.label;
  out["tag"] = construction_tag_name(spec.tag);
  out["baseOrbitDim"] = spec.baseOrbitDim;
  out["h"] = span_to_json(spec.h);
  json samples = json::array();
  for (const auto& [desc, dim] : spec.sampledOrbitDims)
    samples.push_back(json{{"point", desc}, {"dim", dim}});
  out["sampledOrbitDims"] = std::move(samples);
  return out;
}

}  // namespace rank2
