#include "rank2/specparse.hpp"

#include "json.hpp"

namespace rank2 {

VecQ parse_root_label(const RootSystem& rs, const std::string& label) {
  VecQ out(rs.rank, Rational(0));
  std::size_t pos = 0;
  if (label.empty()) throw std::invalid_argument("empty root label");
  while (pos < label.size()) {
    std::size_t term_end = label.find('+', pos);
    if (term_end == std::string::npos) term_end = label.size();
    const std::string term = label.substr(pos, term_end - pos);
    const std::size_t a = term.find('a');
    if (a == std::string::npos || a + 1 >= term.size())
      throw std::invalid_argument("malformed root label term: " + term);
    long coeff = 1;
    if (a > 0) {
      try {
        coeff = std::stol(term.substr(0, a));
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed coefficient in root label: " + term);
      }
    }
    std::size_t idx = 0;
    try {
      idx = std::stoul(term.substr(a + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed index in root label: " + term);
    }
    if (idx < 1 || idx > rs.rank)
      throw std::invalid_argument("root index out of range in label: " + term);
    out[idx - 1] += coeff;
    pos = term_end + 1;
  }
  if (!rs.is_root(out)) throw std::invalid_argument("label does not name a root: " + label);
  return out;
}

ParsedSubspace parse_subspace_spec(const SymmetricSpace& ss, const ParabolicDecomposition& pd,
                                   const std::string& spec) {
  ParsedSubspace out;
  if (spec == "full") {
    out.rational = pd.levelOne();
    return out;
  }
  if (spec.rfind("root:", 0) == 0) {
    const VecQ alpha = parse_root_label(ss.model.abstractRoots, spec.substr(5));
    out.rational = ss.root(alpha).space;
    return out;
  }
  if (spec.rfind("kahler:", 0) == 0) {
    const Rational q = parse_rational(spec.substr(7));
    const KahlerPlane plane = kahler_family_plane(ss, pd, q);
    out.isRational = plane.isRational;
    out.rational = plane.rationalPlane;
    out.quad = plane.quadPlane;
    return out;
  }
  if (spec.rfind("rows:", 0) == 0) {
    nlohmann::json rows;
    try {
      rows = nlohmann::json::parse(spec.substr(5));
    } catch (const nlohmann::json::exception&) {
      throw std::invalid_argument("rows: payload is not valid JSON");
    }
    if (!rows.is_array() || rows.empty())
      throw std::invalid_argument("rows: payload must be a nonempty array of rows");
    MatQ basis(0, ss.model.dim);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != ss.model.dim)
        throw std::invalid_argument("rows: each row needs exactly dim entries");
      VecQ v(ss.model.dim);
      for (std::size_t i = 0; i < ss.model.dim; ++i) {
        if (row[i].is_number_integer()) {
          v[i] = Rational(row[i].get<long>());
        } else {
          v[i] = parse_rational(row[i].get<std::string>());
        }
      }
      basis.append_row(v);
    }
    out.rational = make_span(ss.model.id, ss.model.dim, std::move(basis));
    return out;
  }
  throw std::invalid_argument("unknown subspace spec: " + spec);
}

}  // namespace rank2
