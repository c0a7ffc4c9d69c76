#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "rank2/json_io.hpp"
#include "rank2/specparse.hpp"
#include "rank2/verify.hpp"

using namespace rank2;

#ifndef RANK2_CLI_PATH
#define RANK2_CLI_PATH "rank2"
#endif

namespace {

struct CommandResult {
  int exitCode = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  CommandResult res;
  const std::string cmd = std::string(RANK2_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("model JSON round trip") {
  for (auto [preset, n] : std::vector<std::pair<Preset, int>>{
           {Preset::G2C_G2, 0}, {Preset::SL3C_SU3, 0}, {Preset::SO_2_NP2, 2}}) {
    const LieAlgebraModel model = build_model(preset, n);
    const nlohmann::json doc = model_to_json(model);
    CHECK(doc.at("schemaVersion") == 1);
    const LieAlgebraModel back = model_from_json(doc);
    CHECK(back.dim == model.dim);
    CHECK(back.basisNames == model.basisNames);
    CHECK(back.theta == model.theta);
    CHECK(model_to_json(back) == doc);
  }
  // corrupted documents are rejected loudly
  nlohmann::json doc = model_to_json(build_model(Preset::SL3C_SU3));
  doc["bracket"][0][3] = "7/3";
  CHECK_THROWS_AS(model_from_json(doc), InvariantError);
  doc = model_to_json(build_model(Preset::SL3C_SU3));
  doc["preset"] = "so-9";
  CHECK_THROWS_AS(model_from_json(doc), std::invalid_argument);
}

TEST_CASE("subspace spec parsing") {
  const SymmetricSpace ss = build_space(Preset::G2C_G2);
  const ParabolicDecomposition pd = parabolic_decomposition(ss, 2);
  CHECK(parse_subspace_spec(ss, pd, "full").rational == pd.levelOne());
  VecQ top(2);
  top[0] = 3;
  top[1] = 1;
  CHECK(parse_subspace_spec(ss, pd, "root:3a1+a2").rational == ss.root(top).space);

  const ParabolicDecomposition pd1 = parabolic_decomposition(ss, 1);
  CHECK_FALSE(parse_subspace_spec(ss, pd1, "kahler:3/4").isRational);
  CHECK(parse_subspace_spec(ss, pd1, "kahler:1").rational.dim() == 2);
  CHECK_THROWS_AS(parse_subspace_spec(ss, pd, "kahler:3/4"), std::invalid_argument);

  // explicit rows
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json r1 = nlohmann::json::array(), r2 = nlohmann::json::array();
  const Subspace& v = ss.root(top).space;
  for (std::size_t i = 0; i < ss.model.dim; ++i) {
    r1.push_back(to_string(v.basis(0, i)));
    r2.push_back(to_string(v.basis(1, i)));
  }
  rows.push_back(r1);
  rows.push_back(r2);
  CHECK(parse_subspace_spec(ss, pd, "rows:" + rows.dump()).rational == v);

  CHECK_THROWS_AS(parse_subspace_spec(ss, pd, "root:5a1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_subspace_spec(ss, pd, "kahler:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_subspace_spec(ss, pd, "rows:nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(parse_subspace_spec(ss, pd, "gibberish"), std::invalid_argument);
}

TEST_CASE("report and action JSON shapes") {
  const SymmetricSpace ss = build_space(Preset::SO_2_NP2, 1);
  const ParabolicDecomposition pd = parabolic_decomposition(ss, 2);
  const auto rep = nilpotent_construction_check(ss, pd, pd.levelOne(), 4, 0);
  const nlohmann::json doc = report_to_json(rep);
  CHECK(doc.at("schemaVersion") == 1);
  CHECK(doc.at("j") == 2);
  CHECK(doc.at("conditionI").contains("evidence"));
  CHECK(doc.at("vlMembership").contains("1"));
  CHECK(doc.at("seed") == 0);

  ActionSpec spec = grassmann_extension_j2(ss, pd);
  sample_orbit_dims(ss, spec, default_nilpotent_probes(ss, 3, 0));
  const nlohmann::json adoc = action_to_json(spec);
  CHECK(adoc.at("tag") == "canonical-extension");
  CHECK(adoc.at("baseOrbitDim") == spec.baseOrbitDim);
  CHECK(adoc.at("sampledOrbitDims").size() == 4);
  CHECK(adoc.at("sampledOrbitDims")[0].at("dim") == spec.baseOrbitDim);
}

TEST_CASE("cli: decompose") {
  const CommandResult ok = run_cli("decompose --preset g2c-g2 --j 2 --format json");
  CHECK(ok.exitCode == 0);
  const nlohmann::json doc = nlohmann::json::parse(ok.output);
  CHECK(doc.at("gradation").at("1") == 8);
  CHECK(doc.at("gradation").at("2") == 2);

  const CommandResult so = run_cli("decompose --preset so-2-np2 --n 1 --j 1 --format json");
  CHECK(so.exitCode == 0);
  CHECK(nlohmann::json::parse(so.output).at("dims").at("nj") == 3);

  CHECK(run_cli("decompose --preset g2c-g2 --j 3").exitCode == 1);
  CHECK(run_cli("decompose --preset bogus").exitCode == 1);
  CHECK(run_cli("decompose --preset so-2-np2 --n 0 --j 1").exitCode == 1);
}

TEST_CASE("cli: nilcheck exit codes") {
  CHECK(run_cli("nilcheck --preset g2c-g2 --j 1 --v full").exitCode == 0);
  CHECK(run_cli("nilcheck --preset g2c-g2 --j 1 --v kahler:1/2").exitCode == 3);
  const CommandResult top = run_cli("nilcheck --preset g2c-g2 --j 2 --v root:3a1+a2 --format json");
  CHECK(top.exitCode == 0);
  const nlohmann::json doc = nlohmann::json::parse(top.output);
  CHECK(doc.at("hint") == "orbit-equivalent to H^Lambda_{1,1}");
  CHECK(doc.at("singularOrbitDim") == 12);
  CHECK(run_cli("nilcheck --preset g2c-g2 --j 1 --v root:nope").exitCode == 1);
  CHECK(run_cli("nilcheck --preset g2c-g2 --j 1 --v rows:[[\"1\"]]").exitCode == 1);
  // a root space that is not inside n^1_j is a precondition failure
  CHECK(run_cli("nilcheck --preset g2c-g2 --j 2 --v root:a1").exitCode == 1);
}

TEST_CASE("cli: filtered verify run") {
  const CommandResult res = run_cli("verify-paper --preset so-2-np2 --n 2 --format json");
  CHECK(res.exitCode == 0);
  const nlohmann::json doc = nlohmann::json::parse(res.output);
  CHECK(doc.at("allPass") == true);
  CHECK(doc.at("presetFilter") == "so-2-np2(2)");
  bool sawInapplicable = false;
  for (const auto& row : doc.at("criteria"))
    if (row.at("applicable") == false) sawInapplicable = true;
  CHECK(sawInapplicable);  // the G2-only criteria are filtered out
}

TEST_CASE("cli: verify-paper json output is byte-identical across runs") {
  const std::string args = "verify-paper --preset sl3c-su3 --seed 0 --format json";
  const CommandResult first = run_cli(args);
  const CommandResult second = run_cli(args);
  CHECK(first.exitCode == 0);
  CHECK(second.exitCode == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("cli: dump-model round trips through the library parser") {
  const CommandResult res = run_cli("dump-model --preset sl3c-su3");
  CHECK(res.exitCode == 0);
  const LieAlgebraModel model = model_from_json(nlohmann::json::parse(res.output));
  CHECK(model.id == "sl3c-su3");
  CHECK(model.dim == 16);
}
