#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "rank2/specparse.hpp"
#include "rank2/verify.hpp"

namespace {

using namespace rank2;

struct CommonOpts {
  std::string preset = "g2c-g2";
  int n = 1;
  std::string format = "text";
};

Preset parse_preset(const std::string& name) {
  if (name == "g2c-g2") return Preset::G2C_G2;
  if (name == "sl3c-su3") return Preset::SL3C_SU3;
  if (name == "so-2-np2") return Preset::SO_2_NP2;
  throw CLI::ValidationError("--preset", "unknown preset: " + name);
}

unsigned env_thread_limit() {
  const char* raw = std::getenv("NILCONS_THREADS");
  if (raw == nullptr) return 1;
  try {
    const long v = std::stol(raw);
    if (v < 1) return 1;
    return static_cast<unsigned>(std::min<long>(v, 64));
  } catch (const std::exception&) {
    return 1;
  }
}

int run_decompose(const CommonOpts& common, std::size_t j) {
  const SymmetricSpace ss = build_space(parse_preset(common.preset), common.n);
  ParabolicDecomposition pd;
  try {
    pd = parabolic_decomposition(ss, j);
  } catch (const InvariantError& err) {
    std::cerr << "invariant failure: " << err.what() << "\n";
    return 2;
  }
  const nlohmann::json doc = decomposition_to_json(ss, pd);
  if (common.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "parabolic decomposition of " << ss.model.id << " at j = " << j << "\n";
    for (const auto& [key, value] : doc.at("dims").items())
      std::cout << "  dim " << key << " = " << value << "\n";
    std::cout << "  gradation levels:";
    for (const auto& [nu, dim] : doc.at("gradation").items())
      std::cout << " " << nu << ":" << dim;
    std::cout << "\n";
  }
  return 0;
}

int run_nilcheck(const CommonOpts& common, std::size_t j, const std::string& vspec,
                 std::size_t samples, std::uint64_t seed) {
  const SymmetricSpace ss = build_space(parse_preset(common.preset), common.n);
  const ParabolicDecomposition pd = parabolic_decomposition(ss, j);
  const ParsedSubspace v = parse_subspace_spec(ss, pd, vspec);
  nlohmann::json doc;
  bool anyNot = false, anyUnknown = false;
  if (v.isRational) {
    const auto rep = nilpotent_construction_check(ss, pd, v.rational, samples, seed);
    doc = report_to_json(rep);
    anyNot = rep.conditionI.value == Verdict::NotTransitive ||
             rep.conditionII.value == Verdict::NotTransitive;
    anyUnknown = rep.conditionI.value == Verdict::Unknown ||
                 rep.conditionII.value == Verdict::Unknown;
  } else {
    const auto rep = nilpotent_construction_check(ss, pd, v.quad, samples, seed);
    doc = report_to_json(rep);
    anyNot = rep.conditionI.value == Verdict::NotTransitive ||
             rep.conditionII.value == Verdict::NotTransitive;
    anyUnknown = rep.conditionI.value == Verdict::Unknown ||
                 rep.conditionII.value == Verdict::Unknown;
  }
  if (common.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "nilpotent construction check, " << ss.model.id << ", j = " << j << ", v = "
              << vspec << "\n";
    std::cout << "  condition (i):  " << doc.at("conditionI").at("value").get<std::string>()
              << " [" << doc.at("conditionI").at("evidence").get<std::string>() << "]\n";
    std::cout << "  condition (ii): " << doc.at("conditionII").at("value").get<std::string>()
              << " [" << doc.at("conditionII").at("evidence").get<std::string>() << "]\n";
    std::cout << "  singular orbit dimension: " << doc.at("singularOrbitDim") << "\n";
    const std::string hint = doc.at("hint").get<std::string>();
    if (!hint.empty()) std::cout << "  hint: " << hint << "\n";
  }
  if (anyNot) return 3;
  if (anyUnknown) return 4;
  return 0;
}

int run_verify(const CommonOpts& common, bool filtered, std::size_t samples,
               std::uint64_t seed) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.samples = samples;
  opts.threads = env_thread_limit();
  if (filtered) {
    opts.onlyPreset = parse_preset(common.preset);
    opts.onlyN = common.n;
  }
  std::vector<CriterionResult> results = run_criteria(opts);
  results.push_back(determinism_criterion(opts, results));
  if (common.format == "json") {
    std::cout << suite_to_json(results, opts).dump(2) << "\n";
  } else {
    std::cout << suite_to_text(results);
  }
  return suite_passes(results) ? 0 : 1;
}

int run_dump_model(const CommonOpts& common) {
  const LieAlgebraModel model = build_model(parse_preset(common.preset), common.n);
  std::cout << model_to_json(model).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with cohomogeneity one actions on rank-two noncompact "
               "symmetric spaces"};
  app.require_subcommand(1);

  CommonOpts common;
  std::size_t j = 1;
  std::string vspec = "full";
  std::size_t samples = 32;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd, bool withJ) {
    cmd->add_option("--preset", common.preset, "g2c-g2 | sl3c-su3 | so-2-np2");
    cmd->add_option("--n", common.n, "parameter n for so-2-np2")->check(CLI::PositiveNumber);
    cmd->add_option("--format", common.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    if (withJ) cmd->add_option("--j", j, "simple root index (1 or 2)");
  };

  CLI::App* decompose = app.add_subcommand("decompose", "print a parabolic decomposition");
  add_common(decompose, true);

  CLI::App* nilcheck = app.add_subcommand("nilcheck", "run the nilpotent construction check");
  add_common(nilcheck, true);
  nilcheck->add_option("--v", vspec, "full | root:<label> | kahler:<p/q> | rows:[...]");
  nilcheck->add_option("--samples", samples, "seeded sphere probes (default 32)");
  nilcheck->add_option("--seed", seed, "PRNG seed (default 0)");

  CLI::App* verify = app.add_subcommand("verify-paper", "run the verification suite");
  add_common(verify, false);
  verify->add_option("--samples", samples, "seeded sphere probes (default 32)");
  verify->add_option("--seed", seed, "PRNG seed (default 0)");

  CLI::App* dump = app.add_subcommand("dump-model", "emit the model as a JSON document");
  add_common(dump, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (decompose->parsed()) return run_decompose(common, j);
    if (nilcheck->parsed()) return run_nilcheck(common, j, vspec, samples, seed);
    if (verify->parsed())
      return run_verify(common, verify->count("--preset") > 0, samples, seed);
    if (dump->parsed()) return run_dump_model(common);
  } catch (const InvariantError& err) {
    std::cerr << "invariant failure: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
