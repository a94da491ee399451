#include "svir/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>

#include <nlohmann/json.hpp>

#include "svir/annihilator.hpp"
#include "svir/errors.hpp"
#include "svir/expr.hpp"
#include "svir/reproductions.hpp"
#include "svir/two_local.hpp"

namespace svir::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSeedVariable = "SVIR_SEED";

// Defaults from an optional JSON config file; the seed may also come from
// the environment. Explicit flags win over both.
struct Settings {
  Family algebra = Family::SVir0;
  std::int64_t bound = 3;
  std::uint64_t seed = 42;
};

Settings load_settings(const std::string& config_path) {
  Settings s;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config file '" + config_path + "'");
    const nlohmann::json cfg = nlohmann::json::parse(in);
    if (cfg.contains("algebra")) s.algebra = parse_family(cfg.at("algebra").get<std::string>());
    if (cfg.contains("bound")) s.bound = cfg.at("bound").get<std::int64_t>();
    if (cfg.contains("seed")) s.seed = cfg.at("seed").get<std::uint64_t>();
  }
  if (const char* env = std::getenv(kSeedVariable)) {
    try {
      s.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(kSeedVariable) + " is not an unsigned integer");
    }
  }
  return s;
}

std::string describe(const SuperDerivation& d) {
  std::string s;
  if (!d.inner().is_zero()) s = "ad(" + format_element(d.inner()) + ")";
  const Rational& lambda = d.outer_lambda();
  if (!lambda.is_zero()) {
    if (!s.empty()) s += lambda.sign() < 0 ? " - " : " + ";
    else if (lambda.sign() < 0) s += "-";
    const Rational mag = lambda.sign() < 0 ? -lambda : lambda;
    if (mag != Rational(1)) s += mag.str() + "*";
    s += "D";
  }
  return s.empty() ? "0" : s;
}

TwoLocalOracle build_oracle(const std::string& spec, Family f, std::int64_t mask, std::uint64_t seed) {
  constexpr std::string_view kHonest = "honest:";
  if (spec.rfind(kHonest, 0) == 0) {
    const SuperDerivation d = parse_derivation(std::string_view(spec).substr(kHonest.size()), f);
    return make_honest_oracle(d, GradedWindow(Rational(mask)), seed);
  }
  return make_adversarial_oracle(parse_adversary(spec), f);
}

void report_error(std::ostream& err, bool as_json, std::string_view kind, const std::string& message) {
  if (as_json)
    err << json{{"error", kind}, {"message", message}}.dump() << "\n";
  else
    err << "error[" << kind << "]: " << message << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in super Virasoro and super W(2,2) algebras", "svir"};
  app.require_subcommand(1);

  std::string algebra_flag;
  std::string config_path;
  bool as_json = false;
  app.add_option("--algebra", algebra_flag, "vir | svir0 | svir12 | sw22");
  app.add_option("--config", config_path, "JSON file with default algebra, bound and seed");
  app.add_flag("--json", as_json, "Emit JSON");

  std::string a_src, b_src, d_src, x_src, y_src, oracle_spec, lemma_name;
  std::int64_t bound = 0, mask = 4;
  std::size_t random = 20;
  std::uint64_t seed = 0;

  auto* bracket_cmd = app.add_subcommand("bracket", "Print [A, B]");
  bracket_cmd->add_option("A", a_src)->required();
  bracket_cmd->add_option("B", b_src)->required();

  auto* jacobi_cmd = app.add_subcommand("jacobi", "Sweep anti-symmetry and the graded Jacobi identity");
  auto* jacobi_bound = jacobi_cmd->add_option("--bound", bound, "Index bound");

  auto* defect_cmd = app.add_subcommand("defect", "Leibniz defect of derivation D on (X, Y)");
  defect_cmd->add_option("D", d_src)->required();
  defect_cmd->add_option("X", x_src)->required();
  defect_cmd->add_option("Y", y_src)->required();

  auto* annihilate_cmd = app.add_subcommand("annihilate", "Derivations in the window killing X");
  annihilate_cmd->add_option("X", x_src)->required();
  auto* annihilate_bound = annihilate_cmd->add_option("--bound", bound, "Window bound");

  auto* globalize_cmd = app.add_subcommand("globalize", "Globalize a 2-local oracle and print its certificate");
  globalize_cmd
      ->add_option("--oracle", oracle_spec,
                   "honest:<derivation> | coefficient_square | shift_map | pairwise_inconsistent")
      ->required();
  auto* globalize_bound = globalize_cmd->add_option("--bound", bound, "Basis bound of the test set");
  globalize_cmd->add_option("--random", random, "Number of random test elements");
  auto* globalize_seed = globalize_cmd->add_option("--seed", seed, "Seed");
  globalize_cmd->add_option("--mask", mask, "Mask window bound of honest oracles (0 disables)");

  auto* lemma_cmd = app.add_subcommand("lemma", "Run a built-in reproduction");
  lemma_cmd->add_option("NAME", lemma_name)->required()->check(CLI::IsMember(lemma_names()));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> storage{"svir"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    report_error(err, as_json, "UsageError", e.what());
    return kUsageError;
  }

  try {
    Settings settings = load_settings(config_path);
    const Family f = algebra_flag.empty() ? settings.algebra : parse_family(algebra_flag);
    auto resolved_bound = [&](CLI::Option* opt) { return opt->count() > 0 ? bound : settings.bound; };

    if (bracket_cmd->parsed()) {
      const Element a = parse_element(a_src, f), b = parse_element(b_src, f);
      const std::string result = format_element(bracket(a, b));
      if (as_json)
        out << json{{"algebra", family_name(f)}, {"a", format_element(a)}, {"b", format_element(b)}, {"result", result}}
                   .dump()
            << "\n";
      else
        out << result << "\n";
      return kSuccess;
    }

    if (jacobi_cmd->parsed()) {
      const std::int64_t n = resolved_bound(jacobi_bound);
      const StructureReport r = check_structure(f, Rational(n));
      if (as_json)
        out << json{{"algebra", family_name(f)},
                    {"bound", n},
                    {"pairs", r.pairs},
                    {"triples", r.triples},
                    {"antisymmetry_violations", r.antisymmetry_violations},
                    {"jacobi_violations", r.jacobi_violations},
                    {"violations", r.violations()}}
                   .dump()
            << "\n";
      else
        out << r.violations() << " violations / " << r.triples << " triples\n";
      return r.violations() == 0 ? kSuccess : kMathFailure;
    }

    if (defect_cmd->parsed()) {
      const SuperDerivation d = parse_derivation(d_src, f);
      const Element x = parse_element(x_src, f), y = parse_element(y_src, f);
      const Element defect = leibniz_defect(d, x, y);
      if (as_json)
        out << json{{"algebra", family_name(f)},
                    {"derivation", format_derivation(d)},
                    {"x", format_element(x)},
                    {"y", format_element(y)},
                    {"defect", format_element(defect)}}
                   .dump()
            << "\n";
      else
        out << format_element(defect) << "\n";
      return defect.is_zero() ? kSuccess : kMathFailure;
    }

    if (annihilate_cmd->parsed()) {
      const Element x = parse_element(x_src, f);
      const std::int64_t n = resolved_bound(annihilate_bound);
      const DerivationSpace s = annihilator_basis(x, GradedWindow(Rational(n)));
      if (as_json) {
        json basis = json::array();
        for (const auto& d : s.basis) basis.push_back(format_derivation(d));
        out << json{{"algebra", family_name(f)},
                    {"target", format_element(x)},
                    {"bound", n},
                    {"dimension", s.dimension()},
                    {"basis", basis}}
                   .dump()
            << "\n";
      } else {
        out << "dimension " << s.dimension() << "\n";
        for (const auto& d : s.basis) out << describe(d) << "\n";
      }
      return kSuccess;
    }

    if (globalize_cmd->parsed()) {
      const std::uint64_t s = globalize_seed->count() > 0 ? seed : settings.seed;
      const TwoLocalOracle oracle = build_oracle(oracle_spec, f, mask, s);
      const TestSet tests{GradedWindow(Rational(resolved_bound(globalize_bound))), random, s};
      const Certificate cert = globalize(oracle, tests);
      out << (as_json ? to_json(cert).dump() : to_json(cert).dump(2)) << "\n";
      return cert.pass ? kSuccess : kMathFailure;
    }

    if (lemma_cmd->parsed()) {
      const LemmaReport r = run_lemma(lemma_name, f);
      if (as_json) {
        out << r.to_json().dump() << "\n";
      } else {
        out << r.name << ": " << (r.pass ? "pass" : "fail") << "\n";
        for (const auto& c : r.cases) out << "  " << c.dump() << "\n";
      }
      return r.pass ? kSuccess : kMathFailure;
    }
  } catch (const SyntaxError& e) {
    report_error(err, as_json, "SyntaxError", e.what());
    return kUsageError;
  } catch (const KindNotInFamily& e) {
    report_error(err, as_json, "KindNotInFamily", e.what());
    return kUsageError;
  } catch (const IndexNotInSector& e) {
    report_error(err, as_json, "IndexNotInSector", e.what());
    return kUsageError;
  } catch (const ZeroTarget& e) {
    report_error(err, as_json, "ZeroTarget", e.what());
    return kUsageError;
  } catch (const UnsupportedFamily& e) {
    report_error(err, as_json, "UnsupportedFamily", e.what());
    return kUsageError;
  } catch (const OracleDefect& e) {
    report_error(err, as_json, "OracleDefect", e.what());
    return kMathFailure;
  } catch (const nlohmann::json::exception& e) {
    report_error(err, as_json, "ConfigError", e.what());
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    report_error(err, as_json, "UsageError", e.what());
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace svir::cli
