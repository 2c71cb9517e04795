// divatlas: atlases of divisor varieties on symmetric products of curves,
// enclosing dimensions of tensors, and the seeded verification suites.
//
//   divatlas components --genus 37 --degree 36 --k 2 --class n
//   divatlas enc tensor.json --sub 2 --format json
//   divatlas verify --seed 7 [--suite subdim-oracle]
//
// Exit status: 0 success, 1 usage error or invalid parameters, 2 computation
// or validation failure.

#include "divatlas/report.hpp"
#include "divatlas/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

using namespace divatlas;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_failure = 2;

struct ComponentsArgs {
  int genus = 0;
  int degree = 0;
  int k = 2;
  std::string cls = "n";
  std::string format = "text";
  bool compat_sym = false;
  bool compat_secdim = false;
  bool canonical = false;
};

struct EncArgs {
  std::string file;
  std::optional<int> sub;
  std::string format = "text";
};

struct VerifyArgs {
  std::uint64_t seed = 0;
  std::optional<std::string> suite;
};

int run_components(const ComponentsArgs& a)
{
  AtlasParams p;
  p.g = a.genus;
  p.d = a.degree;
  p.k = a.k;
  p.kind = parse_class_name(a.cls);
  p.compat_paper_sym = a.compat_sym;
  p.compat_paper_secdim = a.compat_secdim;
  p.canonical = a.canonical;

  AtlasReport report;
  try {
    report = build_atlas_report(p);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_usage;
  }
  if (a.format == "json")
    std::cout << to_json(report).dump(2) << "\n";
  else
    std::cout << render_text(report);
  return exit_ok;
}

int run_enc(const EncArgs& a)
{
  std::ifstream in(a.file);
  if (!in) {
    std::cerr << "error: cannot open '" << a.file << "'\n";
    return exit_usage;
  }
  Tensor t = [&] {
    try {
      return tensor_from_json(Json::parse(in));
    } catch (const std::exception& ex) {
      throw std::runtime_error(std::string("invalid tensor file: ") + ex.what());
    }
  }();
  EncReport report = build_enc_report(t, a.sub);
  if (a.format == "json")
    std::cout << to_json(report).dump(2) << "\n";
  else
    std::cout << render_text(report);
  return exit_ok;
}

int run_verify(const VerifyArgs& a)
{
  if (a.suite) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), *a.suite) == names.end()) {
      std::cerr << "error: unknown suite '" << *a.suite << "'\n";
      return exit_usage;
    }
  }
  bool all = true;
  for (const auto& r : run_suites(a.seed, a.suite)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    all = all && r.passed;
  }
  return all ? exit_ok : exit_failure;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Divisor-variety atlases and tensor enclosing dimensions"};
  app.require_subcommand(1);

  ComponentsArgs ca;
  auto* components = app.add_subcommand("components", "Component and intersection atlas of a divisor variety");
  components->add_option("--genus", ca.genus, "Genus g of the curve")->required()->check(CLI::Range(2, 1000));
  components->add_option("--degree", ca.degree, "Degree d of the line bundle")->required()->check(CLI::Range(1, 100000));
  components->add_option("--k", ca.k, "Symmetric product C_k")->check(CLI::Range(2, 1000));
  components->add_option("--class", ca.cls, "n (determinant bundle) or t (symmetrized bundle)")
    ->check(CLI::IsMember({"n", "t"}));
  components->add_option("--format", ca.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  components->add_flag("--compat-paper-sym", ca.compat_sym, "Use the printed parity rule for class t, k = 2");
  components->add_flag("--compat-paper-secdim", ca.compat_secdim, "Report k = 2 fibers with the printed secant formulas");
  components->add_flag("--canonical", ca.canonical, "Add the canonical-class analysis (d = 2g - 2)");

  EncArgs ea;
  auto* encc = app.add_subcommand("enc", "Enclosing dimension of a tensor read from a JSON file");
  encc->add_option("file", ea.file, "Tensor JSON file")->required();
  encc->add_option("--sub", ea.sub, "Report membership in Sub_e")->check(CLI::NonNegativeNumber);
  encc->add_option("--format", ea.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the seeded verification suites");
  verify->add_option("--seed", va.seed, "Base seed");
  verify->add_option("--suite", va.suite, "Run only this suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (components->parsed()) return run_components(ca);
    if (encc->parsed()) return run_enc(ea);
    if (verify->parsed()) return run_verify(va);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}
