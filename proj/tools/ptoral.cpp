// Command-line front end for the check suite.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ptoral/suite.hpp"

int main(int argc, char** argv) {
  using namespace ptoral;
  CLI::App app{"Builds S_k and its exotic fusion systems and verifies their properties by exact computation."};
  RunConfig cfg;
  std::string flavor = "F_p3";
  std::string out_path;
  std::vector<std::string> checks;

  app.add_option("--p", cfg.p, "odd prime")->envname("PTORAL_P")->capture_default_str();
  app.add_option("--k", cfg.k, "truncation level, at least 2")->envname("PTORAL_K")->capture_default_str();
  app.add_option("--flavor", flavor, "F_p3, F or Ftilde")->envname("PTORAL_FLAVOR")->capture_default_str();
  app.add_option("--check", checks, "check name or 'all'; repeatable")->envname("PTORAL_CHECK");
  app.add_option("--format", cfg.format, "text or json")->envname("PTORAL_FORMAT")->capture_default_str();
  app.add_option("--cap-enum", cfg.caps.enumeration, "largest group enumerated element by element")
      ->envname("PTORAL_CAP_ENUM")
      ->capture_default_str();
  app.add_option("--cap-orbit", cfg.caps.orbit, "largest single F-class or orbit")
      ->envname("PTORAL_CAP_ORBIT")
      ->capture_default_str();
  app.add_option("--cap-closure", cfg.caps.closure, "largest subgroup closure")
      ->envname("PTORAL_CAP_CLOSURE")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sampled checks")->envname("PTORAL_SEED")->capture_default_str();
  app.add_option("--out", out_path, "write the report here instead of stdout")->envname("PTORAL_OUT");
  app.add_flag("--omit-timing", cfg.omit_timing, "zero all timings, for byte-identical reports")
      ->envname("PTORAL_OMIT_TIMING");
  app.add_flag_callback(
      "--list-checks",
      [] {
        for (const auto& n : check_names()) std::cout << n << '\n';
        std::exit(0);
      },
      "print the check names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const auto f = flavor_from_string(flavor);
    if (!f) throw InvalidArgument("unknown flavor: " + flavor);
    cfg.flavor = *f;
    if (!checks.empty()) cfg.checks = checks;
    validate_config(cfg);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 1;
  }

  const SuiteReport report = run_suite(cfg);
  if (out_path.empty()) {
    emit_report(report, cfg.format, std::cout);
  } else {
    std::ofstream os(out_path);
    if (!os) {
      std::cerr << "cannot open " << out_path << '\n';
      return 1;
    }
    emit_report(report, cfg.format, os);
  }
  return exit_code(report);
}
