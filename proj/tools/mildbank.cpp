#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "mildbank/demos.hpp"
#include "mildbank/report.hpp"
#include "mildbank/verify.hpp"

namespace {

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mildbank: numerical harmonic-analysis identity checker"};
  app.require_subcommand(1);

  mildbank::RunConfig cfg;
  double window = 0.0;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--h", cfg.h, "grid spacing (1/(2h) must be an integer)");
    cmd->add_option("--n", cfg.n, "grid count (power of two)");
    cmd->add_option("--window", window,
                    "window half-width; must equal n*h/2 when given");
    cmd->add_option("--tol", cfg.tol_scale, "tolerance scale factor");
    cmd->add_option("--seed", cfg.seed, "corpus seed");
    cmd->add_option("--out", cfg.out_path, "output file (verify) or directory (demo)");
    cmd->add_option("--format", cfg.format, "report format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  std::string suite, demo;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  add_common(verify);
  CLI::App* demo_cmd = app.add_subcommand("demo", "write a demo data set");
  demo_cmd->add_option("name", demo, "demo name")->required();
  add_common(demo_cmd);

  CLI11_PARSE(app, argc, argv);

  if (const char* env = std::getenv("MILDBANK_OUT"); env && *env)
    cfg.out_path = env;

  try {
    if (window != 0.0 && std::abs(window - cfg.n * cfg.h / 2) > 1e-12) {
      std::cerr << "error: --window must equal n*h/2\n";
      return 2;
    }
    if (verify->parsed()) {
      mildbank::Report rep = mildbank::run_verify(suite, cfg);
      rep.timestamp = iso_timestamp();
      std::string text = cfg.format == "csv" ? report_csv(rep)
                                             : report_json(rep, true);
      if (!cfg.out_path.empty())
        mildbank::write_text_file(cfg.out_path, text);
      else
        std::cout << text;
      for (const mildbank::CheckResult& c : rep.checks) {
        std::cerr << (c.pass ? "[pass] " : "[FAIL] ") << c.name
                  << " residual=" << mildbank::format_sig17(c.residual)
                  << " tol=" << mildbank::format_sig17(c.tolerance) << "\n";
      }
      return rep.pass() ? 0 : 1;
    }
    for (const std::string& path : mildbank::run_demo(demo, cfg))
      std::cout << path << "\n";
    return 0;
  } catch (const mildbank::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mildbank::UnknownDemo& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mildbank::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
