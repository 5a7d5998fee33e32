#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "derham/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"derham: exact polynomial de Rham cohomology of finite simplicial complexes"};
  app.require_subcommand(1);

  derham::driver::Options opt;
  auto add_common = [&](CLI::App* c) {
    c->add_option("-i,--input", opt.input,
                  "built-in complex name or JSON file (default boundary-triangle)");
    c->add_option("-q,--q-max", opt.q_max, "top cohomological degree (default 2)");
    c->add_option("--d-min", opt.D_min, "first truncation weight (default q_max + 2)");
    c->add_option("-D,--d-max", opt.D_max, "last truncation weight (default 6)");
    c->add_option("-p,--p-max", opt.p_max, "top Cech degree for nerve checks (default 2)");
    c->add_option("-w,--window", opt.window, "stabilization window length (default 2)");
    c->add_option("-s,--seed", opt.seed, "seed for randomized trials (default 0)");
    c->add_option("-o,--out", opt.out, "write the JSON report to this file");
    return c;
  };

  auto* betti = add_common(app.add_subcommand(
      "betti", "truncated Betti numbers with stabilization analysis"));
  betti->add_option("--side", opt.side, "omega | sullivan | simplicial | all (default all)");
  add_common(app.add_subcommand(
      "verify-quasi-iso",
      "certify that evaluation induces an isomorphism on truncated cohomology"));
  auto* lemmas = add_common(app.add_subcommand(
      "verify-lemmas", "randomized and exact checks of the localization lemmas"));
  lemmas->add_option("--trials-annihilation", opt.trials_annihilation,
                     "trials per annihilation configuration (default 100)");
  lemmas->add_option("--trials-extres", opt.trials_extres,
                     "trials per extension-restriction configuration (default 50)");
  add_common(app.add_subcommand(
      "gomez", "worked hidden-zero identities on the triangle boundary"));

  CLI11_PARSE(app, argc, argv);
  opt.command = app.get_subcommands().front()->get_name();

  auto start = std::chrono::steady_clock::now();
  derham::driver::RunResult result;
  try {
    result = derham::driver::run(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  for (const auto& line : result.summary) std::cout << line << "\n";
  std::cout << (result.pass ? "OK" : "FAILED") << " (" << opt.command << " on "
            << result.report["config"]["input"].get<std::string>() << ", "
            << result.report["summary"]["checks"].get<long>() << " checks)\n";
  // Wall-clock goes to stdout only; the report itself is deterministic.
  std::cout << "elapsed: " << elapsed << " s\n";

  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) {
      std::cerr << "error: cannot write " << opt.out << "\n";
      return 2;
    }
    f << result.report.dump(2) << "\n";
  }
  return result.pass ? 0 : 1;
}
