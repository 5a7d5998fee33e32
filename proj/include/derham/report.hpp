#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "derham/corpus.hpp"

namespace derham::driver {

constexpr const char* kEngineVersion = "derham 1.0.0";
constexpr const char* kReportSchema = "derham-report/1";

struct Options {
  std::string command = "betti";  // betti | verify-quasi-iso | verify-lemmas | gomez
  std::string input = "boundary-triangle";
  int q_max = 2;
  int D_min = -1;  // -1 resolves to q_max + 2
  int D_max = 6;
  int p_max = 2;
  int window = 2;
  unsigned long seed = 0;
  long trials_annihilation = 100;
  long trials_extres = 50;
  std::string side = "all";  // omega | sullivan | simplicial | all
  std::string out;           // report file path, empty = no file
};

struct RunResult {
  nlohmann::ordered_json report;
  bool pass = false;
  std::vector<std::string> summary;
};

// Executes one command and builds its deterministic report.  The report
// carries no timings or environment data: identical options yield identical
// bytes.  Throws std::invalid_argument on unusable options.
RunResult run(const Options& opt);

}  // namespace derham::driver
