// SPDX-License-Identifier: Apache-2.0
//
// verify: property-based verification of registered reductions.
//
//   verify all --trials 50 --window 16 --seed 1 --report report.json
//   verify prop5.4-coh --trials 20 --window 64

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/verifier.hpp"

int main(int argc, char** argv) {
  CLI::App app{"verify registered reductions on generated instances"};

  std::string name;
  std::uint64_t trials = 50;
  std::uint64_t window = 16;
  std::uint64_t seed = 1;
  std::string report_path;

  app.add_option("name", name, "reduction name, or 'all'")->required();
  app.add_option("--trials", trials, "number of generated instances");
  app.add_option("--window", window, "finite window size");
  app.add_option("--seed", seed, "generator seed");
  app.add_option("--report", report_path, "write a JSON report to this file");

  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> names;
  if (name == "all") {
    for (const ramsey::Reduction& r : ramsey::registry()) {
      names.push_back(r.name);
    }
  } else {
    names.push_back(name);
  }

  ramsey::json report = ramsey::json::array();
  bool all_pass = true;
  try {
    for (const std::string& n : names) {
      const ramsey::TrialReport rep =
          ramsey::verify_reduction(n, trials, window, seed);
      report.push_back(ramsey::to_json(rep));
      const bool ok = rep.pass();
      all_pass = all_pass && ok;
      std::cout << n << ": " << (ok ? "pass" : "FAIL") << " (" << rep.passes
                << " pass, " << rep.failures << " fail, " << rep.inconclusive
                << " inconclusive of " << rep.trials << " trials)\n";
    }
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) {
        std::cerr << "error: cannot open report file: " << report_path << "\n";
        return 1;
      }
      out << report.dump(2) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return all_pass ? 0 : 2;
}
