// SPDX-License-Identifier: Apache-2.0
//
// reduce: apply a registered reduction's instance transform K or solution
// transform H, or list the registry.
//
//   reduce list
//   reduce run <name> --in instance.json --out target.json
//   reduce transport <name> --in instance.json --solution solution.json

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ramsey/registry.hpp"

using ramsey::json;

namespace {

json read_json(const std::string& path) {
  if (path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw ramsey::NotFoundError("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

void write_output(const json& j, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw ramsey::InvalidInputError("cannot open output file: " + out_path);
    out << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"apply registered reductions (instance and solution transforms)"};
  app.require_subcommand(1);

  std::string name;
  std::string in_path = "-";
  std::string solution_path;
  std::string out_path;

  CLI::App* list = app.add_subcommand("list", "list the reduction registry");

  CLI::App* run = app.add_subcommand(
      "run", "apply the instance transform K to a source instance");
  run->add_option("name", name, "reduction name (see 'reduce list')")
      ->required();
  run->add_option("--in", in_path, "source instance JSON ('-' for stdin)");
  run->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* transport = app.add_subcommand(
      "transport",
      "apply the solution transform H to a target solution");
  transport->add_option("name", name, "reduction name")->required();
  transport->add_option("--in", in_path,
                        "source instance JSON (used by weak reductions)");
  transport->add_option("--solution", solution_path, "target solution JSON")
      ->required();
  transport->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const ramsey::Reduction& r : ramsey::registry()) {
        std::cout << r.name << ": " << r.source
                  << (r.strength == ramsey::Reduction::Strength::Strong
                          ? " <=_sW "
                          : " <=_W ")
                  << r.target << "  [" << r.anchor << "]  family "
                  << r.family << "\n";
      }
      return 0;
    }
    const ramsey::Reduction& r = ramsey::find_reduction(name);
    if (run->parsed()) {
      write_output(r.K(read_json(in_path)), out_path);
    } else {
      write_output(r.H(read_json(in_path), read_json(solution_path)),
                   out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
