// SPDX-License-Identifier: Apache-2.0
//
// ramsey: solve and enumerate homogeneous sets of finite-window colorings.
//
//   ramsey solve --in coloring.json --size 4
//   ramsey enumerate --in coloring.json --size 3 --budget 1000000

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ramsey/engine.hpp"

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
  CLI::App app{"homogeneous-set solver for finite-window colorings"};
  app.require_subcommand(1);

  std::string in_path = "-";
  std::string out_path;
  std::uint64_t size = 0;
  std::uint64_t budget = 2'000'000;

  CLI::App* solve = app.add_subcommand(
      "solve", "find the lexicographically first homogeneous set");
  solve->add_option("--in", in_path, "coloring JSON file ('-' for stdin)");
  solve->add_option("--size", size, "requested homogeneous-set size")
      ->required();
  solve->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "enumerate all homogeneous sets of the given size");
  enumerate->add_option("--in", in_path, "coloring JSON file ('-' for stdin)");
  enumerate->add_option("--size", size, "homogeneous-set size")->required();
  enumerate->add_option("--budget", budget, "subset enumeration budget");
  enumerate->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    const ramsey::Coloring c = ramsey::coloring_from_json(read_json(in_path));
    if (solve->parsed()) {
      write_output(ramsey::to_json(ramsey::solve_homogeneous(c, size)),
                   out_path);
    } else {
      json out = json::array();
      for (const ramsey::HomSet& m : ramsey::all_homogeneous(c, size, budget)) {
        out.push_back(ramsey::to_json(m));
      }
      write_output(out, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
