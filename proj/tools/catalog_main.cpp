// SPDX-License-Identifier: Apache-2.0
//
// catalog: query the shipped reduction catalog.
//
//   catalog derive "RT_{1,2} <=W RT_{2,2}"
//   catalog check
//   catalog dot fig1 > fig1.dot

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ramsey/catalog.hpp"

int main(int argc, char** argv) {
  CLI::App app{"degree catalog: derivations, consistency, diagram export"};
  app.require_subcommand(1);

  std::string data_path;
  app.add_option("--data", data_path,
                 "catalog JSON file (default: shipped data)");

  std::string query;
  CLI::App* derive = app.add_subcommand(
      "derive", "derive a relation, e.g. \"RT_{1,2} <=W RT_{2,2}\"");
  derive->add_option("query", query, "query string")->required();

  CLI::App* check = app.add_subcommand(
      "check", "check recorded separations against derivable positives");

  std::string figure;
  CLI::App* dot = app.add_subcommand("dot", "emit a figure as DOT");
  dot->add_option("figure", figure, "figure id: fig1, fig2, fig4, fig5")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const ramsey::Catalog cat = data_path.empty()
                                    ? ramsey::Catalog::load_default()
                                    : ramsey::Catalog::load(data_path);
    const ramsey::CatalogEngine engine{cat};

    if (derive->parsed()) {
      const ramsey::DeriveResult r = engine.derive_query(query);
      switch (r.status) {
        case ramsey::DeriveStatus::Derivable:
          std::cout << "derivable\n";
          break;
        case ramsey::DeriveStatus::ContradictsSeparation:
          std::cout << "contradicts a recorded separation\n";
          break;
        case ramsey::DeriveStatus::Unknown:
          std::cout << "unknown\n";
          break;
      }
      if (!r.trace.empty()) std::cout << r.text() << "\n";
      return r.status == ramsey::DeriveStatus::Derivable ? 0 : 2;
    }
    if (check->parsed()) {
      const auto lint = engine.lint();
      for (const std::string& msg : lint) std::cout << "lint: " << msg << "\n";
      const auto conflicts = engine.check_consistency();
      for (const std::string& msg : conflicts) std::cout << msg << "\n";
      if (lint.empty() && conflicts.empty()) {
        std::cout << "catalog is consistent (" << cat.edges.size()
                  << " edges)\n";
        return 0;
      }
      return 2;
    }
    std::cout << engine.emit_dot(figure);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
