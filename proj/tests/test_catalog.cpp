// SPDX-License-Identifier: Apache-2.0
//
// Tests for the catalog data, the inference engine, consistency checking and
// the DOT export.

#include <catch2/catch_amalgamated.hpp>

#include "ramsey/catalog.hpp"

using namespace ramsey;

namespace {

const CatalogEngine& engine() {
  static CatalogEngine e(Catalog::load_default());
  return e;
}

bool trace_mentions(const DeriveResult& r, const std::string& needle) {
  return r.text().find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("canonical degree strings", "[catalog]") {
  CHECK(canonical_degree("  RT_{2,2} ") == "RT_{2,2}");
  CHECK(canonical_degree("SRT_{2,2}  *   COH") == "SRT_{2,2} * COH");
  CHECK(canonical_degree("par(par(RT_{1,2}))") == "par(RT_{1,2})");
  CHECK(atomic_degree("RT_{2,2}"));
  CHECK(atomic_degree("WKL''"));
  CHECK_FALSE(atomic_degree("SRT_{2,2} * COH"));
  CHECK_FALSE(atomic_degree("par(RT_{1,2})"));
  CHECK_THROWS_AS(canonical_degree("   "), InvalidInputError);
}

TEST_CASE("shipped catalog passes lint and is consistent", "[catalog]") {
  CHECK(engine().lint().empty());
  const auto conflicts = engine().check_consistency();
  for (const auto& c : conflicts) INFO(c);
  CHECK(conflicts.empty());
  // The empty catalog is trivially consistent as well.
  CatalogEngine empty{Catalog{}};
  CHECK(empty.check_consistency().empty());
}

TEST_CASE("derive handles the canonical example queries", "[catalog]") {
  // Chain through the recorded ladder between sizes.
  const auto chain = engine().derive_query("RT_{1,2} <=W RT_{2,2}");
  CHECK(chain.status == DeriveStatus::Derivable);
  CHECK(trace_mentions(chain, "Lemma 4.7"));

  // Reflexivity.
  const auto refl = engine().derive_query("RT_{2,2} <=W RT_{2,2}");
  CHECK(refl.status == DeriveStatus::Derivable);
  CHECK(trace_mentions(refl, "reflexivity"));

  // Blocked by a recorded separation.
  const auto blocked = engine().derive_query("lim <=W RT_{2,N}");
  CHECK(blocked.status == DeriveStatus::ContradictsSeparation);
  CHECK(trace_mentions(blocked, "Corollary 3.16"));
}

TEST_CASE("derive reproduces recorded positive relations", "[catalog]") {
  const std::vector<std::pair<std::string, std::string>> positives = {
      {"SRT_{2,2} <=sW RT_{2,2}", "Lemma 3.5"},
      {"SRT_{2,2} ==W CSRT_{2,2}", "Corollary 3.9"},
      {"lim_2 ==W SRT_{1,2}", "Proposition 3.3"},
      {"BWT_2' ==sW C_2''", "Theorem 3.2"},
      {"RT_{2,2} <=sW RT_{2,3}", "Corollary 3.10"},
      {"BWT_2' <=sW CSRT_{2,2}", "Corollary 3.11"},
      {"RT_{1,N} x RT_{2,2} <=sW RT_{2,3}", "Theorem 3.18"},
      {"RT_{2,2} x RT_{2,2} <=sW RT_{2,4}", "Corollary 3.19"},
      {"RT_{2,N} <=sW RT_{3,2}", "Corollary 3.20"},
      {"par(RT_{1,2}) <=sW RT_{3,2}", "Theorem 3.21"},
      {"WKL' <=W RT_{3,2}", "Corollary 3.22"},
      {"BWT_N <=W RT_{2,2}", "Corollary 3.23"},
      {"lim_N <=W SRT_{2,2}", "Corollary 3.24"},
      {"CRT_{1,2}' <=sW CSRT_{2,2}", "Proposition 4.1"},
      {"RT_{1,2}' <=W SRT_{2,2}", "Corollary 4.2"},
      {"CRT_{1,2}' ==W SRT_{2,2}", "Theorem 4.3"},
      {"SRT_{2,N} <=sW RT_{2,2}'", "Corollary 4.5"},
      {"WKL' ==W lim * COH", "Fact 4.6"},
      {"lim <=W RT_{2,2}'", "Corollary 4.8"},
      {"SRT_{2,2} <=W RT_{1,2} * lim", "Corollary 4.9"},
      {"RT_{2,2} <=W SRT_{2,2} * COH", "Proposition 4.14"},
      {"RT_{2,2} <=W RT_{1,2} * WKL'", "Corollary 4.15"},
      {"RT_{2,2} <=sW WKL''", "Corollary 4.16"},
      {"par(RT_{2,2}) ==W WKL''", "Corollary 4.17"},
      {"RT_{2,2} <W RT_{3,2}", "Corollary 4.19"},
      {"COH <=sW RT_{2,2}", "Proposition 5.4"},
      {"KL ==sW WKL'", "Theorem 5.6"},
      {"SRT_{2,2} u COH <=W RT_{2,2}", "Corollary 5.7"},
      {"IVT <=W C_N'", "Proposition 5.9"},
      {"KL <=W RT_{3,2}", "Corollary 5.13"},
      {"DNC_N <=sW RT_{1,2}'", "Corollary 5.16"},
      {"C_N ==sW min", "Proposition 7.1"},
      {"K_N <sW C_N", "Corollary 7.2"},
      {"C_2 <=W SRT_{1,2}", "Corollary 7.3"},
      {"K_N' ==W RT_{1,N}", "Corollary 7.5"},
      {"K_N'' <=W SRT_{2,N}", "Theorem 7.6"},
      {"C_N ==W SRT_{1,N}", "Corollary 7.8"},
  };
  CHECK(positives.size() >= 20);
  for (const auto& [query, anchor] : positives) {
    const auto r = engine().derive_query(query);
    INFO(query << "\n" << r.text());
    CHECK(r.status == DeriveStatus::Derivable);
    CHECK(trace_mentions(r, anchor));
  }
}

TEST_CASE("derive blocks queries across recorded separations", "[catalog]") {
  const std::vector<std::pair<std::string, std::string>> blocked = {
      {"lim <=W RT_{2,N}", "Corollary 3.16"},
      {"RT_{2,2} <=W lim'", "Corollary 4.18"},
      {"RT_{2,2} <=W SRT_{2,2}", "Corollary 5.2"},
      {"WKL <=W RT_{2,2}", "Corollary 5.15"},
      {"KL <=W RT_{2,N}", "Corollary 5.14"},
      {"BWT_3 <=W SRT_{2,2}", "Corollary 6.6"},
      {"COH <=W SRT_{2,2}", "Corollary 5.12"},
  };
  CHECK(blocked.size() >= 5);
  for (const auto& [query, anchor] : blocked) {
    const auto r = engine().derive_query(query);
    INFO(query << "\n" << r.text());
    CHECK(r.status == DeriveStatus::ContradictsSeparation);
    CHECK(trace_mentions(r, anchor));
  }
  // A W-level separation also blocks the corresponding strong query.
  const auto strong = engine().derive_query("lim <=sW RT_{2,N}");
  CHECK(strong.status == DeriveStatus::ContradictsSeparation);
}

TEST_CASE("closure rules fire", "[catalog]") {
  // Jump monotonicity on a recorded strong reduction.
  const auto jmp = engine().derive_query("SRT_{2,2}' <=sW RT_{2,2}'");
  CHECK(jmp.status == DeriveStatus::Derivable);
  CHECK(trace_mentions(jmp, "jumps are monotone"));

  // Parallelization monotone + extensive + the recorded equivalence
  // par(RT_{2,2}) ==W WKL''.
  const auto par = engine().derive_query("COH <=W par(RT_{2,2})");
  CHECK(par.status == DeriveStatus::Derivable);
  CHECK(trace_mentions(par, "parallelization"));
  const auto wkl = engine().derive_query("COH <=W WKL''");
  CHECK(wkl.status == DeriveStatus::Derivable);

  // Cylinder rule: a weak reduction into a recorded cylinder is strong.
  const auto cyl = engine().derive_query("CSRT_{2,2} <=sW par(CSRT_{2,2})");
  CHECK(cyl.status == DeriveStatus::Derivable);
  CHECK(trace_mentions(cyl, "cylinder"));
  CHECK(trace_mentions(cyl, "Corollary 3.12"));
}

TEST_CASE("open questions stay unknown", "[catalog]") {
  const auto open = engine().derive_query("CL_R <=W RT_{3,2}");
  CHECK(open.status == DeriveStatus::Unknown);
  CHECK(trace_mentions(open, "Question 7.9"));
  const auto open2 = engine().derive_query("C_N' <=W RT_{2,2}");
  CHECK(open2.status == DeriveStatus::Unknown);
  CHECK(trace_mentions(open2, "Question 7.7"));
}

TEST_CASE("unrecognized degrees and malformed queries error", "[catalog]") {
  CHECK_THROWS_AS(engine().derive_query("FOO <=W RT_{2,2}"), NotFoundError);
  CHECK_THROWS_AS(engine().derive_query("RT_{2,2} RT_{2,2}"),
                  InvalidInputError);
  CHECK_THROWS_AS(engine().derive("RT_{2,2}", "RT_{2,2}", CatRelation::Open),
                  InvalidInputError);
}

TEST_CASE("injected contradiction is reported with its anchor", "[catalog]") {
  Catalog cat = Catalog::load_default();
  cat.edges.push_back(
      CatalogEdge{"RT_{2,2}", "lim'", CatRelation::LeqW, "injected"});
  CatalogEngine bad{cat};
  const auto conflicts = bad.check_consistency();
  REQUIRE_FALSE(conflicts.empty());
  bool cites = false;
  for (const auto& c : conflicts) {
    if (c.find("Corollary 4.18") != std::string::npos) cites = true;
  }
  CHECK(cites);
}

TEST_CASE("derive is monotone in the catalog", "[catalog]") {
  // Adding an edge never turns Derivable into Unknown.
  Catalog cat = Catalog::load_default();
  cat.edges.push_back(
      CatalogEdge{"WKL", "KL", CatRelation::LeqW, "extra edge for the test"});
  CatalogEngine bigger{cat};
  const std::vector<std::string> queries = {
      "RT_{1,2} <=W RT_{2,2}",  "SRT_{2,2} <=sW RT_{2,2}",
      "COH <=W WKL''",          "KL <=W RT_{3,2}",
      "C_N ==sW min",           "CRT_{1,2}' ==W SRT_{2,2}",
  };
  for (const auto& q : queries) {
    REQUIRE(engine().derive_query(q).status == DeriveStatus::Derivable);
    CHECK(bigger.derive_query(q).status == DeriveStatus::Derivable);
  }
  // The new edge opens new derivations.
  CHECK(bigger.derive_query("WKL <=W RT_{3,2}").status ==
        DeriveStatus::Derivable);
}

TEST_CASE("lint flags anchorless edges", "[catalog]") {
  Catalog cat = Catalog::load_default();
  cat.edges.push_back(CatalogEdge{"WKL", "KL", CatRelation::LeqW, ""});
  CatalogEngine bad{cat};
  REQUIRE(bad.lint().size() == 1);
  CHECK(bad.lint()[0].find("WKL") != std::string::npos);
}

TEST_CASE("DOT export matches the recorded figures", "[catalog]") {
  const std::string fig1 = engine().emit_dot("fig1");
  CHECK(fig1.find("\"C_3\" -> \"C_2\"") != std::string::npos);
  CHECK(fig1.find("\"C_4\" -> \"C_3\"") != std::string::npos);
  CHECK(fig1.find("\"RT_{1,2}\"") != std::string::npos);

  const std::string fig2 = engine().emit_dot("fig2");
  CHECK(fig2.find("cluster_degree") != std::string::npos);
  CHECK(fig2.find("single Weihrauch degree") != std::string::npos);

  const std::string fig5 = engine().emit_dot("fig5");
  CHECK(fig5.find("\"RT_{2,2}\" -> \"COH\" [style=solid") !=
        std::string::npos);

  // Solid edges are exactly the strong reductions, per figure data.
  const std::string fig4 = engine().emit_dot("fig4");
  CHECK(fig4.find("\"RT_{2,2}\" -> \"COH\" [style=solid") !=
        std::string::npos);
  CHECK(fig4.find("\"SRT_{2,2} * COH\" -> \"RT_{2,2}\" [style=dashed") !=
        std::string::npos);

  // Deterministic output.
  CHECK(engine().emit_dot("fig1") == fig1);
  CHECK_THROWS_AS(engine().emit_dot("fig3"), NotFoundError);
}
