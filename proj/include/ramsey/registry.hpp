// SPDX-License-Identifier: Apache-2.0
//
// The reduction registry: every executable reduction is recorded in one
// table, keyed by name, carrying its provenance anchor, its strength, the
// instance transform K, the solution transform H, the source-problem
// checker, and a deterministic oracle enumerating target solutions at
// window scale.  The verifier and the CLI enumerate this table uniformly.

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/constructions.hpp"

namespace ramsey {

struct Reduction {
  enum class Strength { Strong, Weak };

  std::string name;
  std::string source;  // source degree, e.g. "RT_{2,2}"
  std::string target;
  std::string anchor;  // provenance anchor for the recorded statement
  Strength strength = Strength::Strong;
  /// Instance transform: source instance (JSON) -> target instance (JSON).
  std::function<json(const json&)> K;
  /// Solution transform: (source instance, target solution) -> source
  /// solution.  Strong reductions ignore the first argument.
  std::function<json(const json&, const json&)> H;
  /// Source-problem checker: (source instance, source solution) -> verdict.
  std::function<Verdict(const json&, const json&)> check_source;
  /// Deterministic oracle: target instance -> list of target solutions
  /// (exhaustive when within budget, otherwise a sample incl. lex-first).
  std::function<std::vector<json>(const json&)> oracle;
  /// Default generator family for verify runs.
  std::string family;
};

inline const char* to_string(Reduction::Strength s) {
  return s == Reduction::Strength::Strong ? "strong" : "weak";
}

namespace detail {

/// Greedy homogeneous completion from a fixed first element; used for
/// sampling when exhaustive enumeration would blow the budget.
inline std::optional<HomSet> greedy_homogeneous(const Coloring& c, u64 size,
                                                u64 start) {
  std::vector<u64> cur{start};
  std::optional<u64> color;
  for (u64 e = start + 1; e < c.window && cur.size() < size; ++e) {
    std::optional<u64> col = color;
    if (extension_consistent(c, cur, e, col)) {
      cur.push_back(e);
      color = col;
    }
  }
  if (cur.size() < size) return std::nullopt;
  HomSet m;
  m.elements = cur;
  m.color = resolve_color(c, HomSet{cur, 0, false});
  m.has_color = true;
  return m;
}

/// Oracle over homogeneous sets of a coloring: exhaustive and lex-ordered
/// within budget, otherwise lex-first plus greedy completions per start
/// element.  Colors outside the instance's admissible set are filtered out
/// (they cannot occur on genuine solutions).
inline std::vector<json> homset_oracle(const Coloring& c, u64 size,
                                       u64 budget = 500'000) {
  std::vector<HomSet> found;
  if (binomial(c.window, size) <= budget) {
    found = all_homogeneous(c, size, budget);
  } else {
    std::set<std::vector<u64>> seen;
    try {
      HomSet first = solve_homogeneous(c, size);
      seen.insert(first.elements);
      found.push_back(std::move(first));
    } catch (const NotFoundError&) {
    }
    for (u64 start = 0; start < c.window; ++start) {
      auto m = greedy_homogeneous(c, size, start);
      if (m && seen.insert(m->elements).second) found.push_back(*m);
    }
  }
  std::vector<json> out;
  for (const HomSet& m : found) {
    if (c.color_admissible(m.color)) out.push_back(to_json(m));
  }
  return out;
}

inline std::vector<u64> json_word(const json& j) {
  return j.get<std::vector<u64>>();
}

/// Maximal-length words of a tree instance.
inline std::vector<std::vector<u64>> deepest_words(const TreeInstance& t) {
  std::size_t best = 0;
  for (const auto& w : t.words) best = std::max(best, w.size());
  std::vector<std::vector<u64>> out;
  for (const auto& w : t.words) {
    if (w.size() == best) out.push_back(w);
  }
  return out;
}

}  // namespace detail

inline std::vector<Reduction> make_registry() {
  std::vector<Reduction> reg;

  // -------------------------------------------------------------- Theorem 3.2
  {
    Reduction r;
    r.name = "thm3.2-lower-bound";
    r.source = "BWT_2 (iterated limits)";
    r.target = "RT_{n,2}";
    r.anchor = "Theorem 3.2";
    r.strength = Reduction::Strength::Strong;
    r.family = "ConstantTail";
    r.K = [](const json& x) {
      const Stream p = stream_from_json(x.at("stream"));
      return to_json(lower_bound_coloring(p, x.at("n").get<u64>(),
                                          x.at("window").get<u64>()));
    };
    r.H = [](const json&, const json& s) {
      return json{{"type", "bwt_answer"}, {"color", s.at("color")}};
    };
    r.check_source = [](const json& x, const json& sol) {
      const u64 color = sol.at("color").get<u64>();
      if (color >= 2) return Verdict::Fail;
      const json& lim = x.at("limit");
      if (lim.at("converges").get<bool>()) {
        return color == lim.at("value").get<u64>() ? Verdict::Pass
                                                   : Verdict::Fail;
      }
      return Verdict::Pass;  // nonconvergent: every color is a cluster point
    };
    r.oracle = [](const json& t) {
      return detail::homset_oracle(coloring_from_json(t), 4);
    };
    reg.push_back(std::move(r));
  }

  // ---------------------------------------------------------------- Lemma 3.6
  {
    Reduction r;
    r.name = "lemma3.6-product";
    r.source = "RT_{2,2} x RT_{2,2}";
    r.target = "RT_{2,4}";
    r.anchor = "Lemma 3.6";
    r.strength = Reduction::Strength::Strong;
    r.family = "StableAnnotated";
    r.K = [](const json& x) {
      std::vector<Coloring> cs;
      for (const json& c : x.at("components")) {
        cs.push_back(coloring_from_json(c));
      }
      return to_json(build_product_coloring(cs));
    };
    r.H = [](const json& x, const json& s) {
      const HomSet m = homset_from_json(s);
      json comps = json::array();
      for (std::size_t i = 0; i < x.at("components").size(); ++i) {
        comps.push_back(to_json(HomSet{m.elements, 0, false}));
      }
      return json{{"components", comps}};
    };
    r.check_source = [](const json& x, const json& sol) {
      const auto& comps = x.at("components");
      const auto& sols = sol.at("components");
      if (sols.size() != comps.size()) return Verdict::Fail;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (!check_homogeneous(coloring_from_json(comps[i]),
                               homset_from_json(sols[i]))) {
          return Verdict::Fail;
        }
      }
      return Verdict::Pass;
    };
    r.oracle = [](const json& t) {
      return detail::homset_oracle(coloring_from_json(t), 4);
    };
    reg.push_back(std::move(r));
  }

  // ------------------------------------------------------------- Theorem 3.18
  {
    Reduction r;
    r.name = "thm3.18-plus";
    r.source = "RT_{1,unbounded} x RT_{2,k}";
    r.target = "RT_{2,k+1}";
    r.anchor = "Theorem 3.18";
    r.strength = Reduction::Strength::Strong;
    r.family = "StableAnnotated";
    r.K = [](const json& x) {
      return to_json(plus_coloring(coloring_from_json(x.at("c1")),
                                   coloring_from_json(x.at("c2"))));
    };
    r.H = [](const json&, const json& s) {
      const HomSet m = homset_from_json(s);
      return json{{"m1", to_json(HomSet{m.elements, 0, false})},
                  {"m2", to_json(m)}};
    };
    r.check_source = [](const json& x, const json& sol) {
      const bool ok1 = check_homogeneous(coloring_from_json(x.at("c1")),
                                         homset_from_json(sol.at("m1")));
      const bool ok2 = check_homogeneous(coloring_from_json(x.at("c2")),
                                         homset_from_json(sol.at("m2")));
      return ok1 && ok2 ? Verdict::Pass : Verdict::Fail;
    };
    r.oracle = [](const json& t) {
      return detail::homset_oracle(coloring_from_json(t), 3);
    };
    reg.push_back(std::move(r));
  }

  // ------------------------------------------------------------- Theorem 3.21
  {
    Reduction r;
    r.name = "thm3.21-delayed";
    r.source = "parallelization of (RT_{1,2} sequence)";
    r.target = "RT_{3,2}";
    r.anchor = "Theorem 3.21";
    r.strength = Reduction::Strength::Strong;
    r.family = "StableAnnotated";
    r.K = [](const json& x) {
      std::vector<Coloring> cs;
      for (const json& c : x.at("components")) {
        cs.push_back(coloring_from_json(c));
      }
      return to_json(delayed_parallelization(cs));
    };
    r.H = [](const json& x, const json& s) {
      const HomSet m = homset_from_json(s);
      json comps = json::array();
      for (std::size_t i = 0; i < x.at("components").size(); ++i) {
        const Coloring ci = coloring_from_json(x.at("components")[i]);
        const auto tail = delayed_parallelization_tail(m.elements, i);
        if (tail.size() < ci.arity) {
          throw WindowExhaustedError("tail shorter than component arity");
        }
        comps.push_back(to_json(HomSet{tail, 0, false}));
      }
      return json{{"components", comps}};
    };
    r.check_source = [](const json& x, const json& sol) {
      const auto& comps = x.at("components");
      const auto& sols = sol.at("components");
      if (sols.size() != comps.size()) return Verdict::Fail;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (!check_homogeneous(coloring_from_json(comps[i]),
                               homset_from_json(sols[i]))) {
          return Verdict::Fail;
        }
      }
      return Verdict::Pass;
    };
    r.oracle = [](const json& t) {
      return detail::homset_oracle(coloring_from_json(t), 5);
    };
    reg.push_back(std::move(r));
  }

  // --------------------------------------------------------- Proposition 4.1
  {
    Reduction r;
    r.name = "prop4.1-jump";
    r.source = "RT_{1,k} jump";
    r.target = "SRT_{2,k}";
    r.anchor = "Proposition 4.1";
    r.strength = Reduction::Strength::Strong;
    r.family = "ConstantTail";
    r.K = [](const json& x) {
      std::vector<Coloring> cs;
      for (const json& c : x.at("approximations")) {
        cs.push_back(coloring_from_json(c));
      }
      return to_json(jump_coloring(cs, x.at("stabilizes_at").get<u64>(),
                                   x.at("k").get<u64>()));
    };
    r.H = [](const json&, const json& s) {
      HomSet m = homset_from_json(s);
      m.elements.pop_back();  // the window artifact: drop the top element
      return to_json(m);
    };
    r.check_source = [](const json& x, const json& sol) {
      const Coloring limit = coloring_from_json(x.at("limit"));
      return check_homogeneous(limit, homset_from_json(sol)) ? Verdict::Pass
                                                             : Verdict::Fail;
    };
    r.oracle = [](const json& t) {
      return detail::homset_oracle(coloring_from_json(t), 4);
    };
    reg.push_back(std::move(r));
  }

  // -------------------------------------------------------------- Theorem 4.3
  {
    Reduction r;
    r.name = "thm4.3-stable-jump";
    r.source = "SRT_{2,k}";
    r.target = "RT_{1,k} jump";
    r.anchor = "Theorem 4.3";
    r.strength = Reduction::Strength::Weak;
    r.family = "StableAnnotated";
    r.K = [](const json& x) {
      const Coloring c = coloring_from_json(x);
      if (!c.annotation) {
        throw InvalidInputError("source must carry a stability annotation");
      }
      const auto cs = stable_to_sequence(c);
      json comps = json::array();
      for (const Coloring& ci : cs) comps.push_back(to_json(ci));
      // The limit of the sequence, materialized on the shrunken window
      // (the top element has no extension to probe).
      const Coloring limit = Coloring::from_function(
          c.arity - 1, c.colors, c.window - 1,
          [&](const std::vector<u64>& a) { return c.limit_at(a); });
      return json{{"type", "jump_seq"},
                  {"components", comps},
                  {"stabilizes_at", c.annotation->horizon},
                  {"limit", to_json(limit)}};
    };
    r.H = [](const json& x, const json& s) {
      const Coloring c = coloring_from_json(x);
      const HomSet m_inf = homset_from_json(s);
      return to_json(grow_homogeneous(c, m_inf, c.arity + 2));
    };
    r.check_source = [](const json& x, const json& sol) {
      return check_homogeneous(coloring_from_json(x), homset_from_json(sol))
                 ? Verdict::Pass
                 : Verdict::Fail;
    };
    r.oracle = [](const json& t) {
      return detail::homset_oracle(coloring_from_json(t.at("limit")), 6);
    };
    reg.push_back(std::move(r));
  }

  // -------------------------------------------------------- Proposition 4.14
  {
    Reduction r;
    r.name = "prop4.14-transport";
    r.source = "RT_{n,k}";
    r.target = "COH followed by RT on the transported coloring";
    r.anchor = "Proposition 4.14";
    r.strength = Reduction::Strength::Weak;
    r.family = "StableAnnotated";
    r.K = [](const json& x) {
      const Coloring c = coloring_from_json(x);
      return json{{"type", "transport_pipeline"},
                  {"coh", to_json(coh_sets_from_coloring(c))},
                  {"coloring", x}};
    };
    r.H = [](const json& x, const json& s) {
      const std::vector<u64> sigma = s.at("sigma").get<std::vector<u64>>();
      const HomSet m_sigma = homset_from_json(s.at("homset"));
      HomSet m;
      m.elements = transport_solution(sigma, m_sigma.elements);
      m.color = m_sigma.color;
      m.has_color = m_sigma.has_color;
      (void)x;
      return to_json(m);
    };
    r.check_source = [](const json& x, const json& sol) {
      return check_homogeneous(coloring_from_json(x), homset_from_json(sol))
                 ? Verdict::Pass
                 : Verdict::Fail;
    };
    r.oracle = [](const json& t) {
      const Coloring c = coloring_from_json(t.at("coloring"));
      std::vector<std::vector<u64>> sigmas;
      std::vector<u64> tail, odds, evens;
      for (u64 i = c.window / 2; i < c.window; ++i) tail.push_back(i);
      for (u64 i = 1; i < c.window; i += 2) odds.push_back(i);
      for (u64 i = 0; i < c.window; i += 2) evens.push_back(i);
      sigmas = {tail, odds, evens};
      std::vector<json> out;
      for (const auto& sigma : sigmas) {
        if (sigma.size() < c.arity + 1) continue;
        try {
          const Coloring cs = transport_coloring(c, sigma);
          const HomSet m = solve_homogeneous(cs, c.arity + 1);
          out.push_back(json{{"sigma", sigma}, {"homset", to_json(m)}});
        } catch (const NotFoundError&) {
        }
      }
      return out;
    };
    reg.push_back(std::move(r));
  }

  // --------------------------------------------------------- Proposition 5.4
  {
    Reduction r;
    r.name = "prop5.4-coh";
    r.source = "COH";
    r.target = "RT_{2,2}";
    r.anchor = "Proposition 5.4";
    r.strength = Reduction::Strength::Strong;
    r.family = "CofiniteSets";
    r.K = [](const json& x) {
      return to_json(coh_to_rt22(coh_sequence_from_json(x)));
    };
    r.H = [](const json&, const json& s) {
      return json{{"candidate", homset_from_json(s).elements}};
    };
    r.check_source = [](const json& x, const json& sol) {
      const CohSequence rs = coh_sequence_from_json(x);
      return check_cohesive_within(
          rs, sol.at("candidate").get<std::vector<u64>>(), 2);
    };
    r.oracle = [](const json& t) {
      // Size 8 keeps the slack-2 cohesiveness check non-vacuous (a candidate
      // of size <= 2*slack+1 could never fail the min-side count).
      return detail::homset_oracle(coloring_from_json(t), 8);
    };
    reg.push_back(std::move(r));
  }

  // ------------------------------------------------ Theorem 5.6 (three maps)
  {
    Reduction r;
    r.name = "thm5.6-tree-to-sequence";
    r.source = "KL_+ (enumerated tree paths)";
    r.target = "CL (cluster points of a sequence)";
    r.anchor = "Theorem 5.6";
    r.strength = Reduction::Strength::Strong;
    r.family = "EnumeratedTrees";
    r.K = [](const json& x) {
      const TreeInstance t = tree_from_json(x);
      json streams = json::array();
      for (const Stream& s : enum_tree_to_sequence(t)) {
        streams.push_back(to_json(s));
      }
      return json{{"type", "stream_list"},
                  {"streams", streams},
                  {"depth", t.depth}};
    };
    r.H = [](const json&, const json& s) { return s; };
    r.check_source = [](const json& x, const json& sol) {
      const TreeInstance t = tree_from_json(x);
      const auto word = detail::json_word(sol.at("word"));
      // The word must be an enumerated word padded with zeros.
      for (std::size_t len = word.size();; --len) {
        bool tail_zero = true;
        for (std::size_t i = len; i < word.size(); ++i) {
          if (word[i] != 0) tail_zero = false;
        }
        if (tail_zero &&
            t.contains(std::vector<u64>(word.begin(),
                                        word.begin() + static_cast<long>(len)))) {
          return Verdict::Pass;
        }
        if (len == 0) break;
      }
      return Verdict::Fail;
    };
    r.oracle = [](const json& t) {
      const u64 depth = t.at("depth").get<u64>();
      std::set<std::vector<u64>> seen;
      std::vector<json> out;
      for (const json& js : t.at("streams")) {
        const Stream s = stream_from_json(js);
        std::vector<u64> w;
        for (u64 i = 0; i < depth; ++i) w.push_back(s.at(i));
        if (seen.insert(w).second) out.push_back(json{{"word", w}});
      }
      return out;
    };
    reg.push_back(std::move(r));
  }
  {
    Reduction r;
    r.name = "thm5.6-sequence-to-tree";
    r.source = "CL (cluster points of a sequence)";
    r.target = "KL_+ (enumerated tree paths)";
    r.anchor = "Theorem 5.6";
    r.strength = Reduction::Strength::Strong;
    r.family = "EnumeratedTrees";
    r.K = [](const json& x) {
      std::vector<Stream> xs;
      for (const json& js : x.at("streams")) xs.push_back(stream_from_json(js));
      return to_json(sequence_to_cluster_tree(xs, x.at("depth").get<u64>()));
    };
    r.H = [](const json&, const json& s) { return s; };
    r.check_source = [](const json& x, const json& sol) {
      // Cluster point check against the annotated recurrent stream.
      const Stream rec = stream_from_json(x.at("recurrent"));
      const auto word = detail::json_word(sol.at("word"));
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] != rec.at(i)) return Verdict::Fail;
      }
      return Verdict::Pass;
    };
    r.oracle = [](const json& t) {
      const TreeInstance tree = tree_from_json(t);
      std::vector<json> out;
      for (const auto& w : detail::deepest_words(tree)) {
        if (!w.empty()) out.push_back(json{{"word", w}});
      }
      return out;
    };
    reg.push_back(std::move(r));
  }
  {
    Reduction r;
    r.name = "thm5.6-klplus";
    r.source = "KL_+ (enumerated tree paths)";
    r.target = "KL (characteristic-function tree paths)";
    r.anchor = "Theorem 5.6";
    r.strength = Reduction::Strength::Strong;
    r.family = "EnumeratedTrees";
    r.K = [](const json& x) { return to_json(kl_plus_to_kl(tree_from_json(x))); };
    r.H = [](const json&, const json& s) {
      return json{{"word", pr1(detail::json_word(s.at("word")))}};
    };
    r.check_source = [](const json& x, const json& sol) {
      const TreeInstance t = tree_from_json(x);
      const auto word = detail::json_word(sol.at("word"));
      for (const auto& w : t.words) {
        if (w.size() < word.size()) continue;
        if (std::equal(word.begin(), word.end(), w.begin())) {
          return Verdict::Pass;
        }
      }
      return Verdict::Fail;
    };
    r.oracle = [](const json& t) {
      const TreeInstance tree = tree_from_json(t);
      std::vector<json> out;
      for (const auto& w : detail::deepest_words(tree)) {
        if (!w.empty()) out.push_back(json{{"word", w}});
      }
      return out;
    };
    reg.push_back(std::move(r));
  }

  // --------------------------------------------------------- Proposition 5.9
  {
    Reduction r;
    r.name = "prop5.9-ivt";
    r.source = "IVT (interval shrinking)";
    r.target = "CL_N (cluster point on naturals)";
    r.anchor = "Proposition 5.9";
    r.strength = Reduction::Strength::Weak;
    r.family = "ShrinkingIntervals";
    r.K = [](const json& x) {
      return to_json(ivt_to_cluster(interval_shrink_from_json(x)));
    };
    r.H = [](const json& x, const json& s) {
      const IntervalShrink iv = interval_shrink_from_json(x);
      return to_json(ivt_decode(iv, s.at("code").get<u64>()));
    };
    r.check_source = [](const json& x, const json& sol) {
      const IntervalShrink iv = interval_shrink_from_json(x);
      const Rational v = rational_from_json(sol);
      return (iv.lower.back() <= v && v <= iv.upper.back()) ? Verdict::Pass
                                                            : Verdict::Fail;
    };
    r.oracle = [](const json& t) {
      const Stream s = stream_from_json(t);
      std::vector<json> out;
      if (!s.prefix.empty()) out.push_back(json{{"code", s.prefix.back()}});
      return out;
    };
    reg.push_back(std::move(r));
  }

  // --------------------------------------------------------- Proposition 7.1
  {
    Reduction r;
    r.name = "prop7.1-min";
    r.source = "min (least omitted value)";
    r.target = "C_N (closed choice on naturals)";
    r.anchor = "Proposition 7.1";
    r.strength = Reduction::Strength::Weak;
    r.family = "ConstantTail";
    r.K = [](const json& x) {
      const Stream p = stream_from_json(x.at("stream"));
      if (p.behavior == Stream::Behavior::Unknown || !x.contains("omitted_min")) {
        throw InvalidInputError(
            "least-omitted-value instances must be annotated");
      }
      json j = to_json(min_via_choice_instance(p));
      j["stages"] = p.prefix.size();
      return j;
    };
    r.H = [](const json&, const json& s) {
      return json{{"value", unpair(s.at("code").get<u64>()).second}};
    };
    r.check_source = [](const json& x, const json& sol) {
      return sol.at("value").get<u64>() == x.at("omitted_min").get<u64>()
                 ? Verdict::Pass
                 : Verdict::Fail;
    };
    r.oracle = [](const json& t) {
      const ClosedSetInstance a = closed_set_from_json(t);
      std::vector<json> out;
      for (u64 code : min_via_choice_survivors(a, t.at("stages").get<u64>())) {
        out.push_back(json{{"code", code}});
      }
      return out;
    };
    reg.push_back(std::move(r));
  }

  return reg;
}

inline const std::vector<Reduction>& registry() {
  static const std::vector<Reduction> reg = make_registry();
  return reg;
}

inline const Reduction& find_reduction(const std::string& name) {
  for (const Reduction& r : registry()) {
    if (r.name == name) return r;
  }
  throw NotFoundError("no registered reduction named '" + name + "'");
}

}  // namespace ramsey
