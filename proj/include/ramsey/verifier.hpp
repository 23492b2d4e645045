// SPDX-License-Identifier: Apache-2.0
//
// Property-based harness: seeded instance generators with ground-truth
// annotations, the reduction-contract checker (K / oracle / H / source
// checker per trial), and a mutation sanity check that corrupts transported
// solutions to prove the checkers are not vacuous.

#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "ramsey/registry.hpp"

namespace ramsey {

// ---------------------------------------------------------------------------
// Generators.  All deterministic under (seed, index); every instance carries
// the annotation its checker needs.
// ---------------------------------------------------------------------------

namespace gen {

/// Stable arity-2 coloring: c(a,b) = g(a) for b >= horizon, random below;
/// annotated with horizon and the limit table g.
inline json stable_coloring(std::mt19937_64& rng, u64 window, u64 k,
                            u64 horizon) {
  std::vector<u64> g;
  for (u64 a = 0; a < window; ++a) g.push_back(rng() % k);
  Coloring c = Coloring::from_function(
      2, ColorSpace{false, k}, window, [&](const std::vector<u64>& s) {
        return s[1] >= horizon ? g[static_cast<std::size_t>(s[0])] : rng() % k;
      });
  StableAnnotation sa;
  sa.horizon = horizon;
  for (u64 a = 0; a < window; ++a) {
    sa.limit.push_back(a + 1 < window ? g[static_cast<std::size_t>(a)] : 0);
  }
  c.annotation = sa;
  return to_json(c);
}

/// Unary coloring eventually constant from `horizon` on.
inline json eventually_constant_unary(std::mt19937_64& rng, u64 window, u64 k,
                                      u64 horizon, bool unbounded) {
  const u64 v = rng() % k;
  Coloring c = Coloring::from_function(
      1, ColorSpace{unbounded, k}, window,
      [&](const std::vector<u64>& s) { return s[0] >= horizon ? v : rng() % k; });
  StableAnnotation sa;
  sa.horizon = horizon;
  sa.limit = {v};  // one entry: the limit over the single empty subset
  c.annotation = sa;
  return to_json(c);
}

inline json bwt_instance(std::mt19937_64& rng, u64 window, u64 n,
                         bool convergent) {
  std::vector<u64> top(n);
  for (u64 i = 0; i < n; ++i) top[i] = window - 1 - i;
  const u64 needed = tuple(top) + 1;
  Stream p;
  p.prefix.resize(static_cast<std::size_t>(needed));
  const u64 v = rng() % 2;
  const u64 thr = (n == 2) ? rng() % 3 : rng() % 2;  // small thresholds: every
  // size-4 homogeneous set contains a subset probing beyond the threshold.
  for (u64 code = 0; code < needed; ++code) {
    const auto comps = untuple(code, n);  // (i_{n-1}, ..., i_0)
    if (convergent) {
      p.prefix[static_cast<std::size_t>(code)] =
          comps.front() >= thr ? v : rng() % 2;
    } else {
      p.prefix[static_cast<std::size_t>(code)] = comps.back() % 2;
    }
  }
  json limit = convergent ? json{{"converges", true}, {"value", v}}
                          : json{{"converges", false}};
  return json{{"type", "bwt"},
              {"n", n},
              {"window", window},
              {"stream", to_json(p)},
              {"limit", limit}};
}

inline json coh_instance(std::mt19937_64& rng, u64 window, u64 num_sets) {
  CohSequence rs;
  rs.window = window;
  for (u64 i = 0; i < num_sets; ++i) {
    CohSet s;
    s.bits.assign(static_cast<std::size_t>(window), false);
    std::set<u64> exc;
    // The finite side of each set meets the window in at most 2 elements
    // (the checker's slack): a homogeneous set of the derived coloring may
    // legitimately carry its whole window-truncated finite side, so larger
    // finite sides would fail genuine solutions at finite scale.
    if (i == 0) {
      exc = {1, 3};
      s.kind = CohSet::Kind::FiniteWithin;
    } else {
      const u64 e = rng() % 3;
      while (exc.size() < e) exc.insert(rng() % window);
      s.kind = (rng() % 2 == 0) ? CohSet::Kind::CofiniteWithin
                                : CohSet::Kind::FiniteWithin;
    }
    const bool finite = s.kind == CohSet::Kind::FiniteWithin;
    for (u64 x = 0; x < window; ++x) {
      const bool listed = exc.count(x) > 0;
      s.bits[static_cast<std::size_t>(x)] = finite ? listed : !listed;
    }
    s.exceptions.assign(exc.begin(), exc.end());
    rs.sets.push_back(std::move(s));
  }
  return to_json(rs);
}

/// Random prefix-closed enumerated tree (parents listed before children).
inline json tree_instance(std::mt19937_64& rng, u64 max_depth, u64 num_words) {
  TreeInstance t;
  t.mode = TreeInstance::Mode::Enumeration;
  t.alphabet = TreeInstance::Alphabet::Naturals;
  t.words.push_back({});
  for (u64 i = 1; i < num_words; ++i) {
    // Extend a random existing word below the depth cap.
    for (int attempt = 0; attempt < 16; ++attempt) {
      const auto& base = t.words[rng() % t.words.size()];
      if (base.size() >= max_depth) continue;
      std::vector<u64> w = base;
      w.push_back(rng() % 3);
      if (!t.contains(w)) {
        t.words.push_back(std::move(w));
        break;
      }
    }
  }
  u64 depth = 0;
  for (const auto& w : t.words) depth = std::max<u64>(depth, w.size());
  t.depth = depth;
  return to_json(t);
}

inline json cluster_sequence_instance(std::mt19937_64& rng, u64 depth) {
  Stream star;
  for (u64 i = 0; i < depth; ++i) star.prefix.push_back(1 + rng() % 3);
  star.behavior = Stream::Behavior::EventuallyConstant;
  star.value = star.prefix.back();
  star.from_index = depth - 1;
  json streams = json::array();
  const u64 len = 2 * depth + 6;
  for (u64 i = 0; i < len; ++i) {
    if (i % 2 == 0) {
      streams.push_back(to_json(star));
    } else {
      Stream noise;
      noise.prefix.push_back(5 + i);  // distinct head per noise stream
      for (u64 j = 1; j < depth; ++j) noise.prefix.push_back(rng() % 4);
      noise.behavior = Stream::Behavior::EventuallyConstant;
      noise.value = noise.prefix.back();
      noise.from_index = depth - 1;
      streams.push_back(to_json(noise));
    }
  }
  return json{{"type", "stream_list"},
              {"streams", streams},
              {"recurrent", to_json(star)},
              {"depth", depth}};
}

inline json interval_instance(std::mt19937_64& rng) {
  const Rational t(static_cast<long long>(rng() % 1025), 1024);
  const u64 shrink_until = rng() % 12;
  IntervalShrink iv;
  for (u64 n = 0; n < 15; ++n) {
    const u64 m = std::min(n, shrink_until);
    const Rational eps(1, 1LL << (m + 1));
    Rational a = t - eps, b = t + eps;
    if (a < Rational(0)) a = Rational(0);
    if (b > Rational(1)) b = Rational(1);
    if (!(a < b)) b = a + Rational(1, 1LL << 20);
    iv.lower.push_back(a);
    iv.upper.push_back(b);
  }
  return to_json(iv);
}

inline json min_instance(std::mt19937_64& rng) {
  const u64 mu = rng() % 4;
  std::vector<u64> prefix;
  for (u64 v = 0; v < mu; ++v) prefix.push_back(v);
  std::shuffle(prefix.begin(), prefix.end(), rng);
  while (prefix.size() < 10) prefix.push_back(mu + 1 + rng() % 5);
  prefix.push_back(mu + 1);
  prefix.push_back(mu + 1);
  Stream p;
  p.prefix = prefix;
  p.behavior = Stream::Behavior::EventuallyConstant;
  p.value = mu + 1;
  p.from_index = prefix.size() - 2;
  return json{{"type", "min"}, {"stream", to_json(p)}, {"omitted_min", mu}};
}

}  // namespace gen

/// Deterministic annotated instances for a registered reduction's source
/// problem.  `problem` accepts the reduction name; families follow the
/// generator catalog (ConstantTail, PeriodicTail, StableAnnotated,
/// CofiniteSets, ShrinkingIntervals, EnumeratedTrees).
inline std::vector<json> generate_instances(const std::string& problem,
                                            const std::string& family,
                                            u64 count, u64 seed,
                                            u64 window = 12) {
  std::vector<json> out;
  for (u64 i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed * 1'000'003 + i);
    if (problem == "thm3.2-lower-bound") {
      if (family != "ConstantTail" && family != "PeriodicTail") {
        throw InvalidInputError("incompatible family for " + problem);
      }
      const u64 n = 2 + i % 2;
      out.push_back(gen::bwt_instance(rng, std::min<u64>(window, 16), n,
                                      family == "ConstantTail"));
    } else if (problem == "lemma3.6-product") {
      json comps = json::array();
      comps.push_back(gen::stable_coloring(rng, window, 2, 2));
      comps.push_back(gen::stable_coloring(rng, window, 2, 2));
      out.push_back(json{{"type", "coloring_list"}, {"components", comps}});
    } else if (problem == "thm3.18-plus") {
      out.push_back(
          json{{"type", "coloring_pair"},
               {"c1", gen::eventually_constant_unary(rng, window, 3, 3, true)},
               {"c2", gen::stable_coloring(rng, window, 2, 3)}});
    } else if (problem == "thm3.21-delayed") {
      json comps = json::array();
      comps.push_back(gen::eventually_constant_unary(rng, window, 2, 2, false));
      comps.push_back(gen::eventually_constant_unary(rng, window, 2, 2, false));
      out.push_back(json{{"type", "coloring_list"}, {"components", comps}});
    } else if (problem == "prop4.1-jump") {
      const u64 stab = 3;
      const json limit = gen::eventually_constant_unary(rng, window, 2, 0, false);
      json approx = json::array();
      for (u64 j = 0; j < stab; ++j) {
        approx.push_back(gen::eventually_constant_unary(rng, window, 2, 0, false));
      }
      approx.push_back(limit);
      approx.push_back(limit);
      out.push_back(json{{"type", "jump"},
                         {"approximations", approx},
                         {"stabilizes_at", stab},
                         {"k", 2},
                         {"limit", limit}});
    } else if (problem == "thm4.3-stable-jump" ||
               problem == "prop4.14-transport") {
      out.push_back(gen::stable_coloring(rng, window, 2, 2));
    } else if (problem == "prop5.4-coh") {
      out.push_back(gen::coh_instance(rng, std::max<u64>(window, 32), 8));
    } else if (problem == "thm5.6-tree-to-sequence" ||
               problem == "thm5.6-klplus") {
      out.push_back(gen::tree_instance(rng, 4 + i % 5, 10 + rng() % 8));
    } else if (problem == "thm5.6-sequence-to-tree") {
      out.push_back(gen::cluster_sequence_instance(rng, 4));
    } else if (problem == "prop5.9-ivt") {
      out.push_back(gen::interval_instance(rng));
    } else if (problem == "prop7.1-min") {
      out.push_back(gen::min_instance(rng));
    } else {
      throw NotFoundError("no generator for problem '" + problem + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trial harness
// ---------------------------------------------------------------------------

struct TrialReport {
  std::string name;
  u64 trials = 0;
  u64 passes = 0;
  u64 failures = 0;
  u64 inconclusive = 0;
  json failure_witnesses = json::array();
  std::string coverage;

  bool pass() const { return trials > 0 && failures == 0; }
};

inline json to_json(const TrialReport& r) {
  return json{{"reduction", r.name},
              {"trials", r.trials},
              {"passes", r.passes},
              {"failures", r.failures},
              {"inconclusive", r.inconclusive},
              {"failure_witnesses", r.failure_witnesses},
              {"coverage", r.coverage},
              {"pass", r.pass()}};
}

namespace detail {

inline bool window_starved(const std::exception& e) {
  return dynamic_cast<const WindowError*>(&e) != nullptr ||
         dynamic_cast<const WindowExhaustedError*>(&e) != nullptr ||
         dynamic_cast<const InsufficientPrefixError*>(&e) != nullptr ||
         dynamic_cast<const NotFoundError*>(&e) != nullptr ||
         dynamic_cast<const BudgetError*>(&e) != nullptr;
}

}  // namespace detail

/// Run the reduction contract for `trials` generated instances: compute
/// K(x), enumerate oracle solutions of the target, transport each through H
/// and check it against the source problem.  Window-starved trials are
/// reported as inconclusive, never as passes.
inline TrialReport verify_reduction(const std::string& name, u64 trials,
                                    u64 window, u64 seed = 1) {
  const Reduction& r = find_reduction(name);
  TrialReport report;
  report.name = name;
  report.coverage = "window=" + std::to_string(window) +
                    " family=" + r.family + " seed=" + std::to_string(seed);
  const auto instances = generate_instances(r.name, r.family, trials, seed, window);
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const json& x = instances[idx];
    ++report.trials;
    bool failed = false, starved = false;
    json witness;
    try {
      const json target = r.K(x);
      const auto sols = r.oracle(target);
      if (sols.empty()) {
        ++report.inconclusive;
        continue;
      }
      for (const json& s : sols) {
        try {
          const json back = r.H(x, s);
          const Verdict v = r.check_source(x, back);
          if (v == Verdict::Fail) {
            failed = true;
            witness = json{{"instance_index", idx},
                           {"target_solution", s},
                           {"transported", back},
                           {"verdict", "fail"}};
            break;
          }
          if (v == Verdict::Inconclusive) starved = true;
        } catch (const std::exception& e) {
          if (!detail::window_starved(e)) throw;
          starved = true;
        }
      }
    } catch (const std::exception& e) {
      if (!detail::window_starved(e)) throw;
      starved = true;
    }
    if (failed) {
      ++report.failures;
      report.failure_witnesses.push_back(witness);
    } else if (starved) {
      ++report.inconclusive;
    } else {
      ++report.passes;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Mutation sanity
// ---------------------------------------------------------------------------

namespace detail {

inline void collect_corruptions(const json& sol, json& node,
                                const std::function<void(const json&)>& emit,
                                json& root) {
  if (node.is_number_unsigned() || node.is_number_integer()) {
    const auto old = node;
    node = old.get<long long>() + 1;
    emit(root);
    node = old.get<long long>() + 1'000'003;
    emit(root);
    node = old;
  } else if (node.is_array()) {
    for (auto& child : node) collect_corruptions(sol, child, emit, root);
  } else if (node.is_object()) {
    for (auto& [k, child] : node.items()) {
      (void)k;
      collect_corruptions(sol, child, emit, root);
    }
  }
}

}  // namespace detail

/// All single-entry corruptions of a source solution (each integer leaf
/// bumped by 1 and by a large offset).
inline std::vector<json> corrupt_solutions(const json& sol) {
  std::vector<json> out;
  json work = sol;
  detail::collect_corruptions(sol, work,
                              [&](const json& v) { out.push_back(v); }, work);
  return out;
}

/// Find a passing trial for the reduction, then require that at least one
/// corruption of the transported solution is rejected by the source checker
/// (a checker that throws on the corrupted input also counts as a catch).
inline bool mutation_sanity(const std::string& name, u64 window, u64 seed = 1) {
  const Reduction& r = find_reduction(name);
  const auto instances = generate_instances(r.name, r.family, 10, seed, window);
  for (const json& x : instances) {
    try {
      const json target = r.K(x);
      const auto sols = r.oracle(target);
      for (const json& s : sols) {
        const json back = r.H(x, s);
        if (r.check_source(x, back) != Verdict::Pass) continue;
        for (const json& bad : corrupt_solutions(back)) {
          try {
            if (r.check_source(x, bad) != Verdict::Pass) return true;
          } catch (const std::exception&) {
            return true;  // rejected by throwing: the corruption was noticed
          }
        }
        return false;  // a passing trial whose corruptions all passed
      }
    } catch (const std::exception& e) {
      if (!detail::window_starved(e)) throw;
    }
  }
  return false;  // no passing trial found
}

}  // namespace ramsey
