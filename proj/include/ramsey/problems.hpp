// SPDX-License-Identifier: Apache-2.0
//
// Finite-window models of problem instances and solutions: homogeneity and
// cohesiveness checkers, stability analysis, tree / closed-set / interval
// instances, and the operator algebra (product, coproduct, jump, parallel)
// as structural instance combinators over the JSON wire format.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

#include "ramsey/coloring.hpp"
#include "ramsey/encodings.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/stream.hpp"

namespace ramsey {

using Rational = boost::rational<long long>;

/// Three-valued outcome for checkers that can be starved by the window.
enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "inconclusive";
  }
}

// ---------------------------------------------------------------------------
// Homogeneity
// ---------------------------------------------------------------------------

/// True iff every n-subset of m.elements has color m.color under c.  When the
/// HomSet carries no color claim, the color of the least n-subset is used.
/// Elements outside the window raise WindowError (distinct from "false").
inline bool check_homogeneous(const Coloring& c, const HomSet& m) {
  if (m.elements.size() < c.arity) {
    throw InvalidInputError("homogeneous-set candidate smaller than arity");
  }
  for (std::size_t i = 0; i < m.elements.size(); ++i) {
    if (m.elements[i] >= c.window) {
      throw WindowError("element " + std::to_string(m.elements[i]) +
                        " outside window " + std::to_string(c.window));
    }
    if (i > 0 && m.elements[i] <= m.elements[i - 1]) {
      throw InvalidInputError("homogeneous-set elements must be strictly increasing");
    }
  }
  std::optional<u64> want;
  if (m.has_color) want = m.color;
  bool ok = true;
  for_each_subset(m.elements.size(), c.arity, [&](const std::vector<u64>& idx) {
    if (!ok) return;
    std::vector<u64> subset(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      subset[i] = m.elements[static_cast<std::size_t>(idx[i])];
    }
    const u64 color = c.at(subset);
    if (!want) {
      want = color;
    } else if (color != *want) {
      ok = false;
    }
  });
  return ok;
}

/// Resolve a HomSet's color against a coloring (the color of its least
/// n-subset); used when the solution transform legitimately omits the claim.
inline u64 resolve_color(const Coloring& c, const HomSet& m) {
  if (m.has_color) return m.color;
  std::vector<u64> first(m.elements.begin(),
                         m.elements.begin() + static_cast<std::ptrdiff_t>(c.arity));
  return c.at(first);
}

// ---------------------------------------------------------------------------
// Cohesiveness
// ---------------------------------------------------------------------------

/// One set R_i of a cohesive-sequence instance: its bit vector on the window
/// plus the ground-truth annotation telling which side is finite, with the
/// finite side's elements inside the window listed as exceptions.
struct CohSet {
  enum class Kind { Unannotated, FiniteWithin, CofiniteWithin };
  std::vector<bool> bits;
  Kind kind = Kind::Unannotated;
  std::vector<u64> exceptions;

  /// Check that the exception list matches the bit vector on the window.
  bool annotation_consistent() const {
    if (kind == Kind::Unannotated) return true;
    std::vector<u64> expect;
    for (u64 i = 0; i < bits.size(); ++i) {
      const bool in = bits[static_cast<std::size_t>(i)];
      if ((kind == Kind::FiniteWithin && in) ||
          (kind == Kind::CofiniteWithin && !in)) {
        expect.push_back(i);
      }
    }
    return expect == exceptions;
  }
};

struct CohSequence {
  u64 window = 0;
  std::vector<CohSet> sets;
};

/// Cohesiveness at finite scale: for each annotated set, the candidate must
/// commit to one side — all but at most `slack` of its elements inside R_i,
/// or all but at most `slack` outside R_i (either side is acceptable, as in
/// the definition "A cap R_i or A cap (N \ R_i) is finite").  The
/// (co)finiteness annotation is what makes the window counts trustworthy;
/// unannotated sets therefore make the overall result Inconclusive, while
/// any annotated violation makes it Fail.
inline Verdict check_cohesive_within(const CohSequence& rs,
                                     const std::vector<u64>& candidate,
                                     u64 slack) {
  bool any_unannotated = false;
  for (const CohSet& s : rs.sets) {
    u64 inside = 0, outside = 0;
    for (u64 x : candidate) {
      if (x >= rs.window) {
        throw WindowError("candidate element outside window");
      }
      if (s.bits[static_cast<std::size_t>(x)]) {
        ++inside;
      } else {
        ++outside;
      }
    }
    if (s.kind == CohSet::Kind::Unannotated) {
      any_unannotated = true;
      continue;
    }
    if (std::min(inside, outside) > slack) return Verdict::Fail;
  }
  return any_unannotated ? Verdict::Inconclusive : Verdict::Pass;
}

// ---------------------------------------------------------------------------
// Stability
// ---------------------------------------------------------------------------

struct StabilityResult {
  enum class Kind { Stable, Unstable, Inconclusive };
  Kind kind = Kind::Inconclusive;
  /// For Stable: limit values per (n-1)-subset in rank order (entries for
  /// subsets containing window-1 are conventionally 0).
  std::vector<u64> limit;
  /// For Unstable: a witness subset A and two indices with differing colors.
  std::vector<u64> witness;
  u64 witness_i = 0;
  u64 witness_j = 0;
};

/// Decide whether c looks stable from `horizon` on: for every (n-1)-subset A
/// with max(A) < horizon, c(A u {i}) must be constant for horizon <= i < window.
inline StabilityResult is_stable_up_to(const Coloring& c, u64 horizon) {
  StabilityResult res;
  if (horizon >= c.window) {
    throw InvalidInputError("horizon must be below the window");
  }
  if (c.window - horizon < 2) {
    res.kind = StabilityResult::Kind::Inconclusive;
    return res;
  }
  bool unstable = false;
  std::vector<u64> limit;
  limit.reserve(subset_ranks(c.window, c.arity - 1).size());
  for_each_subset(c.window, c.arity - 1, [&](const std::vector<u64>& a) {
    const u64 max_a = a.empty() ? 0 : a.back() + 1;  // first admissible extension
    // Limit entry: probe with the largest in-window extension when possible.
    std::vector<u64> probe = a;
    if (max_a <= c.window - 1 && (a.empty() || a.back() < c.window - 1)) {
      probe.push_back(c.window - 1);
      limit.push_back(c.at(probe));
    } else {
      limit.push_back(0);
    }
    if (unstable) return;
    if (!a.empty() && a.back() >= horizon) return;  // only checked below horizon
    const u64 start = std::max<u64>(horizon, max_a);
    std::optional<u64> seen;
    u64 seen_at = 0;
    for (u64 i = start; i < c.window; ++i) {
      std::vector<u64> s = a;
      s.push_back(i);
      const u64 col = c.at(s);
      if (!seen) {
        seen = col;
        seen_at = i;
      } else if (col != *seen) {
        unstable = true;
        res.witness = a;
        res.witness_i = seen_at;
        res.witness_j = i;
        return;
      }
    }
  });
  // Subset order from for_each_subset is lex; limit tables are rank-ordered.
  // For theta_n the two orders coincide only for arity 1, so re-sort by rank.
  if (c.arity - 1 >= 2) {
    std::vector<std::pair<u64, u64>> keyed;
    std::size_t pos = 0;
    for_each_subset(c.window, c.arity - 1, [&](const std::vector<u64>& a) {
      keyed.emplace_back(theta_encode(a), limit.at(pos++));
    });
    std::sort(keyed.begin(), keyed.end());
    limit.clear();
    for (auto& [rank, v] : keyed) limit.push_back(v);
  }
  if (unstable) {
    res.kind = StabilityResult::Kind::Unstable;
    return res;
  }
  res.kind = StabilityResult::Kind::Stable;
  res.limit = std::move(limit);
  return res;
}

// ---------------------------------------------------------------------------
// Trees, closed sets, intervals
// ---------------------------------------------------------------------------

/// A finite approximation of a tree over words of naturals.
struct TreeInstance {
  enum class Mode { CharacteristicFunction, Enumeration };
  enum class Alphabet { Binary, Naturals };
  Mode mode = Mode::Enumeration;
  Alphabet alphabet = Alphabet::Naturals;
  std::vector<std::vector<u64>> words;
  u64 depth = 0;

  bool contains(const std::vector<u64>& w) const {
    return std::find(words.begin(), words.end(), w) != words.end();
  }

  /// Characteristic-function trees must be prefix-closed.
  bool prefix_closed() const {
    for (const auto& w : words) {
      if (w.empty()) continue;
      std::vector<u64> p(w.begin(), w.end() - 1);
      if (!contains(p)) return false;
    }
    return true;
  }
};

/// A closed subset of N given by an enumeration of its complement; K_N
/// instances additionally carry an upper bound for the set.
struct ClosedSetInstance {
  std::vector<u64> complement_enumeration;
  std::optional<u64> bound;

  bool removed(u64 v) const {
    return std::find(complement_enumeration.begin(), complement_enumeration.end(),
                     v) != complement_enumeration.end();
  }
};

/// Nested rational intervals [a_n, b_n] within [0, 1]:
/// a_n nondecreasing, b_n nonincreasing, a_{n+1} < b_{n+1}.
struct IntervalShrink {
  std::vector<Rational> lower;
  std::vector<Rational> upper;

  bool well_formed() const {
    if (lower.empty() || lower.size() != upper.size()) return false;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (lower[i] < Rational(0) || upper[i] > Rational(1)) return false;
      if (lower[i] >= upper[i]) return false;
      if (i > 0 && (lower[i] < lower[i - 1] || upper[i] > upper[i - 1])) return false;
    }
    return true;
  }
};

// ---------------------------------------------------------------------------
// JSON wire format for the remaining instance types
// ---------------------------------------------------------------------------

inline json to_json(const Stream& s) {
  json j{{"type", "stream"}, {"prefix", s.prefix}};
  switch (s.behavior) {
    case Stream::Behavior::EventuallyConstant:
      j["behavior"] = json{{"kind", "eventually_constant"},
                           {"value", s.value},
                           {"from", s.from_index}};
      break;
    case Stream::Behavior::EventuallyPeriodic:
      j["behavior"] = json{{"kind", "eventually_periodic"},
                           {"period", s.period},
                           {"from", s.from_index}};
      break;
    default:
      break;
  }
  return j;
}

inline Stream stream_from_json(const json& j) {
  Stream s;
  s.prefix = j.at("prefix").get<std::vector<u64>>();
  if (j.contains("behavior")) {
    const json& b = j.at("behavior");
    const std::string kind = b.at("kind").get<std::string>();
    s.from_index = b.at("from").get<u64>();
    if (kind == "eventually_constant") {
      s.behavior = Stream::Behavior::EventuallyConstant;
      s.value = b.at("value").get<u64>();
    } else if (kind == "eventually_periodic") {
      s.behavior = Stream::Behavior::EventuallyPeriodic;
      s.period = b.at("period").get<std::vector<u64>>();
      if (s.period.empty()) throw InvalidInputError("empty period annotation");
    } else {
      throw InvalidInputError("unknown stream behavior kind: " + kind);
    }
    if (!s.annotation_consistent()) {
      throw InvalidInputError("stream annotation contradicts its prefix");
    }
  }
  return s;
}

inline json to_json(const CohSequence& rs) {
  json sets = json::array();
  for (const CohSet& s : rs.sets) {
    std::vector<u64> members;
    for (u64 i = 0; i < s.bits.size(); ++i) {
      if (s.bits[static_cast<std::size_t>(i)]) members.push_back(i);
    }
    json js{{"members", members}};
    switch (s.kind) {
      case CohSet::Kind::FiniteWithin:
        js["annotation"] = json{{"kind", "finite"}, {"exceptions", s.exceptions}};
        break;
      case CohSet::Kind::CofiniteWithin:
        js["annotation"] = json{{"kind", "cofinite"}, {"exceptions", s.exceptions}};
        break;
      default:
        break;
    }
    sets.push_back(js);
  }
  return json{{"type", "coh_sequence"}, {"window", rs.window}, {"sets", sets}};
}

inline CohSequence coh_sequence_from_json(const json& j) {
  CohSequence rs;
  rs.window = j.at("window").get<u64>();
  for (const json& js : j.at("sets")) {
    CohSet s;
    s.bits.assign(static_cast<std::size_t>(rs.window), false);
    for (u64 v : js.at("members").get<std::vector<u64>>()) {
      if (v >= rs.window) throw InvalidInputError("set member outside window");
      s.bits[static_cast<std::size_t>(v)] = true;
    }
    if (js.contains("annotation")) {
      const json& a = js.at("annotation");
      const std::string kind = a.at("kind").get<std::string>();
      s.kind = kind == "finite" ? CohSet::Kind::FiniteWithin
                                : CohSet::Kind::CofiniteWithin;
      s.exceptions = a.at("exceptions").get<std::vector<u64>>();
      if (!s.annotation_consistent()) {
        throw InvalidInputError("cohesive-set annotation contradicts members");
      }
    }
    rs.sets.push_back(std::move(s));
  }
  return rs;
}

inline json to_json(const TreeInstance& t) {
  return json{
      {"type", "tree"},
      {"mode", t.mode == TreeInstance::Mode::Enumeration ? "enumeration"
                                                         : "characteristic"},
      {"alphabet", t.alphabet == TreeInstance::Alphabet::Binary ? "binary"
                                                                : "naturals"},
      {"depth", t.depth},
      {"words", t.words}};
}

inline TreeInstance tree_from_json(const json& j) {
  TreeInstance t;
  t.mode = j.at("mode").get<std::string>() == "enumeration"
               ? TreeInstance::Mode::Enumeration
               : TreeInstance::Mode::CharacteristicFunction;
  t.alphabet = j.at("alphabet").get<std::string>() == "binary"
                   ? TreeInstance::Alphabet::Binary
                   : TreeInstance::Alphabet::Naturals;
  t.depth = j.at("depth").get<u64>();
  t.words = j.at("words").get<std::vector<std::vector<u64>>>();
  if (t.mode == TreeInstance::Mode::CharacteristicFunction && !t.prefix_closed()) {
    throw InvalidInputError("characteristic-function tree must be prefix-closed");
  }
  return t;
}

inline json to_json(const ClosedSetInstance& a) {
  json j{{"type", "closed_set"},
         {"complement_enumeration", a.complement_enumeration}};
  if (a.bound) j["bound"] = *a.bound;
  return j;
}

inline ClosedSetInstance closed_set_from_json(const json& j) {
  ClosedSetInstance a;
  a.complement_enumeration = j.at("complement_enumeration").get<std::vector<u64>>();
  if (j.contains("bound")) a.bound = j.at("bound").get<u64>();
  return a;
}

inline json to_json(const Rational& r) {
  return json::array({r.numerator(), r.denominator()});
}

inline Rational rational_from_json(const json& j) {
  return Rational(j.at(0).get<long long>(), j.at(1).get<long long>());
}

inline json to_json(const IntervalShrink& iv) {
  json lo = json::array(), hi = json::array();
  for (const auto& r : iv.lower) lo.push_back(to_json(r));
  for (const auto& r : iv.upper) hi.push_back(to_json(r));
  return json{{"type", "interval_shrink"}, {"lower", lo}, {"upper", hi}};
}

inline IntervalShrink interval_shrink_from_json(const json& j) {
  IntervalShrink iv;
  for (const json& r : j.at("lower")) iv.lower.push_back(rational_from_json(r));
  for (const json& r : j.at("upper")) iv.upper.push_back(rational_from_json(r));
  if (!iv.well_formed()) {
    throw InvalidInputError("interval sequence violates nesting invariants");
  }
  return iv;
}

// ---------------------------------------------------------------------------
// Operator algebra on JSON instances
// ---------------------------------------------------------------------------

inline json product_instance(const json& a, const json& b) {
  return json{{"type", "product"}, {"components", json::array({a, b})}};
}

inline json coproduct_instance(bool left, const json& x) {
  return json{{"type", "coproduct"}, {"side", left ? "left" : "right"}, {"value", x}};
}

/// A jump instance is a sequence of approximating instances that must be
/// annotated eventually constant: from `stabilizes_at` on, all listed
/// approximations are identical, and that common value is the limit.
inline json jump_instance(const std::vector<json>& approximations, u64 stabilizes_at) {
  if (approximations.empty()) {
    throw InvalidInputError("jump instance needs at least one approximation");
  }
  if (stabilizes_at >= approximations.size()) {
    throw InvalidInputError("jump instance: stabilization index not witnessed");
  }
  const json& limit = approximations.back();
  for (std::size_t i = static_cast<std::size_t>(stabilizes_at);
       i < approximations.size(); ++i) {
    if (approximations[i] != limit) {
      throw InvalidInputError("jump instance: approximations differ beyond the "
                              "claimed stabilization index");
    }
  }
  return json{{"type", "jump"},
              {"approximations", approximations},
              {"stabilizes_at", stabilizes_at},
              {"limit", limit}};
}

inline json parallel_instance(const std::vector<json>& xs) {
  return json{{"type", "parallel"}, {"components", xs}};
}

/// Generic solution checker over the JSON instance algebra.  Structural
/// wrappers delegate componentwise; a coloring instance accepts a HomSet
/// that is homogeneous (and carries an admissible color, if the instance
/// restricts colors).
inline Verdict check_solution(const json& instance, const json& solution) {
  const std::string type = instance.at("type").get<std::string>();
  if (type == "coloring") {
    const Coloring c = coloring_from_json(instance);
    const HomSet m = homset_from_json(solution);
    if (m.elements.size() < c.arity) return Verdict::Fail;
    try {
      if (!check_homogeneous(c, m)) return Verdict::Fail;
      if (!c.color_admissible(resolve_color(c, m))) return Verdict::Fail;
    } catch (const WindowError&) {
      return Verdict::Fail;
    }
    return Verdict::Pass;
  }
  if (type == "product") {
    const auto& comps = instance.at("components");
    const auto& sols = solution.at("components");
    if (sols.size() != comps.size()) return Verdict::Fail;
    Verdict acc = Verdict::Pass;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const Verdict v = check_solution(comps[i], sols[i]);
      if (v == Verdict::Fail) return Verdict::Fail;
      if (v == Verdict::Inconclusive) acc = Verdict::Inconclusive;
    }
    return acc;
  }
  if (type == "parallel") {
    return check_solution(json{{"type", "product"},
                               {"components", instance.at("components")}},
                          solution);
  }
  if (type == "coproduct") {
    if (solution.at("side") != instance.at("side")) return Verdict::Fail;
    return check_solution(instance.at("value"), solution.at("value"));
  }
  if (type == "jump") {
    // The jump instance's true value is its annotated limit.
    return check_solution(instance.at("limit"), solution);
  }
  throw InvalidInputError("no generic checker for instance type: " + type);
}

}  // namespace ramsey
