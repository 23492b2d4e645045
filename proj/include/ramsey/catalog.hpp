// SPDX-License-Identifier: Apache-2.0
//
// Reduction catalog: a store of named degree-theoretic relations with
// provenance anchors, a small inference engine over closure rules
// (reflexivity, transitivity, strong-implies-weak, jump and parallelization
// monotonicity, the cylinder rule), consistency checking of the recorded
// separations against the derivable positives, and DOT export of the shipped
// diagrams.  Degrees are canonical strings; the engine never invents degrees
// beyond one wrapper application (jump, parallelization) per recorded degree.

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsey/errors.hpp"

namespace ramsey {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Data model
// ---------------------------------------------------------------------------

enum class CatRelation {
  LeqW,
  LeqSW,
  EquivW,
  EquivSW,
  StrictW,
  StrictSW,
  NotLeqW,
  NotLeqSW,
  IncomparableW,
  IncomparableSW,
  Open,
};

inline CatRelation cat_relation_from_string(const std::string& s) {
  if (s == "leq_W") return CatRelation::LeqW;
  if (s == "leq_sW") return CatRelation::LeqSW;
  if (s == "equiv_W") return CatRelation::EquivW;
  if (s == "equiv_sW") return CatRelation::EquivSW;
  if (s == "strict_W") return CatRelation::StrictW;
  if (s == "strict_sW") return CatRelation::StrictSW;
  if (s == "not_leq_W") return CatRelation::NotLeqW;
  if (s == "not_leq_sW") return CatRelation::NotLeqSW;
  if (s == "incomparable_W") return CatRelation::IncomparableW;
  if (s == "incomparable_sW") return CatRelation::IncomparableSW;
  if (s == "open") return CatRelation::Open;
  throw InvalidInputError("unknown catalog relation: " + s);
}

inline std::string to_string(CatRelation r) {
  switch (r) {
    case CatRelation::LeqW: return "leq_W";
    case CatRelation::LeqSW: return "leq_sW";
    case CatRelation::EquivW: return "equiv_W";
    case CatRelation::EquivSW: return "equiv_sW";
    case CatRelation::StrictW: return "strict_W";
    case CatRelation::StrictSW: return "strict_sW";
    case CatRelation::NotLeqW: return "not_leq_W";
    case CatRelation::NotLeqSW: return "not_leq_sW";
    case CatRelation::IncomparableW: return "incomparable_W";
    case CatRelation::IncomparableSW: return "incomparable_sW";
    case CatRelation::Open: return "open";
  }
  throw InvalidInputError("unknown catalog relation value");
}

struct CatalogEdge {
  std::string left;
  std::string right;
  CatRelation rel = CatRelation::LeqW;
  std::string anchor;
};

struct FigureEdge {
  std::string from;  // the harder degree; the arrow points at the easier one
  std::string to;
  bool strong = false;  // solid when true, dashed when false
  std::string anchor;
};

struct Figure {
  std::string id;
  std::string note;
  std::vector<std::string> nodes;
  std::vector<std::string> circle;  // nodes boxed as one Weihrauch degree
  std::vector<FigureEdge> edges;
};

struct Catalog {
  std::vector<CatalogEdge> edges;
  // Degrees recorded as cylinders, each with its provenance anchor.
  std::vector<std::pair<std::string, std::string>> cylinders;
  std::vector<Figure> figures;

  static Catalog from_json(const json& j) {
    Catalog c;
    for (const json& e : j.at("edges")) {
      c.edges.push_back(CatalogEdge{
          e.at("left").get<std::string>(), e.at("right").get<std::string>(),
          cat_relation_from_string(e.at("rel").get<std::string>()),
          e.value("anchor", std::string{})});
    }
    for (const json& e : j.value("cylinders", json::array())) {
      c.cylinders.emplace_back(e.at("degree").get<std::string>(),
                               e.value("anchor", std::string{}));
    }
    for (const json& f : j.value("figures", json::array())) {
      Figure fig;
      fig.id = f.at("id").get<std::string>();
      fig.note = f.value("note", std::string{});
      for (const json& n : f.at("nodes")) fig.nodes.push_back(n.get<std::string>());
      for (const json& n : f.value("circle", json::array())) {
        fig.circle.push_back(n.get<std::string>());
      }
      for (const json& e : f.value("edges", json::array())) {
        fig.edges.push_back(FigureEdge{e.at("from").get<std::string>(),
                                       e.at("to").get<std::string>(),
                                       e.value("style", std::string{"weak"}) ==
                                           "strong",
                                       e.value("anchor", std::string{})});
      }
      c.figures.push_back(std::move(fig));
    }
    return c;
  }

  static Catalog load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NotFoundError("cannot open catalog file: " + path);
    json j;
    in >> j;
    return from_json(j);
  }

  static Catalog load_default() {
    return load(std::string(RAMSEY_DATA_DIR) + "/catalog.json");
  }
};

// ---------------------------------------------------------------------------
// Canonical degree strings
// ---------------------------------------------------------------------------

// Canonical form: single spaces around the infix operators ("x", "*", "u"),
// no other whitespace, and nested parallelizations collapsed
// (parallelization is a closure operator, so par(par(X)) = par(X)).
inline std::string canonical_degree(const std::string& raw) {
  // Collapse whitespace runs to single spaces and trim.
  std::string s;
  for (char ch : raw) {
    if (ch == ' ' || ch == '\t') {
      if (!s.empty() && s.back() != ' ') s.push_back(' ');
    } else {
      s.push_back(ch);
    }
  }
  while (!s.empty() && s.back() == ' ') s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  if (s.empty()) throw InvalidInputError("empty degree expression");
  // Collapse par(par(...)) at the outermost level.
  while (s.rfind("par(", 0) == 0 && s.back() == ')') {
    const std::string inner = s.substr(4, s.size() - 5);
    if (inner.rfind("par(", 0) == 0 && inner.back() == ')') {
      s = inner;
    } else {
      break;
    }
  }
  return s;
}

// A degree with no infix operator and no parallelization wrapper; only these
// receive a synthesized jump (appending ' to a compound name would denote the
// jump of the compound, which is not what the jump rule derives).
inline bool atomic_degree(const std::string& s) {
  return s.find(' ') == std::string::npos && s.rfind("par(", 0) != 0;
}

// ---------------------------------------------------------------------------
// Inference engine
// ---------------------------------------------------------------------------

enum class DeriveStatus { Derivable, ContradictsSeparation, Unknown };

struct DeriveResult {
  DeriveStatus status = DeriveStatus::Unknown;
  std::vector<std::string> trace;

  std::string text() const {
    std::string out;
    for (const std::string& line : trace) {
      if (!out.empty()) out += "\n";
      out += line;
    }
    return out;
  }
};

class CatalogEngine {
 public:
  explicit CatalogEngine(Catalog cat) : cat_(std::move(cat)) { build(); }

  // rel must be one of leq_W, leq_sW, equiv_W, equiv_sW, strict_W, strict_sW.
  DeriveResult derive(const std::string& left, const std::string& right,
                      CatRelation rel) const {
    const int l = node(canonical_degree(left));
    const int r = node(canonical_degree(right));
    switch (rel) {
      case CatRelation::LeqW: return derive_leq(l, r, /*strong=*/false);
      case CatRelation::LeqSW: return derive_leq(l, r, /*strong=*/true);
      case CatRelation::EquivW: return derive_equiv(l, r, /*strong=*/false);
      case CatRelation::EquivSW: return derive_equiv(l, r, /*strong=*/true);
      case CatRelation::StrictW: return derive_strict(l, r, /*strong=*/false);
      case CatRelation::StrictSW: return derive_strict(l, r, /*strong=*/true);
      default:
        throw InvalidInputError(
            "derive supports leq, equiv and strict queries only");
    }
  }

  // Query syntax: "A <=W B", "A <=sW B", "A ==W B", "A ==sW B",
  //               "A <W B", "A <sW B".
  DeriveResult derive_query(const std::string& query) const {
    static const std::vector<std::pair<std::string, CatRelation>> ops = {
        {" <=sW ", CatRelation::LeqSW},   {" <=W ", CatRelation::LeqW},
        {" ==sW ", CatRelation::EquivSW}, {" ==W ", CatRelation::EquivW},
        {" <sW ", CatRelation::StrictSW}, {" <W ", CatRelation::StrictW},
    };
    for (const auto& [tok, rel] : ops) {
      const auto pos = query.find(tok);
      if (pos != std::string::npos) {
        return derive(query.substr(0, pos), query.substr(pos + tok.size()), rel);
      }
    }
    throw InvalidInputError(
        "cannot parse query (expected e.g. \"A <=W B\"): " + query);
  }

  // One message per derivable positive that collides with a recorded
  // negative; empty means the catalog is consistent.
  std::vector<std::string> check_consistency() const {
    std::vector<std::string> conflicts;
    for (const Negative& n : negatives_) {
      const auto& reach = n.strong ? sw_ : w_;
      const auto it = reach.find(key(n.from, n.to));
      if (it == reach.end()) continue;
      std::string msg = "conflict: " + nodes_[n.from] +
                        (n.strong ? " <=_sW " : " <=_W ") + nodes_[n.to] +
                        " is derivable but recorded as a separation [" +
                        n.anchor + "]; derivation: ";
      for (const std::string& line : it->second) msg += "\n  " + line;
      conflicts.push_back(std::move(msg));
    }
    return conflicts;
  }

  // Messages for edges, cylinders or figure edges without a provenance
  // anchor; empty for the shipped data.
  std::vector<std::string> lint() const {
    std::vector<std::string> out;
    for (const CatalogEdge& e : cat_.edges) {
      if (e.anchor.empty()) {
        out.push_back("edge without anchor: " + e.left + " " +
                      to_string(e.rel) + " " + e.right);
      }
    }
    for (const auto& [deg, anchor] : cat_.cylinders) {
      if (anchor.empty()) out.push_back("cylinder without anchor: " + deg);
    }
    for (const Figure& f : cat_.figures) {
      for (const FigureEdge& e : f.edges) {
        if (e.anchor.empty()) {
          out.push_back("figure " + f.id + " edge without anchor: " + e.from +
                        " -> " + e.to);
        }
      }
    }
    return out;
  }

  std::string emit_dot(const std::string& figure_id) const {
    for (const Figure& f : cat_.figures) {
      if (f.id == figure_id) return render_dot(f);
    }
    throw NotFoundError("unknown figure id: " + figure_id);
  }

  std::vector<std::string> figure_ids() const {
    std::vector<std::string> out;
    for (const Figure& f : cat_.figures) out.push_back(f.id);
    return out;
  }

  const Catalog& data() const { return cat_; }
  const std::vector<std::string>& degrees() const { return nodes_; }

 private:
  using Trace = std::vector<std::string>;

  struct Negative {
    int from = 0;
    int to = 0;
    bool strong = false;  // true: "from not <=_sW to"; false: at W level
    std::string anchor;
  };

  Catalog cat_;
  std::vector<std::string> nodes_;
  std::map<std::string, int> index_;
  std::map<std::uint64_t, Trace> sw_;  // derivable strong reductions
  std::map<std::uint64_t, Trace> w_;   // derivable weak reductions
  std::vector<Negative> negatives_;
  std::set<int> cylinder_nodes_;
  std::map<int, std::string> cylinder_anchor_;
  std::map<std::uint64_t, std::string> open_;  // recorded open questions
  // Closure bookkeeping (only used during build()).
  std::map<int, std::vector<int>> succ_sw_, succ_w_, pred_sw_, pred_w_;
  std::vector<std::tuple<bool, int, int>> work_;

  std::uint64_t key(int i, int j) const {
    return static_cast<std::uint64_t>(i) * nodes_.size() +
           static_cast<std::uint64_t>(j);
  }

  int node(const std::string& canonical) const {
    const auto it = index_.find(canonical);
    if (it == index_.end()) {
      throw NotFoundError("unrecognized degree name: " + canonical);
    }
    return it->second;
  }

  int intern(const std::string& raw) {
    const std::string s = canonical_degree(raw);
    const auto it = index_.find(s);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(s);
    index_.emplace(s, id);
    return id;
  }

  static std::string rel_text(int, bool strong) {
    return strong ? " <=_sW " : " <=_W ";
  }

  void build() {
    // 1. Collect the degree universe: every degree mentioned by an edge, a
    //    cylinder fact or a figure, plus one wrapper application (jump for
    //    atomic degrees, parallelization) per such degree.
    for (const CatalogEdge& e : cat_.edges) {
      intern(e.left);
      intern(e.right);
    }
    for (const auto& [deg, anchor] : cat_.cylinders) intern(deg);
    for (const Figure& f : cat_.figures) {
      for (const std::string& n : f.nodes) intern(n);
    }
    const std::size_t base = nodes_.size();
    for (std::size_t i = 0; i < base; ++i) {
      const std::string d = nodes_[i];
      if (atomic_degree(d)) intern(d + "'");
      intern("par(" + d + ")");
    }
    for (const auto& [deg, anchor] : cat_.cylinders) {
      const int id = node(canonical_degree(deg));
      cylinder_nodes_.insert(id);
      cylinder_anchor_[id] = anchor;
    }

    // 2. Seed facts from the recorded edges.
    for (const CatalogEdge& e : cat_.edges) {
      const int l = node(canonical_degree(e.left));
      const int r = node(canonical_degree(e.right));
      const std::string line = "recorded: " + nodes_[l] + " " +
                               to_string(e.rel) + " " + nodes_[r] + "  [" +
                               e.anchor + "]";
      switch (e.rel) {
        case CatRelation::LeqW:
          push_fact(false, l, r, {line});
          break;
        case CatRelation::LeqSW:
          push_fact(true, l, r, {line});
          break;
        case CatRelation::EquivW:
          push_fact(false, l, r, {line});
          push_fact(false, r, l, {line});
          break;
        case CatRelation::EquivSW:
          push_fact(true, l, r, {line});
          push_fact(true, r, l, {line});
          break;
        case CatRelation::StrictW:
          push_fact(false, l, r, {line});
          negatives_.push_back({r, l, false, e.anchor});
          break;
        case CatRelation::StrictSW:
          push_fact(true, l, r, {line});
          negatives_.push_back({r, l, true, e.anchor});
          break;
        case CatRelation::NotLeqW:
          negatives_.push_back({l, r, false, e.anchor});
          break;
        case CatRelation::NotLeqSW:
          negatives_.push_back({l, r, true, e.anchor});
          break;
        case CatRelation::IncomparableW:
          negatives_.push_back({l, r, false, e.anchor});
          negatives_.push_back({r, l, false, e.anchor});
          break;
        case CatRelation::IncomparableSW:
          negatives_.push_back({l, r, true, e.anchor});
          negatives_.push_back({r, l, true, e.anchor});
          break;
        case CatRelation::Open:
          open_[key(l, r)] = e.anchor;
          break;
      }
    }

    // 3. Reflexivity and parallelization extensivity.
    const int n = static_cast<int>(nodes_.size());
    for (int i = 0; i < n; ++i) {
      push_fact(/*strong=*/true, i, i, {"reflexivity: " + nodes_[i]});
      const auto it = index_.find(canonical_degree("par(" + nodes_[i] + ")"));
      if (it != index_.end() && it->second != i) {
        push_fact(false, i, it->second,
                  {"rule: parallelization is extensive, " + nodes_[i] +
                   " <=_W " + nodes_[it->second]});
      }
    }

    // 4. Closure rules, worklist style.  Facts are only ever added, so the
    //    loop terminates after at most 2 n^2 insertions.
    while (!work_.empty()) {
      const auto [strong, i, j] = work_.back();
      work_.pop_back();
      const Trace trace = (strong ? sw_ : w_).at(key(i, j));

      // A strong reduction is a weak reduction.
      if (strong) {
        Trace t = trace;
        t.push_back("rule: a strong reduction is a weak reduction");
        push_fact(false, i, j, std::move(t));
      }

      if (i != j) {
        // Jump monotonicity (atomic degrees only; appending ' to a compound
        // expression would misname the derived degree).
        if (strong && atomic_degree(nodes_[i]) && atomic_degree(nodes_[j])) {
          const auto ij = index_.find(nodes_[i] + "'");
          const auto jj = index_.find(nodes_[j] + "'");
          if (ij != index_.end() && jj != index_.end()) {
            Trace t = trace;
            t.push_back("rule: jumps are monotone, " + nodes_[ij->second] +
                        " <=_sW " + nodes_[jj->second]);
            push_fact(true, ij->second, jj->second, std::move(t));
          }
        }
        // Parallelization is monotone at both strengths.
        const auto ip = index_.find(canonical_degree("par(" + nodes_[i] + ")"));
        const auto jp = index_.find(canonical_degree("par(" + nodes_[j] + ")"));
        if (ip != index_.end() && jp != index_.end() &&
            ip->second != jp->second) {
          Trace t = trace;
          t.push_back("rule: parallelization is monotone, " +
                      nodes_[ip->second] + rel_text(0, strong) +
                      nodes_[jp->second]);
          push_fact(strong, ip->second, jp->second, std::move(t));
        }
      }

      // Cylinder rule: g <=_W f implies g <=_sW f when f is a cylinder.
      if (!strong && cylinder_nodes_.count(j)) {
        Trace t = trace;
        t.push_back("rule: " + nodes_[j] + " is a cylinder [" +
                    cylinder_anchor_.at(j) +
                    "], so the weak reduction is strong");
        push_fact(true, i, j, std::move(t));
      }

      // Transitivity: compose with every known fact of the same strength.
      auto& succ = strong ? succ_sw_ : succ_w_;
      auto& pred = strong ? pred_sw_ : pred_w_;
      const auto& reach = strong ? sw_ : w_;
      for (const int k : std::vector<int>(succ[j].begin(), succ[j].end())) {
        if (k == i || k == j) continue;
        if ((strong ? sw_ : w_).count(key(i, k))) continue;
        Trace t = trace;
        const Trace& jk = reach.at(key(j, k));
        t.insert(t.end(), jk.begin(), jk.end());
        t.push_back("rule: transitivity, " + nodes_[i] + rel_text(0, strong) +
                    nodes_[k] + " via " + nodes_[j]);
        push_fact(strong, i, k, std::move(t));
      }
      for (const int h : std::vector<int>(pred[i].begin(), pred[i].end())) {
        if (h == i || h == j) continue;
        if ((strong ? sw_ : w_).count(key(h, j))) continue;
        Trace t = reach.at(key(h, i));
        t.insert(t.end(), trace.begin(), trace.end());
        t.push_back("rule: transitivity, " + nodes_[h] + rel_text(0, strong) +
                    nodes_[j] + " via " + nodes_[i]);
        push_fact(strong, h, j, std::move(t));
      }
    }
  }

  void push_fact(bool strong, int i, int j, Trace trace) {
    auto& reach = strong ? sw_ : w_;
    if (!reach.emplace(key(i, j), std::move(trace)).second) return;
    (strong ? succ_sw_ : succ_w_)[i].push_back(j);
    (strong ? pred_sw_ : pred_w_)[j].push_back(i);
    work_.emplace_back(strong, i, j);
  }

  // A query "l <= r" is blocked when a recorded negative X !<= Y sits across
  // it: X reduces to l and r reduces to Y, so l <= r would lift to X <= Y.
  // A W-level negative blocks strong queries too (strong implies weak).
  const Negative* blocking(int l, int r, bool strong_query,
                           Trace* witness) const {
    // Among all recorded negatives that block the query, report the one with
    // the shortest witness so direct separations win over derived ones.
    const Negative* best = nullptr;
    std::size_t best_size = 0;
    for (const Negative& neg : negatives_) {
      if (neg.strong && !strong_query) continue;
      const auto& reach = neg.strong ? sw_ : w_;
      const auto a = reach.find(key(neg.from, l));
      if (a == reach.end()) continue;
      const auto b = reach.find(key(r, neg.to));
      if (b == reach.end()) continue;
      Trace t;
      t.push_back("separation: " + nodes_[neg.from] +
                  (neg.strong ? " not <=_sW " : " not <=_W ") +
                  nodes_[neg.to] + "  [" + neg.anchor + "]");
      if (neg.from != l) {
        t.push_back("with " + nodes_[neg.from] + rel_text(0, neg.strong) +
                    nodes_[l] + ":");
        t.insert(t.end(), a->second.begin(), a->second.end());
      }
      if (neg.to != r) {
        t.push_back("and " + nodes_[r] + rel_text(0, neg.strong) +
                    nodes_[neg.to] + ":");
        t.insert(t.end(), b->second.begin(), b->second.end());
      }
      if (best == nullptr || t.size() < best_size) {
        best = &neg;
        best_size = t.size();
        *witness = std::move(t);
      }
    }
    return best;
  }

  DeriveResult derive_leq(int l, int r, bool strong) const {
    const auto& reach = strong ? sw_ : w_;
    const auto it = reach.find(key(l, r));
    if (it != reach.end()) {
      return {DeriveStatus::Derivable, dedupe(it->second)};
    }
    Trace witness;
    if (blocking(l, r, strong, &witness) != nullptr) {
      return {DeriveStatus::ContradictsSeparation, dedupe(witness)};
    }
    DeriveResult res{DeriveStatus::Unknown, {}};
    const auto open = open_.find(key(l, r));
    if (open != open_.end()) {
      res.trace.push_back("recorded as an open question [" + open->second + "]");
    }
    return res;
  }

  DeriveResult derive_equiv(int l, int r, bool strong) const {
    const DeriveResult fwd = derive_leq(l, r, strong);
    if (fwd.status == DeriveStatus::ContradictsSeparation) return fwd;
    const DeriveResult bwd = derive_leq(r, l, strong);
    if (bwd.status == DeriveStatus::ContradictsSeparation) return bwd;
    if (fwd.status == DeriveStatus::Derivable &&
        bwd.status == DeriveStatus::Derivable) {
      Trace t = fwd.trace;
      t.insert(t.end(), bwd.trace.begin(), bwd.trace.end());
      return {DeriveStatus::Derivable, dedupe(t)};
    }
    return {DeriveStatus::Unknown, {}};
  }

  DeriveResult derive_strict(int l, int r, bool strong) const {
    const DeriveResult leq = derive_leq(l, r, strong);
    if (leq.status != DeriveStatus::Derivable) return leq;
    // The strict part needs the reverse direction to be blocked.
    Trace witness;
    if (blocking(r, l, strong, &witness) != nullptr) {
      Trace t = leq.trace;
      t.push_back("and the reverse direction is blocked:");
      t.insert(t.end(), witness.begin(), witness.end());
      return {DeriveStatus::Derivable, dedupe(t)};
    }
    return {DeriveStatus::Unknown, {}};
  }

  static Trace dedupe(const Trace& t) {
    Trace out;
    std::set<std::string> seen;
    for (const std::string& line : t) {
      if (seen.insert(line).second) out.push_back(line);
    }
    return out;
  }

  std::string render_dot(const Figure& f) const {
    std::ostringstream out;
    out << "digraph " << f.id << " {\n";
    if (!f.note.empty()) out << "  // " << f.note << "\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"Helvetica\"];\n";
    std::set<std::string> circled(f.circle.begin(), f.circle.end());
    if (!f.circle.empty()) {
      out << "  subgraph cluster_degree {\n";
      out << "    label=\"single Weihrauch degree\";\n";
      out << "    style=rounded;\n";
      for (const std::string& n : f.circle) out << "    \"" << n << "\";\n";
      out << "  }\n";
    }
    for (const std::string& n : f.nodes) {
      if (!circled.count(n)) out << "  \"" << n << "\";\n";
    }
    for (const FigureEdge& e : f.edges) {
      out << "  \"" << e.from << "\" -> \"" << e.to << "\" [style="
          << (e.strong ? "solid" : "dashed") << ", tooltip=\"" << e.anchor
          << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }
};

}  // namespace ramsey
