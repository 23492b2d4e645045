// SPDX-License-Identifier: Apache-2.0
//
// The executable reductions: each construction maps a source-problem
// instance to a target-problem instance (the K transform); the matching
// solution transforms (H) live next to them.  All functions are pure.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/encodings.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/problems.hpp"
#include "ramsey/stream.hpp"

namespace ramsey {

// ---------------------------------------------------------------------------
// Lower-bound coloring: from a stream p (read as an n-fold interleaved
// array) build the 2-coloring c{i_0 < ... < i_{n-1}} := p<i_{n-1},...,i_0>.
// The color of any homogeneous set is then a valid cluster-point answer for
// the iterated-limit sequence q hidden in p.
// ---------------------------------------------------------------------------

inline Coloring lower_bound_coloring(const Stream& p, u64 n, u64 window) {
  if (n < 1) throw InvalidInputError("arity must be >= 1");
  return Coloring::from_function(
      n, ColorSpace{false, 2}, window, [&](const std::vector<u64>& s) {
        std::vector<u64> rev(s.rbegin(), s.rend());
        const u64 v = p.at(tuple(rev));
        if (v >= 2) {
          throw InvalidInputError("lower-bound stream must be 2-valued");
        }
        return v;
      });
}

// ---------------------------------------------------------------------------
// Color increase: c+(A) := c2(A) if A is homogeneous for c1, else k.
// Any homogeneous set of c+ with color < k is simultaneously homogeneous for
// c1 (as a set) and for c2 (with the same color); color k cannot occur on a
// genuine (infinitely extendable) solution, so it is marked inadmissible.
// ---------------------------------------------------------------------------

inline Coloring plus_coloring(const Coloring& c1, const Coloring& c2) {
  if (c1.window != c2.window) throw InvalidInputError("window mismatch");
  if (c2.arity != c1.arity + 1) {
    throw InvalidInputError("second coloring must have arity n+1");
  }
  if (c2.colors.unbounded) {
    throw InvalidInputError("second coloring must have a finite color range");
  }
  const u64 k = c2.colors.value;
  Coloring out = Coloring::from_function(
      c2.arity, ColorSpace{false, k + 1}, c2.window,
      [&](const std::vector<u64>& a) {
        return check_homogeneous(c1, HomSet{a, 0, false}) ? c2.at(a) : k;
      });
  for (u64 j = 0; j < k; ++j) out.admissible_colors.push_back(j);
  return out;
}

// ---------------------------------------------------------------------------
// Delayed parallelization: given a sequence (c_i) of arity-n colorings,
// build the arity-(n+2) 2-coloring c({m} u A) := 0 iff A is homogeneous for
// the product d_m of c_0..c_{m-1} (components beyond the list are constant
// and never constrain).  Only color 0 can occur on genuine solutions.
// ---------------------------------------------------------------------------

inline Coloring delayed_parallelization(const std::vector<Coloring>& cs) {
  if (cs.empty()) throw InvalidInputError("need at least one component");
  const u64 n = cs[0].arity;
  const u64 window = cs[0].window;
  for (const Coloring& c : cs) {
    if (c.arity != n || c.window != window) {
      throw InvalidInputError("components must share arity and window");
    }
  }
  if (window <= n + 2) {
    throw WindowError("window too small to host the m < min(A) structure");
  }
  // d_m for 1 <= m <= window-1; d_m depends only on min(m, #components).
  std::vector<Coloring> d;  // d[m-1] = product of c_0..c_{min(m,len)-1}
  for (u64 m = 1; m < window; ++m) {
    const u64 take = std::min<u64>(m, cs.size());
    d.push_back(build_product_coloring(
        std::vector<Coloring>(cs.begin(), cs.begin() + static_cast<long>(take))));
  }
  Coloring out = Coloring::from_function(
      n + 2, ColorSpace{false, 2}, window, [&](const std::vector<u64>& s) -> u64 {
        const u64 m = s[0];
        const std::vector<u64> a(s.begin() + 1, s.end());
        if (m == 0) return 0;  // empty product: everything homogeneous
        return check_homogeneous(d[static_cast<std::size_t>(m - 1)],
                                 HomSet{a, 0, false})
                   ? 0
                   : 1;
      });
  out.admissible_colors = {0};
  return out;
}

/// Solution side of delayed parallelization: the tail of M above the first
/// element of M that exceeds i is homogeneous for component c_i.
inline std::vector<u64> delayed_parallelization_tail(const std::vector<u64>& m_elems,
                                                     u64 i) {
  auto it = std::upper_bound(m_elems.begin(), m_elems.end(), i);
  if (it == m_elems.end()) {
    throw WindowExhaustedError("solution has no element above component index");
  }
  return std::vector<u64>(it + 1, m_elems.end());
}

// ---------------------------------------------------------------------------
// Jump coloring: from approximations (c_i) converging to c_inf build the
// stable arity-(n+1) coloring c(A u {i}) := c_i(A) (values >= k replaced by
// 0), whose limit is c_inf.
// ---------------------------------------------------------------------------

inline Coloring jump_coloring(const std::vector<Coloring>& cs, u64 stabilizes_at,
                              u64 k) {
  if (cs.empty()) throw InvalidInputError("need at least one approximation");
  if (stabilizes_at >= cs.size()) {
    throw InvalidInputError("stabilization index not witnessed by the sequence");
  }
  const u64 n = cs[0].arity;
  const u64 window = cs[0].window;
  for (std::size_t i = static_cast<std::size_t>(stabilizes_at); i < cs.size(); ++i) {
    if (cs[i].table != cs.back().table) {
      throw InvalidInputError("approximations differ beyond the claimed "
                              "stabilization index");
    }
  }
  const auto clamped = [&](const Coloring& c, const std::vector<u64>& a) -> u64 {
    const u64 v = c.at(a);
    return v >= k ? 0 : v;
  };
  Coloring out = Coloring::from_function(
      n + 1, ColorSpace{false, k}, window, [&](const std::vector<u64>& s) {
        const u64 i = s.back();
        const std::vector<u64> a(s.begin(), s.end() - 1);
        const Coloring& ci =
            i < cs.size() ? cs[static_cast<std::size_t>(i)] : cs.back();
        return clamped(ci, a);
      });
  StableAnnotation sa;
  sa.horizon = stabilizes_at;
  for (u64 rank : subset_ranks(window, n)) {
    const std::vector<u64> a = theta_decode(rank, n);
    sa.limit.push_back(a.back() + 1 < window ? clamped(cs.back(), a) : 0);
  }
  out.annotation = sa;
  return out;
}

// ---------------------------------------------------------------------------
// Stable coloring -> approximating sequence: c_i(A) := c(A u {i}) when
// i > max(A), 0 otherwise.  Converges componentwise to the annotated limit.
// ---------------------------------------------------------------------------

inline std::vector<Coloring> stable_to_sequence(const Coloring& c) {
  if (!c.annotation) {
    throw InvalidInputError("stable_to_sequence requires a stability annotation");
  }
  const u64 n = c.arity - 1;
  if (n < 1) throw InvalidInputError("coloring arity must be >= 2");
  std::vector<Coloring> out;
  for (u64 i = 0; i < c.window; ++i) {
    out.push_back(Coloring::from_function(
        n, c.colors, c.window, [&](const std::vector<u64>& a) -> u64 {
          if (i <= a.back()) return 0;
          std::vector<u64> s = a;
          s.push_back(i);
          return c.at(s);
        }));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homogeneous-set growth: from a solution for the limit coloring, grow a
// homogeneous set for the stable coloring itself.  Growth stays inside the
// given limit-homogeneous set (the candidate pool of the construction) and
// always appends the least usable element, so results are deterministic.
// ---------------------------------------------------------------------------

inline HomSet grow_homogeneous(const Coloring& c, const HomSet& m_inf,
                               u64 target_size) {
  if (!c.annotation) {
    throw InvalidInputError("grow_homogeneous requires a stability annotation");
  }
  const u64 n = c.arity - 1;
  if (m_inf.elements.size() < n) {
    throw InvalidInputError("limit solution smaller than arity n");
  }
  if (target_size < c.arity) {
    throw InvalidInputError("target size below the coloring's arity");
  }
  const u64 x = m_inf.color;
  std::vector<u64> m(m_inf.elements.begin(),
                     m_inf.elements.begin() + static_cast<long>(n));
  while (m.size() < target_size) {
    std::optional<u64> found;
    for (u64 cand : m_inf.elements) {
      if (cand <= m.back() || cand >= c.window) continue;
      bool ok = true;
      for_each_subset(m.size(), n, [&](const std::vector<u64>& idx) {
        if (!ok) return;
        std::vector<u64> s;
        for (u64 i : idx) s.push_back(m[static_cast<std::size_t>(i)]);
        s.push_back(cand);
        if (c.at(s) != x) ok = false;
      });
      if (ok) {
        found = cand;
        break;
      }
    }
    if (!found) {
      throw WindowExhaustedError(
          "window exhausted before target size: stabilization demands exceed "
          "the window");
    }
    m.push_back(*found);
  }
  return HomSet{m, x, true};
}

// ---------------------------------------------------------------------------
// Cohesive sets from a coloring: R_<i,j> := { r > max theta_{n-1}(i) :
// c(theta_{n-1}(i) u {r}) = j }.  Sets are listed in increasing pair-code
// order over valid (i, j); (co)finiteness annotations are derived from the
// coloring's stability annotation when present.
// ---------------------------------------------------------------------------

inline CohSequence coh_sets_from_coloring(const Coloring& c) {
  if (c.arity < 2) throw InvalidInputError("needs arity >= 2");
  if (c.window < 2) throw InvalidInputError("needs window >= 2");
  const u64 n1 = c.arity - 1;
  const u64 k = c.colors.unbounded ? c.colors.value + 1 : c.colors.value;
  CohSequence rs;
  rs.window = c.window;
  for (u64 rank : subset_ranks(c.window, n1)) {
    const std::vector<u64> a = theta_decode(rank, n1);
    if (a.back() + 1 >= c.window) continue;  // no room for any r
    for (u64 j = 0; j < k; ++j) {
      CohSet s;
      s.bits.assign(static_cast<std::size_t>(c.window), false);
      for (u64 r = a.back() + 1; r < c.window; ++r) {
        std::vector<u64> sub = a;
        sub.push_back(r);
        if (c.at(sub) == j) s.bits[static_cast<std::size_t>(r)] = true;
      }
      if (c.annotation && a.back() + 1 < c.window) {
        const u64 lim = c.limit_at(a);
        s.kind = (j == lim) ? CohSet::Kind::CofiniteWithin
                            : CohSet::Kind::FiniteWithin;
        for (u64 r = 0; r < c.window; ++r) {
          const bool in = s.bits[static_cast<std::size_t>(r)];
          if ((s.kind == CohSet::Kind::FiniteWithin && in) ||
              (s.kind == CohSet::Kind::CofiniteWithin && !in)) {
            s.exceptions.push_back(r);
          }
        }
      }
      rs.sets.push_back(std::move(s));
    }
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Transport along an increasing list sigma: c_sigma(A) := c(sigma(A)).
// ---------------------------------------------------------------------------

inline Coloring transport_coloring(const Coloring& c, const std::vector<u64>& sigma) {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] >= c.window) throw WindowError("sigma image outside window");
    if (i > 0 && sigma[i] <= sigma[i - 1]) {
      throw InvalidInputError("sigma must be strictly increasing");
    }
  }
  if (sigma.size() < c.arity) {
    throw InvalidInputError("sigma too short for the coloring's arity");
  }
  return Coloring::from_function(
      c.arity, c.colors, sigma.size(), [&](const std::vector<u64>& a) {
        std::vector<u64> img;
        img.reserve(a.size());
        for (u64 i : a) img.push_back(sigma[static_cast<std::size_t>(i)]);
        return c.at(img);
      });
}

/// Pointwise image sigma(M) of a transported solution.
inline std::vector<u64> transport_solution(const std::vector<u64>& sigma,
                                           const std::vector<u64>& m_sigma) {
  std::vector<u64> out;
  out.reserve(m_sigma.size());
  for (u64 i : m_sigma) {
    if (i >= sigma.size()) throw WindowError("solution index outside sigma");
    out.push_back(sigma[static_cast<std::size_t>(i)]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cohesiveness from Ramsey: interleave the given sets with singletons,
// S_{2i} := R_i and S_{2i+1} := {i}; with d(i,j) := min{ k : X_{S_k}(i) !=
// X_{S_k}(j) } (total thanks to the singletons), color c{i<j} := 0 iff
// i is in S_{d(i,j)}.  Any homogeneous set is cohesive; H is the identity.
// ---------------------------------------------------------------------------

inline Coloring coh_to_rt22(const CohSequence& rs) {
  if (rs.window < 2) throw InvalidInputError("needs window >= 2");
  const auto member = [&](u64 level, u64 x) -> bool {
    if (level % 2 == 1) return x == level / 2;  // singleton S_{2i+1} = {i}
    const u64 i = level / 2;
    if (i >= rs.sets.size()) return false;  // sets beyond the list are empty
    return rs.sets[static_cast<std::size_t>(i)].bits[static_cast<std::size_t>(x)];
  };
  return Coloring::from_function(
      2, ColorSpace{false, 2}, rs.window, [&](const std::vector<u64>& s) -> u64 {
        const u64 i = s[0], j = s[1];
        for (u64 level = 0;; ++level) {
          const bool mi = member(level, i), mj = member(level, j);
          if (mi != mj) return mi ? 0 : 1;
          // The singleton level 2*i+1 always separates i from j.
        }
      });
}

// ---------------------------------------------------------------------------
// Tree constructions (Koenig's lemma family)
// ---------------------------------------------------------------------------

/// Enumerated tree -> sequence of streams x_n := w_n padded with zeros.
inline std::vector<Stream> enum_tree_to_sequence(const TreeInstance& t) {
  if (t.mode != TreeInstance::Mode::Enumeration) {
    throw InvalidInputError("expects an enumerated tree");
  }
  std::vector<Stream> out;
  for (const auto& w : t.words) {
    Stream s;
    s.prefix = w;
    s.behavior = Stream::Behavior::EventuallyConstant;
    s.value = 0;
    s.from_index = w.size();
    out.push_back(std::move(s));
  }
  return out;
}

/// Sequence of streams -> enumerated tree whose deep words track the cluster
/// points: stage n extends the longest already-enumerated prefix of x_n by
/// one symbol (up to max_depth).  Streams must supply max_depth entries.
inline TreeInstance sequence_to_cluster_tree(const std::vector<Stream>& xs,
                                             u64 max_depth) {
  TreeInstance t;
  t.mode = TreeInstance::Mode::Enumeration;
  t.alphabet = TreeInstance::Alphabet::Naturals;
  t.depth = max_depth;
  t.words.push_back({});  // the empty word is always in the tree
  for (const Stream& x : xs) {
    // Longest enumerated prefix of x.
    std::size_t best = 0;
    for (const auto& w : t.words) {
      bool is_prefix = true;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (x.at(i) != w[i]) {
          is_prefix = false;
          break;
        }
      }
      if (is_prefix) best = std::max(best, w.size());
    }
    if (best >= max_depth) continue;  // already at depth cap
    std::vector<u64> next;
    next.reserve(best + 1);
    for (std::size_t i = 0; i <= best; ++i) next.push_back(x.at(i));
    if (!t.contains(next)) t.words.push_back(std::move(next));
  }
  return t;
}

/// Enumerated tree -> characteristic-function tree S over pair-coded symbols
/// with pr1 of the infinite paths of S equal to the paths of the input:
/// stage n adds u_{w_n, v} = <w_n(0),v(0)>...<w_n(k-1),v(k-1)> (with v the
/// lexicographically smallest witness whose word is still undecided) and all
/// its prefixes, then rejects every undecided word of length <= n over
/// symbols <= n.  Only the accepted words are materialized; rejection is
/// tracked implicitly through each word's first deciding stage.
inline TreeInstance kl_plus_to_kl(const TreeInstance& t) {
  if (t.mode != TreeInstance::Mode::Enumeration) {
    throw InvalidInputError("expects an enumerated tree");
  }
  // accepted[word] = stage at which the word entered S.
  std::map<std::vector<u64>, u64> accepted;
  accepted[{}] = 0;

  // A word is decided-out before stage n iff its first deciding stage
  // m0 = max(|w|, max symbol) is < n and it was not accepted by stage m0.
  const auto out_before = [&](const std::vector<u64>& w, u64 n) -> bool {
    if (w.empty()) return false;
    u64 m0 = w.size();
    for (u64 sym : w) m0 = std::max(m0, sym);
    if (m0 >= n) return false;
    auto it = accepted.find(w);
    return it == accepted.end() || it->second > m0;
  };

  u64 max_depth = 0;
  for (u64 n = 0; n < t.words.size(); ++n) {
    const auto& w = t.words[static_cast<std::size_t>(n)];
    max_depth = std::max<u64>(max_depth, w.size());
    // Choose v greedily: at each position the smallest symbol whose
    // pair-coded prefix is not yet decided out.  Large symbols always
    // escape the (finite) decided-out region, so greedy = lex smallest.
    std::vector<u64> u;
    bool stuck = false;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      bool placed = false;
      for (u64 a = 0; a <= n + w.size() + 2 && !placed; ++a) {
        u.push_back(pair(w[pos], a));
        if (!out_before(u, n)) {
          placed = true;
        } else {
          u.pop_back();
        }
      }
      if (!placed) {
        stuck = true;  // cannot happen: the search range exceeds the cutoff
        break;
      }
    }
    if (stuck) continue;
    for (std::size_t l = 1; l <= u.size(); ++l) {
      std::vector<u64> p(u.begin(), u.begin() + static_cast<long>(l));
      accepted.emplace(p, n);
    }
  }

  TreeInstance s;
  s.mode = TreeInstance::Mode::CharacteristicFunction;
  s.alphabet = TreeInstance::Alphabet::Naturals;
  s.depth = max_depth;
  for (const auto& [word, stage] : accepted) s.words.push_back(word);
  return s;
}

/// pr1: project a pair-coded word back through its first components.
inline std::vector<u64> pr1(const std::vector<u64>& coded) {
  std::vector<u64> out;
  out.reserve(coded.size());
  for (u64 sym : coded) out.push_back(unpair(sym).first);
  return out;
}

// ---------------------------------------------------------------------------
// Interval shrinking -> cluster point on N.  The emitted code sequence uses
// 0 as the "gap halved again" signal; a nonzero code 1 + pair(num, den)
// names the rational num/den (lowest terms) strictly between the current
// endpoints, reused for as long as it stays valid.
// ---------------------------------------------------------------------------

inline u64 rational_code(const Rational& q) {
  return detail::checked_add(
      1, pair(static_cast<u64>(q.numerator()), static_cast<u64>(q.denominator())));
}

inline Rational rational_decode(u64 code) {
  if (code == 0) throw InvalidInputError("code 0 carries no rational");
  auto [num, den] = unpair(code - 1);
  if (den == 0) throw InvalidInputError("invalid rational code");
  return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

inline Stream ivt_to_cluster(const IntervalShrink& iv) {
  if (!iv.well_formed()) {
    throw InvalidInputError("interval sequence violates nesting invariants");
  }
  Stream out;
  u64 k = 0;
  std::optional<Rational> current;
  for (std::size_t n = 0; n < iv.lower.size(); ++n) {
    const Rational a = iv.lower[n], b = iv.upper[n];
    const Rational gap = b - a;
    const Rational threshold(1, 1LL << std::min<u64>(k + 1, 62));
    if (gap < threshold) {
      out.prefix.push_back(0);
      ++k;
      continue;
    }
    if (!current || !(a < *current && *current < b)) {
      current = a + gap / 2;
    }
    out.prefix.push_back(rational_code(*current));
  }
  return out;
}

/// Decode a cluster-point answer for ivt_to_cluster: code 0 means the
/// intervals collapse, so the limit is recovered from the inputs (any point
/// of the final interval is within every listed precision; the midpoint is
/// used); a nonzero code names the rational directly.
inline Rational ivt_decode(const IntervalShrink& iv, u64 code) {
  if (code == 0) {
    return iv.lower.back() + (iv.upper.back() - iv.lower.back()) / 2;
  }
  return rational_decode(code);
}

// ---------------------------------------------------------------------------
// min via choice: enumerate the complement of a closed set stagewise so
// that the surviving pair codes <n, m> (within the decided region) all
// decode to m = min(N \ range(p)); H is the second unpair component.
// ---------------------------------------------------------------------------

inline ClosedSetInstance min_via_choice_instance(const Stream& p) {
  ClosedSetInstance out;
  std::vector<bool> seen;
  const u64 stages = p.prefix.size();
  for (u64 i = 0; i < stages; ++i) {
    const u64 v = p.prefix[static_cast<std::size_t>(i)];
    if (v >= seen.size()) seen.resize(static_cast<std::size_t>(v) + 1, false);
    seen[static_cast<std::size_t>(v)] = true;
    u64 ki = 0;
    while (ki < seen.size() && seen[static_cast<std::size_t>(ki)]) ++ki;
    for (u64 n = 0; n <= i; ++n) {
      for (u64 m = 0; m <= i; ++m) {
        if (m == ki) continue;
        const u64 code = pair(n, m);
        if (!out.removed(code)) out.complement_enumeration.push_back(code);
      }
    }
  }
  return out;
}

/// Surviving pair codes of the decided region after `stages` stages.
inline std::vector<u64> min_via_choice_survivors(const ClosedSetInstance& a,
                                                 u64 stages) {
  std::vector<u64> out;
  if (stages == 0) return out;
  for (u64 n = 0; n < stages; ++n) {
    for (u64 m = 0; m < stages; ++m) {
      const u64 code = pair(n, m);
      if (!a.removed(code)) out.push_back(code);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ramsey
