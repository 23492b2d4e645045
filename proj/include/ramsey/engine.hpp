// SPDX-License-Identifier: Apache-2.0
//
// Brute-force combinatorial core: deterministic homogeneous-set search with
// color-consistency pruning, the exhaustive oracle used by the verifier,
// window sizing via classical Ramsey-number upper bounds, and the product
// coloring that merges finitely many colorings into one.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/problems.hpp"

namespace ramsey {

namespace detail {

/// Colors of all new arity-n subsets created by appending `e` to `cur`
/// (i.e. the (n-1)-subsets of cur, each extended by e).  Returns false and
/// leaves `color` untouched on any disagreement with the committed color.
inline bool extension_consistent(const Coloring& c, const std::vector<u64>& cur,
                                 u64 e, std::optional<u64>& color) {
  if (cur.size() + 1 < c.arity) return true;  // no complete subset yet
  bool ok = true;
  std::optional<u64> local = color;
  for_each_subset(cur.size(), c.arity - 1, [&](const std::vector<u64>& idx) {
    if (!ok) return;
    std::vector<u64> subset;
    subset.reserve(c.arity);
    for (u64 i : idx) subset.push_back(cur[static_cast<std::size_t>(i)]);
    subset.push_back(e);
    const u64 col = c.at(subset);
    if (!local)

      local = col;
    else if (col != *local)
      ok = false;
  });
  if (ok) color = local;
  return ok;
}

inline bool dfs_homogeneous(const Coloring& c, u64 size, std::vector<u64>& cur,
                            std::optional<u64> color, u64 next) {
  if (cur.size() == size) return true;
  for (u64 e = next; e < c.window; ++e) {
    // Not enough room left to finish from here.
    if (c.window - e < size - cur.size()) break;
    std::optional<u64> col = color;
    if (!extension_consistent(c, cur, e, col)) continue;
    cur.push_back(e);
    if (dfs_homogeneous(c, size, cur, col, e + 1)) return true;
    cur.pop_back();
  }
  return false;
}

inline u64 checked_pow(u64 base, u64 exp) {
  if (base == 0) return exp == 0 ? 1 : 0;
  if (base == 1) return 1;
  if (exp >= 64) {
    throw OverflowError("power exceeds 64-bit range");
  }
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

/// Classical upper bound for 2-dimensional Ramsey numbers with per-color
/// target sizes, via R(s_1..s_k) <= 2 - k + sum_i R(..s_i - 1..) and the
/// exact bases R(2, rest) = max(2, R(rest)).  Memoized on the sorted vector.
inline u64 r2_bound(std::vector<u64> sizes,
                    std::map<std::vector<u64>, u64>& memo) {
  std::sort(sizes.begin(), sizes.end());
  for (u64 s : sizes) {
    if (s <= 1) return 1;
  }
  if (sizes.empty()) return 1;
  if (sizes.size() == 1) return sizes[0];
  auto it = memo.find(sizes);
  if (it != memo.end()) return it->second;
  u64 result;
  if (sizes[0] == 2) {
    std::vector<u64> rest(sizes.begin() + 1, sizes.end());
    result = std::max<u64>(2, r2_bound(rest, memo));
  } else {
    u64 sum = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      std::vector<u64> reduced = sizes;
      reduced[i] -= 1;
      sum = checked_add(sum, r2_bound(reduced, memo));
    }
    // sum >= 2k - ... ; the formula 2 - k + sum never underflows here
    // because each summand is >= 2 when all sizes are >= 3.
    result = sum + 2 - static_cast<u64>(sizes.size());
  }
  memo[sizes] = result;
  return result;
}

}  // namespace detail

/// Lexicographically least homogeneous element-list of the requested size,
/// found by depth-first extension with color-consistency pruning.
/// Deterministic; throws NotFoundError when the window has no such set.
inline HomSet solve_homogeneous(const Coloring& c, u64 size) {
  if (size < c.arity) {
    throw InvalidInputError("requested size below the coloring's arity");
  }
  std::vector<u64> cur;
  cur.reserve(static_cast<std::size_t>(size));
  if (size > c.window ||
      !detail::dfs_homogeneous(c, size, cur, std::nullopt, 0)) {
    throw NotFoundError("no homogeneous set of size " + std::to_string(size) +
                        " in window " + std::to_string(c.window));
  }
  HomSet m;
  m.elements = cur;
  m.color = resolve_color(c, HomSet{cur, 0, false});
  return m;
}

/// Complete, lexicographically ordered list of homogeneous sets of exactly
/// the given size.  Guarded by an enumeration budget on binomial(window, size).
inline std::vector<HomSet> all_homogeneous(const Coloring& c, u64 size,
                                           u64 budget = 2'000'000) {
  if (size < c.arity) {
    throw InvalidInputError("requested size below the coloring's arity");
  }
  if (binomial(c.window, size) > budget) {
    throw BudgetError("enumeration budget exceeded: C(" +
                      std::to_string(c.window) + "," + std::to_string(size) +
                      ") > " + std::to_string(budget));
  }
  std::vector<HomSet> out;
  for_each_subset(c.window, size, [&](const std::vector<u64>& s) {
    HomSet m{s, 0, false};
    try {
      if (check_homogeneous(c, m)) {
        m.color = resolve_color(c, m);
        m.has_color = true;
        out.push_back(std::move(m));
      }
    } catch (const WindowError&) {
      // unreachable: enumeration stays inside the window
    }
  });
  return out;
}

/// A window W such that every k-coloring of the n-subsets of {0..W-1} has a
/// homogeneous set of the requested size.  n = 1 is the exact pigeonhole
/// value; n = 2 uses the classical recursion (exact at tiny sizes, e.g. 6
/// for k = 2, size 3); n >= 3 applies the standard stepping-up argument
/// W = (m + 1) * k^binomial(m, n) with m the bound one dimension lower.
/// Documented as an upper bound, not an exact Ramsey number.
inline u64 ramsey_window_bound(u64 n, u64 k, u64 size) {
  if (n == 0 || k == 0 || size == 0) {
    throw InvalidInputError("ramsey_window_bound requires n, k, size >= 1");
  }
  if (size < n) return n;  // any n elements host no complete subset demand
  if (n == 1) {
    return detail::checked_add(detail::checked_mul(k, size - 1), 1);
  }
  if (n == 2) {
    std::map<std::vector<u64>, u64> memo;
    std::vector<u64> sizes(static_cast<std::size_t>(k), size);
    return detail::r2_bound(sizes, memo);
  }
  const u64 m = ramsey_window_bound(n - 1, k, size);
  return detail::checked_mul(detail::checked_add(m, 1),
                             detail::checked_pow(k, binomial(m, n)));
}

/// Merge colorings of equal arity and window into one coloring whose
/// homogeneous sets are homogeneous for every component.  With m finite
/// ranges of equal size k, the combined color is the base-k numeral with
/// the first coloring as the most significant digit; unbounded ranges are
/// combined by iterated Cantor tupling instead.  Stability annotations are
/// carried through: the combined limit is the digit/tuple image of the
/// component limits.
inline Coloring build_product_coloring(const std::vector<Coloring>& cs) {
  if (cs.empty()) {
    throw InvalidInputError("product of zero colorings is undefined");
  }
  if (cs.size() == 1) return cs[0];
  const u64 arity = cs[0].arity;
  const u64 window = cs[0].window;
  const bool unbounded = cs[0].colors.unbounded;
  for (const Coloring& c : cs) {
    if (c.arity != arity || c.window != window) {
      throw InvalidInputError("product components must share arity and window");
    }
    if (c.colors.unbounded != unbounded ||
        (!unbounded && c.colors.value != cs[0].colors.value)) {
      throw InvalidInputError("product components must share their color range");
    }
  }
  const u64 k = cs[0].colors.value;
  const auto combine = [&](const std::vector<u64>& vals) -> u64 {
    if (unbounded) return tuple(vals);
    u64 acc = 0;
    for (u64 v : vals) acc = detail::checked_add(detail::checked_mul(acc, k), v);
    return acc;
  };

  Coloring out;
  out.arity = arity;
  out.window = window;
  if (unbounded) {
    out.colors.unbounded = true;
  } else {
    out.colors.unbounded = false;
    out.colors.value = detail::checked_pow(k, cs.size());
  }
  out.table.resize(cs[0].table.size());
  for (std::size_t idx = 0; idx < out.table.size(); ++idx) {
    std::vector<u64> vals;
    vals.reserve(cs.size());
    for (const Coloring& c : cs) vals.push_back(c.table[idx]);
    out.table[idx] = combine(vals);
  }
  if (unbounded) {
    out.colors.value = out.table.empty()
                           ? 0
                           : *std::max_element(out.table.begin(), out.table.end());
  }

  bool all_annotated = true;
  for (const Coloring& c : cs) {
    if (!c.annotation) all_annotated = false;
  }
  if (all_annotated) {
    StableAnnotation sa;
    sa.horizon = 0;
    for (const Coloring& c : cs) {
      sa.horizon = std::max(sa.horizon, c.annotation->horizon);
    }
    sa.limit.resize(cs[0].annotation->limit.size());
    for (std::size_t idx = 0; idx < sa.limit.size(); ++idx) {
      std::vector<u64> vals;
      vals.reserve(cs.size());
      for (const Coloring& c : cs) vals.push_back(c.annotation->limit[idx]);
      sa.limit[idx] = combine(vals);
    }
    out.annotation = sa;
  }
  return out;
}

}  // namespace ramsey
