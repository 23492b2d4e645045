// SPDX-License-Identifier: Apache-2.0
//
// Colorings of n-element subsets of a finite window {0..W-1}, addressed via
// the theta_n rank encoding, plus homogeneous-set values and the JSON wire
// format.  A coloring's table lists one color per n-subset of the window, in
// ascending theta_n rank order; that order is part of the file format.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsey/encodings.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

using json = nlohmann::json;

/// Checked binomial coefficient.
inline u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  u64 r = 1;
  for (u64 i = 1; i <= k; ++i) {
    // r * (n-k+i) always divides by i at this point.
    r = detail::checked_mul(r, n - k + i) / i;
  }
  return r;
}

/// Visit all strictly increasing k-subsets of {0..window-1} in
/// lexicographic order of their element lists.
inline void for_each_subset(u64 window, u64 k,
                            const std::function<void(const std::vector<u64>&)>& fn) {
  if (k == 0) {
    std::vector<u64> empty;
    fn(empty);
    return;
  }
  if (k > window) return;
  std::vector<u64> cur(static_cast<std::size_t>(k));
  for (u64 i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(cur);
    // Advance to the next combination in lex order: bump the rightmost
    // position that has headroom (position i tops out at window - k + i).
    std::size_t i = cur.size();
    bool advanced = false;
    while (i-- > 0) {
      if (cur[i] < window - k + i) {
        ++cur[i];
        for (std::size_t j = i + 1; j < cur.size(); ++j) cur[j] = cur[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

/// The ascending list of theta_n ranks of all n-subsets of {0..window-1}.
/// For n = 0 the single "empty subset" is represented by rank 0.
inline std::vector<u64> subset_ranks(u64 window, u64 n) {
  std::vector<u64> ranks;
  if (n == 0) {
    ranks.push_back(0);
    return ranks;
  }
  ranks.reserve(static_cast<std::size_t>(binomial(window, n)));
  for_each_subset(window, n, [&](const std::vector<u64>& s) {
    ranks.push_back(theta_encode(s));
  });
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

/// Color range: either exactly k colors {0..k-1}, or "unbounded" (range N in
/// principle) with an explicit bound kept as file-format metadata only.
struct ColorSpace {
  bool unbounded = false;
  u64 value = 2;  ///< color count when finite, range bound when unbounded

  bool admits(u64 color) const { return unbounded ? color <= value : color < value; }
};

/// Ground-truth limit structure of a stable coloring: for every (n-1)-subset
/// A, lim_i c(A u {i}) exists and equals the entry of `limit` at A's rank
/// position; the table agrees with the limit for all i >= horizon.  By
/// convention, limit entries for subsets containing window-1 (which no
/// in-window extension can probe) are 0.
struct StableAnnotation {
  u64 horizon = 0;
  std::vector<u64> limit;  ///< (n-1)-subset table in rank order; size 1 for arity 1
};

/// An arity-n coloring of the n-subsets of {0..window-1}.
struct Coloring {
  u64 arity = 2;
  ColorSpace colors;
  u64 window = 0;
  std::vector<u64> table;  ///< one entry per n-subset, ascending rank order
  std::optional<StableAnnotation> annotation;
  /// Colors that genuine (infinitely extendable) solutions may carry; empty
  /// means all colors.  Set by constructions whose target instances have
  /// finite-scale solutions that cannot occur in the infinite problem.
  std::vector<u64> admissible_colors;

  mutable std::vector<u64> rank_cache_;        ///< ascending ranks (lazy)
  mutable std::vector<u64> limit_rank_cache_;  ///< same for arity-(n-1) (lazy)

  const std::vector<u64>& ranks() const {
    if (rank_cache_.empty() && window >= arity && arity >= 1) {
      rank_cache_ = subset_ranks(window, arity);
    }
    return rank_cache_;
  }

  const std::vector<u64>& limit_ranks() const {
    if (limit_rank_cache_.empty()) {
      limit_rank_cache_ = subset_ranks(window, arity - 1);
    }
    return limit_rank_cache_;
  }

  std::size_t index_of_rank(u64 rank) const {
    const auto& rs = ranks();
    auto it = std::lower_bound(rs.begin(), rs.end(), rank);
    if (it == rs.end() || *it != rank) {
      throw WindowError("subset rank " + std::to_string(rank) +
                        " is not within the window");
    }
    return static_cast<std::size_t>(it - rs.begin());
  }

  /// Color of a sorted n-subset of the window.
  u64 at(const std::vector<u64>& subset) const {
    if (subset.size() != arity) {
      throw InvalidInputError("subset size does not match coloring arity");
    }
    if (!subset.empty() && subset.back() >= window) {
      throw WindowError("subset element " + std::to_string(subset.back()) +
                        " outside window " + std::to_string(window));
    }
    return table.at(index_of_rank(theta_encode(subset)));
  }

  void set(const std::vector<u64>& subset, u64 color) {
    table.at(index_of_rank(theta_encode(subset))) = color;
  }

  /// Annotated limit value at a sorted (n-1)-subset (empty for arity 1).
  u64 limit_at(const std::vector<u64>& subset) const {
    if (!annotation) {
      throw InvalidInputError("coloring has no stability annotation");
    }
    if (arity == 1) return annotation->limit.at(0);
    const auto& rs = limit_ranks();
    const u64 rank = theta_encode(subset);
    auto it = std::lower_bound(rs.begin(), rs.end(), rank);
    if (it == rs.end() || *it != rank) {
      throw WindowError("limit subset outside window");
    }
    return annotation->limit.at(static_cast<std::size_t>(it - rs.begin()));
  }

  bool color_admissible(u64 color) const {
    if (admissible_colors.empty()) return true;
    return std::find(admissible_colors.begin(), admissible_colors.end(), color) !=
           admissible_colors.end();
  }

  /// Build a coloring by evaluating `fn` on every n-subset of the window.
  static Coloring from_function(u64 arity, ColorSpace colors, u64 window,
                                const std::function<u64(const std::vector<u64>&)>& fn) {
    Coloring c = filled(arity, colors, window, 0);
    for_each_subset(window, arity, [&](const std::vector<u64>& s) {
      c.set(s, fn(s));
    });
    return c;
  }

  /// A fresh coloring with every table entry set to `fill`.
  static Coloring filled(u64 arity, ColorSpace colors, u64 window, u64 fill) {
    Coloring c;
    c.arity = arity;
    c.colors = colors;
    c.window = window;
    c.table.assign(static_cast<std::size_t>(binomial(window, arity)), fill);
    return c;
  }
};

/// A finite homogeneous-set candidate: strictly increasing elements plus a
/// claimed color.  `has_color == false` means the color claim is left to the
/// checker (it is derivable from the owning coloring).
struct HomSet {
  std::vector<u64> elements;
  u64 color = 0;
  bool has_color = true;
};

// ---------------------------------------------------------------------------
// JSON wire format
// ---------------------------------------------------------------------------

inline json to_json(const ColorSpace& cs) {
  if (cs.unbounded) return json{{"unbounded", cs.value}};
  return json(cs.value);
}

inline ColorSpace colorspace_from_json(const json& j) {
  ColorSpace cs;
  if (j.is_object()) {
    cs.unbounded = true;
    cs.value = j.at("unbounded").get<u64>();
  } else {
    cs.unbounded = false;
    cs.value = j.get<u64>();
  }
  return cs;
}

inline json to_json(const Coloring& c) {
  json j{{"type", "coloring"},
         {"arity", c.arity},
         {"colors", to_json(c.colors)},
         {"window", c.window},
         {"table", c.table}};
  json ann = json::object();
  if (c.annotation) {
    ann["stable"] = json{{"horizon", c.annotation->horizon},
                         {"limit", c.annotation->limit}};
  }
  if (!c.admissible_colors.empty()) {
    ann["admissible_colors"] = c.admissible_colors;
  }
  if (!ann.empty()) j["annotation"] = ann;
  return j;
}

inline Coloring coloring_from_json(const json& j) {
  Coloring c;
  c.arity = j.at("arity").get<u64>();
  c.colors = colorspace_from_json(j.at("colors"));
  c.window = j.at("window").get<u64>();
  c.table = j.at("table").get<std::vector<u64>>();
  if (c.arity < 1) throw InvalidInputError("coloring arity must be >= 1");
  if (c.table.size() != binomial(c.window, c.arity)) {
    throw InvalidInputError("coloring table size does not match window/arity");
  }
  if (j.contains("annotation")) {
    const json& ann = j.at("annotation");
    if (ann.contains("stable")) {
      StableAnnotation sa;
      sa.horizon = ann.at("stable").at("horizon").get<u64>();
      sa.limit = ann.at("stable").at("limit").get<std::vector<u64>>();
      if (sa.limit.size() != subset_ranks(c.window, c.arity - 1).size()) {
        throw InvalidInputError("stability annotation limit table has wrong size");
      }
      c.annotation = sa;
    }
    if (ann.contains("admissible_colors")) {
      c.admissible_colors = ann.at("admissible_colors").get<std::vector<u64>>();
    }
  }
  return c;
}

inline json to_json(const HomSet& m) {
  json j{{"elements", m.elements}};
  if (m.has_color) j["color"] = m.color;
  return j;
}

inline HomSet homset_from_json(const json& j) {
  HomSet m;
  m.elements = j.at("elements").get<std::vector<u64>>();
  if (j.contains("color") && !j.at("color").is_null()) {
    m.color = j.at("color").get<u64>();
    m.has_color = true;
  } else {
    m.has_color = false;
  }
  return m;
}

}  // namespace ramsey
