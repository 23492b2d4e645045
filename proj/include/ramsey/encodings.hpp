// SPDX-License-Identifier: Apache-2.0
//
// Coding machinery: the Cantor pairing function, finite tupling, the
// theta_n numbering of n-element subsets of N, and the conversion from an
// enumerated set to a characteristic function.  All arithmetic is 64-bit
// unsigned with explicit overflow reporting; a silently wrapped rank would
// corrupt every table that is addressed by it.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

using u64 = std::uint64_t;

namespace detail {

inline u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("addition overflows 64-bit range");
  }
  return r;
}

inline u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("multiplication overflows 64-bit range");
  }
  return r;
}

/// Largest w with w*(w+1)/2 <= c (floor of the triangular-number inverse).
inline u64 triangular_root(u64 c) {
  // Start from the floating-point estimate and correct; the estimate is
  // within a few units of the true root for all 64-bit inputs.
  u64 w = static_cast<u64>((std::sqrt(8.0 * static_cast<double>(c) + 1.0) - 1.0) / 2.0);
  while (w > 0 && w * (w + 1) / 2 > c) --w;
  while ((w + 1) * (w + 2) / 2 <= c) ++w;
  return w;
}

}  // namespace detail

/// Cantor pairing: pair(n, k) = (n+k+1)(n+k)/2 + k.  Bijective onto N.
inline u64 pair(u64 n, u64 k) {
  const u64 s = detail::checked_add(n, k);
  const u64 s1 = detail::checked_add(s, 1);
  // s*(s+1)/2 cannot overflow if the product of the even factor survives.
  const u64 tri = (s % 2 == 0) ? detail::checked_mul(s / 2, s1)
                               : detail::checked_mul(s1 / 2, s);
  return detail::checked_add(tri, k);
}

/// Inverse of pair: unpair(pair(n, k)) == (n, k).
inline std::pair<u64, u64> unpair(u64 code) {
  const u64 w = detail::triangular_root(code);
  const u64 t = w * (w + 1) / 2;
  const u64 k = code - t;
  const u64 n = w - k;
  return {n, k};
}

/// Finite tupling <i_0, ..., i_{m-1}> as the right-nested fold of pair:
/// the first listed element is the outermost pair component, and a
/// length-1 tuple is the value itself.
inline u64 tuple(const std::vector<u64>& values) {
  if (values.empty()) {
    throw InvalidInputError("tuple requires a non-empty sequence");
  }
  u64 acc = values.back();
  for (std::size_t i = values.size() - 1; i-- > 0;) {
    acc = pair(values[i], acc);
  }
  return acc;
}

/// Inverse of tuple for a known length m >= 1.
inline std::vector<u64> untuple(u64 code, std::size_t m) {
  if (m == 0) {
    throw InvalidInputError("untuple requires length >= 1");
  }
  std::vector<u64> out;
  out.reserve(m);
  u64 rest = code;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    auto [first, tail] = unpair(rest);
    out.push_back(first);
    rest = tail;
  }
  out.push_back(rest);
  return out;
}

/// theta_n: decode a rank into the n-element subset
/// { k + sum_{j<=k} i_j : k = 0..n-1 } where (i_0,...,i_{n-1}) = untuple(rank).
/// The result is strictly increasing by construction.
inline std::vector<u64> theta_decode(u64 rank, u64 n) {
  if (n == 0) {
    throw InvalidInputError("theta_decode requires arity n >= 1");
  }
  const std::vector<u64> parts = untuple(rank, static_cast<std::size_t>(n));
  std::vector<u64> out;
  out.reserve(parts.size());
  u64 acc = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    acc = detail::checked_add(acc, parts[k]);
    const u64 elem = detail::checked_add(acc, static_cast<u64>(k));
    out.push_back(elem);
  }
  return out;
}

/// Inverse of theta_decode: rank of a strictly increasing n-element set.
/// Rejects unsorted or duplicate input.
inline u64 theta_encode(const std::vector<u64>& set) {
  if (set.empty()) {
    throw InvalidInputError("theta_encode requires a non-empty set");
  }
  for (std::size_t i = 1; i < set.size(); ++i) {
    if (set[i] <= set[i - 1]) {
      throw InvalidInputError("theta_encode requires strictly increasing input");
    }
  }
  std::vector<u64> parts;
  parts.reserve(set.size());
  parts.push_back(set[0]);
  for (std::size_t i = 1; i < set.size(); ++i) {
    parts.push_back(set[i] - set[i - 1] - 1);
  }
  return tuple(parts);
}

/// Convert an enumerated set into a characteristic bit vector over
/// {0..window-1}.  An enumerated element is accepted iff it strictly exceeds
/// every previously accepted element, so the accepted elements form a
/// strictly increasing subsequence of the enumeration (and a subset of it).
inline std::vector<bool> enumeration_to_char_subset(const std::vector<u64>& enumeration,
                                                    u64 window) {
  std::vector<bool> bits(static_cast<std::size_t>(window), false);
  bool any = false;
  u64 last = 0;
  for (u64 v : enumeration) {
    if (!any || v > last) {
      any = true;
      last = v;
      if (v < window) {
        bits[static_cast<std::size_t>(v)] = true;
      }
    }
  }
  return bits;
}

}  // namespace ramsey
