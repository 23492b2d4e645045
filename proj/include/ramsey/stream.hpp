// SPDX-License-Identifier: Apache-2.0
//
// Finite prefixes of points of Baire space, with optional eventual-behavior
// annotations.  The annotation is the ground truth that makes asymptotic
// questions (limits, cluster points) checkable at finite scale: a bare
// prefix can never distinguish "eventually constant" from "changes later".

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/encodings.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

/// A point of Baire space at finite scale.
struct Stream {
  enum class Behavior {
    Unknown,             ///< nothing claimed beyond the prefix
    EventuallyConstant,  ///< entries at index >= from_index equal `value`
    EventuallyPeriodic,  ///< entries at index >= from_index cycle through `period`
  };

  std::vector<u64> prefix;
  Behavior behavior = Behavior::Unknown;
  u64 value = 0;             ///< for EventuallyConstant
  std::vector<u64> period;   ///< for EventuallyPeriodic (non-empty when used)
  u64 from_index = 0;        ///< first index governed by the annotation

  /// Entry at index i from the prefix, falling back to the annotation when
  /// the prefix is too short.  Throws InsufficientPrefixError when neither
  /// source can supply the value.
  u64 at(u64 i) const {
    if (i < prefix.size()) return prefix[static_cast<std::size_t>(i)];
    if (i >= from_index) {
      if (behavior == Behavior::EventuallyConstant) return value;
      if (behavior == Behavior::EventuallyPeriodic && !period.empty()) {
        return period[static_cast<std::size_t>((i - from_index) % period.size())];
      }
    }
    throw InsufficientPrefixError(
        i, "stream prefix too short: index " + std::to_string(i) + " needed");
  }

  /// True iff the annotation is internally consistent with the prefix:
  /// every prefix entry inside the annotated region must match the claim.
  bool annotation_consistent() const {
    if (behavior == Behavior::Unknown) return true;
    for (std::size_t i = static_cast<std::size_t>(from_index); i < prefix.size(); ++i) {
      const u64 expected =
          behavior == Behavior::EventuallyConstant
              ? value
              : period[(i - static_cast<std::size_t>(from_index)) % period.size()];
      if (prefix[i] != expected) return false;
    }
    return true;
  }
};

/// The infinite tupling <p_0, p_1, ...> evaluated at the pair code <n, k>:
/// returns p_n(k).  Out-of-window access raises InsufficientPrefixError
/// carrying the index that was needed.
inline u64 interleave_project(const std::vector<Stream>& streams, u64 n, u64 k) {
  if (n >= streams.size()) {
    throw InsufficientPrefixError(
        n, "no stream at position " + std::to_string(n));
  }
  return streams[static_cast<std::size_t>(n)].at(k);
}

}  // namespace ramsey
