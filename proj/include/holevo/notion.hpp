/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace holevo {

/// Distinguishability notions for which generalized Holevo quantities are computed.
enum class Notion { Kolmogorov, ProbError, Bhattacharyya, RelativeEntropy, Qjsd };

inline constexpr std::array<Notion, 5> kAllNotions = {
    Notion::Kolmogorov, Notion::ProbError, Notion::Bhattacharyya, Notion::RelativeEntropy, Notion::Qjsd};

/// Distances grow with distinguishability; similarities shrink.
enum class Orientation { Distance, Similarity };

/// GAI extremum direction: maximize a distance, minimize a similarity.
enum class Direction { Maximize, Minimize };

constexpr Orientation orientation(Notion n) noexcept {
  return (n == Notion::ProbError || n == Notion::Bhattacharyya) ? Orientation::Similarity
                                                                : Orientation::Distance;
}

constexpr Direction direction(Notion n) noexcept {
  return orientation(n) == Orientation::Distance ? Direction::Maximize : Direction::Minimize;
}

constexpr std::string_view to_string(Notion n) noexcept {
  switch (n) {
    case Notion::Kolmogorov: return "kolmogorov";
    case Notion::ProbError: return "prob-error";
    case Notion::Bhattacharyya: return "bhattacharyya";
    case Notion::RelativeEntropy: return "relative-entropy";
    case Notion::Qjsd: return "qjsd";
  }
  return "unknown";
}

constexpr std::string_view to_string(Direction d) noexcept {
  return d == Direction::Maximize ? "max" : "min";
}

inline std::optional<Notion> parse_notion(std::string_view s) noexcept {
  for (Notion n : kAllNotions) {
    if (to_string(n) == s) return n;
  }
  return std::nullopt;
}

}  // namespace holevo
