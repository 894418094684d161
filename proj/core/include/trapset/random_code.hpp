#pragma once

#include <cstddef>
#include <cstdint>

#include "trapset/tanner_graph.hpp"

namespace trapset {

struct RandomCodeParams {
  enum class Mode {
    /// Progressive edge growth: each new edge goes to the farthest check of
    /// lowest degree, giving large girth.
    kPeg,
    /// Uniformly shuffled check choices, rejecting only 4-cycles; keeps many
    /// short cycles.
    kShuffled,
  };

  std::size_t num_vars = 20;
  std::size_t num_checks = 15;
  int dl = 3;
  int min_girth = 6;
  std::uint64_t seed = 1;
  Mode mode = Mode::kShuffled;
  int max_attempts = 200;
};

/// Left-regular random code with girth >= min_girth, fully determined by the
/// parameters. Throws Error when no attempt reaches the girth target.
TannerGraph random_code(const RandomCodeParams& params);

}  // namespace trapset
