#pragma once

#include <cstdint>
#include <limits>

namespace kcore {

using vertex_t = std::uint32_t;
using edge_t = std::uint64_t;
using core_t = std::uint32_t;

inline constexpr vertex_t kNoVertex = std::numeric_limits<vertex_t>::max();

}  // namespace kcore
