#pragma once

#include "kcore/engine.hpp"

namespace kcore {

/// Serial Batagelj-Zaversnik bin-sort peeling, O(n + m). The reference every
/// parallel engine is checked against.
CoreResult bz_serial(const Graph& g, const EngineOptions& opts = {});

/// General parallel peel. Separate residual-degree, coreness and removed
/// arrays; scatter does a plain atomic fetch-sub on every neighbor that was
/// not removed in an earlier superstep. The level advances only when a scan
/// finds no vertex with residual degree <= k.
CoreResult gpp(const Graph& g, const EngineOptions& opts = {});

/// PeelOne: one array holds residual degree and coreness. At level k the
/// frontier is {v : core[v] == k}; neighbors above k take a clamped
/// decrement, and those that land on k form the next round's frontier.
/// iterations = number of scan+scatter rounds.
CoreResult peel_one(const Graph& g, const EngineOptions& opts = {});

/// PeelOne with a dynamic frontier: vertices clamped to k during a level are
/// processed within the same cycle. iterations = number of levels = k_max.
CoreResult peel_one_dynamic(const Graph& g, const EngineOptions& opts = {});

/// Dynamic-frontier peeling without the clamped primitive: plain fetch-sub on
/// every neighbor not removed at an earlier level, followed by a compensating
/// fetch-add whenever the result fell below k. iterations = k_max.
CoreResult pp_dynamic(const Graph& g, const EngineOptions& opts = {});

}  // namespace kcore
