#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kcore/graph.hpp"

namespace kcore {

enum class GraphFormat { kEdgeList, kMatrixMarket };

GraphFormat parse_graph_format(std::string_view name);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads a graph and normalizes it. External ids are remapped to 0..n-1 in
/// ascending order; the table is kept in Graph::original_ids(). Input with no
/// edge lines is rejected as empty.
///
/// Edge lists: one "u v" pair per line, extra columns ignored, lines starting
/// with '#' or '%' skipped. Matrix Market: coordinate pattern/real/integer,
/// general or symmetric. Self-loops still register their vertex.
Graph load_graph(std::istream& in, GraphFormat format);
Graph load_graph_file(const std::string& path, GraphFormat format);

/// Edge list that load_graph maps back onto the same Graph bit for bit.
/// Vertices without a lower-numbered neighbor are anchored by a self-loop line.
void write_edgelist(std::ostream& out, const Graph& g);

/// One "id<TAB>coreness" line per vertex, using external ids.
void write_coreness(std::ostream& out, const Graph& g, std::span<const core_t> coreness);

struct CorenessTable {
  std::vector<std::uint64_t> ids;
  std::vector<core_t> coreness;
};

CorenessTable read_coreness(std::istream& in);

}  // namespace kcore
