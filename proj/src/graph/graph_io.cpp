#include "kcore/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <fstream>
#include <istream>
#include <ostream>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace kcore {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits on whitespace without allocating.
std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_u64(std::string_view tok, std::uint64_t& value) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::string_view trim_left(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i);
}

class IdRemap {
 public:
  vertex_t operator()(std::uint64_t external, std::size_t line) {
    auto [it, inserted] = index_.try_emplace(external, static_cast<vertex_t>(ids_.size()));
    if (inserted) {
      if (ids_.size() >= kNoVertex) throw ParseError(line, "too many vertices for 32-bit ids");
      ids_.push_back(external);
    }
    return it->second;
  }
  std::vector<std::uint64_t> take() { return std::move(ids_); }
  vertex_t size() const { return static_cast<vertex_t>(ids_.size()); }

 private:
  std::unordered_map<std::uint64_t, vertex_t> index_;
  std::vector<std::uint64_t> ids_;
};

// Dense ids follow ascending external id, so inputs already numbered
// 0..n-1 keep their numbering.
Graph finish(IdRemap& remap, std::vector<std::pair<vertex_t, vertex_t>>& edges) {
  std::vector<std::uint64_t> ids = remap.take();
  std::vector<vertex_t> order(ids.size());
  std::iota(order.begin(), order.end(), vertex_t{0});
  std::sort(order.begin(), order.end(), [&](vertex_t a, vertex_t b) { return ids[a] < ids[b]; });
  std::vector<vertex_t> rank(ids.size());
  std::vector<std::uint64_t> sorted(ids.size());
  for (vertex_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = r;
    sorted[r] = ids[order[r]];
  }
  for (auto& [u, v] : edges) {
    u = rank[u];
    v = rank[v];
  }
  Graph g = Graph::from_edges(static_cast<vertex_t>(ids.size()), edges);
  g.set_original_ids(std::move(sorted));
  return g;
}

Graph load_edgelist(std::istream& in) {
  IdRemap remap;
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  std::string line;
  std::size_t lineno = 0;
  bool saw_content = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = trim_left(line);
    if (body.empty() || body.front() == '#' || body.front() == '%') continue;
    saw_content = true;
    auto toks = tokenize(body);
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (toks.size() < 2 || !parse_u64(toks[0], a) || !parse_u64(toks[1], b)) {
      throw ParseError(lineno, "expected two non-negative integer vertex ids, got '" + line + "'");
    }
    vertex_t u = remap(a, lineno);
    vertex_t v = remap(b, lineno);
    edges.emplace_back(u, v);
  }
  if (!saw_content) throw ParseError(lineno, "empty input");
  return finish(remap, edges);
}

Graph load_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(0, "empty input");
  ++lineno;
  auto header = tokenize(line);
  if (header.size() != 5 || header[0] != "%%MatrixMarket" || header[1] != "matrix" ||
      header[2] != "coordinate") {
    throw ParseError(lineno, "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'");
  }
  if (header[3] != "pattern" && header[3] != "real" && header[3] != "integer") {
    throw ParseError(lineno, "unsupported field '" + std::string(header[3]) + "'");
  }
  if (header[4] != "general" && header[4] != "symmetric") {
    throw ParseError(lineno, "unsupported symmetry '" + std::string(header[4]) + "'");
  }

  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::uint64_t nnz = 0;
  bool have_size = false;
  IdRemap remap;
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = trim_left(line);
    if (body.empty() || body.front() == '%') continue;
    auto toks = tokenize(body);
    if (!have_size) {
      if (toks.size() != 3 || !parse_u64(toks[0], rows) || !parse_u64(toks[1], cols) ||
          !parse_u64(toks[2], nnz)) {
        throw ParseError(lineno, "expected size line 'rows cols entries'");
      }
      have_size = true;
      edges.reserve(nnz);
      continue;
    }
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    if (toks.size() < 2 || !parse_u64(toks[0], i) || !parse_u64(toks[1], j)) {
      throw ParseError(lineno, "expected 'row col' entry, got '" + line + "'");
    }
    if (i == 0 || j == 0 || i > rows || j > cols) {
      throw ParseError(lineno, "entry index outside declared matrix size");
    }
    if (edges.size() == nnz) throw ParseError(lineno, "more entries than declared");
    vertex_t u = remap(i, lineno);
    vertex_t v = remap(j, lineno);
    edges.emplace_back(u, v);
  }
  if (!have_size) throw ParseError(lineno, "missing size line");
  if (edges.size() != nnz) {
    throw ParseError(lineno, "declared " + std::to_string(nnz) + " entries, found " +
                                 std::to_string(edges.size()));
  }
  return finish(remap, edges);
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist" || name == "el") return GraphFormat::kEdgeList;
  if (name == "matrix-market" || name == "mtx" || name == "mm") return GraphFormat::kMatrixMarket;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

Graph load_graph(std::istream& in, GraphFormat format) {
  Graph g = format == GraphFormat::kEdgeList ? load_edgelist(in) : load_matrix_market(in);
  if (in.bad()) throw std::runtime_error("I/O error while reading graph");
  return g;
}

Graph load_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_graph(in, format);
}

void write_edgelist(std::ostream& out, const Graph& g) {
  auto ids = g.original_ids();
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    auto nbrs = g.neighbors(v);
    if (nbrs.empty() || nbrs.front() > v) out << ids[v] << ' ' << ids[v] << '\n';
    for (vertex_t u : nbrs) {
      if (u >= v) break;
      out << ids[v] << ' ' << ids[u] << '\n';
    }
  }
  if (!out) throw std::runtime_error("I/O error while writing edge list");
}

void write_coreness(std::ostream& out, const Graph& g, std::span<const core_t> coreness) {
  if (coreness.size() != g.num_vertices()) {
    throw std::invalid_argument("coreness array does not match graph size");
  }
  auto ids = g.original_ids();
  for (vertex_t v = 0; v < g.num_vertices(); ++v) out << ids[v] << '\t' << coreness[v] << '\n';
  if (!out) throw std::runtime_error("I/O error while writing coreness");
}

CorenessTable read_coreness(std::istream& in) {
  CorenessTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim_left(line).empty()) continue;
    auto toks = tokenize(line);
    std::uint64_t id = 0;
    std::uint64_t core = 0;
    if (toks.size() != 2 || !parse_u64(toks[0], id) || !parse_u64(toks[1], core) ||
        core > std::numeric_limits<core_t>::max()) {
      throw ParseError(lineno, "expected 'vertex_id<TAB>coreness', got '" + line + "'");
    }
    table.ids.push_back(id);
    table.coreness.push_back(static_cast<core_t>(core));
  }
  if (in.bad()) throw std::runtime_error("I/O error while reading coreness");
  return table;
}

}  // namespace kcore
