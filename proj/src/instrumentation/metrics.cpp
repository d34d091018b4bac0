#include "kcore/metrics.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kcore/graph.hpp"

namespace kcore {

core_t CoreResult::k_max() const {
  return coreness.empty() ? 0 : *std::max_element(coreness.begin(), coreness.end());
}

ActivationReport activation_report(const Metrics& metrics) {
  if (!metrics.trace) throw std::invalid_argument("activation report needs a traced run");
  ActivationReport r;
  for (std::uint32_t count : metrics.trace->activations) {
    if (count == 0) continue;
    ++r.activated;
    if (count == 1) {
      ++r.once;
    } else if (count == 2) {
      ++r.twice;
    } else if (count <= 5) {
      ++r.three_to_five;
    } else {
      ++r.more_than_five;
    }
  }
  return r;
}

EdgeAccessReport edge_access_report(const Metrics& metrics) {
  if (!metrics.trace) throw std::invalid_argument("edge access report needs a traced run");
  EdgeAccessReport r;
  r.adjacency_reads = metrics.adjacency_reads;
  for (std::uint32_t count : metrics.trace->edge_accesses) {
    ++r.entries;
    if (count == 0) {
      ++r.zero;
    } else if (count == 1) {
      ++r.once;
    } else if (count == 2) {
      ++r.twice;
    } else if (count <= 5) {
      ++r.three_to_five;
    } else {
      ++r.more_than_five;
    }
  }
  return r;
}

void print_activation_report(std::ostream& out, const ActivationReport& r) {
  out << "vertex activations (" << r.activated << " activated vertices)\n"
      << std::fixed << std::setprecision(4)
      << "  1      " << r.once << '\t' << r.fraction(r.once) << '\n'
      << "  2      " << r.twice << '\t' << r.fraction(r.twice) << '\n'
      << "  3-5    " << r.three_to_five << '\t' << r.fraction(r.three_to_five) << '\n'
      << "  >5     " << r.more_than_five << '\t' << r.fraction(r.more_than_five) << '\n';
  out.unsetf(std::ios::floatfield);
}

void print_edge_access_report(std::ostream& out, const EdgeAccessReport& r) {
  out << "adjacency entry accesses (" << r.entries << " directed entries, " << r.adjacency_reads
      << " adjacency reads)\n"
      << std::fixed << std::setprecision(4)
      << "  0      " << r.zero << '\t' << r.fraction(r.zero) << '\n'
      << "  1      " << r.once << '\t' << r.fraction(r.once) << '\n'
      << "  2      " << r.twice << '\t' << r.fraction(r.twice) << '\n'
      << "  3-5    " << r.three_to_five << '\t' << r.fraction(r.three_to_five) << '\n'
      << "  >5     " << r.more_than_five << '\t' << r.fraction(r.more_than_five) << '\n';
  out.unsetf(std::ios::floatfield);
}

MetricsFormat parse_metrics_format(const std::string& name) {
  if (name == "json") return MetricsFormat::kJson;
  if (name == "csv") return MetricsFormat::kCsv;
  throw std::invalid_argument("unknown metrics format '" + name + "'");
}

namespace {

std::string format_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void emit_csv_header(std::ostream& out) {
  out << "algorithm,graph,n,m,k_max,iterations,atomic_rmw,adjacency_reads,elapsed_ms\n";
}

void emit_csv_row(std::ostream& out, const CoreResult& result, const Graph& g, const std::string& graph_name) {
  const Metrics& m = result.metrics;
  out << csv_field(result.algorithm) << ',' << csv_field(graph_name) << ',' << g.num_vertices() << ','
      << g.num_edges() << ',' << result.k_max() << ',' << m.iterations << ',' << m.atomic_rmw << ','
      << m.adjacency_reads << ',' << format_ms(m.elapsed_ms) << '\n';
}

void emit_metrics(std::ostream& out, const CoreResult& result, const Graph& g, const std::string& graph_name,
                  MetricsFormat format) {
  if (format == MetricsFormat::kCsv) {
    emit_csv_header(out);
    emit_csv_row(out, result, g, graph_name);
  } else {
    const Metrics& m = result.metrics;
    nlohmann::ordered_json j;
    j["algorithm"] = result.algorithm;
    j["graph"] = graph_name;
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["k_max"] = result.k_max();
    j["iterations"] = m.iterations;
    j["atomic_rmw"] = m.atomic_rmw;
    j["adjacency_reads"] = m.adjacency_reads;
    j["elapsed_ms"] = std::stod(format_ms(m.elapsed_ms));
    out << j.dump() << '\n';
  }
  if (!out) throw std::runtime_error("I/O error while writing metrics");
}

}  // namespace kcore
