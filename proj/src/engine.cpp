#include "kcore/engine.hpp"

#include <stdexcept>
#include <string>

#include "kcore/hindex.hpp"
#include "kcore/peel.hpp"

namespace kcore {

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : all_algorithms()) {
    if (algorithm_name(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "' (expected bz, gpp, peelone, pp-dyn, po-dyn, nbrcore, cntcore, histocore)");
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kBz: return "bz";
    case Algorithm::kGpp: return "gpp";
    case Algorithm::kPeelOne: return "peelone";
    case Algorithm::kPpDyn: return "pp-dyn";
    case Algorithm::kPoDyn: return "po-dyn";
    case Algorithm::kNbrCore: return "nbrcore";
    case Algorithm::kCntCore: return "cntcore";
    case Algorithm::kHistoCore: return "histocore";
  }
  return "unknown";
}

std::vector<Algorithm> all_algorithms() {
  return {Algorithm::kBz,     Algorithm::kGpp,     Algorithm::kPeelOne, Algorithm::kPpDyn,
          Algorithm::kPoDyn,  Algorithm::kNbrCore, Algorithm::kCntCore, Algorithm::kHistoCore};
}

std::vector<Algorithm> parallel_algorithms() {
  auto all = all_algorithms();
  all.erase(all.begin());
  return all;
}

CoreResult run_algorithm(Algorithm a, const Graph& g, const EngineOptions& opts) {
  switch (a) {
    case Algorithm::kBz: return bz_serial(g, opts);
    case Algorithm::kGpp: return gpp(g, opts);
    case Algorithm::kPeelOne: return peel_one(g, opts);
    case Algorithm::kPpDyn: return pp_dynamic(g, opts);
    case Algorithm::kPoDyn: return peel_one_dynamic(g, opts);
    case Algorithm::kNbrCore: return nbr_core(g, opts);
    case Algorithm::kCntCore: return cnt_core(g, opts);
    case Algorithm::kHistoCore: return histo_core(g, opts);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace kcore
