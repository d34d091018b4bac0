#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kcore/cli.hpp"
#include "support/oracle.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "kcore");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = kcore::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("kcore-cli-" + std::to_string(std::random_device{}()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name, const std::string& content = "") const {
    fs::path p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p;
  }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("decompose writes coreness and metrics") {
  TempDir dir;
  const auto input = dir.file("g1.el", kcore::testing::kG1EdgeList);
  const auto cores = dir.file("cores.txt");
  const auto metrics = dir.file("m.json");
  const Outcome o = run({"decompose", "--algo", "po-dyn", "--input", input.string(), "--output", cores.string(),
                         "--metrics", metrics.string(), "--workers", "2"});
  CHECK(o.status == 0);
  CHECK(slurp(cores) == "0\t1\n1\t1\n2\t2\n3\t2\n4\t2\n5\t2\n");
  CHECK(slurp(metrics).find("\"iterations\":2") != std::string::npos);
}

TEST_CASE("decompose with debug invariants on P5") {
  TempDir dir;
  const auto input = dir.file("p5.el", "0 1\n1 2\n2 3\n3 4\n");
  const Outcome o = run({"decompose", "--algo", "histocore", "--input", input.string(), "--debug-invariants",
                         "--metrics-format", "csv"});
  CHECK(o.status == 0);
  CHECK(o.out.find("histocore,p5,5,4,1,2,") != std::string::npos);
  CHECK(o.err.find("0 violations") != std::string::npos);
}

TEST_CASE("decompose rejects bad configuration") {
  TempDir dir;
  const auto input = dir.file("g1.el", kcore::testing::kG1EdgeList);
  const Outcome unknown = run({"decompose", "--algo", "nosuch", "--input", input.string()});
  CHECK(unknown.status != 0);
  CHECK(unknown.err.find("nosuch") != std::string::npos);
  CHECK(unknown.err.find("Usage") != std::string::npos);

  CHECK(run({"decompose", "--algo", "bz", "--input", (dir.file("missing.el")).string()}).status != 0);
  CHECK(run({"decompose", "--algo", "bz", "--input", input.string(), "--workers", "0"}).status != 0);
  CHECK(run({"decompose", "--input", input.string()}).status != 0);
  const auto bad = dir.file("bad.el", "0 1\nnope\n");
  const Outcome parse = run({"decompose", "--algo", "bz", "--input", bad.string()});
  CHECK(parse.status != 0);
  CHECK(parse.err.find("line 2") != std::string::npos);
}

TEST_CASE("verify") {
  TempDir dir;
  const auto input = dir.file("g1.el", kcore::testing::kG1EdgeList);
  const Outcome all = run({"verify", "--input", input.string()});
  CHECK(all.status == 0);
  CHECK(all.out.find("histocore: ok") != std::string::npos);

  const auto corrupted = dir.file("bad.txt", "0\t1\n1\t1\n2\t2\n3\t1\n4\t2\n5\t2\n");
  const Outcome bad = run({"verify", "--input", input.string(), "--algos", "po-dyn", "--coreness", corrupted.string()});
  CHECK(bad.status != 0);
  CHECK(bad.out.find("vertex 3") != std::string::npos);

  const auto mtx = dir.file("one.mtx", "%%MatrixMarket matrix coordinate pattern symmetric\n1 1 0\n");
  CHECK(run({"verify", "--input", mtx.string()}).status == 0);
}

TEST_CASE("bench emits one row per algorithm and worker count") {
  TempDir dir;
  const auto input = dir.file("g1.el", kcore::testing::kG1EdgeList);
  const Outcome o = run({"bench", "--input", input.string(), "--algos", "gpp,po-dyn", "--workers", "1,8"});
  CHECK(o.status == 0);
  std::istringstream lines(o.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("algorithm,graph,n,m,k_max,iterations,atomic_rmw,adjacency_reads,elapsed_ms,workers", 0) == 0);
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].rfind("gpp,g1,6,7,2,3,8,", 0) == 0);
  CHECK(rows[1].rfind("gpp,g1,6,7,2,3,8,", 0) == 0);
  CHECK(rows[2].rfind("po-dyn,g1,6,7,2,2,4,", 0) == 0);
  CHECK(rows[3].rfind("po-dyn,g1,6,7,2,2,4,", 0) == 0);
}

TEST_CASE("stats prints both reports") {
  TempDir dir;
  const auto p5 = dir.file("p5.el", "0 1\n1 2\n2 3\n3 4\n");
  const Outcome o = run({"stats", "--input", p5.string(), "--algo", "cntcore"});
  CHECK(o.status == 0);
  CHECK(o.out.find("activation") != std::string::npos);
  CHECK(o.out.find("adjacency entry accesses") != std::string::npos);
}

TEST_CASE("generate is deterministic") {
  TempDir dir;
  const auto a = dir.file("a.el");
  const auto b = dir.file("b.el");
  for (const auto& p : {a, b}) {
    CHECK(run({"generate", "--model", "er", "--n", "100", "--p", "0.1", "--seed", "7", "--output", p.string()})
              .status == 0);
  }
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());

  const Outcome st = run({"generate", "--model", "star-tail", "--n", "3", "--m", "1", "--k", "2"});
  CHECK(st.status == 0);
  const kcore::Graph g = kcore::testing::parse_edgelist(st.out);
  CHECK(g.degree(0) == 3);

  CHECK(run({"generate", "--model", "lattice", "--n", "5"}).status != 0);
}
