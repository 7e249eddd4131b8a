#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "motiondual/cli.hpp"
#include "motiondual/io.hpp"

using namespace motiondual;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "motiondual");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("motiondual_test_" + name);
}

}  // namespace

TEST_CASE("report") {
  auto r = run({"report", "--n", "7"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("ok") != std::string::npos);
  r = run({"report", "--n", "2"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("quoted") != std::string::npos);
  r = run({"report", "--n-min", "3", "--n-max", "5", "--format", "json"});
  CHECK(r.code == cli::exit_ok);
  const auto j = io::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
}

TEST_CASE("graph, distance and walk") {
  auto r = run({"graph", "--n", "4", "--kind", "dual", "--bound", "1"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("graph so4_dual") != std::string::npos);
  r = run({"graph", "--n", "5", "--kind", "sub", "--format", "json", "--bound", "1"});
  CHECK(r.code == cli::exit_ok);
  CHECK(io::json::accept(r.out));

  r = run({"distance", "--n", "9", "0,0,0,0", "1,1,1,1", "--chain"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.rfind("4\n", 0) == 0);
  CHECK(r.out.find("chain lower bound: 4") != std::string::npos);

  r = run({"walk", "--n", "6", "2,1,0", "1,1,1"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("length 1") != std::string::npos);
}

TEST_CASE("chain and certificate files") {
  const auto chain_path = temp_file("chain.json");
  auto r = run({"chain", "--n", "7", "0,0,0", "1,1,1", "--output", chain_path.string()});
  REQUIRE(r.code == cli::exit_ok);
  r = run({"chain", "--input", chain_path.string()});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("d >= 3") != std::string::npos);

  const auto cert_path = temp_file("cert.json");
  r = run({"certify", "--n", "6", "1,0", "2,0", "1,1", "--output", cert_path.string()});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(r.out.find("valid") != std::string::npos);
  r = run({"certify", "--input", cert_path.string()});
  CHECK(r.code == cli::exit_ok);

  io::json j;
  {
    std::ifstream in(cert_path);
    in >> j;
  }
  j["claimed_n"] = 3;
  {
    std::ofstream o(cert_path);
    o << j.dump();
  }
  r = run({"certify", "--input", cert_path.string()});
  CHECK(r.code == cli::exit_failed);
  CHECK(r.out.find("INVALID") != std::string::npos);

  std::filesystem::remove(chain_path);
  std::filesystem::remove(cert_path);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--n-min", "3", "--n-max", "5", "--bound", "1", "--seed", "7", "--jobs", "2"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("PASS [1]") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::exit_usage);
  CHECK(run({"bogus"}).code == cli::exit_usage);
  CHECK(run({"report"}).code == cli::exit_usage);
  CHECK(run({"distance", "--n", "5", "1,0"}).code == cli::exit_usage);
  CHECK(run({"distance", "--n", "5", "1,2", "0,0"}).code == cli::exit_usage);
  CHECK(run({"walk", "--n", "5", "1,0", "0,0", "--format", "xml"}).code == cli::exit_usage);
  CHECK(run({"certify", "--input", "/nonexistent/file.json"}).code == cli::exit_usage);
  CHECK(run({"verify", "--jobs", "0"}).code == cli::exit_usage);
  CHECK(run({"--help"}).code == cli::exit_ok);
}
