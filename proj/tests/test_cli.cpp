#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using paleytype::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("construct") {
  const Run edges = run({"construct", "--primes", "5,13", "--format", "edgelist"});
  CHECK(edges.code == 0);
  CHECK(lines(edges.out) == 390);
  CHECK(edges.out.rfind("0 1\n", 0) == 0);

  const Run dot = run({"construct", "--primes", "5", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("  0 -- 1;\n") != std::string::npos);
  CHECK(dot.out.find("  3 -- 4;\n") != std::string::npos);
  CHECK(dot.out.find(" -- ") != std::string::npos);

  const Run g6 = run({"construct", "--primes", "5", "--format", "graph6"});
  CHECK(g6.out == "Dhc\n");

  const Run text = run({"construct", "--primes", "5,13"});
  CHECK(text.code == 0);
  CHECK(text.out.find("V      65\n") != std::string::npos);
  CHECK(text.out.find("|E|    390\n") != std::string::npos);
  CHECK(text.out.find("degree 12\n") != std::string::npos);
  CHECK(text.out.find("QR_N   1 4 9 14 16 29 36 49 51 56 61 64\n") != std::string::npos);

  const Run json = run({"construct", "--primes", "5", "--format", "json"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["N"] == 5);
  CHECK(j["graph"]["E"] == 5);
  CHECK(j.contains("timing"));
  CHECK(j["graph"].contains("edges"));
  const auto nw = nlohmann::json::parse(run({"construct", "--primes", "5", "--format", "json", "--no-witness"}).out);
  CHECK(!nw["graph"].contains("edges"));
}

TEST_CASE("usage errors exit with 2") {
  const Run bad = run({"construct", "--primes", "5,7"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find('7') != std::string::npos);
  CHECK(run({"construct", "--primes", "13,5"}).code == 2);
  CHECK(run({"construct", "--primes", "5,x"}).code == 2);
  CHECK(run({"construct", "--primes", ""}).code == 2);
  CHECK(run({"construct"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"census", "--primes", "5", "--format", "graph6"}).code == 2);
  CHECK(run({"frobnicate", "--primes", "5"}).code == 2);
  CHECK(run({"cycles", "--primes", "5", "--length", "9"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output files and I/O errors") {
  const auto path = std::filesystem::temp_directory_path() / "paleytype_cli_test.txt";
  CHECK(run({"construct", "--primes", "5", "--format", "edgelist", "--out", path.string()}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "0 1\n0 4\n1 2\n2 3\n3 4\n");
  std::filesystem::remove(path);
  CHECK(run({"construct", "--primes", "5", "--out", "/nonexistent-dir/x/y.txt"}).code == 3);
}

TEST_CASE("census and spectrum commands") {
  const Run csv = run({"census", "--primes", "5,13", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(lines(csv.out) == 66);
  const auto j = nlohmann::json::parse(run({"census", "--primes", "13", "--format", "json"}).out);
  CHECK(j["summary"]["mismatches"] == 0);
  CHECK(j["records"].size() == 13);

  const Run spec = run({"spectrum", "--primes", "5,13", "--numeric"});
  CHECK(spec.code == 0);
  CHECK(spec.out.find("reconcile ok") != std::string::npos);
  const auto sj = nlohmann::json::parse(run({"spectrum", "--primes", "5,13", "--format", "json"}).out);
  CHECK(sj["spectrum"]["distinct"] == 9);
  CHECK(sj["least"]["radical"] == "(-sqrt(5)-1)*12/4");
  const auto guarded =
      nlohmann::json::parse(run({"spectrum", "--primes", "5,13", "--format", "json", "--numeric", "--max-eig-v", "10"}).out);
  CHECK(guarded["numeric"].is_string());
}

TEST_CASE("aut and cycles commands") {
  const auto a = nlohmann::json::parse(run({"aut", "--primes", "5,13", "--format", "json"}).out);
  CHECK(a["automorphisms"]["brute_force"] == 780);
  CHECK(a["automorphisms"]["formula"] == 780);
  const auto guarded = nlohmann::json::parse(run({"aut", "--primes", "5,13", "--format", "json", "--max-aut-v", "10"}).out);
  CHECK(guarded["automorphisms"]["brute_force"].is_null());

  const Run c5 = run({"cycles", "--primes", "5"});
  CHECK(c5.code == 0);
  CHECK(c5.out.find("missing lengths [3,4]") != std::string::npos);
  const auto tri = nlohmann::json::parse(run({"cycles", "--primes", "5", "--length", "3", "--format", "json"}).out);
  CHECK(tri["result"]["status"] == "ExhaustedNoCycle");
  const auto c13 = nlohmann::json::parse(run({"cycles", "--primes", "13", "--format", "json"}).out);
  CHECK(c13["pancyclicity"]["pancyclic"] == true);
}

TEST_CASE("verify command") {
  const Run v = run({"verify", "--primes", "5,13"});
  CHECK(v.code == 0);
  const auto j = nlohmann::json::parse(v.out);
  CHECK(j["ok"] == true);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j.contains("timing"));
  const Run fail = run({"verify", "--primes", "5,13", "--budget", "1", "--format", "text"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("verify: FAILED") != std::string::npos);
}
