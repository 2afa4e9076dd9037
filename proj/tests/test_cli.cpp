// Drives the ternmin executable end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ternmin/code.hpp"
#include "ternmin/json_io.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace ternmin;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TERNMIN_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ternmin_cli_" + name);
}

}  // namespace

TEST_CASE("params") {
  auto r = run("params --family gbar -m 9 -k 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[19682, 10, 13010]"));
  CHECK(contains(r.out, "AB violated"));

  r = run("params --family g -m 5 -k 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[242, 6, 50]"));

  r = run("params --family f -m 4 -k 2 -S 1");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "m >= 5"));

  r = run("params --family f -m 5 -k 2");
  CHECK(r.code == 2);

  r = run("params --family gbar -m 9 -k 2 --format json");
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["d"] == "13010");
  CHECK(j["violates_ab"] == true);
}

TEST_CASE("wdist and cwe") {
  auto r = run("wdist --family gbar -m 9 -k 2 --format json");
  REQUIRE(r.code == 0);
  const auto doc = weight_distribution_from_json(Json::parse(r.out));
  CHECK(doc.dist == weight_distribution_closed(WeightClassFunction::make(Family::gbar, 9, 2)));
  CHECK(doc.dist.entries.size() == 12);

  r = run("cwe --family f -m 5 -k 2 -S 1 --brute");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "brute force agrees"));

  r = run("wdist --family g -m 6 -k 2 --brute");
  CHECK(r.code == 0);

  r = run("wdist --family g -m 8 -k 2 --brute");
  CHECK(r.code == 3);
  CHECK(contains(r.out, "m <= 7"));

  r = run("wdist --family g -m 6 -k 2 --brute --brute-max-m 5");
  CHECK(r.code == 3);

  r = run("wdist --family custom --values 0,1,0,2 --brute --format json");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["brute_checked"] == true);
}

TEST_CASE("budget from the environment") {
  const auto r = run("wdist --family g -m 6 -k 2 --brute");
  CHECK(r.code == 0);
  const std::string cmd = "TERNMIN_BRUTE_MAX_M=5 " + std::string(TERNMIN_CLI) + " wdist --family g -m 6 -k 2 --brute";
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("minimality") {
  auto r = run("minimality --family gbar -m 5 -k 2 --brute --format json");
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["spectral"]["minimal"] == true);
  CHECK(j["brute"]["minimal"] == true);
  CHECK(j["agree"] == true);

  r = run("minimality --family gbar -m 9 -k 2 --format json");
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["spectral"]["minimal"] == true);
  CHECK(j["brute"].is_null());

  r = run("minimality --family g -m 6 -k 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "spectral: minimal"));

  r = run("minimality --family custom --values 0,0,0,1 --brute");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "NOT minimal"));

  r = run("minimality --family g -m 7 -k 2 --brute");
  CHECK(r.code == 3);
}

TEST_CASE("export-gen") {
  const auto path = temp_file("gen.txt");
  const auto r = run("export-gen --family g -m 5 -k 2 -o " + path.string());
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  const auto file = read_generator_matrix(in);
  CHECK(file.matrix.rows() == 6);
  CHECK(file.matrix.cols() == 242);
  CHECK(file.matrix.rank() == 6);
  CHECK(weight_distribution_of_span(file.matrix) ==
        weight_distribution_closed(WeightClassFunction::make(Family::g, 5, 2)));
  std::ifstream again(path);
  std::string header;
  std::getline(again, header);
  CHECK(header == "5 2 g 242 6");
  std::filesystem::remove(path);

  CHECK(run("export-gen --family g -m 5 -k 2 -o /nonexistent/dir/gen.txt").code != 0);
}

TEST_CASE("inequalities") {
  auto r = run("inequalities --m-max 50 --format json");
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  REQUIRE(j.size() == 3);
  for (const auto& report : j) CHECK(report["failures"].empty());

  r = run("inequalities --m-max 16 --lemma binom_growth --format json");
  REQUIRE(r.code == 0);
  CHECK(certificate_from_json(Json::parse(r.out)[0]).margins.at({16, 0}) == 143);

  r = run("inequalities --m-max 5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "m=5\t30"));

  CHECK(run("inequalities --m-max 201").code == 2);
}

TEST_CASE("scan") {
  const auto r = run("scan --m-min 5 --m-max 9");
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "family,m,k,n,dim,d,w_min,w_max,violates_ab,minimal_spectral\n"));
  CHECK(contains(r.out, "gbar,9,2,19682,10,13010,13010,19520,true,true\n"));
  CHECK(contains(r.out, "g,5,2,242,6,50,50,185,true,true\n"));
  CHECK_FALSE(contains(r.out, ",false\n"));  // every row minimal
}

TEST_CASE("config file mirrors flags") {
  const auto path = temp_file("config.toml");
  {
    std::ofstream cfg(path);
    cfg << "[params]\nfamily = \"gbar\"\nm = 9\nk = 2\n";
  }
  const auto r = run("--config " + path.string() + " params");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[19682, 10, 13010]"));
  std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("params").code == 2);
  CHECK(run("params --family h -m 5 -k 2").code == 2);
  CHECK(run("params --family g -m 5 -k 2 --format xml").code == 2);
  CHECK(run("--help").code == 0);
}
