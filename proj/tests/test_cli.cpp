// Runs the cliffdet binary as a subprocess.

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CLIFFDET_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("det of the worked example") {
  const Run r = run("det --sig 2,0 \"5 + 1/2*e2 + 1/2*e12\"");
  CHECK(r.code == 0);
  CHECK(r.out == "25\n");
  for (const char* m : {"closed-triangle", "closed-bar", "vieta-triangle", "vieta-bar", "matrix", "interp"})
    CHECK(run(std::string("det --sig 2,0 --method ") + m + " \"5 + 1/2*e2 + 1/2*e12\"").out == "25\n");
}

TEST_CASE("charpoly text and JSON") {
  const Run r = run("charpoly --sig 1,0 \"1 + 2*e1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "C = [2, 3]\ndet = -3\n");
  const Run j = run("charpoly --sig 1,0 --format json \"1 + 2*e1\"");
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["signature"]["p"] == 1);
  CHECK(doc["signature"]["q"] == 0);
  CHECK(doc["input"] == "1 + 2*e1");
  CHECK(doc["method"] == "fl");
  CHECK(doc["coefficients"] == nlohmann::json::array({"2", "3"}));
  CHECK(doc["det"] == "-3");
  const auto f = nlohmann::json::parse(run("charpoly --sig 1,0 --backend float --format json \"1 + 2*e1\"").out);
  CHECK(f["det"].get<double>() == doctest::Approx(-3.0));
}

TEST_CASE("check sweep") {
  const Run r = run("check --sig 3,0 --trials 100 --seed 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("all methods agree: true") != std::string::npos);
  const auto doc = nlohmann::json::parse(run("check --sig 2,2 --trials 5 --backend float --format json").out);
  CHECK(doc["consistent"] == true);
  CHECK(doc["trials"] == 5);
}

TEST_CASE("method all reports consistency") {
  const auto doc = nlohmann::json::parse(run("det --sig 3,1 --method all --format json \"1 + e1 + 2*e234\"").out);
  CHECK(doc["consistent"] == true);
  CHECK(doc["results"].size() == 7);
}

TEST_CASE("inverse and the not-invertible exit code") {
  const Run ok = run("inverse --sig 2,0 --format json \"2 + e1\"");
  CHECK(ok.code == 0);
  const auto doc = nlohmann::json::parse(ok.out);
  CHECK(doc["det"] == "3");
  CHECK(doc["adjugate"] == "2 - e1");
  CHECK(doc["inverse"] == "2/3 - 1/3*e1");
  CHECK(run("inverse --sig 2,0 \"1 + e1\"").code == 3);
  CHECK(run("inverse --sig 2,0 --method matrix \"1 + e1\"").code == 2);
}

TEST_CASE("eigen output and the not-generic exit code") {
  const Run r = run("eigen --sig 2,0 --format json \"5 + 1/2*e2 + 1/2*e12\"");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["eigenvalues"].size() == 2);
  CHECK(doc["eigenvalues"][0][0].get<double>() == doctest::Approx(5.0));
  CHECK(doc["y"] == nlohmann::json::array({"5 + 1/2*e2 + 1/2*e12", "5 - 1/2*e2 - 1/2*e12"}));
  CHECK(run("eigen --sig 1,0 \"3\"").code == 4);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run("det --sig 2,0 \"e21\"").code == 2);
  CHECK(run("det --sig 2,0 \"1 +\"").code == 2);
  CHECK(run("det \"1\"").code == 2);
  CHECK(run("det --sig 7,0 \"1\"").code == 2);
  CHECK(run("det --sig 2 \"1\"").code == 2);
  CHECK(run("det --sig 2,0 --method nope \"1\"").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("formulas listing") {
  const Run r = run("formulas --sig 4,0");
  CHECK(r.code == 0);
  CHECK(r.out.find("triangle-n4") != std::string::npos);
  const auto doc = nlohmann::json::parse(run("formulas --format json").out);
  CHECK(doc["formulas"].size() == 22);
}

TEST_CASE("bench runs") {
  const Run r = run("bench --sig 2,1 --trials 3 --format json --backend float");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["timings"].size() == 7);
  CHECK(doc["kernels"].size() >= 1);
}
