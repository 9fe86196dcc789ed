// End-to-end tests that spawn the CLI binary and assert on output and
// exit codes.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <doctest.h>
#include <json.hpp>

#ifndef ETAVERIFY_BIN
#error "ETAVERIFY_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd =
      "NO_COLOR=1 " + std::string(ETAVERIFY_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
    out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("eta subcommand") {
  const auto closed = run("eta --method closed");
  CHECK(closed.exit_code == 0);
  CHECK(closed.output.substr(0, 12) == "0.7687478924");

  const auto all = run("eta --method all");
  CHECK(all.exit_code == 0);
  CHECK(all.output.find("closed") != std::string::npos);
  CHECK(all.output.find("malmsten") != std::string::npos);

  const auto bad = run("eta --method nonsense");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("check subcommand single id") {
  const auto r = run("check EQ19_I2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("EQ19_I2") != std::string::npos);
  CHECK(r.output.find("-1.591549430919e-01") != std::string::npos);
  CHECK(r.output.find("PASS") != std::string::npos);
}

TEST_CASE("check subcommand rejects unknown ids") {
  const auto r = run("check BOGUS");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("valid ids") != std::string::npos);

  const auto none = run("check");
  CHECK(none.exit_code == 2);
}

TEST_CASE("check --all --format json") {
  const auto r = run("check --all --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["version"] == "1.0.0");
  CHECK(doc["summary"]["failed"] == 0);
  CHECK(doc["summary"]["total"] ==
        doc["summary"]["passed"].get<int>() +
            doc["summary"]["failed"].get<int>());
  CHECK(doc["checks"].size() == doc["summary"]["total"].get<std::size_t>());
  for (const auto& check : doc["checks"]) {
    CHECK(check.contains("id"));
    CHECK(check.contains("paper_ref"));
    CHECK(check.contains("abs_err"));
    CHECK(check["pass"] == true);
  }
  // round trip: parse(emit(report)) is field-for-field identical
  const auto again = nlohmann::json::parse(doc.dump(2));
  CHECK(again == doc);
}

TEST_CASE("tolerance scaling is plumbed through") {
  const auto r = run("check EQ1_POINTWISE --tol-scale 1e-6");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("FAIL") != std::string::npos);
}

TEST_CASE("markdown report") {
  const auto r = run("check EQ4_CLOSED_FORM EQ19_I2 --format md");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("| id |") != std::string::npos);
  CHECK(r.output.find("✓") != std::string::npos);
}

TEST_CASE("constants subcommand") {
  const auto r = run("constants");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("gamma        = 0.577215664901533") !=
        std::string::npos);
  CHECK(r.output.find("eta          = 0.768747892426866") !=
        std::string::npos);
  // deterministic shape: seven lines, fixed order
  CHECK(r.output.find("pi") < r.output.find("gamma"));
  CHECK(r.output.find("log_glaisher") < r.output.find("\neta "));

  const auto again = run("constants");
  CHECK(again.output == r.output);
}

TEST_CASE("list subcommand") {
  const auto r = run("list");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("EQ4_CLOSED_FORM") != std::string::npos);
  CHECK(r.output.find("EQ22_CI_PART") != std::string::npos);
  int lines = 0;
  for (char ch : r.output) lines += (ch == '\n');
  CHECK(lines == 24);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}
