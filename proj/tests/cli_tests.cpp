// Drives the installed binary end to end through popen: output bytes and
// exit codes are part of the contract.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(WMKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("expand prints the negacyclic expansion") {
  const auto r = run_cli("expand --kind nw --row 0++-");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0++-\n+0++\n-+0+\n--+0\n");
}

TEST_CASE("verify accepts the identity and reports W(n,k)") {
  const auto path = write_temp("wmkit_id3.txt", "+00\n0+0\n00+\n");
  const auto r = run_cli("verify " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "W(3,1)\n");
}

TEST_CASE("verify reports defects and exits 1") {
  const auto path = write_temp("wmkit_bad.txt", "++\n0+\n");
  const auto r = run_cli("verify " + path.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out == "NOT_WEIGHING\n(1,2) 1\n(2,2) 1\n");
}

TEST_CASE("classify verdicts and exit codes") {
  const auto bad = write_temp("wmkit_bad2.txt", "++\n0+\n");
  auto r = run_cli("classify " + bad.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out == "NOT_WEIGHING\n");

  const auto skew = write_temp("wmkit_skew.txt", "+0\n0-\n");
  r = run_cli("classify " + skew.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out == "NOT_TOEPLITZ\n");

  const auto id = write_temp("wmkit_id2.txt", "+0\n0+\n");
  r = run_cli("classify " + id.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "BOTH\n");
}

TEST_CASE("expand output round-trips through verify and classify") {
  const auto expanded = run_cli("expand --kind cw --row +++-");
  REQUIRE(expanded.exit_code == 0);
  const auto path = write_temp("wmkit_cw44.txt", expanded.out);

  auto r = run_cli("verify " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "W(4,4)\n");

  r = run_cli("classify " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "CIRCULANT\n");

  const auto nega = run_cli("expand --kind nw --row 0++-");
  const auto nega_path = write_temp("wmkit_nw43.txt", nega.out);
  r = run_cli("classify " + nega_path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "NEGACYCLIC\n");
}

TEST_CASE("search output modes") {
  auto r = run_cli("search --kind cw --order 4 --weight 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "---+\n--+-\n-+--\n-+++\n+---\n+-++\n++-+\n+++-\n");

  r = run_cli("search --kind cw --order 4 --weight 4 --count-only");
  CHECK(r.out == "8\n");

  r = run_cli("search --kind cw --order 4 --weight 4 --canonical");
  CHECK(r.out == "---+\n");

  r = run_cli("search --kind nw --order 4 --weight 3 --limit 3");
  CHECK(r.out == "--0-\n--+0\n-0--\n");
}

TEST_CASE("construct conference") {
  auto r = run_cli("construct conference -q 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "# NW(4,3) first_row=--0-\n--0-\n+--0\n0+--\n+0+-\n");

  r = run_cli("construct conference -q 4");
  CHECK(r.exit_code == 1);
}

TEST_CASE("construct output is a parseable witness file") {
  const auto witness = run_cli("construct conference -q 5");
  REQUIRE(witness.exit_code == 0);
  const auto path = write_temp("wmkit_nw65.txt", witness.out);
  const auto r = run_cli("verify " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "W(6,5)\n");
}

TEST_CASE("survey table") {
  const auto r = run_cli("survey --max-n 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n\tpredicted\tcw\tnw\tverdict\twitness\n"
        "3\tno\tno\tno\tnot_exists\t-\n"
        "4\tyes\tno\tyes\texists\t--0-\n"
        "5\tno\tno\tno\tnot_exists\t-\n"
        "6\tyes\tno\tyes\texists\t---0+-\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("search --kind cw --order 4").exit_code == 2);   // missing weight
  CHECK(run_cli("search --kind xx --order 4 --weight 4").exit_code == 2);
  CHECK(run_cli("expand --kind nw --row 0x+-").exit_code == 2);  // bad rowspec
  CHECK(run_cli("search --kind cw --order 4 --weight 9").exit_code == 2);  // infeasible
  CHECK(run_cli("survey --max-n 400").exit_code == 2);           // beyond cap
  CHECK(run_cli("verify /nonexistent/file.txt").exit_code == 2);

  const auto ragged = write_temp("wmkit_ragged.txt", "+0\n0\n");
  CHECK(run_cli("verify " + ragged.string()).exit_code == 2);
}

TEST_CASE("output bytes are identical across runs") {
  const auto a = run_cli("search --kind nw --order 10 --weight 9");
  const auto b = run_cli("search --kind nw --order 10 --weight 9");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}
