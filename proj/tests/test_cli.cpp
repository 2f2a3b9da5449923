#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "minorbit/io.hpp"
#include "minorbit/orbits.hpp"

using namespace minorbit;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string(MINORBIT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  std::ofstream(name) << text;
  return name;
}

const std::string kT3142 = R"({"outer":[6,6,6,6],"rows":[[1,2,6,10,14,18],[3,4,8,12,16,20],[5,9,13,17,21,22],[7,11,15,19,23,24]]})";

}  // namespace

TEST_CASE("construct") {
  const Run r = cli("construct --n 4 --m 6 --w 3142");
  CHECK(r.code == 0);
  CHECK(r.out == kT3142 + "\n");
  CHECK(cli("construct --n 4 --m 6 --w 3142 --diagonal 5431").out == kT3142 + "\n");
  CHECK(cli("construct --n 1 --m 1 --w 1").out == "{\"outer\":[1],\"rows\":[[1]]}\n");
  const Run exp = cli("construct --n 3 --m 2 --w 132 --via insertion --experimental");
  CHECK(exp.code == 0);
  CHECK(exp.out == "{\"outer\":[2,2,2],\"rows\":[[1,2],[3,5],[4,6]]}\n");
  CHECK(cli("construct --n 2 --m 2 --w 21 --format grid").out == "1 3\n2 4\n");

  write_file("cli_choice.json", R"({"outer":[4,3,2],"rows":[[1,3,6,7],[2,4,9],[5,8]]})");
  CHECK(cli("construct --n 4 --m 6 --w 3142 --diagonal 5431 --choice-tableau cli_choice.json").out == kT3142 + "\n");
  std::remove("cli_choice.json");
}

TEST_CASE("exit codes") {
  CHECK(cli("construct --n 4 --m 6").code == 2);
  CHECK(cli("construct --n 4 --m 6 --w 3143").code == 2);
  CHECK(cli("construct --n 4 --m 6 --w 312").code == 2);
  CHECK(cli("construct --n 4 --m 6 --w 3142 --diagonal 5531").code == 2);
  CHECK(cli("construct --n 4 --m 6 --w 3142 --via magic").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("verify --n 3 --m 3 --suite nonsense").code == 2);
  CHECK(cli("csp --n 4 --m 6").code == 2);
  CHECK(cli("construct --n 3 --m 2 --w 132").code == 3);
  CHECK(cli("construct --n 3 --m 2 --w 132 --via insertion").code == 3);
  CHECK(cli("--help").code == 0);

  write_file("cli_bad.json", "{\"outer\": [2,2], \"rows\": [[1,2],[3]]}");
  CHECK(cli("promote --tableau cli_bad.json").code == 4);
  write_file("cli_bad.json", "not json");
  CHECK(cli("invert --tableau cli_bad.json").code == 4);
  write_file("cli_bad.json", R"({"outer":[2,1],"rows":[[1,2],[3]]})");
  CHECK(cli("promote --tableau cli_bad.json").code == 4);
  write_file("cli_bad.json", R"({"outer":[2,2],"rows":[[1,4],[2,3]]})");
  CHECK(cli("promote --tableau cli_bad.json").code == 4);
  std::remove("cli_bad.json");

  // An order-12 tableau of the 3 x 4 rectangle.
  write_file("cli_order12.json", R"({"outer":[4,4,4],"rows":[[1,2,3,4],[5,6,7,8],[9,10,11,12]]})");
  const Run r = cli("invert --tableau cli_order12.json");
  CHECK(r.code == 5);
  CHECK(r.out.empty());
  std::remove("cli_order12.json");
}

TEST_CASE("promote") {
  write_file("cli_t3142.json", kT3142);
  CHECK(cli("promote --tableau cli_t3142.json --steps 0").out == kT3142 + "\n");
  CHECK(cli("promote --tableau cli_t3142.json --steps 24").out == kT3142 + "\n");
  CHECK(cli("promote --tableau cli_t3142.json --steps 4").out == kT3142 + "\n");
  const Run one = cli("promote --tableau cli_t3142.json");
  CHECK(one.code == 0);
  CHECK(tableau_from_json(one.out) == construct_tw(parse_permutation("2431"), Rectangle(4, 6)));
  CHECK(cli("promote --tableau cli_t3142.json --steps -1").out ==
        tableau_to_json(construct_tw(parse_permutation("4213"), Rectangle(4, 6))) + "\n");
  CHECK(cli("invert --tableau cli_t3142.json").out == "3142\n");
  CHECK(cli("invert --tableau cli_t3142.json --diagonal 5431").out == "3142\n");
  std::remove("cli_t3142.json");
}

TEST_CASE("construct then invert over S_4 on 4 x 5") {
  for (const auto& w : all_permutations(4)) {
    const Run built = cli("construct --n 4 --m 5 --w " + to_string(w));
    REQUIRE(built.code == 0);
    write_file("cli_sweep.json", built.out);
    const Run back = cli("invert --tableau cli_sweep.json");
    CHECK(back.code == 0);
    CHECK(back.out == to_string(w) + "\n");
  }
  std::remove("cli_sweep.json");
}

TEST_CASE("csp and verify") {
  const Run csp = cli("csp --n 2 --m 2");
  CHECK(csp.code == 0);
  CHECK(csp.out == "r\t|O_r|\tF(zeta^r)\n1\t0\t0\n2\t2\t2\n4\t2\t2\n");
  CHECK(cli("csp --n 1 --m 1").out == "r\t|O_r|\tF(zeta^r)\n1\t1\t1\n");
  CHECK(cli("csp --n 3 --m 3").out.find("\n3\t6\t6\n") != std::string::npos);

  const Run v = cli("verify --n 3 --m 4 --suite bijection");
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(cli("verify --n 2 --m 2 --suite csp").code == 0);
  const Run j = cli("verify --n 2 --m 2 --suite csp --format json");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("output is stable across runs") {
  for (const std::string args : {"construct --n 4 --m 6 --w 3142 --format grid", "csp --n 3 --m 4",
                                 "verify --n 3 --m 3 --suite all --seed 7"}) {
    const Run a = cli(args);
    const Run b = cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("undefined insertion route") {
  CHECK(cli("construct --n 3 --m 2 --w 123 --via insertion --experimental").code == 5);
  CHECK(cli("construct --n 3 --m 2 --w 213 --via insertion --experimental").code == 5);
  CHECK(cli("construct --n 3 --m 2 --w 321 --via insertion --experimental").code == 0);
}
