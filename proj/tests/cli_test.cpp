#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(TEM_CLI_PATH) + " " + args +
                          " > cli_out.tmp 2> cli_err.tmp";
  const int status = std::system(cmd.c_str());
  std::ifstream f("cli_out.tmp");
  std::stringstream ss;
  ss << f.rdbuf();
  return {WEXITSTATUS(status), ss.str()};
}

}  // namespace

TEST_CASE("dist subcommand") {
  const auto r = run("dist --t 1.5 --p 0.25,0.25 --q 0.01,0.81");
  CHECK(r.exit_code == 0);
  CHECK(std::stod(r.output) == doctest::Approx(16.0 / 9.0).epsilon(1e-12));

  const auto zero = run("dist --t 1 --p 0.3,0.7 --q 0.3,0.7");
  CHECK(zero.exit_code == 0);
  CHECK(std::stod(zero.output) == 0.0);

  // raw projective mode ignores scaling
  const auto raw = run("dist --t 1.5 --raw --p 2,2 --q 1,1");
  CHECK(raw.exit_code == 0);
  CHECK(std::stod(raw.output) == doctest::Approx(0.0).epsilon(1e-12));

  // json carries the same number
  const auto j = run("dist --t 1.5 --p 0.25,0.25 --q 0.01,0.81 --json");
  CHECK(j.exit_code == 0);
  CHECK(j.output.find("\"distance\"") != std::string::npos);
}

TEST_CASE("usage and numerical failures map to exit codes") {
  CHECK(run("dist --t 1.5").exit_code == 1);           // missing --p/--q
  CHECK(run("nonsense").exit_code == 1);               // unknown subcommand
  CHECK(run("dist --t 1 --p 0,-1 --q 1,1").exit_code == 2);  // bad vector
  CHECK(run("dist --t 2.5 --p 1,1 --q 1,2").exit_code == 2); // t out of range
}

TEST_CASE("determinism of seeded subcommands") {
  const std::string flags =
      "embed --dataset er --n 14 --p 0.5 --dims 2 --t 1.2 --seed 7 --iters 40";
  const auto a = run(flags);
  const auto b = run(flags);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  // 1 row per geometry per dim plus header
  int lines = 0;
  for (char c : a.output) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 5);

  const auto h1 = run("approx-error --t 1.2 --T 10 --n 200 --d 8 --seed 3 --json");
  const auto h2 = run("approx-error --t 1.2 --T 10 --n 200 --d 8 --seed 3 --json");
  CHECK(h1.exit_code == 0);
  CHECK(h1.output == h2.output);
}

TEST_CASE("grid subcommands emit the x,y,value schema") {
  const auto b = run("balls --t 1 --center 1,1,1 --radius-list 0.4,0.8 --grid 40");
  CHECK(b.exit_code == 0);
  CHECK(b.output.rfind("x,y,value\n", 0) == 0);

  const auto v = run("bisector --t 1 --p 5,3,2 --q 3,5,2 --grid 30");
  CHECK(v.exit_code == 0);
  CHECK(v.output.rfind("x,y,value\n", 0) == 0);
}

TEST_CASE("models sweep schema") {
  const auto m = run("models --t 0.8,1,1.2 --alpha 0.2 --model klein");
  CHECK(m.exit_code == 0);
  CHECK(m.output.rfind("model,t,alpha,x,y\n", 0) == 0);
  int lines = 0;
  for (char c : m.output) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 4);
}

TEST_CASE("calculus-check reports consistent integrals") {
  const auto c = run("calculus-check --t 0.5 --K 2 --a 0 --b 1 --n 4000 --json");
  CHECK(c.exit_code == 0);
  const auto exact_pos = c.output.find("t_integral_exact");
  const auto numeric_pos = c.output.find("t_integral_numeric");
  CHECK(exact_pos != std::string::npos);
  CHECK(numeric_pos != std::string::npos);
}
