#include "cli.hpp"

#include <doctest.h>

#include <sstream>

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int st = mcg::run_cli(args, out, err);
  return {st, out.str(), err.str()};
}

std::size_t lines_starting(const std::string& s, const std::string& p) {
  std::istringstream in(s);
  std::size_t c = 0;
  for (std::string l; std::getline(in, l);) c += l.rfind(p, 0) == 0;
  return c;
}

}  // namespace

TEST_CASE("gen") {
  auto r = run({"gen", "1", "1", "--format", "plain"});
  CHECK(r.status == 0);
  CHECK(lines_starting(r.out, "gen ") == 2);
  CHECK(lines_starting(r.out, "rel ") == 1);
  CHECK(run({"gen", "2", "1", "--format", "json"}).out == run({"gen", "2", "1", "--format", "json"}).out);
  CHECK(run({"gen", "2", "0", "--format", "tex"}).status == 2);
  CHECK(lines_starting(run({"gen", "2", "0", "--no-handles"}).out, "gen ") == 5);
}

TEST_CASE("abel") {
  auto r = run({"abel", "2", "0"});
  CHECK(r.status == 0);
  CHECK(r.out == "Z/10\n");
  CHECK(run({"abel", "1", "1"}).out == "Z\n");
}

TEST_CASE("verify") {
  auto bad = run({"verify", "1", "0"});
  CHECK(bad.status != 0);
  CHECK(bad.err.find("degenerate signature") != std::string::npos);
  auto ok = run({"verify", "2", "1"});
  CHECK(ok.status == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
}

TEST_CASE("map") {
  auto r = run({"map", "2", "2", "--word", "a1 a4' c4_1 b"});
  CHECK(r.status == 0);
  CHECK(r.out == "b\n");
  CHECK(run({"map", "1", "1", "--word", "a1"}).status == 2);
  CHECK(run({"map", "2", "2", "--word", "a9"}).status == 2);
}

TEST_CASE("replay") {
  auto r = run({"replay", "2", "0"});
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"replay", "2", "0", "--scripts", "/nonexistent/dir"}).status == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"gen", "2"}).status == 2);
  CHECK(run({"frobnicate", "2", "0"}).status == 2);
}
