#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" REDWORD_CLI_PATH "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::filesystem::path write_config(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("words") {
  const auto r = run("words 42315");
  CHECK(r.status == 0);
  CHECK(r.out == "|R(42315)| = 6\n12321\n13213\n13231\n31213\n31231\n32123\n");
  CHECK(run("words [4,2,3,1,5]").out == r.out);
  CHECK(run("words 3215476 --count").out == "40\n");
  CHECK(run("words 12345").out == "|R(12345)| = 1\ne\n");
  const auto j = nlohmann::json::parse(run("--format json words 42315").out);
  CHECK(j["count"] == 6);
  CHECK(run("words 42315 --format json").out == run("--format json words 42315").out);
}

TEST_CASE("graph") {
  const auto j = nlohmann::json::parse(run("graph 42315 --json").out);
  std::size_t b = 0, c = 0;
  for (const auto& e : j["edges"]) (e[2] == "B" ? b : c) += 1;
  CHECK(b == 2);
  CHECK(c == 4);

  const auto dot = run("graph 4321 --dot");
  CHECK(dot.status == 0);
  CHECK(count_of(dot.out, "style=dashed") == 8);
  CHECK(count_of(dot.out, " -- ") == 18);
  CHECK(dot.out == run("graph 4321 --dot").out);
  const auto id = run("graph 12345 --dot").out;
  CHECK(count_of(id, "\"e\";") == 1);
  CHECK(count_of(id, " -- ") == 0);
}

TEST_CASE("classes") {
  const auto r = run("classes 42315");
  CHECK(r.status == 0);
  CHECK(r.out.find("braid classes: 4") != std::string::npos);
  CHECK(r.out.find("commutation classes: 3") != std::string::npos);
  CHECK(run("classes 42315 --kind nonsense").status == 1);
}

TEST_CASE("verify") {
  const auto reiner = run("verify 4321 reiner");
  CHECK(reiner.status == 0);
  CHECK(reiner.out == "reiner 4321: 16 = 16 pass\n");
  CHECK(run("verify --all-n 5 edges").status == 0);
  CHECK(run("verify 12345 braidrec").out == "braidrec 12345: 1 = 1 pass\n");
  CHECK(run("verify --all-n 4 all").status == 0);
  CHECK(run("verify 4321 nonsense").status == 1);
  CHECK(run("verify --all-n 9 redrec").status == 1);
}

TEST_CASE("scan") {
  const auto out = std::filesystem::temp_directory_path() / "redword_cli_scan.jsonl";
  const auto r = run("scan --n 5 --strict --out " + out.string());
  CHECK(r.status == 0);
  CHECK(r.out == "checked 120, skipped 0, hard failures 0, soft violations 0\n");
  std::ifstream in(out);
  std::size_t lines = 0;
  std::string last;
  for (std::string line; std::getline(in, line); ++lines) last = line;
  CHECK(lines == 121);
  CHECK(nlohmann::json::parse(last)["checked"] == 120);
  std::filesystem::remove(out);

  CHECK(run("scan --n 7").status == 1);
  CHECK(run("scan --n 9 --sample 3").status == 1);
  const auto sampled = run("--seed 4 scan --n 7 --sample 5");
  CHECK(sampled.status == 0);
  CHECK(sampled.out == run("--seed 4 scan --n 7 --sample 5").out);
}

TEST_CASE("factor, equiv, lattice, shuffle") {
  CHECK(run("factor 3215476").out == "tau = 1234567 (e)\nfactors = (3,1) (2,4) (2,6)\nword = 12146\n");
  const auto f = nlohmann::json::parse(run("factor 3215476 --json").out);
  CHECK(f["factors"] == nlohmann::json::parse("[[3,1],[2,4],[2,6]]"));
  CHECK(run("equiv 321456 123654").out == "equivalent\n");
  CHECK(run("equiv 2134 2314").out == "not equivalent\n");
  const auto l = run("lattice --n 4 --cycles");
  CHECK(l.out.find("4-cycles 6\n") != std::string::npos);
  CHECK(l.out.find("6-cycles 8\n") != std::string::npos);
  CHECK(run("lattice --n 9").status == 1);
  const auto s = run("shuffle 3215476 --configs");
  CHECK(s.status == 0);
  CHECK(s.out.find("10 configurations, 40 words") != std::string::npos);
  CHECK(s.out.find("I = {1,2}: 4") != std::string::npos);
  CHECK(run("shuffle 165324 --configs").status == 1);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 1);
  CHECK(run("bogus").status == 1);
  CHECK(run("words 4251").status == 1);
  CHECK(run("words").status == 1);
  CHECK(run("--help").status == 0);
  CHECK(run("--format xml words 321").status == 1);
}

TEST_CASE("configuration precedence") {
  const auto small = write_config("redword_small.conf", "# caps\nmax_degree = 4\n");
  CHECK(run("--config " + small.string() + " words 42315").status == 1);
  CHECK(run("--config " + small.string() + " words 4321").status == 0);
  CHECK(run("--config " + small.string() + " --max-n 5 words 42315").status == 0);

  CHECK(run("words 42315", "REDWORD_MAX_N=4").status == 1);
  CHECK(run("--max-n 5 words 42315", "REDWORD_MAX_N=4").status == 0);
  CHECK(run("--config " + small.string() + " words 42315", "REDWORD_MAX_N=5").status == 0);

  const auto json = write_config("redword_json.conf", "output_format = \"json\"\n");
  CHECK(run("--config " + json.string() + " words 321").out.front() == '{');
  CHECK(run("--config " + json.string() + " --format text words 321").out.front() == '|');

  const auto bad = write_config("redword_bad.conf", "colour = blue\n");
  CHECK(run("--config " + bad.string() + " words 321").status == 1);
  CHECK(run("--config /nonexistent/redword.conf words 321").status == 1);

  const auto cap = write_config("redword_cap.conf", "exhaustive_cap = 4\n");
  CHECK(run("--config " + cap.string() + " scan --n 5").status == 1);
  std::filesystem::remove(small);
  std::filesystem::remove(json);
  std::filesystem::remove(bad);
  std::filesystem::remove(cap);
}
