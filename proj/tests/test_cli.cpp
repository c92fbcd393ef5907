#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "crossnest/cli.hpp"
#include "crossnest/enumeration.hpp"

using crossnest::cli::CommandResult;
using crossnest::cli::run;

namespace {

std::size_t occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

// Every opening tag closes in order; self-closing tags stand alone.
bool balanced_xml(const std::string& doc) {
  std::vector<std::string> stack;
  for (std::size_t pos = doc.find('<'); pos != std::string::npos; pos = doc.find('<', pos + 1)) {
    const std::size_t end = doc.find('>', pos);
    if (end == std::string::npos) return false;
    const std::string tag = doc.substr(pos + 1, end - pos - 1);
    if (tag.empty()) return false;
    if (tag.back() == '/') continue;
    const std::string name = tag.substr(tag[0] == '/' ? 1 : 0, tag.find_first_of(" >") - (tag[0] == '/' ? 1 : 0));
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else {
      stack.push_back(name);
    }
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("stats reports the worked example") {
  const CommandResult r = run({"stats", "9 5 6 7 8 3 2 1 4 12 11 10"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find(R"("cr":4,"ne":3)") != std::string::npos);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["n"] == 12);
  CHECK(j["degree_class"] == "OOOOUCCCCOUC");
  CHECK(j["degree_upper"][4] == nlohmann::json::array({1, 1}));
  CHECK(j["degree_lower"][5] == nlohmann::json::array({0, 1}));
  CHECK(j["vertex_types"][10] == "loop");
  CHECK(j["upper_arcs"].size() == 7);
  CHECK(j["lower_arcs"].size() == 5);
  CHECK(j["lower_arcs"][0] == nlohmann::json::array({1, 8}));
}

TEST_CASE("stats accepts separate or comma tokens") {
  CHECK(run({"stats", "2", "3", "1"}).output == run({"stats", "2,3,1"}).output);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  const CommandResult bad = run({"stats", "1 1 2"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.error.find("repeated") != std::string::npos);
  CHECK(run({"table", "--stat", "pairs", "--max-n", "3"}).exit_code == 2);
  CHECK(run({"verify", "--check", "symmetry", "--n", "13"}).exit_code == 2);
  CHECK(run({"render", "2 1", "--format", "png"}).exit_code == 2);
}

TEST_CASE("psi through the CLI is an involution token-for-token") {
  for (const std::string input : {"9 5 6 7 8 3 2 1 4 12 11 10", "3 2 1", "1", "4 1 3 2 6 5"}) {
    const CommandResult once = run({"psi", input});
    REQUIRE(once.exit_code == 0);
    const CommandResult twice = run({"psi", once.output});
    REQUIRE(twice.exit_code == 0);
    CHECK(tokens(twice.output) == tokens(input));
  }
  CHECK(tokens(run({"psi", "3 2 1"}).output) == std::vector<std::string>{"2", "3", "1"});
}

TEST_CASE("table emits the crossing distribution as CSV") {
  const CommandResult r = run({"table", "--stat", "crossing", "--max-n", "4"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("n,k,count\n", 0) == 0);
  CHECK(r.output.find("\n4,2,10\n") != std::string::npos);
  CHECK(r.output.find("\n4,1,14\n") != std::string::npos);

  // Re-parse and check each n sums to n!.
  std::map<std::size_t, std::uint64_t> sums;
  std::istringstream in(run({"table", "--stat", "nesting", "--max-n", "6"}).output);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::size_t n = 0, k = 0;
    std::uint64_t c = 0;
    char comma = 0;
    std::istringstream row(line);
    row >> n >> comma >> k >> comma >> c;
    sums[n] += c;
  }
  REQUIRE(sums.size() == 6);
  for (const auto& [n, s] : sums) CHECK(s == crossnest::factorial(n));
}

TEST_CASE("joint emits refined and unrefined CSV") {
  const CommandResult plain = run({"joint", "--n", "3"});
  REQUIRE(plain.exit_code == 0);
  CHECK(plain.output == "n,cr,ne,count\n3,1,1,4\n3,1,2,1\n3,2,1,1\n");

  const CommandResult refined = run({"joint", "--n", "3", "--by-degree"});
  REQUIRE(refined.exit_code == 0);
  CHECK(refined.output.rfind("n,cr,ne,degree_class,count\n", 0) == 0);
  CHECK(refined.output.find("3,1,2,OUC,1\n") != std::string::npos);
  CHECK(refined.output.find("3,2,1,OUC,1\n") != std::string::npos);

  std::map<std::size_t, std::uint64_t> sums;
  std::istringstream in(run({"joint", "--n", "5", "--by-degree"}).output);
  std::string line;
  std::getline(in, line);
  std::uint64_t total = 0;
  while (std::getline(in, line)) total += std::stoull(line.substr(line.rfind(',') + 1));
  CHECK(total == 120);
}

TEST_CASE("verify suites pass and report JSON") {
  for (const std::string check : {"symmetry", "maxnesting", "catalan", "involution"}) {
    const CommandResult r = run({"verify", "--check", check, "--n", "6"});
    INFO(check);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["passed"] == true);
    CHECK(j["results"].size() == 6);
  }
  const CommandResult random = run({"verify", "--check", "involution", "--n", "3", "--random", "200",
                                    "--random-max-n", "12", "--seed", "9"});
  CHECK(random.exit_code == 0);
}

TEST_CASE("render") {
  const CommandResult ascii = run({"render", "2 1", "--format", "ascii"});
  REQUIRE(ascii.exit_code == 0);
  CHECK(ascii.output == "+---+\n1   2\n+---+\n");

  const CommandResult svg = run({"render", "9 5 6 7 8 3 2 1 4 12 11 10", "--format", "svg"});
  REQUIRE(svg.exit_code == 0);
  CHECK(balanced_xml(svg.output));
  CHECK(occurrences(svg.output, R"(class="vertex")") == 12);
  CHECK(occurrences(svg.output, R"(class="arc upper)") == 7);
  CHECK(occurrences(svg.output, R"(class="arc upper loop")") == 1);
  CHECK(occurrences(svg.output, R"(class="arc lower")") == 5);

  const CommandResult one = run({"render", "1", "--format", "svg"});
  CHECK(occurrences(one.output, R"(class="vertex")") == 1);
  CHECK(occurrences(one.output, R"(class="arc upper loop")") == 1);
  CHECK(balanced_xml(one.output));

  std::string big;
  for (int v = 61; v >= 1; --v) big += std::to_string(v) + " ";
  CHECK(run({"render", big, "--format", "ascii"}).exit_code == 2);
  CHECK(run({"render", big, "--format", "svg"}).exit_code == 0);
}

TEST_CASE("--out writes the payload to a file") {
  const auto path = std::filesystem::temp_directory_path() / "crossnest_cli_out.csv";
  std::filesystem::remove(path);
  const CommandResult r = run({"--out", path.string(), "table", "--max-n", "3"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "n,k,count\n1,1,1\n2,1,2\n3,1,5\n3,2,1\n");
  std::filesystem::remove(path);
}
