#include "crossnest/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "crossnest/enumeration.hpp"
#include "crossnest/error.hpp"
#include "crossnest/involution.hpp"
#include "crossnest/permutation.hpp"
#include "crossnest/render.hpp"
#include "crossnest/statistics.hpp"

namespace crossnest::cli {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) {
    if (!s.empty()) s.push_back(' ');
    s += t;
  }
  return s;
}

json arcs_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.left, a.right});
  return out;
}

json pairs_json(const std::vector<DegreePair>& pairs) {
  json out = json::array();
  for (const DegreePair& d : pairs) out.push_back({d.first, d.second});
  return out;
}

std::string stats_json(const Permutation& perm) {
  const ArcDiagram d = arc_diagram(perm);
  const DegreeSequence deg = degree_sequence(perm);
  json types = json::array();
  for (const VertexType t : vertex_types(perm)) types.push_back(std::string(to_string(t)));
  json out;
  out["n"] = perm.size();
  out["cr"] = crossing_number(perm);
  out["ne"] = nesting_number(perm);
  out["degree_upper"] = pairs_json(deg.upper);
  out["degree_lower"] = pairs_json(deg.lower);
  out["degree_class"] = degree_class_string(perm);
  out["vertex_types"] = std::move(types);
  out["upper_arcs"] = arcs_json(d.upper);
  out["lower_arcs"] = arcs_json(d.lower);
  return out.dump() + "\n";
}

std::string table_csv(ChainKind stat, std::size_t max_n, unsigned jobs) {
  std::ostringstream out;
  out << "n,k,count\n";
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const auto& [key, count] : crossing_distribution(n, stat, jobs).entries) {
      out << n << ',' << key.i << ',' << count << '\n';
    }
  }
  return out.str();
}

std::string joint_csv(std::size_t n, bool by_degree, unsigned jobs) {
  std::ostringstream out;
  out << (by_degree ? "n,cr,ne,degree_class,count\n" : "n,cr,ne,count\n");
  for (const auto& [key, count] : joint_distribution(n, by_degree, jobs).entries) {
    out << n << ',' << key.i << ',' << *key.j;
    if (by_degree) out << ',' << key.degree_class;
    out << ',' << count << '\n';
  }
  return out.str();
}

json key_json(const TableKey& key) {
  json k;
  k["cr"] = key.i;
  k["ne"] = *key.j;
  if (!key.degree_class.empty()) k["degree_class"] = key.degree_class;
  return k;
}

struct VerifyOptions {
  std::string check;
  std::size_t n = 0;
  std::size_t random_count = 0;
  std::size_t random_max_n = max_enumeration_n;
  std::uint64_t seed = 1;
};

void verify_involution_on(const Permutation& p, std::size_t& failures, json& first_failure) {
  const PsiCheck c = check_psi(p);
  if (!c.ok()) {
    if (failures == 0) {
      first_failure = {{"perm", to_string(p)},
                       {"involutive", c.involutive},
                       {"swaps_chains", c.swaps_chains},
                       {"preserves_degree", c.preserves_degree}};
    }
    ++failures;
  }
}

json run_verify(const VerifyOptions& opt, unsigned jobs) {
  json report;
  report["check"] = opt.check;
  report["n"] = opt.n;
  json results = json::array();
  bool passed = true;

  if (opt.check == "symmetry") {
    for (std::size_t n = 1; n <= opt.n; ++n) {
      const SymmetryReport r = verify_symmetry(n, true, jobs);
      json violations = json::array();
      for (const TableKey& k : r.violations) violations.push_back(key_json(k));
      results.push_back({{"n", n}, {"passed", r.passed}, {"violations", violations}});
      passed = passed && r.passed;
    }
  } else if (opt.check == "maxnesting") {
    for (std::size_t n = 1; n <= opt.n; ++n) {
      const std::uint64_t nest = max_nesting_count(n, jobs);
      const std::uint64_t cross = max_crossing_count(n, jobs);
      const std::uint64_t formula = max_nesting_closed_form(n);
      const bool ok = nest == formula && cross == formula;
      results.push_back({{"n", n}, {"passed", ok}, {"max_nesting", nest},
                         {"max_crossing", cross}, {"closed_form", formula}});
      passed = passed && ok;
    }
  } else if (opt.check == "catalan") {
    for (std::size_t n = 1; n <= opt.n; ++n) {
      const std::uint64_t noncrossing =
          crossing_distribution(n, ChainKind::crossing, jobs).count({{}, 1, {}});
      const bool ok = noncrossing == catalan(n);
      results.push_back(
          {{"n", n}, {"passed", ok}, {"noncrossing", noncrossing}, {"catalan", catalan(n)}});
      passed = passed && ok;
    }
  } else if (opt.check == "involution") {
    for (std::size_t n = 1; n <= opt.n; ++n) {
      std::size_t failures = 0;
      json first_failure;
      auto stream = iterate_permutations(n);
      std::uint64_t checked = 0;
      while (auto p = stream.next()) {
        verify_involution_on(*p, failures, first_failure);
        ++checked;
      }
      json entry = {{"n", n}, {"passed", failures == 0}, {"checked", checked}, {"failures", failures}};
      if (failures > 0) entry["first_failure"] = first_failure;
      results.push_back(entry);
      passed = passed && failures == 0;
    }
    if (opt.random_count > 0) {
      std::mt19937_64 rng(opt.seed);
      std::uniform_int_distribution<std::size_t> size(1, opt.random_max_n);
      std::size_t failures = 0;
      json first_failure;
      for (std::size_t s = 0; s < opt.random_count; ++s) {
        std::vector<Vertex> image(size(rng));
        for (std::size_t i = 0; i < image.size(); ++i) image[i] = i + 1;
        std::shuffle(image.begin(), image.end(), rng);
        verify_involution_on(Permutation(std::move(image)), failures, first_failure);
      }
      json entry = {{"random", opt.random_count}, {"max_n", opt.random_max_n},
                    {"seed", opt.seed}, {"passed", failures == 0}, {"failures", failures}};
      if (failures > 0) entry["first_failure"] = first_failure;
      results.push_back(entry);
      passed = passed && failures == 0;
    }
  }
  report["passed"] = passed;
  report["results"] = std::move(results);
  return report;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Crossings and nestings of permutations"};
  app.name("crossnest");
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  unsigned jobs = 0;
  app.add_option("--out", out_path, "Write the payload to a file instead of standard output");
  app.add_option("--jobs", jobs, "Worker threads for enumeration (0 = all cores)");

  std::vector<std::string> perm_tokens;

  auto* stats = app.add_subcommand("stats", "Crossing/nesting numbers and degree data as JSON");
  stats->add_option("perm", perm_tokens, "Permutation in one-line notation")->required();

  auto* psi_cmd = app.add_subcommand("psi", "Apply the crossing/nesting involution");
  psi_cmd->add_option("perm", perm_tokens, "Permutation in one-line notation")->required();

  std::string stat = "crossing";
  std::size_t max_n = 0;
  auto* table = app.add_subcommand("table", "CSV counts by crossing or nesting number");
  table->add_option("--stat", stat)->check(CLI::IsMember({"crossing", "nesting"}));
  table->add_option("--max-n", max_n)->required()->check(CLI::Range(std::size_t{1}, max_enumeration_n));

  std::size_t joint_n = 0;
  bool by_degree = false;
  auto* joint = app.add_subcommand("joint", "CSV joint distribution of (Cr, Ne)");
  joint->add_option("--n", joint_n)->required()->check(CLI::Range(std::size_t{1}, max_enumeration_n));
  joint->add_flag("--by-degree", by_degree, "Refine by degree-class string");

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Exhaustive verification suites");
  verify->add_option("--check", vopt.check)
      ->required()
      ->check(CLI::IsMember({"symmetry", "maxnesting", "catalan", "involution"}));
  verify->add_option("--n", vopt.n)->required()->check(CLI::Range(std::size_t{1}, max_enumeration_n));
  verify->add_option("--random", vopt.random_count, "Extra random permutations (involution only)");
  verify->add_option("--random-max-n", vopt.random_max_n)
      ->check(CLI::Range(std::size_t{1}, std::size_t{200}));
  verify->add_option("--seed", vopt.seed);

  std::string format = "ascii";
  auto* render_cmd = app.add_subcommand("render", "Draw the arc diagram");
  render_cmd->add_option("perm", perm_tokens, "Permutation in one-line notation")->required();
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = usage_error;
    result.error = std::string(e.what()) + "\n" + app.help();
    return result;
  }

  try {
    if (stats->parsed()) {
      result.output = stats_json(parse_permutation(join(perm_tokens)));
    } else if (psi_cmd->parsed()) {
      result.output = to_string(psi(parse_permutation(join(perm_tokens)))) + "\n";
    } else if (table->parsed()) {
      result.output = table_csv(stat == "crossing" ? ChainKind::crossing : ChainKind::nesting, max_n, jobs);
    } else if (joint->parsed()) {
      result.output = joint_csv(joint_n, by_degree, jobs);
    } else if (verify->parsed()) {
      const json report = run_verify(vopt, jobs);
      result.output = report.dump() + "\n";
      if (!report["passed"].get<bool>()) result.exit_code = verification_failed;
    } else if (render_cmd->parsed()) {
      result.output = render(parse_permutation(join(perm_tokens)),
                             format == "svg" ? RenderFormat::svg : RenderFormat::ascii);
    }
  } catch (const InvalidInput& e) {
    result.exit_code = usage_error;
    result.error = std::string("error: ") + e.what() + "\n" + app.help();
    result.output.clear();
    return result;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      result.exit_code = usage_error;
      result.error = "error: cannot open " + out_path + "\n";
      return result;
    }
    file << result.output;
    result.output.clear();
  }
  return result;
}

}  // namespace crossnest::cli
