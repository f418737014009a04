#ifndef UPHO_TOOLS_COMMANDS_HPP_
#define UPHO_TOOLS_COMMANDS_HPP_

#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "upho/upho.hpp"

namespace upho::cli {

enum ExitCode : int { Pass = 0, PropertyFailure = 1, UsageError = 2 };

struct ConstructionArgs {
  std::string name;
  std::size_t depth = 6;
  std::uint32_t k = 2;
  std::string a;
  std::string b;
  std::array<std::uint32_t, 10> planar_a{};
  std::string schedule;
  std::string relations;
  std::string indices;
  std::string left;
  std::string right;
};

struct Built {
  RankedPoset poset;
  std::optional<MonoidPresentation> presentation;
};

inline std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item[0] == '-')
      throw Error(ErrorCode::MalformedInput, "expected a non-negative integer, got \"" + item + "\"");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void add_construction_options(CLI::App* app, ConstructionArgs& args) {
  app->add_option("--depth", args.depth, "number of ranks")->check(CLI::PositiveNumber);
  app->add_option("--k", args.k, "tree arity");
  app->add_option("--a", args.a, "numerator parameters, e.g. 1,2");
  app->add_option("--b", args.b, "denominator parameter(s), e.g. 3 or 2,3");
  for (std::size_t i = 2; i < args.planar_a.size(); ++i)
    app->add_option("--a" + std::to_string(i), args.planar_a[i], "planar: root-bifurcations at rank " + std::to_string(i));
  app->add_option("--schedule", args.schedule, "planar: explicit events rank:pair,...");
  app->add_option("--relations", args.relations, "presentation file");
  app->add_option("--indices", args.indices, "sfamily: relation indices, e.g. 2,3");
  app->add_option("--left", args.left, "product-of: left poset file");
  app->add_option("--right", args.right, "product-of: right poset file");
}

inline std::uint32_t single_b(const ConstructionArgs& args) {
  auto b = parse_list(args.b);
  if (b.size() != 1) throw Error(ErrorCode::MalformedInput, "--b takes exactly one value here");
  return b.front();
}

inline MergeSchedule planar_schedule(const ConstructionArgs& args) {
  const auto b = single_b(args);
  if (args.schedule.empty()) {
    std::map<std::size_t, std::uint32_t> a;
    for (std::size_t i = 2; i < args.planar_a.size(); ++i)
      if (args.planar_a[i]) a[i] = args.planar_a[i];
    return MergeSchedule::from_counts(b, a);
  }
  MergeSchedule s;
  s.b = b;
  std::istringstream in(args.schedule);
  for (std::string item; std::getline(in, item, ',');) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::MalformedInput, "schedule items are rank:pair");
    const auto rank = parse_list(item.substr(0, colon));
    const auto pair = parse_list(item.substr(colon + 1));
    if (rank.size() != 1 || pair.size() != 1) throw Error(ErrorCode::MalformedInput, "schedule items are rank:pair");
    s.events.push_back({rank[0], pair[0]});
    ++s.a[rank[0]];
  }
  s.validate();
  return s;
}

inline Built build(const ConstructionArgs& args) {
  const auto& n = args.name;
  const auto d = args.depth;
  if (n == "chain") return {chain(d), std::nullopt};
  if (n == "tree") return {k_ary_tree(args.k, d), std::nullopt};
  if (n == "grid") return {grid_construction({parse_list(args.a), d}), std::nullopt};
  if (n == "bconstruction") return {b_construction({parse_list(args.a), single_b(args), d}), std::nullopt};
  if (n == "theorem12") return {theorem12_construction(parse_list(args.a), parse_list(args.b), d), std::nullopt};
  if (n == "planar") return {planar_construction(planar_schedule(args), d), std::nullopt};
  if (n == "product-of") {
    if (args.left.empty() || args.right.empty())
      throw Error(ErrorCode::MalformedInput, "product-of needs --left and --right");
    return {product(load_poset(args.left), load_poset(args.right), d), std::nullopt};
  }
  std::optional<MonoidPresentation> pres;
  if (n == "monoid") {
    if (args.relations.empty()) throw Error(ErrorCode::MalformedInput, "monoid needs --relations FILE");
    pres = parse_presentation(read_file(args.relations));
  } else if (n == "stern") {
    pres = stern_presentation();
  } else if (n == "sfamily") {
    auto list = parse_list(args.indices);
    pres = s_family(std::set<std::uint32_t>(list.begin(), list.end()));
  } else {
    throw Error(ErrorCode::UnknownConstruction, "unknown construction \"" + n + "\"");
  }
  return {monoid_poset(*pres, d), pres};
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  f << text;
}

struct AnalyzeArgs {
  std::string input;
  bool rgf = false;
  std::string match;
  bool upho = false;
  std::size_t min_depth = 3;
  std::size_t max_root_rank = 2;
  bool meets = false;
  bool merges = false;
  std::size_t schur = 0;
  std::string davydov;
  bool cancellation = false;
  std::string format = "json";
};

inline Json schur_report(const IntSeries& r, std::size_t max_degree, bool& ok) {
  Json rep;
  const auto verdict = is_schur_positive(r, max_degree);
  rep["max_degree"] = max_degree;
  rep["positive"] = verdict.positive;
  if (verdict.witness)
    rep["witness"] = {{"degree", verdict.witness->degree},
                      {"partition", verdict.witness->lambda.parts},
                      {"coefficient", verdict.witness->coefficient.str()}};
  else
    rep["witness"] = nullptr;
  Json degrees = Json::array();
  for (std::size_t n = 1; n <= max_degree; ++n)
    degrees.push_back({{"degree", n}, {"terms", format_schur(schur_expand(ehrenborg_monomial(r, n)))}});
  rep["expansions"] = std::move(degrees);
  ok = ok && verdict.positive;
  return rep;
}

inline int analyze(const ConstructionArgs& cargs, const AnalyzeArgs& args, std::ostream& out) {
  const bool needs_poset = args.rgf || !args.match.empty() || args.upho || args.meets || args.merges ||
                           args.schur > 0 || args.cancellation || args.format != "json";
  std::optional<Built> built;
  if (!args.input.empty()) {
    built = Built{load_poset(args.input), std::nullopt};
  } else if (!cargs.name.empty()) {
    built = build(cargs);
  } else if (!args.davydov.empty() && !needs_poset) {
    const bool d = davydov_check(parse_rational(args.davydov));
    Json report{{"davydov", {{"expression", args.davydov}, {"totally_positive", d}}},
                {"status", d ? "PASS" : "FAIL"}};
    out << report.dump(2) << "\n";
    return d ? Pass : PropertyFailure;
  } else {
    throw Error(ErrorCode::MalformedInput, "analyze needs a construction name or --input FILE");
  }
  const RankedPoset& p = built->poset;
  const IntSeries series = rgf(p);
  bool ok = true;

  Json report;
  report["poset"] = {{"depth", p.depth()}, {"size", p.size()}, {"digest", canonical_digest(p)}};
  if (args.rgf || !args.match.empty()) report["rgf"] = to_json(series);
  if (!args.match.empty()) {
    const auto f = parse_rational(args.match);
    const bool m = match_rational(series, f);
    report["match"] = {{"expression", args.match},
                       {"expected", to_json(expand_rational(f, series.size() - 1))},
                       {"status", m ? "MATCH" : "MISMATCH"}};
    ok = ok && m;
  }
  if (args.upho) {
    const auto u = verify_upho(p, args.min_depth, args.max_root_rank);
    report["upho"] = {{"min_depth", u.min_depth},
                      {"max_root_rank", u.max_root_rank},
                      {"checked_roots", u.checked_roots.size()},
                      {"failures", u.failures},
                      {"status", u.pass() ? "PASS" : "FAIL"}};
    ok = ok && u.pass();
  }
  if (args.meets) {
    const bool unique_min = unique_min_check(p);
    const auto failure = find_meet_failure(p);
    Json rep{{"unique_minimum", unique_min}, {"meet_semilattice", !failure.has_value()}};
    rep["failure"] = failure ? Json{failure->first, failure->second} : Json(nullptr);
    report["meets"] = std::move(rep);
    ok = ok && unique_min && !failure;
  }
  if (args.merges) {
    Json rep;
    try {
      const auto c = classify_merges(p);
      rep["root_bifurcated"] = c.root_bifurcated;
      rep["bifurcated"] = c.bifurcated;
      rep["total_root_bifurcated"] = c.total_root_bifurcated();
      const bool rec = planar_rgf_check(p);
      rep["recurrence"] = rec;
      ok = ok && rec;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::StructureError) throw;
      rep["error"] = e.what();
      ok = false;
    }
    if (p.has_embedding()) rep["crossings"] = check_embedding(p).size();
    report["merges"] = std::move(rep);
  }
  if (args.schur > 0) report["schur"] = schur_report(series, args.schur, ok);
  if (!args.davydov.empty()) {
    const bool d = davydov_check(parse_rational(args.davydov));
    report["davydov"] = {{"expression", args.davydov}, {"totally_positive", d}};
    ok = ok && d;
  }
  if (args.cancellation) {
    if (!built->presentation)
      throw Error(ErrorCode::MalformedInput, "--cancellation needs a presentation-based construction");
    const auto& pres = *built->presentation;
    const auto c = left_cancellation_check(pres, p.depth() - 1);
    Json rep{{"passed", c.passed}};
    if (c.witness)
      rep["witness"] = {{"letter", pres.alphabet()[c.witness->letter]},
                        {"x", pres.format(c.witness->x)},
                        {"y", pres.format(c.witness->y)}};
    else
      rep["witness"] = nullptr;
    report["cancellation"] = std::move(rep);
    ok = ok && c.passed;
  }
  report["status"] = ok ? "PASS" : "FAIL";

  if (args.format == "series") {
    out << series.to_string() << "\n";
  } else if (args.format == "schur") {
    if (args.schur == 0) throw Error(ErrorCode::MalformedInput, "--format schur needs --schur N");
    for (const auto& deg : report["schur"]["expansions"]) {
      out << "degree " << deg["degree"].get<std::size_t>() << "\n";
      for (const auto& line : deg["terms"]) out << line.get<std::string>() << "\n";
    }
  } else {
    out << report.dump(2) << "\n";
  }
  return ok ? Pass : PropertyFailure;
}

/// "∅;2;3;2,3" -> four index sets.  "∅", "{}" and "" all mean the empty set.
inline std::vector<std::set<std::uint32_t>> parse_subsets(const std::string& text) {
  std::vector<std::set<std::uint32_t>> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ';')) {
    for (const std::string empty : {"∅", "{}", "{", "}"}) {
      for (auto pos = item.find(empty); pos != std::string::npos; pos = item.find(empty))
        item.erase(pos, empty.size());
    }
    auto list = parse_list(item);
    out.emplace_back(list.begin(), list.end());
  }
  if (!text.empty() && text.back() == ';') out.emplace_back();
  return out;
}

inline int separate(const std::string& subsets_text, std::size_t max_len, std::ostream& out) {
  const auto subsets = parse_subsets(subsets_text);
  if (subsets.empty()) throw Error(ErrorCode::MalformedInput, "no subsets given");
  const auto r = distinct_rgf_check(subsets, max_len);
  Json rep;
  rep["max_length"] = max_len;
  Json list = Json::array();
  for (std::size_t i = 0; i < subsets.size(); ++i)
    list.push_back({{"indices", std::vector<std::uint32_t>(subsets[i].begin(), subsets[i].end())},
                    {"counts", r.counts[i]}});
  rep["subsets"] = std::move(list);
  rep["distinct"] = r.distinct;
  rep["coinciding"] = r.coinciding ? Json{r.coinciding->first, r.coinciding->second} : Json(nullptr);
  Json sharp = Json::array();
  for (const auto& [i, j] : r.sharp_failures) sharp.push_back({i, j});
  rep["differ_by_one_failures"] = std::move(sharp);
  const bool ok = r.distinct && r.sharp_failures.empty();
  rep["status"] = ok ? "PASS" : "FAIL";
  out << rep.dump(2) << "\n";
  return ok ? Pass : PropertyFailure;
}

inline std::string class_listing(const MonoidPresentation& pres, const CongruenceTable& table) {
  std::ostringstream s;
  for (std::size_t len = 0; len <= table.max_length(); ++len) {
    s << "length " << len << " (" << table.class_count(len) << "):";
    for (std::uint32_t c = 0; c < table.class_count(len); ++c) {
      s << (c ? " |" : "") << " ";
      const auto members = table.members(len, c);
      for (std::size_t i = 0; i < members.size(); ++i) s << (i ? "=" : "") << pres.format(members[i]);
      if (len == 0) s << "e";
    }
    s << "\n";
  }
  return s.str();
}

/// Parses argv and dispatches.  Output goes to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upho poset constructions and checks", "upho"};
  app.require_subcommand(1);

  ConstructionArgs cargs;
  bool dot = false;
  std::string output;
  auto* construct = app.add_subcommand("construct", "build a poset and print it as JSON");
  construct->add_option("name", cargs.name,
                        "chain, tree, grid, bconstruction, theorem12, planar, monoid, stern, sfamily, product-of")
      ->required();
  add_construction_options(construct, cargs);
  construct->add_flag("--dot", dot, "print a DOT Hasse diagram instead of JSON");
  construct->add_option("-o,--output", output, "output file");

  ConstructionArgs acargs;
  AnalyzeArgs aargs;
  auto* analyze_cmd = app.add_subcommand("analyze", "run checks on a poset");
  analyze_cmd->add_option("name", acargs.name, "construction name (or use --input)");
  add_construction_options(analyze_cmd, acargs);
  analyze_cmd->add_option("--input", aargs.input, "poset JSON file");
  analyze_cmd->add_flag("--rgf", aargs.rgf, "rank sizes");
  analyze_cmd->add_option("--match", aargs.match, "compare the rank sizes with a rational function");
  analyze_cmd->add_flag("--upho", aargs.upho, "compare order filters with the poset");
  analyze_cmd->add_option("--min-depth", aargs.min_depth)->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--max-root-rank", aargs.max_root_rank);
  analyze_cmd->add_flag("--meets", aargs.meets, "unique minimum and meet semilattice");
  analyze_cmd->add_flag("--merges", aargs.merges, "bifurcation classification and rank recurrence");
  analyze_cmd->add_option("--schur", aargs.schur, "Schur expansion through this degree");
  analyze_cmd->add_option("--davydov", aargs.davydov, "root test for a rational function");
  analyze_cmd->add_flag("--cancellation", aargs.cancellation, "left cancellation of a presentation");
  analyze_cmd->add_option("--format", aargs.format)->check(CLI::IsMember({"json", "series", "schur"}));

  std::string subsets;
  std::size_t sep_depth = 8;
  auto* separate_cmd = app.add_subcommand("separate", "class counts for subsets of the t_n relations");
  separate_cmd->add_option("--subsets", subsets, "e.g. \"∅;2;3;2,3\"")->required();
  separate_cmd->add_option("--depth", sep_depth, "maximum word length");

  std::string relations_file;
  std::size_t monoid_depth = 5;
  bool classes = false;
  std::string monoid_output;
  auto* monoid_cmd = app.add_subcommand("monoid", "presentation tools");
  monoid_cmd->require_subcommand(1);
  auto* monoid_build = monoid_cmd->add_subcommand("build", "poset of a presentation file");
  monoid_build->add_option("--relations", relations_file)->required();
  monoid_build->add_option("--depth", monoid_depth)->check(CLI::PositiveNumber);
  monoid_build->add_flag("--classes", classes, "list the congruence classes instead");
  monoid_build->add_option("-o,--output", monoid_output);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Pass : UsageError;
  }

  try {
    if (*construct) {
      const auto built = build(cargs);
      write_output(dot ? to_dot(built.poset) : to_json(built.poset).dump() + "\n", output, out);
      return Pass;
    }
    if (*analyze_cmd) return analyze(acargs, aargs, out);
    if (*separate_cmd) return separate(subsets, sep_depth, out);
    if (*monoid_build) {
      const auto pres = parse_presentation(read_file(relations_file));
      const auto table = congruence_classes(pres, monoid_depth - 1);
      write_output(classes ? class_listing(pres, table) : to_json(monoid_poset(table, monoid_depth)).dump() + "\n",
                   monoid_output, out);
      return Pass;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }
  return UsageError;
}

}  // namespace upho::cli

#endif  // UPHO_TOOLS_COMMANDS_HPP_
