// stringc: build, check and enumerate string C-groups of Coxeter groups.
//
// Exit codes: 0 success, 1 verification failed, 2 usage or input error,
// 3 enumeration cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "stringc/autodual.hpp"
#include "stringc/census.hpp"
#include "stringc/constructions.hpp"
#include "stringc/coxeter.hpp"
#include "stringc/cpr.hpp"
#include "stringc/cstring.hpp"
#include "stringc/json_io.hpp"
#include "stringc/rankreduce.hpp"

namespace {

using namespace stringc;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct UsageError : Error {
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

GeneratorString read_string(const std::string& path) {
  return generator_string_from_json(read_json(path));
}

std::string braces(const std::vector<std::uint64_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  std::uint64_t cap = kDefaultEnumerationCap;
  std::size_t max_cosets = 1'000'000;
  bool quiet = false;

  std::string family, input, format = "dot", group, atlas, equivalence = "automorphism",
                                 parabolic;
  std::uint32_t n = 0, r = 0;
  std::size_t rank = 0, jobs = 1;
  bool chain = false, allow_degenerate = false, json = false;
};

void progress(const Options& o, const std::string& line) {
  if (!o.quiet) std::cerr << "stringc: " << line << '\n';
}

int cmd_construct(const Options& o) {
  GeneratorString s;
  if (o.family == "dn-odd") {
    s = dn_odd_rank_n(o.n);
  } else if (o.family == "dn-even-rank3") {
    s = dn_even_rank3(o.n);
  } else if (o.family == "dn-even") {
    if (o.r == 0) throw UsageError("dn-even needs --r");
    s = dn_even_rank_r(o.n, o.r);
  } else if (o.family == "sym-skeleton") {
    if (o.r == 0) throw UsageError("sym-skeleton needs --r (the rank d)");
    s = sym_skeleton(o.n, o.r);
  } else {
    throw UsageError("unknown family " + o.family +
                     " (expected dn-odd, dn-even-rank3, dn-even, sym-skeleton)");
  }
  std::cout << to_json(s).dump(2) << '\n';
  return kOk;
}

int cmd_verify(const Options& o) {
  auto s = read_string(o.input);
  bool involutions = s.rank() > 0;
  for (const auto& g : s.gens()) involutions = involutions && is_involution(g);
  const bool string_group = involutions && is_string_group(s);
  const auto order = s.group().order();
  bool ip = false;
  if (string_group) ip = intersection_property(s, o.cap);
  bool in_group = true;
  std::string target;
  if (!o.group.empty()) {
    auto real = realize(o.group, o.max_cosets);
    target = real.type.name();
    if (real.group.degree() != s.degree())
      throw UsageError("degree " + std::to_string(s.degree()) + " does not match " + target +
                       " realization of degree " + std::to_string(real.group.degree()));
    in_group = order == real.group.order();
    for (const auto& g : s.gens()) in_group = in_group && real.group.contains(g);
  }
  const bool ok = involutions && string_group && ip && in_group;
  if (o.json) {
    Json report = to_json(s);
    report["involutions"] = involutions;
    report["string_property"] = string_group;
    report["order"] = order;
    report["intersection_property"] = ip;
    if (!target.empty()) {
      report["group"] = target;
      report["generates_group"] = in_group;
    }
    report["verified"] = ok;
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "degree: " << s.degree() << "\nrank: " << s.rank()
              << "\ninvolutions: " << yes_no(involutions)
              << "\nstring property: " << yes_no(string_group) << "\ngroup order: " << order
              << "\nschlafli: " << braces(schlafli(s))
              << "\ndegenerate: " << yes_no(is_degenerate(s))
              << "\nintersection property: " << (string_group ? yes_no(ip) : "not checked") << '\n';
    if (!target.empty()) std::cout << "generates " << target << ": " << yes_no(in_group) << '\n';
    std::cout << "C-string: " << yes_no(ok) << '\n';
  }
  return ok ? kOk : kFailed;
}

int cmd_schlafli(const Options& o) {
  std::cout << braces(schlafli(read_string(o.input))) << '\n';
  return kOk;
}

int cmd_cpr(const Options& o) {
  auto g = cpr_graph(read_string(o.input));
  if (o.format == "dot") std::cout << to_dot(g);
  else std::cout << to_json(g).dump(2) << '\n';
  return kOk;
}

int cmd_reduce(const Options& o) {
  auto s = read_string(o.input);
  if (s.rank() < 4) throw PreconditionViolation("rank reduction needs rank >= 4");
  if (o.chain) {
    Json out = Json::array();
    for (const auto& t : reduce_chain(s, o.cap)) out.push_back(to_json(t));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << to_json(reduce(s, o.cap)).dump(2) << '\n';
  }
  return kOk;
}

int cmd_census(const Options& o) {
  auto real = realize(o.group, o.max_cosets);
  CensusOptions opts;
  opts.allow_degenerate = o.allow_degenerate;
  opts.jobs = o.jobs;
  opts.cap = o.cap;
  opts.equivalence =
      o.equivalence == "conjugacy" ? Equivalence::conjugacy : Equivalence::automorphism;
  if (o.rank != 0) {
    if (o.rank < 3) throw UsageError("--rank must be at least 3");
    opts.min_rank = opts.max_rank = o.rank;
  }
  opts.progress = [&](const std::string& line) { progress(o, line); };
  auto res = census(real.group, opts);

  std::cout << "group " << real.type.name() << " (order " << res.group_order << ", degree "
            << real.group.degree() << "), degenerate strings "
            << (o.allow_degenerate ? "included" : "excluded") << ", equivalence "
            << o.equivalence << '\n';
  for (const auto& [rank, records] : res.by_rank) {
    auto s = res.summary(rank);
    std::cout << "rank " << rank << ": " << s.total << " (" << s.self_dual << " self-dual)";
    if (o.allow_degenerate)
      std::cout << ", degenerate " << s.degenerate << " (" << s.degenerate_self_dual
                << " self-dual)";
    std::cout << '\n';
  }
  auto t = res.total();
  std::cout << "total: " << t.total << " (" << t.self_dual << " self-dual)\n";
  if (!o.atlas.empty()) {
    std::ofstream out(o.atlas);
    if (!out) throw UsageError("cannot write " + o.atlas);
    out << atlas_json(res).dump(2) << '\n';
    progress(o, "atlas written to " + o.atlas);
  }
  return kOk;
}

int cmd_order(const Options& o) {
  std::cout << coxeter_order(named_diagram(parse_coxeter_type(o.group)), o.max_cosets) << '\n';
  return kOk;
}

std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t rank) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t pos = 0, v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v < 1 || v > rank)
      throw UsageError("bad parabolic index \"" + item + "\" (expected 1.." + std::to_string(rank) +
                       ")");
    out.push_back(v - 1);
  }
  return out;
}

int cmd_coxeter_rep(const Options& o) {
  auto type = parse_coxeter_type(o.group);
  if (o.parabolic.empty()) {
    std::cout << to_json(realize(type, o.max_cosets)).dump(2) << '\n';
    return kOk;
  }
  auto m = named_diagram(type);
  auto parabolic = parse_index_list(o.parabolic, m.rank());
  auto group = coset_action(todd_coxeter(m, parabolic, o.max_cosets));
  const bool faithful = group.order() == coxeter_order(m, o.max_cosets);
  Realization r{type, group, parabolic, parabolic.empty(),
                faithful ? "action on cosets of the given parabolic"
                         : "action on cosets of the given parabolic (not faithful)"};
  auto j = to_json(r);
  j["faithful"] = faithful;
  std::cout << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Construct, verify and enumerate string C-groups of finite Coxeter groups."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cap", o.cap, "Largest number of group elements to enumerate");
  app.add_option("--max-cosets", o.max_cosets, "Coset table size limit");
  app.add_flag("-q,--quiet", o.quiet, "No progress on standard error");

  auto* construct = app.add_subcommand("construct", "Print a constructed generator string");
  construct->add_option("family", o.family, "dn-odd, dn-even-rank3, dn-even or sym-skeleton")
      ->required();
  construct->add_option("--n", o.n, "Parameter n")->required();
  construct->add_option("--r", o.r, "Rank (dn-even, sym-skeleton)");

  auto* verify = app.add_subcommand("verify", "Check that a generator string is a C-string");
  verify->add_option("input", o.input, "JSON file, or - for standard input")->required();
  verify->add_option("--group", o.group, "Also require that it generates this named group");
  verify->add_flag("--json", o.json, "Print the report as JSON");

  auto* schl = app.add_subcommand("schlafli", "Print the Schlafli type");
  schl->add_option("input", o.input, "JSON file, or -")->required();

  auto* cpr = app.add_subcommand("cpr", "Print the CPR graph");
  cpr->add_option("input", o.input, "JSON file, or -")->required();
  cpr->add_option("--format", o.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* red = app.add_subcommand("reduce", "Apply rank reduction");
  red->add_option("input", o.input, "JSON file, or -")->required();
  red->add_flag("--chain", o.chain, "Reduce repeatedly and print every stage");

  auto* cen = app.add_subcommand("census", "Enumerate C-strings of a named group");
  cen->add_option("group", o.group, "H3, F4, D5, I2(7), ...")->required();
  cen->add_option("--rank", o.rank, "Only this rank");
  cen->add_flag("--allow-degenerate", o.allow_degenerate, "Include degenerate strings");
  cen->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cen->add_option("--atlas", o.atlas, "Write every class as JSON to this file");
  cen->add_option("--equivalence", o.equivalence, "automorphism or conjugacy")
      ->check(CLI::IsMember({"automorphism", "conjugacy"}));

  auto* ord = app.add_subcommand("order", "Group order by coset enumeration");
  ord->add_option("group", o.group, "Named Coxeter type")->required();

  auto* rep = app.add_subcommand("coxeter-rep", "Print a permutation realization");
  rep->add_option("group", o.group, "Named Coxeter type")->required();
  rep->add_option("--parabolic", o.parabolic, "Act on cosets of <s_i, s_j, ...> (1-based)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*verify) return cmd_verify(o);
    if (*schl) return cmd_schlafli(o);
    if (*cpr) return cmd_cpr(o);
    if (*red) return cmd_reduce(o);
    if (*cen) return cmd_census(o);
    if (*ord) return cmd_order(o);
    if (*rep) return cmd_coxeter_rep(o);
  } catch (const CapExceeded& e) {
    std::cerr << "stringc: " << e.what() << '\n';
    return kCap;
  } catch (const PreconditionViolation& e) {
    std::cerr << "stringc: " << e.what() << '\n';
    return kFailed;
  } catch (const InvariantViolation& e) {
    std::cerr << "stringc: internal error: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "stringc: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
