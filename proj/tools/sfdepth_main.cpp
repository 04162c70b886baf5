// Command-line front end: analyze squarefree monomial ideals given by their
// minimal primes, run the homological depth oracle and the Stanley depth
// solver, and cross-verify everything.
//
// Exit codes: 0 success, 1 mathematical inconsistency found, 2 input error,
// 3 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sfdepth/betti.hpp"
#include "sfdepth/errors.hpp"
#include "sfdepth/instances.hpp"
#include "sfdepth/json_io.hpp"
#include "sfdepth/prime_graph.hpp"
#include "sfdepth/sdepth.hpp"

namespace {

using namespace sfdepth;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitInconsistency = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// "corpus:NAME" or a path to a JSON file.
SquarefreeIdeal load_ideal(const std::string& source) {
  if (source.rfind("corpus:", 0) == 0) {
    try {
      return corpus(source.substr(7));
    } catch (const UnknownName& e) {
      throw ParseError(e.what());
    }
  }
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open " + source);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal_text(buf.str());
}

struct CommonFlags {
  bool json = false;
  bool stable = false;
  double budget_ms = 60000.0;
};

void emit(const Json& report, const CommonFlags& flags) {
  if (flags.json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  // terse human-readable rendering of the same content
  for (const auto& [key, value] : report.items()) {
    if (key == "schema" || key == "input") continue;
    std::cout << key << ": " << value.dump() << "\n";
  }
}

Json base_report(const SquarefreeIdeal& ideal) {
  Json report;
  report["schema"] = "sfdepth-report-v1";
  report["input"] = ideal_to_json(ideal);
  return report;
}

void add_timing(Json& report, const CommonFlags& flags, const std::string& key,
                double ms) {
  if (flags.stable) return;
  if (!report.contains("timings")) report["timings"] = Json::object();
  report["timings"][key] = ms;
}

int cmd_analyze(const std::string& source, const CommonFlags& flags,
                const std::string& dot_path) {
  SquarefreeIdeal ideal = load_ideal(source);
  auto start = Clock::now();
  Json report = base_report(ideal);
  report["profile"] = profile_to_json(profile(ideal));
  if (ideal.s() >= 2) {
    PrimeSumGraph g = build_graph(ideal);
    report["graph"] = graph_to_json(g);
    if (!dot_path.empty()) {
      std::ofstream out(dot_path);
      if (!out) throw ParseError("cannot write " + dot_path);
      out << export_dot(g);
    }
  } else {
    report["graph"] = Json(nullptr);  // single prime: nothing to draw
    if (!dot_path.empty()) {
      std::ofstream out(dot_path);
      out << "graph prime_sum {\n  1;\n}\n";
    }
  }
  report["verdict"] = verdict_to_json(depth_by_theorem(ideal));
  add_timing(report, flags, "analyze_ms", ms_since(start));
  emit(report, flags);
  return kExitOk;
}

int cmd_depth(const std::string& source, const CommonFlags& flags,
              int characteristic, bool all_chars) {
  SquarefreeIdeal ideal = load_ideal(source);
  Json report = base_report(ideal);
  OracleOptions opts;

  auto run = [&](FieldSpec field) {
    auto start = Clock::now();
    OracleDepth d = depth_oracle(ideal, field, opts);
    BettiTable t = hochster_betti(ideal, field, opts);
    Json j = oracle_to_json(d);
    j["betti_total"] = t.total();
    add_timing(report, flags, "oracle_" + field.str() + "_ms", ms_since(start));
    return std::pair<OracleDepth, Json>(d, j);
  };

  Json oracle;
  if (all_chars) {
    auto [d0, j0] = run(FieldSpec::rationals());
    auto [d2, j2] = run(FieldSpec::mod(2));
    oracle["char0"] = j0;
    oracle["char2"] = j2;
    oracle["disagreement"] = d0.ideal_depth != d2.ideal_depth;
  } else {
    FieldSpec field = characteristic == 0 ? FieldSpec::rationals()
                                          : FieldSpec::mod(characteristic);
    auto [d, j] = run(field);
    oracle["char" + std::to_string(characteristic)] = j;
    oracle["disagreement"] = false;
  }
  report["oracle"] = oracle;
  emit(report, flags);
  return kExitOk;
}

int cmd_sdepth(const std::string& source, const CommonFlags& flags, bool exact,
               int at_least_d, bool bounds, int split_var) {
  SquarefreeIdeal ideal = load_ideal(source);
  Json report = base_report(ideal);
  Json sd;
  int exit_code = kExitOk;

  if (at_least_d > 0) {
    FeasResult r = sdepth_at_least(ideal, at_least_d, SearchBudget{flags.budget_ms});
    sd["mode"] = "at_least";
    sd["d"] = at_least_d;
    sd["status"] = r.status == FeasStatus::Feasible     ? "feasible"
                   : r.status == FeasStatus::Infeasible ? "infeasible"
                                                        : "unknown";
    if (r.status == FeasStatus::Feasible)
      sd["certificate"] = partition_to_json(r.partition);
    add_timing(report, flags, "sdepth_ms", r.elapsed_ms);
  } else if (exact) {
    try {
      SdepthResult r = sdepth_exact(ideal, SearchBudget{flags.budget_ms});
      sd["mode"] = "exact";
      sd["value"] = r.value;
      sd["proven_exact"] = r.proven_exact;
      sd["certificate"] = partition_to_json(r.partition);
      add_timing(report, flags, "sdepth_ms", r.elapsed_ms);
      if (!r.proven_exact) exit_code = kExitBudget;
    } catch (const BudgetExceeded&) {
      throw;
    }
  } else if (bounds) {
    auto start = Clock::now();
    sd["mode"] = "bounds";
    sd["hpv"] = hpv_lower_bound(ideal);
    Json splits = Json::object();
    if (split_var > 0) {
      splits["x" + std::to_string(split_var)] =
          split_variable_bound(ideal, split_var, SplitBudget{flags.budget_ms / 4});
    } else {
      for (int v : ideal.support().members())
        splits["x" + std::to_string(v)] =
            split_variable_bound(ideal, v, SplitBudget{flags.budget_ms / 4});
    }
    sd["split"] = splits;
    add_timing(report, flags, "sdepth_ms", ms_since(start));
  }
  report["sdepth"] = sd;
  emit(report, flags);
  return exit_code;
}

struct VerifyStats {
  int checked = 0;
  int failures = 0;
  Json counterexamples = Json::array();
};

void verify_one(const SquarefreeIdeal& ideal, VerifyStats& stats,
                double budget_ms) {
  ++stats.checked;
  Json findings = Json::array();
  OracleOptions opts;

  IdealProfile prof = profile(ideal);
  DepthVerdict verdict = depth_by_theorem(ideal);
  std::optional<OracleDepth> d0, d2;
  if (ideal.n() <= opts.max_n) {
    d0 = depth_oracle(ideal, FieldSpec::rationals(), opts);
    d2 = depth_oracle(ideal, FieldSpec::mod(2), opts);
  }

  if (verdict.applicable && d0 && d2) {
    if (verdict.ideal_depth != d0->ideal_depth)
      findings.push_back("theorem depth " + std::to_string(verdict.ideal_depth) +
                         " != oracle char0 " + std::to_string(d0->ideal_depth));
    if (verdict.ideal_depth != d2->ideal_depth)
      findings.push_back("theorem depth " + std::to_string(verdict.ideal_depth) +
                         " != oracle char2 " + std::to_string(d2->ideal_depth));
  }
  if (d0 && d0->ideal_depth < 1 + prof.size)
    findings.push_back("oracle depth below 1+size");

  try {
    SdepthResult sd = sdepth_exact(ideal, SearchBudget{budget_ms});
    if (sd.proven_exact) {
      if (sd.value < hpv_lower_bound(ideal))
        findings.push_back("sdepth below 1+size");
      if (d0 && sd.value < std::max(d0->ideal_depth, d2->ideal_depth))
        findings.push_back("sdepth " + std::to_string(sd.value) +
                           " below oracle depth");
    }
  } catch (const BudgetExceeded&) {
    // sdepth not computable at this size; nothing to check
  }

  if (!findings.empty()) {
    ++stats.failures;
    Json dump;
    dump["ideal"] = ideal_to_json(ideal);
    dump["findings"] = findings;
    stats.counterexamples.push_back(dump);
  }
}

int cmd_verify(const std::string& source, const CommonFlags& flags, int random_n,
               std::uint64_t seed, int gen_n, int gen_s) {
  VerifyStats stats;
  if (random_n > 0) {
    for (int k = 0; k < random_n; ++k) {
      GenSpec spec{gen_n, gen_s, GenTarget::Random, seed + k};
      verify_one(random_ideal(spec).ideal, stats, flags.budget_ms / random_n + 50);
    }
    // concatenation min-law on a few generated concatenations
    for (int k = 0; k < std::min(5, random_n); ++k) {
      GraphSpec a{3, {{2, 3}}};
      GraphSpec b{3, {{2, 3}}};
      GraphSpec whole = concatenate(a, 1, b, 1);
      SquarefreeIdeal ideal = realize_graph(whole, 1 + static_cast<int>(k % 2));
      ++stats.checked;
      std::vector<VarSet> part1(ideal.primes().begin(), ideal.primes().begin() + 3);
      std::vector<VarSet> part2(ideal.primes().begin() + 2, ideal.primes().end());
      OracleDepth whole_d = depth_oracle(ideal, FieldSpec::rationals());
      OracleDepth d1 = depth_oracle(SquarefreeIdeal::checked(part1, ideal.n()),
                                    FieldSpec::rationals());
      OracleDepth d2 = depth_oracle(SquarefreeIdeal::checked(part2, ideal.n()),
                                    FieldSpec::rationals());
      if (whole_d.ideal_depth != std::min(d1.ideal_depth, d2.ideal_depth)) {
        ++stats.failures;
        Json dump;
        dump["ideal"] = ideal_to_json(ideal);
        dump["findings"] = Json::array({"concatenation min-law violated"});
        stats.counterexamples.push_back(dump);
      }
    }
  } else {
    verify_one(load_ideal(source), stats, flags.budget_ms);
  }

  Json report;
  report["schema"] = "sfdepth-report-v1";
  report["checked"] = stats.checked;
  report["failures"] = stats.failures;
  report["counterexamples"] = stats.counterexamples;
  emit(report, flags);
  return stats.failures == 0 ? kExitOk : kExitInconsistency;
}

int cmd_gen(const CommonFlags& flags, const std::string& corpus_name,
            const std::string& target, int n, int s, int q,
            const std::string& edges_text, std::uint64_t seed,
            const std::string& out_path) {
  SquarefreeIdeal result = [&]() {
    if (!corpus_name.empty()) return corpus(corpus_name);
    if (target == "graph") {
      GraphSpec spec;
      spec.s = s;
      std::stringstream ss(edges_text);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int i, j;
        auto dash = tok.find('-');
        if (dash != std::string::npos) {
          i = std::stoi(tok.substr(0, dash));
          j = std::stoi(tok.substr(dash + 1));
        } else if (tok.size() == 2) {
          i = tok[0] - '0';
          j = tok[1] - '0';
        } else {
          throw ParseError("cannot parse edge token '" + tok + "'");
        }
        if (i > j) std::swap(i, j);
        spec.edges.emplace_back(i, j);
      }
      return realize_graph(spec, q);
    }
    GenSpec spec;
    spec.n = n;
    spec.s = s;
    spec.seed = seed;
    if (target == "random") spec.target = GenTarget::Random;
    else if (target == "bigsize2") spec.target = GenTarget::Bigsize2;
    else if (target == "join") spec.target = GenTarget::Join;
    else if (target == "chain") spec.target = GenTarget::Chain;
    else throw ParseError("unknown target '" + target + "'");
    return random_ideal(spec).ideal;
  }();

  Json j = ideal_to_json(result);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
  (void)flags;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"squarefree monomial ideal depth toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string source, dot_path, out_path;
  int characteristic = 0;
  bool all_chars = false;
  bool exact = false, bounds = false;
  int at_least_d = 0, split_var = 0;
  int random_n = 0, gen_n = 8, gen_s = 4, gen_q = 1;
  std::uint64_t seed = 1;
  std::string corpus_name, target = "random", edges_text;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", flags.json, "emit the JSON report");
    cmd->add_flag("--stable", flags.stable, "omit timing fields");
    cmd->add_option("--budget-ms", flags.budget_ms, "wall-clock budget");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "profile, graph and theorem verdict");
  analyze->add_option("input", source, "ideal file or corpus:NAME")->required();
  analyze->add_option("--dot", dot_path, "write the graph in DOT format");
  add_common(analyze);

  CLI::App* depth = app.add_subcommand("depth", "homological depth oracle");
  depth->add_option("input", source)->required();
  depth->add_option("--char", characteristic, "field characteristic (0 or prime)");
  depth->add_flag("--all-chars", all_chars, "run characteristics 0 and 2");
  add_common(depth);

  CLI::App* sdepth = app.add_subcommand("sdepth", "Stanley depth solver");
  sdepth->add_option("input", source)->required();
  sdepth->add_flag("--exact", exact, "exact value by descending search");
  sdepth->add_option("--at-least", at_least_d, "feasibility at one level");
  sdepth->add_flag("--bounds", bounds, "constructive lower bounds");
  sdepth->add_option("--split-var", split_var, "restrict --bounds to one variable");
  add_common(sdepth);

  CLI::App* verify = app.add_subcommand("verify", "consistency suite");
  verify->add_option("input", source, "ideal file or corpus:NAME");
  verify->add_option("--random", random_n, "verify N random instances instead");
  verify->add_option("--seed", seed);
  verify->add_option("--n", gen_n, "ambient size for --random");
  verify->add_option("--s", gen_s, "prime count for --random");
  add_common(verify);

  CLI::App* gen = app.add_subcommand("gen", "emit instances");
  gen->add_option("--corpus", corpus_name, "built-in instance name");
  gen->add_option("--target", target, "random|bigsize2|join|chain|graph");
  gen->add_option("--n", gen_n);
  gen->add_option("--s", gen_s);
  gen->add_option("--q", gen_q, "deficit size for --target graph");
  gen->add_option("--edges", edges_text, "edge list for --target graph, e.g. \"23\" or \"2-3,1-4\"");
  gen->add_option("--seed", seed);
  gen->add_option("-o,--out", out_path, "output file");
  add_common(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (characteristic != 0 && !is_prime(characteristic)) {
    std::cerr << "error: --char must be 0 or a prime\n";
    return kExitInput;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(source, flags, dot_path);
    if (depth->parsed()) return cmd_depth(source, flags, characteristic, all_chars);
    if (sdepth->parsed()) {
      if (!exact && at_least_d == 0 && !bounds) {
        std::cerr << "error: choose one of --exact, --at-least D, --bounds\n";
        return kExitInput;
      }
      return cmd_sdepth(source, flags, exact, at_least_d, bounds, split_var);
    }
    if (verify->parsed()) {
      if (source.empty() && random_n == 0) {
        std::cerr << "error: give an input or --random N\n";
        return kExitInput;
      }
      return cmd_verify(source, flags, random_n, seed, gen_n, gen_s);
    }
    if (gen->parsed())
      return cmd_gen(flags, corpus_name, target, gen_n, gen_s, gen_q, edges_text,
                     seed, out_path);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
