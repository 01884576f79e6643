// x3sat command line: solve / trace / fuzz / shrink / verify.
//
// Exit codes: 10 SAT, 20 UNSAT, 30 unverified claimed verdict,
// 0 success (fuzz/shrink/verify-ok), 1 verify-fail or operational error,
// 2 usage error, 3 input parse error.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "x3sat/x3sat.hpp"

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitUnverified = 30;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

std::string witness_csv(const x3sat::TotalAssignment &m) {
  std::ostringstream os;
  for (int v = 1; v <= m.num_vars(); ++v) {
    if (v > 1) os << ',';
    os << (m.value(v) ? 1 : 0);
  }
  return os.str();
}

x3sat::OrderingPolicy make_policy(const std::string &order,
                                  const std::string &polarity) {
  return x3sat::policy_from_token(order + "+" + polarity);
}

x3sat::FormulaState load_formula(const std::string &path) {
  return x3sat::parse(x3sat::read_text_file(path));
}

int run_salum(const x3sat::FormulaState &f, const x3sat::OrderingPolicy &policy,
              const std::string &trace_out) {
  x3sat::SalumVerdict verdict = x3sat::scan(f, policy);
  if (!trace_out.empty())
    x3sat::write_text_file(trace_out,
                           x3sat::trace_file_contents(verdict, f.num_vars));
  if (!verdict.claimed_sat()) {
    std::cout << "s UNSAT\n";
    return kExitUnsat;
  }
  auto witness = x3sat::audit_claimed_sat(f, verdict.claimed_minterm);
  if (witness) {
    std::cout << "s SAT\n" << "v " << witness_csv(*witness) << '\n';
    return kExitSat;
  }
  std::cout << "s SAT UNVERIFIED\nm";
  for (x3sat::Literal l : verdict.claimed_minterm.literals())
    std::cout << ' ' << l;
  std::cout << " 0\n";
  return kExitUnverified;
}

int run_solve(const std::string &path, const std::string &algorithm,
              const x3sat::OrderingPolicy &policy) {
  x3sat::FormulaState f = load_formula(path);
  if (algorithm == "salum") return run_salum(f, policy, "");
  if (algorithm == "dpll") {
    x3sat::OracleVerdict v = x3sat::dpll_solve(f);
    if (!v.sat()) {
      std::cout << "s UNSAT\n";
      return kExitUnsat;
    }
    std::cout << "s SAT\n" << "v " << witness_csv(*v.witness) << '\n';
    return kExitSat;
  }
  // brute
  x3sat::ModelSet models = x3sat::brute_force(f);
  if (models.empty()) {
    std::cout << "s UNSAT\n";
    return kExitUnsat;
  }
  std::cout << "s SAT\nc models " << models.size() << '\n';
  constexpr size_t kPrintCap = 64;
  for (size_t i = 0; i < models.models.size() && i < kPrintCap; ++i)
    std::cout << "v " << witness_csv(models.models[i]) << '\n';
  if (models.size() > kPrintCap)
    std::cout << "c (" << models.size() - kPrintCap << " more not shown)\n";
  return kExitSat;
}

std::string sanitize(const std::string &token) {
  std::string out = token;
  for (char &ch : out)
    if (ch == ':' || ch == ',') ch = '-';
  return out;
}

int run_fuzz(uint64_t seed, int num, int vars, int clauses,
             const std::string &report_dir) {
  x3sat::CampaignResult result =
      x3sat::run_campaign({seed, num, vars, clauses});
  if (!report_dir.empty()) {
    std::filesystem::create_directories(report_dir);
    for (const x3sat::CampaignHit &hit : result.hits) {
      std::string name = "d_" + std::to_string(hit.seed) + "_" +
                         sanitize(x3sat::to_token(hit.disagreement.policy)) +
                         ".x3r";
      x3sat::write_text_file(report_dir + "/" + name,
                             x3sat::serialize_report(hit.disagreement));
    }
  }
  std::cout << "c runs " << result.runs << "\ndisagreements " << result.hits.size()
            << '\n';
  return 0;
}

int run_shrink(const std::string &path) {
  x3sat::ReportInput input = x3sat::parse_report(x3sat::read_text_file(path));
  x3sat::CompareResult r = x3sat::compare(input.formula, input.policy);
  auto *d = std::get_if<x3sat::Disagreement>(&r);
  if (!d) {
    std::cerr << "error: report does not reproduce a disagreement\n";
    return kExitFail;
  }
  x3sat::Disagreement shrunk = x3sat::shrink(*d);
  x3sat::write_text_file(path, x3sat::serialize_report(shrunk));
  std::cout << "c shrunk to " << shrunk.formula.clauses.size() << " clauses, "
            << shrunk.formula.literal_count() << " literals\n";
  return 0;
}

int run_verify(const std::string &path, const std::string &csv) {
  x3sat::FormulaState f = load_formula(path);
  std::vector<bool> bits;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item == "0") bits.push_back(false);
    else if (item == "1") bits.push_back(true);
    else throw CLI::ValidationError("assignment", "expected 0/1 values");
  }
  if (static_cast<int>(bits.size()) != f.num_vars)
    throw CLI::ValidationError(
        "assignment", "expected " + std::to_string(f.num_vars) + " values");
  if (x3sat::evaluate_formula(x3sat::TotalAssignment(bits), f)) {
    std::cout << "s VERIFIED\n";
    return 0;
  }
  std::cout << "s REFUTED\n";
  return kExitFail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exactly-one 3-SAT toolkit"};
  app.require_subcommand(1);

  std::string file, algorithm, order = "lex", polarity = "pos";
  std::string out_path, report_dir, assignment_csv;
  uint64_t seed = 1;
  int num = 100, vars = 5, clauses = 6;

  auto add_ordering_flags = [&](CLI::App *cmd) {
    cmd->add_option("--order", order,
                    "decision order: lex|revlex|freq|fixed:<csv>");
    cmd->add_option("--polarity", polarity, "polarity tried first: pos|neg")
        ->check(CLI::IsMember({"pos", "neg"}));
  };

  CLI::App *solve = app.add_subcommand("solve", "decide one formula");
  solve->add_option("file", file, "X3F input")->required();
  solve->add_option("--algorithm", algorithm, "salum|dpll|brute")
      ->required()
      ->check(CLI::IsMember({"salum", "dpll", "brute"}));
  add_ordering_flags(solve);

  CLI::App *trace = app.add_subcommand("trace", "run instrumented scan");
  trace->add_option("file", file, "X3F input")->required();
  trace->add_option("--out", out_path, "trace output path")->required();
  add_ordering_flags(trace);

  CLI::App *fuzz = app.add_subcommand("fuzz", "differential campaign");
  fuzz->add_option("--seed", seed, "base seed")->required();
  fuzz->add_option("--num", num, "number of formulas")->required();
  fuzz->add_option("--vars", vars, "variables per formula")->required();
  fuzz->add_option("--clauses", clauses, "clauses per formula")->required();
  fuzz->add_option("--report-dir", report_dir, "where to write reports");

  CLI::App *shrink_cmd = app.add_subcommand("shrink", "minimize a report");
  shrink_cmd->add_option("file", file, "report file")->required();

  CLI::App *verify = app.add_subcommand("verify", "check a total assignment");
  verify->add_option("file", file, "X3F input")->required();
  verify->add_option("assignment", assignment_csv, "comma-separated 0/1")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed())
      return run_solve(file, algorithm, make_policy(order, polarity));
    if (trace->parsed()) {
      x3sat::FormulaState f = load_formula(file);
      return run_salum(f, make_policy(order, polarity), out_path);
    }
    if (fuzz->parsed()) return run_fuzz(seed, num, vars, clauses, report_dir);
    if (shrink_cmd->parsed()) return run_shrink(file);
    if (verify->parsed()) return run_verify(file, assignment_csv);
  } catch (const x3sat::ParseError &e) {
    std::cerr << "parse error: " << file << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const CLI::ValidationError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
