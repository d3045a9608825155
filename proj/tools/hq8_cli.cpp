// hq8: construct, classify, measure, verify and export Hadamard codes over
// Z2^k1 x Z4^k2 x Q8^k3.  Talks to the library only through hq8/hq8.h.
//
// Exit codes: 0 ok, 1 a verification check failed or other error,
// 2 not allowable, 3 infeasible plan, 4 parse error, 5 not Hadamard,
// 64 bad command line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hq8/hq8.h"

namespace {

struct CodeDeleter {
  void operator()(hq8_code* c) const { hq8_code_free(c); }
};
using Code = std::unique_ptr<hq8_code, CodeDeleter>;

struct Failure {
  int exit_code;
};

int exit_code_for(hq8_status s) {
  switch (s) {
    case HQ8_OK: return 0;
    case HQ8_ERR_NOT_ALLOWABLE: return 2;
    case HQ8_ERR_INFEASIBLE: return 3;
    case HQ8_ERR_PARSE: return 4;
    case HQ8_ERR_NOT_HADAMARD: return 5;
    default: return 1;
  }
}

void check(hq8_status s) {
  if (s == HQ8_OK) return;
  std::cerr << "hq8: " << hq8_status_name(s) << ": " << hq8_last_error() << "\n";
  throw Failure{exit_code_for(s)};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  hq8_string_free(s);
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) {
    std::cerr << "hq8: cannot write " << path << "\n";
    throw Failure{1};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "hq8: cannot open " << path << "\n";
    throw Failure{1};
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Code load(const std::string& path) {
  hq8_code* raw = nullptr;
  check(hq8_code_from_file(path.c_str(), &raw));
  return Code(raw);
}

std::string exported(const hq8_code* code, const std::string& format) {
  char* text = nullptr;
  check(format == "binary" ? hq8_export_binary(code, &text) : hq8_export_generators(code, &text));
  return take(text);
}

struct ConstructArgs {
  std::optional<int> m, k, r, tau;
  std::string shape, dial, plan, out, plan_out, format = "gens";
  bool dial_given = false;
};

Code construct(const ConstructArgs& a) {
  hq8_code* raw = nullptr;
  if (!a.plan.empty()) {
    check(hq8_construct_plan(read_file(a.plan).c_str(), 1, &raw));
    return Code(raw);
  }
  if (!a.m) {
    std::cerr << "hq8: construct needs --m (or --plan)\n";
    throw Failure{64};
  }
  if (a.shape.empty()) {
    if (!a.k || !a.r) {
      std::cerr << "hq8: construct needs --k and --r\n";
      throw Failure{64};
    }
    check(hq8_construct(*a.m, *a.k, *a.r, &raw));
    return Code(raw);
  }
  const int tau = a.tau.value_or(a.shape == "5" ? 2 : -1);
  if (tau < 0) {
    std::cerr << "hq8: --shape needs --tau\n";
    throw Failure{64};
  }
  if (!a.dial_given) {
    if (!a.k || !a.r) {
      std::cerr << "hq8: --shape without --dial needs --k and --r\n";
      throw Failure{64};
    }
    char* plan = nullptr;
    check(hq8_plan_for(*a.m, a.shape.c_str(), tau, *a.k, *a.r, &plan));
    check(hq8_construct_plan(take(plan).c_str(), 1, &raw));
    return Code(raw);
  }
  // Explicit dial: assemble the plan; sigma follows from the shape.
  const int upsilon = a.shape == "1" || a.shape == "1*" ? 0 : a.shape == "5" ? 2 : 1;
  std::ostringstream plan;
  plan << "m=" << *a.m << "\nshape=" << a.shape << "\nsigma=" << (*a.m + 1 - tau - upsilon) << "\ntau=" << tau
       << "\nk=" << a.k.value_or(0) << "\nr=" << a.r.value_or(0) << "\ndial=" << a.dial << "\n";
  check(hq8_construct_plan(plan.str().c_str(), a.k && a.r ? 1 : 0, &raw));
  return Code(raw);
}

int run_construct(const ConstructArgs& a) {
  Code code = construct(a);
  char* report = nullptr;
  check(hq8_report(code.get(), &report));
  if (!a.out.empty()) write_file(a.out, exported(code.get(), a.format));
  if (!a.plan_out.empty()) {
    char* plan = nullptr;
    check(hq8_code_plan(code.get(), &plan));
    write_file(a.plan_out, take(plan));
  }
  std::cout << take(report);
  return 0;
}

int run_classify(const std::string& in) {
  Code code = load(in);
  char* line = nullptr;
  check(hq8_classify(code.get(), &line));
  std::cout << take(line) << "\n";
  return 0;
}

int run_measure(const std::string& in) {
  Code code = load(in);
  int k = 0, r = 0;
  char* tag = nullptr;
  check(hq8_measure(code.get(), &k, &r, &tag));
  std::cout << "k=" << k << " r=" << r << "\ncase=" << take(tag) << "\n";
  return 0;
}

int run_verify(const std::string& in) {
  Code code = load(in);
  int passed = 0;
  char* text = nullptr;
  check(hq8_verify(code.get(), &passed, &text));
  std::cout << take(text) << (passed ? "verdict=pass\n" : "verdict=fail\n");
  return passed ? 0 : 1;
}

int run_export(const std::string& in, const std::string& out, const std::string& format) {
  Code code = load(in);
  const std::string text = exported(code.get(), format);
  if (out.empty()) std::cout << text;
  else write_file(out, text);
  return 0;
}

int run_table(int m) {
  char* text = nullptr;
  check(hq8_pairs_table(m, &text));
  std::cout << take(text);
  return 0;
}

int run_seed(const std::string& dir) {
  char* listing = nullptr;
  check(hq8_seed_corpus(dir.c_str(), &listing));
  std::cout << take(listing);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard Z2Z4Q8-code toolkit"};
  app.require_subcommand(1);

  ConstructArgs ca;
  std::string in, out, format = "gens";
  int table_m = 0;

  auto* construct_cmd = app.add_subcommand("construct", "build a code with a given rank and kernel dimension");
  construct_cmd->add_option("--m", ca.m, "length is 2^m");
  construct_cmd->add_option("--k", ca.k, "kernel dimension");
  construct_cmd->add_option("--r", ca.r, "rank");
  construct_cmd->add_option("--shape", ca.shape, "force a shape: 1, 1*, 2, 3, 5");
  construct_cmd->add_option("--tau", ca.tau, "tau for --shape");
  auto* dial_opt = construct_cmd->add_option("--dial", ca.dial, "components of s receiving ab, comma separated");
  construct_cmd->add_option("--plan", ca.plan, "plan file to build from");
  construct_cmd->add_option("--out", ca.out, "write the code here");
  construct_cmd->add_option("--plan-out", ca.plan_out, "write the plan here");
  construct_cmd->add_option("--format", ca.format, "output format")->check(CLI::IsMember({"gens", "binary"}));

  auto* classify_cmd = app.add_subcommand("classify", "print shape and profile");
  auto* measure_cmd = app.add_subcommand("measure", "print kernel dimension and rank");
  auto* verify_cmd = app.add_subcommand("verify", "run every structural check");
  auto* export_cmd = app.add_subcommand("export", "write generators or the binary matrix");
  for (auto* cmd : {classify_cmd, measure_cmd, verify_cmd, export_cmd})
    cmd->add_option("--in", in, "generator file")->required();
  export_cmd->add_option("--out", out, "output file (default stdout)");
  export_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"gens", "binary"}));

  auto* table_cmd = app.add_subcommand("table", "allowable (k, r) pairs at length 2^m");
  table_cmd->add_option("--m", table_m, "length is 2^m")->required();

  auto* seed_cmd = app.add_subcommand("seed-corpus", "write the example fixture files");
  seed_cmd->add_option("--out", out, "directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }
  ca.dial_given = dial_opt->count() > 0;

  try {
    if (*construct_cmd) return run_construct(ca);
    if (*classify_cmd) return run_classify(in);
    if (*measure_cmd) return run_measure(in);
    if (*verify_cmd) return run_verify(in);
    if (*export_cmd) return run_export(in, out, format);
    if (*table_cmd) return run_table(table_m);
    if (*seed_cmd) return run_seed(out);
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return 64;
}
