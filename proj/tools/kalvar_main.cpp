// kalvar: Betti tables, generators and consistency checks for Kalman varieties.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kalvar/checks.hpp"
#include "kalvar/kalman_matrix.hpp"
#include "kalvar/report.hpp"
#include "kalvar/resolution.hpp"
#include "kalvar/verify.hpp"

namespace {

using namespace kalvar;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CliConfig {
  int s = 1;
  int d = 2;
  int n = 3;
  int max_degree = -1;  // -1: pick a default per command
  int trials = 20;
  std::uint32_t modulus = 32003;
  std::uint64_t seed = 1;
  std::string format = "table";
  std::string output;
  std::string module = "normalization";
  int bott_lo = -4;
  int bott_hi = 6;
  std::uint64_t column_cap = 1'000'000;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

void require_dn(const CliConfig& c) {
  if (!(1 <= c.d && c.d < c.n)) throw UsageError("need 1 <= d < n (got d=" + std::to_string(c.d) + ", n=" + std::to_string(c.n) + ")");
}

void require_sdn(const CliConfig& c) {
  require_dn(c);
  if (!(1 <= c.s && c.s <= c.d)) throw UsageError("need 1 <= s <= d (got s=" + std::to_string(c.s) + ", d=" + std::to_string(c.d) + ")");
}

PrimeFieldConfig field_config(const CliConfig& c) {
  PrimeFieldConfig cfg{c.modulus, c.seed};
  try {
    cfg.validate(c.d, c.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

MacaulayOptions macaulay_options(const CliConfig& c) {
  MacaulayOptions o;
  o.column_cap = c.column_cap;
  return o;
}

ojson dn_params(const CliConfig& c) { return {{"d", c.d}, {"n", c.n}}; }

int emit(const Report& r, const CliConfig& c) {
  write_output(r.render(parse_format(c.format)), c.output);
  return r.passed() ? kOk : kCheckFailed;
}

int top_generator_degree(int d, int n) {
  const auto counts = generator_counts(minimal_generators(d, n));
  return counts.empty() ? 1 : counts.rbegin()->first;
}

int cmd_resolution(const CliConfig& c) {
  require_sdn(c);
  BettiTable table;
  if (c.module == "normalization") table = resolution_normalization({c.s, c.d, c.n});
  else if (c.module == "C") table = resolution_C(c.s, c.d, c.n);
  else if (c.module == "B") table = resolution_B({c.s, c.d, c.n});
  else throw UsageError("unknown module '" + c.module + "'");
  write_output(render_betti(table, c.s, parse_format(c.format)), c.output);
  return kOk;
}

int cmd_generators(const CliConfig& c) {
  require_dn(c);
  write_output(render_generators(c.d, c.n, minimal_generators(c.d, c.n), parse_format(c.format)), c.output);
  return kOk;
}

int cmd_check_bott(const CliConfig& c) {
  if (c.d < 1 || c.d > 7) throw UsageError("check-bott needs 1 <= d <= 7");
  if (c.bott_lo > c.bott_hi) throw UsageError("--lo exceeds --hi");
  return emit(plain_report("check-bott", {{"d", c.d}, {"lo", c.bott_lo}, {"hi", c.bott_hi}}, {check_bott(c.d, c.bott_lo, c.bott_hi)}), c);
}

int cmd_check_les(const CliConfig& c) {
  require_dn(c);
  return emit(plain_report("check-les", dn_params(c), check_les(c.d, c.n)), c);
}

int cmd_check_minors(const CliConfig& c) {
  require_dn(c);
  if (c.trials < 1) throw UsageError("--trials must be positive");
  Report r = plain_report("check-minors", dn_params(c), {check_minors(c.d, c.n, c.trials, field_config(c))});
  r.params["trials"] = c.trials;
  r.modulus = c.modulus;
  r.seed = c.seed;
  return emit(r, c);
}

int cmd_check_trace(const CliConfig& c) {
  if (c.d < 1) throw UsageError("need d >= 1");
  return emit(plain_report("check-trace", {{"d", c.d}}, check_trace(c.d)), c);
}

Report minimality(const CliConfig& c) {
  const auto cfg = field_config(c);
  const int top = top_generator_degree(c.d, c.n);
  const int max_degree = c.max_degree < 0 ? top : c.max_degree;
  if (max_degree < top)
    throw UsageError("--max-degree " + std::to_string(max_degree) + " is below the top generator degree " + std::to_string(top));
  try {
    return minimality_as_report(minimality_report(c.d, c.n, max_degree, cfg, macaulay_options(c)));
  } catch (const MacaulayCapExceeded& e) {
    CheckResult fail{"minimality", true, ""};
    fail.fail(e.what());
    Report r = plain_report("minimality", {{"d", c.d}, {"n", c.n}, {"max_degree", max_degree}}, {fail});
    r.modulus = c.modulus;
    r.seed = c.seed;
    return r;
  }
}

Report hilbert(const CliConfig& c) {
  const auto cfg = field_config(c);
  const int max_degree = c.max_degree < 0 ? 4 : c.max_degree;
  try {
    return hilbert_as_report(hilbert_comparison(c.d, c.n, max_degree, cfg, macaulay_options(c)));
  } catch (const MacaulayCapExceeded& e) {
    CheckResult fail{"hilbert", true, ""};
    fail.fail(e.what());
    Report r = plain_report("hilbert", {{"d", c.d}, {"n", c.n}, {"max_degree", max_degree}}, {fail});
    r.modulus = c.modulus;
    r.seed = c.seed;
    return r;
  }
}

int cmd_check_minimality(const CliConfig& c) {
  require_dn(c);
  return emit(minimality(c), c);
}

int cmd_hilbert(const CliConfig& c) {
  require_dn(c);
  if (c.max_degree < -1) throw UsageError("--max-degree must be nonnegative");
  return emit(hilbert(c), c);
}

int cmd_check_all(const CliConfig& c) {
  require_dn(c);
  const auto cfg = field_config(c);
  std::vector<CheckResult> results;
  results.push_back(check_bott(std::min(c.d, 4), -4, 6));
  for (int s = 1; s <= c.d; ++s) {
    results.push_back(check_part_iii({s, c.d, c.n}));
    results.push_back(check_f0_counts({s, c.d, c.n}));
    results.push_back(check_codim({s, c.d, c.n}));
  }
  for (auto& r : check_les(c.d, c.n)) results.push_back(std::move(r));
  results.push_back(check_generators_match(c.d, c.n));
  results.push_back(check_pd_reg(c.d, c.n));
  for (auto& r : check_trace(c.d)) results.push_back(std::move(r));
  results.push_back(check_minors(c.d, c.n, c.trials, cfg));
  for (auto& r : minimality(c).results) results.push_back(std::move(r));
  for (auto& r : hilbert(c).results) results.push_back(std::move(r));

  Report r = plain_report("check-all", dn_params(c), std::move(results));
  r.modulus = c.modulus;
  r.seed = c.seed;
  return emit(r, c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti tables, defining equations and consistency checks for Kalman varieties"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--output", cfg.output, "write to this file (atomically) instead of stdout");
  };
  auto add_dn = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "dimension of L")->required();
    sub->add_option("--n", cfg.n, "dimension of V")->required();
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--modulus", cfg.modulus, "prime modulus");
    sub->add_option("--seed", cfg.seed, "random seed");
  };
  auto add_macaulay = [&](CLI::App* sub) {
    sub->add_option("--max-degree", cfg.max_degree, "top degree of the Macaulay computation");
    sub->add_option("--column-cap", cfg.column_cap, "refuse Macaulay matrices wider than this");
  };

  auto* res = app.add_subcommand("resolution", "Betti table of the normalization, C_s or B_s");
  res->add_option("--s", cfg.s, "invariant subspace dimension")->required();
  add_dn(res);
  res->add_option("--module", cfg.module, "normalization, C or B")->check(CLI::IsMember({"normalization", "C", "B"}));
  add_format(res);

  auto* gens = app.add_subcommand("generators", "minimal defining equations of K_{1,d,n}");
  add_dn(gens);
  add_format(gens);

  auto* bott = app.add_subcommand("check-bott", "dotted Bott action against permutation search");
  bott->add_option("--d", cfg.d, "largest weight length")->required();
  bott->add_option("--lo", cfg.bott_lo, "smallest weight entry");
  bott->add_option("--hi", cfg.bott_hi, "largest weight entry");
  add_format(bott);

  auto* les = app.add_subcommand("check-les", "Euler characteristic and part identification across s");
  add_dn(les);
  add_format(les);

  auto* minors = app.add_subcommand("check-minors", "maximal minors vanish at random Kalman points");
  add_dn(minors);
  minors->add_option("--trials", cfg.trials, "number of random points");
  add_field(minors);
  add_format(minors);

  auto* trace = app.add_subcommand("check-trace", "trace-minor identity for every i");
  trace->add_option("--d", cfg.d, "matrix size")->required();
  add_format(trace);

  auto* minimal = app.add_subcommand("check-minimality", "new generators per degree from Macaulay ranks");
  add_dn(minimal);
  add_macaulay(minimal);
  add_field(minimal);
  add_format(minimal);

  auto* hilb = app.add_subcommand("hilbert", "truncated Hilbert function against the resolution");
  add_dn(hilb);
  add_macaulay(hilb);
  add_field(hilb);
  add_format(hilb);

  auto* all = app.add_subcommand("check-all", "every check for one (d, n)");
  add_dn(all);
  all->add_option("--trials", cfg.trials, "number of random points");
  add_macaulay(all);
  add_field(all);
  add_format(all);

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

  const std::map<CLI::App*, int (*)(const CliConfig&)> dispatch{
      {res, cmd_resolution},       {gens, cmd_generators},         {bott, cmd_check_bott}, {les, cmd_check_les},
      {minors, cmd_check_minors},  {trace, cmd_check_trace},       {minimal, cmd_check_minimality},
      {hilb, cmd_hilbert},         {all, cmd_check_all}};
  try {
    for (const auto& [sub, fn] : dispatch)
      if (sub->parsed()) return fn(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
