// germinv: invariants of map germs (C^2,0) -> (C^3,0) and of their
// one-parameter unfoldings.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "germinv.h"

namespace {

// Exit codes: 0 success, 1 table mismatch, 2 not finitely determined,
// 3 parse error, 4 resource cap, 5 anything else.
int exit_code(gi_status s) {
  switch (s) {
    case GI_OK: return 0;
    case GI_TABLE_MISMATCH: return 1;
    case GI_NOT_FINITELY_DETERMINED: return 2;
    case GI_PARSE_ERROR: return 3;
    case GI_RESOURCE_CAP: return 4;
    default: return 5;
  }
}

int fail(gi_status s) {
  std::cerr << "error (" << gi_status_name(s) << "): " << gi_last_error() << "\n";
  return exit_code(s);
}

// An argument naming an existing file is replaced by the file's contents.
std::string source_text(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string s = buf.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

struct Common {
  gi_options options{};
  std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.options.seed, "Seed of the plane-section generator")->capture_default_str();
  cmd->add_option("--planes", c.options.plane_samples, "Random planes per batch")
      ->check(CLI::Range(2u, 1000u))
      ->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  cmd->add_option("--max-spairs", c.options.max_spairs, "S-pair budget (0 = unlimited)");
  cmd->add_option("--max-terms", c.options.max_terms, "Largest polynomial allowed, in terms (0 = unlimited)");
  cmd->add_option("--time-budget", c.options.time_budget_seconds, "Wall-clock budget in seconds (0 = unlimited)");
}

gi_format format_of(const Common& c) { return c.format == "json" ? GI_JSON : GI_TEXT; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of map germs (C^2,0) -> (C^3,0) and equisingularity of their unfoldings"};
  app.require_subcommand(1);

  Common inv, fam, tab;
  gi_options_default(&inv.options);
  gi_options_default(&fam.options);
  gi_options_default(&tab.options);

  std::string germ;
  auto* cmd_inv = app.add_subcommand("invariants", "Invariant report of a germ");
  cmd_inv->add_option("germ", germ, "\"(f1, f2, f3)\" in x, y, or a file holding it")->required();
  add_common(cmd_inv, inv);

  std::string unfolding;
  std::string t_samples = "0,1,-1,1/2,3";
  auto* cmd_fam = app.add_subcommand("family", "Equisingularity verdicts of a one-parameter unfolding");
  cmd_fam->add_option("unfolding", unfolding, "\"(F1, F2, F3)\" in x, y, t, or a file holding it")->required();
  cmd_fam->add_option("--t-samples", t_samples, "Comma separated parameter values; t = 0 is always included")
      ->capture_default_str();
  add_common(cmd_fam, fam);

  std::string table_samples = "1,-1,1/2,3";
  auto* cmd_tab = app.add_subcommand("table1", "Plane-section table of the counterexample families");
  cmd_tab->add_option("--t-samples", table_samples, "Nonzero parameter values used for generic t")
      ->capture_default_str();
  add_common(cmd_tab, tab);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 5;
  }

  if (*cmd_inv) {
    gi_report* r = nullptr;
    gi_status s = gi_invariants(source_text(germ).c_str(), &inv.options, &r);
    if (s != GI_OK) return fail(s);
    std::cout << gi_report_render(r, format_of(inv));
    gi_report_free(r);
    return 0;
  }
  if (*cmd_fam) {
    gi_family* f = nullptr;
    gi_status s = gi_family_analyze(source_text(unfolding).c_str(), t_samples.c_str(), &fam.options, &f);
    if (s != GI_OK) return fail(s);
    std::cout << gi_family_render(f, format_of(fam));
    s = gi_family_status(f);
    gi_family_free(f);
    return exit_code(s);
  }
  gi_table* t = nullptr;
  gi_status s = gi_table1(table_samples.c_str(), &tab.options, &t);
  if (t) {
    std::cout << gi_table_render(t, format_of(tab));
    gi_table_free(t);
  }
  if (s != GI_OK && s != GI_TABLE_MISMATCH) std::cerr << "error (" << gi_status_name(s) << "): " << gi_last_error() << "\n";
  return exit_code(s);
}
