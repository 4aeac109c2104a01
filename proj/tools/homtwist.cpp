#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "homtwist/manifest.hpp"
#include "homtwist/paper_suite.hpp"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int cmd_check(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return 3;
  }
  const homtwist::CheckOutcome r = homtwist::check_manifest_text(text);
  (r.exit_code >= 2 ? std::cerr : std::cout) << r.output;
  return r.exit_code;
}

int cmd_table(const std::string& path, const std::string& name) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return 3;
  }
  homtwist::Manifest m;
  try {
    m = homtwist::parse_manifest(text);
  } catch (const homtwist::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return homtwist::exit_code_for(e, true);
  }
  try {
    std::cout << homtwist::product_table(m, name);
  } catch (const homtwist::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return homtwist::exit_code_for(e, false);
  }
  return 0;
}

int cmd_paper(const std::string& filter, int bounds, bool verbose) {
  const homtwist::SuiteResult r = homtwist::paper_suite({filter, bounds});
  std::cout << homtwist::format_suite(r, verbose);
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite-dimensional Hom-associative structures"};
  app.require_subcommand(1);

  std::string file, name, filter;
  int bounds = -1;
  bool verbose = false;

  CLI::App* check = app.add_subcommand("check", "Run the tasks of a manifest");
  check->add_option("file", file, "Manifest JSON")->required();
  CLI::App* table = app.add_subcommand("table", "Print the product table of an algebra");
  table->add_option("file", file, "Manifest JSON")->required();
  table->add_option("name", name, "Object name, e.g. G.product")->required();
  CLI::App* paper = app.add_subcommand("paper", "Run the acceptance suite");
  paper->add_option("--filter", filter, "Only criteria whose name contains this text");
  paper->add_option("--bounds", bounds, "Override every degree bound")->check(CLI::NonNegativeNumber);
  paper->add_flag("-v,--verbose", verbose, "Print witnesses for passing criteria too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*check) return cmd_check(file);
  if (*table) return cmd_table(file, name);
  return cmd_paper(filter, bounds, verbose);
}
