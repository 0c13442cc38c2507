// Command-line front end: exhaustive searches, single-pair analysis, rule
// inspection and report re-aggregation. Data goes to stdout or the output
// file, diagnostics to stderr; exit status 0 means the computation ran.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "oca/boolfun.hpp"
#include "oca/ca.hpp"
#include "oca/codes.hpp"
#include "oca/lcs.hpp"
#include "oca/report.hpp"
#include "oca/sbox.hpp"
#include "oca/search.hpp"

namespace {

// Rule numbers are accepted in decimal or 0x-hex.
std::uint64_t parse_rule_number(const std::string& text) {
  std::size_t pos = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &pos, 0);
  } catch (const std::exception&) {
    throw std::invalid_argument("'" + text + "' is not a valid rule number");
  }
  if (pos != text.size())
    throw std::invalid_argument("'" + text + "' is not a valid rule number");
  return value;
}

int default_workers() {
  if (const char* env = std::getenv("OCASBOX_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
    std::cerr << "warning: ignoring OCASBOX_WORKERS='" << env << "'\n";
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void print_rule_report(std::ostream& os, const oca::LocalRule& rule) {
  os << "rule " << rule.rule_number() << " (0x" << std::hex << rule.rule_number() << std::dec
     << "), diameter " << rule.n_vars() << "\n";
  os << "truth table:  ";
  for (std::size_t k = 0; k < rule.table_size(); ++k) os << static_cast<int>(rule.bit(k));
  os << "  (inputs in lexicographic order)\n";
  os << "ANF:          " << oca::anf(rule).to_string() << "\n";
  os << "degree:       " << oca::degree(rule) << "\n";
  os << "balanced:     " << (oca::is_balanced(rule) ? "yes" : "no") << "\n";
  os << "nonlinearity: " << oca::nonlinearity(rule) << "\n";
  const auto gen =
      rule.n_vars() >= 2 ? oca::bipermutive_generator(rule) : std::optional<oca::LocalRule>{};
  os << "bipermutive:  " << (gen ? "yes" : "no") << "\n";
  if (gen && oca::is_linear(rule))
    os << "associated polynomial: " << oca::rule_polynomial(rule).to_string() << "\n";
}

int cmd_search(int diameter, int workers, const std::string& output, std::string format) {
  if (format.empty()) format = output.empty() ? "table" : "json";
  const oca::SearchReport report = oca::run_search(diameter, workers);

  std::string payload;
  if (format == "json")
    payload = oca::report_to_json(report);
  else if (format == "csv")
    payload = oca::report_to_csv(report);
  else
    payload = oca::aggregate_table(report);

  if (!output.empty()) {
    std::ofstream f(output, std::ios::binary);
    if (!f || !(f << payload) || !f.flush()) {
      std::cerr << "error: cannot write report to '" << output << "'\n";
      return 1;
    }
    std::cout << oca::aggregate_table(report);
  } else if (format == "table") {
    std::cout << payload;
  } else {
    // keep stdout machine-readable; the aggregate goes to stderr
    std::cout << payload;
    std::cerr << oca::aggregate_table(report);
  }
  return 0;
}

int cmd_analyze(int diameter, const std::string& rf_text, const std::string& rg_text) {
  const oca::LocalRule f = oca::LocalRule::from_rule_number(parse_rule_number(rf_text), diameter);
  const oca::LocalRule g = oca::LocalRule::from_rule_number(parse_rule_number(rg_text), diameter);

  bool ok = true;
  for (const auto* r : {&f, &g})
    if (!oca::is_bipermutive(*r)) {
      std::cerr << "error: rule " << r->rule_number() << " is not bipermutive\n";
      ok = false;
    }
  if (!ok) return 2;

  std::ostringstream os;
  os << "rule f: " << f.rule_number() << "  ANF " << oca::anf(f).to_string()
     << "  bipermutive yes  nonlinearity " << oca::nonlinearity(f) << "\n";
  os << "rule g: " << g.rule_number() << "  ANF " << oca::anf(g).to_string()
     << "  bipermutive yes  nonlinearity " << oca::nonlinearity(g) << "\n";

  const bool orthogonal = oca::is_oca_pair(f, g);
  os << "orthogonal: " << (orthogonal ? "yes" : "no") << "\n";
  if (orthogonal) {
    const oca::SBox h = oca::from_oca(f, g);
    os << "sbox (" << h.n_bits() << "x" << h.n_bits() << "): " << h.hex_line() << "\n";
    os << "sbox nonlinearity: " << oca::sbox_nonlinearity(h) << "\n";
    os << "sbox degree:       " << oca::sbox_degree(h) << "\n";
    const oca::LinearCode code = oca::lcs_code(h);
    os << "LCS dimension:     " << code.dimension() << "\n";
    if (code.dimension() > 0) os << "LCS basis:\n" << code.basis_text();
    const oca::CodeClassification cls = oca::classify_code(code);
    if (cls.is_polynomial)
      os << "classification: polynomial code, generator " << cls.generator->to_string()
         << (cls.is_cyclic ? ", cyclic" : ", not cyclic") << "\n";
    else
      os << "classification: not a polynomial code\n";
  }
  std::cout << os.str();
  return 0;
}

int cmd_classify(const std::string& input, const std::string& format) {
  std::ifstream f(input, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot read '" << input << "'\n";
    return 1;
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  const oca::SearchReport report = oca::report_from_json(buf.str());
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : oca::aggregate(report.records)) {
      nlohmann::json a;
      a["nl_bucket"] = {row.nl_lo, row.nl_hi};
      a["lcs_dim"] = row.lcs_dim;
      if (row.is_polynomial) {
        a["generator"] = oca::generator_label(row);
        a["generator_bitmask"] = row.generator_bitmask;
      } else {
        a["generator"] = nullptr;
        a["generator_bitmask"] = nullptr;
      }
      a["count"] = row.count;
      j.push_back(a);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << oca::aggregate_table(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-boxes from orthogonal cellular automata: search and analysis"};
  app.require_subcommand(1);

  int diameter = 0;
  int workers = default_workers();
  std::string output, format, input;
  std::string rule_a, rule_b;

  auto* search = app.add_subcommand("search", "exhaustively classify all rule pairs of a diameter");
  search->add_option("-d,--diameter", diameter, "rule diameter")
      ->required()
      ->check(CLI::Range(3, 6));
  search->add_option("-w,--workers", workers, "worker thread count")->check(CLI::PositiveNumber);
  search->add_option("-o,--output", output, "write the report to this file");
  search->add_option("-f,--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  auto* analyze = app.add_subcommand("analyze", "analyze one ordered rule pair");
  analyze->add_option("-d,--diameter", diameter, "rule diameter")
      ->required()
      ->check(CLI::Range(2, 6));
  analyze->add_option("rule_f", rule_a, "first rule number (decimal or 0x-hex)")->required();
  analyze->add_option("rule_g", rule_b, "second rule number (decimal or 0x-hex)")->required();

  auto* rule_info = app.add_subcommand("rule-info", "print the properties of one local rule");
  rule_info->add_option("-d,--diameter", diameter, "rule diameter")
      ->required()
      ->check(CLI::Range(1, 6));
  rule_info->add_option("rule", rule_a, "rule number (decimal or 0x-hex)")->required();

  auto* classify = app.add_subcommand("classify", "re-aggregate a JSON search report");
  classify->add_option("-i,--input", input, "search report JSON file")->required();
  classify->add_option("-f,--format", format, "aggregate format")
      ->check(CLI::IsMember({"json", "table"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (search->parsed()) return cmd_search(diameter, workers, output, format);
    if (analyze->parsed()) return cmd_analyze(diameter, rule_a, rule_b);
    if (rule_info->parsed()) {
      print_rule_report(std::cout,
                        oca::LocalRule::from_rule_number(parse_rule_number(rule_a), diameter));
      return 0;
    }
    if (classify->parsed()) return cmd_classify(input, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
