#pragma once
// Search report serialization: JSON (full records), CSV (one row per
// record) and the human-readable aggregate table with columns
// d, nl(f,g), #OCA, dim, #dim, generator, #gen.

#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "oca/search.hpp"

namespace oca {

struct AggregateRow {
  int nl_lo = 0;
  int nl_hi = 0;
  int lcs_dim = 0;
  bool is_polynomial = false;
  std::uint64_t generator_bitmask = 0;  // 0 when not a polynomial code
  std::uint64_t count = 0;
};

// Counts keyed by (sorted nonlinearity bucket, LCS dimension, generator),
// ordered like the published tables: buckets ascending, dimension descending.
inline std::vector<AggregateRow> aggregate(const std::vector<PairRecord>& records) {
  std::map<std::tuple<int, int, int, bool, std::uint64_t>, std::uint64_t> counts;
  for (const auto& r : records) {
    const int lo = std::min(r.nl_f, r.nl_g);
    const int hi = std::max(r.nl_f, r.nl_g);
    const bool poly = r.classification.is_polynomial;
    const std::uint64_t gen = poly ? r.classification.generator->coeff_mask() : 0;
    ++counts[{lo, hi, -r.lcs_dim, poly, gen}];
  }
  std::vector<AggregateRow> rows;
  rows.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    const auto& [lo, hi, negdim, poly, gen] = key;
    rows.push_back({lo, hi, -negdim, poly, gen, count});
  }
  return rows;
}

inline std::string generator_label(const AggregateRow& row) {
  return row.is_polynomial ? BinaryPolynomial(row.generator_bitmask).to_string() : "-";
}

inline std::string aggregate_table(const SearchReport& report) {
  const auto rows = aggregate(report.records);

  // Bucket and (bucket, dim) totals for the #OCA and #dim columns.
  std::map<std::pair<int, int>, std::uint64_t> bucket_total;
  std::map<std::tuple<int, int, int>, std::uint64_t> dim_total;
  for (const auto& r : rows) {
    bucket_total[{r.nl_lo, r.nl_hi}] += r.count;
    dim_total[{r.nl_lo, r.nl_hi, r.lcs_dim}] += r.count;
  }

  std::ostringstream os;
  os << " d  nl(f,g)    #OCA  dim    #dim  generator      #gen\n";
  for (const auto& r : rows) {
    const std::string bucket = "(" + std::to_string(r.nl_lo) + "," + std::to_string(r.nl_hi) + ")";
    os << std::setw(2) << report.diameter << "  " << std::setw(7) << std::left << bucket
       << std::right << "  " << std::setw(6) << bucket_total[{r.nl_lo, r.nl_hi}] << "  "
       << std::setw(3) << r.lcs_dim << "  " << std::setw(6)
       << dim_total[{r.nl_lo, r.nl_hi, r.lcs_dim}] << "  " << std::setw(13) << std::left
       << generator_label(r) << std::right << "  " << std::setw(4) << r.count << "\n";
  }
  if (rows.empty()) os << " (no OCA records)\n";
  os << "records: " << report.records.size() << "  pairs enumerated: " << report.pairs_enumerated
     << "\n";
  return os.str();
}

inline nlohmann::json record_to_json(const PairRecord& r) {
  nlohmann::json j;
  j["rule_f"] = r.rule_f;
  j["rule_g"] = r.rule_g;
  j["nl_f"] = r.nl_f;
  j["nl_g"] = r.nl_g;
  j["sbox_nl"] = r.sbox_nl;
  j["sbox_degree"] = r.sbox_degree;
  j["lcs_dim"] = r.lcs_dim;
  j["is_polynomial"] = r.classification.is_polynomial;
  if (r.classification.is_polynomial) {
    j["generator"] = r.classification.generator->to_string();
    j["generator_bitmask"] = r.classification.generator->coeff_mask();
  } else {
    j["generator"] = nullptr;
    j["generator_bitmask"] = nullptr;
  }
  j["is_cyclic"] = r.classification.is_cyclic;
  return j;
}

inline std::string report_to_json(const SearchReport& report) {
  nlohmann::json j;
  j["diameter"] = report.diameter;
  j["pairs_enumerated"] = report.pairs_enumerated;
  j["records"] = nlohmann::json::array();
  for (const auto& r : report.records) j["records"].push_back(record_to_json(r));
  j["aggregate"] = nlohmann::json::array();
  for (const auto& row : aggregate(report.records)) {
    nlohmann::json a;
    a["nl_bucket"] = {row.nl_lo, row.nl_hi};
    a["lcs_dim"] = row.lcs_dim;
    if (row.is_polynomial) {
      a["generator"] = BinaryPolynomial(row.generator_bitmask).to_string();
      a["generator_bitmask"] = row.generator_bitmask;
    } else {
      a["generator"] = nullptr;
      a["generator_bitmask"] = nullptr;
    }
    a["count"] = row.count;
    j["aggregate"].push_back(a);
  }
  return j.dump(2) + "\n";
}

inline SearchReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  }
  SearchReport report;
  try {
    report.diameter = j.at("diameter").get<int>();
    report.pairs_enumerated = j.at("pairs_enumerated").get<std::uint64_t>();
    for (const auto& rj : j.at("records")) {
      PairRecord r;
      r.diameter = report.diameter;
      r.rule_f = rj.at("rule_f").get<std::uint64_t>();
      r.rule_g = rj.at("rule_g").get<std::uint64_t>();
      r.nl_f = rj.at("nl_f").get<int>();
      r.nl_g = rj.at("nl_g").get<int>();
      r.sbox_nl = rj.at("sbox_nl").get<int>();
      r.sbox_degree = rj.at("sbox_degree").get<int>();
      r.lcs_dim = rj.at("lcs_dim").get<int>();
      r.classification.is_polynomial = rj.at("is_polynomial").get<bool>();
      if (r.classification.is_polynomial)
        r.classification.generator =
            BinaryPolynomial(rj.at("generator_bitmask").get<std::uint64_t>());
      r.classification.is_cyclic = rj.at("is_cyclic").get<bool>();
      report.records.push_back(r);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report JSON is missing fields: ") + e.what());
  }
  return report;
}

inline std::string report_to_csv(const SearchReport& report) {
  std::ostringstream os;
  os << "d,rule_f,rule_g,nl_f,nl_g,sbox_nl,sbox_degree,lcs_dim,is_polynomial,"
        "generator_bitmask,is_cyclic\n";
  for (const auto& r : report.records) {
    const std::uint64_t gen =
        r.classification.is_polynomial ? r.classification.generator->coeff_mask() : 0;
    os << r.diameter << ',' << r.rule_f << ',' << r.rule_g << ',' << r.nl_f << ',' << r.nl_g
       << ',' << r.sbox_nl << ',' << r.sbox_degree << ',' << r.lcs_dim << ','
       << (r.classification.is_polynomial ? 1 : 0) << ',' << gen << ','
       << (r.classification.is_cyclic ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace oca
