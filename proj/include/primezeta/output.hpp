#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "primezeta/roots.hpp"

namespace primezeta {

inline constexpr const char* kVersion = "0.1.0";

/// One machine-readable output line: a constant, a table cell, or a check.
struct OutputRecord {
  std::string kind;  // constant | table_row | check
  std::string name;
  std::optional<int> k;
  std::string value;      // decimal string at the requested display precision
  std::string err_bound;  // decimal string; may be empty
  std::string status;     // pass | fail | report; empty for plain values
};

inline std::vector<OutputRecord> table_to_records(const std::vector<TableRow>& rows, int places) {
  std::vector<OutputRecord> recs;
  recs.reserve(rows.size() * 5);
  for (const auto& r : rows) {
    recs.push_back({"table_row", "s_k", r.k, round_for_display(r.s_k, places), "", ""});
    recs.push_back({"table_row", "t_k", r.k, round_for_display(r.t_k, places), "", ""});
    recs.push_back({"table_row", "s_prime_k", r.k, round_for_display(r.s_prime_k, places), "", ""});
    recs.push_back({"table_row", "sigma_k", r.k, round_for_display(r.sigma_k, places), "", ""});
    recs.push_back({"table_row", "h_k", r.k, round_for_display(r.h_k, places), "", ""});
  }
  return recs;
}

/// The fixed-layout CSV for the crossing-constants table:
/// header `k,s_k,t_k,s_prime_k,sigma_k,h_k`, one row per k, LF endings.
inline std::string table_to_csv(const std::vector<TableRow>& rows, int places) {
  std::string out = "k,s_k,t_k,s_prime_k,sigma_k,h_k\n";
  for (const auto& r : rows) {
    out += std::to_string(r.k);
    out += ',' + round_for_display(r.s_k, places);
    out += ',' + round_for_display(r.t_k, places);
    out += ',' + round_for_display(r.s_prime_k, places);
    out += ',' + round_for_display(r.sigma_k, places);
    out += ',' + round_for_display(r.h_k, places);
    out += '\n';
  }
  return out;
}

inline std::string records_to_csv(const std::vector<OutputRecord>& recs) {
  std::string out = "kind,name,k,value,err_bound,status\n";
  for (const auto& r : recs) {
    out += r.kind + ',' + r.name + ',';
    if (r.k) out += std::to_string(*r.k);
    out += ',' + r.value + ',' + r.err_bound + ',' + r.status + '\n';
  }
  return out;
}

inline nlohmann::json records_to_json(int precision_digits, const std::vector<OutputRecord>& recs) {
  nlohmann::json j;
  j["meta"] = {{"precision", precision_digits}, {"version", kVersion}};
  j["records"] = nlohmann::json::array();
  for (const auto& r : recs) {
    nlohmann::json item = {
        {"kind", r.kind}, {"name", r.name}, {"value", r.value}, {"err_bound", r.err_bound}};
    if (r.k) item["k"] = *r.k;
    if (!r.status.empty()) item["status"] = r.status;
    j["records"].push_back(std::move(item));
  }
  return j;
}

}  // namespace primezeta
