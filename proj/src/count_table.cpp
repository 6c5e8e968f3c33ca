#include "ballot/count_table.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace ballot {

void CountTable::set(std::vector<int> key, Count value) {
  if (key.size() != params.size())
    throw std::invalid_argument("CountTable: key arity " + std::to_string(key.size()) +
                                " does not match params arity " + std::to_string(params.size()));
  entries[std::move(key)] = std::move(value);
}

const Count& CountTable::at(const std::vector<int>& key) const {
  const auto it = entries.find(key);
  if (it == entries.end()) throw std::out_of_range("CountTable: missing entry");
  return it->second;
}

std::string CountTable::to_csv() const {
  std::string out;
  for (const std::string& p : params) {
    out += p;
    out += ',';
  }
  out += "count\n";
  for (const auto& [key, value] : entries) {
    for (int v : key) {
      out += std::to_string(v);
      out += ',';
    }
    out += to_decimal(value);
    out += '\n';
  }
  return out;
}

std::string CountTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["params"] = params;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [key, value] : entries) {
    nlohmann::ordered_json row;
    for (std::size_t i = 0; i < params.size(); ++i) row[params[i]] = key[i];
    row["count"] = to_decimal(value);
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc.dump();
}

} // namespace ballot
