#pragma once

#include "ballot/count.hpp"

#include <map>
#include <string>
#include <vector>

namespace ballot {

/// Parameter-tuple -> exact count map with fixed serialization shapes.
/// Counts serialize as decimal strings so consumers limited to 64 bits
/// never truncate.
struct CountTable {
  std::vector<std::string> params; // e.g. {"n","d"} or {"n","k","d"}
  std::map<std::vector<int>, Count> entries;

  void set(std::vector<int> key, Count value);
  const Count& at(const std::vector<int>& key) const;

  /// Header row joins the parameter names plus "count"; one row per entry
  /// in key order.
  std::string to_csv() const;
  std::string to_json() const;
};

} // namespace ballot
