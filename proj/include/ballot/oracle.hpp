#pragma once

#include "ballot/count.hpp"
#include "ballot/count_table.hpp"
#include "ballot/perm.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ballot::oracle {

/// Knobs for full-S_n enumeration. The hard cap guards accidental 13!+ runs
/// in CI; callers opt into larger sizes by raising it explicitly.
struct EnumOptions {
  int jobs = 0;    // 0 = all available threads, 1 = serial reference path
  int max_n = 12;  // hard enumeration cap
};

inline void check_enum_size(int n, const EnumOptions& opts) {
  if (n < 1) throw std::invalid_argument("enumerate: n must be at least 1");
  if (n > opts.max_n)
    throw std::domain_error("enumerate: n=" + std::to_string(n) +
                            " exceeds the enumeration cap " + std::to_string(opts.max_n) +
                            " (raise max_n explicitly to allow this)");
}

/// Visits every word with the given first letter, remaining letters in
/// lexicographic order. Building block for prefix-partitioned consumption.
template <class Visitor>
void for_each_with_first_letter(int n, int first, Visitor&& visit) {
  Word w(static_cast<std::size_t>(n));
  w[0] = first;
  std::size_t idx = 1;
  for (int v = 1; v <= n; ++v)
    if (v != first) w[idx++] = v;
  do {
    visit(static_cast<const Word&>(w));
  } while (std::next_permutation(w.begin() + 1, w.end()));
}

/// Visits all n! permutations exactly once, in lexicographic order.
template <class Visitor>
void for_each_permutation(int n, Visitor&& visit, const EnumOptions& opts = {}) {
  check_enum_size(n, opts);
  for (int first = 1; first <= n; ++first)
    for_each_with_first_letter(n, first, visit);
}

/// Every per-permutation statistic of S_n accumulated in one enumeration
/// pass. Counts fit in 64 bits while accumulating (n <= 12) and are merged
/// into exact Counts, so results are independent of partitioning.
struct SnProfile {
  int n = 0;
  std::vector<Count> all_by_d;              // permutations by descent count
  std::vector<Count> ballot_by_d;           // ballot permutations by descents
  std::vector<Count> ascent_start_by_d;     // first signature entry +1
  std::vector<Count> descent_start_by_d;    // first signature entry -1
  std::vector<Count> oop_by_m;              // odd-order permutations by M
  std::vector<Count> ncycle_by_m;           // full n-cycles by M
  std::vector<Count> by_d_t;                // (d, t) pairs, t in [-(n-1), 0]
  std::vector<Count> ballot_last_by_d_k;    // ballot permutations by (d, last letter)
  std::vector<Count> index_dist;            // permutations by full index bitmask

  Count ballot(int d) const;
  Count all(int d) const;
  Count ascent_start(int d) const;
  Count descent_start(int d) const;
  Count oop(int m) const;
  Count ncycle(int m) const;
  Count by_t(int d, int t) const;
  Count ballot_last(int d, int k) const;
  /// Count of permutations whose full index equals `r` padded with zeros.
  Count ud(const BinaryIndex& r) const;
  /// Count of permutations whose index is `r` followed by a suffix with
  /// exactly one 1.
  Count f(const BinaryIndex& r) const;

  Count ballot_total() const;
  Count oop_total() const;
};

/// Serial reference implementation.
SnProfile profile_sn_serial(int n, const EnumOptions& opts = {});

/// OpenMP kernel partitioned by first letter; falls back to the serial path
/// for jobs == 1 or tiny n. Results are identical to the serial profile.
SnProfile profile_sn(int n, const EnumOptions& opts = {});

// ---- single-statistic oracles (thin wrappers over a profile pass) ----

Count count_ballot(int n, int d, const EnumOptions& opts = {});
Count count_oop(int n, int d, const EnumOptions& opts = {});
Count count_ascent_start(int n, int d, const EnumOptions& opts = {});
Count count_descent_start(int n, int d, const EnumOptions& opts = {});
Count count_cycles_m(int n, int d, const EnumOptions& opts = {});
Count count_by_t(int n, int d, int t, const EnumOptions& opts = {});
Count count_ballot_last(int n, int d, int k, const EnumOptions& opts = {});
Count count_ud(int n, const BinaryIndex& r, const EnumOptions& opts = {});
Count count_f(const BinaryIndex& r, int n, const EnumOptions& opts = {});

// ---- bulk tables for serialization / diffing ----

CountTable ballot_count_table(int max_n, const EnumOptions& opts = {});
CountTable oop_count_table(int max_n, const EnumOptions& opts = {});
CountTable ballot_last_count_table(int n, const EnumOptions& opts = {});

} // namespace ballot::oracle
