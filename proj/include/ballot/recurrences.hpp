#pragma once

#include "ballot/count.hpp"
#include "ballot/count_table.hpp"
#include "ballot/oracle.hpp"
#include "ballot/perm.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace ballot::recurrences {

/// Table of p(n, d) — odd-order permutations with M = d — filled by the
/// descent-refined recurrence, in polynomial time with no enumeration.
///
/// Stored boundary: p(0,0) = 0, p(n,0) = 1 for n >= 1. Inside the sums the
/// k = n term (the whole permutation being one cycle through the new
/// largest letter) carries weight 1 for the empty remainder; the stored
/// zero is a boundary convention only.
class PTable {
public:
  /// Two algebraically equal evaluation paths: `direct` sums even k >= 2d'
  /// only (no cancellation); `normalized` sums all even k then subtracts
  /// the window d'-1 <= k <= 2(d'-1).
  enum class Form { direct, normalized };

  PTable(int max_n, int max_d, Form form = Form::direct);

  /// Zero outside the stored d range; throws above max_n.
  Count at(int n, int d) const;
  Count row_sum(int n) const;
  int max_n() const { return max_n_; }
  int max_d() const { return max_d_; }

  CountTable to_count_table() const;

private:
  int max_n_;
  int max_d_;
  std::vector<std::vector<Count>> values_; // [n][d]
};

/// Lemma identity checks: direct term-by-term sum vs closed form of
/// 2 * sum_k C(n,k) C(n-k,r) C(k,s) c^(n-k) d^k (all k, or even k only).
enum class Parity { all, even };
Rational binomial_sum_direct(int n, int r, int s, const Rational& c, const Rational& d,
                             Parity parity);
Rational binomial_sum_closed(int n, int r, int s, const Rational& c, const Rational& d,
                             Parity parity);

/// Peaks of a binary string: positions i with r_i = 1 and (i = 1 or
/// r_{i-1} = 0). 1-based.
std::vector<int> peaks(const BinaryIndex& r);
/// r with position `pos` removed (1-based).
BinaryIndex drop_bit(const BinaryIndex& r, int pos);
/// r with position `pos` replaced by 1.
BinaryIndex set_bit_one(const BinaryIndex& r, int pos);

/// Memoized evaluation of f(r, n) — permutations whose index is r followed
/// by a suffix with exactly one 1 — by the peak recursion. Base cases
/// (n <= |r| + 1) come from the enumeration oracle so the recursion
/// validates the closed forms instead of depending on them. UD values use
/// the tabulated polynomials when valid, else the oracle; the strings
/// served by each source are recorded.
class FRecurrence {
public:
  explicit FRecurrence(oracle::EnumOptions opts = {}) : opts_(opts) {}

  Count value(const BinaryIndex& r, int n);

  const std::set<std::string>& ud_from_polynomial() const { return ud_from_polynomial_; }
  const std::set<std::string>& ud_from_oracle() const { return ud_from_oracle_; }

private:
  Count ud(const BinaryIndex& r, int n);

  oracle::EnumOptions opts_;
  std::map<std::pair<std::string, int>, Count> memo_;
  std::map<int, oracle::SnProfile> profiles_;
  std::set<std::string> ud_from_polynomial_;
  std::set<std::string> ud_from_oracle_;
};

Count f_recurrence(const BinaryIndex& r, int n, const oracle::EnumOptions& opts = {});

/// Table of b(n, d, k) — ballot permutations with d descents ending in k —
/// filled by the last-letter recurrence from the single seed b(1,0,1) = 1.
/// Rows store d <= floor((n-1)/2); everything else is implicitly zero.
class BTable {
public:
  explicit BTable(int max_n);

  /// Zero for d outside the stored band; throws for k outside 1..n or
  /// n above max_n.
  Count at(int n, int d, int k) const;
  Count row_sum(int n, int k) const; // over d
  Count col_sum(int n, int d) const; // over k; equals b(n, d)
  int max_n() const { return max_n_; }

  CountTable to_count_table(int n) const;
  CountTable to_count_table() const;

private:
  int max_n_;
  std::vector<std::vector<std::vector<Count>>> values_; // [n][d][k-1]
};

/// b(n, 1, k) piecewise closed form, n >= 2.
Count col1_formula(int n, int k);
/// b(n, 2, k) piecewise closed form, n >= 5.
Count col2_formula(int n, int k);

} // namespace ballot::recurrences
