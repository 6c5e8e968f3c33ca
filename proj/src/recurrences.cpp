#include "ballot/recurrences.hpp"

#include "ballot/closed_forms.hpp"

#include <stdexcept>

namespace ballot::recurrences {

namespace {

// Weight of the remainder after deleting the cycle through the largest
// letter: the empty remainder counts once. Stored p(0,0) stays 0.
Count remainder_weight(const std::vector<std::vector<Count>>& values, int m, int j) {
  if (m == 0) return j == 0 ? Count(1) : Count(0);
  if (j < 0 || j >= static_cast<int>(values[static_cast<std::size_t>(m)].size())) return 0;
  return values[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
}

} // namespace

PTable::PTable(int max_n, int max_d, Form form) : max_n_(max_n), max_d_(max_d) {
  if (max_n < 1) throw std::invalid_argument("PTable: max_n must be at least 1");
  if (max_d < 0) throw std::invalid_argument("PTable: max_d must be nonnegative");
  values_.assign(static_cast<std::size_t>(max_n) + 1,
                 std::vector<Count>(static_cast<std::size_t>(max_d) + 1, Count(0)));
  values_[1][0] = 1; // identity; p(1, d) = 0 for d >= 1

  for (int n = 1; n < max_n; ++n) {
    for (int d = 0; d <= max_d; ++d) {
      Count next = values_[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)];
      for (int dp = 1; dp <= d; ++dp) {
        if (form == Form::direct) {
          for (int k = 2 * dp; k <= n; k += 2)
            next += 2 * binomial(n, k) * closed_forms::eulerian(k, dp - 1) *
                    remainder_weight(values_, n - k, d - dp);
        } else {
          for (int k = 0; k <= n; k += 2)
            next += 2 * binomial(n, k) * closed_forms::eulerian(k, dp - 1) *
                    remainder_weight(values_, n - k, d - dp);
          for (int k = dp - 1; k <= 2 * (dp - 1); ++k) {
            if (k % 2 != 0 || k < 0 || k > n) continue;
            next -= 2 * binomial(n, k) * closed_forms::eulerian(k, dp - 1) *
                    remainder_weight(values_, n - k, d - dp);
          }
        }
      }
      values_[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(d)] = std::move(next);
    }
  }
}

Count PTable::at(int n, int d) const {
  if (n < 0 || n > max_n_)
    throw std::out_of_range("PTable: n=" + std::to_string(n) + " outside 0.." +
                            std::to_string(max_n_));
  if (d < 0 || d > max_d_) return 0;
  return values_[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)];
}

Count PTable::row_sum(int n) const {
  Count sum = 0;
  for (int d = 0; d <= max_d_; ++d) sum += at(n, d);
  return sum;
}

CountTable PTable::to_count_table() const {
  CountTable table;
  table.params = {"n", "d"};
  for (int n = 1; n <= max_n_; ++n)
    for (int d = 0; d <= (n - 1) / 2 && d <= max_d_; ++d) table.set({n, d}, at(n, d));
  return table;
}

Rational binomial_sum_direct(int n, int r, int s, const Rational& c, const Rational& d,
                             Parity parity) {
  if (n < r + s) throw std::invalid_argument("binomial_sum: requires n >= r + s");
  Rational sum = 0;
  for (int k = 0; k <= n; ++k) {
    if (parity == Parity::even && k % 2 != 0) continue;
    Rational term = Rational(binomial(n, k)) * Rational(binomial(n - k, r)) *
                    Rational(binomial(k, s));
    if (term == 0) continue;
    Rational cp = 1;
    for (int i = 0; i < n - k; ++i) cp *= c;
    Rational dp = 1;
    for (int i = 0; i < k; ++i) dp *= d;
    sum += term * cp * dp;
  }
  return 2 * sum; // both lemma variants carry the leading factor 2
}

namespace {

Rational rational_pow(const Rational& base, int exp) {
  Rational result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

} // namespace

Rational binomial_sum_closed(int n, int r, int s, const Rational& c, const Rational& d,
                             Parity parity) {
  if (n < r + s) throw std::invalid_argument("binomial_sum: requires n >= r + s");
  const Rational front = Rational(binomial(n, r)) * Rational(binomial(n - r, s)) *
                         rational_pow(c, r) * rational_pow(d, s);
  if (parity == Parity::all) return 2 * front * rational_pow(c + d, n - r - s);
  const Rational sign = s % 2 == 0 ? Rational(1) : Rational(-1);
  return front * (rational_pow(c + d, n - r - s) + sign * rational_pow(c - d, n - r - s));
}

std::vector<int> peaks(const BinaryIndex& r) {
  std::vector<int> result;
  for (int i = 1; i <= r.size(); ++i)
    if (r.bit(i) == 1 && (i == 1 || r.bit(i - 1) == 0)) result.push_back(i);
  return result;
}

BinaryIndex drop_bit(const BinaryIndex& r, int pos) {
  if (pos < 1 || pos > r.size())
    throw std::out_of_range("drop_bit: position " + std::to_string(pos) + " out of range 1.." +
                            std::to_string(r.size()));
  std::string bits = r.str();
  bits.erase(static_cast<std::size_t>(pos - 1), 1);
  return BinaryIndex(std::move(bits));
}

BinaryIndex set_bit_one(const BinaryIndex& r, int pos) {
  if (pos < 1 || pos > r.size())
    throw std::out_of_range("set_bit_one: position " + std::to_string(pos) +
                            " out of range 1.." + std::to_string(r.size()));
  std::string bits = r.str();
  bits[static_cast<std::size_t>(pos - 1)] = '1';
  return BinaryIndex(std::move(bits));
}

Count FRecurrence::ud(const BinaryIndex& r, int n) {
  if (closed_forms::ud_polynomial_supported(r, n)) {
    ud_from_polynomial_.insert(r.str());
    return closed_forms::ud_polynomial(r, n);
  }
  ud_from_oracle_.insert(r.str());
  auto it = profiles_.find(n);
  if (it == profiles_.end()) it = profiles_.emplace(n, oracle::profile_sn(n, opts_)).first;
  return it->second.ud(r);
}

Count FRecurrence::value(const BinaryIndex& r, int n) {
  if (!r.ends_in_zero())
    throw std::invalid_argument("f_recurrence: index '" + r.str() + "' must end in 0");
  if (n < 1) throw std::invalid_argument("f_recurrence: n must be at least 1");
  const int k = r.size();
  if (n <= k) return 0; // no index of length n-1 starts with r
  const auto key = std::make_pair(r.str(), n);
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

  Count result;
  if (n == k + 1) {
    // Oracle-grounded base case (the suffix is empty, so this is zero, but
    // the value is taken from enumeration, not assumed).
    auto it = profiles_.find(n);
    if (it == profiles_.end()) it = profiles_.emplace(n, oracle::profile_sn(n, opts_)).first;
    result = it->second.f(r);
  } else {
    const int m = n - 1; // recurrence step from size m to m + 1
    result = 2 * value(r, m) + Count(m - k) * ud(r, m) + ud(set_bit_one(r, k), m);
    const std::vector<int> peak_set = peaks(r);
    for (int i : peak_set) {
      if (i == 1) {
        result += value(drop_bit(r, 1), m);
      } else {
        result += value(drop_bit(r, i - 1), m);
        result += value(drop_bit(r, i), m);
      }
    }
  }
  memo_.emplace(key, result);
  return result;
}

Count f_recurrence(const BinaryIndex& r, int n, const oracle::EnumOptions& opts) {
  FRecurrence rec(opts);
  return rec.value(r, n);
}

BTable::BTable(int max_n) : max_n_(max_n) {
  if (max_n < 1) throw std::invalid_argument("BTable: max_n must be at least 1");
  values_.resize(static_cast<std::size_t>(max_n) + 1);
  values_[1] = {{Count(1)}}; // b(1, 0, 1)

  for (int n = 2; n <= max_n; ++n) {
    const int d_max = (n - 1) / 2;
    auto& rows = values_[static_cast<std::size_t>(n)];
    rows.assign(static_cast<std::size_t>(d_max) + 1,
                std::vector<Count>(static_cast<std::size_t>(n), Count(0)));
    const auto prev_at = [&](int d, int k) -> Count {
      if (d < 0 || d >= static_cast<int>(values_[static_cast<std::size_t>(n - 1)].size()))
        return 0;
      if (k < 1 || k > n - 1) return 0;
      return values_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(d)]
                    [static_cast<std::size_t>(k - 1)];
    };
    for (int d = 0; d <= d_max; ++d) {
      // b(n,d,k) = sum_{k' >= k} b(n-1,d-1,k') + sum_{k' < k} b(n-1,d,k')
      Count suffix = 0;
      for (int k = 1; k <= n - 1; ++k) suffix += prev_at(d - 1, k);
      Count prefix = 0;
      for (int k = 1; k <= n; ++k) {
        rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(k - 1)] = suffix + prefix;
        suffix -= prev_at(d - 1, k);
        prefix += prev_at(d, k);
      }
    }
  }
}

Count BTable::at(int n, int d, int k) const {
  if (n < 1 || n > max_n_)
    throw std::out_of_range("BTable: n=" + std::to_string(n) + " outside 1.." +
                            std::to_string(max_n_));
  if (k < 1 || k > n)
    throw std::out_of_range("BTable: k=" + std::to_string(k) + " outside 1.." +
                            std::to_string(n));
  if (d < 0 || d >= static_cast<int>(values_[static_cast<std::size_t>(n)].size())) return 0;
  return values_[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)]
                [static_cast<std::size_t>(k - 1)];
}

Count BTable::row_sum(int n, int k) const {
  Count sum = 0;
  for (int d = 0; d <= (n - 1) / 2; ++d) sum += at(n, d, k);
  return sum;
}

Count BTable::col_sum(int n, int d) const {
  Count sum = 0;
  for (int k = 1; k <= n; ++k) sum += at(n, d, k);
  return sum;
}

CountTable BTable::to_count_table(int n) const {
  CountTable table;
  table.params = {"n", "k", "d"};
  for (int k = 1; k <= n; ++k)
    for (int d = 0; d <= (n - 1) / 2; ++d) table.set({n, k, d}, at(n, d, k));
  return table;
}

CountTable BTable::to_count_table() const {
  CountTable table;
  table.params = {"n", "k", "d"};
  for (int n = 1; n <= max_n_; ++n)
    for (int k = 1; k <= n; ++k)
      for (int d = 0; d <= (n - 1) / 2; ++d) table.set({n, k, d}, at(n, d, k));
  return table;
}

Count col1_formula(int n, int k) {
  static constexpr closed_forms::FormulaDomain domain{"col1_formula", "n >= 2, 1 <= k <= n"};
  if (n < 2 || k < 1 || k > n)
    closed_forms::throw_out_of_domain(domain, "n=" + std::to_string(n) + ", k=" + std::to_string(k));
  if (k <= n - 2) return pow2(static_cast<unsigned>(k - 1));
  if (k == n - 1) return pow2(static_cast<unsigned>(n - 2)) - 1;
  return pow2(static_cast<unsigned>(n - 1)) - 2 * Count(n) + 2;
}

Count col2_formula(int n, int k) {
  static constexpr closed_forms::FormulaDomain domain{"col2_formula", "n >= 5, 1 <= k <= n"};
  if (n < 5 || k < 1 || k > n)
    closed_forms::throw_out_of_domain(domain, "n=" + std::to_string(n) + ", k=" + std::to_string(k));
  const Count three = 3;
  if (k <= n - 4) {
    // (4n - k - 3) 2^(k-2) is fractional at k = 1; evaluate exactly.
    const Rational value = Rational(pow2(static_cast<unsigned>(n - k))) *
                               Rational(pow_count(three, static_cast<unsigned>(k - 1))) -
                           Rational(4 * n - k - 3) * Rational(pow2(static_cast<unsigned>(k))) / 4;
    return to_integer(value, "col2_formula");
  }
  if (k == n - 3)
    return 8 * pow_count(three, static_cast<unsigned>(n - 4)) -
           3 * Count(n) * pow2(static_cast<unsigned>(n - 5)) - 2;
  if (k == n - 2)
    return 4 * pow_count(three, static_cast<unsigned>(n - 3)) -
           Count(3 * n - 1) * pow2(static_cast<unsigned>(n - 4)) - 2 * Count(n) + 7;
  if (k == n - 1)
    return 2 * pow_count(three, static_cast<unsigned>(n - 2)) -
           Count(3 * n - 2) * pow2(static_cast<unsigned>(n - 3)) - 2 * binomial(n + 1, 2) +
           8 * Count(n) - 10;
  return pow_count(three, static_cast<unsigned>(n - 1)) -
         Count(3 * n - 3) * pow2(static_cast<unsigned>(n - 2)) - 2 * binomial(n + 2, 3) +
         10 * binomial(n + 1, 2) - 14 * Count(n) + 5;
}

} // namespace ballot::recurrences
