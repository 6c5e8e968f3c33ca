#include "ballot/closed_forms.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace ballot::closed_forms {

void throw_out_of_domain(const FormulaDomain& domain, const std::string& got) {
  throw std::domain_error(std::string(domain.name) + ": valid for " + domain.valid_range +
                          " (got " + got + ")");
}

namespace {

// Row-by-row fill of E(n, d) = (d+1) E(n-1, d) + (n-d) E(n-1, d-1).
class EulerianTable {
public:
  Count at(int n, int d) {
    if (n < 0) throw std::invalid_argument("eulerian: n must be nonnegative");
    if (d < 0) return 0;
    if (n == 0) return d == 0 ? Count(1) : Count(0);
    if (d >= n) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    ensure_rows(n);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)];
  }

private:
  void ensure_rows(int n) {
    if (rows_.empty()) rows_.push_back({Count(1)}); // E(0, 0)
    while (static_cast<int>(rows_.size()) <= n) {
      const int m = static_cast<int>(rows_.size());
      const auto& prev = rows_.back(); // E(m-1, 0 .. size-1); zero beyond
      const int prev_size = static_cast<int>(prev.size());
      std::vector<Count> row(static_cast<std::size_t>(m));
      for (int d = 0; d < m; ++d) {
        Count value = 0;
        if (d < prev_size) value += Count(d + 1) * prev[static_cast<std::size_t>(d)];
        if (d >= 1 && d - 1 < prev_size)
          value += Count(m - d) * prev[static_cast<std::size_t>(d - 1)];
        row[static_cast<std::size_t>(d)] = std::move(value);
      }
      rows_.push_back(std::move(row));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<Count>> rows_;
};

EulerianTable& eulerian_table() {
  static EulerianTable table;
  return table;
}

} // namespace

Count eulerian(int n, int d) { return eulerian_table().at(n, d); }

Count eulerian_catalan(int n) {
  if (n < 0) throw std::invalid_argument("eulerian_catalan: n must be nonnegative");
  if (n == 0) return 1;
  return 2 * eulerian(2 * n, n - 1);
}

Count total_ballot(int n) {
  static constexpr FormulaDomain domain{"total_ballot", "n >= 1"};
  if (n < 1) throw_out_of_domain(domain, "n=" + std::to_string(n));
  if (n % 2 == 0) {
    const Count f = double_factorial(n - 1);
    return f * f;
  }
  return double_factorial(n) * double_factorial(n - 2);
}

Count a_formula(int n, int d) {
  static constexpr FormulaDomain domain{"a_formula", "n >= 1"};
  if (n < 1) throw_out_of_domain(domain, "n=" + std::to_string(n));
  if (d == 0) return 1;
  return Count(d + 1) * eulerian(n - 1, d);
}

Count b1_formula(int n) {
  static constexpr FormulaDomain domain{"b1_formula", "n >= 1"};
  if (n < 1) throw_out_of_domain(domain, "n=" + std::to_string(n));
  return 2 * eulerian(n - 1, 1);
}

Count b2_formula(int n) {
  static constexpr FormulaDomain domain{"b2_formula", "n >= 2"};
  if (n < 2) throw_out_of_domain(domain, "n=" + std::to_string(n));
  return 3 * eulerian(n - 1, 2) - 2 * binomial(n, 3) + binomial(n, 2) - 1;
}

Count b3_formula(int n) {
  static constexpr FormulaDomain domain{"b3_formula", "n >= 4"};
  if (n < 4) throw_out_of_domain(domain, "n=" + std::to_string(n));
  return 4 * eulerian(n - 1, 3) -
         (binomial(n, 3) - binomial(n, 2) + 4) * pow2(static_cast<unsigned>(n - 2)) -
         22 * binomial(n, 5) + 16 * binomial(n, 4) - 4 * binomial(n, 3) + 2 * Count(n);
}

Count c_formula(int n, int d) {
  static constexpr FormulaDomain domain{"c_formula", "n = 1 or odd n >= 3"};
  if (n < 1 || n % 2 == 0) throw_out_of_domain(domain, "n=" + std::to_string(n));
  if (n == 1) return d == 0 ? Count(1) : Count(0);
  if (d <= 0 || d > (n - 1) / 2) return 0;
  return 2 * eulerian(n - 1, d - 1);
}

Count b_max_formula(int size) {
  static constexpr FormulaDomain domain{"b_max_formula", "odd size >= 1"};
  if (size < 1 || size % 2 == 0) throw_out_of_domain(domain, "size=" + std::to_string(size));
  return eulerian_catalan((size - 1) / 2);
}

Count b_2n_formula(int n) {
  static constexpr FormulaDomain domain{"b_2n_formula", "n >= 1"};
  if (n < 1) throw_out_of_domain(domain, "n=" + std::to_string(n));
  Count sum = 0;
  for (int k = 1; k <= 2 * n - 1; k += 2)
    sum += binomial(2 * n, k) * eulerian_catalan((k - 1) / 2) *
           eulerian_catalan((2 * n - k - 1) / 2);
  return exact_div(sum, 2, "b_2n_formula");
}

Count p_second_last_formula(int n) {
  static constexpr FormulaDomain domain{"p_second_last_formula", "n >= 2"};
  if (n < 2) throw_out_of_domain(domain, "n=" + std::to_string(n));
  Count sum = 0;
  for (int k = 1; k <= 2 * n - 1; k += 2) {
    for (int l = 1; l <= 2 * n + 1 - k; l += 2) {
      sum += binomial(2 * n + 1, k) * binomial(2 * n + 1 - k, l) *
             eulerian_catalan((k - 1) / 2) * eulerian_catalan((l - 1) / 2) *
             eulerian_catalan((2 * n - k - l) / 2);
    }
  }
  return 2 * eulerian(2 * n, n - 2) + exact_div(sum, 6, "p_second_last_formula");
}

namespace {

// Strip trailing zeros; an all-zero string reduces to "0".
std::string reduce_index(const std::string& bits) {
  std::string r = bits;
  while (r.size() > 1 && r.back() == '0') r.pop_back();
  return r;
}

bool in_ud_table(const std::string& reduced) {
  return reduced == "0" || reduced == "1" || reduced == "01" || reduced == "11" ||
         reduced == "011" || reduced == "111" || reduced == "0111" || reduced == "01011" ||
         reduced == "00111";
}

Count ud_table_value(const std::string& reduced, int n) {
  if (reduced == "0") return 1;
  if (reduced == "1") return binomial(n, 1) - 1;
  if (reduced == "01") return binomial(n, 2) - 1;
  if (reduced == "11") return binomial(n, 2) - binomial(n, 1) + 1;
  if (reduced == "011") return 2 * binomial(n, 3) - binomial(n, 2) + 1;
  if (reduced == "111") return binomial(n, 3) - binomial(n, 2) + binomial(n, 1) - 1;
  if (reduced == "0111") return 3 * binomial(n, 4) - 2 * binomial(n, 3) + binomial(n, 2) - 1;
  if (reduced == "01011")
    return 16 * binomial(n, 5) - 5 * binomial(n, 4) + binomial(n, 2) - 1;
  if (reduced == "00111")
    return 6 * binomial(n, 5) - 3 * binomial(n, 4) + binomial(n, 3) - 1;
  throw std::logic_error("ud_table_value: unreachable");
}

} // namespace

bool ud_polynomial_supported(const BinaryIndex& r, int n) {
  if (r.empty()) return n >= 1;
  return n - 1 >= r.size() && in_ud_table(reduce_index(r.str()));
}

Count ud_polynomial(const BinaryIndex& r, int n) {
  if (r.empty()) {
    // Index padded with zeros only: the identity permutation.
    if (n < 1) throw std::domain_error("ud_polynomial: requires n >= 1");
    return 1;
  }
  const std::string reduced = reduce_index(r.str());
  if (!in_ud_table(reduced))
    throw std::domain_error("ud_polynomial: unsupported index string '" + r.str() +
                            "' (no tabulated polynomial; use the enumeration oracle)");
  if (n - 1 < r.size())
    throw std::domain_error("ud_polynomial: valid for n - 1 >= |r| (got n=" +
                            std::to_string(n) + ", |r|=" + std::to_string(r.size()) + ")");
  return ud_table_value(reduced, n);
}

bool f_closed_supported(const BinaryIndex& r) {
  const std::string& s = r.str();
  return s == "10" || s == "00" || s == "110" || s == "010" || s == "0110";
}

Count f_closed(const BinaryIndex& r, int n, FClosedVariant variant) {
  const std::string& s = r.str();
  const Rational nn(n);
  if (s == "10") {
    static constexpr FormulaDomain domain{"f_closed(10)", "n >= 2"};
    if (n < 2) throw_out_of_domain(domain, "n=" + std::to_string(n));
    const Rational value = Rational(n - 2) * Rational(pow2(static_cast<unsigned>(n - 1))) -
                           Rational(3 * n - 1) * Rational(n - 2) / 2;
    return to_integer(value, "f_closed(10)");
  }
  if (s == "00") {
    static constexpr FormulaDomain domain{"f_closed(00)", "n >= 2"};
    if (n < 2) throw_out_of_domain(domain, "n=" + std::to_string(n));
    const Rational value = Rational(pow2(static_cast<unsigned>(n))) - nn * nn / 2 -
                           Rational(3) * nn / 2 + 1;
    return to_integer(value, "f_closed(00)");
  }
  if (s == "110") {
    static constexpr FormulaDomain domain{"f_closed(110)", "n >= 2"};
    if (n < 2) throw_out_of_domain(domain, "n=" + std::to_string(n));
    const Rational value = (nn * nn - 5 * nn + 8) * Rational(pow2(static_cast<unsigned>(n))) / 8 -
                           Rational(2) * nn * nn * nn / 3 + Rational(7) * nn * nn / 2 -
                           Rational(35) * nn / 6 + 2;
    return to_integer(value, "f_closed(110)");
  }
  if (s == "010") {
    static constexpr FormulaDomain domain{"f_closed(010)", "n >= 2"};
    if (n < 2) throw_out_of_domain(domain, "n=" + std::to_string(n));
    const Rational value = (nn * nn - nn - 8) * Rational(pow2(static_cast<unsigned>(n))) / 8 -
                           Rational(5) * nn * nn * nn / 6 + 3 * nn * nn - nn / 6 - 2;
    return to_integer(value, "f_closed(010)");
  }
  if (s == "0110") {
    static constexpr FormulaDomain domain{"f_closed(0110)", "n >= 3"};
    if (n < 3) throw_out_of_domain(domain, "n=" + std::to_string(n));
    const Count lead = variant == FClosedVariant::corrected
                           ? binomial(n, 3) - binomial(n, 2) + 4
                           : binomial(n, 2) - binomial(n, 3) - 4;
    return lead * pow2(static_cast<unsigned>(n - 2)) - 11 * binomial(n, 4) +
           5 * binomial(n, 3) - 2 * binomial(n, 2) - 2 * Count(n) + 3;
  }
  throw std::domain_error("f_closed: unsupported index string '" + s +
                          "' (closed forms exist for 10, 00, 110, 010, 0110)");
}

} // namespace ballot::closed_forms
