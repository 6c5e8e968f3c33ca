#include "ballot/count.hpp"

#include <stdexcept>

namespace ballot {

std::string to_decimal(const Count& value) { return value.str(); }

Count parse_count(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_count: empty string");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '-' && i == 0 && text.size() > 1) continue;
    if (c < '0' || c > '9')
      throw std::invalid_argument("parse_count: not a decimal integer: '" + text + "'");
  }
  return Count(text);
}

Count binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i; // always exact: result is C(n-k+i, i)
  }
  return result;
}

Count factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Count result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

Count double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("double_factorial: argument below -1");
  Count result = 1;
  for (int i = n; i >= 2; i -= 2) result *= i;
  return result;
}

Count pow_count(const Count& base, unsigned exp) {
  Count result = 1;
  Count b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return result;
}

Count pow2(unsigned exp) { return Count(1) << exp; }

Count exact_div(const Count& value, const Count& divisor, const char* what) {
  if (divisor == 0) throw std::logic_error(std::string(what) + ": division by zero");
  Count quotient, remainder;
  boost::multiprecision::divide_qr(value, divisor, quotient, remainder);
  if (remainder != 0)
    throw std::logic_error(std::string(what) + ": expected " + value.str() +
                           " to be divisible by " + divisor.str());
  return quotient;
}

Count to_integer(const Rational& value, const char* what) {
  if (boost::multiprecision::denominator(value) != 1)
    throw std::logic_error(std::string(what) + ": value " +
                           boost::multiprecision::numerator(value).str() + "/" +
                           boost::multiprecision::denominator(value).str() +
                           " is not an integer");
  return boost::multiprecision::numerator(value);
}

} // namespace ballot
