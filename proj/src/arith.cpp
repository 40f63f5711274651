#include "arith.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace subposet {

std::vector<BigInt> factorial_table(int n) {
  std::vector<BigInt> table(static_cast<size_t>(n) + 1);
  table[0] = 1;
  for (int i = 1; i <= n; ++i) table[i] = table[i - 1] * i;
  return table;
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (n > kExactBinomialLimit)
    throw std::invalid_argument("binomial: n exceeds exact-arithmetic limit");
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);  // divides exactly: prefix products are binomials
  }
  return result;
}

std::vector<BigInt> binomial_row(long n) {
  if (n < 0 || n > kExactBinomialLimit)
    throw std::invalid_argument("binomial_row: n out of range");
  std::vector<BigInt> row(static_cast<size_t>(n) + 1);
  row[0] = 1;
  for (long k = 0; k < n; ++k) row[k + 1] = row[k] * (n - k) / (k + 1);
  return row;
}

long double log_binomial(long long n, long long k) {
  if (k < 0 || k > n) return -std::numeric_limits<long double>::infinity();
  return lgammal(static_cast<long double>(n) + 1) -
         lgammal(static_cast<long double>(k) + 1) -
         lgammal(static_cast<long double>(n - k) + 1);
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("ratio_to_double: zero denominator");
  if (num == 0) return 0.0;
  const bool negative = (num < 0) != (den < 0);
  BigInt a = abs(num);
  BigInt b = abs(den);
  // Shift both so they convert to double without overflow; only the top
  // bits matter for the quotient.
  const long abits = static_cast<long>(msb(a));
  const long bbits = static_cast<long>(msb(b));
  const long shift = std::max({0L, abits - 512, bbits - 512});
  if (shift > 0) {
    a >>= shift;
    b >>= shift;
    if (b == 0) b = 1;
  }
  const double q = a.convert_to<double>() / b.convert_to<double>();
  return negative ? -q : q;
}

double rat_to_double(const Rat& value) {
  return ratio_to_double(numerator(value), denominator(value));
}

std::string decimal_string(const BigInt& value) { return value.str(); }

std::string scientific_from_log(long double natural_log) {
  if (std::isinf(static_cast<double>(natural_log))) return "0";
  const long double log10v = natural_log / logl(10.0L);
  const long double exponent = floorl(log10v);
  const long double mantissa = powl(10.0L, log10v - exponent);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12Lfe%+.0Lf", mantissa, exponent);
  return buf;
}

}  // namespace subposet
