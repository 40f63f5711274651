#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace subposet {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Largest n for which binomial coefficients are evaluated exactly.
// Above this, callers switch to log-space evaluation (log_binomial).
constexpr long kExactBinomialLimit = 4096;

// 0!..n! as exact integers.
std::vector<BigInt> factorial_table(int n);

// C(n,k), exact. Zero outside 0 <= k <= n. Requires n <= kExactBinomialLimit.
BigInt binomial(long n, long k);

// Full row C(n,0..n) via the multiplicative recurrence.
std::vector<BigInt> binomial_row(long n);

// ln C(n,k) evaluated in long double via lgammal; relative error of the
// exponentiated value stays below 1e-12 over the supported range.
long double log_binomial(long long n, long long k);

// num/den as a double; safe when both operands exceed double range.
double ratio_to_double(const BigInt& num, const BigInt& den);
double rat_to_double(const Rat& value);

std::string decimal_string(const BigInt& value);

// "m.mmmmmmmmmmmme+XXXX" from a natural-log magnitude; deterministic
// formatting used wherever a value exceeds exact-mode range.
std::string scientific_from_log(long double natural_log);

}  // namespace subposet
