#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "graph.hpp"

namespace subposet {

enum class Relation { UpperBound, LowerBound, AsymptoticEquality };

// One displayed bound, split into its explicit terms and the symbolic
// remainder. Exact integers/rationals are carried while n stays within
// kExactBinomialLimit; above that only the log-space fields are valid.
struct BoundReport {
  std::string bound;
  long long n = 0;
  std::vector<std::pair<std::string, std::string>> params;
  Relation relation = Relation::UpperBound;

  bool exact = true;
  BigInt main_term;            // the binomial sum (exact mode)
  Rat correction_term;         // coefficient times its binomial (exact mode)
  Rat correction_coeff;        // the explicit rational coefficient (always)
  std::string correction_binomial;  // which binomial the coefficient scales

  long double main_log = 0.0L;        // ln of main term
  long double correction_log = 0.0L;  // ln of correction binomial (coeff excluded)

  double ratio_to_central = 0.0;  // (main + correction) / C(n, n/2)
  double constant = 0.0;          // leading asymptotic constant
  std::string dropped;            // symbolic remainder, never fabricated
};

// Sum of the `levels` middle binomial coefficients of n (the index range
// runs floor((n-levels+1)/2) .. floor((n+levels-1)/2)). Exact only.
BigInt middle_sum(long n, int levels);

// One-sided tail of the binomial distribution past n/2 + 2*sqrt(n ln n),
// compared exactly against 2^n / n^2. The lower tail is the same number
// by the symmetry C(n,i) = C(n,n-i).
struct TailCheck {
  int n = 0;
  BigInt tail;
  Rat threshold;
  bool holds = false;
};
TailCheck binomial_tail_check(int n);

// sqrt(2/(pi n)) * 2^n; relative error against the exact central
// binomial coefficient decays like 1/n.
double central_binomial_estimate(long long n);

// Upper bound for batons: the k-1 middle levels plus an explicit
// 2k(s+t-2)/n correction on C(n, floor((n+k)/2)).
BoundReport baton_upper(long long n, int k, int s, int t);

// Two-sided bounds for the r-fork with a k-shaft; the correction binomial
// here is C(n, floor((n+k+1)/2)), kept verbatim, and the upper correction
// uses z(k) chosen by the parity of n+k.
std::pair<BoundReport, BoundReport> fork_shaft_bounds(long long n, int k, int r);

// Baton lower bound obtained from the fork-shaft lower bound at
// r = max(s,t), with the correction on C(n, floor((n+k)/2)).
BoundReport baton_lower(long long n, int k, int s, int t);

// Up-down trees of a given order: factor 1 + 16t/n on the central level.
BoundReport up_down_tree_upper(long long n, int order);

// Crowns on a cycle of the given length: constant 1 when the length is
// divisible by 4 (asymptotic equality), 1 + sqrt(2)/2 otherwise (upper
// bound only); length 4 is the butterfly with constant 2.
BoundReport crown_bound(long long n, int cycle_length);

// Incidence posets of graphs: constant 1 + sqrt(1 - 1/(chi-1)), exactly 1
// with asymptotic equality for bipartite graphs.
BoundReport incidence_poset_upper(long long n, const Graph& g);

long long exact_binomial_limit();

// ---- known asymptotic densities ---------------------------------------

struct PiEntry {
  std::string family;
  enum class Kind { Exact, Interval, Unknown } kind = Kind::Unknown;
  Rat value;                 // Kind::Exact
  double lower = 0.0;        // Kind::Interval
  double upper = 0.0;
  std::string lower_text;    // symbolic endpoint forms
  std::string upper_text;
  std::string source;
};

// Limit of La(n,H)/C(n, floor(n/2)) for the recognized catalog families;
// Unknown for anything else.
PiEntry pi_known(const std::string& poset_spec);

}  // namespace subposet
