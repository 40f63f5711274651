#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "turan.hpp"

namespace subposet {

long long exact_binomial_limit() { return kExactBinomialLimit; }

BigInt middle_sum(long n, int levels) {
  if (levels < 1 || levels > n + 1)
    throw std::invalid_argument("middle_sum needs 1 <= levels <= n+1");
  if (n > kExactBinomialLimit)
    throw std::invalid_argument("middle_sum is exact-only; n exceeds the limit");
  const long lo = (n - levels + 1) / 2;
  const long hi = (n + levels - 1) / 2;
  const auto row = binomial_row(n);
  BigInt total = 0;
  for (long i = lo; i <= hi; ++i) total += row[i];
  return total;
}

namespace {

long double middle_sum_log(long long n, int levels) {
  const long long lo = (n - levels + 1) / 2;
  const long long hi = (n + levels - 1) / 2;
  const long double peak = log_binomial(n, n / 2);
  long double acc = 0.0L;
  for (long long i = lo; i <= hi; ++i)
    acc += expl(log_binomial(n, i) - peak);
  return peak + logl(acc);
}

std::string instantiated_binomial(long long n, long long index) {
  return "C(" + std::to_string(n) + "," + std::to_string(index) + ")";
}

// Fills the explicit terms of a report whose shape is
//   middle_sum(n, levels) + coeff * C(n, corr_index).
void fill_terms(BoundReport& report, int levels, const Rat& coeff, long long corr_index) {
  const long long n = report.n;
  report.correction_coeff = coeff;
  report.correction_binomial = instantiated_binomial(n, corr_index);
  report.exact = n <= kExactBinomialLimit;
  report.main_log = middle_sum_log(n, levels);
  report.correction_log = log_binomial(n, corr_index);
  const long double central_log = log_binomial(n, n / 2);
  const double coeff_d = rat_to_double(coeff);
  if (report.exact) {
    report.main_term = middle_sum(n, levels);
    report.correction_term = coeff * Rat(binomial(n, corr_index));
    const Rat total = Rat(report.main_term) + report.correction_term;
    report.ratio_to_central =
        rat_to_double(total / Rat(binomial(n, n / 2)));
  } else {
    report.ratio_to_central = static_cast<double>(
        expl(report.main_log - central_log) +
        coeff_d * expl(report.correction_log - central_log));
  }
  report.constant = levels;
}

void fill_constant_bound(BoundReport& report, double constant) {
  const long long n = report.n;
  report.exact = n <= kExactBinomialLimit;
  report.main_log = log_binomial(n, n / 2);
  report.correction_log = 0.0L;
  report.correction_coeff = 0;
  report.correction_binomial = "";
  if (report.exact) {
    report.main_term = binomial(n, n / 2);
    report.correction_term = 0;
  }
  report.ratio_to_central = constant;
  report.constant = constant;
  report.dropped = "o_n(1) * C(n,floor(n/2))";
}

}  // namespace

TailCheck binomial_tail_check(int n) {
  if (n < 2) throw std::invalid_argument("tail check needs n >= 2");
  if (n > kExactBinomialLimit)
    throw std::invalid_argument("tail check is exact-only; n exceeds the limit");
  const double cut = n / 2.0 + 2.0 * std::sqrt(n * std::log(static_cast<double>(n)));
  TailCheck check;
  check.n = n;
  check.tail = 0;
  const auto row = binomial_row(n);
  for (int i = n; i > cut && i >= 0; --i) check.tail += row[i];
  BigInt pow2 = BigInt(1) << n;
  check.threshold = Rat(pow2, BigInt(n) * n);
  // Exact comparison: tail * n^2 < 2^n.
  check.holds = check.tail * n * n < pow2;
  return check;
}

double central_binomial_estimate(long long n) {
  if (n < 1) throw std::invalid_argument("estimate needs n >= 1");
  const double ln_value =
      0.5 * (std::log(2.0) - std::log(M_PI * static_cast<double>(n))) +
      static_cast<double>(n) * std::log(2.0);
  return std::exp(ln_value);
}

BoundReport baton_upper(long long n, int k, int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("baton bound needs s,t >= 1");
  if (k < 3) throw std::invalid_argument("baton bound needs k >= 3");
  if (n < k) throw std::invalid_argument("baton bound needs n >= k");
  BoundReport report;
  report.bound = "baton-upper";
  report.n = n;
  report.params = {{"k", std::to_string(k)}, {"s", std::to_string(s)}, {"t", std::to_string(t)}};
  report.relation = Relation::UpperBound;
  const Rat coeff(2LL * k * (s + t - 2), n);
  fill_terms(report, k - 1, coeff, (n + k) / 2);
  report.constant = k - 1;
  report.dropped = "O(n^{-3/2} sqrt(ln n)) * C(n,floor((n+k)/2))";
  return report;
}

std::pair<BoundReport, BoundReport> fork_shaft_bounds(long long n, int k, int r) {
  if (k < 3 || r < 1) throw std::invalid_argument("fork-shaft bounds need k >= 3, r >= 1");
  if (n < k) throw std::invalid_argument("fork-shaft bounds need n >= k");
  const long long corr_index = (n + k + 1) / 2;

  BoundReport lower;
  lower.bound = "fork-shaft-lower";
  lower.n = n;
  lower.params = {{"k", std::to_string(k)}, {"r", std::to_string(r)}};
  lower.relation = Relation::LowerBound;
  fill_terms(lower, k - 1, Rat(r - 1, n), corr_index);
  lower.constant = k - 1;
  lower.dropped = "Omega(1/n^2) * C(n,floor((n+k+1)/2))";

  // z(k) by the parity of n+k.
  const long long zk = ((n + k) % 2 == 0) ? (1LL * k * k) / 2 : (1LL * (k - 1) * (k - 1)) / 2;
  BoundReport upper;
  upper.bound = "fork-shaft-upper";
  upper.n = n;
  upper.params = {{"k", std::to_string(k)},
                  {"r", std::to_string(r)},
                  {"z", std::to_string(zk)}};
  upper.relation = Relation::UpperBound;
  fill_terms(upper, k - 1, Rat(zk + 2LL * (r - 1), n), corr_index);
  upper.constant = k - 1;
  upper.dropped = "Omega(1/n^2) * C(n,floor((n+k+1)/2))";
  return {lower, upper};
}

BoundReport baton_lower(long long n, int k, int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("baton bound needs s,t >= 1");
  if (k < 3) throw std::invalid_argument("baton bound needs k >= 3");
  if (n < k) throw std::invalid_argument("baton bound needs n >= k");
  BoundReport report;
  report.bound = "baton-lower";
  report.n = n;
  report.params = {{"k", std::to_string(k)}, {"s", std::to_string(s)}, {"t", std::to_string(t)}};
  report.relation = Relation::LowerBound;
  fill_terms(report, k - 1, Rat(std::max(s, t) - 1, n), (n + k) / 2);
  report.constant = k - 1;
  report.dropped = "Omega(1/n^2) * C(n,floor((n+k)/2))";
  return report;
}

BoundReport up_down_tree_upper(long long n, int order) {
  if (order < 1) throw std::invalid_argument("tree bound needs order >= 1");
  if (n < 2) throw std::invalid_argument("tree bound needs n >= 2");
  BoundReport report;
  report.bound = "up-down-tree-upper";
  report.n = n;
  report.params = {{"order", std::to_string(order)}};
  report.relation = Relation::UpperBound;
  fill_terms(report, 1, Rat(16LL * order, n), n / 2);
  report.constant = 1.0;
  report.dropped =
      "O(1/(n sqrt(n ln n))) * C(n,floor(n/2)); the 16t/n coefficient is the "
      "stated factor, a sharper 2t/n + 16t/(n sqrt(n ln n)) form also holds";
  return report;
}

BoundReport crown_bound(long long n, int cycle_length) {
  if (cycle_length < 4 || cycle_length % 2 != 0)
    throw std::invalid_argument("crown bound needs an even cycle length >= 4");
  if (n < 1) throw std::invalid_argument("crown bound needs n >= 1");
  BoundReport report;
  report.bound = "crown";
  report.n = n;
  report.params = {{"cycle", std::to_string(cycle_length)}};
  if (cycle_length == 4) {
    // The butterfly: asymptotically two middle levels exactly.
    report.relation = Relation::AsymptoticEquality;
    fill_constant_bound(report, 2.0);
  } else if (cycle_length % 4 == 0) {
    report.relation = Relation::AsymptoticEquality;
    fill_constant_bound(report, 1.0);
  } else {
    report.relation = Relation::UpperBound;
    fill_constant_bound(report, 1.0 + std::sqrt(2.0) / 2.0);
  }
  return report;
}

BoundReport incidence_poset_upper(long long n, const Graph& g) {
  if (g.edge_count() < 1)
    throw std::invalid_argument("incidence bound needs a graph with at least one edge");
  if (n < 1) throw std::invalid_argument("incidence bound needs n >= 1");
  const int chi = chromatic_number(g);
  BoundReport report;
  report.bound = "incidence-upper";
  report.n = n;
  report.params = {{"graph", format_graph_literal(g)}, {"chi", std::to_string(chi)}};
  if (chi == 2) {
    report.relation = Relation::AsymptoticEquality;
    fill_constant_bound(report, 1.0);
  } else {
    report.relation = Relation::UpperBound;
    fill_constant_bound(report, 1.0 + std::sqrt(1.0 - 1.0 / (chi - 1)));
  }
  return report;
}

PiEntry pi_known(const std::string& poset_spec) {
  const size_t colon = poset_spec.find(':');
  const std::string name = poset_spec.substr(0, colon);
  std::vector<long> args;
  if (colon != std::string::npos) {
    std::stringstream ss(poset_spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
        args.clear();
        break;
      }
      args.push_back(std::stol(item));
    }
  }

  PiEntry entry;
  entry.family = poset_spec;
  entry.kind = PiEntry::Kind::Unknown;
  auto exact = [&](long num, const std::string& source) {
    entry.kind = PiEntry::Kind::Exact;
    entry.value = num;
    entry.source = source;
  };

  if (name == "chain" && args.size() == 1 && args[0] >= 1) {
    exact(args[0] - 1, "Erdos (1945): the k-1 middle levels are extremal for k-chains");
  } else if (name == "butterfly" && colon == std::string::npos) {
    exact(2, "De Bonis-Katona-Swanepoel: two middle levels are extremal");
  } else if (name == "krs" && args.size() == 2 && args[0] >= 2 && args[1] >= 2) {
    exact(2, "De Bonis-Katona: complete two-level posets with both sides >= 2");
  } else if (name == "nposet" && colon == std::string::npos) {
    exact(1, "Griggs-Katona");
  } else if (name == "fork" && args.size() == 1 && args[0] >= 1) {
    exact(1, "Thanh");
  } else if (name == "kfork" && args.size() == 2 && args[0] >= 1 && args[1] >= 1) {
    exact(args[0], "De Bonis-Katona: forks with a shaft");
  } else if (name == "diamond" && colon == std::string::npos) {
    entry.kind = PiEntry::Kind::Interval;
    entry.lower = 2.0;
    entry.upper = 3.0;
    entry.lower_text = "2";
    entry.upper_text = "3";
    entry.source = "open: squeezed between the 3-chain and 4-chain values";
  } else if (name == "crown" && args.size() == 1 && args[0] >= 4 && args[0] % 2 == 0) {
    const long cycle = args[0];
    if (cycle == 4) {
      exact(2, "crown on four elements is the butterfly");
    } else if (cycle % 4 == 0) {
      exact(1, "two-level cycle bound, length divisible by 4");
    } else {
      entry.kind = PiEntry::Kind::Interval;
      entry.lower = 1.0;
      entry.upper = 1.0 + std::sqrt(2.0) / 2.0;
      entry.lower_text = "1";
      entry.upper_text = "1+sqrt(2)/2";
      entry.source = "two-level cycle bound, length 2 mod 4; middle level gives the lower end";
    }
  }
  return entry;
}

}  // namespace subposet
