#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "melon/poly.hpp"

// Exact checks of log-concavity and its ultra variants on integer coefficient
// sequences. Failure lists hold degree indices (position in the sequence).
namespace melon::concavity {

struct CheckResult {
  bool holds = true;
  std::vector<int> failing_degrees;  // ascending
};

class OrderTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// a_k^2 >= a_{k-1} a_{k+1} for 0 < k < len-1, applied literally (negative
/// entries allowed).
CheckResult check_lc(const std::vector<BigInt>& a);

/// k(n-k) a_k^2 >= (n-k+1)(k+1) a_{k-1} a_{k+1} for 0 < k < n, where n = len-1.
CheckResult check_ulc(const std::vector<BigInt>& a);

/// The same inequality with a fixed order m >= 0 in place of n, for 0 < k < m.
/// Throws OrderTooSmall if some a_k != 0 with k > m.
CheckResult check_ulc_order(const std::vector<BigInt>& a, int m);

/// Limit m -> infinity: k a_k^2 >= (k+1) a_{k-1} a_{k+1} for 0 < k < len-1.
CheckResult check_ulc_infinity(const std::vector<BigInt>& a);

struct ShapeResult {
  bool unimodal = true;
  bool internal_zeros = false;
  bool all_positive = true;
  bool nonnegative = true;
};

/// Unimodal: nondecreasing up to some index, nonincreasing after it.
/// Internal zero: a zero strictly between two nonzero entries.
/// all_positive: every entry > 0 (false for the empty sequence).
ShapeResult check_unimodal_and_zeros(const std::vector<BigInt>& a);

struct OrderVerdict {
  int m = 0;
  bool holds = true;
  std::vector<int> failing_degrees;
};

struct ConcavityReport {
  long degree = -1;
  bool lc = true;
  std::vector<int> lc_failures;
  bool ulc = true;
  std::vector<int> ulc_failures;
  std::optional<OrderVerdict> ulc_order;
  bool unimodal = true;
  bool internal_zeros = false;
  bool all_positive = true;
  bool nonnegative = true;
};

/// Runs every check on the S-basis coefficients of c. With an order, also
/// checks ULC(order); OrderTooSmall propagates.
ConcavityReport analyze(const ClassPoly& c, std::optional<int> ulc_order = std::nullopt);

}  // namespace melon::concavity
