#include "melon/concavity.hpp"

#include <string>
#include <utility>

namespace melon::concavity {
namespace {

// Checks wl(k) a_k^2 >= wr(k) a_{k-1} a_{k+1} for 0 < k < hi.
template <class Weights>
CheckResult weighted_check(const std::vector<BigInt>& a, int hi, Weights weights) {
  CheckResult r;
  const int len = static_cast<int>(a.size());
  auto at = [&](int k) -> BigInt { return k < len ? a[static_cast<std::size_t>(k)] : BigInt(0); };
  for (int k = 1; k < hi; ++k) {
    const auto [wl, wr] = weights(k);
    const BigInt ak = at(k);
    if (wl * ak * ak < wr * at(k - 1) * at(k + 1)) {
      r.holds = false;
      r.failing_degrees.push_back(k);
    }
  }
  return r;
}

}  // namespace

CheckResult check_lc(const std::vector<BigInt>& a) {
  return weighted_check(a, static_cast<int>(a.size()) - 1,
                        [](int) { return std::pair<BigInt, BigInt>{1, 1}; });
}

CheckResult check_ulc(const std::vector<BigInt>& a) {
  const long n = static_cast<long>(a.size()) - 1;
  return weighted_check(a, static_cast<int>(n), [n](int k) {
    return std::pair<BigInt, BigInt>{BigInt(k) * (n - k), BigInt(n - k + 1) * (k + 1)};
  });
}

CheckResult check_ulc_order(const std::vector<BigInt>& a, int m) {
  if (m < 0) throw OrderTooSmall("ULC order must be nonnegative");
  for (std::size_t k = static_cast<std::size_t>(m) + 1; k < a.size(); ++k) {
    if (sgn(a[k]) != 0) {
      throw OrderTooSmall("nonzero coefficient in degree " + std::to_string(k) + " exceeds order " +
                          std::to_string(m));
    }
  }
  const long mm = m;
  return weighted_check(a, m, [mm](int k) {
    return std::pair<BigInt, BigInt>{BigInt(k) * (mm - k), BigInt(mm - k + 1) * (k + 1)};
  });
}

CheckResult check_ulc_infinity(const std::vector<BigInt>& a) {
  return weighted_check(a, static_cast<int>(a.size()) - 1,
                        [](int k) { return std::pair<BigInt, BigInt>{k, k + 1}; });
}

ShapeResult check_unimodal_and_zeros(const std::vector<BigInt>& a) {
  ShapeResult r;
  r.all_positive = !a.empty();
  bool descending = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) <= 0) r.all_positive = false;
    if (sgn(a[i]) < 0) r.nonnegative = false;
    if (i == 0) continue;
    if (a[i] < a[i - 1]) descending = true;
    else if (a[i] > a[i - 1] && descending) r.unimodal = false;
  }

  std::size_t first = a.size(), last = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0) {
      if (first == a.size()) first = i;
      last = i;
    }
  }
  for (std::size_t i = first; i < last; ++i) {
    if (sgn(a[i]) == 0) r.internal_zeros = true;
  }
  return r;
}

ConcavityReport analyze(const ClassPoly& c, std::optional<int> ulc_order) {
  const IntPoly in_s = to_basis(c, Basis::S).poly;
  const auto& a = in_s.coeffs();
  ConcavityReport rep;
  rep.degree = static_cast<long>(a.size()) - 1;

  auto lc = check_lc(a);
  rep.lc = lc.holds;
  rep.lc_failures = std::move(lc.failing_degrees);

  auto ulc = check_ulc(a);
  rep.ulc = ulc.holds;
  rep.ulc_failures = std::move(ulc.failing_degrees);

  if (ulc_order) {
    auto o = check_ulc_order(a, *ulc_order);
    rep.ulc_order = OrderVerdict{*ulc_order, o.holds, std::move(o.failing_degrees)};
  }

  const auto shape = check_unimodal_and_zeros(a);
  rep.unimodal = shape.unimodal;
  rep.internal_zeros = shape.internal_zeros;
  rep.all_positive = shape.all_positive;
  rep.nonnegative = shape.nonnegative;
  return rep;
}

}  // namespace melon::concavity
