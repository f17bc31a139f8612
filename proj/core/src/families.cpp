#include "melon/families.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace melon::families {
namespace {

const IntPoly kSPlusOne{1, 1};
const IntPoly kSPlusTwo{2, 1};

ClassPoly in_s(IntPoly p) { return {std::move(p), Basis::S}; }

IntPoly s_plus_one_pow(int e) { return IntPoly::binomial_power(1, static_cast<unsigned>(e)); }

IntPoly sign_const(int e) { return IntPoly{(e % 2 == 0) ? 1L : -1L}; }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Exact quotient num / den; the closed forms are integral by construction.
BigInt exact_div(const BigInt& num, long den) {
  BigInt q, r;
  mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(den));
  if (sgn(r) != 0) throw std::logic_error("closed-form coefficient is not integral");
  return q;
}

BigInt f_coeff(const BigInt& m, bool odd, int k) {
  switch (k) {
    case 0: return odd ? 1 : 0;
    case 1: return odd ? exact_div(m - 1, 2) : exact_div(m, 2);
    case 2: return odd ? exact_div((m - 1) * (m - 1), 4) : exact_div(m * (m - 2), 4);
    case 3:
      return odd ? exact_div((m - 1) * (m - 3) * (2 * m - 1), 24)
                 : exact_div(m * (m - 2) * (2 * m - 5), 24);
    default:
      return odd ? exact_div((m - 1) * (m - 3) * (m * m - 4 * m + 1), 48)
                 : exact_div(m * (m - 2) * (m - 2) * (m - 4), 48);
  }
}

BigInt g_coeff(const BigInt& m, const BigInt& n, bool odd, int k) {
  switch (k) {
    case 0: return odd ? BigInt(n - 1) : n;
    case 1: return odd ? exact_div((m - 1) * (2 * n - 1), 2) : exact_div(2 * n * (m - 1) - m, 2);
    case 2:
      return odd ? exact_div((m - 1) * ((m - 1) * (2 * n - 1) - 2 * n), 4)
                 : exact_div((m - 2) * (2 * n * (m - 1) - m), 4);
    case 3:
      return odd ? exact_div((m - 1) * (m - 3) * (4 * n * (m - 2) - (2 * m - 1)), 24)
                 : exact_div((m - 2) * (4 * n * (m - 1) * (m - 3) - m * (2 * m - 5)), 24);
    default:
      return odd ? exact_div((m - 1) * (m - 3) * (2 * n * (m - 2) * (m - 4) - (m * m - 4 * m + 1)), 48)
                 : exact_div((m - 2) * (m - 4) * (2 * n * (m - 1) * (m - 3) - m * (m - 2)), 48);
  }
}

BigInt b_coeff(const BigInt& m, const BigInt& n, bool odd, int k) {
  switch (k) {
    case 0: return odd ? BigInt(n + 1) : n;
    case 1:
      return odd ? exact_div((m - 1) * (2 * n + 1) + 2, 2) : exact_div(2 * n * (m - 1) + m, 2);
    case 2:
      return odd ? exact_div((m - 1) * (2 * n * (m - 2) + m + 1), 4)
                 : exact_div(2 * n * (m - 1) * (m - 2) + m * m, 4);
    case 3:
      return odd ? exact_div((m - 1) * (4 * n * (m - 2) * (m - 3) + 2 * m * m - m - 3), 24)
                 : exact_div((m - 2) * (4 * n * (m - 1) * (m - 3) + m * (2 * m + 1)), 24);
    default:
      return odd ? exact_div((m - 1) * (m - 3) * (2 * n * (m - 2) * (m - 4) + m * m - 1), 48)
                 : exact_div((m - 2) * (2 * n * (m - 1) * (m - 3) * (m - 4) + m * (m * m - 2 * m - 2)), 48);
  }
}

}  // namespace

char family_name(FamilyTag tag) noexcept {
  switch (tag) {
    case FamilyTag::F: return 'f';
    case FamilyTag::G: return 'g';
    case FamilyTag::H: return 'h';
    case FamilyTag::B: return 'b';
  }
  return '?';
}

FamilyTag parse_family(const std::string& name) {
  if (name.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(name[0]))) {
      case 'f': return FamilyTag::F;
      case 'g': return FamilyTag::G;
      case 'h': return FamilyTag::H;
      case 'b': return FamilyTag::B;
      default: break;
    }
  }
  throw std::invalid_argument("unknown family '" + name + "' (expected f, g, h or b)");
}

ClassPoly f_poly(int m) {
  require(m >= 0, "f_poly: m must be nonnegative");
  // Every g, h and b value goes through f, so the recursion is memoised for
  // small m. Larger m continue from the last cached entry without storing.
  constexpr int kCached = 2048;
  static std::mutex mu;
  static std::vector<IntPoly> cache{IntPoly{}};  // f_0 = 0

  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= std::min(m, kCached)) {
    const int i = static_cast<int>(cache.size()) - 1;
    cache.push_back(kSPlusOne * cache.back() + sign_const(i));
  }
  if (m <= kCached) return in_s(cache[static_cast<std::size_t>(m)]);
  IntPoly f = cache.back();
  for (int i = kCached; i < m; ++i) f = kSPlusOne * f + sign_const(i);
  return in_s(std::move(f));
}

ClassPoly f_closed_form(int m) {
  require(m >= 1, "f_closed_form: m must be positive");
  std::vector<BigInt> c(static_cast<std::size_t>(m));
  c[0] = (m % 2 == 1) ? 1 : 0;
  BigInt binom;
  for (int j = 1; j <= m - 1; ++j) {
    for (int k = 1; k <= m / 2; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m - 2 * k),
                   static_cast<unsigned long>(j - 1));
      c[static_cast<std::size_t>(j)] += binom;
    }
  }
  return in_s(IntPoly(std::move(c)));
}

ClassPoly g_mn_poly(int m, int n) {
  require(m >= 1 && n >= 1, "g_mn_poly: m and n must be positive");
  return in_s(BigInt(n) * s_plus_one_pow(m - 1) - f_poly(m).poly);
}

ClassPoly g_poly(int m) {
  require(m >= 0, "g_poly: m must be nonnegative");
  return m == 0 ? in_s({}) : g_mn_poly(m, m);
}

ClassPoly h_poly(int m) {
  require(m >= 0, "h_poly: m must be nonnegative");
  if (m == 0) return in_s(IntPoly{1});
  return in_s(kSPlusOne * f_poly(m - 1).poly);
}

ClassPoly b_mn_poly(int m, int n) {
  require(m >= 1 && n >= 1, "b_mn_poly: m and n must be positive");
  return in_s(BigInt(n) * s_plus_one_pow(m - 1) + kSPlusOne * f_poly(m).poly);
}

ClassPoly b_poly(int m) {
  require(m >= 0, "b_poly: m must be nonnegative");
  return m == 0 ? in_s({}) : b_mn_poly(m, m);
}

ClassPoly family_poly(FamilyTag tag, int m) {
  switch (tag) {
    case FamilyTag::F: return f_poly(m);
    case FamilyTag::G: return g_poly(m);
    case FamilyTag::H: return h_poly(m);
    case FamilyTag::B: return b_poly(m);
  }
  throw std::invalid_argument("family_poly: bad tag");
}

BigInt coeff_closed_form(FamilyTag family, int m, int n, int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("coeff_closed_form: only degrees 0..4 have closed forms");
  if (m < 1) throw std::invalid_argument("coeff_closed_form: m must be positive");
  const bool odd = (m % 2) == 1;
  const BigInt bm(m), bn(n);
  switch (family) {
    case FamilyTag::F:
      return k > m - 1 ? BigInt(0) : f_coeff(bm, odd, k);
    case FamilyTag::G:
      if (n < 1) throw std::invalid_argument("coeff_closed_form: n must be positive");
      return k > m - 1 ? BigInt(0) : g_coeff(bm, bn, odd, k);
    case FamilyTag::B:
      if (n < 1) throw std::invalid_argument("coeff_closed_form: n must be positive");
      return k > m ? BigInt(0) : b_coeff(bm, bn, odd, k);
    case FamilyTag::H:
      break;
  }
  throw std::invalid_argument("coeff_closed_form: no closed form for family h");
}

ClassPoly p_mn_poly(int m, int n) {
  require(m >= 2 && n >= 2, "p_mn_poly: m and n must be at least 2");
  IntPoly p = s_plus_one_pow(m - 1);
  for (int k = 0; k <= m - 2; ++k) {
    BigInt c = n + k - 1;
    if ((m - 2 - k) % 2 == 1) c = -c;
    p += c * s_plus_one_pow(k);
  }
  return in_s(std::move(p));
}

ClassPoly banana_factored_form(int m) {
  require(m >= 2, "banana_factored_form: m must be at least 2");
  std::vector<BigInt> inner(static_cast<std::size_t>(m - 1));
  inner[static_cast<std::size_t>(m - 2)] = 1;
  for (int k = 0; k <= m - 3; ++k) {
    inner[static_cast<std::size_t>(k)] = ((m - 3 - k) % 2 == 0) ? (k + 1) : -(k + 1);
  }
  return {IntPoly{0, 1, 1} * IntPoly(std::move(inner)), Basis::T};
}

ClassPoly h_times_t_plus_one_form(int m) {
  require(m >= 2, "h_times_t_plus_one_form: m must be at least 2");
  std::vector<BigInt> inner(static_cast<std::size_t>(m - 1));
  for (int k = 0; k <= m - 2; ++k) inner[static_cast<std::size_t>(k)] = ((m - 2 - k) % 2 == 0) ? 1 : -1;
  return {IntPoly{0, 1, 1} * IntPoly(std::move(inner)), Basis::T};
}

ClassPoly clasped_necklace_class(int m, int n) {
  require(m >= 1 && n >= 2, "clasped_necklace_class: requires m >= 1, n >= 2");
  if (m == 1) return in_s(b_poly(2).poly * pow(kSPlusTwo, static_cast<unsigned>(n - 2)));

  std::vector<BigInt> tail(static_cast<std::size_t>(m));
  tail[static_cast<std::size_t>(m - 1)] = 1;
  for (int k = 0; k <= m - 2; ++k) {
    BigInt c = n + k - 1;
    tail[static_cast<std::size_t>(k)] = ((m - 2 - k) % 2 == 0) ? c : BigInt(-c);
  }
  const IntPoly banana_t = to_basis(b_poly(m), Basis::T).poly;
  IntPoly t_form = IntPoly{0, 1, 1} * pow(banana_t, static_cast<unsigned>(n - 2)) * IntPoly(std::move(tail));
  return to_basis({std::move(t_form), Basis::T}, Basis::S);
}

ClassPoly necklace_class_by_recursion(int m, int n) {
  require(m >= 1 && n >= 2, "necklace_class_by_recursion: requires m >= 1, n >= 2");
  const IntPoly f = f_poly(m).poly;
  const IntPoly g = g_poly(m).poly;
  const IntPoly h = h_poly(m).poly;
  const IntPoly banana = b_poly(m).poly;

  IntPoly current = b_poly(2 * m).poly;  // G_{m,2} is the 2m-banana
  IntPoly banana_pow = banana;           // B_m^{j-1} at step j = 2
  for (int j = 3; j <= n; ++j) {
    banana_pow *= banana;
    current = f * clasped_necklace_class(m, j).poly + g * current + h * banana_pow;
  }
  return in_s(std::move(current));
}

ClassPoly necklace_class(int m, int n) {
  require(m >= 1 && n >= 2, "necklace_class: requires m >= 1, n >= 2");
  if (m == 1) return in_s(b_poly(2).poly * pow(kSPlusTwo, static_cast<unsigned>(n - 2)));
  if (m == 2) {
    IntPoly first = s_plus_one_pow(n) + BigInt(n) * s_plus_one_pow(n - 1) - IntPoly{1};
    return in_s(first * pow(kSPlusTwo, static_cast<unsigned>(n - 1)) * kSPlusOne);
  }
  return necklace_class_by_recursion(m, n);
}

}  // namespace melon::families
