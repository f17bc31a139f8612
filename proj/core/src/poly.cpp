#include "melon/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace melon {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::binomial_power(long a, unsigned e) {
  // Row of Pascal's triangle scaled by powers of a.
  std::vector<BigInt> v(e + 1);
  BigInt binom = 1;
  BigInt apow;
  for (unsigned k = 0; k <= e; ++k) {
    mpz_ui_pow_ui(apow.get_mpz_t(), static_cast<unsigned long>(a < 0 ? -a : a), e - k);
    if (a < 0 && ((e - k) & 1U)) apow = -apow;
    v[k] = binom * apow;
    binom = binom * (e - k) / (k + 1);
  }
  return IntPoly(std::move(v));
}

BigInt IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto& a = lhs.coeffs_;
  const auto& b = rhs.coeffs_;
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string IntPoly::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].get_str();
  }
  s += "]";
  return s;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly result{1};
  IntPoly base = p;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

IntPoly shift_var(const IntPoly& p, long d) {
  if (d == 0 || p.degree() < 1) return p;
  // Horner: q <- q * (x + d) + c_i, from the leading coefficient down.
  const auto& c = p.coeffs();
  const BigInt shift(d);
  std::vector<BigInt> q;
  q.reserve(c.size());
  for (std::size_t i = c.size(); i-- > 0;) {
    q.insert(q.begin(), BigInt(0));
    for (std::size_t j = 0; j + 1 < q.size(); ++j) q[j] += shift * q[j + 1];
    q[0] += c[i];
  }
  return IntPoly(std::move(q));
}

BigInt eval_int(const IntPoly& p, const BigInt& x) {
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

char basis_name(Basis b) noexcept {
  switch (b) {
    case Basis::S: return 'S';
    case Basis::T: return 'T';
    case Basis::L: return 'L';
  }
  return '?';
}

Basis parse_basis(const std::string& name) {
  if (name.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(name[0]))) {
      case 'S': return Basis::S;
      case 'T': return Basis::T;
      case 'L': return Basis::L;
      default: break;
    }
  }
  throw std::invalid_argument("unknown basis '" + name + "' (expected S, T or L)");
}

ClassPoly to_basis(const ClassPoly& c, Basis b) {
  // c.poly(X) with X = Y + (off_X - off_Y).
  return {shift_var(c.poly, basis_offset(c.basis) - basis_offset(b)), b};
}

}  // namespace melon
