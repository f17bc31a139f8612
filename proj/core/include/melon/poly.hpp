#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace melon {

using BigInt = mpz_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending order of degree and kept canonical:
/// the leading entry is never zero, and the zero polynomial is the empty
/// sequence. Every operation returns a canonical value.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  /// c * x^degree
  static IntPoly monomial(const BigInt& c, std::size_t degree);
  /// (x + a)^e
  static IntPoly binomial_power(long a, unsigned e);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^k; zero past the degree.
  BigInt coeff(std::size_t k) const;
  const BigInt& leading() const { return coeffs_.back(); }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly p, const BigInt& c) { return p *= c; }
  friend IntPoly operator*(const BigInt& c, IntPoly p) { return p *= c; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// "[c0, c1, ..., cn]", ascending by degree; "[]" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly pow(const IntPoly& p, unsigned e);

/// Returns q with q(x) = p(x + d), by repeated synthetic substitution.
IntPoly shift_var(const IntPoly& p, long d);

/// Exact value p(x).
BigInt eval_int(const IntPoly& p, const BigInt& x);

/// Variable a class polynomial is written in: S, T = S + 1 or L = S + 2.
enum class Basis { S, T, L };

/// Offset of the basis variable relative to S.
constexpr long basis_offset(Basis b) noexcept {
  switch (b) {
    case Basis::S: return 0;
    case Basis::T: return 1;
    case Basis::L: return 2;
  }
  return 0;
}

char basis_name(Basis b) noexcept;
/// Accepts "S", "T", "L" (either case); throws std::invalid_argument otherwise.
Basis parse_basis(const std::string& name);

/// A polynomial together with the class variable it is expressed in.
struct ClassPoly {
  IntPoly poly;
  Basis basis = Basis::S;

  friend bool operator==(const ClassPoly&, const ClassPoly&) = default;
};

/// Re-express the same class in another basis.
ClassPoly to_basis(const ClassPoly& c, Basis b);

}  // namespace melon
