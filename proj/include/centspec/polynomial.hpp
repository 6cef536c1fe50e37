#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace centspec {

/// Dense univariate polynomial over Z; coefficients stored constant term first
/// and kept without trailing zeros (the zero polynomial has no coefficients).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  /// x^d
  static IntPolynomial monomial(std::size_t d);
  /// x - r
  static IntPolynomial linear_root(const mpz_class& r);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
  const mpz_class& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  mpz_class evaluate(const mpz_class& x) const;
  /// Sign of p(num / 2^shift), evaluated exactly.
  int sign_at_dyadic(const mpz_class& num, unsigned long shift) const;

  IntPolynomial derivative() const;
  /// p(c - x)
  IntPolynomial reflect(const mpz_class& c) const;
  mpz_class content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive() const;

  /// Quotient and remainder for a monic divisor.
  std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& divisor) const;
  /// Exact division by (x - r); returns false (and leaves *this) if r is not a root.
  bool divide_by_root(const mpz_class& r);

  IntPolynomial pow(unsigned e) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& c, const IntPolynomial& a);
  IntPolynomial operator-() const;

  bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

  /// e.g. "x^3 - 15*x - 18"
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Primitive gcd with positive leading coefficient (monic when the inputs are monic).
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

/// Square-free decomposition of a monic polynomial: pairs (factor, multiplicity)
/// with monic square-free, pairwise coprime factors of positive degree.
std::vector<std::pair<IntPolynomial, unsigned>> square_free_decomposition(const IntPolynomial& monic);

/// Upper bound on the absolute value of every complex root (Fujiwara).
mpz_class root_bound(const IntPolynomial& p);

}  // namespace centspec
