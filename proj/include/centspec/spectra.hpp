#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centspec/graph.hpp"
#include "centspec/polynomial.hpp"

namespace centspec {

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian };

std::string_view kind_name(MatrixKind kind);
MatrixKind parse_kind(std::string_view name);
inline constexpr MatrixKind kAllKinds[] = {MatrixKind::Adjacency, MatrixKind::Laplacian,
                                           MatrixKind::SignlessLaplacian};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const;
  /// Simultaneous row/column relabelling: result(i, j) = (*this)(order[i], order[j]).
  IntMatrix permuted(std::span<const std::size_t> order) const;
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix matrix_of(const Graph& graph, MatrixKind kind);

/// Monic det(xI - m) with exact integer coefficients.
///
/// Computed by Hessenberg reduction modulo word-sized primes and Chinese
/// remaindering; enough primes are used to cover a rigorous coefficient
/// bound, so the lift is exact.
IntPolynomial char_poly(const IntMatrix& m);

/// Integer eigenvalues with multiplicities plus residual integer-rootless factors.
///
/// Residual factors are monic, square-free, pairwise coprime and of degree >= 2.
class ExactSpectrum {
 public:
  struct Residual {
    IntPolynomial factor;
    unsigned multiplicity = 0;
    bool operator==(const Residual&) const = default;
  };

  ExactSpectrum() = default;
  /// Integer eigenvalue list given as (value, multiplicity); zero multiplicities are dropped.
  ExactSpectrum(std::initializer_list<std::pair<long, long>> eigenvalues);

  void add_eigenvalue(const mpz_class& value, std::int64_t multiplicity);
  void add_residual(const IntPolynomial& factor, unsigned multiplicity);
  /// Adds every eigenvalue and residual of `other`.
  void merge(const ExactSpectrum& other);

  const std::map<mpz_class, std::int64_t>& eigenvalues() const { return eigenvalues_; }
  const std::vector<Residual>& residuals() const { return residuals_; }
  std::int64_t multiplicity(const mpz_class& value) const;

  /// Integer multiplicities plus residual degree times multiplicity.
  std::int64_t dimension() const;
  bool is_integral() const { return residuals_.empty(); }

  /// Sum of the k-th powers of all eigenvalues (exact; Newton identities on residuals).
  mpz_class power_sum(unsigned k) const;

  /// Product of (x - mu)^m over eigenvalues and residual^m over residuals.
  IntPolynomial to_polynomial() const;

  /// Canonical form: residuals multiplied out, re-split into integer roots and a
  /// square-free decomposition, sorted.
  ExactSpectrum normalized() const;

  /// Multiset equality of the normalized forms.
  bool operator==(const ExactSpectrum& other) const;

  /// e.g. "{-3:1, 0:4} + (x^2 - 3*x - 6)^1"
  std::string to_string() const;

 private:
  std::map<mpz_class, std::int64_t> eigenvalues_;
  std::vector<Residual> residuals_;
};

/// Splits off every integer root (0 from trailing zeros, others from divisors of
/// the trailing coefficient within the root bound); the rest is square-free decomposed.
ExactSpectrum extract_spectrum(const IntPolynomial& p);

inline bool is_integral(const ExactSpectrum& s) { return s.is_integral(); }

/// Laplacian spectrum of the complement of a graph on n vertices: removes one 0,
/// maps mu -> n - mu, and adds 0 back. Throws MissingZero when 0 is absent.
ExactSpectrum complement_L_spectrum(const ExactSpectrum& laplacian, std::int64_t n);

enum class PartitionVariant { CliqueUnion, Multipartite };

/// Quotient of the chosen matrix over the part classes, in the given part order.
IntMatrix quotient_matrix(std::span<const std::int64_t> parts, MatrixKind kind, PartitionVariant variant);
IntMatrix quotient_matrix(const CliqueDecomposition& parts, MatrixKind kind, PartitionVariant variant);

/// Quotient of `m` over `cells` if the partition is equitable (constant row sums
/// into every cell), std::nullopt otherwise.
std::optional<IntMatrix> equitable_quotient(const IntMatrix& m, const std::vector<std::vector<std::size_t>>& cells);

/// Distinct real roots of a monic polynomial, ascending, to within 1e-12.
/// Display only; never used for verification.
std::vector<double> approx_roots(const IntPolynomial& p);

/// Sturm-based count of distinct real roots of a square-free polynomial in (lo, hi],
/// with both endpoints given as num / 2^shift.
std::size_t count_real_roots(const std::vector<IntPolynomial>& sturm, const mpz_class& lo,
                             const mpz_class& hi, unsigned long shift);
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& square_free);

}  // namespace centspec
