#include "centspec/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "centspec/error.hpp"

namespace centspec {

namespace {

std::int64_t pow2(std::int64_t e) {
  if (e < 0 || e > 62) throw InvalidParams("exponent out of range");
  return std::int64_t{1} << e;
}

mpz_class mpz_pow2(std::int64_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// Size m of the non-trivial clique in the K_m + K_1 centralizer graph of the
/// quaternion, dihedral, quasidihedral and metacyclic families.
std::int64_t two_clique_parameter(const GroupSpec& spec) {
  const std::int64_t p0 = spec.params[0];
  switch (spec.family) {
    case Family::GeneralizedQuaternion: return p0;
    case Family::Dihedral:
    case Family::Metacyclic: return p0 % 2 == 1 ? p0 : p0 / 2;
    case Family::Quasidihedral: return pow2(p0 - 2);
    case Family::ProjectiveSpecialLinear: break;
  }
  throw InvalidParams("two_clique_parameter: not a two-clique family");
}

/// Displays for K_m + K_1.
ExactSpectrum two_clique_display(std::int64_t m, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return {{-1, m - 1}, {0, 1}, {m - 1, 1}};
    case MatrixKind::Laplacian: return {{0, 2}, {m, m - 1}};
    case MatrixKind::SignlessLaplacian: return {{0, 1}, {m - 2, m - 1}, {2 * (m - 1), 1}};
  }
  return {};
}

ExactSpectrum psl_centralizer_spectrum(std::int64_t k, MatrixKind kind) {
  const std::int64_t q = pow2(k);
  const std::int64_t half = pow2(k - 1);
  const std::int64_t big = half * (q + 1);    // 2^{k-1}(2^k+1)
  const std::int64_t small = half * (q - 1);  // 2^{k-1}(2^k-1)
  switch (kind) {
    case MatrixKind::Adjacency:
      return {{-1, q * q + q - 2}, {q, 1}, {big - 1, 1}, {small - 1, 1}};
    case MatrixKind::Laplacian:
      return {{0, 3}, {q + 1, q}, {big, big - 1}, {small, small - 1}};
    case MatrixKind::SignlessLaplacian:
      return {{q - 1, q},
              {big - 2, big - 1},
              {small - 2, small - 1},
              {(q + 1) * (q - 2), 1},
              {q * q + q - 2, 1},
              {2 * q, 1}};
  }
  return {};
}

ExactSpectrum psl_cocentralizer_spectrum(std::int64_t k, MatrixKind kind) {
  const std::int64_t q = pow2(k);
  const std::int64_t half = pow2(k - 1);
  const std::int64_t big = half * (q + 1);
  const std::int64_t small = half * (q - 1);
  const std::int64_t mid_degree = half + q * q / 2 + 1;       // 2^{k-1} + 2^{2k-1} + 1
  const std::int64_t high_degree = 3 * half + q * q / 2 + 1;  // 3*2^{k-1} + 2^{2k-1} + 1
  switch (kind) {
    case MatrixKind::Adjacency: return extract_spectrum(psl_cocentralizer_adjacency_charpoly(k));
    case MatrixKind::Laplacian:
      return {{0, 1}, {q * q, q}, {mid_degree, big - 1}, {high_degree, small - 1}, {q * q + q + 1, 2}};
    case MatrixKind::SignlessLaplacian: {
      ExactSpectrum out{{q * q, q}, {mid_degree, big - 1}, {high_degree, small - 1}};
      out.merge(extract_spectrum(char_poly(psl_cocentralizer_quotient(k))));
      return out;
    }
  }
  return {};
}

/// Primitive integer basis of the rational null space of a small matrix.
std::vector<std::vector<std::int64_t>> integer_nullspace(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m(i, j));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const mpq_class lead = a[r][c];
    for (mpq_class& x : a[r]) x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    mpz_class den = 1;
    for (const mpq_class& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> ints(cols);
    mpz_class g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      ints[j] = v[j].get_num() * (den / v[j].get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[j].get_mpz_t());
    }
    std::vector<std::int64_t> out(cols);
    for (std::size_t j = 0; j < cols; ++j) out[j] = mpz_class(ints[j] / g).get_si();
    basis.push_back(std::move(out));
  }
  return basis;
}

/// Vectors -e_{start} + e_{start+i}, i = 1..size-1, in dimension n.
std::vector<std::vector<std::int64_t>> block_differences(std::size_t n, std::size_t start, std::size_t size) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 1; i < size; ++i) {
    std::vector<std::int64_t> v(n, 0);
    v[start] = -1;
    v[start + i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::int64_t> block_indicator(std::size_t n, std::size_t start, std::size_t size) {
  std::vector<std::int64_t> v(n, 0);
  std::fill(v.begin() + static_cast<std::ptrdiff_t>(start), v.begin() + static_cast<std::ptrdiff_t>(start + size), 1);
  return v;
}

}  // namespace

bool is_perfect_square(std::int64_t n) { return n >= 0 && isqrt(n) * isqrt(n) == n; }

ExactSpectrum union_cliques_spectrum(const CliqueDecomposition& parts, MatrixKind kind) {
  ExactSpectrum out;
  const auto m = static_cast<std::int64_t>(parts.size());
  switch (kind) {
    case MatrixKind::Adjacency:
      out.add_eigenvalue(-1, parts.total() - m);
      for (std::int64_t p : parts.parts()) out.add_eigenvalue(p - 1, 1);
      break;
    case MatrixKind::Laplacian:
      out.add_eigenvalue(0, m);
      for (std::int64_t p : parts.parts()) out.add_eigenvalue(p, p - 1);
      break;
    case MatrixKind::SignlessLaplacian:
      for (std::int64_t p : parts.parts()) {
        out.add_eigenvalue(2 * (p - 1), 1);
        out.add_eigenvalue(p - 2, p - 1);
      }
      break;
  }
  return out;
}

IntPolynomial multipartite_adj_charpoly(const CliqueDecomposition& parts) {
  const auto& p = parts.parts();
  const auto shifted = [](std::int64_t c) { return IntPolynomial(std::vector<mpz_class>{mpz_class(static_cast<long>(c)), 1}); };
  IntPolynomial product = IntPolynomial::constant(1);
  for (std::int64_t c : p) product = product * shifted(c);
  IntPolynomial sum;
  for (std::size_t i = 0; i < p.size(); ++i) {
    IntPolynomial term = IntPolynomial::constant(mpz_class(static_cast<long>(p[i])));
    for (std::size_t j = 0; j < p.size(); ++j)
      if (j != i) term = term * shifted(p[j]);
    sum = sum + term;
  }
  const auto power = static_cast<std::size_t>(parts.total() - static_cast<std::int64_t>(p.size()));
  return IntPolynomial::monomial(power) * (product - sum);
}

ExactSpectrum star_spectrum(std::int64_t n, MatrixKind kind) {
  if (n < 1) throw InvalidParams("star_spectrum: n >= 1");
  if (kind != MatrixKind::Adjacency) return {{0, 1}, {1, n - 1}, {n + 1, 1}};
  ExactSpectrum out{{0, n - 1}};
  if (is_perfect_square(n)) {
    out.add_eigenvalue(isqrt(n), 1);
    out.add_eigenvalue(-isqrt(n), 1);
  } else {
    out.add_residual(IntPolynomial(std::vector<mpz_class>{-mpz_class(static_cast<long>(n)), 0, 1}), 1);
  }
  return out;
}

std::array<std::int64_t, 3> psl_block_sizes(std::int64_t k) {
  if (k < 1) throw InvalidParams("PSL closed forms require k >= 1");
  const std::int64_t q = pow2(k);
  return {q + 1, q / 2 * (q + 1), q / 2 * (q - 1)};
}

IntMatrix psl_cocentralizer_quotient(std::int64_t k) {
  if (k < 1) throw InvalidParams("PSL closed forms require k >= 1");
  const std::int64_t q = pow2(k);
  const std::int64_t half = pow2(k - 1);
  const std::int64_t q2 = q * q;
  return IntMatrix{{q2, half * (q + 1), half * (q - 1)},
                   {q + 1, half + q2 / 2 + 1, half * (q - 1)},
                   {q + 1, half * (q + 1), 3 * half + q2 / 2 + 1}};
}

IntPolynomial psl_cocentralizer_cubic(std::int64_t k) {
  if (k < 1) throw InvalidParams("PSL closed forms require k >= 1");
  const mpz_class linear = mpz_pow2(4 * k - 2) + 3 * mpz_pow2(2 * k - 2) + mpz_pow2(3 * k);
  const mpz_class constant = -mpz_pow2(5 * k - 1) - mpz_pow2(4 * k - 1) + mpz_pow2(3 * k - 1) + mpz_pow2(2 * k - 1);
  return IntPolynomial(std::vector<mpz_class>{constant, -linear, 0, 1});
}

IntPolynomial psl_cocentralizer_adjacency_charpoly(std::int64_t k) {
  const std::int64_t q = pow2(k);
  return IntPolynomial::monomial(static_cast<std::size_t>(q + q * q - 2)) * psl_cocentralizer_cubic(k);
}

ExactSpectrum family_spectrum(const GroupSpec& spec, GraphVariant variant, MatrixKind kind) {
  spec.validate();
  ExactSpectrum out;
  if (spec.family == Family::ProjectiveSpecialLinear) {
    const std::int64_t k = spec.params[0];
    out = variant == GraphVariant::Centralizer ? psl_centralizer_spectrum(k, kind) : psl_cocentralizer_spectrum(k, kind);
  } else {
    const std::int64_t m = two_clique_parameter(spec);
    out = variant == GraphVariant::Centralizer ? two_clique_display(m, kind) : star_spectrum(m, kind);
  }
  return out.normalized();
}

Eigenbasis psl_eigenbasis(std::int64_t k, GraphVariant variant) {
  const auto sizes = psl_block_sizes(k);
  const auto n = static_cast<std::size_t>(sizes[0] + sizes[1] + sizes[2]);
  const std::array<std::size_t, 3> start{0, static_cast<std::size_t>(sizes[0]),
                                         static_cast<std::size_t>(sizes[0] + sizes[1])};
  const std::int64_t q = pow2(k);
  const std::int64_t half = pow2(k - 1);
  Eigenbasis out;
  out.dimension = n;

  std::array<std::int64_t, 3> difference_values{};
  if (variant == GraphVariant::Centralizer) {
    difference_values = {q - 1, half * (q + 1) - 2, half * (q - 1) - 2};
  } else {
    difference_values = {q * q, half + q * q / 2 + 1, 3 * half + q * q / 2 + 1};
  }
  for (std::size_t b = 0; b < 3; ++b) {
    const auto size = static_cast<std::size_t>(sizes[b]);
    out.families.push_back({"differences[block " + std::to_string(b + 1) + "]", difference_values[b],
                            block_differences(n, start[b], size), sizes[b] - 1});
  }

  if (variant == GraphVariant::Centralizer) {
    const std::array<std::int64_t, 3> indicator_values{2 * q, q * q + q - 2, (q + 1) * (q - 2)};
    for (std::size_t b = 0; b < 3; ++b) {
      out.families.push_back({"indicator[block " + std::to_string(b + 1) + "]", indicator_values[b],
                              {block_indicator(n, start[b], static_cast<std::size_t>(sizes[b]))}, 1});
    }
    return out;
  }

  const IntMatrix quotient = psl_cocentralizer_quotient(k);
  const ExactSpectrum quotient_spectrum = extract_spectrum(char_poly(quotient));
  if (!quotient_spectrum.is_integral()) {
    InvariantBlock block;
    for (std::size_t b = 0; b < 3; ++b) block.basis.push_back(block_indicator(n, start[b], static_cast<std::size_t>(sizes[b])));
    block.action = quotient;
    out.block = std::move(block);
    return out;
  }
  for (const auto& [value, mult] : quotient_spectrum.eigenvalues()) {
    IntMatrix shifted = quotient;
    for (std::size_t i = 0; i < 3; ++i) shifted(i, i) -= value.get_si();
    EigenvectorFamily family{"quotient[" + value.get_str() + "]", value.get_si(), {}, mult};
    for (const auto& coeffs : integer_nullspace(shifted)) {
      std::vector<std::int64_t> v(n, 0);
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t i = 0; i < static_cast<std::size_t>(sizes[b]); ++i) v[start[b] + i] = coeffs[b];
      family.vectors.push_back(std::move(v));
    }
    out.families.push_back(std::move(family));
  }
  return out;
}

std::string_view claim_kind_name(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::Always: return "always";
    case ClaimKind::Never: return "never";
    case ClaimKind::Condition: return "condition";
  }
  return "unknown";
}

IntegralityClaim integrality_claim(const GroupSpec& spec, GraphVariant variant, MatrixKind kind) {
  spec.validate();
  if (variant == GraphVariant::Centralizer || kind != MatrixKind::Adjacency) {
    if (spec.family == Family::ProjectiveSpecialLinear && variant == GraphVariant::CoCentralizer &&
        kind == MatrixKind::SignlessLaplacian) {
      const bool holds = extract_spectrum(char_poly(psl_cocentralizer_quotient(spec.params[0]))).is_integral();
      return {ClaimKind::Condition, "the 3x3 quotient matrix has integral spectrum", holds};
    }
    return {ClaimKind::Always, "", true};
  }
  const std::int64_t p0 = spec.params[0];
  switch (spec.family) {
    case Family::GeneralizedQuaternion:
      return {ClaimKind::Condition, "n is a perfect square", is_perfect_square(p0)};
    case Family::Dihedral:
      return {ClaimKind::Condition, "n is a perfect square (n odd); n/2 is a perfect square (n even)",
              is_perfect_square(two_clique_parameter(spec))};
    case Family::Metacyclic:
      return {ClaimKind::Condition, "p is a perfect square (p odd); p/2 is a perfect square (p even)",
              is_perfect_square(two_clique_parameter(spec))};
    case Family::Quasidihedral:
      return {ClaimKind::Condition, "2^(n-2) is a perfect square", is_perfect_square(two_clique_parameter(spec))};
    case Family::ProjectiveSpecialLinear:
      return {ClaimKind::Condition, "the cubic factor has three integer roots",
              extract_spectrum(psl_cocentralizer_cubic(p0)).is_integral()};
  }
  throw InvalidParams("unknown family");
}

}  // namespace centspec
