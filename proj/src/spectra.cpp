#include "centspec/spectra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "centspec/error.hpp"

namespace centspec {

std::string_view kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::SignlessLaplacian: return "signless";
  }
  return "unknown";
}

MatrixKind parse_kind(std::string_view name) {
  if (name == "adjacency" || name == "A") return MatrixKind::Adjacency;
  if (name == "laplacian" || name == "L") return MatrixKind::Laplacian;
  if (name == "signless" || name == "signless-laplacian" || name == "Q") return MatrixKind::SignlessLaplacian;
  throw InvalidParams("unknown matrix kind '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::permuted(std::span<const std::size_t> order) const {
  if (!is_square() || order.size() != rows_) throw DimensionMismatch("permutation size mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(order[i], order[j]);
  return out;
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector dimension mismatch");
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

IntMatrix matrix_of(const Graph& graph, MatrixKind kind) {
  const std::size_t n = graph.order();
  IntMatrix out(n, n);
  const std::int64_t sign = kind == MatrixKind::Laplacian ? -1 : 1;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v)
      if (graph.adjacent(u, v)) out(u, v) = sign;
    if (kind != MatrixKind::Adjacency) out(u, u) = static_cast<std::int64_t>(graph.degree(u));
  }
  return out;
}

// ---------------------------------------------------------------------------
// ExactSpectrum

ExactSpectrum::ExactSpectrum(std::initializer_list<std::pair<long, long>> eigenvalues) {
  for (const auto& [value, mult] : eigenvalues) add_eigenvalue(mpz_class(value), mult);
}

void ExactSpectrum::add_eigenvalue(const mpz_class& value, std::int64_t multiplicity) {
  if (multiplicity < 0) throw InvalidParams("negative eigenvalue multiplicity");
  if (multiplicity == 0) return;
  eigenvalues_[value] += multiplicity;
}

void ExactSpectrum::add_residual(const IntPolynomial& factor, unsigned multiplicity) {
  if (multiplicity == 0) return;
  if (!factor.is_monic() || factor.degree() < 1) throw InvalidParams("residual factors must be monic and non-constant");
  for (Residual& r : residuals_) {
    if (r.factor == factor) {
      r.multiplicity += multiplicity;
      return;
    }
  }
  residuals_.push_back({factor, multiplicity});
}

void ExactSpectrum::merge(const ExactSpectrum& other) {
  for (const auto& [value, mult] : other.eigenvalues_) add_eigenvalue(value, mult);
  for (const Residual& r : other.residuals_) add_residual(r.factor, r.multiplicity);
}

std::int64_t ExactSpectrum::multiplicity(const mpz_class& value) const {
  const auto it = eigenvalues_.find(value);
  return it == eigenvalues_.end() ? 0 : it->second;
}

std::int64_t ExactSpectrum::dimension() const {
  std::int64_t total = 0;
  for (const auto& [value, mult] : eigenvalues_) total += mult;
  for (const Residual& r : residuals_) total += r.factor.degree() * static_cast<std::int64_t>(r.multiplicity);
  return total;
}

namespace {

/// Power sums p_1..p_k of the roots of a monic polynomial (Newton's identities).
std::vector<mpz_class> root_power_sums(const IntPolynomial& f, unsigned k) {
  const long d = f.degree();
  // e-style coefficients: f = x^d + a_1 x^{d-1} + ... + a_d
  auto a = [&](long i) { return i <= d ? f.coeff(static_cast<std::size_t>(d - i)) : mpz_class(0); };
  std::vector<mpz_class> p(k + 1, 0);
  p[0] = d;
  for (long m = 1; m <= static_cast<long>(k); ++m) {
    mpz_class acc = m * a(m);
    for (long i = 1; i < m; ++i) acc += a(i) * p[m - i];
    p[m] = -acc;
  }
  return p;
}

}  // namespace

mpz_class ExactSpectrum::power_sum(unsigned k) const {
  mpz_class total = 0;
  for (const auto& [value, mult] : eigenvalues_) {
    mpz_class term;
    mpz_pow_ui(term.get_mpz_t(), value.get_mpz_t(), k);
    total += term * static_cast<long>(mult);
  }
  for (const Residual& r : residuals_) {
    total += root_power_sums(r.factor, k)[k] * static_cast<unsigned long>(r.multiplicity);
  }
  return total;
}

IntPolynomial ExactSpectrum::to_polynomial() const {
  IntPolynomial out = IntPolynomial::constant(1);
  for (const auto& [value, mult] : eigenvalues_) {
    out = out * IntPolynomial::linear_root(value).pow(static_cast<unsigned>(mult));
  }
  for (const Residual& r : residuals_) out = out * r.factor.pow(r.multiplicity);
  return out;
}

ExactSpectrum ExactSpectrum::normalized() const {
  ExactSpectrum out;
  for (const auto& [value, mult] : eigenvalues_) out.add_eigenvalue(value, mult);
  if (residuals_.empty()) return out;
  IntPolynomial product = IntPolynomial::constant(1);
  for (const Residual& r : residuals_) product = product * r.factor.pow(r.multiplicity);
  out.merge(extract_spectrum(product));
  return out;
}

bool ExactSpectrum::operator==(const ExactSpectrum& other) const {
  const ExactSpectrum a = normalized();
  const ExactSpectrum b = other.normalized();
  return a.eigenvalues_ == b.eigenvalues_ && a.residuals_ == b.residuals_;
}

std::string ExactSpectrum::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [value, mult] : eigenvalues_) {
    out << (first ? "" : ", ") << value.get_str() << ':' << mult;
    first = false;
  }
  out << '}';
  for (const Residual& r : residuals_) out << " + (" << r.factor.to_string() << ")^" << r.multiplicity;
  return out.str();
}

namespace {

bool residual_less(const ExactSpectrum::Residual& a, const ExactSpectrum::Residual& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& ca = a.factor.coefficients();
  const auto& cb = b.factor.coefficients();
  for (std::size_t i = ca.size(); i-- > 0;) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return a.multiplicity < b.multiplicity;
}

constexpr unsigned long kScanLimit = 1UL << 24;

/// Real roots of a square-free polynomial isolated in disjoint dyadic intervals
/// (lo/2^shift, hi/2^shift], each containing exactly one root.
struct Isolated {
  mpz_class lo, hi;
  unsigned long shift;
};

std::vector<Isolated> isolate_real_roots(const IntPolynomial& sqfree) {
  std::vector<Isolated> out;
  if (sqfree.degree() < 1) return out;
  const std::vector<IntPolynomial> sturm = sturm_sequence(sqfree);
  const mpz_class bound = root_bound(sqfree) + 1;
  std::vector<Isolated> stack{{-bound, bound, 0}};
  while (!stack.empty()) {
    Isolated cur = stack.back();
    stack.pop_back();
    const std::size_t count = count_real_roots(sturm, cur.lo, cur.hi, cur.shift);
    if (count == 0) continue;
    if (count == 1) {
      out.push_back(cur);
      continue;
    }
    const mpz_class mid = cur.lo + cur.hi;
    const unsigned long s = cur.shift + 1;
    stack.push_back({mid, 2 * cur.hi, s});
    stack.push_back({2 * cur.lo, mid, s});
  }
  return out;
}

/// Narrows an isolating interval until hi - lo <= 2^-target_bits, keeping the root in (lo, hi].
void refine(const IntPolynomial& sqfree, Isolated& iv, unsigned long target_bits) {
  // Real width is (hi - lo) / 2^shift; stop once it is below 2^-target_bits.
  while (mpz_sizeinbase(mpz_class(iv.hi - iv.lo).get_mpz_t(), 2) + target_bits > iv.shift) {
    const int s_hi = sqfree.sign_at_dyadic(iv.hi, iv.shift);
    const mpz_class mid = iv.lo + iv.hi;
    const unsigned long s = iv.shift + 1;
    if (s_hi == 0) {
      iv = {2 * iv.hi - 1, 2 * iv.hi, s};
      continue;
    }
    const int s_mid = sqfree.sign_at_dyadic(mid, s);
    if (s_mid == 0) {
      iv = {mid - 1, mid, s};
    } else if (s_mid != s_hi) {
      iv = {mid, 2 * iv.hi, s};
    } else {
      iv = {2 * iv.lo, mid, s};
    }
  }
}

IntPolynomial square_free_part(const IntPolynomial& monic) {
  const IntPolynomial g = gcd(monic, monic.derivative());
  return monic.divmod_monic(g).first;
}

}  // namespace

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& square_free) {
  std::vector<IntPolynomial> seq{square_free, square_free.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    const IntPolynomial& a = seq[seq.size() - 2];
    const IntPolynomial& b = seq.back();
    // Pseudo-remainder with a positive multiplier keeps the Sturm signs.
    IntPolynomial r = a;
    const mpz_class lead = abs(b.leading());
    const int lead_sign = sgn(b.leading());
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
      r = lead * r - (lead_sign * r.leading()) * (IntPolynomial::monomial(shift) * b);
    }
    if (r.is_zero()) break;
    const mpz_class c = r.content();
    std::vector<mpz_class> coeffs = r.coefficients();
    for (mpz_class& x : coeffs) x = -x / c;
    seq.emplace_back(std::move(coeffs));
  }
  return seq;
}

std::size_t count_real_roots(const std::vector<IntPolynomial>& sturm, const mpz_class& lo, const mpz_class& hi,
                             unsigned long shift) {
  const auto variations = [&](const mpz_class& x) {
    std::size_t changes = 0;
    int last = 0;
    for (const IntPolynomial& p : sturm) {
      const int s = p.sign_at_dyadic(x, shift);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  const std::size_t a = variations(lo);
  const std::size_t b = variations(hi);
  return a > b ? a - b : 0;
}

ExactSpectrum extract_spectrum(const IntPolynomial& p) {
  if (!p.is_monic()) throw InvalidParams("extract_spectrum: polynomial must be monic");
  ExactSpectrum out;
  std::vector<mpz_class> coeffs = p.coefficients();
  std::size_t zeros = 0;
  while (coeffs[zeros] == 0) ++zeros;
  out.add_eigenvalue(0, static_cast<std::int64_t>(zeros));
  IntPolynomial f(std::vector<mpz_class>(coeffs.begin() + static_cast<std::ptrdiff_t>(zeros), coeffs.end()));
  if (f.degree() < 1) return out;

  const mpz_class constant = abs(f.coeff(0));
  const auto strip = [&](const mpz_class& r) {
    std::int64_t mult = 0;
    while (f.degree() >= 1 && f.divide_by_root(r)) ++mult;
    out.add_eigenvalue(r, mult);
  };
  mpz_class limit = root_bound(f);
  if (constant < limit) limit = constant;
  if (limit <= kScanLimit) {
    // Rational root theorem: candidates are divisors of the constant term within the root bound.
    const unsigned long top = limit.get_ui();
    for (unsigned long r = 1; r <= top && f.degree() >= 1; ++r) {
      if (mpz_divisible_ui_p(constant.get_mpz_t(), r) == 0) continue;
      strip(mpz_class(r));
      strip(-mpz_class(r));
    }
  } else {
    // Huge root bound: locate real roots first, then test the neighbouring integers.
    for (Isolated iv : isolate_real_roots(square_free_part(f))) {
      refine(square_free_part(f), iv, 1);
      mpz_class lo;
      mpz_fdiv_q_2exp(lo.get_mpz_t(), iv.lo.get_mpz_t(), iv.shift);
      for (mpz_class r = lo; r <= lo + 2; ++r) {
        if (r != 0 && mpz_divisible_p(constant.get_mpz_t(), mpz_class(abs(r)).get_mpz_t()) != 0) strip(r);
      }
    }
  }
  if (f.degree() >= 1) {
    std::vector<ExactSpectrum::Residual> parts;
    for (auto& [factor, mult] : square_free_decomposition(f)) parts.push_back({factor, mult});
    std::sort(parts.begin(), parts.end(), residual_less);
    for (const auto& r : parts) out.add_residual(r.factor, r.multiplicity);
  }
  return out;
}

ExactSpectrum complement_L_spectrum(const ExactSpectrum& laplacian, std::int64_t n) {
  if (laplacian.multiplicity(0) == 0) throw MissingZero("Laplacian spectrum has no zero eigenvalue");
  ExactSpectrum out;
  out.add_eigenvalue(0, 1);
  const mpz_class shift(static_cast<long>(n));
  for (const auto& [value, mult] : laplacian.eigenvalues()) {
    const std::int64_t m = value == 0 ? mult - 1 : mult;
    out.add_eigenvalue(shift - value, m);
  }
  for (const auto& r : laplacian.residuals()) {
    // Roots mu of f become n - mu, i.e. roots of f(n - x); restore monic sign.
    IntPolynomial g = r.factor.reflect(shift);
    if (g.leading() < 0) g = -g;
    out.add_residual(g, r.multiplicity);
  }
  return out.normalized();
}

IntMatrix quotient_matrix(std::span<const std::int64_t> parts, MatrixKind kind, PartitionVariant variant) {
  const std::size_t m = parts.size();
  const std::int64_t total = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
  IntMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t degree = variant == PartitionVariant::CliqueUnion ? parts[i] - 1 : total - parts[i];
    for (std::size_t j = 0; j < m; ++j) {
      // Neighbours a vertex of part i has in part j.
      std::int64_t neighbours = 0;
      if (variant == PartitionVariant::CliqueUnion) {
        neighbours = i == j ? parts[i] - 1 : 0;
      } else {
        neighbours = i == j ? 0 : parts[j];
      }
      switch (kind) {
        case MatrixKind::Adjacency: out(i, j) = neighbours; break;
        case MatrixKind::Laplacian: out(i, j) = (i == j ? degree : 0) - neighbours; break;
        case MatrixKind::SignlessLaplacian: out(i, j) = (i == j ? degree : 0) + neighbours; break;
      }
    }
  }
  return out;
}

IntMatrix quotient_matrix(const CliqueDecomposition& parts, MatrixKind kind, PartitionVariant variant) {
  return quotient_matrix(std::span<const std::int64_t>(parts.parts()), kind, variant);
}

std::optional<IntMatrix> equitable_quotient(const IntMatrix& m, const std::vector<std::vector<std::size_t>>& cells) {
  const std::size_t k = cells.size();
  IntMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (cells[i].empty()) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) {
      std::optional<std::int64_t> common;
      for (std::size_t u : cells[i]) {
        std::int64_t sum = 0;
        for (std::size_t v : cells[j]) sum += m(u, v);
        if (common && *common != sum) return std::nullopt;
        common = sum;
      }
      out(i, j) = *common;
    }
  }
  return out;
}

std::vector<double> approx_roots(const IntPolynomial& p) {
  if (!p.is_monic()) throw InvalidParams("approx_roots: polynomial must be monic");
  const IntPolynomial sqfree = square_free_part(p);
  std::vector<double> out;
  for (Isolated iv : isolate_real_roots(sqfree)) {
    refine(sqfree, iv, 48);
    const mpz_class sum = iv.lo + iv.hi;
    mpq_class mid(sum);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, iv.shift + 1);
    mid /= den;
    out.push_back(mid.get_d());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace centspec
