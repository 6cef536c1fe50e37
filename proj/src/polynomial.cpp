#include "centspec/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "centspec/error.hpp"

namespace centspec {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(std::size_t d) {
  std::vector<mpz_class> c(d + 1, 0);
  c[d] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::linear_root(const mpz_class& r) {
  return IntPolynomial(std::vector<mpz_class>{-r, 1});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at_dyadic(const mpz_class& num, unsigned long shift) const {
  if (coeffs_.empty()) return 0;
  const long d = degree();
  mpz_class acc = coeffs_.back();
  mpz_class scale;
  for (long i = d - 1; i >= 0; --i) {
    mpz_mul_2exp(scale.get_mpz_t(), coeffs_[i].get_mpz_t(), shift * static_cast<unsigned long>(d - i));
    acc = acc * num + scale;
  }
  return sgn(acc);
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reflect(const mpz_class& c) const {
  // Horner in the substituted variable (c - x).
  const IntPolynomial shift(std::vector<mpz_class>{c, -1});
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * shift + constant(*it);
  return acc;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const mpz_class& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (coeffs_.empty()) return {};
  mpz_class g = content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<mpz_class> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& divisor) const {
  if (!divisor.is_monic()) throw Error("divmod_monic: divisor must be monic");
  if (degree() < divisor.degree()) return {IntPolynomial{}, *this};
  std::vector<mpz_class> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<mpz_class> quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const mpz_class q = rem[i];
    if (q == 0) continue;
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool IntPolynomial::divide_by_root(const mpz_class& r) {
  if (coeffs_.empty()) return false;
  // Synthetic division; the final carry is p(r).
  std::vector<mpz_class> quot(coeffs_.size() - 1);
  mpz_class carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    carry = carry * r + coeffs_[i];
    if (i > 0) quot[i - 1] = carry;
  }
  if (carry != 0) return false;
  coeffs_ = std::move(quot);
  trim();
  return true;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (mpz_class& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const mpz_class& c, const IntPolynomial& a) { return IntPolynomial::constant(c) * a; }

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

namespace {

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = a;
  const mpz_class lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    r = lead * r - r.leading() * (IntPolynomial::monomial(shift) * b);
  }
  return r;
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& monic) {
  auto [q, r] = a.divmod_monic(monic);
  if (!r.is_zero()) throw Error("exact_quotient: division is not exact");
  return q;
}

}  // namespace

IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? IntPolynomial{} : r.primitive();
  }
  return a.primitive();
}

std::vector<std::pair<IntPolynomial, unsigned>> square_free_decomposition(const IntPolynomial& monic) {
  if (!monic.is_monic()) throw Error("square_free_decomposition: polynomial must be monic");
  std::vector<std::pair<IntPolynomial, unsigned>> out;
  if (monic.degree() < 1) return out;
  // Yun's algorithm; every divisor below is monic since it divides a monic polynomial.
  const IntPolynomial df = monic.derivative();
  const IntPolynomial a0 = gcd(monic, df);
  IntPolynomial b = exact_quotient(monic, a0);
  IntPolynomial c = exact_quotient(df, a0);
  IntPolynomial d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const IntPolynomial a = d.is_zero() ? b : gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a, i);
  }
  return out;
}

mpz_class root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return 0;
  const long n = p.degree();
  const mpz_class lead = abs(p.leading());
  mpz_class best = 0;
  for (long i = 1; i <= n; ++i) {
    mpz_class ratio;
    mpz_cdiv_q(ratio.get_mpz_t(), mpz_class(abs(p.coeff(static_cast<std::size_t>(n - i)))).get_mpz_t(),
               lead.get_mpz_t());
    mpz_class root;
    const bool exact = mpz_root(root.get_mpz_t(), ratio.get_mpz_t(), static_cast<unsigned long>(i)) != 0;
    if (!exact) root += 1;
    if (root > best) best = root;
  }
  return 2 * best;
}

}  // namespace centspec
