#include "centspec/spectra.hpp"

#include <cstdint>

#include "centspec/error.hpp"

namespace centspec {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  for (a %= m; e != 0; e >>= 1) {
    if (e & 1U) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mul_mod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

constexpr unsigned kPrimeBits = 62;

/// Primes below 2^62 in descending order, enough for `count`.
std::vector<u64> modular_primes(std::size_t count) {
  static const std::vector<u64> cached = [] {
    std::vector<u64> out;
    for (u64 c = (u64{1} << kPrimeBits) - 1; out.size() < 64; c -= 2) {
      if (is_prime_u64(c)) out.push_back(c);
    }
    return out;
  }();
  std::vector<u64> out(cached.begin(), cached.begin() + std::min(count, cached.size()));
  for (u64 c = out.back() - 2; out.size() < count; c -= 2) {
    if (is_prime_u64(c)) out.push_back(c);
  }
  return out;
}

/// Montgomery arithmetic modulo an odd prime below 2^62 with R = 2^64.
class Montgomery {
 public:
  explicit Montgomery(u64 p) : p_(p) {
    u64 inv = 1;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;  // Newton iteration for p^{-1} mod 2^64
    neg_inv_ = ~inv + 1;
    r2_ = static_cast<u64>((static_cast<u128>(1) << 64) % p);
    r2_ = mul_mod(r2_, r2_, p);
  }

  u64 modulus() const { return p_; }
  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u64 r = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 to(std::int64_t v) const {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    const u64 plain = r < 0 ? static_cast<u64>(r + static_cast<std::int64_t>(p_)) : static_cast<u64>(r);
    return mul(plain, r2_);
  }
  u64 from(u64 a) const { return reduce(a); }
  u64 inverse(u64 a) const { return to(static_cast<std::int64_t>(pow_mod(from(a), p_ - 2, p_))); }
  u64 one() const { return to(1); }

 private:
  u64 p_, neg_inv_, r2_;
};

/// Characteristic polynomial coefficients (constant first) modulo the prime.
std::vector<u64> char_poly_mod(const IntMatrix& m, const Montgomery& ar) {
  const std::size_t n = m.rows();
  std::vector<u64> h(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i * n + j] = ar.to(m(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t target = col + 1;
    std::size_t pivot = target;
    while (pivot < n && at(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != target) {
      for (std::size_t k = 0; k < n; ++k) std::swap(at(pivot, k), at(target, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(at(k, pivot), at(k, target));
    }
    const u64 inv = ar.inverse(at(target, col));
    for (std::size_t j = target + 1; j < n; ++j) {
      if (at(j, col) == 0) continue;
      const u64 u = ar.mul(at(j, col), inv);
      for (std::size_t k = col; k < n; ++k) at(j, k) = ar.sub(at(j, k), ar.mul(u, at(target, k)));
      for (std::size_t k = 0; k < n; ++k) at(k, target) = ar.add(at(k, target), ar.mul(u, at(k, j)));
    }
  }

  // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i h[m-i-1][m-1] * prod_{j=m-i}^{m-1} h[j][j-1] * p_{m-i-1}
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {ar.one()};
  for (std::size_t mm = 1; mm <= n; ++mm) {
    std::vector<u64>& cur = p[mm];
    cur.assign(mm + 1, 0);
    const std::vector<u64>& prev = p[mm - 1];
    const u64 diag = at(mm - 1, mm - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = ar.add(cur[d + 1], prev[d]);
      cur[d] = ar.sub(cur[d], ar.mul(diag, prev[d]));
    }
    u64 t = ar.one();
    for (std::size_t i = 1; i < mm; ++i) {
      t = ar.mul(t, at(mm - i, mm - i - 1));
      if (t == 0) break;
      const u64 factor = ar.mul(t, at(mm - i - 1, mm - 1));
      if (factor == 0) continue;
      const std::vector<u64>& lower = p[mm - i - 1];
      for (std::size_t d = 0; d < lower.size(); ++d) cur[d] = ar.sub(cur[d], ar.mul(factor, lower[d]));
    }
  }
  std::vector<u64> out(n + 1);
  for (std::size_t d = 0; d <= n; ++d) out[d] = ar.from(p[n][d]);
  return out;
}

/// Every |coefficient| is at most e_k(|lambda|) <= C(n,k) s^k with s^2 = ||m||_F^2 / n
/// (Schur's inequality and Maclaurin), hence at most (1 + s)^n.
mpz_class coefficient_bound(const IntMatrix& m) {
  const std::size_t n = m.rows();
  mpz_class frob = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpz_class v(static_cast<long>(m(i, j)));
      frob += v * v;
    }
  mpz_class mean;
  mpz_cdiv_q_ui(mean.get_mpz_t(), frob.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), mean.get_mpz_t());
  if (s * s < mean) s += 1;
  mpz_class bound;
  const mpz_class base = s + 1;
  mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
  return bound;
}

}  // namespace

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("char_poly: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return IntPolynomial::constant(1);

  // Lift with symmetric residues: the modulus must exceed twice the bound.
  const mpz_class target = 2 * coefficient_bound(m) + 1;
  const std::size_t bits = mpz_sizeinbase(target.get_mpz_t(), 2);
  const std::size_t count = bits / (kPrimeBits - 1) + 1;
  const std::vector<u64> primes = modular_primes(count);

  std::vector<mpz_class> value(n + 1, 0);
  mpz_class modulus = 1;
  for (u64 prime : primes) {
    const Montgomery ar(prime);
    const std::vector<u64> residues = char_poly_mod(m, ar);
    const mpz_class p_z(static_cast<unsigned long>(prime));
    mpz_class inv;
    mpz_class mod_p;
    mpz_fdiv_r(mod_p.get_mpz_t(), modulus.get_mpz_t(), p_z.get_mpz_t());
    mpz_invert(inv.get_mpz_t(), mod_p.get_mpz_t(), p_z.get_mpz_t());
    for (std::size_t d = 0; d <= n; ++d) {
      // value + modulus * ((r - value) * modulus^{-1} mod p)
      mpz_class delta = mpz_class(static_cast<unsigned long>(residues[d])) - value[d];
      delta = delta * inv;
      mpz_fdiv_r(delta.get_mpz_t(), delta.get_mpz_t(), p_z.get_mpz_t());
      value[d] += modulus * delta;
    }
    modulus *= p_z;
  }
  const mpz_class half = modulus / 2;
  for (mpz_class& c : value) {
    if (c > half) c -= modulus;
  }
  return IntPolynomial(std::move(value));
}

}  // namespace centspec
