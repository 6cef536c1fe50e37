#pragma once

#include <cstdint>

namespace centspec {

/// Arithmetic in GF(2^k) with elements stored as k-bit vectors over GF(2).
///
/// The field is built modulo the smallest irreducible polynomial of degree k
/// (bit i of the modulus is the coefficient of x^i). For k = 1 the modulus is
/// x + 1, which collapses to the prime field.
class FieldGF2k {
 public:
  using Element = std::uint32_t;

  static constexpr unsigned kMaxDegree = 16;

  explicit FieldGF2k(unsigned k);

  unsigned degree() const { return k_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return std::uint32_t{1} << k_; }

  static Element add(Element a, Element b) { return a ^ b; }
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  /// Multiplicative inverse; `a` must be nonzero.
  Element inv(Element a) const;

 private:
  unsigned k_;
  std::uint32_t modulus_;
};

/// True iff `poly` (bit-encoded, degree >= 1) has no factor of smaller
/// positive degree over GF(2).
bool is_irreducible_gf2(std::uint32_t poly);

/// Smallest bit-encoded irreducible polynomial of degree k (k >= 2); x + 1 for k = 1.
std::uint32_t smallest_irreducible_gf2(unsigned k);

}  // namespace centspec
