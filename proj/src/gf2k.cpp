#include "centspec/gf2k.hpp"

#include <bit>

#include "centspec/error.hpp"

namespace centspec {

namespace {

int degree_of(std::uint64_t poly) { return poly == 0 ? -1 : 63 - std::countl_zero(poly); }

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t result = 0;
  std::uint64_t shifted = a;
  while (b != 0) {
    if (b & 1U) result ^= shifted;
    shifted <<= 1;
    b >>= 1;
  }
  return result;
}

std::uint64_t gf2_mod(std::uint64_t value, std::uint64_t divisor) {
  const int d = degree_of(divisor);
  for (int top = degree_of(value); top >= d; top = degree_of(value)) {
    value ^= divisor << (top - d);
  }
  return value;
}

}  // namespace

bool is_irreducible_gf2(std::uint32_t poly) {
  const int d = degree_of(poly);
  if (d < 1) return false;
  for (std::uint32_t candidate = 2; degree_of(candidate) <= d / 2; ++candidate) {
    if (gf2_mod(poly, candidate) == 0) return false;
  }
  return true;
}

std::uint32_t smallest_irreducible_gf2(unsigned k) {
  if (k == 0 || k > FieldGF2k::kMaxDegree) {
    throw InvalidParams("GF(2^k) requires 1 <= k <= " + std::to_string(FieldGF2k::kMaxDegree));
  }
  if (k == 1) return 0b11;
  const std::uint32_t top = std::uint32_t{1} << k;
  for (std::uint32_t low = 0; low < top; ++low) {
    if (is_irreducible_gf2(top | low)) return top | low;
  }
  throw Error("no irreducible polynomial found");  // unreachable for k >= 1
}

FieldGF2k::FieldGF2k(unsigned k) : k_(k), modulus_(smallest_irreducible_gf2(k)) {}

FieldGF2k::Element FieldGF2k::mul(Element a, Element b) const {
  return static_cast<Element>(gf2_mod(clmul(a, b), modulus_));
}

FieldGF2k::Element FieldGF2k::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldGF2k::Element FieldGF2k::inv(Element a) const {
  if (a == 0) throw Error("zero has no inverse in GF(2^k)");
  // a^(2^k - 1) = 1 for nonzero a.
  return pow(a, (std::uint64_t{1} << k_) - 2);
}

}  // namespace centspec
