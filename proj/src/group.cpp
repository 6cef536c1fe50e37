#include "centspec/group.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "centspec/error.hpp"
#include "centspec/gf2k.hpp"

namespace centspec {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::GeneralizedQuaternion: return "quaternion";
    case Family::Dihedral: return "dihedral";
    case Family::Quasidihedral: return "quasidihedral";
    case Family::Metacyclic: return "metacyclic";
    case Family::ProjectiveSpecialLinear: return "psl";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "quaternion" || name == "q") return Family::GeneralizedQuaternion;
  if (name == "dihedral" || name == "d") return Family::Dihedral;
  if (name == "quasidihedral" || name == "qd") return Family::Quasidihedral;
  if (name == "metacyclic" || name == "m") return Family::Metacyclic;
  if (name == "psl") return Family::ProjectiveSpecialLinear;
  throw InvalidParams("unknown group family '" + std::string(name) + "'");
}

std::int64_t GroupSpec::param(std::size_t i) const {
  if (i >= params.size()) throw InvalidParams(std::string(family_name(family)) + ": missing parameter");
  return params[i];
}

void GroupSpec::validate() const {
  const std::size_t arity = family == Family::Metacyclic ? 2 : 1;
  if (params.size() != arity) {
    throw InvalidParams(std::string(family_name(family)) + " takes " + std::to_string(arity) +
                        " parameter(s)");
  }
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw InvalidParams(to_string() + ": requires " + what);
  };
  switch (family) {
    case Family::GeneralizedQuaternion: require(params[0] >= 2, "n >= 2"); break;
    case Family::Dihedral: require(params[0] >= 3, "n >= 3"); break;
    case Family::Quasidihedral:
      require(params[0] >= 4, "n >= 4");
      require(params[0] <= 62, "n <= 62");
      break;
    case Family::Metacyclic:
      require(params[0] > 2, "p > 2");
      require(params[1] >= 1, "q >= 1");
      break;
    case Family::ProjectiveSpecialLinear:
      require(params[0] >= 1, "k >= 1");
      require(params[0] <= static_cast<std::int64_t>(FieldGF2k::kMaxDegree), "k <= 16");
      break;
  }
}

std::string GroupSpec::to_string() const {
  std::ostringstream out;
  out << family_name(family) << '(';
  if (family == Family::Metacyclic) {
    out << "p=" << (params.size() > 0 ? params[0] : 0) << ",q=" << (params.size() > 1 ? params[1] : 0);
  } else {
    out << (family == Family::ProjectiveSpecialLinear ? "k=" : "n=") << (params.empty() ? 0 : params[0]);
  }
  out << ')';
  return out.str();
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_mul_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t sat_pow2(std::int64_t e) { return e >= 64 ? kSaturated : std::uint64_t{1} << e; }

}  // namespace

std::uint64_t expected_order(const GroupSpec& spec) {
  spec.validate();
  const auto u = [&](std::size_t i) { return static_cast<std::uint64_t>(spec.params[i]); };
  switch (spec.family) {
    case Family::GeneralizedQuaternion: return sat_mul(4, u(0));
    case Family::Dihedral: return sat_mul(2, u(0));
    case Family::Quasidihedral: return sat_pow2(spec.params[0]);
    case Family::Metacyclic: return sat_mul(sat_mul(2, u(0)), u(1));
    case Family::ProjectiveSpecialLinear: {
      const std::uint64_t q = sat_pow2(spec.params[0]);
      const std::uint64_t q2 = sat_mul(q, q);
      return q2 == kSaturated ? kSaturated : sat_mul(q, q2 - 1);
    }
  }
  return kSaturated;
}

// ---------------------------------------------------------------------------
// ElementSubset

ElementSubset::ElementSubset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

void ElementSubset::insert(Element e) {
  std::uint64_t& word = words_[e / 64];
  const std::uint64_t bit = std::uint64_t{1} << (e % 64);
  if ((word & bit) == 0) {
    word |= bit;
    ++count_;
  }
}

bool ElementSubset::contains(Element e) const {
  return e < universe_ && (words_[e / 64] >> (e % 64)) & 1U;
}

std::vector<Element> ElementSubset::members() const {
  std::vector<Element> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Element>(w * 64 + std::countr_zero(bits)));
    }
  }
  return out;
}

bool ElementSubset::is_subset_of(const ElementSubset& other) const {
  if (universe_ != other.universe_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool canonical_less(const ElementSubset& a, const ElementSubset& b) {
  if (a.cardinality() != b.cardinality()) return a.cardinality() > b.cardinality();
  return a.members() < b.members();
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(GroupSpec spec, std::size_t order, std::vector<Element> generators,
                         std::shared_ptr<const Model> model)
    : spec_(std::move(spec)), order_(order), generators_(std::move(generators)), model_(std::move(model)) {}

Element FiniteGroup::power(Element a, std::int64_t exponent) const {
  if (exponent < 0) {
    a = inverse(a);
    exponent = -exponent;
  }
  Element result = identity();
  while (exponent != 0) {
    if (exponent & 1) result = multiply(result, a);
    a = multiply(a, a);
    exponent >>= 1;
  }
  return result;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, new_g = mod(a, m), new_x = 1;
  while (new_g != 0) {
    const std::int64_t t = g / new_g;
    g = std::exchange(new_g, g - t * new_g);
    x = std::exchange(new_x, x - t * new_x);
  }
  if (g != 1) throw Error("twist exponent is not invertible");
  return mod(x, m);
}

std::string power_label(std::string_view name, std::int64_t e) {
  if (e == 0) return "";
  if (e == 1) return std::string(name);
  return std::string(name) + "^" + std::to_string(e);
}

// Elements a^i b^j with 0 <= i < m, 0 <= j < s and b a = a^r b, b^s = a^c.
// Index of a^i b^j is i + m*j.
class PairModel final : public FiniteGroup::Model {
 public:
  PairModel(std::int64_t m, std::int64_t s, std::int64_t r, std::int64_t c, std::string first,
            std::string second)
      : m_(m), s_(s), c_(c), first_(std::move(first)), second_(std::move(second)) {
    twist_.resize(static_cast<std::size_t>(s));
    twist_inv_.resize(static_cast<std::size_t>(s));
    std::int64_t t = 1;
    for (std::int64_t j = 0; j < s; ++j) {
      twist_[j] = t;
      twist_inv_[j] = mod_inverse(t, m);
      t = mod(t * r, m);
    }
  }

  Element multiply(Element a, Element b) const override {
    const auto [i1, j1] = split(a);
    const auto [i2, j2] = split(b);
    std::int64_t i = i1 + twist_[j1] * i2;
    std::int64_t j = j1 + j2;
    if (j >= s_) {
      j -= s_;
      i += c_;
    }
    return join(mod(i, m_), j);
  }

  Element inverse(Element a) const override {
    const auto [i, j] = split(a);
    const std::int64_t j_inv = j == 0 ? 0 : s_ - j;
    const std::int64_t carry = j == 0 ? 0 : c_;
    // i + r^j i' + carry = 0 (mod m)
    return join(mod(-(i + carry) * twist_inv_[j], m_), j_inv);
  }

  std::string label(Element a) const override {
    const auto [i, j] = split(a);
    if (i == 0 && j == 0) return "1";
    const std::string lhs = power_label(first_, i);
    const std::string rhs = power_label(second_, j);
    if (lhs.empty()) return rhs;
    if (rhs.empty()) return lhs;
    return lhs + " " + rhs;
  }

 private:
  std::pair<std::int64_t, std::int64_t> split(Element e) const {
    return {static_cast<std::int64_t>(e) % m_, static_cast<std::int64_t>(e) / m_};
  }
  Element join(std::int64_t i, std::int64_t j) const { return static_cast<Element>(i + m_ * j); }

  std::int64_t m_, s_, c_;
  std::vector<std::int64_t> twist_, twist_inv_;
  std::string first_, second_;
};

// SL(2, 2^k) = PSL(2, 2^k): the center of SL_2 is trivial in characteristic 2.
class SpecialLinearModel final : public FiniteGroup::Model {
 public:
  explicit SpecialLinearModel(unsigned k) : field_(k), k_(k) {
    const std::uint32_t q = field_.size();
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        for (std::uint32_t c = 0; c < q; ++c) {
          for (std::uint32_t d = 0; d < q; ++d) {
            if ((field_.mul(a, d) ^ field_.mul(b, c)) == 1) keys_.push_back(pack({a, b, c, d}));
          }
        }
      }
    }
    identity_key_ = pack({1, 0, 0, 1});
    std::erase(keys_, identity_key_);
    std::sort(keys_.begin(), keys_.end());
    keys_.insert(keys_.begin(), identity_key_);
  }

  std::size_t order() const { return keys_.size(); }

  Element multiply(Element x, Element y) const override {
    const auto m = unpack(keys_[x]);
    const auto n = unpack(keys_[y]);
    const auto mul = [&](std::uint32_t u, std::uint32_t v) { return field_.mul(u, v); };
    return index_of(pack({mul(m[0], n[0]) ^ mul(m[1], n[2]), mul(m[0], n[1]) ^ mul(m[1], n[3]),
                          mul(m[2], n[0]) ^ mul(m[3], n[2]), mul(m[2], n[1]) ^ mul(m[3], n[3])}));
  }

  Element inverse(Element x) const override {
    const auto m = unpack(keys_[x]);
    // Determinant one and -1 = 1: the inverse is the adjugate.
    return index_of(pack({m[3], m[1], m[2], m[0]}));
  }

  std::string label(Element x) const override {
    const auto m = unpack(keys_[x]);
    std::ostringstream out;
    out << "[[" << m[0] << ',' << m[1] << "],[" << m[2] << ',' << m[3] << "]]";
    return out.str();
  }

 private:
  using Matrix = std::array<std::uint32_t, 4>;

  std::uint64_t pack(const Matrix& m) const {
    return std::uint64_t{m[0]} | std::uint64_t{m[1]} << k_ | std::uint64_t{m[2]} << (2 * k_) |
           std::uint64_t{m[3]} << (3 * k_);
  }
  Matrix unpack(std::uint64_t key) const {
    const std::uint64_t mask = (std::uint64_t{1} << k_) - 1;
    return {static_cast<std::uint32_t>(key & mask), static_cast<std::uint32_t>((key >> k_) & mask),
            static_cast<std::uint32_t>((key >> (2 * k_)) & mask),
            static_cast<std::uint32_t>((key >> (3 * k_)) & mask)};
  }
  Element index_of(std::uint64_t key) const {
    if (key == identity_key_) return 0;
    const auto it = std::lower_bound(keys_.begin() + 1, keys_.end(), key);
    if (it == keys_.end() || *it != key) throw Error("product left SL(2, 2^k)");
    return static_cast<Element>(it - keys_.begin());
  }

  FieldGF2k field_;
  unsigned k_;
  std::uint64_t identity_key_ = 0;
  std::vector<std::uint64_t> keys_;
};

FiniteGroup make_pair_group(const GroupSpec& spec, std::int64_t m, std::int64_t s, std::int64_t r,
                            std::int64_t c, const char* first, const char* second) {
  auto model = std::make_shared<PairModel>(m, s, r, c, first, second);
  const Element gen_first = 1;
  const Element gen_second = static_cast<Element>(m);
  return FiniteGroup(spec, static_cast<std::size_t>(m * s), {gen_first, gen_second}, std::move(model));
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec, std::uint64_t budget) {
  spec.validate();
  const std::uint64_t order = expected_order(spec);
  if (order > budget || order > std::numeric_limits<Element>::max()) {
    throw BudgetExceeded(spec.to_string() + ": order " +
                         (order == kSaturated ? std::string("overflows") : std::to_string(order)) +
                         " exceeds budget " + std::to_string(budget));
  }
  const std::int64_t p0 = spec.params[0];
  switch (spec.family) {
    case Family::GeneralizedQuaternion:
      return make_pair_group(spec, 2 * p0, 2, 2 * p0 - 1, p0, "x", "y");
    case Family::Dihedral:
      return make_pair_group(spec, p0, 2, p0 - 1, 0, "x", "y");
    case Family::Quasidihedral: {
      const std::int64_t m = std::int64_t{1} << (p0 - 1);
      return make_pair_group(spec, m, 2, (std::int64_t{1} << (p0 - 2)) - 1, 0, "a", "b");
    }
    case Family::Metacyclic:
      return make_pair_group(spec, p0, 2 * spec.params[1], p0 - 1, 0, "a", "b");
    case Family::ProjectiveSpecialLinear: {
      auto model = std::make_shared<SpecialLinearModel>(static_cast<unsigned>(p0));
      const std::size_t n = model->order();
      return FiniteGroup(spec, n, {}, std::move(model));
    }
  }
  throw InvalidParams("unknown family");
}

bool defining_relations_hold(const FiniteGroup& g) {
  const GroupSpec& spec = g.spec();
  if (spec.family == Family::ProjectiveSpecialLinear) return g.order() == expected_order(spec);

  const Element first = g.generators().at(0);
  const Element second = g.generators().at(1);
  const auto is_one = [&](Element e) { return e == FiniteGroup::identity(); };
  const Element conj = g.multiply(g.multiply(second, first), g.inverse(second));
  const std::int64_t p0 = spec.params[0];
  switch (spec.family) {
    case Family::GeneralizedQuaternion:
      // x^{2n} = 1, x^n = y^2, yx = x^{-1}y
      return is_one(g.power(first, 2 * p0)) && g.power(first, p0) == g.power(second, 2) &&
             g.multiply(second, first) == g.multiply(g.inverse(first), second);
    case Family::Dihedral:
      return is_one(g.power(first, p0)) && is_one(g.power(second, 2)) && conj == g.inverse(first);
    case Family::Quasidihedral:
      return is_one(g.power(first, std::int64_t{1} << (p0 - 1))) && is_one(g.power(second, 2)) &&
             conj == g.power(first, (std::int64_t{1} << (p0 - 2)) - 1);
    case Family::Metacyclic:
      return is_one(g.power(first, p0)) && is_one(g.power(second, 2 * spec.params[1])) &&
             conj == g.inverse(first);
    case Family::ProjectiveSpecialLinear: break;
  }
  return false;
}

bool is_associative(const FiniteGroup& g, std::uint64_t seed) {
  const auto n = static_cast<Element>(g.order());
  if (n <= 200) {
    std::vector<Element> table(static_cast<std::size_t>(n) * n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) table[a * n + b] = g.multiply(a, b);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element ab = table[a * n + b];
        for (Element c = 0; c < n; ++c)
          if (table[ab * n + c] != table[a * n + table[b * n + c]]) return false;
      }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, n - 1);
  for (int trial = 0; trial < 100000; ++trial) {
    const Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c))) return false;
  }
  return true;
}

bool has_identity_and_inverses(const FiniteGroup& g) {
  const auto n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a) {
    if (g.multiply(0, a) != a || g.multiply(a, 0) != a) return false;
    const Element inv = g.inverse(a);
    if (inv >= n || g.multiply(a, inv) != 0 || g.multiply(inv, a) != 0) return false;
  }
  return true;
}

ElementSubset centralizer(const FiniteGroup& g, Element elem) {
  if (elem >= g.order()) throw InvalidParams("element index out of range");
  ElementSubset out(g.order());
  for (Element h = 0; h < g.order(); ++h) {
    if (g.commute(h, elem)) out.insert(h);
  }
  return out;
}

ElementSubset center(const FiniteGroup& g) {
  ElementSubset out(g.order());
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element h = 0; h < g.order() && central; ++h) central = g.commute(z, h);
    if (central) out.insert(z);
  }
  return out;
}

bool is_subgroup(const FiniteGroup& g, const ElementSubset& s) {
  if (!s.contains(FiniteGroup::identity())) return false;
  const std::vector<Element> members = s.members();
  for (Element a : members) {
    if (!s.contains(g.inverse(a))) return false;
    for (Element b : members) {
      if (!s.contains(g.multiply(a, b))) return false;
    }
  }
  return true;
}

std::vector<ElementSubset> proper_centralizers(const FiniteGroup& g) {
  const auto seen_less = [](const ElementSubset& a, const ElementSubset& b) { return canonical_less(a, b); };
  std::set<ElementSubset, decltype(seen_less)> distinct(seen_less);
  // C(e^k) = C(e) whenever gcd(k, ord e) = 1
  std::vector<bool> covered(g.order(), false);
  for (Element e = 0; e < g.order(); ++e) {
    if (covered[e]) continue;
    std::vector<Element> powers{e};
    for (Element x = g.multiply(e, e); x != e; x = g.multiply(x, e)) powers.push_back(x);
    const std::size_t order = powers.size();
    for (std::size_t k = 1; k <= order; ++k)
      if (std::gcd(k, order) == 1) covered[powers[k - 1]] = true;
    ElementSubset c = centralizer(g, e);
    if (c.cardinality() != g.order()) distinct.insert(std::move(c));
  }
  if (distinct.empty()) throw AbelianGroup(g.spec().to_string() + " is abelian");
  return {distinct.begin(), distinct.end()};
}

}  // namespace centspec
