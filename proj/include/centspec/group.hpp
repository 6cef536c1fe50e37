#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace centspec {

enum class Family {
  GeneralizedQuaternion,
  Dihedral,
  Quasidihedral,
  Metacyclic,
  ProjectiveSpecialLinear,
};

std::string_view family_name(Family family);
/// Accepts the canonical names plus the short aliases `q`, `d`, `qd`, `m`.
Family parse_family(std::string_view name);

/// Family tag plus integer parameters selecting one concrete group.
///
/// Parameter layout: Q_{4n}, D_{2n}, QD_{2^n}: {n}; M_{2pq}: {p, q};
/// PSL(2, 2^k): {k}.
struct GroupSpec {
  Family family = Family::Dihedral;
  std::vector<std::int64_t> params;

  static GroupSpec quaternion(std::int64_t n) { return {Family::GeneralizedQuaternion, {n}}; }
  static GroupSpec dihedral(std::int64_t n) { return {Family::Dihedral, {n}}; }
  static GroupSpec quasidihedral(std::int64_t n) { return {Family::Quasidihedral, {n}}; }
  static GroupSpec metacyclic(std::int64_t p, std::int64_t q) { return {Family::Metacyclic, {p, q}}; }
  static GroupSpec psl(std::int64_t k) { return {Family::ProjectiveSpecialLinear, {k}}; }

  /// Throws InvalidParams when the family constraints are violated.
  void validate() const;
  std::int64_t param(std::size_t i) const;
  /// Human-readable, e.g. "metacyclic(p=5,q=3)".
  std::string to_string() const;

  bool operator==(const GroupSpec&) const = default;
};

/// Group order implied by the family formula; saturates at UINT64_MAX.
std::uint64_t expected_order(const GroupSpec& spec);

using Element = std::uint32_t;

/// Subset of the element indices 0..universe-1 of a group.
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(std::size_t universe);

  void insert(Element e);
  bool contains(Element e) const;
  std::size_t cardinality() const { return count_; }
  std::size_t universe() const { return universe_; }
  std::vector<Element> members() const;
  bool is_subset_of(const ElementSubset& other) const;

  bool operator==(const ElementSubset& other) const {
    return universe_ == other.universe_ && words_ == other.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical vertex order: cardinality descending, then lexicographic member list.
bool canonical_less(const ElementSubset& a, const ElementSubset& b);

/// Finite group on indices 0..order-1 with index 0 the identity.
class FiniteGroup {
 public:
  class Model {
   public:
    virtual ~Model() = default;
    virtual Element multiply(Element a, Element b) const = 0;
    virtual Element inverse(Element a) const = 0;
    virtual std::string label(Element a) const = 0;
  };

  FiniteGroup(GroupSpec spec, std::size_t order, std::vector<Element> generators,
              std::shared_ptr<const Model> model);

  const GroupSpec& spec() const { return spec_; }
  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }
  /// Presentation generators in the order they appear in the presentation.
  const std::vector<Element>& generators() const { return generators_; }

  Element multiply(Element a, Element b) const { return model_->multiply(a, b); }
  Element inverse(Element a) const { return model_->inverse(a); }
  Element power(Element a, std::int64_t exponent) const;
  std::string label(Element a) const { return model_->label(a); }

  bool commute(Element a, Element b) const { return multiply(a, b) == multiply(b, a); }

 private:
  GroupSpec spec_;
  std::size_t order_;
  std::vector<Element> generators_;
  std::shared_ptr<const Model> model_;
};

/// Default cap on the group order accepted by build_group.
inline constexpr std::uint64_t kDefaultOrderBudget = 100000;

/// Builds the group; throws InvalidParams on bad parameters and
/// BudgetExceeded when the order exceeds `budget`.
FiniteGroup build_group(const GroupSpec& spec, std::uint64_t budget = kDefaultOrderBudget);

/// Evaluates every defining relation of the family presentation. For PSL the
/// group is the full set of determinant-one matrices, so this checks the order.
bool defining_relations_hold(const FiniteGroup& g);

/// Exhaustive for order <= 200, otherwise 10^5 triples from a fixed-seed RNG.
bool is_associative(const FiniteGroup& g, std::uint64_t seed = 0x5eed);

/// Identity is two-sided and every inverse is two-sided.
bool has_identity_and_inverses(const FiniteGroup& g);

ElementSubset center(const FiniteGroup& g);
ElementSubset centralizer(const FiniteGroup& g, Element elem);

/// True iff the subset is closed under products and inverses and contains 1.
bool is_subgroup(const FiniteGroup& g, const ElementSubset& s);

/// Distinct centralizers different from G, in canonical order.
/// Throws AbelianGroup when there are none.
std::vector<ElementSubset> proper_centralizers(const FiniteGroup& g);

}  // namespace centspec
