#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tensordeg {

/// Dense element index; 0 is always the identity.
using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;

/// Hard ceiling on group order (S5 is the largest named family).
inline constexpr std::size_t kMaxGroupOrder = 120;

/// Orders up to this bound get an exhaustive associativity check.
inline constexpr std::size_t kExhaustiveAssociativityBound = 64;

/// A concrete finite group given by its full multiplication table.
///
/// Immutable after construction. The constructor validates the table: Latin
/// square, two-sided identity at index 0, and associativity (exhaustive up to
/// order 64, sampled with a fixed seed beyond that).
class FiniteGroup {
public:
  using Labels = std::map<std::string, Element>;

  FiniteGroup(std::string name, std::size_t order, std::vector<Element> table,
              Labels labels = {});

  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] Element mul(Element x, Element y) const noexcept {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }
  [[nodiscard]] Element inv(Element x) const noexcept { return inv_[x]; }
  [[nodiscard]] static constexpr Element identity() noexcept { return kIdentity; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const Labels& labels() const noexcept { return labels_; }
  [[nodiscard]] std::span<const Element> table() const noexcept { return table_; }

  [[nodiscard]] Element power(Element x, std::int64_t exponent) const;
  [[nodiscard]] std::size_t element_order(Element x) const;
  [[nodiscard]] std::size_t exponent() const;
  [[nodiscard]] bool is_abelian() const;
  [[nodiscard]] std::optional<Element> label(const std::string& name) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  Labels labels_;
};

/// A subgroup of a parent group, held as a sorted element list.
///
/// Holds a non-owning pointer: the parent must outlive the handle.
class SubgroupHandle {
public:
  /// Validates identity, closure and Lagrange; throws std::invalid_argument.
  SubgroupHandle(const FiniteGroup& parent, std::vector<Element> elements);

  static SubgroupHandle whole(const FiniteGroup& parent);
  static SubgroupHandle trivial(const FiniteGroup& parent);

  [[nodiscard]] const FiniteGroup& parent() const noexcept { return *parent_; }
  [[nodiscard]] const std::vector<Element>& elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] bool contains(Element x) const noexcept { return member_[x] != 0; }
  [[nodiscard]] std::size_t index() const noexcept { return parent_->order() / elements_.size(); }
  [[nodiscard]] bool is_whole() const noexcept { return elements_.size() == parent_->order(); }
  [[nodiscard]] bool is_trivial() const noexcept { return elements_.size() == 1; }
  [[nodiscard]] bool is_subset_of(const SubgroupHandle& other) const;

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

private:
  const FiniteGroup* parent_;
  std::vector<Element> elements_;
  std::vector<std::uint8_t> member_;
};

/// Word over a group's generator labels: sequence of (label, exponent).
struct GroupWord {
  std::vector<std::pair<std::string, std::int64_t>> factors;
};

/// Evaluates a word; unknown labels throw InvalidSpec.
Element evaluate(const FiniteGroup& group, const GroupWord& word);

// --- element-level operations -------------------------------------------

/// g n g^-1.
Element conjugate(const FiniteGroup& group, Element g, Element n);

/// x y x^-1 y^-1.
Element commutator(const FiniteGroup& group, Element x, Element y);

/// Left-normed [x1, ..., xk] = [[x1, ..., x(k-1)], xk]. Throws on empty input.
Element iterated_commutator(const FiniteGroup& group, std::span<const Element> xs);

// --- construction --------------------------------------------------------

enum class Family { cyclic, dihedral, quaternion, symmetric, alternating, elementary_abelian };

/// Builds a named family member. For dihedral the parameter is the total
/// order (8 gives D8 = <a, b | a^4, b^2, ba = a^-1 b>). For elementary_abelian
/// the parameter is p^k and must be a prime power.
FiniteGroup build_named(Family family, std::size_t parameter,
                        std::size_t max_order = kMaxGroupOrder);

/// Component-wise product. Labels get the factor's 1-based position as suffix.
FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right,
                           std::size_t max_order = kMaxGroupOrder);

/// Relabels elements by a permutation that fixes 0: new index of x is perm[x].
FiniteGroup relabel(const FiniteGroup& group, std::span<const Element> perm);

// --- subgroups -----------------------------------------------------------

SubgroupHandle subgroup_generated(const FiniteGroup& group, std::span<const Element> generators);

inline constexpr std::size_t kDefaultSubgroupBound = 32;

/// Every subgroup, sorted by (size, element list). Throws LimitError above the bound.
std::vector<SubgroupHandle> all_subgroups(const FiniteGroup& group,
                                          std::size_t bound = kDefaultSubgroupBound);
std::vector<SubgroupHandle> normal_subgroups(const FiniteGroup& group,
                                             std::size_t bound = kDefaultSubgroupBound);
bool is_normal(const SubgroupHandle& subgroup);

SubgroupHandle centralizer(const FiniteGroup& group, Element x);
SubgroupHandle center(const FiniteGroup& group);
SubgroupHandle commutator_subgroup(const FiniteGroup& group, const SubgroupHandle& a,
                                   const SubgroupHandle& b);
SubgroupHandle derived_subgroup(const FiniteGroup& group);
SubgroupHandle intersection(const SubgroupHandle& a, const SubgroupHandle& b);

/// Size of the product set A*B.
std::size_t product_set_size(const SubgroupHandle& a, const SubgroupHandle& b);

/// G/N with cosets numbered in order of their smallest element. N must be normal.
struct Quotient {
  FiniteGroup group;
  std::vector<Element> projection; // element of G -> coset index
};
Quotient quotient(const FiniteGroup& group, const SubgroupHandle& normal);

/// Image of a subgroup under a quotient projection, as a subgroup of q.group.
SubgroupHandle project(const Quotient& q, const SubgroupHandle& subgroup);

/// A subgroup as a group in its own right, with the embedding back into the parent.
struct InducedGroup {
  FiniteGroup group;
  std::vector<Element> embedding; // new index -> parent element
};
InducedGroup as_group(const SubgroupHandle& subgroup);

/// Pre-image of a subgroup of q.group in the original group.
SubgroupHandle pull_back(const FiniteGroup& group, const Quotient& q,
                         const SubgroupHandle& image);

/// Z_0 = 1, Z_1 = Z(G), ... up to and including the first repeated term.
std::vector<SubgroupHandle> upper_central_series(const FiniteGroup& group);

/// Z_k(G) for any k >= 0 (stabilized value beyond the series length).
SubgroupHandle upper_central_term(const FiniteGroup& group, std::size_t k);

/// Nilpotency class; empty when G is not nilpotent. The trivial group has class 0.
std::optional<std::size_t> nilpotency_class(const FiniteGroup& group);

/// Smallest prime dividing n, or empty for n == 1.
std::optional<std::size_t> smallest_prime_divisor(std::size_t n);

} // namespace tensordeg
