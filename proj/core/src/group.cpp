#include "tensordeg/group.hpp"

#include "tensordeg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tensordeg {

namespace {

void validate_table(std::size_t order, const std::vector<Element>& table) {
  if (order == 0) {
    throw std::invalid_argument("group order must be positive");
  }
  if (order > kMaxGroupOrder) {
    throw LimitError("group order " + std::to_string(order) + " exceeds " +
                     std::to_string(kMaxGroupOrder));
  }
  if (table.size() != order * order) {
    throw std::invalid_argument("multiplication table has wrong size");
  }
  std::vector<std::uint8_t> seen(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < order; ++y) {
      const Element v = table[x * order + y];
      if (v >= order || seen[v]) {
        throw std::invalid_argument("multiplication table is not a Latin square (row " +
                                    std::to_string(x) + ")");
      }
      seen[v] = 1;
    }
  }
  for (std::size_t y = 0; y < order; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < order; ++x) {
      const Element v = table[x * order + y];
      if (seen[v]) {
        throw std::invalid_argument("multiplication table is not a Latin square (column " +
                                    std::to_string(y) + ")");
      }
      seen[v] = 1;
    }
  }
  for (std::size_t x = 0; x < order; ++x) {
    if (table[x] != x || table[x * order] != x) {
      throw std::invalid_argument("element 0 is not a two-sided identity");
    }
  }
  auto mul = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw std::invalid_argument("multiplication is not associative at (" + std::to_string(a) +
                                  ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  };
  if (order <= kExhaustiveAssociativityBound) {
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        for (std::size_t c = 0; c < order; ++c) {
          check(a, b, c);
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    const std::size_t samples = 10 * order * order;
    for (std::size_t i = 0; i < samples; ++i) {
      check(pick(rng), pick(rng), pick(rng));
    }
  }
}

} // namespace

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Element> table,
                         Labels labels)
    : name_(std::move(name)), order_(order), table_(std::move(table)),
      labels_(std::move(labels)) {
  validate_table(order_, table_);
  inv_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x) {
    for (Element y = 0; y < order_; ++y) {
      if (mul(x, y) == kIdentity) {
        inv_[x] = y;
        break;
      }
    }
  }
  for (const auto& [label, element] : labels_) {
    if (element >= order_) {
      throw std::invalid_argument("label '" + label + "' refers to a missing element");
    }
  }
}

Element FiniteGroup::power(Element x, std::int64_t exponent) const {
  Element base = exponent < 0 ? inv(x) : x;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  Element result = kIdentity;
  while (e != 0) {
    if (e & 1U) {
      result = mul(result, base);
    }
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element x) const {
  std::size_t k = 1;
  for (Element y = x; y != kIdentity; y = mul(y, x)) {
    ++k;
  }
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (Element x = 0; x < order_; ++x) {
    e = std::lcm(e, element_order(x));
  }
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (Element x = 0; x < order_; ++x) {
    for (Element y = x + 1; y < order_; ++y) {
      if (mul(x, y) != mul(y, x)) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Element> FiniteGroup::label(const std::string& name) const {
  if (auto it = labels_.find(name); it != labels_.end()) {
    return it->second;
  }
  return std::nullopt;
}

SubgroupHandle::SubgroupHandle(const FiniteGroup& parent, std::vector<Element> elements)
    : parent_(&parent), elements_(std::move(elements)), member_(parent.order(), 0) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Element x : elements_) {
    if (x >= parent.order()) {
      throw std::invalid_argument("subgroup element out of range");
    }
    member_[x] = 1;
  }
  if (elements_.empty() || elements_.front() != kIdentity) {
    throw std::invalid_argument("subgroup must contain the identity");
  }
  for (Element x : elements_) {
    if (!contains(parent.inv(x))) {
      throw std::invalid_argument("subgroup not closed under inverses");
    }
    for (Element y : elements_) {
      if (!contains(parent.mul(x, y))) {
        throw std::invalid_argument("subgroup not closed under multiplication");
      }
    }
  }
  if (parent.order() % elements_.size() != 0) {
    throw ConsistencyError("subgroup order does not divide group order");
  }
}

SubgroupHandle SubgroupHandle::whole(const FiniteGroup& parent) {
  std::vector<Element> all(parent.order());
  std::iota(all.begin(), all.end(), Element{0});
  return {parent, std::move(all)};
}

SubgroupHandle SubgroupHandle::trivial(const FiniteGroup& parent) {
  return {parent, {kIdentity}};
}

bool SubgroupHandle::is_subset_of(const SubgroupHandle& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element x) { return other.contains(x); });
}

Element evaluate(const FiniteGroup& group, const GroupWord& word) {
  Element result = kIdentity;
  for (const auto& [label, exponent] : word.factors) {
    const auto g = group.label(label);
    if (!g) {
      throw InvalidSpec("unknown generator label '" + label + "' for " + group.name());
    }
    result = group.mul(result, group.power(*g, exponent));
  }
  return result;
}

Element conjugate(const FiniteGroup& group, Element g, Element n) {
  return group.mul(group.mul(g, n), group.inv(g));
}

Element commutator(const FiniteGroup& group, Element x, Element y) {
  return group.mul(group.mul(x, y), group.mul(group.inv(x), group.inv(y)));
}

Element iterated_commutator(const FiniteGroup& group, std::span<const Element> xs) {
  if (xs.empty()) {
    throw std::invalid_argument("iterated_commutator: empty sequence");
  }
  Element acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    acc = commutator(group, acc, xs[i]);
  }
  return acc;
}

FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right,
                           std::size_t max_order) {
  const std::size_t m = left.order();
  const std::size_t k = right.order();
  if (m * k > max_order) {
    throw LimitError("direct product " + left.name() + " x " + right.name() + " has order " +
                     std::to_string(m * k) + ", above the limit " + std::to_string(max_order));
  }
  const std::size_t order = m * k;
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const Element g = left.mul(static_cast<Element>(x / k), static_cast<Element>(y / k));
      const Element h = right.mul(static_cast<Element>(x % k), static_cast<Element>(y % k));
      table[x * order + y] = static_cast<Element>(g * k + h);
    }
  }
  // Labels carry the 1-based factor position; a left operand that is already a
  // product keeps its suffixed labels.
  const auto left_factors =
      1 + static_cast<std::size_t>(std::count(left.name().begin(), left.name().end(), 'x'));
  FiniteGroup::Labels labels;
  for (const auto& [label, g] : left.labels()) {
    labels[left_factors > 1 ? label : label + "1"] = static_cast<Element>(g * k);
  }
  for (const auto& [label, h] : right.labels()) {
    labels[label + std::to_string(left_factors + 1)] = h;
  }
  return FiniteGroup(left.name() + "x" + right.name(), order, std::move(table), std::move(labels));
}

FiniteGroup relabel(const FiniteGroup& group, std::span<const Element> perm) {
  const std::size_t n = group.order();
  if (perm.size() != n || perm[0] != kIdentity) {
    throw std::invalid_argument("relabel: permutation must fix the identity");
  }
  std::vector<Element> inverse(n);
  for (Element x = 0; x < n; ++x) {
    inverse[perm[x]] = x;
  }
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      table[static_cast<std::size_t>(x) * n + y] = perm[group.mul(inverse[x], inverse[y])];
    }
  }
  FiniteGroup::Labels labels;
  for (const auto& [label, e] : group.labels()) {
    labels[label] = perm[e];
  }
  return FiniteGroup(group.name(), n, std::move(table), std::move(labels));
}

std::optional<std::size_t> smallest_prime_divisor(std::size_t n) {
  if (n < 2) {
    return std::nullopt;
  }
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      return p;
    }
  }
  return n;
}

} // namespace tensordeg
