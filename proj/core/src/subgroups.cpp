#include "tensordeg/group.hpp"

#include "tensordeg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tensordeg {

namespace {

// Closure of `seed` under right multiplication by `gens`. `seed` must already
// be a subgroup (or just {1}); the result is the subgroup <seed, gens>.
std::vector<Element> close(const FiniteGroup& group, std::vector<Element> seed,
                           std::span<const Element> gens) {
  std::vector<std::uint8_t> member(group.order(), 0);
  for (Element x : seed) {
    member[x] = 1;
  }
  std::vector<Element> all_gens(seed.begin(), seed.end());
  all_gens.insert(all_gens.end(), gens.begin(), gens.end());
  std::vector<Element> elements = std::move(seed);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (Element s : all_gens) {
      const Element y = group.mul(elements[i], s);
      if (!member[y]) {
        member[y] = 1;
        elements.push_back(y);
      }
    }
  }
  // Finite groups: closure under multiplication implies closure under inverses.
  std::sort(elements.begin(), elements.end());
  return elements;
}

} // namespace

SubgroupHandle subgroup_generated(const FiniteGroup& group, std::span<const Element> generators) {
  for (Element g : generators) {
    if (g >= group.order()) {
      throw std::invalid_argument("generator index out of range");
    }
  }
  return {group, close(group, {kIdentity}, generators)};
}

std::vector<SubgroupHandle> all_subgroups(const FiniteGroup& group, std::size_t bound) {
  if (group.order() > bound) {
    throw LimitError("subgroup enumeration for " + group.name() + " (order " +
                     std::to_string(group.order()) + ") exceeds the bound " +
                     std::to_string(bound));
  }
  std::set<std::vector<Element>> found;
  std::vector<std::vector<Element>> layer;
  for (Element x = 0; x < group.order(); ++x) {
    const Element g[] = {x};
    auto cyc = close(group, {kIdentity}, g);
    if (found.insert(cyc).second) {
      layer.push_back(std::move(cyc));
    }
  }
  while (!layer.empty()) {
    std::vector<std::vector<Element>> next;
    for (const auto& sub : layer) {
      std::vector<std::uint8_t> member(group.order(), 0);
      for (Element x : sub) {
        member[x] = 1;
      }
      for (Element x = 0; x < group.order(); ++x) {
        if (member[x]) {
          continue;
        }
        const Element g[] = {x};
        auto ext = close(group, sub, g);
        if (found.insert(ext).second) {
          next.push_back(std::move(ext));
        }
      }
    }
    layer = std::move(next);
  }
  std::vector<std::vector<Element>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<SubgroupHandle> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) {
    out.emplace_back(group, std::move(s));
  }
  return out;
}

bool is_normal(const SubgroupHandle& subgroup) {
  const FiniteGroup& group = subgroup.parent();
  for (Element g = 0; g < group.order(); ++g) {
    for (Element n : subgroup.elements()) {
      if (!subgroup.contains(conjugate(group, g, n))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<SubgroupHandle> normal_subgroups(const FiniteGroup& group, std::size_t bound) {
  auto all = all_subgroups(group, bound);
  std::vector<SubgroupHandle> out;
  for (auto& s : all) {
    if (is_normal(s)) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

SubgroupHandle centralizer(const FiniteGroup& group, Element x) {
  std::vector<Element> elems;
  for (Element a = 0; a < group.order(); ++a) {
    if (group.mul(a, x) == group.mul(x, a)) {
      elems.push_back(a);
    }
  }
  return {group, std::move(elems)};
}

SubgroupHandle center(const FiniteGroup& group) {
  std::vector<Element> elems;
  for (Element a = 0; a < group.order(); ++a) {
    bool central = true;
    for (Element x = 0; x < group.order() && central; ++x) {
      central = group.mul(a, x) == group.mul(x, a);
    }
    if (central) {
      elems.push_back(a);
    }
  }
  return {group, std::move(elems)};
}

SubgroupHandle commutator_subgroup(const FiniteGroup& group, const SubgroupHandle& a,
                                   const SubgroupHandle& b) {
  std::vector<std::uint8_t> seen(group.order(), 0);
  std::vector<Element> gens;
  for (Element x : a.elements()) {
    for (Element y : b.elements()) {
      const Element c = commutator(group, x, y);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  }
  return subgroup_generated(group, gens);
}

SubgroupHandle derived_subgroup(const FiniteGroup& group) {
  const auto whole = SubgroupHandle::whole(group);
  return commutator_subgroup(group, whole, whole);
}

SubgroupHandle intersection(const SubgroupHandle& a, const SubgroupHandle& b) {
  std::vector<Element> elems;
  for (Element x : a.elements()) {
    if (b.contains(x)) {
      elems.push_back(x);
    }
  }
  return {a.parent(), std::move(elems)};
}

std::size_t product_set_size(const SubgroupHandle& a, const SubgroupHandle& b) {
  const FiniteGroup& group = a.parent();
  std::vector<std::uint8_t> seen(group.order(), 0);
  std::size_t count = 0;
  for (Element x : a.elements()) {
    for (Element y : b.elements()) {
      const Element p = group.mul(x, y);
      if (!seen[p]) {
        seen[p] = 1;
        ++count;
      }
    }
  }
  return count;
}

Quotient quotient(const FiniteGroup& group, const SubgroupHandle& normal) {
  if (&normal.parent() != &group) {
    throw std::invalid_argument("quotient: subgroup belongs to a different group");
  }
  if (!is_normal(normal)) {
    throw std::invalid_argument("quotient: subgroup is not normal in " + group.name());
  }
  constexpr Element kUnassigned = ~Element{0};
  std::vector<Element> projection(group.order(), kUnassigned);
  std::vector<Element> representative;
  for (Element x = 0; x < group.order(); ++x) {
    if (projection[x] != kUnassigned) {
      continue;
    }
    const auto coset = static_cast<Element>(representative.size());
    representative.push_back(x);
    for (Element n : normal.elements()) {
      projection[group.mul(x, n)] = coset;
    }
  }
  const std::size_t order = representative.size();
  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      table[i * order + j] = projection[group.mul(representative[i], representative[j])];
    }
  }
  FiniteGroup::Labels labels;
  for (const auto& [label, e] : group.labels()) {
    labels[label] = projection[e];
  }
  std::string name = group.name() + "/N" + std::to_string(normal.size());
  Quotient q{FiniteGroup(std::move(name), order, std::move(table), std::move(labels)),
             std::move(projection)};
  if (group.order() <= kExhaustiveAssociativityBound) {
    for (Element x = 0; x < group.order(); ++x) {
      for (Element y = 0; y < group.order(); ++y) {
        if (q.projection[group.mul(x, y)] !=
            q.group.mul(q.projection[x], q.projection[y])) {
          throw ConsistencyError("quotient projection is not a homomorphism");
        }
      }
    }
  }
  return q;
}

SubgroupHandle project(const Quotient& q, const SubgroupHandle& subgroup) {
  std::vector<Element> image;
  image.reserve(subgroup.size());
  for (Element x : subgroup.elements()) {
    image.push_back(q.projection[x]);
  }
  return {q.group, std::move(image)};
}

SubgroupHandle pull_back(const FiniteGroup& group, const Quotient& q,
                         const SubgroupHandle& image) {
  std::vector<Element> elems;
  for (Element x = 0; x < group.order(); ++x) {
    if (image.contains(q.projection[x])) {
      elems.push_back(x);
    }
  }
  return {group, std::move(elems)};
}

InducedGroup as_group(const SubgroupHandle& subgroup) {
  const FiniteGroup& parent = subgroup.parent();
  const auto& elems = subgroup.elements(); // sorted, identity first
  const std::size_t order = elems.size();
  std::vector<Element> local(parent.order(), 0);
  for (std::size_t i = 0; i < order; ++i) {
    local[elems[i]] = static_cast<Element>(i);
  }
  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      table[i * order + j] = local[parent.mul(elems[i], elems[j])];
    }
  }
  FiniteGroup::Labels labels;
  for (const auto& [label, e] : parent.labels()) {
    if (subgroup.contains(e)) {
      labels[label] = local[e];
    }
  }
  std::string name = parent.name() + ":H" + std::to_string(order);
  return {FiniteGroup(std::move(name), order, std::move(table), std::move(labels)), elems};
}

std::vector<SubgroupHandle> upper_central_series(const FiniteGroup& group) {
  std::vector<SubgroupHandle> series{SubgroupHandle::trivial(group)};
  while (true) {
    const SubgroupHandle& last = series.back();
    std::vector<Element> next;
    for (Element a = 0; a < group.order(); ++a) {
      bool ok = true;
      for (Element g = 0; g < group.order() && ok; ++g) {
        ok = last.contains(commutator(group, a, g));
      }
      if (ok) {
        next.push_back(a);
      }
    }
    if (next == last.elements()) {
      break;
    }
    series.emplace_back(group, std::move(next));
  }
  return series;
}

SubgroupHandle upper_central_term(const FiniteGroup& group, std::size_t k) {
  auto series = upper_central_series(group);
  return series[std::min(k, series.size() - 1)];
}

std::optional<std::size_t> nilpotency_class(const FiniteGroup& group) {
  const auto series = upper_central_series(group);
  if (series.back().is_whole()) {
    return series.size() - 1;
  }
  return std::nullopt;
}

} // namespace tensordeg
