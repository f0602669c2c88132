#include "tensordeg/degrees.hpp"

#include "tensordeg/errors.hpp"

#include <stdexcept>

namespace tensordeg {

ExactRational rel_comm_degree(const FiniteGroup& group, const SubgroupHandle& subgroup) {
  std::size_t commuting = 0;
  for (Element h : subgroup.elements()) {
    for (Element g = 0; g < group.order(); ++g) {
      commuting += group.mul(h, g) == group.mul(g, h) ? 1 : 0;
    }
  }
  return {BigInt(commuting), BigInt(subgroup.size() * group.order())};
}

ExactRational comm_degree(const FiniteGroup& group) {
  return rel_comm_degree(group, SubgroupHandle::whole(group));
}

ExactRational comm_degree(const SubgroupHandle& subgroup) {
  const FiniteGroup& group = subgroup.parent();
  std::size_t commuting = 0;
  for (Element x : subgroup.elements()) {
    for (Element y : subgroup.elements()) {
      commuting += group.mul(x, y) == group.mul(y, x) ? 1 : 0;
    }
  }
  return {BigInt(commuting), BigInt(subgroup.size() * subgroup.size())};
}

BigInt CommutatorDistribution::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) {
    sum += c;
  }
  return sum;
}

CommutatorDistribution commutator_distribution(const FiniteGroup& group,
                                               const SubgroupHandle& subgroup, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("commutator_distribution: n must be >= 1");
  }
  const std::size_t order = group.order();
  CommutatorDistribution dist{n, std::vector<BigInt>(order, 0)};
  for (Element h : subgroup.elements()) {
    dist.counts[h] = 1;
  }
  // row[v] lists [v, h] for h in H; only v in H is ever reached.
  std::vector<std::vector<Element>> row(order);
  for (Element v : subgroup.elements()) {
    row[v].reserve(subgroup.size());
    for (Element h : subgroup.elements()) {
      row[v].push_back(commutator(group, v, h));
    }
  }
  for (std::size_t level = 1; level < n; ++level) {
    std::vector<BigInt> next(order, 0);
    for (Element v : subgroup.elements()) {
      if (dist.counts[v] == 0) {
        continue;
      }
      for (Element w : row[v]) {
        next[w] += dist.counts[v];
      }
    }
    dist.counts = std::move(next);
  }
  return dist;
}

ExactRational rel_n_tensor_degree(const FiniteGroup& group, const TensorSquareData& tensor,
                                  const SubgroupHandle& subgroup, std::size_t n) {
  const CommutatorDistribution dist = commutator_distribution(group, subgroup, n);
  BigInt hits = 0;
  for (Element v = 0; v < group.order(); ++v) {
    if (dist.counts[v] != 0) {
      hits += dist.counts[v] * tensor.centralizer_size(v);
    }
  }
  const BigInt total = pow_int(subgroup.size(), static_cast<unsigned>(n)) * group.order();
  return {hits, total};
}

ExactRational n_tensor_degree(const FiniteGroup& group, const TensorSquareData& tensor,
                              std::size_t n) {
  return rel_n_tensor_degree(group, tensor, SubgroupHandle::whole(group), n);
}

ExactRational tensor_degree(const FiniteGroup& group, const TensorSquareData& tensor) {
  return n_tensor_degree(group, tensor, 1);
}

ExactRational rel_n_tensor_degree_naive(const FiniteGroup& group, const TensorSquareData& tensor,
                                        const SubgroupHandle& subgroup, std::size_t n,
                                        std::size_t guard) {
  if (n == 0) {
    throw std::invalid_argument("rel_n_tensor_degree_naive: n must be >= 1");
  }
  const BigInt tuples = pow_int(subgroup.size(), static_cast<unsigned>(n)) * group.order();
  if (tuples > guard) {
    throw LimitError("naive enumeration of " + tuples.str() + " tuples exceeds the guard " +
                     std::to_string(guard));
  }
  const auto& hs = subgroup.elements();
  std::vector<std::size_t> idx(n, 0);
  std::vector<Element> tuple(n);
  std::size_t hits = 0;
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      tuple[i] = hs[idx[i]];
    }
    const Element c = iterated_commutator(group, tuple);
    for (Element g = 0; g < group.order(); ++g) {
      hits += tensor.trivial(c, g) ? 1 : 0;
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] == hs.size()) {
      idx[k++] = 0;
    }
    if (k == n) {
      break;
    }
  }
  return {BigInt(hits), tuples};
}

} // namespace tensordeg
