#include "tensordeg/tensor.hpp"

#include "tensordeg/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace tensordeg {

TensorSquareData::TensorSquareData(const FiniteGroup& parent, std::size_t order,
                                   std::vector<std::uint32_t> element_of_pair)
    : parent_(&parent), order_(order), element_of_pair_(std::move(element_of_pair)),
      centralizer_sizes_(parent.order(), 0) {
  const std::size_t n = parent.order();
  if (element_of_pair_.size() != n * n) {
    throw std::invalid_argument("TensorSquareData: pair map has the wrong size");
  }
  for (Element x = 0; x < n; ++x) {
    for (Element a = 0; a < n; ++a) {
      centralizer_sizes_[x] += trivial(a, x) ? 1 : 0;
    }
  }
}

TensorSquareData TensorSquareData::rebind(const FiniteGroup& parent) const {
  if (parent.order() != parent_->order()) {
    throw std::invalid_argument("TensorSquareData::rebind: order mismatch");
  }
  return {parent, order_, element_of_pair_};
}

TensorSquareData tensor_square(const FiniteGroup& group, std::size_t max_cosets) {
  const Presentation p = tensor_square_presentation(group);
  const CosetTable table = todd_coxeter(p, max_cosets);
  if (!table.completed()) {
    throw LimitError("tensor square of " + group.name() + " exceeded " +
                     std::to_string(max_cosets) + " cosets");
  }
  const std::size_t n = group.order();
  std::vector<std::uint32_t> pairs(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      pairs[pair_generator(n, x, y)] = generator_element(table, pair_generator(n, x, y));
    }
  }
  return {group, table.coset_count(), std::move(pairs)};
}

SubgroupHandle tensor_centralizer(const FiniteGroup& group, const TensorSquareData& tensor,
                                  Element x) {
  std::vector<Element> elems;
  for (Element a = 0; a < group.order(); ++a) {
    if (tensor.trivial(a, x)) {
      elems.push_back(a);
    }
  }
  try {
    return {group, std::move(elems)};
  } catch (const std::invalid_argument& e) {
    throw ConsistencyError("tensor centralizer of element " + std::to_string(x) + " in " +
                           group.name() + " is not a subgroup: " + e.what());
  }
}

SubgroupHandle tensor_center(const FiniteGroup& group, const TensorSquareData& tensor) {
  std::vector<Element> elems;
  for (Element a = 0; a < group.order(); ++a) {
    bool all = true;
    for (Element x = 0; x < group.order() && all; ++x) {
      all = tensor.trivial(a, x);
    }
    if (all) {
      elems.push_back(a);
    }
  }
  try {
    return {group, std::move(elems)};
  } catch (const std::invalid_argument& e) {
    throw ConsistencyError("tensor center of " + group.name() + " is not a subgroup: " + e.what());
  }
}

std::size_t j2_order(const FiniteGroup& group, const TensorSquareData& tensor) {
  const std::size_t derived = derived_subgroup(group).size();
  if (tensor.order() % derived != 0) {
    throw ConsistencyError("|G(x)G| = " + std::to_string(tensor.order()) +
                           " is not divisible by |G'| = " + std::to_string(derived) + " for " +
                           group.name());
  }
  return tensor.order() / derived;
}

SubgroupHandle tensor_upper_central_direct(const FiniteGroup& group,
                                           const TensorSquareData& tensor, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("tensor_upper_central_direct: n must be >= 1");
  }
  const std::size_t order = group.order();
  std::vector<Element> elems;
  std::vector<Element> xs(n - 1);
  for (Element a = 0; a < order; ++a) {
    // Odometer over (x_1, ..., x_{n-1}); x_n is scanned directly.
    std::fill(xs.begin(), xs.end(), 0);
    bool ok = true;
    while (ok) {
      Element c = a;
      for (Element x : xs) {
        c = commutator(group, c, x);
      }
      for (Element last = 0; last < order && ok; ++last) {
        ok = tensor.trivial(c, last);
      }
      std::size_t k = 0;
      while (k < xs.size() && ++xs[k] == order) {
        xs[k++] = 0;
      }
      if (k == xs.size()) {
        break;
      }
    }
    if (ok) {
      elems.push_back(a);
    }
  }
  return {group, std::move(elems)};
}

SubgroupHandle tensor_upper_central(const FiniteGroup& group, const TensorSquareData& tensor,
                                    std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("tensor_upper_central: n must be >= 1");
  }
  const SubgroupHandle zt = tensor_center(group, tensor);
  const Quotient q = quotient(group, zt);
  const SubgroupHandle image = upper_central_term(q.group, n - 1);
  SubgroupHandle result = pull_back(group, q, image);
  if (n <= 3) {
    const SubgroupHandle direct = tensor_upper_central_direct(group, tensor, n);
    if (!(direct.elements() == result.elements())) {
      Element witness = 0;
      for (Element a = 0; a < group.order(); ++a) {
        if (direct.contains(a) != result.contains(a)) {
          witness = a;
          break;
        }
      }
      throw ConsistencyError("tensor upper central term " + std::to_string(n) + " of " +
                             group.name() + ": pull-back and direct definition disagree at element " +
                             std::to_string(witness));
    }
  }
  return result;
}

std::vector<SubgroupHandle> tensor_upper_central_series(const FiniteGroup& group,
                                                        const TensorSquareData& tensor) {
  std::vector<SubgroupHandle> series;
  for (std::size_t n = 1;; ++n) {
    SubgroupHandle term = tensor_upper_central(group, tensor, n);
    if (!series.empty() && series.back().elements() == term.elements()) {
      break;
    }
    series.push_back(std::move(term));
  }
  return series;
}

std::optional<std::size_t> tensor_class(const FiniteGroup& group, const TensorSquareData& tensor) {
  if (group.order() == 1) {
    return 0;
  }
  const auto series = tensor_upper_central_series(group, tensor);
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i].is_whole()) {
      return i + 1;
    }
  }
  return std::nullopt;
}

TensorSquareData TensorSquareCache::get(const FiniteGroup& group) {
  std::shared_future<Entry> future;
  bool owner = false;
  std::promise<Entry> promise;
  {
    const std::lock_guard lock(mutex_);
    const std::vector<Element> key(group.table().begin(), group.table().end());
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      future = promise.get_future().share();
      entries_.emplace(key, future);
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    try {
      TensorSquareData data = tensor_square(group, max_cosets_);
      promise.set_value(Entry{data.order(), data.element_of_pair()});
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  const Entry& entry = future.get();
  return {group, entry.order, entry.element_of_pair};
}

std::size_t TensorSquareCache::size() const {
  const std::lock_guard lock(mutex_);
  return entries_.size();
}

} // namespace tensordeg
