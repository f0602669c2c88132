#pragma once

#include "tensordeg/coset_enum.hpp"
#include "tensordeg/group.hpp"

#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace tensordeg {

/// The nonabelian tensor square G (x) G realized by coset enumeration.
///
/// `trivial(x, y)` is true iff x (x) y is the identity of G (x) G;
/// `element(x, y)` is the index of x (x) y in the enumerated group.
class TensorSquareData {
public:
  TensorSquareData(const FiniteGroup& parent, std::size_t order,
                   std::vector<std::uint32_t> element_of_pair);

  [[nodiscard]] const FiniteGroup& parent() const noexcept { return *parent_; }
  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] bool trivial(Element x, Element y) const noexcept {
    return element_of_pair_[static_cast<std::size_t>(x) * parent_->order() + y] == 0;
  }
  [[nodiscard]] std::uint32_t element(Element x, Element y) const noexcept {
    return element_of_pair_[static_cast<std::size_t>(x) * parent_->order() + y];
  }
  /// |C^(x)(x)| = number of a with a (x) x = 1.
  [[nodiscard]] std::size_t centralizer_size(Element x) const noexcept {
    return centralizer_sizes_[x];
  }
  [[nodiscard]] const std::vector<std::uint32_t>& element_of_pair() const noexcept {
    return element_of_pair_;
  }

  /// Same data attached to another group with an identical multiplication table.
  [[nodiscard]] TensorSquareData rebind(const FiniteGroup& parent) const;

private:
  const FiniteGroup* parent_;
  std::size_t order_;
  std::vector<std::uint32_t> element_of_pair_;
  std::vector<std::size_t> centralizer_sizes_;
};

/// Builds the presentation, enumerates it, and reads off pair triviality.
/// Throws LimitError naming the group if enumeration exceeds `max_cosets`.
TensorSquareData tensor_square(const FiniteGroup& group,
                               std::size_t max_cosets = kDefaultMaxCosets);

/// {a : a (x) x = 1}. Throws ConsistencyError if the set is not a subgroup.
SubgroupHandle tensor_centralizer(const FiniteGroup& group, const TensorSquareData& tensor,
                                  Element x);

/// Intersection of all tensor centralizers.
SubgroupHandle tensor_center(const FiniteGroup& group, const TensorSquareData& tensor);

/// |J2(G)| = |ker(kappa)| = |G (x) G| / |G'|.
std::size_t j2_order(const FiniteGroup& group, const TensorSquareData& tensor);

/// n-th term of the tensor upper central series (n >= 1), computed as the
/// pre-image of Z_{n-1}(G / Z^(x)(G)). For n <= 3 the defining condition
///   [a, x_1, ..., x_{n-1}] (x) x_n = 1 for all x_i
/// is also evaluated exhaustively and must agree.
SubgroupHandle tensor_upper_central(const FiniteGroup& group, const TensorSquareData& tensor,
                                    std::size_t n);

/// Z^(x)_n evaluated straight from the defining condition (cost |G|^(n+1)).
SubgroupHandle tensor_upper_central_direct(const FiniteGroup& group,
                                           const TensorSquareData& tensor, std::size_t n);

/// Z^(x)_1, Z^(x)_2, ... up to the first repeated term.
std::vector<SubgroupHandle> tensor_upper_central_series(const FiniteGroup& group,
                                                        const TensorSquareData& tensor);

/// Smallest c >= 0 with Z^(x)_c(G) = G (Z^(x)_0 = 1); empty if never reached.
std::optional<std::size_t> tensor_class(const FiniteGroup& group, const TensorSquareData& tensor);

/// Memo of tensor squares keyed by multiplication table. Safe for concurrent
/// use; each distinct table is enumerated once.
class TensorSquareCache {
public:
  explicit TensorSquareCache(std::size_t max_cosets = kDefaultMaxCosets)
      : max_cosets_(max_cosets) {}

  /// Tensor square of `group` (rebound to it). Rethrows LimitError.
  TensorSquareData get(const FiniteGroup& group);

  [[nodiscard]] std::size_t max_cosets() const noexcept { return max_cosets_; }
  [[nodiscard]] std::size_t size() const;

private:
  struct Entry {
    std::size_t order;
    std::vector<std::uint32_t> element_of_pair;
  };

  std::size_t max_cosets_;
  mutable std::mutex mutex_;
  std::map<std::vector<Element>, std::shared_future<Entry>> entries_;
};

} // namespace tensordeg
