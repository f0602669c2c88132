#pragma once

#include "tensordeg/group.hpp"
#include "tensordeg/rational.hpp"
#include "tensordeg/tensor.hpp"

#include <cstddef>
#include <vector>

namespace tensordeg {

/// d(H, G): probability that a uniform (h, g) in H x G commutes.
ExactRational rel_comm_degree(const FiniteGroup& group, const SubgroupHandle& subgroup);

/// d(G) = d(G, G).
ExactRational comm_degree(const FiniteGroup& group);

/// d(N) for a subgroup N taken as a group in its own right (pairs from N x N).
ExactRational comm_degree(const SubgroupHandle& subgroup);

/// Multiset of left-normed commutators [h_1, ..., h_n] over H^n, indexed by
/// element of the parent group.
struct CommutatorDistribution {
  std::size_t n = 0;
  std::vector<BigInt> counts;

  [[nodiscard]] BigInt total() const;
};

/// Level-by-level recurrence: c_1 = indicator of H, and
/// c_{k+1}(w) = sum_v c_k(v) * #{h in H : [v, h] = w}.
CommutatorDistribution commutator_distribution(const FiniteGroup& group,
                                               const SubgroupHandle& subgroup, std::size_t n);

/// Relative n-tensor nilpotent degree
///   #{(h_1..h_n, g) in H^n x G : [h_1, ..., h_n] (x) g = 1} / (|H|^n |G|),
/// computed as sum_v c_n(v) |C^(x)(v)| / (|H|^n |G|).
ExactRational rel_n_tensor_degree(const FiniteGroup& group, const TensorSquareData& tensor,
                                  const SubgroupHandle& subgroup, std::size_t n);

/// d_n^(x)(G) = rel_n_tensor_degree with H = G.
ExactRational n_tensor_degree(const FiniteGroup& group, const TensorSquareData& tensor,
                              std::size_t n);

/// d^(x)(G) = probability that x (x) y = 1.
ExactRational tensor_degree(const FiniteGroup& group, const TensorSquareData& tensor);

inline constexpr std::size_t kNaiveTupleGuard = 10'000'000;

/// Direct tuple enumeration of the same ratio; oracle for rel_n_tensor_degree.
/// Throws LimitError if |H|^n |G| exceeds `guard`.
ExactRational rel_n_tensor_degree_naive(const FiniteGroup& group, const TensorSquareData& tensor,
                                        const SubgroupHandle& subgroup, std::size_t n,
                                        std::size_t guard = kNaiveTupleGuard);

} // namespace tensordeg
