#pragma once

#include "tensordeg/group.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace tensordeg {

/// A letter is a signed, 1-based generator reference: +(g+1) is generator g,
/// -(g+1) its inverse.
using Letter = std::int32_t;
using RelatorWord = std::vector<Letter>;

constexpr Letter gen_letter(std::size_t g) { return static_cast<Letter>(g + 1); }
constexpr Letter inv_letter(std::size_t g) { return -static_cast<Letter>(g + 1); }

/// Finitely presented group <x_0, ..., x_{k-1} | relators>.
struct Presentation {
  std::size_t generator_count = 0;
  std::vector<RelatorWord> relators;

  /// Throws std::invalid_argument on out-of-range letters or empty relators.
  void validate() const;
};

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

enum class EnumerationStatus { completed, exceeded_limit };

/// Coset table over the trivial subgroup. Column 2g is generator g, 2g+1 its
/// inverse. When completed, coset 0 is the identity coset and the table is
/// the right regular representation of the presented group.
class CosetTable {
public:
  static constexpr std::uint32_t kUndefined = ~std::uint32_t{0};

  CosetTable(std::size_t generator_count, EnumerationStatus status, std::size_t coset_count,
             std::vector<std::uint32_t> rows);

  [[nodiscard]] EnumerationStatus status() const noexcept { return status_; }
  [[nodiscard]] bool completed() const noexcept { return status_ == EnumerationStatus::completed; }
  [[nodiscard]] std::size_t coset_count() const noexcept { return coset_count_; }
  [[nodiscard]] std::size_t generator_count() const noexcept { return generator_count_; }
  [[nodiscard]] std::size_t column_count() const noexcept { return 2 * generator_count_; }

  /// Image of `coset` under column `column`; kUndefined if not set.
  [[nodiscard]] std::uint32_t entry(std::size_t coset, std::size_t column) const {
    return rows_[coset * column_count() + column];
  }
  /// Image of `coset` under a letter.
  [[nodiscard]] std::uint32_t act(std::size_t coset, Letter letter) const;

  /// Debug dump: one line per coset, one column per generator (inverses omitted).
  void write_text(std::ostream& os) const;

private:
  std::size_t generator_count_;
  EnumerationStatus status_;
  std::size_t coset_count_;
  std::vector<std::uint32_t> rows_;
};

/// HLT coset enumeration over the trivial subgroup with immediate coincidence
/// processing. Deterministic. Returns a table with status exceeded_limit if
/// the number of live cosets would pass `max_cosets`.
CosetTable todd_coxeter(const Presentation& presentation,
                        std::size_t max_cosets = kDefaultMaxCosets);

/// Group element represented by a generator: the row-0 image of its column.
/// Zero iff the generator is trivial. Throws StateError on an incomplete table.
std::uint32_t generator_element(const CosetTable& table, std::size_t generator);

/// Generator index used for the pair (g, n) in tensor_square_presentation.
constexpr std::size_t pair_generator(std::size_t order, Element g, Element n) {
  return static_cast<std::size_t>(g) * order + n;
}

inline constexpr std::size_t kMaxTensorPresentationOrder = 32;

/// Presentation of G (x) G on all |G|^2 symbols g(x)n with the 2|G|^3
/// defining relators
///   (gg'(x)n)^-1 (gg'g^-1 (x) gng^-1) (g(x)n)
///   (g(x)nn')^-1 (g(x)n) (ngn^-1 (x) nn'n^-1).
Presentation tensor_square_presentation(const FiniteGroup& group,
                                        std::size_t max_order = kMaxTensorPresentationOrder);

} // namespace tensordeg
