#include "tensordeg/coset_enum.hpp"

#include "tensordeg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <set>
#include <stdexcept>

namespace tensordeg {

void Presentation::validate() const {
  for (const auto& r : relators) {
    if (r.empty()) {
      throw std::invalid_argument("presentation contains an empty relator");
    }
    for (Letter l : r) {
      const auto g = static_cast<std::size_t>(std::abs(l));
      if (l == 0 || g > generator_count) {
        throw std::invalid_argument("relator letter " + std::to_string(l) +
                                    " out of range for " + std::to_string(generator_count) +
                                    " generators");
      }
    }
  }
}

CosetTable::CosetTable(std::size_t generator_count, EnumerationStatus status,
                       std::size_t coset_count, std::vector<std::uint32_t> rows)
    : generator_count_(generator_count), status_(status), coset_count_(coset_count),
      rows_(std::move(rows)) {}

std::uint32_t CosetTable::act(std::size_t coset, Letter letter) const {
  const auto g = static_cast<std::size_t>(std::abs(letter)) - 1;
  return entry(coset, 2 * g + (letter < 0 ? 1 : 0));
}

void CosetTable::write_text(std::ostream& os) const {
  os << "# cosets=" << coset_count_ << " generators=" << generator_count_
     << " status=" << (completed() ? "completed" : "exceeded-limit") << '\n';
  if (!completed()) {
    return;
  }
  for (std::size_t c = 0; c < coset_count_; ++c) {
    os << std::setw(6) << c << " |";
    for (std::size_t g = 0; g < generator_count_; ++g) {
      os << ' ' << entry(c, 2 * g);
    }
    os << '\n';
  }
}

namespace {

using Column = std::uint32_t;
constexpr std::uint32_t kUndef = CosetTable::kUndefined;

Column to_column(Letter l) {
  const auto g = static_cast<Column>(std::abs(l) - 1);
  return 2 * g + (l < 0 ? 1U : 0U);
}

// Free and cyclic reduction, then a canonical representative of the set of
// cyclic rotations of w and w^-1. None of this changes the normal closure.
std::vector<std::vector<Column>> prepare_relators(const Presentation& p) {
  std::vector<std::vector<Column>> out;
  std::set<std::vector<Column>> seen;
  for (const auto& r : p.relators) {
    std::vector<Column> w;
    for (Letter l : r) {
      const Column c = to_column(l);
      if (!w.empty() && w.back() == (c ^ 1U)) {
        w.pop_back();
      } else {
        w.push_back(c);
      }
    }
    while (w.size() >= 2 && w.front() == (w.back() ^ 1U)) {
      w.pop_back();
      w.erase(w.begin());
    }
    if (w.empty()) {
      continue;
    }
    std::vector<Column> winv(w.rbegin(), w.rend());
    for (Column& c : winv) {
      c ^= 1U;
    }
    std::vector<Column> best = w;
    for (const auto* src : {&w, &winv}) {
      std::vector<Column> rot = *src;
      for (std::size_t i = 0; i < rot.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        best = std::min(best, rot);
      }
    }
    if (seen.insert(best).second) {
      out.push_back(std::move(w));
    }
  }
  return out;
}

class Enumerator {
public:
  Enumerator(std::size_t generator_count, std::size_t max_cosets)
      : columns_(2 * generator_count), max_cosets_(max_cosets) {
    table_.assign(columns_, kUndef);
    parent_.push_back(0);
    live_ = 1;
  }

  bool run(const std::vector<std::vector<Column>>& relators) {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) {
        continue;
      }
      for (const auto& r : relators) {
        scan_and_fill(static_cast<std::uint32_t>(c), r);
        if (overflow_) {
          return false;
        }
        if (!alive(c)) {
          break;
        }
      }
      if (!alive(c)) {
        continue;
      }
      for (Column x = 0; x < columns_; ++x) {
        if (at(c, x) == kUndef && !define(static_cast<std::uint32_t>(c), x)) {
          return false;
        }
      }
    }
    return true;
  }

  // Renumbers live cosets densely, preserving order (coset 0 stays 0).
  std::pair<std::size_t, std::vector<std::uint32_t>> compact() const {
    std::vector<std::uint32_t> renumber(parent_.size(), kUndef);
    std::uint32_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (alive(c)) {
        renumber[c] = next++;
      }
    }
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(next) * columns_, kUndef);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) {
        continue;
      }
      for (Column x = 0; x < columns_; ++x) {
        const std::uint32_t v = at(c, x);
        rows[static_cast<std::size_t>(renumber[c]) * columns_ + x] =
            v == kUndef ? kUndef : renumber[v];
      }
    }
    return {next, std::move(rows)};
  }

private:
  [[nodiscard]] bool alive(std::size_t c) const { return parent_[c] == c; }
  std::uint32_t& at(std::size_t c, Column x) { return table_[c * columns_ + x]; }
  [[nodiscard]] std::uint32_t at(std::size_t c, Column x) const { return table_[c * columns_ + x]; }

  bool define(std::uint32_t c, Column x) {
    if (live_ >= max_cosets_) {
      overflow_ = true;
      return false;
    }
    const auto d = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(d);
    table_.resize(table_.size() + columns_, kUndef);
    ++live_;
    at(c, x) = d;
    at(d, x ^ 1U) = c;
    return true;
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t root = c;
    while (parent_[root] != root) {
      root = parent_[root];
    }
    while (parent_[c] != root) {
      const std::uint32_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) {
      return;
    }
    if (a > b) {
      std::swap(a, b);
    }
    parent_[b] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::uint32_t e = queue_[i];
      for (Column x = 0; x < columns_; ++x) {
        const std::uint32_t f = at(e, x);
        if (f == kUndef) {
          continue;
        }
        at(f, x ^ 1U) = kUndef;
        const std::uint32_t mu = rep(e);
        const std::uint32_t nu = rep(f);
        if (at(mu, x) != kUndef) {
          merge(nu, at(mu, x));
        } else if (at(nu, x ^ 1U) != kUndef) {
          merge(mu, at(nu, x ^ 1U));
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1U) = mu;
        }
      }
    }
    queue_.clear();
  }

  void scan_and_fill(std::uint32_t c, const std::vector<Column>& w) {
    std::uint32_t f = c;
    std::uint32_t b = c;
    std::size_t i = 0;
    std::size_t j = w.size(); // one past the last unscanned letter
    while (true) {
      while (i < j && at(f, w[i]) != kUndef) {
        f = at(f, w[i]);
        ++i;
      }
      if (i == j) {
        if (f != b) {
          coincidence(f, b);
        }
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1U) != kUndef) {
        b = at(b, w[j - 1] ^ 1U);
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1U) = f;
        return;
      }
      if (!define(f, w[i])) {
        return;
      }
    }
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
  std::size_t live_ = 0;
  bool overflow_ = false;
};

void verify_table(const Presentation& p, std::size_t n, const std::vector<std::uint32_t>& rows) {
  const std::size_t cols = 2 * p.generator_count;
  std::vector<std::uint8_t> hit(n);
  for (std::size_t x = 0; x < cols; ++x) {
    std::fill(hit.begin(), hit.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint32_t d = rows[c * cols + x];
      if (d == kUndef || d >= n || hit[d]) {
        throw ConsistencyError("coset table column " + std::to_string(x) +
                               " is not a permutation");
      }
      hit[d] = 1;
      if (rows[d * cols + (x ^ 1U)] != c) {
        throw ConsistencyError("coset table inverse columns disagree");
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& r : p.relators) {
      std::size_t d = c;
      for (Letter l : r) {
        d = rows[d * cols + to_column(l)];
      }
      if (d != c) {
        throw ConsistencyError("relator does not close at coset " + std::to_string(c));
      }
    }
  }
}

} // namespace

CosetTable todd_coxeter(const Presentation& presentation, std::size_t max_cosets) {
  if (max_cosets == 0) {
    throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
  }
  presentation.validate();
  const auto relators = prepare_relators(presentation);
  Enumerator e(presentation.generator_count, max_cosets);
  if (!e.run(relators)) {
    return {presentation.generator_count, EnumerationStatus::exceeded_limit, 0, {}};
  }
  auto [n, rows] = e.compact();
  verify_table(presentation, n, rows);
  return {presentation.generator_count, EnumerationStatus::completed, n, std::move(rows)};
}

std::uint32_t generator_element(const CosetTable& table, std::size_t generator) {
  if (!table.completed()) {
    throw StateError("generator_element: coset table is not complete");
  }
  if (generator >= table.generator_count()) {
    throw std::out_of_range("generator_element: generator index out of range");
  }
  return table.entry(0, 2 * generator);
}

Presentation tensor_square_presentation(const FiniteGroup& group, std::size_t max_order) {
  const std::size_t n = group.order();
  if (n > max_order) {
    throw LimitError("tensor-square presentation for " + group.name() + " (order " +
                     std::to_string(n) + ") exceeds the bound " + std::to_string(max_order));
  }
  Presentation p;
  p.generator_count = n * n;
  p.relators.reserve(2 * n * n * n);
  auto sym = [n](Element a, Element b) { return gen_letter(pair_generator(n, a, b)); };
  auto sym_inv = [n](Element a, Element b) { return inv_letter(pair_generator(n, a, b)); };
  for (Element g = 0; g < n; ++g) {
    for (Element g2 = 0; g2 < n; ++g2) {
      for (Element m = 0; m < n; ++m) {
        // gg' (x) n = (g g' g^-1 (x) g n g^-1)(g (x) n)
        p.relators.push_back({sym_inv(group.mul(g, g2), m),
                              sym(conjugate(group, g, g2), conjugate(group, g, m)), sym(g, m)});
      }
    }
  }
  for (Element g = 0; g < n; ++g) {
    for (Element m = 0; m < n; ++m) {
      for (Element m2 = 0; m2 < n; ++m2) {
        // g (x) nn' = (g (x) n)(n g n^-1 (x) n n' n^-1)
        p.relators.push_back({sym_inv(g, group.mul(m, m2)), sym(g, m),
                              sym(conjugate(group, m, g), conjugate(group, m, m2))});
      }
    }
  }
  return p;
}

} // namespace tensordeg
