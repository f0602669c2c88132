#include "tensordeg/group.hpp"

#include "tensordeg/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tensordeg {

namespace {

using Perm = std::vector<std::uint8_t>;

bool is_even(const Perm& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      inversions += p[i] > p[j] ? 1 : 0;
    }
  }
  return inversions % 2 == 0;
}

// Permutations act on the left: (p*q)(i) = p(q(i)).
FiniteGroup from_permutations(std::string name, const std::vector<Perm>& perms,
                              const std::vector<std::pair<std::string, Perm>>& named) {
  const std::size_t order = perms.size();
  auto index_of = [&](const Perm& p) {
    const auto it = std::lower_bound(perms.begin(), perms.end(), p);
    return static_cast<Element>(it - perms.begin());
  };
  std::vector<Element> table(order * order);
  Perm product(perms.front().size());
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      for (std::size_t i = 0; i < product.size(); ++i) {
        product[i] = perms[x][perms[y][i]];
      }
      table[x * order + y] = index_of(product);
    }
  }
  FiniteGroup::Labels labels;
  for (const auto& [label, p] : named) {
    labels[label] = index_of(p);
  }
  return FiniteGroup(std::move(name), order, std::move(table), std::move(labels));
}

Perm cycle(std::size_t degree, std::initializer_list<std::uint8_t> points) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  const std::vector<std::uint8_t> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    p[pts[i]] = pts[(i + 1) % pts.size()];
  }
  return p;
}

Perm long_cycle(std::size_t degree, std::size_t first) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  for (std::size_t i = first; i < degree; ++i) {
    p[i] = static_cast<std::uint8_t>(i + 1 < degree ? i + 1 : first);
  }
  return p;
}

FiniteGroup symmetric_like(std::size_t m, bool alternating) {
  Perm p(m);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<Perm> perms;
  do {
    if (!alternating || is_even(p)) {
      perms.push_back(p);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  // next_permutation from the sorted start yields lexicographic order with
  // the identity first, which is what from_permutations expects.
  std::vector<std::pair<std::string, Perm>> named;
  if (!alternating) {
    if (m >= 2) {
      named.emplace_back("a", long_cycle(m, 0));
      named.emplace_back("b", cycle(m, {0, 1}));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          named.emplace_back("t" + std::to_string(i + 1) + std::to_string(j + 1),
                             cycle(m, {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}));
        }
      }
    }
  } else if (m >= 3) {
    named.emplace_back("a", cycle(m, {0, 1, 2}));
    if (m >= 4) {
      named.emplace_back("b", m % 2 == 1 ? long_cycle(m, 0) : long_cycle(m, 1));
    }
  }
  return from_permutations((alternating ? "A" : "S") + std::to_string(m), perms, named);
}

bool is_prime(std::size_t n) {
  return n >= 2 && smallest_prime_divisor(n) == n;
}

} // namespace

FiniteGroup build_named(Family family, std::size_t parameter, std::size_t max_order) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) {
      throw InvalidSpec(what);
    }
  };
  auto check_order = [&](std::size_t order, const std::string& name) {
    if (order > max_order) {
      throw LimitError(name + " has order " + std::to_string(order) + ", above the limit " +
                       std::to_string(max_order));
    }
  };

  switch (family) {
  case Family::cyclic: {
    const std::size_t n = parameter;
    require(n >= 1, "cyclic group needs order >= 1");
    const std::string name = "C" + std::to_string(n);
    check_order(n, name);
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        table[x * n + y] = static_cast<Element>((x + y) % n);
      }
    }
    FiniteGroup::Labels labels;
    if (n > 1) {
      labels["a"] = 1;
    }
    return FiniteGroup(name, n, std::move(table), std::move(labels));
  }
  case Family::dihedral: {
    // Elements a^i b^j stored at i + m*j; (a^i b^j)(a^k b^l) = a^(i + (-1)^j k) b^(j+l).
    const std::size_t order = parameter;
    require(order >= 4 && order % 2 == 0,
            "dihedral group D" + std::to_string(order) + " needs an even order >= 4");
    const std::string name = "D" + std::to_string(order);
    check_order(order, name);
    const std::size_t m = order / 2;
    std::vector<Element> table(order * order);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
        const std::size_t rot = j == 0 ? (i + k) % m : (i + m - k) % m;
        table[x * order + y] = static_cast<Element>(rot + m * ((j + l) % 2));
      }
    }
    return FiniteGroup(name, order, std::move(table),
                       {{"a", static_cast<Element>(1)}, {"b", static_cast<Element>(m)}});
  }
  case Family::quaternion: {
    // Generalized quaternion: a of order 2m, b^2 = a^m, b a b^-1 = a^-1.
    const std::size_t order = parameter;
    require(order == 8 || order == 16,
            "quaternion group Q" + std::to_string(order) + " unsupported (use Q8 or Q16)");
    const std::string name = "Q" + std::to_string(order);
    check_order(order, name);
    const std::size_t m2 = order / 2; // order of a
    const std::size_t m = m2 / 2;
    std::vector<Element> table(order * order);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        const std::size_t i = x % m2, j = x / m2, k = y % m2, l = y / m2;
        std::size_t rot = 0;
        std::size_t bpart = 0;
        if (j == 0) {
          rot = (i + k) % m2;
          bpart = l;
        } else if (l == 0) {
          rot = (i + m2 - k) % m2;
          bpart = 1;
        } else {
          rot = (i + m2 - k + m) % m2;
          bpart = 0;
        }
        table[x * order + y] = static_cast<Element>(rot + m2 * bpart);
      }
    }
    return FiniteGroup(name, order, std::move(table),
                       {{"a", static_cast<Element>(1)}, {"b", static_cast<Element>(m2)}});
  }
  case Family::symmetric:
  case Family::alternating: {
    const bool alt = family == Family::alternating;
    const std::string name = (alt ? "A" : "S") + std::to_string(parameter);
    require(parameter >= 1 && parameter <= 5, name + " unsupported (degree must be 1..5)");
    std::size_t order = 1;
    for (std::size_t i = 2; i <= parameter; ++i) {
      order *= i;
    }
    if (alt && parameter >= 2) {
      order /= 2;
    }
    check_order(order, name);
    return symmetric_like(parameter, alt);
  }
  case Family::elementary_abelian: {
    const std::size_t q = parameter;
    const auto p = smallest_prime_divisor(q);
    std::size_t k = 0;
    if (p) {
      for (std::size_t r = q; r > 1 && r % *p == 0; r /= *p) {
        ++k;
      }
    }
    std::size_t check = 1;
    for (std::size_t i = 0; i < k; ++i) {
      check *= p.value_or(1);
    }
    require(p.has_value() && is_prime(*p) && check == q,
            "elementary abelian group needs a prime power order, got " + std::to_string(q));
    const std::string name = "E" + std::to_string(*p) + "^" + std::to_string(k);
    check_order(q, name);
    // Element index = base-p digit vector, first coordinate most significant.
    std::vector<Element> table(q * q);
    for (std::size_t x = 0; x < q; ++x) {
      for (std::size_t y = 0; y < q; ++y) {
        std::size_t sum = 0, place = 1, a = x, b = y;
        for (std::size_t i = 0; i < k; ++i) {
          sum += ((a % *p + b % *p) % *p) * place;
          a /= *p;
          b /= *p;
          place *= *p;
        }
        table[x * q + y] = static_cast<Element>(sum);
      }
    }
    FiniteGroup::Labels labels;
    std::size_t place = 1;
    for (std::size_t i = 0; i < k; ++i) {
      place = 1;
      for (std::size_t j = 0; j + 1 < k - i; ++j) {
        place *= *p;
      }
      labels[std::string(1, static_cast<char>('a' + i))] = static_cast<Element>(place);
    }
    return FiniteGroup(name, q, std::move(table), std::move(labels));
  }
  }
  throw InvalidSpec("unknown group family");
}

} // namespace tensordeg
