#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here touches coset enumeration.

#include "tensordeg/group.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using tensordeg::Element;
using tensordeg::FiniteGroup;

// A small generating set: greedily add elements not in the span so far.
inline std::vector<Element> generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<char> in_span(g.order(), 0);
  in_span[0] = 1;
  for (Element x = 1; x < g.order(); ++x) {
    if (in_span[x]) {
      continue;
    }
    gens.push_back(x);
    std::vector<Element> span = tensordeg::subgroup_generated(g, gens).elements();
    for (Element y : span) {
      in_span[y] = 1;
    }
  }
  return gens;
}

// All homomorphisms G -> T, where T has `size` elements, identity 0 and
// multiplication `op`. Each is returned as a table x -> image.
inline std::vector<std::vector<std::size_t>>
homomorphisms(const FiniteGroup& g, std::size_t size,
              const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  const auto gens = generators(g);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    std::vector<std::optional<std::size_t>> phi(g.order());
    phi[0] = 0;
    std::vector<Element> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      const Element x = queue[i];
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        const Element y = g.mul(x, gens[k]);
        const std::size_t v = op(*phi[x], choice[k]);
        if (!phi[y]) {
          phi[y] = v;
          queue.push_back(y);
        } else {
          ok = *phi[y] == v;
        }
      }
    }
    if (ok) {
      std::vector<std::size_t> table;
      for (const auto& v : phi) {
        table.push_back(*v);
      }
      out.push_back(std::move(table));
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == size) {
      choice[k++] = 0;
    }
    if (k == choice.size()) {
      break;
    }
  }
  return out;
}

struct BilinearResult {
  std::size_t form_count = 0;      // = |G (x) G| for abelian G
  std::vector<char> trivial_pair;  // x*|G|+y -> every form vanishes on (x, y)
};

// For abelian G, G (x) G is the ordinary tensor product, whose dual is the
// group of bilinear forms G x G -> Z/e. Forms are homomorphisms G -> Hom(G, Z/e).
inline BilinearResult bilinear_forms(const FiniteGroup& g) {
  const std::size_t e = g.exponent();
  const auto chars = homomorphisms(g, e, [e](std::size_t a, std::size_t b) { return (a + b) % e; });
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    index[chars[i]] = i;
  }
  // chars[0] is the zero character: the all-zero assignment is enumerated first.
  auto add = [&](std::size_t a, std::size_t b) {
    std::vector<std::size_t> sum(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
      sum[x] = (chars[a][x] + chars[b][x]) % e;
    }
    return index.at(sum);
  };
  const auto forms = homomorphisms(g, chars.size(), add);
  BilinearResult r;
  r.form_count = forms.size();
  r.trivial_pair.assign(g.order() * g.order(), 1);
  for (const auto& phi : forms) {
    for (Element x = 0; x < g.order(); ++x) {
      for (Element y = 0; y < g.order(); ++y) {
        if (chars[phi[x]][y] != 0) {
          r.trivial_pair[x * g.order() + y] = 0;
        }
      }
    }
  }
  return r;
}

// Commuting-pair count straight from the table.
inline std::size_t commuting_pairs(const FiniteGroup& g) {
  std::size_t n = 0;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      n += g.mul(x, y) == g.mul(y, x) ? 1 : 0;
    }
  }
  return n;
}

} // namespace oracle
