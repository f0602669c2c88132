#include "tensordeg/errors.hpp"
#include "tensordeg/group_spec.hpp"
#include "tensordeg/verify.hpp"

#include <istream>

namespace tensordeg {

namespace {

struct BuiltinSpec {
  const char* spec;
  std::size_t order;
};

// Fixed corpus order: cyclic groups, abelian products, dihedral, quaternion,
// then symmetric/alternating and a few nonabelian products.
// E2^4 is left out on purpose: its tensor square has 65536 elements.
constexpr BuiltinSpec kBuiltin[] = {
    {"C1", 1},       {"C2", 2},        {"C3", 3},        {"C4", 4},       {"C5", 5},
    {"C6", 6},       {"C7", 7},        {"C8", 8},        {"C9", 9},       {"C10", 10},
    {"C11", 11},     {"C12", 12},      {"C13", 13},      {"C14", 14},     {"C15", 15},
    {"C16", 16},     {"C2xC2", 4},     {"C2xC4", 8},     {"C2xC2xC2", 8}, {"C3xC3", 9},
    {"C2xC6", 12},   {"C2xC8", 16},    {"C4xC4", 16},    {"D8", 8},       {"D10", 10},
    {"D12", 12},     {"D14", 14},      {"D16", 16},      {"Q8", 8},       {"Q16", 16},
    {"S3", 6},       {"A4", 12},       {"C2xD8", 16},    {"C2xQ8", 16},   {"S4", 24},
};

} // namespace

std::vector<std::string> builtin_corpus_specs(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& b : kBuiltin) {
    if (b.order <= max_order) {
      out.emplace_back(b.spec);
    }
  }
  return out;
}

Corpus make_corpus(const std::vector<std::string>& specs, std::size_t max_order,
                   TensorSquareCache& cache) {
  Corpus corpus;
  corpus.reserve(specs.size());
  for (const auto& text : specs) {
    const GroupSpec spec = parse_group_spec(text);
    CorpusEntry entry;
    entry.spec = render(spec);
    entry.group = std::make_shared<const FiniteGroup>(build_group(spec, max_order));
    try {
      entry.tensor = cache.get(*entry.group);
    } catch (const LimitError& e) {
      entry.limit_message = e.what();
    }
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

Corpus builtin_corpus(std::size_t max_order, TensorSquareCache& cache) {
  return make_corpus(builtin_corpus_specs(max_order), max_order, cache);
}

std::vector<std::string> read_corpus_specs(std::istream& in) {
  std::vector<std::string> specs;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    specs.push_back(line.substr(first, last - first + 1));
  }
  return specs;
}

} // namespace tensordeg
