#include "tensordeg/group_spec.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace tensordeg {

SpecSyntaxError::SpecSyntaxError(const std::string& message, std::size_t position)
    : InvalidSpec(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

// Cursor over the source that skips whitespace and reports original offsets.
class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  [[nodiscard]] bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    const char c = peek();
    if (c != '\0') {
      ++pos_;
    }
    return c;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[nodiscard]] std::size_t position() const { return pos_; }

  std::int64_t integer(bool allow_sign) {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_space();
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (digits == pos_) {
      throw SpecSyntaxError("expected an integer", start);
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (ec != std::errc{}) {
      throw SpecSyntaxError("integer out of range", digits);
    }
    return negative ? -value : value;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t positive(std::int64_t v, std::size_t pos) {
  if (v < 1) {
    throw SpecSyntaxError("parameter must be positive", pos);
  }
  return static_cast<std::size_t>(v);
}

FamilyTerm parse_term(Cursor& cur) {
  const std::size_t at = cur.position();
  const char letter = cur.take();
  FamilyTerm term;
  switch (letter) {
  case 'C':
    term.family = Family::cyclic;
    break;
  case 'D':
    term.family = Family::dihedral;
    break;
  case 'Q':
    term.family = Family::quaternion;
    break;
  case 'S':
    term.family = Family::symmetric;
    break;
  case 'A':
    term.family = Family::alternating;
    break;
  case 'E':
    term.family = Family::elementary_abelian;
    break;
  case '\0':
    throw SpecSyntaxError("expected a group family letter (C, D, Q, S, A, E)", at);
  default:
    throw SpecSyntaxError(std::string("unknown group family '") + letter + "'", at);
  }
  const std::size_t int_at = cur.position();
  const std::size_t value = positive(cur.integer(false), int_at);
  if (term.family == Family::elementary_abelian) {
    if (!cur.accept('^')) {
      throw SpecSyntaxError("expected '^' in elementary abelian term", cur.position());
    }
    const std::size_t exp_at = cur.position();
    const std::size_t k = positive(cur.integer(false), exp_at);
    const auto p = smallest_prime_divisor(value);
    if (!p || *p != value) {
      throw InvalidSpec("E" + std::to_string(value) + "^" + std::to_string(k) +
                        ": base must be prime");
    }
    std::size_t order = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (order > kMaxGroupOrder) {
        break;
      }
      order *= value;
    }
    term.prime = value;
    term.exponent = k;
    term.parameter = order;
  } else {
    term.parameter = value;
  }
  if (term.family == Family::dihedral && (value < 4 || value % 2 != 0)) {
    throw InvalidSpec("D" + std::to_string(value) +
                      ": dihedral groups are named by their order, which must be even and >= 4");
  }
  if (term.family == Family::quaternion && value != 8 && value != 16) {
    throw InvalidSpec("Q" + std::to_string(value) + ": only Q8 and Q16 are supported");
  }
  if ((term.family == Family::symmetric || term.family == Family::alternating) && value > 5) {
    throw InvalidSpec(std::string(1, letter) + std::to_string(value) +
                      ": degree must be at most 5");
  }
  return term;
}

std::string render_term(const FamilyTerm& t) {
  switch (t.family) {
  case Family::cyclic:
    return "C" + std::to_string(t.parameter);
  case Family::dihedral:
    return "D" + std::to_string(t.parameter);
  case Family::quaternion:
    return "Q" + std::to_string(t.parameter);
  case Family::symmetric:
    return "S" + std::to_string(t.parameter);
  case Family::alternating:
    return "A" + std::to_string(t.parameter);
  case Family::elementary_abelian:
    return "E" + std::to_string(t.prime) + "^" + std::to_string(t.exponent);
  }
  return "?";
}

} // namespace

GroupSpec parse_group_spec(std::string_view text) {
  Cursor cur(text);
  GroupSpec spec;
  spec.source = std::string(text);
  if (cur.done()) {
    throw SpecSyntaxError("empty group spec", 0);
  }
  spec.factors.push_back(parse_term(cur));
  while (!cur.done()) {
    const std::size_t at = cur.position();
    if (!cur.accept('x')) {
      throw SpecSyntaxError(std::string("unexpected character '") + cur.peek() + "'", at);
    }
    spec.factors.push_back(parse_term(cur));
  }
  return spec;
}

std::string render(const GroupSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    if (i > 0) {
      out += "x";
    }
    out += render_term(spec.factors[i]);
  }
  return out;
}

FiniteGroup build_group(const GroupSpec& spec, std::size_t max_order) {
  std::size_t order = 1;
  for (const auto& f : spec.factors) {
    if (f.parameter > max_order || order > max_order / std::max<std::size_t>(f.parameter, 1)) {
      throw LimitError("group " + render(spec) + " exceeds the maximum order " +
                       std::to_string(max_order));
    }
    order *= f.parameter;
  }
  FiniteGroup group = build_named(spec.factors.front().family, spec.factors.front().parameter,
                                  max_order);
  for (std::size_t i = 1; i < spec.factors.size(); ++i) {
    const auto& f = spec.factors[i];
    group = direct_product(group, build_named(f.family, f.parameter, max_order), max_order);
  }
  return group;
}

std::vector<GroupWord> parse_word_list(std::string_view text) {
  Cursor cur(text);
  std::vector<GroupWord> words;
  if (cur.done()) {
    return words;
  }
  while (true) {
    GroupWord word;
    while (true) {
      const std::size_t at = cur.position();
      cur.skip_space();
      std::string label;
      auto label_char = [&](char c) {
        const auto u = static_cast<unsigned char>(c);
        return label.empty() ? std::isalpha(u) != 0 : std::isalnum(u) != 0;
      };
      while (label_char(cur.peek())) {
        label += cur.take();
      }
      if (label.empty()) {
        if (word.factors.empty() && cur.peek() == '1') {
          cur.take(); // "1" is the empty word
        } else {
          throw SpecSyntaxError("expected a generator label", at);
        }
      } else {
        std::int64_t exponent = 1;
        if (cur.accept('^')) {
          exponent = cur.integer(true);
        }
        word.factors.emplace_back(std::move(label), exponent);
      }
      if (!cur.accept('*')) {
        break;
      }
    }
    words.push_back(std::move(word));
    if (cur.done()) {
      break;
    }
    const std::size_t at = cur.position();
    if (!cur.accept(',')) {
      throw SpecSyntaxError(std::string("unexpected character '") + cur.peek() + "'", at);
    }
  }
  return words;
}

std::string render(const std::vector<GroupWord>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    if (words[i].factors.empty()) {
      out += "1";
    }
    for (std::size_t j = 0; j < words[i].factors.size(); ++j) {
      const auto& [label, exponent] = words[i].factors[j];
      if (j > 0) {
        out += "*";
      }
      out += label;
      if (exponent != 1) {
        out += "^" + std::to_string(exponent);
      }
    }
  }
  return out;
}

SubgroupHandle subgroup_from_words(const FiniteGroup& group, std::string_view words) {
  std::vector<Element> gens;
  for (const auto& w : parse_word_list(words)) {
    gens.push_back(evaluate(group, w));
  }
  return subgroup_generated(group, gens);
}

} // namespace tensordeg
