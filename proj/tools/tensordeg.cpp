#include "tensordeg/degrees.hpp"
#include "tensordeg/errors.hpp"
#include "tensordeg/group_spec.hpp"
#include "tensordeg/tensor.hpp"
#include "tensordeg/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tensordeg;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string show(const ExactRational& r) { return r.to_string() + " (" + r.to_decimal() + ")"; }

std::string set_text(const SubgroupHandle& h) {
  std::string out = "{";
  for (std::size_t i = 0; i < h.size(); ++i) {
    out += (i ? " " : "") + std::to_string(h.elements()[i]);
  }
  return out + "}";
}

FiniteGroup load(const std::string& spec, std::size_t max_order) {
  return build_group(parse_group_spec(spec), max_order);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  std::size_t lo = 0;
  std::size_t hi = 0;
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoul(text);
    } else {
      lo = std::stoul(text.substr(0, dots));
      hi = std::stoul(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw InvalidSpec("bad --n-range '" + text + "' (expected a..b)");
  }
  if (lo < 1 || hi < lo) {
    throw InvalidSpec("bad --n-range '" + text + "'");
  }
  return {lo, hi};
}

std::vector<std::string> split_ids(const std::string& text) {
  if (text == "all") {
    return theorem_ids();
  }
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string id; std::getline(ss, id, ',');) {
    if (!id.empty()) {
      out.push_back(id);
    }
  }
  return out;
}

struct Options {
  std::string spec;
  std::size_t max_order = 16;
  std::size_t max_cosets = kDefaultMaxCosets;
  bool dump_table = false;
  std::string subgroup;
  std::size_t n = 1;
  std::string corpus = "builtin";
  std::string theorems = "all";
  std::string out;
  std::string format = "json";
  std::size_t jobs = 1;
  std::string n_range = "1..4";
};

int cmd_info(const Options& o) {
  const FiniteGroup g = load(o.spec, kMaxGroupOrder);
  const auto cls = nilpotency_class(g);
  std::cout << "group              " << g.name() << '\n'
            << "order              " << g.order() << '\n'
            << "center             " << center(g).size() << '\n'
            << "derived subgroup   " << derived_subgroup(g).size() << '\n'
            << "nilpotency class   " << (cls ? std::to_string(*cls) : "none") << '\n';
  if (g.order() <= kDefaultSubgroupBound) {
    std::cout << "subgroups          " << all_subgroups(g).size() << '\n';
  } else {
    std::cout << "subgroups          (not enumerated above order " << kDefaultSubgroupBound
              << ")\n";
  }
  std::cout << "labels            ";
  for (const auto& [name, e] : g.labels()) {
    std::cout << ' ' << name << '=' << e;
  }
  std::cout << '\n';
  return 0;
}

int cmd_tensor(const Options& o) {
  const FiniteGroup g = load(o.spec, kMaxTensorPresentationOrder);
  if (o.dump_table) {
    const CosetTable table = todd_coxeter(tensor_square_presentation(g), o.max_cosets);
    table.write_text(std::cout);
    if (!table.completed()) {
      throw LimitError("tensor square of " + g.name() + " exceeded " +
                       std::to_string(o.max_cosets) + " cosets");
    }
    return 0;
  }
  const TensorSquareData t = tensor_square(g, o.max_cosets);
  const auto cls = tensor_class(g, t);
  std::cout << "group              " << g.name() << " (order " << g.order() << ")\n"
            << "|G(x)G|            " << t.order() << '\n'
            << "|J2(G)|            " << j2_order(g, t) << '\n'
            << "|Z(x)(G)|          " << tensor_center(g, t).size() << '\n'
            << "tensor class       " << (cls ? std::to_string(*cls) : "none") << '\n';
  return 0;
}

int cmd_degree(const Options& o) {
  const FiniteGroup g = load(o.spec, kMaxTensorPresentationOrder);
  if (o.n < 1) {
    throw InvalidSpec("--n must be at least 1");
  }
  const SubgroupHandle h =
      o.subgroup.empty() ? SubgroupHandle::whole(g) : subgroup_from_words(g, o.subgroup);
  const TensorSquareData t = tensor_square(g, o.max_cosets);
  std::cout << "group              " << g.name() << " (order " << g.order() << ")\n"
            << "subgroup           " << set_text(h) << " (order " << h.size() << ")\n"
            << "d(G)               " << show(comm_degree(g)) << '\n'
            << "d_tensor(G)        " << show(tensor_degree(g, t)) << '\n'
            << "d_" << o.n << "_tensor(H,G)    " << show(rel_n_tensor_degree(g, t, h, o.n))
            << '\n';
  return 0;
}

int cmd_verify(const Options& o) {
  TensorSquareCache cache(o.max_cosets);
  std::vector<std::string> specs;
  if (o.corpus == "builtin") {
    specs = builtin_corpus_specs(o.max_order);
  } else {
    std::ifstream in(o.corpus);
    if (!in) {
      throw InvalidSpec("cannot open corpus file '" + o.corpus + "'");
    }
    specs = read_corpus_specs(in);
  }
  const Corpus corpus = make_corpus(specs, o.max_order, cache);
  SuiteConfig config;
  std::tie(config.n_min, config.n_max) = parse_range(o.n_range);
  config.jobs = o.jobs;
  const VerificationReport report = run_suite(corpus, split_ids(o.theorems), config, cache);

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      throw InvalidSpec("cannot write '" + o.out + "'");
    }
  }
  std::ostream& os = o.out.empty() ? std::cout : file;
  if (o.format == "json") {
    write_json(os, report);
  } else if (o.format == "csv") {
    write_csv(os, report);
  } else {
    write_table(os, report);
  }
  const auto& s = report.summary;
  std::cerr << "pass " << s.pass << ", fail " << s.fail << ", skipped " << s.skipped
            << ", flagged " << s.flagged << '\n';
  return s.fail > 0 ? kExitViolations : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonabelian tensor squares and tensor degrees of small finite groups"};
  app.set_version_flag("--version", std::string(TENSORDEG_VERSION));
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("info", "Order, center, derived subgroup, class, subgroups");
  info->add_option("spec", o.spec, "Group spec, e.g. D8 or C2xC4")->required();

  auto* tensor = app.add_subcommand("tensor", "Order of G(x)G, J2, tensor center and class");
  tensor->add_option("spec", o.spec, "Group spec")->required();
  tensor->add_option("--max-cosets", o.max_cosets, "Coset limit")->check(CLI::PositiveNumber);
  tensor->add_flag("--dump-table", o.dump_table, "Print the coset table");

  auto* degree = app.add_subcommand("degree", "d(G), d_tensor(G) and d_n_tensor(H,G)");
  degree->add_option("spec", o.spec, "Group spec")->required();
  degree->add_option("--subgroup", o.subgroup, "Generating words, e.g. \"a^2,a*b\"");
  degree->add_option("--n", o.n, "Commutator length n")->check(CLI::PositiveNumber);
  degree->add_option("--max-cosets", o.max_cosets, "Coset limit")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check the statements over a corpus");
  verify->add_option("--corpus", o.corpus, "builtin or a file with one spec per line");
  verify->add_option("--theorems", o.theorems, "all or comma-separated ids");
  verify->add_option("--max-order", o.max_order, "Largest group order")->check(CLI::PositiveNumber);
  verify->add_option("--out", o.out, "Output path (default stdout)");
  verify->add_option("--format", o.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--n-range", o.n_range, "Range of n, e.g. 1..4");
  verify->add_option("--max-cosets", o.max_cosets, "Coset limit")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*info) {
      return cmd_info(o);
    }
    if (*tensor) {
      return cmd_tensor(o);
    }
    if (*degree) {
      return cmd_degree(o);
    }
    return cmd_verify(o);
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
