#pragma once

#include "tensordeg/group.hpp"
#include "tensordeg/rational.hpp"
#include "tensordeg/tensor.hpp"

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tensordeg {

using Json = nlohmann::ordered_json;

// --- corpus ----------------------------------------------------------------

struct CorpusEntry {
  std::string spec; // canonical spec text
  std::shared_ptr<const FiniteGroup> group;
  std::optional<TensorSquareData> tensor; // empty when enumeration hit the limit
  std::string limit_message;

  [[nodiscard]] bool limited() const noexcept { return !tensor.has_value(); }
};

using Corpus = std::vector<CorpusEntry>;

/// Spec strings of the built-in corpus with order <= max_order, in corpus order.
std::vector<std::string> builtin_corpus_specs(std::size_t max_order);

/// Parses, builds, and enumerates each spec. Specs above max_order throw LimitError.
Corpus make_corpus(const std::vector<std::string>& specs, std::size_t max_order,
                   TensorSquareCache& cache);

/// builtin_corpus_specs + make_corpus.
Corpus builtin_corpus(std::size_t max_order, TensorSquareCache& cache);

/// One spec per line; blank lines and '#' comments are ignored.
std::vector<std::string> read_corpus_specs(std::istream& in);

// --- checks ----------------------------------------------------------------

inline constexpr std::string_view kDiscrepancyNote = "paper-example-discrepancy";

/// All theorem ids, in report order.
const std::vector<std::string>& theorem_ids();

struct TheoremCheck {
  std::string id;
  std::string group;
  std::optional<std::vector<Element>> subgroup;
  std::optional<std::vector<Element>> normal;
  std::optional<std::size_t> n;
  std::string part;     // distinguishes sub-statements of one id; may be empty
  std::string relation; // "<=" or "="
  std::optional<ExactRational> lhs;
  std::optional<ExactRational> rhs;
  bool holds = false;
  bool skipped = false;
  std::string note;
  Json witness; // null unless the check fails or is flagged

  [[nodiscard]] bool flagged() const noexcept { return note == kDiscrepancyNote; }
};

struct CheckInstance {
  const CorpusEntry* entry = nullptr;
  std::optional<SubgroupHandle> subgroup;
  std::optional<SubgroupHandle> normal;
  std::optional<std::size_t> n;
  std::string part; // selects a sub-statement where an id has several
};

struct SuiteConfig {
  std::size_t n_min = 1;
  std::size_t n_max = 4;
  std::size_t jobs = 1;
  std::size_t subgroup_bound = kDefaultSubgroupBound;
};

/// Evaluates one statement on one instance. An instance that does not meet
/// the statement's hypotheses comes back with skipped = true.
TheoremCheck check_theorem(std::string_view id, const CheckInstance& instance,
                           TensorSquareCache& cache);

/// Every applicable instance of `id` on one corpus entry.
std::vector<CheckInstance> applicable_instances(std::string_view id, const CorpusEntry& entry,
                                                const SuiteConfig& config);

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t flagged = 0;
};

struct VerificationReport {
  std::string version;
  Json config;
  std::vector<TheoremCheck> checks;
  ReportSummary summary;
};

/// Runs the listed statements over the corpus. Entries are processed on
/// config.jobs threads; the result is sorted and independent of job count.
VerificationReport run_suite(const Corpus& corpus, const std::vector<std::string>& ids,
                             const SuiteConfig& config, TensorSquareCache& cache);

ReportSummary summarize(const std::vector<TheoremCheck>& checks);

/// Sort key: id, group, subgroup, normal, n, part.
bool check_less(const TheoremCheck& a, const TheoremCheck& b);

// --- serialization -----------------------------------------------------------

Json to_json(const TheoremCheck& check);
Json to_json(const VerificationReport& report);

void write_json(std::ostream& os, const VerificationReport& report);
void write_csv(std::ostream& os, const VerificationReport& report);
void write_table(std::ostream& os, const VerificationReport& report);

/// Field names shared by the JSON check objects and the CSV header.
const std::vector<std::string>& check_fields();

} // namespace tensordeg
