#include "tensordeg/degrees.hpp"
#include "tensordeg/errors.hpp"
#include "tensordeg/group_spec.hpp"
#include "tensordeg/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace tensordeg;

namespace {

ExactRational Q(std::int64_t p, std::int64_t q) { return {BigInt(p), BigInt(q)}; }

const CorpusEntry& find(const Corpus& c, const std::string& spec) {
  const auto it = std::find_if(c.begin(), c.end(), [&](const auto& e) { return e.spec == spec; });
  REQUIRE(it != c.end());
  return *it;
}

std::string json_text(const VerificationReport& r) {
  std::ostringstream os;
  write_json(os, r);
  return os.str();
}

} // namespace

TEST_CASE("builtin corpus membership") {
  const auto eight = builtin_corpus_specs(8);
  for (const char* s : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "C2xC4",
                        "C2xC2xC2", "D8", "Q8", "S3"}) {
    CHECK(std::find(eight.begin(), eight.end(), s) != eight.end());
  }
  CHECK(builtin_corpus_specs(1) == std::vector<std::string>{"C1"});
  const auto sixteen = builtin_corpus_specs(16);
  CHECK(sixteen.size() >= 25);
  for (const char* s : {"C12", "C3xC3", "D10", "D12", "D14", "D16", "Q16", "A4"}) {
    CHECK(std::find(sixteen.begin(), sixteen.end(), s) != sixteen.end());
  }
  const auto big = builtin_corpus_specs(24);
  CHECK(std::find(big.begin(), big.end(), "S4") != big.end());

  TensorSquareCache cache;
  for (const auto& e : builtin_corpus(16, cache)) {
    CHECK_FALSE(e.limited());
    CHECK(render(parse_group_spec(e.spec)) == e.spec);
    CHECK(build_group(parse_group_spec(e.spec)) == *e.group);
  }
}

TEST_CASE("corpus files") {
  std::istringstream in("# comment\nD8\n\n  S3  # trailing\nC2 x C2\n");
  CHECK(read_corpus_specs(in) == std::vector<std::string>{"D8", "S3", "C2 x C2"});
  TensorSquareCache cache;
  const Corpus c = make_corpus({"C2 x C2"}, 16, cache);
  CHECK(c.front().spec == "C2xC2");
  CHECK_THROWS_AS(make_corpus({"S4"}, 16, cache), LimitError);
}

TEST_CASE("single checks") {
  TensorSquareCache cache;
  const Corpus corpus = make_corpus({"S3", "C4", "C2", "D8"}, 16, cache);
  const CorpusEntry& s3 = find(corpus, "S3");

  const SubgroupHandle a3 = subgroup_from_words(*s3.group, "a");
  REQUIRE(a3.size() == 3);
  const TheoremCheck c22 = check_theorem("thm-2.2", {&s3, a3, std::nullopt, 1, {}}, cache);
  CHECK(c22.holds);
  CHECK(c22.lhs.has_value());
  CHECK(*c22.lhs <= *c22.rhs);

  const TheoremCheck c13 = check_theorem("thm-1.3", {&s3, std::nullopt, std::nullopt, std::nullopt, {}}, cache);
  CHECK(c13.holds);
  CHECK(*c13.lhs == Q(5, 12));
  CHECK(*c13.rhs == Q(1, 2));

  const CorpusEntry& c4 = find(corpus, "C4");
  const TheoremCheck skipped = check_theorem("thm-1.3", {&c4, std::nullopt, std::nullopt, std::nullopt, {}}, cache);
  CHECK(skipped.skipped);
  CHECK(skipped.note.find("hypothesis") != std::string::npos);

  const auto ex32 = applicable_instances("ex-3.2", c4, {});
  REQUIRE(ex32.size() == 1);
  const TheoremCheck e = check_theorem("ex-3.2", ex32.front(), cache);
  CHECK(e.holds);
  CHECK(*e.lhs == 1);
  CHECK(*e.rhs == 1);

  // C2 has trivial tensor center and is not tensor nilpotent of class 1
  const CorpusEntry& c2 = find(corpus, "C2");
  const TheoremCheck c26 = check_theorem("thm-2.6", {&c2, std::nullopt, std::nullopt, 1, {}}, cache);
  CHECK_FALSE(c26.skipped);
  CHECK(*c26.lhs == Q(3, 4));
  CHECK(*c26.rhs == Q(5, 8));
  CHECK_FALSE(c26.holds);
  CHECK_FALSE(c26.witness.is_null());

  CHECK_THROWS_AS(check_theorem("thm-9.9", {&s3, std::nullopt, std::nullopt, std::nullopt, {}}, cache),
                  InvalidSpec);
}

TEST_CASE("suite over the trivial group") {
  TensorSquareCache cache;
  const Corpus corpus = make_corpus({"C1"}, 16, cache);
  const VerificationReport r = run_suite(corpus, theorem_ids(), {}, cache);
  CHECK(r.summary.fail == 0);
  CHECK(r.summary.flagged == 0);
  CHECK(r.summary.pass > 0);
}

TEST_CASE("<a^2, ab> in D8 produces exactly one flagged record") {
  TensorSquareCache cache;
  const Corpus corpus = builtin_corpus(16, cache);
  const VerificationReport r = run_suite(corpus, {"ex-3.3"}, {}, cache);
  REQUIRE(r.checks.size() == 1);
  const TheoremCheck& c = r.checks.front();
  CHECK(c.flagged());
  CHECK(*c.lhs == 1);
  CHECK(c.rhs->to_string() == "3/32");
  CHECK(c.witness.dump().find("192/2048") != std::string::npos);
  CHECK(r.summary.flagged == 1);
  CHECK(r.summary.fail == 0);
}

TEST_CASE("limit overruns become skipped records") {
  TensorSquareCache cache(10);
  const Corpus corpus = make_corpus({"C2", "D8"}, 16, cache);
  CHECK_FALSE(find(corpus, "C2").limited());
  CHECK(find(corpus, "D8").limited());
  const VerificationReport r = run_suite(corpus, {"thm-1.3", "thm-2.2"}, {}, cache);
  std::size_t limited = 0;
  for (const auto& c : r.checks) {
    if (c.group == "D8") {
      CHECK(c.skipped);
      CHECK(c.note.rfind("limit:", 0) == 0);
      ++limited;
    }
  }
  CHECK(limited == 2);
}

TEST_CASE("serialization and determinism") {
  TensorSquareCache cache;
  const Corpus corpus = make_corpus({"S3", "D8", "C4", "Q8"}, 16, cache);
  SuiteConfig one;
  one.n_max = 2;
  SuiteConfig many = one;
  many.jobs = 4;
  const VerificationReport a = run_suite(corpus, theorem_ids(), one, cache);
  const VerificationReport b = run_suite(corpus, theorem_ids(), many, cache);
  CHECK(json_text(a) == json_text(b));
  CHECK(std::is_sorted(a.checks.begin(), a.checks.end(), check_less));

  const Json j = to_json(a);
  CHECK(j["checks"].size() == a.checks.size());
  CHECK(j["summary"]["pass"] == a.summary.pass);
  for (const auto& c : j["checks"]) {
    for (const auto& [key, _] : c.items()) {
      CHECK(std::find(check_fields().begin(), check_fields().end(), key) != check_fields().end());
    }
  }

  std::ostringstream csv;
  write_csv(csv, a);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  std::string expected;
  for (const auto& f : check_fields()) {
    expected += (expected.empty() ? "" : ",") + f;
  }
  CHECK(header == expected);
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
  }
  CHECK(rows == a.checks.size());

  const ReportSummary s = summarize(a.checks);
  CHECK(s.pass + s.fail + s.skipped + s.flagged == a.checks.size());
}
