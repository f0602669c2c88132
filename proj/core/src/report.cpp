#include "tensordeg/verify.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace tensordeg {

namespace {

std::string join(const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? " " : "") + std::to_string(xs[i]);
  }
  return out;
}

std::string status(const TheoremCheck& c) {
  if (c.skipped) {
    return "skipped";
  }
  if (c.holds) {
    return "pass";
  }
  return c.flagged() ? "flagged" : "FAIL";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  }
  return out + "\"";
}

std::string opt_string(const std::optional<ExactRational>& v) { return v ? v->to_string() : ""; }
std::string opt_decimal(const std::optional<ExactRational>& v) { return v ? v->to_decimal() : ""; }

} // namespace

const std::vector<std::string>& check_fields() {
  static const std::vector<std::string> fields{
      "id",  "group",       "subgroup", "normal", "n",       "part",    "relation", "lhs",
      "lhs_decimal", "rhs", "rhs_decimal", "holds", "skipped", "note", "witness"};
  return fields;
}

Json to_json(const TheoremCheck& c) {
  Json j;
  j["id"] = c.id;
  j["group"] = c.group;
  if (c.subgroup) {
    j["subgroup"] = *c.subgroup;
  }
  if (c.normal) {
    j["normal"] = *c.normal;
  }
  if (c.n) {
    j["n"] = *c.n;
  }
  if (!c.part.empty()) {
    j["part"] = c.part;
  }
  if (!c.relation.empty()) {
    j["relation"] = c.relation;
  }
  if (c.lhs) {
    j["lhs"] = c.lhs->to_string();
    j["lhs_decimal"] = c.lhs->to_decimal();
  }
  if (c.rhs) {
    j["rhs"] = c.rhs->to_string();
    j["rhs_decimal"] = c.rhs->to_decimal();
  }
  j["holds"] = c.holds;
  if (c.skipped) {
    j["skipped"] = true;
  }
  if (!c.note.empty()) {
    j["note"] = c.note;
  }
  if (!c.witness.is_null()) {
    j["witness"] = c.witness;
  }
  return j;
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(to_json(c));
  }
  return Json{{"version", report.version},
              {"config", report.config},
              {"checks", std::move(checks)},
              {"summary",
               {{"pass", report.summary.pass},
                {"fail", report.summary.fail},
                {"skipped", report.summary.skipped},
                {"flagged", report.summary.flagged}}}};
}

void write_json(std::ostream& os, const VerificationReport& report) {
  os << to_json(report).dump(2) << '\n';
}

void write_csv(std::ostream& os, const VerificationReport& report) {
  const auto& fields = check_fields();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    os << (i ? "," : "") << fields[i];
  }
  os << '\n';
  for (const auto& c : report.checks) {
    const std::vector<std::string> row{
        c.id,
        c.group,
        c.subgroup ? join(*c.subgroup) : "",
        c.normal ? join(*c.normal) : "",
        c.n ? std::to_string(*c.n) : "",
        c.part,
        c.relation,
        opt_string(c.lhs),
        opt_decimal(c.lhs),
        opt_string(c.rhs),
        opt_decimal(c.rhs),
        c.holds ? "true" : "false",
        c.skipped ? "true" : "false",
        c.note,
        c.witness.is_null() ? "" : c.witness.dump()};
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << csv_field(row[i]);
    }
    os << '\n';
  }
}

void write_table(std::ostream& os, const VerificationReport& report) {
  os << std::left << std::setw(14) << "id" << std::setw(12) << "group" << std::setw(22) << "H"
     << std::setw(14) << "N" << std::setw(3) << "n" << std::setw(12) << "part" << std::setw(24)
     << "lhs" << std::setw(3) << "" << std::setw(24) << "rhs" << "status\n";
  for (const auto& c : report.checks) {
    os << std::setw(14) << c.id << std::setw(12) << c.group << std::setw(22)
       << (c.subgroup ? "{" + join(*c.subgroup) + "}" : "") << std::setw(14)
       << (c.normal ? "{" + join(*c.normal) + "}" : "") << std::setw(3)
       << (c.n ? std::to_string(*c.n) : "") << std::setw(12) << c.part << std::setw(24)
       << (c.lhs ? c.lhs->to_string() + " (" + c.lhs->to_decimal() + ")" : "") << std::setw(3)
       << c.relation << std::setw(24)
       << (c.rhs ? c.rhs->to_string() + " (" + c.rhs->to_decimal() + ")" : "") << status(c);
    if (!c.note.empty()) {
      os << "  " << c.note;
    }
    os << '\n';
  }
  const auto& s = report.summary;
  os << "\npass " << s.pass << "  fail " << s.fail << "  skipped " << s.skipped << "  flagged "
     << s.flagged << '\n';
}

} // namespace tensordeg
