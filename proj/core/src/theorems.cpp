#include "tensordeg/degrees.hpp"
#include "tensordeg/errors.hpp"
#include "tensordeg/group_spec.hpp"
#include "tensordeg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <thread>

namespace tensordeg {

namespace {

ExactRational frac(std::size_t num, std::size_t den) { return {BigInt(num), BigInt(den)}; }

ExactRational pow2(std::size_t k) { return {pow_int(2, static_cast<unsigned>(k)), BigInt(1)}; }

// (2^(n+2) - 3) / 2^(n+2)
ExactRational non_nilpotent_bound(std::size_t n) {
  const ExactRational p = pow2(n + 2);
  return (p - 3) / p;
}

// (2^n - 1) / 2^n
ExactRational centerless_bound(std::size_t n) {
  const ExactRational p = pow2(n);
  return (p - 1) / p;
}

std::string str(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

// Data derived once per (group, tensor square).
struct GroupFacts {
  const FiniteGroup& group;
  const TensorSquareData& tensor;
  SubgroupHandle center_;
  SubgroupHandle tensor_center_;
  std::optional<std::size_t> tensor_cls;
  std::optional<std::size_t> nil_cls;

  GroupFacts(const FiniteGroup& g, const TensorSquareData& t)
      : group(g), tensor(t), center_(center(g)), tensor_center_(tensor_center(g, t)),
        tensor_cls(tensor_class(g, t)),
        nil_cls(nilpotency_class(g)) {}
};

// H / (H n Z^(x)(G)) as a standalone group.
struct TensorCenterQuotient {
  InducedGroup induced;
  std::size_t intersection_size = 0;
  std::unique_ptr<Quotient> q;
};

TensorCenterQuotient quotient_by_tensor_center(const GroupFacts& facts, const SubgroupHandle& h) {
  TensorCenterQuotient out{as_group(h), 0, nullptr};
  std::vector<Element> local;
  for (std::size_t i = 0; i < out.induced.embedding.size(); ++i) {
    if (facts.tensor_center_.contains(out.induced.embedding[i])) {
      local.push_back(static_cast<Element>(i));
    }
  }
  out.intersection_size = local.size();
  const SubgroupHandle inter(out.induced.group, std::move(local));
  out.q = std::make_unique<Quotient>(quotient(out.induced.group, inter));
  return out;
}

void settle(TheoremCheck& c, std::optional<ExactRational> lhs, ExactRational rhs,
            std::string relation, Json details) {
  c.relation = std::move(relation);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.holds = c.lhs.has_value() && (c.relation == "=" ? *c.lhs == *c.rhs : *c.lhs <= *c.rhs);
  if (!c.holds) {
    c.witness = std::move(details);
  }
}

void skip(TheoremCheck& c, std::string why) {
  c.skipped = true;
  c.holds = false;
  c.note = std::move(why);
}

using Evaluator = std::function<void(TheoremCheck&, const CheckInstance&, const GroupFacts&,
                                     TensorSquareCache&)>;

bool require_subgroup(TheoremCheck& c, const CheckInstance& in) {
  if (!in.subgroup) {
    skip(c, "hypothesis not met: subgroup required");
    return false;
  }
  return true;
}

bool require_n(TheoremCheck& c, const CheckInstance& in) {
  if (!in.n || *in.n == 0) {
    skip(c, "hypothesis not met: n >= 1 required");
    return false;
  }
  return true;
}

bool require_normal_in_subgroup(TheoremCheck& c, const CheckInstance& in) {
  if (!in.subgroup || !in.normal) {
    skip(c, "hypothesis not met: subgroup and normal subgroup required");
    return false;
  }
  if (!is_normal(*in.normal) || !in.normal->is_subset_of(*in.subgroup)) {
    skip(c, "hypothesis not met: N must be normal in G and contained in H");
    return false;
  }
  return true;
}

void thm_1_1(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f, TensorSquareCache&) {
  if (!require_normal_in_subgroup(c, in)) {
    return;
  }
  const auto& h = *in.subgroup;
  const auto& n = *in.normal;
  const ExactRational lhs = rel_comm_degree(f.group, h);
  const Quotient q = quotient(f.group, n);
  const SubgroupHandle hq = project(q, h);
  const ExactRational dq = rel_comm_degree(q.group, hq);
  const ExactRational dn = comm_degree(n);
  const SubgroupHandle hg = commutator_subgroup(f.group, h, SubgroupHandle::whole(f.group));
  const bool split = intersection(n, hg).is_trivial();
  c.part = split ? "equality" : "inequality";
  settle(c, lhs, dq * dn, split ? "=" : "<=",
         Json{{"order_H", h.size()},
              {"order_N", n.size()},
              {"order_HG_commutator", hg.size()},
              {"d_H_G", lhs.to_string()},
              {"d_quotient", dq.to_string()},
              {"d_N", dn.to_string()}});
}

void thm_1_2(TheoremCheck& c, const CheckInstance&, const GroupFacts& f, TensorSquareCache&) {
  const auto p = smallest_prime_divisor(f.group.order());
  if (!p) {
    skip(c, "hypothesis not met: trivial group has no prime divisor");
    return;
  }
  const ExactRational d = comm_degree(f.group);
  const ExactRational dt = tensor_degree(f.group, f.tensor);
  const std::size_t j2 = j2_order(f.group, f.tensor);
  const std::size_t zt = f.tensor_center_.size();
  const std::size_t z = f.center_.size();
  const std::size_t order = f.group.order();
  Json details{{"p", *p},          {"d", d.to_string()},  {"d_tensor", dt.to_string()},
               {"order_J2", j2},   {"order_Z", z},        {"order_Z_tensor", zt},
               {"order_G", order}};
  if (c.part == "lower") {
    const ExactRational lower = d / j2 + frac(zt, order) * (ExactRational(1) - frac(1, j2));
    settle(c, lower, dt, "<=", std::move(details));
  } else if (c.part == "upper") {
    const ExactRational upper =
        d - ExactRational(BigInt((*p - 1) * (z - zt)), BigInt(*p * order));
    settle(c, dt, upper, "<=", std::move(details));
  } else {
    skip(c, "hypothesis not met: part must be 'lower' or 'upper'");
  }
}

void thm_1_3(TheoremCheck& c, const CheckInstance&, const GroupFacts& f, TensorSquareCache&) {
  if (f.group.is_abelian() || !f.tensor_center_.is_trivial()) {
    skip(c, "hypothesis not met: G nonabelian with trivial tensor center");
    return;
  }
  const std::size_t p = *smallest_prime_divisor(f.group.order());
  settle(c, tensor_degree(f.group, f.tensor), frac(1, p), "<=", Json{{"p", p}});
}

void lem_2_1(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f, TensorSquareCache&) {
  if (!require_subgroup(c, in)) {
    return;
  }
  const auto& h = *in.subgroup;
  const std::size_t order = f.group.order();
  struct Row {
    Element x;
    std::size_t index_h;
    std::size_t index_g;
  };
  std::vector<Row> rows;
  for (Element x = 0; x < order; ++x) {
    const SubgroupHandle cx = tensor_centralizer(f.group, f.tensor, x);
    rows.push_back({x, h.size() / intersection(h, cx).size(), order / cx.size()});
  }
  auto row_json = [](const Row& r) {
    return Json{{"x", r.x}, {"index_in_H", r.index_h}, {"index_in_G", r.index_g}};
  };
  if (c.part == "i") {
    const auto worst = std::max_element(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      return frac(a.index_h, a.index_g) < frac(b.index_h, b.index_g);
    });
    settle(c, frac(worst->index_h, worst->index_g), ExactRational(1), "<=", row_json(*worst));
  } else if (c.part == "ii") {
    if (product_set_size(h, f.tensor_center_) != order) {
      skip(c, "hypothesis not met: G = H Z^(x)(G) required");
      return;
    }
    std::size_t equal = 0;
    Json bad = Json::array();
    for (const auto& r : rows) {
      if (r.index_h == r.index_g) {
        ++equal;
      } else {
        bad.push_back(row_json(r));
      }
    }
    settle(c, ExactRational(static_cast<std::int64_t>(equal)),
           ExactRational(static_cast<std::int64_t>(order)), "=", Json{{"unequal", bad}});
  } else {
    skip(c, "hypothesis not met: part must be 'i' or 'ii'");
  }
}

void thm_2_2(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f, TensorSquareCache&) {
  if (!require_subgroup(c, in) || !require_n(c, in)) {
    return;
  }
  const std::size_t n = *in.n;
  const auto& h = *in.subgroup;
  const ExactRational lhs = rel_n_tensor_degree(f.group, f.tensor, h, n);
  const ExactRational dg = n_tensor_degree(f.group, f.tensor, n);
  const ExactRational scale(pow_int(h.index(), static_cast<unsigned>(n + 1)), BigInt(1));
  settle(c, lhs, scale * dg, "<=",
         Json{{"index", h.index()}, {"d_n_G", dg.to_string()}});
}

void thm_2_3(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f,
             TensorSquareCache& cache) {
  if (!require_subgroup(c, in) || !require_n(c, in)) {
    return;
  }
  const std::size_t n = *in.n;
  const auto& h = *in.subgroup;
  const ExactRational lhs = rel_n_tensor_degree(f.group, f.tensor, h, n + 1);
  const TensorCenterQuotient k = quotient_by_tensor_center(f, h);
  const TensorSquareData tk = cache.get(k.q->group);
  const ExactRational dk = n_tensor_degree(k.q->group, tk, n);
  const ExactRational rhs = (ExactRational(1) + dk) / 2;
  settle(c, lhs, rhs, "<=",
         Json{{"lhs_degree_n", n + 1},
              {"order_H", h.size()},
              {"order_H_cap_Z_tensor", k.intersection_size},
              {"order_K", k.q->group.order()},
              {"d_n_K", dk.to_string()},
              {"reading", "one-argument degree of K read as d_n(K, K)"}});
}

void thm_2_5(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f,
             TensorSquareCache& cache) {
  if (!require_n(c, in)) {
    return;
  }
  const std::size_t n = *in.n;
  const ExactRational lhs = n_tensor_degree(f.group, f.tensor, n + 1);
  const SubgroupHandle zn = tensor_upper_central(f.group, f.tensor, n);
  const Quotient q = quotient(f.group, zn);
  const TensorSquareData tq = cache.get(q.group);
  const ExactRational dq = tensor_degree(q.group, tq);
  const ExactRational p = pow2(n);
  settle(c, lhs, (p - 1 + dq) / p, "<=",
         Json{{"lhs_degree_n", n + 1},
              {"order_Z_n_tensor", zn.size()},
              {"order_quotient", q.group.order()},
              {"d_tensor_quotient", dq.to_string()}});
}

void thm_2_6(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f, TensorSquareCache&) {
  if (!require_n(c, in)) {
    return;
  }
  const std::size_t n = *in.n;
  if (f.tensor_cls && *f.tensor_cls <= n) {
    skip(c, "hypothesis not met: G is tensor nilpotent of class <= n");
    return;
  }
  const SubgroupHandle zn = tensor_upper_central(f.group, f.tensor, n);
  const SubgroupHandle zprev = n == 1 ? SubgroupHandle::trivial(f.group)
                                      : tensor_upper_central(f.group, f.tensor, n - 1);
  const bool prev_quotient_abelian = quotient(f.group, zprev).group.is_abelian();
  settle(c, n_tensor_degree(f.group, f.tensor, n), non_nilpotent_bound(n), "<=",
         Json{{"tensor_class", str(f.tensor_cls)},
              {"order_Z_n_tensor", zn.size()},
              {"order_Z_n_minus_1_tensor", zprev.size()},
              {"quotient_by_Z_n_minus_1_tensor_is_abelian", prev_quotient_abelian},
              {"d_tensor", tensor_degree(f.group, f.tensor).to_string()}});
}

void lem_2_7(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f, TensorSquareCache&) {
  if (!require_n(c, in)) {
    return;
  }
  const std::size_t n = *in.n;
  if (!f.tensor_cls || *f.tensor_cls > n) {
    skip(c, "hypothesis not met: tensor class <= n required");
    return;
  }
  std::optional<ExactRational> lhs;
  if (f.nil_cls) {
    lhs = ExactRational(static_cast<std::int64_t>(*f.nil_cls));
  }
  settle(c, lhs, ExactRational(static_cast<std::int64_t>(n)), "<=",
         Json{{"tensor_class", str(f.tensor_cls)}, {"nilpotency_class", str(f.nil_cls)}});
}

void thm_2_8(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f, TensorSquareCache&) {
  if (!require_n(c, in)) {
    return;
  }
  if (f.group.order() == 1 || !f.center_.is_trivial()) {
    skip(c, "hypothesis not met: G nontrivial with trivial center");
    return;
  }
  const std::size_t n = *in.n;
  c.part = n == 1 ? "base" : "stated";
  settle(c, n_tensor_degree(f.group, f.tensor, n), centerless_bound(n), "<=",
         Json{{"d", comm_degree(f.group).to_string()},
              {"d_tensor", tensor_degree(f.group, f.tensor).to_string()}});
}

void thm_3cases(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f,
                TensorSquareCache& cache) {
  if (!require_subgroup(c, in) || !require_n(c, in)) {
    return;
  }
  const auto& h = *in.subgroup;
  if (h.is_whole()) {
    skip(c, "hypothesis not met: H must be a proper subgroup");
    return;
  }
  const std::size_t n = *in.n;
  const ExactRational lhs = rel_n_tensor_degree(f.group, f.tensor, h, n);
  const SubgroupHandle zn = tensor_upper_central(f.group, f.tensor, n);
  if (h.is_subset_of(zn)) {
    c.part = "i";
    settle(c, lhs, ExactRational(1), "=", Json{{"order_Z_n_tensor", zn.size()}});
    return;
  }
  const TensorCenterQuotient k = quotient_by_tensor_center(f, h);
  const TensorSquareData tk = cache.get(k.q->group);
  const auto k_class = tensor_class(k.q->group, tk);
  Json details{{"order_Z_n_tensor", zn.size()},
               {"order_K", k.q->group.order()},
               {"tensor_class_K", str(k_class)}};
  if (k_class && *k_class + 1 <= n) {
    c.part = "ii";
    settle(c, lhs, ExactRational(1), "=", std::move(details));
  } else {
    c.part = "iii";
    settle(c, lhs, non_nilpotent_bound(n), "<=", std::move(details));
  }
}

void thm_quot(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f,
              TensorSquareCache& cache) {
  if (!require_normal_in_subgroup(c, in) || !require_n(c, in)) {
    return;
  }
  const std::size_t n = *in.n;
  const auto& h = *in.subgroup;
  const Quotient q = quotient(f.group, *in.normal);
  const SubgroupHandle hq = project(q, h);
  const TensorSquareData tq = cache.get(q.group);
  const ExactRational rhs = rel_n_tensor_degree(q.group, tq, hq, n);
  c.part = h.is_whole() ? "corollary" : "main";
  settle(c, rel_n_tensor_degree(f.group, f.tensor, h, n), rhs, "<=",
         Json{{"order_quotient", q.group.order()}, {"order_H_image", hq.size()}});
}

void sanity_erl(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f,
                TensorSquareCache&) {
  if (!require_n(c, in)) {
    return;
  }
  const std::size_t n = *in.n;
  const SubgroupHandle base = n == 1 ? SubgroupHandle::trivial(f.group)
                                     : tensor_upper_central(f.group, f.tensor, n - 1);
  const Quotient q = quotient(f.group, base);
  if (q.group.is_abelian()) {
    skip(c, "hypothesis not met: G / Z_(n-1)^(x)(G) must be nonabelian");
    return;
  }
  settle(c, comm_degree(q.group), frac(5, 8), "<=",
         Json{{"order_quotient", q.group.order()}});
}

void sanity_lescot(TheoremCheck& c, const CheckInstance&, const GroupFacts& f,
                   TensorSquareCache&) {
  if (f.nil_cls) {
    skip(c, "hypothesis not met: G must be non-nilpotent");
    return;
  }
  settle(c, comm_degree(f.group), frac(1, 2), "<=", Json{{"order_Z", f.center_.size()}});
}

bool require_group(TheoremCheck& c, const CheckInstance& in, const char* spec) {
  if (in.entry->spec != spec) {
    skip(c, std::string("hypothesis not met: example concerns ") + spec);
    return false;
  }
  return true;
}

void ex_3_1(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f, TensorSquareCache&) {
  if (!require_group(c, in, "S3") || !require_n(c, in)) {
    return;
  }
  const std::size_t n = *in.n;
  settle(c, n_tensor_degree(f.group, f.tensor, n), centerless_bound(n), "<=",
         Json{{"order_Z_tensor", f.tensor_center_.size()}});
}

// DP and naive enumeration must agree; a mismatch is an engine bug.
ExactRational checked_degree(const GroupFacts& f, const SubgroupHandle& h, std::size_t n) {
  const ExactRational dp = rel_n_tensor_degree(f.group, f.tensor, h, n);
  const ExactRational naive = rel_n_tensor_degree_naive(f.group, f.tensor, h, n);
  if (dp != naive) {
    throw ConsistencyError("degree mismatch on " + f.group.name() + ": dp " + dp.to_string() +
                           " vs naive " + naive.to_string());
  }
  return dp;
}

void ex_3_2(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f, TensorSquareCache&) {
  if (!require_group(c, in, "C4")) {
    return;
  }
  settle(c, checked_degree(f, *in.subgroup, *in.n), ExactRational(1), "=",
         Json{{"order_H", in.subgroup->size()}});
}

void ex_3_3(TheoremCheck& c, const CheckInstance& in, const GroupFacts& f, TensorSquareCache&) {
  if (!require_group(c, in, "D8")) {
    return;
  }
  const auto& h = *in.subgroup;
  const ExactRational value = checked_degree(f, h, *in.n);
  const ExactRational printed(BigInt(192), BigInt(2048));
  settle(c, value, printed, "=",
         Json{{"printed_value", "192/2048"},
              {"printed_decimal", "0/093"},
              {"computed", value.to_string()},
              {"H_is_abelian", as_group(h).group.is_abelian()},
              {"explanation",
               "H is abelian, so every iterated commutator of elements of H is the identity "
               "and 1 (x) g = 1 for all g; the ratio is 1"}});
  if (!c.holds) {
    c.note = std::string(kDiscrepancyNote);
  }
}

const std::map<std::string, Evaluator, std::less<>>& evaluators() {
  static const std::map<std::string, Evaluator, std::less<>> table{
      {"thm-1.1", thm_1_1},       {"thm-1.2", thm_1_2},        {"thm-1.3", thm_1_3},
      {"lem-2.1", lem_2_1},       {"thm-2.2", thm_2_2},        {"thm-2.3", thm_2_3},
      {"thm-2.5", thm_2_5},       {"thm-2.6", thm_2_6},        {"lem-2.7", lem_2_7},
      {"thm-2.8", thm_2_8},       {"thm-3cases", thm_3cases},  {"thm-quot", thm_quot},
      {"sanity-erl", sanity_erl}, {"sanity-lescot", sanity_lescot}, {"ex-3.1", ex_3_1},
      {"ex-3.2", ex_3_2},         {"ex-3.3", ex_3_3},
  };
  return table;
}

TheoremCheck blank_check(std::string_view id, const CheckInstance& in) {
  TheoremCheck c;
  c.id = std::string(id);
  c.group = in.entry->spec;
  if (in.subgroup) {
    c.subgroup = in.subgroup->elements();
  }
  if (in.normal) {
    c.normal = in.normal->elements();
  }
  c.n = in.n;
  c.part = in.part;
  return c;
}

} // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "thm-1.1", "thm-1.2",    "thm-1.3",  "lem-2.1",    "thm-2.2",       "thm-2.3",
      "thm-2.5", "thm-2.6",    "lem-2.7",  "thm-2.8",    "thm-3cases",    "thm-quot",
      "sanity-erl", "sanity-lescot", "ex-3.1", "ex-3.2", "ex-3.3"};
  return ids;
}

TheoremCheck check_theorem(std::string_view id, const CheckInstance& instance,
                           TensorSquareCache& cache) {
  const auto& table = evaluators();
  const auto it = table.find(id);
  if (it == table.end()) {
    throw InvalidSpec("unknown theorem id '" + std::string(id) + "'");
  }
  if (instance.entry == nullptr) {
    throw std::invalid_argument("check_theorem: instance has no corpus entry");
  }
  TheoremCheck c = blank_check(id, instance);
  if (instance.entry->limited()) {
    skip(c, "limit: " + instance.entry->limit_message);
    return c;
  }
  try {
    const GroupFacts facts(*instance.entry->group, *instance.entry->tensor);
    it->second(c, instance, facts, cache);
  } catch (const LimitError& e) {
    skip(c, std::string("limit: ") + e.what());
  }
  return c;
}

namespace {

std::vector<std::size_t> n_values(const SuiteConfig& config) {
  std::vector<std::size_t> out;
  for (std::size_t n = std::max<std::size_t>(config.n_min, 1); n <= config.n_max; ++n) {
    out.push_back(n);
  }
  return out;
}

} // namespace

std::vector<CheckInstance> applicable_instances(std::string_view id, const CorpusEntry& entry,
                                                const SuiteConfig& config) {
  std::vector<CheckInstance> out;
  const CheckInstance base{&entry, std::nullopt, std::nullopt, std::nullopt, {}};
  if (entry.limited()) {
    out.push_back(base);
    return out;
  }
  const FiniteGroup& g = *entry.group;
  const TensorSquareData& t = *entry.tensor;
  const auto ns = n_values(config);
  auto subgroups = [&] { return all_subgroups(g, config.subgroup_bound); };
  auto with_n = [&](CheckInstance in) {
    for (std::size_t n : ns) {
      in.n = n;
      out.push_back(in);
    }
  };
  auto pairs = [&](bool per_n) {
    const auto hs = subgroups();
    const auto ns_normal = normal_subgroups(g, config.subgroup_bound);
    for (const auto& h : hs) {
      for (const auto& n : ns_normal) {
        if (!n.is_subset_of(h)) {
          continue;
        }
        CheckInstance in{&entry, h, n, std::nullopt, {}};
        if (per_n) {
          with_n(in);
        } else {
          out.push_back(in);
        }
      }
    }
  };
  const auto tcls = tensor_class(g, t);

  if (id == "thm-1.1") {
    pairs(false);
  } else if (id == "thm-1.2") {
    if (g.order() > 1) {
      out.push_back({&entry, std::nullopt, std::nullopt, std::nullopt, "lower"});
      out.push_back({&entry, std::nullopt, std::nullopt, std::nullopt, "upper"});
    }
  } else if (id == "thm-1.3") {
    if (!g.is_abelian() && tensor_center(g, t).is_trivial()) {
      out.push_back(base);
    }
  } else if (id == "lem-2.1") {
    const SubgroupHandle zt = tensor_center(g, t);
    for (const auto& h : subgroups()) {
      out.push_back({&entry, h, std::nullopt, std::nullopt, "i"});
      if (product_set_size(h, zt) == g.order()) {
        out.push_back({&entry, h, std::nullopt, std::nullopt, "ii"});
      }
    }
  } else if (id == "thm-2.2" || id == "thm-2.3") {
    for (const auto& h : subgroups()) {
      with_n({&entry, h, std::nullopt, std::nullopt, {}});
    }
  } else if (id == "thm-3cases") {
    for (const auto& h : subgroups()) {
      if (!h.is_whole()) {
        with_n({&entry, h, std::nullopt, std::nullopt, {}});
      }
    }
  } else if (id == "thm-2.5") {
    with_n(base);
  } else if (id == "thm-2.6" || id == "lem-2.7") {
    for (std::size_t n : ns) {
      const bool nilpotent_by_n = tcls && *tcls <= n;
      if (nilpotent_by_n == (id == "lem-2.7")) {
        out.push_back({&entry, std::nullopt, std::nullopt, n, {}});
      }
    }
  } else if (id == "thm-2.8") {
    if (g.order() > 1 && center(g).is_trivial()) {
      with_n(base);
    }
  } else if (id == "thm-quot") {
    pairs(true);
  } else if (id == "sanity-erl") {
    for (std::size_t n : ns) {
      const SubgroupHandle b =
          n == 1 ? SubgroupHandle::trivial(g) : tensor_upper_central(g, t, n - 1);
      if (!quotient(g, b).group.is_abelian()) {
        out.push_back({&entry, std::nullopt, std::nullopt, n, {}});
      }
    }
  } else if (id == "sanity-lescot") {
    if (!nilpotency_class(g)) {
      out.push_back(base);
    }
  } else if (id == "ex-3.1") {
    if (entry.spec == "S3") {
      for (std::size_t n = 1; n <= 4; ++n) {
        out.push_back({&entry, std::nullopt, std::nullopt, n, {}});
      }
    }
  } else if (id == "ex-3.2") {
    if (entry.spec == "C4") {
      out.push_back({&entry, subgroup_from_words(g, "a^2"), std::nullopt, 2, {}});
    }
  } else if (id == "ex-3.3") {
    if (entry.spec == "D8") {
      out.push_back({&entry, subgroup_from_words(g, "a^2,a*b"), std::nullopt, 4, {}});
    }
  } else {
    throw InvalidSpec("unknown theorem id '" + std::string(id) + "'");
  }
  return out;
}

namespace {

template <class T>
int cmp_opt(const std::optional<T>& a, const std::optional<T>& b) {
  if (a.has_value() != b.has_value()) {
    return a.has_value() ? 1 : -1;
  }
  if (!a || *a == *b) {
    return 0;
  }
  return *a < *b ? -1 : 1;
}

std::size_t id_rank(const std::string& id) {
  const auto& ids = theorem_ids();
  return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
}

} // namespace

bool check_less(const TheoremCheck& a, const TheoremCheck& b) {
  if (a.id != b.id) {
    const auto ra = id_rank(a.id);
    const auto rb = id_rank(b.id);
    return ra != rb ? ra < rb : a.id < b.id;
  }
  if (a.group != b.group) {
    return a.group < b.group;
  }
  if (int c = cmp_opt(a.subgroup, b.subgroup); c != 0) {
    return c < 0;
  }
  if (int c = cmp_opt(a.normal, b.normal); c != 0) {
    return c < 0;
  }
  if (int c = cmp_opt(a.n, b.n); c != 0) {
    return c < 0;
  }
  return a.part < b.part;
}

ReportSummary summarize(const std::vector<TheoremCheck>& checks) {
  ReportSummary s;
  for (const auto& c : checks) {
    if (c.skipped) {
      ++s.skipped;
    } else if (c.holds) {
      ++s.pass;
    } else if (c.flagged()) {
      ++s.flagged;
    } else {
      ++s.fail;
    }
  }
  return s;
}

VerificationReport run_suite(const Corpus& corpus, const std::vector<std::string>& ids,
                             const SuiteConfig& config, TensorSquareCache& cache) {
  for (const auto& id : ids) {
    if (!evaluators().contains(id)) {
      throw InvalidSpec("unknown theorem id '" + id + "'");
    }
  }
  std::vector<std::vector<TheoremCheck>> per_entry(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        for (const auto& id : ids) {
          for (const auto& in : applicable_instances(id, corpus[i], config)) {
            per_entry[i].push_back(check_theorem(id, in, cache));
          }
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(corpus.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& th : pool) {
    th.join();
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }

  VerificationReport report;
  report.version = TENSORDEG_VERSION;
  report.config = Json{{"corpus", Json::array()},
                       {"theorems", ids},
                       {"n_range", Json::array({config.n_min, config.n_max})},
                       {"subgroup_bound", config.subgroup_bound},
                       {"max_cosets", cache.max_cosets()}};
  for (const auto& e : corpus) {
    report.config["corpus"].push_back(e.spec);
  }
  for (auto& v : per_entry) {
    std::move(v.begin(), v.end(), std::back_inserter(report.checks));
  }
  std::stable_sort(report.checks.begin(), report.checks.end(), check_less);
  report.summary = summarize(report.checks);
  return report;
}

} // namespace tensordeg
