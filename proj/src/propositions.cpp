#include "qrw/propositions.hpp"

#include <algorithm>
#include <sstream>

#include "mask_kernel.hpp"

namespace qrw {

namespace {

using Tuple = std::vector<Element>;

std::string tuple_text(const FiniteStructure& s, const Tuple& w) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << s.label(w[i]);
  out << ")";
  return out.str();
}

std::string subset_text(const FiniteStructure& s, const Subset& m) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (Element e : m.elements()) {
    out << (first ? "" : ",") << s.label(e);
    first = false;
  }
  out << "}";
  return out.str();
}

// First (a,b) in lexicographic order where violated(a,b) is true.
template <class F>
std::optional<Tuple> first_pair(std::size_t n, F&& violated) {
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (violated(a, b)) return Tuple{a, b};
    }
  }
  return std::nullopt;
}

template <class F>
std::optional<Tuple> first_triple(std::size_t n, F&& violated) {
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (violated(a, b, c)) return Tuple{a, b, c};
      }
    }
  }
  return std::nullopt;
}

PropVerdict make(std::string_view id, PropStatus status, std::string detail) {
  PropVerdict v;
  v.prop_id = std::string(id);
  v.status = status;
  v.holds = status != PropStatus::kFails;
  v.detail = std::move(detail);
  return v;
}

void attach_filter_witness(PropVerdict& v, const FilterVerdict& f) {
  v.witness_elements = f.witness;
  v.witness_clause = f.failed_clause ? std::string(clause_name(*f.failed_clause)) : "";
}

std::optional<Tuple> contraction_violation(const FiniteStructure& s, const Subset& m) {
  return first_pair(s.n, [&](Element r, Element p) {
    return m.contains(s.imp(r, s.imp(r, p))) && !m.contains(s.imp(r, p));
  });
}

std::optional<Tuple> double_premise_violation(const FiniteStructure& s, const Subset& m) {
  return first_triple(s.n, [&](Element r, Element p, Element k) {
    return m.contains(s.imp(r, s.imp(p, s.imp(p, k)))) && m.contains(s.imp(r, p)) &&
           !m.contains(s.imp(r, k));
  });
}

std::optional<Tuple> distributive_violation(const FiniteStructure& s, const Subset& m) {
  return first_triple(s.n, [&](Element t, Element c, Element k) {
    return m.contains(s.imp(t, s.imp(c, k))) &&
           !m.contains(s.imp(s.imp(t, c), s.imp(t, k)));
  });
}

// Tuple order (τ, ς, k).
std::optional<Tuple> auxiliary_violation(const FiniteStructure& s, const Subset& m) {
  return first_triple(s.n, [&](Element t, Element c, Element k) {
    return m.contains(c) && m.contains(s.imp(c, s.imp(t, s.imp(t, k)))) &&
           !m.contains(s.imp(t, k));
  });
}

std::optional<Tuple> modus_ponens_violation(const FiniteStructure& s, const Subset& m) {
  return first_pair(s.n, [&](Element t, Element z) {
    return m.contains(t) && m.contains(s.imp(t, z)) && !m.contains(z);
  });
}

std::optional<Tuple> product_cancel_violation(const FiniteStructure& s, const Subset& m) {
  return first_pair(s.n, [&](Element t, Element z) {
    return m.contains(t) && m.contains((*s.mul)(t, z)) && !m.contains(z);
  });
}

struct Condition {
  bool value = true;
  Tuple witness;
  std::string clause;
};

std::vector<Condition> equivalent_conditions(const FiniteStructure& s, const Subset& m) {
  std::vector<Condition> out(4);
  const auto impl = is_implicative_filter(s, m);
  out[0].value = impl.holds;
  if (!impl.holds) {
    out[0].witness = impl.witness;
    out[0].clause = "condition-i:" + std::string(clause_name(*impl.failed_clause));
  }

  const auto filt = is_filter(s, m);
  auto with_filter = [&](Condition& c, const std::string& name,
                         const std::optional<Tuple>& violation) {
    if (!filt.holds) {
      c.value = false;
      c.witness = filt.witness;
      c.clause = name + ":" + std::string(clause_name(*filt.failed_clause));
    } else if (violation) {
      c.value = false;
      c.witness = *violation;
      c.clause = name + ":clause";
    }
  };
  with_filter(out[1], "condition-ii", contraction_violation(s, m));
  with_filter(out[2], "condition-iii", distributive_violation(s, m));

  if (!m.contains(s.one)) {
    out[3] = Condition{false, {s.one}, "condition-iv:unit"};
  } else if (auto w = auxiliary_violation(s, m)) {
    out[3] = Condition{false, *w, "condition-iv:clause"};
  }
  return out;
}

}  // namespace

std::string_view status_name(PropStatus s) {
  switch (s) {
    case PropStatus::kHolds: return "holds";
    case PropStatus::kVacuous: return "vacuous";
    case PropStatus::kFails: return "fails";
    case PropStatus::kNotApplicable: return "not-applicable";
  }
  return "?";
}

bool is_prop_id(std::string_view id) {
  return std::find(kPropIds.begin(), kPropIds.end(), id) != kPropIds.end();
}

PropVerdict check_implicative_is_filter(const FiniteStructure& s,
                                        const EnumerationOptions& options) {
  require_enumerable(s.n, options.limit);
  const detail::MaskKernel kernel(s);
  const auto bad = detail::first_mask(
      s.n, s.one, [&](detail::Mask m) { return kernel.is_implicative(m) && !kernel.is_filter(m); },
      options.threads);
  if (!bad) {
    return make("2.1.2", PropStatus::kHolds,
                "every implicative filter is a filter (" + std::to_string(1ULL << s.n) +
                    " subsets scanned)");
  }
  const Subset m = Subset::from_mask(s.n, *bad);
  auto v = make("2.1.2", PropStatus::kFails,
                "subset " + subset_text(s, m) + " is an implicative filter but not a filter");
  v.witness_subsets = {m};
  attach_filter_witness(v, is_filter(s, m));
  return v;
}

PropVerdict check_double_premise_clause(const FiniteStructure& s, const Subset& m) {
  require_same_size(s, m);
  const bool filter = is_filter(s, m).holds;
  const bool implicative = is_implicative_filter(s, m).holds;
  const auto violation = double_premise_violation(s, m);
  PropVerdict v;
  if (violation) {
    v = make("2.1.3", PropStatus::kFails,
             "r→(p→(p→k)) and r→p are members but r→k is not at " +
                 tuple_text(s, *violation));
    v.witness_elements = *violation;
    v.witness_clause = "clause";
  } else {
    v = make("2.1.3", PropStatus::kHolds,
             std::string("clause holds; subset is ") + (filter ? "" : "not ") + "a filter and " +
                 (implicative ? "" : "not ") + "implicative");
  }
  v.witness_subsets = {m};
  v.conditions = {filter, !violation.has_value(), implicative};
  return v;
}

PropVerdict check_contraction_clause(const FiniteStructure& s, const Subset& m) {
  require_same_size(s, m);
  const auto violation = contraction_violation(s, m);
  PropVerdict v;
  if (violation) {
    v = make("2.1.4", PropStatus::kFails,
             "r→(r→p) is a member but r→p is not at " + tuple_text(s, *violation));
    v.witness_elements = *violation;
    v.witness_clause = "clause";
  } else {
    v = make("2.1.4", PropStatus::kHolds, "r→(r→p) ∈ M implies r→p ∈ M");
  }
  v.witness_subsets = {m};
  return v;
}

PropVerdict check_extension(const FiniteStructure& s, const Subset& m1, const Subset& m2) {
  require_same_size(s, m1);
  require_same_size(s, m2);
  PropVerdict v;
  if (!m1.is_subset_of(m2)) {
    v = make("2.1.5", PropStatus::kNotApplicable, "M1 is not contained in M2");
  } else {
    const auto impl1 = is_implicative_filter(s, m1);
    const auto filt2 = is_filter(s, m2);
    const auto impl2 = is_implicative_filter(s, m2);
    if (!impl1.holds) {
      v = make("2.1.5", PropStatus::kVacuous, "M1 is not an implicative filter");
      attach_filter_witness(v, impl1);
    } else if (!filt2.holds) {
      v = make("2.1.5", PropStatus::kVacuous, "M2 is not a filter");
      attach_filter_witness(v, filt2);
    } else if (!impl2.holds) {
      v = make("2.1.5", PropStatus::kFails,
               "M1 is implicative and M2 is a filter containing it, but M2 is not implicative");
      attach_filter_witness(v, impl2);
    } else {
      v = make("2.1.5", PropStatus::kHolds, "M2 is an implicative filter");
    }
  }
  v.witness_subsets = {m1, m2};
  return v;
}

PropVerdict check_up_interval_equivalence(const FiniteStructure& s) {
  const auto unit = is_implicative_filter(s, Subset(s.n, {s.one}));
  std::optional<Element> broken;
  FilterVerdict broken_verdict;
  for (Element psi = 0; psi < s.n && !broken; ++psi) {
    auto fv = is_implicative_filter(s, up_interval(s, psi));
    if (!fv.holds) {
      broken = psi;
      broken_verdict = std::move(fv);
    }
  }
  const bool left = unit.holds;
  const bool right = !broken.has_value();
  const std::string sides = std::string("{1} is ") + (left ? "" : "not ") +
                            "implicative; every Y(ψ) is " + (right ? "" : "not ") + "implicative";
  PropVerdict v = make("2.1.7", left == right ? PropStatus::kHolds : PropStatus::kFails, sides);
  v.conditions = {left, right};
  if (left && !right) {
    // Forward direction broken at ψ.
    v.witness_elements = {*broken};
    v.witness_subsets = {up_interval(s, *broken)};
    v.witness_clause = "Y(" + s.label(*broken) + "):" +
                       std::string(clause_name(*broken_verdict.failed_clause));
    v.detail += "; broken at ψ = " + s.label(*broken);
  } else if (!left && right) {
    v.witness_subsets = {Subset(s.n, {s.one})};
    attach_filter_witness(v, unit);
    v.witness_clause = "{1}:" + v.witness_clause;
  }
  return v;
}

PropVerdict check_product_condition(const FiniteStructure& s, const Subset& m,
                                    ProductReading reading) {
  require_same_size(s, m);
  PropVerdict v;
  if (reading == ProductReading::kUpwardClosure) {
    auto w = first_pair(s.n, [&](Element r, Element p) {
      return m.contains(r) && s.order.leq(r, p) && !m.contains(p);
    });
    if (w) {
      v = make("2.1.8", PropStatus::kFails,
               "reading A: r ∈ M and r ≼ p but p ∉ M at " + tuple_text(s, *w));
      v.witness_elements = *w;
      v.witness_clause = "reading-A";
    } else {
      v = make("2.1.8", PropStatus::kHolds, "reading A: M is upward closed");
    }
  } else if (!s.mul) {
    v = make("2.1.8", PropStatus::kNotApplicable, "reading B needs a mul table");
  } else {
    auto w = first_pair(s.n, [&](Element r, Element p) {
      return m.contains(r) && m.contains(p) && !m.contains((*s.mul)(r, p));
    });
    if (w) {
      v = make("2.1.8", PropStatus::kFails,
               "reading B: r, p ∈ M but r⊙p ∉ M at " + tuple_text(s, *w));
      v.witness_elements = *w;
      v.witness_clause = "reading-B";
    } else {
      v = make("2.1.8", PropStatus::kHolds, "reading B: M is closed under ⊙");
    }
  }
  v.witness_subsets = {m};
  return v;
}

PropVerdict check_equivalent_conditions(const FiniteStructure& s, const Subset& m) {
  require_same_size(s, m);
  const auto conds = equivalent_conditions(s, m);
  std::string values;
  for (const auto& c : conds) values += c.value ? 'T' : 'F';
  PropVerdict v;
  std::optional<std::size_t> odd;
  for (std::size_t i = 1; i < conds.size() && !odd; ++i) {
    if (conds[i].value != conds[0].value) odd = i;
  }
  if (!odd) {
    v = make("2.1.9", PropStatus::kHolds, "conditions (i)-(iv) agree: " + values);
  } else {
    static constexpr std::array<std::string_view, 4> kNames = {"i", "ii", "iii", "iv"};
    const std::size_t failing = conds[0].value ? *odd : 0;
    v = make("2.1.9", PropStatus::kFails,
             "conditions disagree (" + values + "): (" + std::string(kNames[0]) + ") vs (" +
                 std::string(kNames[*odd]) + ")");
    v.witness_elements = conds[failing].witness;
    v.witness_clause = conds[failing].clause;
  }
  for (const auto& c : conds) v.conditions.push_back(c.value);
  v.witness_subsets = {m};
  return v;
}

PropVerdict check_sufficient_conditions(const FiniteStructure& s, const Subset& m) {
  require_same_size(s, m);
  PropVerdict v;
  auto vacuous = [&](const std::string& clause, const Tuple& w, const std::string& why) {
    v = make("2.1.10", PropStatus::kVacuous, why);
    v.witness_elements = w;
    v.witness_clause = clause;
  };
  const bool mul_present = s.mul.has_value();
  if (m.empty()) {
    vacuous("non-empty", {}, "M is empty");
  } else if (auto w = mul_present ? product_cancel_violation(s, m) : std::nullopt) {
    vacuous("hypothesis-i", *w, "hypothesis (i) fails at " + tuple_text(s, *w));
  } else if (auto w2 = modus_ponens_violation(s, m)) {
    vacuous("hypothesis-ii", *w2, "hypothesis (ii) fails at " + tuple_text(s, *w2));
  } else if (auto w3 = contraction_violation(s, m)) {
    vacuous("hypothesis-iii", *w3, "hypothesis (iii) fails at " + tuple_text(s, *w3));
  } else {
    const auto impl = is_implicative_filter(s, m);
    const std::string note = mul_present ? "" : " (hypothesis (i) not applicable: no mul table)";
    if (impl.holds) {
      v = make("2.1.10", PropStatus::kHolds, "hypotheses hold and M is implicative" + note);
    } else {
      v = make("2.1.10", PropStatus::kFails,
               "hypotheses hold but M is not implicative: " + impl.detail + note);
      attach_filter_witness(v, impl);
    }
  }
  v.witness_subsets = {m};
  return v;
}

PropVerdict check_law(const FiniteStructure& s, std::string_view id,
                      std::optional<ProductReading> reading, const EnumerationOptions& options) {
  if (id == "2.1.2") return check_implicative_is_filter(s, options);
  if (id == "2.1.7") return check_up_interval_equivalence(s);
  if (!is_prop_id(id)) throw std::invalid_argument("unknown proposition id '" + std::string(id) + "'");
  require_enumerable(s.n, options.limit);

  const detail::MaskKernel kernel(s);
  const std::string pid(id);

  // Scans a list of subsets for the first per-subset verdict that fails.
  auto first_failure = [&](const std::vector<Subset>& domain, auto&& check,
                           const std::string& what) {
    for (const auto& m : domain) {
      auto v = check(m);
      if (v.status == PropStatus::kFails || v.status == PropStatus::kNotApplicable) {
        v.detail = "on " + subset_text(s, m) + ": " + v.detail;
        return v;
      }
    }
    return make(pid, PropStatus::kHolds,
                what + " (" + std::to_string(domain.size()) + " subsets checked)");
  };

  if (id == "2.1.3") {
    const auto filters = enumerate_filters(s, FilterKind::kFilter, options);
    return first_failure(
        filters,
        [&](const Subset& m) {
          auto v = check_double_premise_clause(s, m);
          if (v.status == PropStatus::kFails) {
            v.status = PropStatus::kVacuous;  // clause is a hypothesis here
            v.holds = true;
            return v;
          }
          if (!v.conditions[2]) {
            auto out = make(pid, PropStatus::kFails,
                            "filter satisfies the clause but is not implicative");
            out.witness_subsets = {m};
            attach_filter_witness(out, is_implicative_filter(s, m));
            out.conditions = v.conditions;
            return out;
          }
          return v;
        },
        "every filter satisfying the double-premise clause is implicative");
  }
  if (id == "2.1.4") {
    return first_failure(enumerate_filters(s, FilterKind::kImplicative, options),
                         [&](const Subset& m) { return check_contraction_clause(s, m); },
                         "every implicative filter satisfies the contraction clause");
  }
  if (id == "2.1.5") {
    const auto impl = enumerate_filters(s, FilterKind::kImplicative, options);
    const auto filters = enumerate_filters(s, FilterKind::kFilter, options);
    std::size_t pairs = 0;
    for (const auto& m1 : impl) {
      for (const auto& m2 : filters) {
        if (!m1.is_subset_of(m2)) continue;
        ++pairs;
        auto v = check_extension(s, m1, m2);
        if (v.status == PropStatus::kFails) {
          v.detail = "on " + subset_text(s, m1) + " ⊆ " + subset_text(s, m2) + ": " + v.detail;
          return v;
        }
      }
    }
    return make(pid, PropStatus::kHolds,
                "every filter containing an implicative filter is implicative (" +
                    std::to_string(pairs) + " pairs checked)");
  }
  if (id == "2.1.8") {
    if (!reading) throw std::invalid_argument("2.1.8 requires an explicit reading (A or B)");
    if (*reading == ProductReading::kProductClosure && !s.mul) {
      return make(pid, PropStatus::kNotApplicable, "reading B needs a mul table");
    }
    return first_failure(enumerate_filters(s, FilterKind::kImplicative, options),
                         [&](const Subset& m) { return check_product_condition(s, m, *reading); },
                         std::string("every implicative filter satisfies reading ") +
                             (*reading == ProductReading::kUpwardClosure ? "A" : "B"));
  }
  if (id == "2.1.9") {
    const auto bad = detail::first_mask(
        s.n, std::nullopt,
        [&](detail::Mask m) {
          const bool c1 = kernel.is_implicative(m);
          const bool filter = kernel.is_filter(m);
          const bool c2 = filter && kernel.contraction_closed(m);
          const bool c3 = filter && kernel.distributive_closed(m);
          const bool c4 = kernel.contains_one(m) && kernel.auxiliary_member_closed(m);
          return !(c1 == c2 && c2 == c3 && c3 == c4);
        },
        options.threads);
    if (!bad) {
      return make(pid, PropStatus::kHolds,
                  "conditions (i)-(iv) agree on all " + std::to_string(1ULL << s.n) + " subsets");
    }
    auto v = check_equivalent_conditions(s, Subset::from_mask(s.n, *bad));
    v.detail = "on " + subset_text(s, v.witness_subsets[0]) + ": " + v.detail;
    return v;
  }
  // 2.1.10
  const bool mul_present = kernel.has_mul();
  const auto bad = detail::first_mask(
      s.n, std::nullopt,
      [&](detail::Mask m) {
        if (m == 0) return false;
        if (mul_present && !kernel.product_cancel_closed(m)) return false;
        if (!kernel.modus_ponens_closed(m) || !kernel.contraction_closed(m)) return false;
        return !kernel.is_implicative(m);
      },
      options.threads);
  if (!bad) {
    return make(pid, PropStatus::kHolds,
                "every non-empty subset meeting the hypotheses is implicative (" +
                    std::to_string(1ULL << s.n) + " subsets scanned)");
  }
  auto v = check_sufficient_conditions(s, Subset::from_mask(s.n, *bad));
  v.detail = "on " + subset_text(s, v.witness_subsets[0]) + ": " + v.detail;
  return v;
}

PropVerdict check_prop(const FiniteStructure& s, std::string_view id,
                       const std::vector<Subset>& subsets, std::optional<ProductReading> reading,
                       const EnumerationOptions& options) {
  if (!is_prop_id(id)) throw std::invalid_argument("unknown proposition id '" + std::string(id) + "'");
  if (id == "2.1.2") return check_implicative_is_filter(s, options);
  if (id == "2.1.7") return check_up_interval_equivalence(s);
  if (subsets.empty()) return check_law(s, id, reading, options);
  if (id == "2.1.5") {
    if (subsets.size() != 2) throw std::invalid_argument("2.1.5 needs two subsets (M1 and M2)");
    return check_extension(s, subsets[0], subsets[1]);
  }
  if (subsets.size() != 1) {
    throw std::invalid_argument(std::string(id) + " takes exactly one subset");
  }
  const Subset& m = subsets[0];
  if (id == "2.1.3") return check_double_premise_clause(s, m);
  if (id == "2.1.4") return check_contraction_clause(s, m);
  if (id == "2.1.8") {
    if (!reading) throw std::invalid_argument("2.1.8 requires an explicit reading (A or B)");
    return check_product_condition(s, m, *reading);
  }
  if (id == "2.1.9") return check_equivalent_conditions(s, m);
  return check_sufficient_conditions(s, m);
}

}  // namespace qrw
