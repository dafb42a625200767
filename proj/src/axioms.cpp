#include "qrw/axioms.hpp"

#include <sstream>

namespace qrw {

namespace {

constexpr std::array<std::string_view, kAxiomCount> kCodes = {
    "QO-REFL", "QO-TRANS", "MON-ASSOC", "MON-COMM", "MON-UNIT", "TOP", "RES",
    "COMPAT",  "LINK",     "W1",        "W2",       "W3",       "W4",
};

constexpr std::array<std::size_t, kAxiomCount> kArity = {1, 3, 3, 2, 1, 1, 3, 3, 2, 1, 3, 2, 2};

constexpr std::array<std::string_view, kAxiomCount> kStatements = {
    "x ≼ x",
    "x ≼ y and y ≼ z imply x ≼ z",
    "(x⊙y)⊙z = x⊙(y⊙z)",
    "x⊙y = y⊙x",
    "1⊙x = x = x⊙1",
    "x ≼ 1",
    "x⊙y ≼ z iff x ≼ y→z",
    "x ≼ y implies x⊙z ≼ y⊙z",
    "x→y = 1 implies x ≼ y",
    "1→x = x",
    "(x→y)→((y→z)→(x→z)) = 1",
    "(x→y)→y = (y→x)→x",
    "(¬x→¬y)→(y→x) = 1",
};

bool needs_mul(AxiomId id) {
  switch (id) {
    case AxiomId::kMonAssoc:
    case AxiomId::kMonComm:
    case AxiomId::kMonUnit:
    case AxiomId::kRes:
    case AxiomId::kCompat:
      return true;
    default:
      return false;
  }
}

bool in_residuated_group(AxiomId id) { return id < AxiomId::kW1; }

// Pointwise evaluation of every axiom; shared by validate and
// axiom_holds_at so that witnesses replay exactly.
class Evaluator {
 public:
  Evaluator(const FiniteStructure& s, bool strict_link)
      : s_(s), strict_(strict_link), neg_(effective_negation(s)) {}

  bool applicable(AxiomId id) const {
    if (needs_mul(id)) return s_.mul.has_value();
    if (id == AxiomId::kW4) return neg_.has_value();
    return true;
  }

  bool holds(AxiomId id, std::span<const Element> w) const {
    const auto& o = s_.order;
    const Element one = s_.one;
    auto imp = [&](Element a, Element b) { return s_.imp(a, b); };
    auto mul = [&](Element a, Element b) { return (*s_.mul)(a, b); };
    switch (id) {
      case AxiomId::kQoRefl:
        return o.leq(w[0], w[0]);
      case AxiomId::kQoTrans:
        return !(o.leq(w[0], w[1]) && o.leq(w[1], w[2])) || o.leq(w[0], w[2]);
      case AxiomId::kMonAssoc:
        return mul(mul(w[0], w[1]), w[2]) == mul(w[0], mul(w[1], w[2]));
      case AxiomId::kMonComm:
        return mul(w[0], w[1]) == mul(w[1], w[0]);
      case AxiomId::kMonUnit:
        return mul(one, w[0]) == w[0] && mul(w[0], one) == w[0];
      case AxiomId::kTop:
        return o.leq(w[0], one);
      case AxiomId::kRes:
        return o.leq(mul(w[0], w[1]), w[2]) == o.leq(w[0], imp(w[1], w[2]));
      case AxiomId::kCompat:
        return !o.leq(w[0], w[1]) || o.leq(mul(w[0], w[2]), mul(w[1], w[2]));
      case AxiomId::kLink: {
        const bool is_one = imp(w[0], w[1]) == one;
        const bool related = o.leq(w[0], w[1]);
        return strict_ ? is_one == related : (!is_one || related);
      }
      case AxiomId::kW1:
        return imp(one, w[0]) == w[0];
      case AxiomId::kW2:
        return imp(imp(w[0], w[1]), imp(imp(w[1], w[2]), imp(w[0], w[2]))) == one;
      case AxiomId::kW3:
        return imp(imp(w[0], w[1]), w[1]) == imp(imp(w[1], w[0]), w[0]);
      case AxiomId::kW4: {
        const auto& ng = *neg_;
        return imp(imp(ng[w[0]], ng[w[1]]), imp(w[1], w[0])) == one;
      }
    }
    return true;
  }

 private:
  const FiniteStructure& s_;
  bool strict_;
  std::optional<std::vector<Element>> neg_;
};

std::string tuple_text(const FiniteStructure& s, std::span<const Element> w) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ",";
    out << s.label(w[i]);
  }
  out << ")";
  return out.str();
}

// First failing tuple in lexicographic order, or empty.
std::optional<std::vector<Element>> first_failure(const Evaluator& ev, AxiomId id, std::size_t n) {
  const std::size_t arity = axiom_arity(id);
  std::vector<Element> w(arity, 0);
  while (true) {
    if (!ev.holds(id, w)) return w;
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++w[pos] < n) break;
      w[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
  }
}

}  // namespace

std::string_view axiom_code(AxiomId id) { return kCodes[static_cast<std::size_t>(id)]; }

std::optional<AxiomId> axiom_from_code(std::string_view code) {
  for (AxiomId id : kAllAxioms) {
    if (axiom_code(id) == code) return id;
  }
  return std::nullopt;
}

std::size_t axiom_arity(AxiomId id) { return kArity[static_cast<std::size_t>(id)]; }

AxiomSet AxiomSet::parse(std::string_view text) {
  if (text == "all") return all();
  AxiomSet out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    const auto id = axiom_from_code(token);
    if (!id) throw std::invalid_argument("unknown axiom code '" + std::string(token) + "'");
    out = out.with(*id);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<AxiomId> AxiomSet::members() const {
  std::vector<AxiomId> out;
  for (AxiomId id : kAllAxioms) {
    if (contains(id)) out.push_back(id);
  }
  return out;
}

std::string AxiomSet::to_string() const {
  if (*this == all()) return "all";
  std::string out;
  for (AxiomId id : members()) {
    if (!out.empty()) out += ",";
    out += axiom_code(id);
  }
  return out;
}

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::kQuasiOrderedRlWajsberg:
      return "quasi-ordered-RL-Wajsberg";
    case Classification::kResiduatedSystemOnly:
      return "residuated-system-only";
    case Classification::kWajsbergOnly:
      return "wajsberg-only";
    case Classification::kInvalid:
      return "invalid";
  }
  return "invalid";
}

bool ValidationReport::satisfies(AxiomSet axioms) const {
  for (const auto& d : diagnostics) {
    if (axioms.contains(d.axiom) && d.applicable && !d.holds) return false;
  }
  return true;
}

QuasiOrder derived_order(const FiniteStructure& s) {
  QuasiOrder q(s.n);
  for (std::size_t x = 0; x < s.n; ++x) {
    for (std::size_t y = 0; y < s.n; ++y) q.set(x, y, s.imp(x, y) == s.one);
  }
  return q;
}

std::optional<std::vector<Element>> effective_negation(const FiniteStructure& s) {
  if (s.neg) return s.neg;
  std::optional<Element> least;
  for (std::size_t z = 0; z < s.n; ++z) {
    bool below_all = true;
    for (std::size_t x = 0; x < s.n && below_all; ++x) below_all = s.order.leq(z, x);
    if (!below_all) continue;
    if (least) return std::nullopt;  // not unique
    least = static_cast<Element>(z);
  }
  if (!least) return std::nullopt;
  std::vector<Element> neg(s.n);
  for (std::size_t x = 0; x < s.n; ++x) neg[x] = s.imp(x, *least);
  return neg;
}

ValidationReport validate(const FiniteStructure& s, bool strict_link) {
  s.check_well_formed();
  const Evaluator ev(s, strict_link);

  ValidationReport report;
  report.strict_link = strict_link;
  bool residuated_ok = true;
  bool wajsberg_ok = true;
  for (AxiomId id : kAllAxioms) {
    Diagnostic d;
    d.axiom = id;
    const std::string code(axiom_code(id));
    std::string statement(kStatements[static_cast<std::size_t>(id)]);
    if (id == AxiomId::kLink && strict_link) statement += ", and conversely";
    if (!ev.applicable(id)) {
      d.applicable = false;
      d.detail = code + " not applicable: " +
                 (id == AxiomId::kW4 ? "no neg table and no unique least element"
                                     : "no mul table");
    } else if (auto w = first_failure(ev, id, s.n)) {
      d.holds = false;
      d.witness = std::move(*w);
      d.detail = code + " fails at " + tuple_text(s, d.witness) + ": " + statement;
      (in_residuated_group(id) ? residuated_ok : wajsberg_ok) = false;
    } else {
      d.detail = code + " holds: " + statement;
    }
    report.diagnostics.push_back(std::move(d));
  }

  if (residuated_ok && wajsberg_ok) {
    report.classification = Classification::kQuasiOrderedRlWajsberg;
  } else if (residuated_ok) {
    report.classification = Classification::kResiduatedSystemOnly;
  } else if (wajsberg_ok) {
    report.classification = Classification::kWajsbergOnly;
  } else {
    report.classification = Classification::kInvalid;
  }

  report.antisymmetry.detail = "order is antisymmetric";
  for (std::size_t x = 0; x < s.n && report.antisymmetry.holds; ++x) {
    for (std::size_t y = x + 1; y < s.n; ++y) {
      if (s.order.leq(x, y) && s.order.leq(y, x)) {
        report.antisymmetry.holds = false;
        report.antisymmetry.witness = {static_cast<Element>(x), static_cast<Element>(y)};
        report.antisymmetry.detail = "order is not antisymmetric: " + s.label(x) + " and " +
                                     s.label(y) + " are mutually related";
        break;
      }
    }
  }
  return report;
}

bool axiom_holds_at(const FiniteStructure& s, AxiomId id, std::span<const Element> at,
                    bool strict_link) {
  if (at.size() != axiom_arity(id)) {
    throw std::invalid_argument("witness for " + std::string(axiom_code(id)) + " needs " +
                                std::to_string(axiom_arity(id)) + " elements");
  }
  for (Element e : at) {
    if (e >= s.n) throw std::out_of_range("witness element out of range");
  }
  const Evaluator ev(s, strict_link);
  if (!ev.applicable(id)) return true;
  return ev.holds(id, at);
}

Element join(const FiniteStructure& s, Element x, Element y) { return s.imp(s.imp(x, y), y); }

}  // namespace qrw
